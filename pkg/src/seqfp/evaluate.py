"""Multilabel metrics, reports, and plot-data export."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import ShapeMismatchError
from .fingerprint import DISTANCE_NAMES, fmt_real


def _pair(Y_true, Y_pred) -> tuple[np.ndarray, np.ndarray]:
    t = np.asarray(Y_true).astype(bool)
    p = np.asarray(Y_pred).astype(bool)
    if t.ndim == 1:
        t = t[:, None]
    if p.ndim == 1:
        p = p[:, None]
    if t.shape != p.shape:
        raise ShapeMismatchError(f"shape mismatch: {t.shape} vs {p.shape}")
    return t, p


def subset_accuracy(Y_true, Y_pred) -> float:
    t, p = _pair(Y_true, Y_pred)
    if t.shape[0] == 0:
        return 0.0
    return float(np.mean(np.all(t == p, axis=1)))


def _ratio(num: int, den: int) -> float:
    return num / den if den else 0.0


@dataclass(frozen=True)
class LabelMetrics:
    label: str
    tp: int
    fp: int
    fn: int
    tn: int

    @property
    def precision(self) -> float:
        return _ratio(self.tp, self.tp + self.fp)

    @property
    def recall(self) -> float:
        return _ratio(self.tp, self.tp + self.fn)

    @property
    def f1(self) -> float:
        p, r = self.precision, self.recall
        return 2 * p * r / (p + r) if p + r > 0 else 0.0

    @property
    def support(self) -> int:
        return self.tp + self.fn

    def as_dict(self) -> dict:
        return {"label": self.label, "tp": self.tp, "fp": self.fp, "fn": self.fn, "tn": self.tn,
                "precision": self.precision, "recall": self.recall, "f1": self.f1,
                "support": self.support}


def per_label_metrics(Y_true, Y_pred, label_names=None) -> list[LabelMetrics]:
    t, p = _pair(Y_true, Y_pred)
    names = label_names or [str(j) for j in range(t.shape[1])]
    out = []
    for j, name in enumerate(names):
        tj, pj = t[:, j], p[:, j]
        out.append(LabelMetrics(
            name,
            tp=int(np.sum(tj & pj)),
            fp=int(np.sum(~tj & pj)),
            fn=int(np.sum(tj & ~pj)),
            tn=int(np.sum(~tj & ~pj)),
        ))
    return out


def weighted_average(metrics: list[LabelMetrics]) -> tuple[float, float, float]:
    """Support-weighted precision, recall and F1."""
    total = sum(m.support for m in metrics)
    if total == 0:
        raise ValueError("total support is zero")
    p = sum(m.support * m.precision for m in metrics) / total
    r = sum(m.support * m.recall for m in metrics) / total
    f = sum(m.support * m.f1 for m in metrics) / total
    return p, r, f


@dataclass
class Report:
    model: str
    dataset: str
    subset_accuracy: float
    labels: list[LabelMetrics] = field(default_factory=list)
    weighted_precision: float = 0.0
    weighted_recall: float = 0.0
    weighted_f1: float = 0.0
    n_rows: int = 0

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "dataset": self.dataset,
            "n_rows": self.n_rows,
            "subset_accuracy": self.subset_accuracy,
            "weighted_precision": self.weighted_precision,
            "weighted_recall": self.weighted_recall,
            "weighted_f1": self.weighted_f1,
            "labels": [m.as_dict() for m in self.labels],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        labels = [LabelMetrics(m["label"], m["tp"], m["fp"], m["fn"], m["tn"]) for m in d["labels"]]
        return cls(d["model"], d["dataset"], d["subset_accuracy"], labels,
                   d["weighted_precision"], d["weighted_recall"], d["weighted_f1"], d["n_rows"])

    def table(self) -> str:
        lines = [
            f"model: {self.model}",
            f"dataset: {self.dataset} ({self.n_rows} rows)",
            f"subset accuracy: {self.subset_accuracy:.4f}",
            f"weighted precision/recall/F1: {self.weighted_precision:.4f} "
            f"{self.weighted_recall:.4f} {self.weighted_f1:.4f}",
            "",
            f"{'label':<12}{'P':>8}{'R':>8}{'F1':>8}{'support':>9}",
        ]
        for m in self.labels:
            lines.append(f"{m.label:<12}{m.precision:>8.4f}{m.recall:>8.4f}{m.f1:>8.4f}{m.support:>9d}")
        return "\n".join(lines) + "\n"


def make_report(Y_true, Y_pred, model: str, dataset: str, label_names=None) -> Report:
    metrics = per_label_metrics(Y_true, Y_pred, label_names)
    try:
        wp, wr, wf = weighted_average(metrics)
    except ValueError:
        wp = wr = wf = 0.0
    return Report(model, dataset, subset_accuracy(Y_true, Y_pred), metrics, wp, wr, wf,
                  int(np.asarray(Y_true).shape[0]))


def write_report(report: Report, stem) -> tuple[Path, Path]:
    """``<stem>.txt`` (table) and ``<stem>.json`` (machine-readable)."""
    stem = Path(stem)
    stem.parent.mkdir(parents=True, exist_ok=True)
    txt = stem.with_suffix(".txt")
    js = stem.with_suffix(".json")
    txt.write_text(report.table(), encoding="utf-8")
    js.write_text(json.dumps(report.to_dict(), indent=1, sort_keys=True) + "\n", encoding="utf-8")
    return txt, js


def read_report(path) -> Report:
    return Report.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


# ---------------------------------------------------------------- plot data

def _write_rows(path: Path, header, rows, preamble=()) -> Path:
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        for line in preamble:
            fh.write(f"# {line}\n")
        fh.write("\t".join(header) + "\n")
        for row in rows:
            fh.write("\t".join(v if isinstance(v, str) else fmt_real(v) if isinstance(v, float) else str(v)
                               for v in row) + "\n")
    return path


def export_distances(target, ids, dist_rows) -> list[Path]:
    """fig1_{kl,ks,wd,tv}.tsv: one row per sequence (index, id, distance)."""
    target = Path(target)
    out = []
    for k, name in enumerate(DISTANCE_NAMES):
        rows = [(i, sid, float(d[k])) for i, (sid, d) in enumerate(zip(ids, dist_rows))]
        out.append(_write_rows(target / f"fig1_{name}.tsv", ("index", "id", name), rows))
    return out


def export_correlations(target, ids, r_values) -> Path:
    rows = [(i, sid, float(r)) for i, (sid, r) in enumerate(zip(ids, r_values))]
    return _write_rows(Path(target) / "fig2.tsv", ("index", "id", "r"), rows)


def export_ransac(target, ids, r_values, s_values, fit) -> Path:
    """fig3.tsv with the fitted line in a comment header."""
    pre = [f"ransac_slope\t{fmt_real(fit.slope)}",
           f"ransac_intercept\t{fmt_real(fit.intercept)}",
           f"inlier_r\t{fmt_real(fit.inlier_fit.r)}",
           f"inliers\t{fit.n_inliers}\t{len(fit.inlier_mask)}",
           f"threshold\t{fmt_real(fit.params['threshold'])}",
           f"iterations\t{fit.params['iterations']}",
           f"seed\t{fit.params['seed']}"]
    rows = [(sid, float(r), float(s), int(m)) for sid, r, s, m in zip(ids, r_values, s_values, fit.inlier_mask)]
    return _write_rows(Path(target) / "fig3.tsv", ("id", "r", "s", "inlier"), rows, pre)


def export_performance(target, reports: list[Report]) -> list[Path]:
    """fig5.tsv (model, metric, value) and fig6_<model>.tsv (label, P, R, F1)."""
    target = Path(target)
    rows = []
    for rep in reports:
        rows += [(rep.model, "subset_accuracy", rep.subset_accuracy),
                 (rep.model, "precision", rep.weighted_precision),
                 (rep.model, "recall", rep.weighted_recall),
                 (rep.model, "f1", rep.weighted_f1)]
    out = [_write_rows(target / "fig5.tsv", ("model", "metric", "value"), rows)]
    for rep in reports:
        lab_rows = [(m.label, m.precision, m.recall, m.f1) for m in rep.labels]
        out.append(_write_rows(target / f"fig6_{rep.model}.tsv", ("label", "precision", "recall", "f1"), lab_rows))
    return out


def export_plot_data(target, *, ids=None, distances=None, r_values=None, s_values=None,
                     ransac=None, reports=None) -> list[Path]:
    """Write whichever figure families have inputs."""
    target = Path(target)
    try:
        target.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(f"cannot create plot-data directory {target}: {exc}") from exc
    out: list[Path] = []
    if distances is not None:
        out += export_distances(target, ids, distances)
    if r_values is not None:
        out.append(export_correlations(target, ids, r_values))
    if ransac is not None:
        out.append(export_ransac(target, ids, r_values, s_values, ransac))
    if reports:
        out += export_performance(target, reports)
    return out
