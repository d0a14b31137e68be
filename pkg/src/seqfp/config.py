"""Run configuration: one JSON file, overridable field by field from the CLI."""
from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, fields
from pathlib import Path

import numpy as np

from .errors import SeqfpError

CACHE_ENV = "SEQFP_CACHE_DIR"

# per-stage salts mixed into the master seed
STAGE_SALT = {
    "sample": 1,
    "random": 2,
    "split-binary": 3,
    "split-keywords": 4,
    "train": 5,
    "baseline": 6,
    "ransac": 7,
}


class ConfigError(SeqfpError, ValueError):
    """Invalid configuration file or value."""


def fixture_dir() -> Path:
    return Path(__file__).resolve().parent / "data" / "fixture"


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "seqfp"


@dataclass
class RunConfig:
    # corpus sources; all None means the bundled fixture
    entries: str | None = None
    stripped: str | None = None
    names: str | None = None
    bfile_dir: str | None = None
    fetch_ids: list[str] | None = None
    cache_dir: str | None = None
    rate_limit: float = 1.0
    min_terms: int = 990
    sample_size: int | None = None
    # synthetic negatives; count None means one per corpus sequence
    random_count: int | None = None
    random_length: int = 2000
    random_lo: int = 0
    random_hi: int = 10**6
    binary_split: tuple[float, float, float] = (0.8, 0.0, 0.2)
    keyword_split: tuple[float, float, float] = (0.7875, 0.0875, 0.125)
    trees_binary: int = 665
    trees_random_forest: int = 744
    trees_extra_trees: int = 1059
    max_depth: int | None = None
    min_samples_leaf: int = 1
    max_features: int | None = 4
    scale: bool = True
    pca_k_binary: int | None = 14
    pca_k_keywords: int | None = None
    ransac_threshold: float = 0.05
    ransac_iterations: int = 2000
    workers: int = 1
    seed: int = 0
    out: str = "seqfp-run"

    def __post_init__(self):
        self.binary_split = tuple(float(v) for v in self.binary_split)
        self.keyword_split = tuple(float(v) for v in self.keyword_split)
        self.validate()

    def validate(self) -> None:
        for name in ("binary_split", "keyword_split"):
            fr = getattr(self, name)
            if len(fr) != 3 or any(v < 0 for v in fr) or abs(sum(fr) - 1.0) > 1e-9:
                raise ConfigError(f"{name} must be three non-negative fractions summing to 1")
        if self.min_terms < 1:
            raise ConfigError("min_terms must be >= 1")
        if self.random_length < 1 or not self.random_lo < self.random_hi:
            raise ConfigError("random sequences need length >= 1 and lo < hi")
        for name in ("trees_binary", "trees_random_forest", "trees_extra_trees", "workers",
                     "ransac_iterations", "min_samples_leaf"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be >= 1")
        if not self.ransac_threshold > 0:
            raise ConfigError("ransac_threshold must be positive")
        if self.rate_limit <= 0:
            raise ConfigError("rate_limit must be positive")
        for name in ("pca_k_binary", "pca_k_keywords"):
            k = getattr(self, name)
            if k is not None and not 1 <= k <= 14:
                raise ConfigError(f"{name} must be in 1..14 or null")

    # ------------------------------------------------------------ derived

    @property
    def out_dir(self) -> Path:
        return Path(self.out)

    def uses_fixture(self) -> bool:
        return not any((self.entries, self.stripped, self.names, self.bfile_dir, self.fetch_ids))

    def sources(self) -> dict:
        if self.uses_fixture():
            d = fixture_dir()
            return {"entries": d / "entries.jsonl.gz", "stripped": d / "stripped.gz",
                    "names": d / "names.gz", "bfile_dir": d / "bfiles"}
        return {k: Path(getattr(self, k)) if getattr(self, k) else None
                for k in ("entries", "stripped", "names", "bfile_dir")}

    def stage_seed(self, stage: str) -> int:
        ss = np.random.SeedSequence([int(self.seed), STAGE_SALT[stage]])
        return int(ss.generate_state(1, dtype=np.uint32)[0])

    def trees_for(self, task: str, mode: str) -> int:
        if task == "oeis-vs-random":
            return self.trees_binary
        return self.trees_random_forest if mode == "random_forest" else self.trees_extra_trees

    # ------------------------------------------------------------ I/O

    def to_dict(self) -> dict:
        d = asdict(self)
        d["binary_split"] = list(self.binary_split)
        d["keyword_split"] = list(self.keyword_split)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(d) - known)
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
        try:
            return cls(**d)
        except TypeError as exc:
            raise ConfigError(str(exc)) from exc

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True) + "\n"

    def save(self, path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")

    @classmethod
    def load(cls, path) -> "RunConfig":
        try:
            d = json.loads(Path(path).read_text(encoding="utf-8"))
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
        if not isinstance(d, dict):
            raise ConfigError("config must be a JSON object")
        return cls.from_dict(d)

    def updated(self, **overrides) -> "RunConfig":
        d = self.to_dict()
        d.update({k: v for k, v in overrides.items() if v is not None})
        return RunConfig.from_dict(d)
