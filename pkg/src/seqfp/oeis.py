"""Reading OEIS data: stripped/names files, b-files, JSON entry records.

Also label extraction, the term-count corpus filter, the line-delimited
corpus manifest, and a cached, rate-limited fetcher for single entries.
"""
from __future__ import annotations

import gzip
import json
import logging
import os
import re
import tempfile
import threading
import time
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Iterator

import numpy as np

from .errors import MalformedRecordError, NetworkError, NotFoundError, ParseError

log = logging.getLogger(__name__)

ID_RE = re.compile(r"A\d{6}")
_INT_RE = re.compile(r"[+-]?\d+")

LABELS = ("nice", "core", "easy", "mult", "prime", "binomial", "palindrome", "other")
KEYWORD_LABELS = ("nice", "core", "easy", "mult")
TEXT_LABELS = ("prime", "binomial", "palindrome")

SOURCES = ("stripped", "bfile", "synthetic", "entry")


def canonical_id(text: str) -> str:
    """Validate an OEIS A-number and return it unchanged."""
    if not isinstance(text, str) or not ID_RE.fullmatch(text):
        raise ParseError(f"malformed sequence id {text!r}")
    return text


@dataclass
class Sequence:
    id: str
    terms: list[int]
    source: str = "stripped"

    def __post_init__(self):
        if not self.terms:
            raise ValueError(f"{self.id}: sequence has no terms")
        if self.source not in SOURCES:
            raise ValueError(f"unknown source {self.source!r}")

    def __len__(self) -> int:
        return len(self.terms)


@dataclass
class OeisEntry:
    id: str
    name: str
    keywords: frozenset[str] = frozenset()
    comments: list[str] = field(default_factory=list)
    terms: list[int] = field(default_factory=list)

    def __post_init__(self):
        canonical_id(self.id)
        if not self.name:
            raise ValueError(f"{self.id}: empty name")
        self.keywords = frozenset(k.strip().lower() for k in self.keywords if k.strip())
        for k in self.keywords:
            if any(ch.isspace() for ch in k):
                raise ValueError(f"{self.id}: keyword {k!r} contains whitespace")


@dataclass(frozen=True)
class LabelSet:
    nice: bool = False
    core: bool = False
    easy: bool = False
    mult: bool = False
    prime: bool = False
    binomial: bool = False
    palindrome: bool = False
    other: bool = True

    def __post_init__(self):
        rest = self.as_tuple()[:-1]
        if self.other == any(rest):
            raise ValueError("'other' must be set exactly when no other label is")

    @classmethod
    def from_flags(cls, **flags: bool) -> "LabelSet":
        vals = {name: bool(flags.get(name, False)) for name in LABELS[:-1]}
        return cls(**vals, other=not any(vals.values()))

    def as_tuple(self) -> tuple[bool, ...]:
        return tuple(getattr(self, name) for name in LABELS)

    def names(self) -> list[str]:
        return [name for name in LABELS if getattr(self, name)]


def _open_text(path: Path):
    path = Path(path)
    if path.suffix == ".gz":
        return gzip.open(path, "rt", encoding="utf-8")
    return path.open("r", encoding="utf-8")


# ---------------------------------------------------------------- stripped / names

def parse_stripped_line(line: str, line_no: int | None = None) -> tuple[str, list[int]] | None:
    """``"A000045 ,0,1,1,2,"`` -> ``("A000045", [0, 1, 1, 2])``; None for comments/blanks."""
    text = line.strip()
    if not text or text.startswith("#"):
        return None
    head, _, rest = text.partition(" ")
    if not ID_RE.fullmatch(head):
        raise ParseError(f"malformed sequence id {head!r}", line_no, line)
    terms = []
    pos = 0
    for tok in rest.split(","):
        tok = tok.strip()
        if not tok:
            continue
        pos += 1
        if not _INT_RE.fullmatch(tok):
            raise ParseError(f"non-integer token {tok!r} at position {pos}", line_no, line)
        terms.append(int(tok))
    return head, terms


def iter_stripped(path) -> Iterator[tuple[str, list[int]]]:
    with _open_text(path) as fh:
        for no, line in enumerate(fh, 1):
            rec = parse_stripped_line(line, no)
            if rec is not None and rec[1]:
                yield rec


def parse_names_line(line: str, line_no: int | None = None) -> tuple[str, str] | None:
    text = line.strip()
    if not text or text.startswith("#"):
        return None
    head, _, name = text.partition(" ")
    if not ID_RE.fullmatch(head):
        raise ParseError(f"malformed sequence id {head!r}", line_no, line)
    return head, name.strip()


def read_names(path) -> dict[str, str]:
    out = {}
    with _open_text(path) as fh:
        for no, line in enumerate(fh, 1):
            rec = parse_names_line(line, no)
            if rec is not None:
                out[rec[0]] = rec[1]
    return out


# ---------------------------------------------------------------- b-files

def parse_bfile(text: str) -> list[int]:
    """Terms of a b-file body in index order. Indices must be consecutive."""
    terms: list[int] = []
    prev = None
    for no, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) < 2:
            raise ParseError("expected 'index term'", no, line)
        idx_tok, term_tok = parts[0], parts[1]
        if not _INT_RE.fullmatch(idx_tok):
            raise ParseError(f"non-integer index {idx_tok!r}", no, line)
        if not _INT_RE.fullmatch(term_tok):
            raise ParseError(f"non-integer term {term_tok!r}", no, line)
        idx = int(idx_tok)
        if prev is not None and idx != prev + 1:
            kind = "duplicate" if idx <= prev else "gap in"
            raise ParseError(f"{kind} indices: {prev} then {idx}", no, line)
        prev = idx
        terms.append(int(term_tok))
    return terms


def read_bfile(path) -> list[int]:
    with _open_text(path) as fh:
        return parse_bfile(fh.read())


def format_bfile(terms: Iterable[int], offset: int = 0) -> str:
    return "".join(f"{offset + i} {t}\n" for i, t in enumerate(terms))


def find_bfile(bfile_dir, seq_id: str) -> Path | None:
    base = Path(bfile_dir)
    for name in (f"b{seq_id[1:]}.txt", f"b{seq_id[1:]}.txt.gz"):
        p = base / name
        if p.exists():
            return p
    return None


# ---------------------------------------------------------------- entry records

def parse_entry_record(rec: dict) -> OeisEntry:
    """Build an entry from the OEIS JSON record shape (number/name/keyword/comment/data)."""
    try:
        number = rec["number"]
        seq_id = number if isinstance(number, str) else f"A{int(number):06d}"
        name = rec.get("name") or ""
        keywords = [k for k in str(rec.get("keyword", "")).split(",") if k]
        comments = list(rec.get("comment") or [])
        data = str(rec.get("data", ""))
        terms = [int(t) for t in data.split(",") if t.strip()]
        return OeisEntry(id=canonical_id(seq_id), name=name, keywords=frozenset(keywords),
                         comments=comments, terms=terms)
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedRecordError(f"malformed entry record: {exc}") from exc


def entry_record(entry: OeisEntry) -> dict:
    return {
        "number": int(entry.id[1:]),
        "id": entry.id,
        "name": entry.name,
        "keyword": ",".join(sorted(entry.keywords)),
        "comment": list(entry.comments),
        "data": ",".join(str(t) for t in entry.terms),
    }


def iter_entries(path) -> Iterator[OeisEntry]:
    with _open_text(path) as fh:
        for no, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc.msg}", no) from exc
            yield parse_entry_record(rec)


def write_entries(path, entries: Iterable[OeisEntry]) -> None:
    _atomic_write_lines(path, (json.dumps(entry_record(e), sort_keys=True) for e in entries))


# ---------------------------------------------------------------- labels and corpus

def extract_labels(entry: OeisEntry) -> LabelSet:
    """Keyword labels from the keyword set; text labels by substring over name and comments."""
    text = "\n".join([entry.name, *entry.comments]).lower()
    flags = {k: k in entry.keywords for k in KEYWORD_LABELS}
    flags.update({w: w in text for w in TEXT_LABELS})
    return LabelSet.from_flags(**flags)


def select_corpus(sequences: Iterable[Sequence], min_terms: int = 990) -> list[Sequence]:
    if min_terms < 1:
        raise ValueError("min_terms must be >= 1")
    return [s for s in sequences if len(s.terms) >= min_terms]


def sample_ids(ids: list[str], n: int | None, seed: int) -> list[str]:
    """Random subset of size n in the original order; all ids when n is None or large."""
    if n is None or n >= len(ids):
        return list(ids)
    rng = np.random.default_rng(seed)
    keep = np.sort(rng.choice(len(ids), size=n, replace=False))
    return [ids[i] for i in keep]


def build_corpus(
    *,
    stripped=None,
    names=None,
    entries=None,
    bfile_dir=None,
    min_terms: int = 990,
    sample_size: int | None = None,
    seed: int = 0,
    prefer: str = "bfile",
) -> tuple[list[Sequence], dict[str, OeisEntry]]:
    """Merge term sources, filter by length, then sample.

    Terms come from a b-file when one exists (``prefer="bfile"``), else the
    stripped line, else the entry record's data field.
    """
    meta: dict[str, OeisEntry] = {}
    if entries is not None:
        for e in iter_entries(entries):
            meta[e.id] = e
    name_map = read_names(names) if names is not None else {}
    for sid, name in name_map.items():
        if sid not in meta and name:
            meta[sid] = OeisEntry(id=sid, name=name)

    candidates: dict[str, Sequence] = {}
    if stripped is not None:
        for sid, terms in iter_stripped(stripped):
            candidates[sid] = Sequence(sid, terms, "stripped")
    for sid, e in meta.items():
        if sid not in candidates and e.terms:
            candidates[sid] = Sequence(sid, list(e.terms), "entry")
    if bfile_dir is not None:
        for sid in list(candidates):
            if prefer != "bfile" and candidates[sid].source == "stripped":
                continue
            p = find_bfile(bfile_dir, sid)
            if p is not None:
                terms = read_bfile(p)
                if terms:
                    candidates[sid] = Sequence(sid, terms, "bfile")

    ordered = [candidates[k] for k in sorted(candidates)]
    kept = select_corpus(ordered, min_terms)
    chosen = set(sample_ids([s.id for s in kept], sample_size, seed))
    corpus = [s for s in kept if s.id in chosen]
    return corpus, {s.id: meta[s.id] for s in corpus if s.id in meta}


# ---------------------------------------------------------------- manifest

def manifest_line(seq: Sequence) -> str:
    terms = ",".join(str(t) for t in seq.terms)
    return json.dumps({"id": seq.id, "source": seq.source, "terms": terms})


def parse_manifest_line(line: str, line_no: int | None = None) -> Sequence:
    try:
        rec = json.loads(line)
        terms = [int(t) for t in rec["terms"].split(",")]
        return Sequence(rec["id"], terms, rec["source"])
    except (json.JSONDecodeError, KeyError, AttributeError, ValueError) as exc:
        raise ParseError(f"bad manifest record: {exc}", line_no) from exc


def write_manifest(path, sequences: Iterable[Sequence]) -> None:
    _atomic_write_lines(path, (manifest_line(s) for s in sequences))


def iter_manifest(path) -> Iterator[Sequence]:
    with _open_text(path) as fh:
        for no, line in enumerate(fh, 1):
            if line.strip():
                yield parse_manifest_line(line, no)


def _atomic_write_lines(path, lines: Iterable[str]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            for line in lines:
                fh.write(line)
                fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# ---------------------------------------------------------------- fetching

class RateLimiter:
    """Spaces calls at least ``1/rate`` seconds apart across threads."""

    def __init__(self, rate: float, clock: Callable[[], float] = time.monotonic,
                 sleep: Callable[[float], None] = time.sleep):
        if rate <= 0:
            raise ValueError("rate must be positive")
        self.interval = 1.0 / rate
        self._clock = clock
        self._sleep = sleep
        self._next = None
        self._lock = threading.Lock()

    def wait(self) -> None:
        with self._lock:
            now = self._clock()
            if self._next is not None and now < self._next:
                self._sleep(self._next - now)
                now = self._next
            self._next = now + self.interval


def _urllib_get(url: str, timeout: float = 30.0) -> bytes:
    req = urllib.request.Request(url, headers={"User-Agent": "seqfp/0.1"})
    try:
        with urllib.request.urlopen(req, timeout=timeout) as resp:
            return resp.read()
    except urllib.error.HTTPError as exc:
        if exc.code == 404:
            raise NotFoundError(url) from exc
        raise NetworkError(f"HTTP {exc.code} for {url}") from exc
    except (urllib.error.URLError, OSError) as exc:
        raise NetworkError(f"{url}: {exc}") from exc


class OeisClient:
    """Fetches entry records, one cache file per id.

    ``transport(url) -> bytes`` does the network I/O and may raise
    :class:`NetworkError` or :class:`NotFoundError`.
    """

    base_url = "https://oeis.org"

    def __init__(self, cache_dir, rate_limit: float = 1.0,
                 transport: Callable[[str], bytes] | None = None,
                 limiter: RateLimiter | None = None):
        self.cache_dir = Path(cache_dir)
        self.transport = transport or _urllib_get
        self.limiter = limiter or RateLimiter(rate_limit)

    def _cache_path(self, seq_id: str) -> Path:
        return self.cache_dir / f"{seq_id}.json"

    def fetch_record(self, seq_id: str) -> dict:
        canonical_id(seq_id)
        path = self._cache_path(seq_id)
        if path.exists():
            return json.loads(path.read_text(encoding="utf-8"))
        self.limiter.wait()
        raw = self.transport(f"{self.base_url}/search?q=id:{seq_id}&fmt=json")
        try:
            payload = json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise MalformedRecordError(f"{seq_id}: response is not JSON") from exc
        results = payload.get("results") if isinstance(payload, dict) else payload
        if not results:
            raise NotFoundError(seq_id)
        rec = results[0]
        parse_entry_record(rec)  # validate before caching
        _atomic_write_lines(path, [json.dumps(rec, sort_keys=True)])
        return rec

    def fetch_entry(self, seq_id: str) -> OeisEntry:
        return parse_entry_record(self.fetch_record(seq_id))

    def fetch_bfile(self, seq_id: str) -> list[int]:
        canonical_id(seq_id)
        path = self.cache_dir / f"b{seq_id[1:]}.txt"
        if not path.exists():
            self.limiter.wait()
            raw = self.transport(f"{self.base_url}/{seq_id}/b{seq_id[1:]}.txt")
            _atomic_write_lines(path, [raw.decode("utf-8").rstrip("\n")])
        return read_bfile(path)


_CLIENTS: dict[tuple, OeisClient] = {}
_CLIENTS_LOCK = threading.Lock()


def fetch_entry(seq_id: str, cache_dir, rate_limit: float = 1.0,
                transport: Callable[[str], bytes] | None = None) -> OeisEntry:
    """Fetch through a shared client per (cache_dir, rate_limit, transport) so the rate holds across calls."""
    key = (str(Path(cache_dir).resolve()), float(rate_limit), transport)
    with _CLIENTS_LOCK:
        client = _CLIENTS.get(key)
        if client is None:
            client = _CLIENTS[key] = OeisClient(cache_dir, rate_limit, transport)
    return client.fetch_entry(seq_id)
