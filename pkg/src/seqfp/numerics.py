"""Wide-exponent reals, running moments, least squares and RANSAC line fits."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Sequence as Seq

import numpy as np

from ._backend import kernels
from .errors import ConsensusError, DegenerateFitError

LN2 = math.log(2.0)
_FLOAT_EXACT_BITS = 53


@dataclass(frozen=True)
class WideReal:
    """``mantissa * 2**exponent`` with ``|mantissa|`` in [1, 2), or canonical zero."""

    mantissa: float = 0.0
    exponent: int = 0

    @classmethod
    def normalized(cls, m: float, e: int = 0) -> "WideReal":
        if m == 0.0:
            return cls(0.0, 0)
        fr, ex = math.frexp(m)
        return cls(fr * 2.0, e + ex - 1)

    @classmethod
    def from_int(cls, value: int) -> "WideReal":
        return cls(*_int_parts(value))

    @property
    def sign(self) -> int:
        return (self.mantissa > 0) - (self.mantissa < 0)

    def is_zero(self) -> bool:
        return self.mantissa == 0.0

    def ln(self) -> float:
        """Natural log of a positive value; finite far outside float range."""
        if self.mantissa <= 0.0:
            raise ValueError("logarithm of a non-positive WideReal")
        return math.log(self.mantissa) + self.exponent * LN2

    def __float__(self) -> float:
        try:
            return math.ldexp(self.mantissa, self.exponent)
        except OverflowError:
            return math.copysign(math.inf, self.mantissa)

    def __neg__(self) -> "WideReal":
        return WideReal(-self.mantissa, self.exponent)

    def __add__(self, other: "WideReal") -> "WideReal":
        return WideReal(*kernels.wide_add(self.mantissa, self.exponent, other.mantissa, other.exponent))

    def __sub__(self, other: "WideReal") -> "WideReal":
        return self + (-other)

    def __mul__(self, other: "WideReal") -> "WideReal":
        return WideReal(*kernels.wide_mul(self.mantissa, self.exponent, other.mantissa, other.exponent))

    def __truediv__(self, other: "WideReal") -> "WideReal":
        if other.mantissa == 0.0:
            raise ZeroDivisionError("WideReal division by zero")
        return WideReal(*kernels.wide_div(self.mantissa, self.exponent, other.mantissa, other.exponent))


def _int_parts(value: int) -> tuple[float, int]:
    if value == 0:
        return 0.0, 0
    a = -value if value < 0 else value
    shift = a.bit_length() - _FLOAT_EXACT_BITS
    if shift > 0:
        # truncation: relative error below 2**-52
        a >>= shift
    else:
        shift = 0
    fr, ex = math.frexp(float(a))
    m = fr * 2.0
    return (-m if value < 0 else m), shift + ex - 1


def wide_from_integer(value: int) -> WideReal:
    return WideReal.from_int(value)


def wide_arrays(terms: Seq[int]) -> tuple[np.ndarray, np.ndarray]:
    """Mantissa and exponent arrays for a list of exact integers."""
    n = len(terms)
    mant = np.empty(n, dtype=np.float64)
    expo = np.empty(n, dtype=np.int64)
    limit = 1 << _FLOAT_EXACT_BITS
    if all(-limit < t < limit for t in terms):
        fr, ex = np.frexp(np.asarray(terms, dtype=np.float64))
        mant[:] = fr * 2.0
        expo[:] = np.where(fr == 0.0, 0, ex.astype(np.int64) - 1)
        return mant, expo
    for i, t in enumerate(terms):
        mant[i], expo[i] = _int_parts(t)
    return mant, expo


@dataclass
class RunningMoments:
    """Running mean and sample variance of the first n terms, n = 1..len."""

    mu_mantissa: np.ndarray
    mu_exponent: np.ndarray
    var_mantissa: np.ndarray
    var_exponent: np.ndarray

    def __len__(self) -> int:
        return len(self.mu_mantissa)

    @property
    def mu(self) -> list[WideReal]:
        return [WideReal(float(m), int(e)) for m, e in zip(self.mu_mantissa, self.mu_exponent)]

    @property
    def var(self) -> list[WideReal]:
        return [WideReal(float(m), int(e)) for m, e in zip(self.var_mantissa, self.var_exponent)]

    def log_mu(self) -> np.ndarray:
        """ln mu(n), NaN where mu(n) <= 0."""
        return _log_wide(self.mu_mantissa, self.mu_exponent)

    def log_var(self) -> np.ndarray:
        """ln v(n), NaN where v(n) == 0."""
        return _log_wide(self.var_mantissa, self.var_exponent)


def _log_wide(mant: np.ndarray, expo: np.ndarray) -> np.ndarray:
    out = np.full(mant.shape, np.nan)
    pos = mant > 0
    out[pos] = np.log(mant[pos]) + expo[pos] * LN2
    return out


def running_moments(terms: Seq[int]) -> RunningMoments:
    if len(terms) == 0:
        raise ValueError("running_moments needs at least one term")
    mant, expo = wide_arrays(terms)
    return RunningMoments(*kernels.running_moments(mant, expo))


@dataclass(frozen=True)
class LineFit:
    slope: float
    intercept: float
    r: float
    sigma_x: float
    sigma_y: float
    n_points: int


def ols_fit(xs, ys) -> LineFit:
    """Least-squares line ``y = slope*x + intercept`` with Pearson r.

    ``sigma_x``/``sigma_y`` are population standard deviations, so
    ``slope == r * sigma_y / sigma_x``.
    """
    x = np.asarray(xs, dtype=np.float64)
    y = np.asarray(ys, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError("xs and ys must be 1-D and of equal length")
    n = x.shape[0]
    if n < 2:
        raise DegenerateFitError("need at least two points")
    mx = x.mean()
    my = y.mean()
    dx = x - mx
    dy = y - my
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    sxy = float(dx @ dy)
    if sxx == 0.0 or not math.isfinite(sxx):
        raise DegenerateFitError("all x values are equal")
    slope = sxy / sxx
    intercept = float(my) - slope * float(mx)
    r = sxy / math.sqrt(sxx * syy) if syy > 0.0 else 0.0
    r = min(1.0, max(-1.0, r))
    return LineFit(
        slope=slope,
        intercept=intercept,
        r=r,
        sigma_x=math.sqrt(sxx / n),
        sigma_y=math.sqrt(syy / n),
        n_points=n,
    )


@dataclass(frozen=True)
class RansacFit:
    slope: float
    intercept: float
    inlier_mask: np.ndarray = field(repr=False)
    inlier_fit: LineFit
    params: dict

    @property
    def n_inliers(self) -> int:
        return int(self.inlier_mask.sum())

    def to_dict(self) -> dict:
        return {"slope": self.slope, "intercept": self.intercept,
                "inlier_mask": [bool(v) for v in self.inlier_mask],
                "inlier_fit": asdict(self.inlier_fit), "params": dict(self.params)}

    @classmethod
    def from_dict(cls, d: dict) -> "RansacFit":
        return cls(d["slope"], d["intercept"], np.array(d["inlier_mask"], dtype=bool),
                   LineFit(**d["inlier_fit"]), dict(d["params"]))


def ransac_fit(points, threshold: float = 0.05, iterations: int = 2000, seed: int = 0) -> RansacFit:
    """Two-point RANSAC with vertical residuals, refit by OLS on the best consensus set.

    The first hypothesis reaching the largest consensus wins; the random draws
    come only from ``seed``.
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("points must be an (n, 2) array")
    n = pts.shape[0]
    if n < 2:
        raise ConsensusError("RANSAC needs at least two points")
    if not threshold > 0:
        raise ValueError("threshold must be positive")
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    x = pts[:, 0]
    y = pts[:, 1]
    rng = np.random.default_rng(seed)
    best_mask = None
    best_count = 1
    for _ in range(iterations):
        i, j = rng.choice(n, size=2, replace=False)
        if x[i] == x[j]:
            continue
        slope = (y[j] - y[i]) / (x[j] - x[i])
        intercept = y[i] - slope * x[i]
        mask = np.abs(y - (slope * x + intercept)) <= threshold
        count = int(mask.sum())
        if count > best_count:
            best_count = count
            best_mask = mask
    if best_mask is None:
        raise ConsensusError("no consensus set of at least two points")
    try:
        fit = ols_fit(x[best_mask], y[best_mask])
    except DegenerateFitError as exc:
        raise ConsensusError(f"consensus set is degenerate: {exc}") from exc
    return RansacFit(
        slope=fit.slope,
        intercept=fit.intercept,
        inlier_mask=best_mask,
        inlier_fit=fit,
        params={"threshold": threshold, "iterations": iterations, "seed": seed},
    )
