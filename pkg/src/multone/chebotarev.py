"""Synthetic places with Chebotarev-distributed Frobenius classes.

A stream assigns to the n-th rational prime a conjugacy class drawn with
probability |c|/|G|.  Hecke eigenvalues are character values at that class.
Partial Dirichlet sums are reduced per class: the per-class weights
W_c(s) = sum of Nv^-s over places with Frobenius c are summed with
``math.fsum`` (correctly rounded, hence order independent), and the series
is then sum_c f(c) W_c(s).
"""
from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .characters import ClassFunction
from .cyclotomic import CyclotomicNumber
from .groups import FiniteGroup

COUNT_CAP = 10**8
BLOCK = 1 << 16
DEFAULT_S_GRID = (1.5, 1.2, 1.1, 1.05, 1.02, 1.01)
FIT_POINTS = 4
DENSITY_LABEL = "density (model has limit)"


class StreamError(ValueError):
    pass


def ell(s: float) -> float:
    """log(1/(s-1))."""
    if s <= 1:
        raise StreamError("s must exceed 1")
    return -math.log(s - 1)


@lru_cache(maxsize=8)
def _sieve(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags)


def first_primes(count: int) -> np.ndarray:
    """The first ``count`` rational primes, ascending (int64)."""
    if count <= 0:
        return np.empty(0, dtype=np.int64)
    n = max(count, 6)
    limit = int(n * (math.log(n) + math.log(math.log(n)))) + 10
    primes = _sieve(limit)
    return primes[:count].astype(np.int64)


def chebotarev_weights(G: FiniteGroup) -> list[Fraction]:
    return [Fraction(c.size, G.order) for c in G.classes]


def _draw_block(cum: np.ndarray, seed: int, block: int, size: int) -> np.ndarray:
    rng = np.random.default_rng([seed, block])
    u = rng.random(size)
    return np.searchsorted(cum, u, side="right").astype(np.int32)


@dataclass(eq=False)
class PlaceStream:
    """Frobenius classes at the first ``count`` primes, determined by (group, seed, count)."""

    group: FiniteGroup
    seed: int
    count: int
    threads: int = 1
    norms: np.ndarray = field(init=False, repr=False)
    classes: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.count < 0:
            raise StreamError("count must be nonnegative")
        if self.count > COUNT_CAP:
            raise StreamError(f"count exceeds cap of {COUNT_CAP}")
        if self.seed < 0:
            raise StreamError("seed must be nonnegative")
        self.norms = first_primes(self.count)
        w = np.array([float(x) for x in chebotarev_weights(self.group)])
        cum = np.cumsum(w)
        cum[-1] = 1.0
        sizes = [min(BLOCK, self.count - b * BLOCK) for b in range(-(-self.count // BLOCK))]
        jobs = [(cum, self.seed, b, n) for b, n in enumerate(sizes)]
        if self.threads > 1 and len(jobs) > 1:
            with ThreadPoolExecutor(self.threads) as pool:
                parts = list(pool.map(lambda j: _draw_block(*j), jobs))
        else:
            parts = [_draw_block(*j) for j in jobs]
        self.classes = np.concatenate(parts) if parts else np.empty(0, dtype=np.int32)
        order = np.argsort(self.classes, kind="stable")
        self._bounds = np.searchsorted(self.classes[order], np.arange(len(self.group.classes) + 1))
        self._by_class = order
        self._weight_cache: dict[float, list[float]] = {}

    def class_counts(self) -> np.ndarray:
        return np.diff(self._bounds)

    def class_weights(self, s: float) -> list[float]:
        """W_c(s) = sum over places with Frobenius class c of Nv^-s."""
        if s <= 1:
            raise StreamError("s must exceed 1")
        cached = self._weight_cache.get(s)
        if cached is None:
            terms = np.power(self.norms[self._by_class].astype(float), -s)
            b = self._bounds
            cached = [math.fsum(terms[b[c] : b[c + 1]]) for c in range(len(b) - 1)]
            self._weight_cache[s] = cached
        return cached

    def frequency_check(self, sigmas: float = 3.0) -> bool:
        """Observed class counts within ``sigmas`` binomial standard deviations."""
        n = self.count
        for k, w in zip(self.class_counts(), chebotarev_weights(self.group)):
            p = float(w)
            if abs(k - n * p) > sigmas * math.sqrt(n * p * (1 - p)) + 1e-9:
                return False
        return True


@dataclass(frozen=True)
class HeckeSample:
    norm: int
    a: CyclotomicNumber
    a_prime: CyclotomicNumber


@dataclass(eq=False)
class HeckeStream:
    """A place stream together with two class functions evaluated along it."""

    stream: PlaceStream
    chi: ClassFunction
    chi_prime: ClassFunction

    def __len__(self):
        return self.stream.count

    def __iter__(self) -> Iterator[HeckeSample]:
        va, vb = self.chi.values, self.chi_prime.values
        for nv, c in zip(self.stream.norms.tolist(), self.stream.classes.tolist()):
            yield HeckeSample(nv, va[c], vb[c])

    def samples(self, limit: int | None = None) -> list[HeckeSample]:
        out = []
        for i, smp in enumerate(self):
            if limit is not None and i >= limit:
                break
            out.append(smp)
        return out

    def monomial_values(self, monomial: Sequence[int]) -> list[CyclotomicNumber]:
        """a^w conj(a)^x a'^y conj(a')^z at each class, exact."""
        w, x, y, z = _check_monomial(monomial)
        out = []
        for a, b in zip(self.chi.values, self.chi_prime.values):
            out.append(a**w * a.conjugate() ** x * b**y * b.conjugate() ** z)
        return out

    def differs(self) -> np.ndarray:
        return self.chi.differs_at(self.chi_prime)


def _check_monomial(monomial) -> tuple[int, int, int, int]:
    m = tuple(int(e) for e in monomial)
    if len(m) != 4 or min(m) < 0:
        raise StreamError("monomial must be four nonnegative exponents")
    if sum(m) > 4:
        raise StreamError("monomial degree exceeds 4")
    return m


def hecke_stream(G: FiniteGroup, chi: ClassFunction, chi_prime: ClassFunction, seed: int, count: int, threads: int = 1) -> HeckeStream:
    if chi.group is not G or chi_prime.group is not G:
        raise StreamError("characters belong to a different group")
    return HeckeStream(PlaceStream(G, seed, count, threads), chi, chi_prime)


def exact_density(chi: ClassFunction, chi_prime: ClassFunction) -> Fraction:
    """Chebotarev density of {g : chi(g) != chi'(g)}."""
    if chi.group is not chi_prime.group:
        raise StreamError("mismatched groups")
    G = chi.group
    mask = chi.differs_at(chi_prime)
    return Fraction(sum(c.size for c, d in zip(G.classes, mask) if d), G.order)


def _weighted(values: Sequence[complex], weights: Sequence[float]) -> complex:
    re = math.fsum(v.real * w for v, w in zip(values, weights))
    im = math.fsum(v.imag * w for v, w in zip(values, weights))
    return complex(re, im)


def dirichlet_sum(hs: HeckeStream, monomial, s: float) -> complex:
    """Partial sum of a^w conj(a)^x a'^y conj(a')^z Nv^-s over the stream."""
    if s <= 1:
        raise StreamError("s must exceed 1")
    vals = [complex(v) for v in hs.monomial_values(monomial)]
    return _weighted(vals, hs.stream.class_weights(s))


def baseline_sum(stream: PlaceStream, s: float) -> float:
    """Sum of Nv^-s over all places of the stream (the stream's own prime zeta)."""
    return math.fsum(stream.class_weights(s))


def _fit_width(grid, fit_points: int) -> int:
    if fit_points < 3:
        raise StreamError("fit needs at least 3 points")
    return min(fit_points, len(grid))


def _validate_grid(s_grid) -> tuple[float, ...]:
    grid = tuple(float(s) for s in s_grid)
    if len(grid) < 3:
        raise StreamError("grid too small (need at least 3 points)")
    if any(s <= 1 for s in grid):
        raise StreamError("grid points must exceed 1")
    if any(b >= a for a, b in zip(grid, grid[1:])):
        raise StreamError("grid must be strictly decreasing")
    return grid


def _fit(xs, ss, ys) -> tuple[float, float]:
    """Least squares y = k*x + c0 + c1*(s-1); returns (k, rms residual).

    The affine term in s models the part of the series holomorphic at s = 1.
    """
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    A = np.vstack([x, np.ones_like(x), np.asarray(ss, dtype=float) - 1.0]).T
    coef, *_ = np.linalg.lstsq(A, y, rcond=None)
    resid = y - A @ coef
    return float(coef[0]), float(math.sqrt(float(np.mean(resid**2))))


@dataclass
class PoleEstimate:
    estimate: float
    residual: float
    imaginary_slope: float
    s_grid: tuple[float, ...]
    partial_sums: list[complex]
    ell_ratios: list[float]

    def to_json(self) -> dict:
        return {
            "estimate": self.estimate,
            "residual": self.residual,
            "imaginary_slope": self.imaginary_slope,
            "s_grid": list(self.s_grid),
            "partial_sums": [[z.real, z.imag] for z in self.partial_sums],
            "ell_ratios": self.ell_ratios,
        }


def pole_order_estimate(hs: HeckeStream, monomial, s_grid=DEFAULT_S_GRID, fit_points: int = FIT_POINTS) -> PoleEstimate:
    """Coefficient of the polar part of the partial sum.

    On a finite stream the prime zeta function saturates near log log of the
    largest norm instead of following l(s), so the polar regressor is the
    stream's own sum_v Nv^-s.  The fit runs over the last ``fit_points`` grid
    points with an affine nuisance term c0 + c1(s-1), which soaks up the
    small primes.  Literal ratios partial_sum / l(s) are reported alongside.
    """
    grid = _validate_grid(s_grid)
    if hs.stream.count == 0:
        raise StreamError("empty stream")
    sums = [dirichlet_sum(hs, monomial, s) for s in grid]
    base = [baseline_sum(hs.stream, s) for s in grid]
    k = _fit_width(grid, fit_points)
    slope, resid = _fit(base[-k:], grid[-k:], [z.real for z in sums[-k:]])
    islope, _ = _fit(base[-k:], grid[-k:], [z.imag for z in sums[-k:]])
    return PoleEstimate(slope, resid, islope, grid, sums, [z.real / ell(s) for z, s in zip(sums, grid)])


@dataclass
class DensityReport:
    exact_density: Fraction
    empirical: dict[float, float]
    extrapolated: float
    s_grid: tuple[float, ...]
    partial_sums: list[float]
    count: int
    residual: float = 0.0
    label: str = DENSITY_LABEL

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "exact_density": {"numerator": self.exact_density.numerator, "denominator": self.exact_density.denominator},
            "s_grid": list(self.s_grid),
            "empirical": [{"s": s, "ratio": self.empirical[s]} for s in self.s_grid],
            "partial_sums": self.partial_sums,
            "extrapolated": self.extrapolated,
            "residual": self.residual,
            "count": self.count,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["s", "ratio", "partial_sum", "count"])
        for s, ps in zip(self.s_grid, self.partial_sums):
            w.writerow([s, self.empirical[s], ps, self.count])
        return buf.getvalue()


def empirical_lower_density(hs: HeckeStream, s_grid=DEFAULT_S_GRID, fit_points: int = FIT_POINTS) -> DensityReport:
    """Empirical density of {v : a_v != a'_v}, decided exactly per class."""
    grid = _validate_grid(s_grid)
    mask = hs.differs()
    exact = exact_density(hs.chi, hs.chi_prime)
    sums, base = [], []
    for s in grid:
        w = hs.stream.class_weights(s)
        sums.append(math.fsum(x for x, d in zip(w, mask) if d))
        base.append(math.fsum(w))
    ratios = {s: ps / ell(s) for s, ps in zip(grid, sums)}
    if hs.stream.count == 0:
        return DensityReport(exact, ratios, 0.0, grid, sums, 0)
    k = _fit_width(grid, fit_points)
    slope, resid = _fit(base[-k:], grid[-k:], sums[-k:])
    return DensityReport(exact, ratios, max(slope, 0.0), grid, sums, hs.stream.count, resid)
