"""Closed-form coefficient identities and monotonicity comparators.

Writing f for the rank function of a polymatroid P over [n] and T for its
two-variable Tutte polynomial, the implemented identities are:

  top band        [x^k y^(n-k)] T = C(n, k)                      (all 0<=k<=n)
  near-top band   [x^(n-k) y^(k-1)] T = sum of f over (k-1)-sets
                  + sum of f over k-sets - C(n, k-1) f([n]) - k C(n, k)
  near-top, one   [x^(n-1)] T(x, 1) = sum_i f({i}) - f([n])
   variable       [y^(n-1)] T(1, y) = sum_i f([n]-i) - (n-1) f([n])
  second band     [x^(n-2)] T  and  [y^(n-2)] T, and their one-variable
                  counterparts, via the generalized binomial C(m, 2) of
                  possibly negative m

The generalized binomial is the falling factorial m(m-1)...(m-k+1)/k!, so
e.g. C(-1, 2) = 1; this convention is forced by the unique-basis case where
T = (x + y - 1)^n.

Also here: the exterior-coefficient ceiling check (rank staying full under
every k-element removal is equivalent to the first k+1 exterior coefficients
hitting C(f([n]) + i - 1, i)), a coefficientwise <= comparator with witness,
an exhaustive search for polymatroids with a prescribed Tutte polynomial,
and seeded random corpus generators (submodular tables from truncated
weighted coverage functions, subset pairs by coordinate capping, minors).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from random import Random
from typing import Iterable, Sequence

from .activity import exterior_direct
from .bipoly import BiPoly
from .core import (
    Polymatroid,
    RankTable,
    enumerate_bases,
    enumerate_small_polymatroids,
)
from .errors import NegativeCoordinates, ValidationError


def binomial(m: int, k: int) -> int:
    """Generalized binomial: falling factorial over k!, any integer m.

    C(m, 0) = 1 for every m (including negatives); C(m, k) = 0 for k < 0.
    """
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= m - i
    den = 1
    for i in range(2, k + 1):
        den *= i
    return num // den


def top_coefficient(n: int, k: int) -> int:
    """[x^k y^(n-k)] T = C(n, k), independent of the polymatroid."""
    if not 0 <= k <= n:
        raise ValidationError(f"need 0 <= k <= n, got k={k}, n={n}")
    return binomial(n, k)


def _sum_by_popcount(table: RankTable) -> list[int]:
    """sums[s] = sum of f over all subsets of size s."""
    n = table.n
    out = [0] * (n + 1)
    for mask in range(1 << n):
        out[bin(mask).count("1")] += table.f[mask]
    return out


def near_top_coefficient(table: RankTable, k: int) -> int:
    """[x^(n-k) y^(k-1)] T for 1 <= k <= n, from subset-size sums of f."""
    n = table.n
    if not 1 <= k <= n:
        raise ValidationError(f"need 1 <= k <= n, got k={k}")
    sums = _sum_by_popcount(table)
    full = table.full_rank()
    return sums[k - 1] + sums[k] - binomial(n, k - 1) * full - k * binomial(n, k)


def near_top_univariate(table: RankTable) -> tuple[int, int]:
    """([x^(n-1)] T(x,1), [y^(n-1)] T(1,y)) from singleton/co-singleton ranks."""
    n = table.n
    f = table.f
    full = table.full_rank()
    full_mask = (1 << n) - 1
    singles = sum(f[1 << i] for i in range(n))
    cosingles = sum(f[full_mask ^ (1 << i)] for i in range(n))
    return singles - full, cosingles - (n - 1) * full


def second_band_coefficient(table: RankTable) -> tuple[int, int]:
    """([x^(n-2)] T, [y^(n-2)] T) via generalized C(., 2) terms."""
    n = table.n
    if n < 2:
        raise ValidationError("second-band coefficients need n >= 2")
    f = table.f
    full = table.full_rank()
    full_mask = (1 << n) - 1
    singles = sum(f[1 << i] for i in range(n))
    cosingles = sum(f[full_mask ^ (1 << i)] for i in range(n))
    x_part = binomial(singles - full + 1 - n, 2)
    y_part = binomial(cosingles - (n - 1) * full + 1 - n, 2)
    for i, j in itertools.combinations(range(n), 2):
        bi, bj = 1 << i, 1 << j
        x_part -= binomial(f[bi] + f[bj] - f[bi | bj], 2)
        y_part -= binomial(
            f[full_mask ^ bi] + f[full_mask ^ bj] - f[full_mask ^ bi ^ bj] - full, 2
        )
    return x_part, y_part


def second_band_univariate(table: RankTable) -> tuple[int, int]:
    """([x^(n-2)] T(x,1), [y^(n-2)] T(1,y)), same shape with +1 shifts."""
    n = table.n
    if n < 2:
        raise ValidationError("second-band coefficients need n >= 2")
    f = table.f
    full = table.full_rank()
    full_mask = (1 << n) - 1
    singles = sum(f[1 << i] for i in range(n))
    cosingles = sum(f[full_mask ^ (1 << i)] for i in range(n))
    x_part = binomial(singles - full + 1, 2)
    y_part = binomial(cosingles - (n - 1) * full + 1, 2)
    for i, j in itertools.combinations(range(n), 2):
        bi, bj = 1 << i, 1 << j
        x_part -= binomial(f[bi] + f[bj] - f[bi | bj] + 1, 2)
        y_part -= binomial(
            f[full_mask ^ bi] + f[full_mask ^ bj] - f[full_mask ^ bi ^ bj] - full + 1, 2
        )
    return x_part, y_part


# -- coefficient report ------------------------------------------------------------


@dataclass(frozen=True)
class CoefficientRow:
    """One predicted-vs-extracted comparison."""

    formula: str
    predicted: int
    extracted: int

    @property
    def match(self) -> bool:
        return self.predicted == self.extracted

    def to_json(self) -> dict:
        return {
            "formula": self.formula,
            "predicted": self.predicted,
            "extracted": self.extracted,
            "match": self.match,
        }


def coefficient_report(p: Polymatroid, tutte: BiPoly) -> list[CoefficientRow]:
    """Every applicable identity evaluated against the actual coefficients."""
    n = p.n
    table = p.rank_table()
    at_y1 = tutte.substitute_one("y")
    at_x1 = tutte.substitute_one("x")
    rows = []
    for k in range(n + 1):
        rows.append(
            CoefficientRow(f"top[x^{k}y^{n - k}]", top_coefficient(n, k), tutte.coeff(k, n - k))
        )
    for k in range(1, n + 1):
        rows.append(
            CoefficientRow(
                f"near-top[x^{n - k}y^{k - 1}]",
                near_top_coefficient(table, k),
                tutte.coeff(n - k, k - 1),
            )
        )
    xn1, yn1 = near_top_univariate(table)
    rows.append(CoefficientRow(f"x^{n - 1}@y=1", xn1, at_y1.coeff(n - 1, 0)))
    rows.append(CoefficientRow(f"y^{n - 1}@x=1", yn1, at_x1.coeff(0, n - 1)))
    if n >= 2:
        x2, y2 = second_band_coefficient(table)
        rows.append(CoefficientRow(f"x^{n - 2}", x2, tutte.coeff(n - 2, 0)))
        rows.append(CoefficientRow(f"y^{n - 2}", y2, tutte.coeff(0, n - 2)))
        ux, uy = second_band_univariate(table)
        rows.append(CoefficientRow(f"x^{n - 2}@y=1", ux, at_y1.coeff(n - 2, 0)))
        rows.append(CoefficientRow(f"y^{n - 2}@x=1", uy, at_x1.coeff(0, n - 2)))
        # the one-variable values are also three-term sums of bivariate ones
        rows.append(
            CoefficientRow(
                f"x^{n - 2}@y=1 (three-term)",
                tutte.coeff(n - 2, 0) + tutte.coeff(n - 2, 1) + tutte.coeff(n - 2, 2),
                at_y1.coeff(n - 2, 0),
            )
        )
        rows.append(
            CoefficientRow(
                f"y^{n - 2}@x=1 (three-term)",
                tutte.coeff(0, n - 2) + tutte.coeff(1, n - 2) + tutte.coeff(2, n - 2),
                at_x1.coeff(0, n - 2),
            )
        )
    return rows


# -- exterior ceiling ----------------------------------------------------------------


@dataclass(frozen=True)
class CeilingCheck:
    """Both sides of the rank-fullness / exterior-ceiling equivalence."""

    k: int
    rank_side: bool
    coefficient_side: bool

    @property
    def match(self) -> bool:
        return self.rank_side == self.coefficient_side

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "rank_side": self.rank_side,
            "coefficient_side": self.coefficient_side,
            "match": self.match,
        }


def exterior_ceiling_check(
    p: Polymatroid, k: int, exterior: BiPoly | None = None
) -> CeilingCheck:
    """Evaluate both sides of the equivalence independently.

    Rank side: f([n] - J) = f([n]) for every J of size k (exhaustive).
    Coefficient side: [y^i] X = C(f([n]) + i - 1, i) for every i <= k.
    Requires all basis coordinates nonnegative.
    """
    if any(c < 0 for v in p.bases for c in v):
        raise NegativeCoordinates("ceiling check needs nonnegative bases")
    n = p.n
    if not 0 <= k <= n:
        raise ValidationError(f"need 0 <= k <= n, got k={k}")
    table = p.rank_table()
    full_mask = (1 << n) - 1
    full = table.full_rank()
    rank_side = all(
        table.f[full_mask ^ _mask(j_set)] == full
        for j_set in itertools.combinations(range(n), k)
    )
    x = exterior if exterior is not None else exterior_direct(p)
    coeff_side = all(x.coeff(0, i) == binomial(full + i - 1, i) for i in range(k + 1))
    return CeilingCheck(k, rank_side, coeff_side)


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def exterior_ceiling_profile(p: Polymatroid, exterior: BiPoly | None = None) -> int:
    """Largest k in 0..n with the first k+1 exterior coefficients at the
    ceiling C(f([n]) + i - 1, i); the constant term always qualifies."""
    x = exterior if exterior is not None else exterior_direct(p)
    full = p.rank_table().full_rank()
    best = 0
    for k in range(1, p.n + 1):
        if x.coeff(0, k) == binomial(full + k - 1, k):
            best = k
        else:
            break
    return best


# -- coefficientwise comparison ----------------------------------------------------------


@dataclass(frozen=True)
class ComparisonReport:
    """Outcome of a coefficientwise p <= q test."""

    holds: bool
    witness: tuple[int, int] | None
    difference: int

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "witness": list(self.witness) if self.witness else None,
            "difference": self.difference,
        }


def coefficientwise_le(p: BiPoly, q: BiPoly) -> ComparisonReport:
    """Is every coefficient of p <= the matching coefficient of q?

    On failure the witness is the worst offending exponent pair.
    """
    worst: tuple[int, int] | None = None
    gap = 0
    for i, j in p.support() | q.support():
        d = p.coeff(i, j) - q.coeff(i, j)
        if d > gap:
            gap = d
            worst = (i, j)
    return ComparisonReport(worst is None, worst, gap)


# -- exhaustive search ---------------------------------------------------------------------


@dataclass(frozen=True)
class SearchMatch:
    target_index: int
    polymatroid: Polymatroid
    tutte: BiPoly


def search_by_tutte(
    targets: Sequence[BiPoly], max_n: int = 3, max_rank: int = 4
) -> list[SearchMatch]:
    """All small polymatroids whose Tutte polynomial equals one of the targets.

    Scans every polymatroid of a submodular table with n <= max_n and values
    in 0..max_rank.  A missing target is simply absent from the result list.
    """
    from .recursion import tutte_dc  # local import to avoid a cycle

    wanted: dict[int, list[int]] = {}
    for idx, t in enumerate(targets):
        wanted.setdefault(t.total_degree(), []).append(idx)
    out: list[SearchMatch] = []
    for n in range(1, max_n + 1):
        if n not in wanted:
            continue  # top-degree terms force total degree n
        for p in enumerate_small_polymatroids(n, max_rank):
            t = tutte_dc(p)
            for idx in wanted[n]:
                if t == targets[idx]:
                    out.append(SearchMatch(idx, p, t))
    return out


# -- seeded random corpus ---------------------------------------------------------------


def random_rank_table(
    rng: Random,
    n: int,
    *,
    max_weight: int = 3,
    max_universe: int = 6,
    size_budget: int = 400,
    allow_translation: bool = True,
    max_tries: int = 400,
) -> RankTable:
    """Random submodular table: truncated weighted coverage, then an optional
    modular shift (which makes non-monotone tables and negative coordinates).

    Draws are rejected until the basis count bound (product of coordinate
    ranges) fits the size budget, keeping enumeration cheap and deterministic
    for a given rng state.
    """
    for _ in range(max_tries):
        universe = rng.randint(2, max_universe)
        weights = [rng.randint(1, max_weight) for _ in range(universe)]
        covers = [
            rng.sample(range(universe), rng.randint(1, universe)) for _ in range(n)
        ]
        size = 1 << n
        values = [0] * size
        full_cover = set()
        for c in covers:
            full_cover.update(c)
        g_full = sum(weights[q] for q in full_cover)
        cap = rng.randint(max(1, g_full - 2), g_full)
        for mask in range(1, size):
            covered = set()
            for i in range(n):
                if mask & (1 << i):
                    covered.update(covers[i])
            values[mask] = min(sum(weights[q] for q in covered), cap)
        if allow_translation and rng.random() < 0.4:
            shift = [rng.randint(-2, 2) for _ in range(n)]
            for mask in range(1, size):
                values[mask] += sum(shift[i] for i in range(n) if mask & (1 << i))
        table = RankTable(n, values, validate=False)
        full_mask = size - 1
        bound = 1
        for t in range(n):
            bit = 1 << t
            alpha = values[full_mask] - values[full_mask ^ bit]
            beta = values[bit]
            bound *= beta - alpha + 1
        if bound <= size_budget:
            table.validate()  # construction guarantees this; assert anyway
            return table
    raise ValidationError("could not draw a table within the size budget")


def random_polymatroid(rng: Random, n: int, **kw) -> Polymatroid:
    return enumerate_bases(random_rank_table(rng, n, **kw))


def random_subpolymatroid(rng: Random, p: Polymatroid) -> Polymatroid:
    """Random sub-polymatroid by iterated coordinate caps {a : a_t <= m}.

    Capping one coordinate of a polymatroid at an attained level yields a
    polymatroid again, with the same total; its rank table is pointwise at
    most the original and agrees on the full set.
    """
    bases = p.bases
    for _ in range(rng.randint(1, 3)):
        t = rng.randrange(p.n)
        col = [v[t] for v in bases]
        lo, hi = min(col), max(col)
        if lo == hi:
            continue
        m = rng.randint(lo, hi - 1)
        bases = tuple(v for v in bases if v[t] <= m)
    return Polymatroid(bases, validate=False)


def random_minor_args(rng: Random, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Disjoint deletion/contraction sets that leave the ground set nonempty."""
    if n == 1:
        return (), ()
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    keep = rng.randint(1, n - 1)
    removed = labels[keep:]
    split = rng.randint(0, len(removed))
    return tuple(sorted(removed[:split])), tuple(sorted(removed[split:]))
