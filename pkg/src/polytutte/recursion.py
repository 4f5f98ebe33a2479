"""Deletion-contraction evaluation and the classical-matroid bridge.

The Tutte polynomial of a polymatroid satisfies a recursion over the slices
of any pivot coordinate t, whose attained levels form the interval
alpha_t..beta_t:

  * single level (beta = alpha):   T(P) = (x + y - 1) * T(slice)
  * several levels:                T(P) = x * T(slice at alpha)
                                        + y * T(slice at beta)
                                        + sum of T(slice at j) for interior j

with T = x + y - 1 on one element.  The slices at the interval ends are the
deletion and contraction of t.  The same skeleton evaluates the interior and
exterior polynomials:

    I(P) = I(slice at alpha) + x * sum over other levels
    X(P) = X(slice at beta)  + y * sum over other levels

with base case 1.  The recursion result is independent of the pivot choice;
the implementation picks the coordinate with the widest level interval,
purely as a performance heuristic.

Results are memoized under a translation-normalized key (each coordinate
shifted so its minimum is 0), since translating a polymatroid does not
change these polynomials.  The caches are bounded LRU maps, safe to share
between threads; exactness is unaffected by eviction.

The bridge to matroids: for a rank-d matroid M on [n] with 0/1 basis
indicator vectors P(M), the classical Tutte polynomial equals the
two-variable polynomial pushed through the substitution

    T_M(x, y) = (x + y - xy)^n / (x^(n-d) y^d) * T_P(u, v),
    u = x / (x + y - xy),  v = y / (x + y - xy)

which ``tutte_to_matroid_form`` expands exactly as a Laurent polynomial.
``classical_tutte`` computes the corank-nullity sum directly and serves as
the independent oracle for that identity.
"""

from __future__ import annotations

import threading
from collections import OrderedDict
from typing import Sequence

from .activity import xy1_power
from .bipoly import BiPoly, X, Y, from_dict
from .core import Polymatroid, RankTable, Vector, validate_rank_table
from .errors import DegreeExceedsN, NotAMatroid, ValidationError

DEFAULT_MEMO_CAPACITY = 1 << 20


class LRUCache:
    """Bounded mapping with least-recently-used eviction and atomic upserts."""

    def __init__(self, capacity: int = DEFAULT_MEMO_CAPACITY):
        if capacity < 1:
            raise ValidationError("cache capacity must be positive")
        self.capacity = capacity
        self._data: OrderedDict = OrderedDict()
        self._lock = threading.Lock()

    def get(self, key):
        with self._lock:
            try:
                self._data.move_to_end(key)
            except KeyError:
                return None
            return self._data[key]

    def put(self, key, value) -> None:
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            while len(self._data) > self.capacity:
                self._data.popitem(last=False)

    def __len__(self) -> int:
        return len(self._data)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()


_tutte_cache = LRUCache()
_interior_cache = LRUCache()
_exterior_cache = LRUCache()


def configure_caches(capacity: int) -> None:
    """Replace the shared memo caches with fresh ones of the given bound."""
    global _tutte_cache, _interior_cache, _exterior_cache
    _tutte_cache = LRUCache(capacity)
    _interior_cache = LRUCache(capacity)
    _exterior_cache = LRUCache(capacity)


def clear_caches() -> None:
    _tutte_cache.clear()
    _interior_cache.clear()
    _exterior_cache.clear()


def memo_key(bases: Sequence[Vector]) -> tuple[Vector, ...]:
    """Translation-normalized key: shift every coordinate's minimum to 0.

    Lexicographic order is preserved by per-coordinate shifts, so the sorted
    input stays sorted and two translates of the same polymatroid share keys.
    """
    mins = [min(col) for col in zip(*bases)]
    if not any(mins):
        return tuple(bases)
    return tuple(tuple(c - m for c, m in zip(v, mins)) for v in bases)


def _widest_pivot(bases: Sequence[Vector], n: int) -> tuple[int, int, int]:
    """Pivot coordinate with the widest attained interval, and its extremes."""
    best = (0, 0, 0)
    width = -1
    for t in range(n):
        col = [v[t] for v in bases]
        lo, hi = min(col), max(col)
        if hi - lo > width:
            width = hi - lo
            best = (t, lo, hi)
    return best


def _split_levels(bases: Sequence[Vector], t: int) -> dict[int, list[Vector]]:
    out: dict[int, list[Vector]] = {}
    for v in bases:
        out.setdefault(v[t], []).append(v[:t] + v[t + 1 :])
    return out


def _tutte_rec(bases: tuple[Vector, ...], n: int, cache: LRUCache, pivot: int | None) -> BiPoly:
    if n == 1:
        return xy1_power(1)
    if len(bases) == 1:
        return xy1_power(n)
    key = memo_key(bases)
    if pivot is None:
        hit = cache.get(key)
        if hit is not None:
            return hit
        t, lo, hi = _widest_pivot(bases, n)
    else:
        t = pivot - 1
        col = [v[t] for v in bases]
        lo, hi = min(col), max(col)
    levels = _split_levels(bases, t)
    if lo == hi:
        result = xy1_power(1) * _tutte_rec(tuple(levels[lo]), n - 1, cache, None)
    else:
        acc: dict[tuple[int, int], int] = {}
        for j in range(lo, hi + 1):
            part = _tutte_rec(tuple(levels[j]), n - 1, cache, None)
            if j == lo:
                shift = (1, 0)  # times x
            elif j == hi:
                shift = (0, 1)  # times y
            else:
                shift = (0, 0)
            for (i, jj), c in part._terms.items():  # noqa: SLF001 - hot path
                e = (i + shift[0], jj + shift[1])
                s = acc.get(e, 0) + c
                if s:
                    acc[e] = s
                else:
                    del acc[e]
        result = from_dict(acc)
    cache.put(key, result)
    return result


def tutte_dc(p: Polymatroid, *, pivot: int | None = None, cache: LRUCache | None = None) -> BiPoly:
    """Tutte polynomial by the slice recursion.

    ``pivot`` forces the first-level pivot coordinate (recursive calls below
    use the heuristic); the result does not depend on it.  ``cache`` may
    supply an isolated memo table, e.g. for pivot-independence checks.
    """
    if pivot is not None and not 1 <= pivot <= p.n:
        raise ValidationError(f"pivot {pivot} outside 1..{p.n}")
    return _tutte_rec(p.bases, p.n, cache or _tutte_cache, pivot)


def _one_var_rec(
    bases: tuple[Vector, ...],
    n: int,
    cache: LRUCache,
    keep_end: str,
    axis_shift: tuple[int, int],
) -> BiPoly:
    """Shared engine for the interior/exterior recursions.

    keep_end selects which interval end enters without the variable factor:
    'lo' (deletion end) for the interior polynomial, 'hi' (contraction end)
    for the exterior polynomial; every other level is shifted by axis_shift.
    """
    if n == 1 or len(bases) == 1:
        return BiPoly.one()
    key = memo_key(bases)
    hit = cache.get(key)
    if hit is not None:
        return hit
    t, lo, hi = _widest_pivot(bases, n)
    levels = _split_levels(bases, t)
    plain = lo if keep_end == "lo" else hi
    acc: dict[tuple[int, int], int] = {}
    for j in range(lo, hi + 1):
        part = _one_var_rec(tuple(levels[j]), n - 1, cache, keep_end, axis_shift)
        shift = (0, 0) if j == plain else axis_shift
        for (i, jj), c in part._terms.items():  # noqa: SLF001
            e = (i + shift[0], jj + shift[1])
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                del acc[e]
    result = from_dict(acc)
    cache.put(key, result)
    return result


def interior_dc(p: Polymatroid, *, cache: LRUCache | None = None) -> BiPoly:
    """Interior polynomial by the slice recursion (deletion end unweighted)."""
    return _one_var_rec(p.bases, p.n, cache or _interior_cache, "lo", (1, 0))


def exterior_dc(p: Polymatroid, *, cache: LRUCache | None = None) -> BiPoly:
    """Exterior polynomial by the slice recursion (contraction end unweighted)."""
    return _one_var_rec(p.bases, p.n, cache or _exterior_cache, "hi", (0, 1))


# -- classical matroid bridge ---------------------------------------------------


_XYXY_POWERS: list[BiPoly] = [BiPoly.one()]
_XYXY = X + Y - X * Y


def _xyxy_power(k: int) -> BiPoly:
    """(x + y - xy)^k, cached."""
    while len(_XYXY_POWERS) <= k:
        _XYXY_POWERS.append(_XYXY_POWERS[-1] * _XYXY)
    return _XYXY_POWERS[k]


def tutte_to_matroid_form(t: BiPoly, n: int, d: int) -> BiPoly:
    """Expand the matroid-form substitution of a degree-<=n polynomial.

    With t = sum c_ij x^i y^j this is
    sum c_ij x^i y^j (x + y - xy)^(n-i-j), multiplied by x^(d-n) y^(-d);
    the result is a Laurent polynomial.
    """
    if t.has_negative_exponents() or t.total_degree() > n:
        raise DegreeExceedsN(f"polynomial does not fit degree bound {n}")
    acc: dict[tuple[int, int], int] = {}
    for (i, j), c in t.items():
        power = _xyxy_power(n - i - j)
        for (pi, pj), pc in power._terms.items():  # noqa: SLF001
            e = (i + pi, j + pj)
            s = acc.get(e, 0) + c * pc
            if s:
                acc[e] = s
            else:
                del acc[e]
    return from_dict(acc).shift(d - n, -d)


def matroid_form(p: Polymatroid, d: int | None = None) -> BiPoly:
    """Matroid-form Tutte polynomial of a polymatroid.

    ``d`` defaults to the full rank (the common coordinate sum).  For the
    0/1 indicator polymatroid of a matroid this reproduces the classical
    Tutte polynomial exactly.
    """
    if d is None:
        d = p.total()
    return tutte_to_matroid_form(tutte_dc(p), p.n, d)


def validate_matroid_rank(table: RankTable) -> RankTable:
    """Matroid rank function: zero at empty, unit increments, submodular."""
    n = table.n
    f = table.f
    if f[0] != 0:
        raise NotAMatroid("rank of the empty set must be 0")
    for mask in range(1 << n):
        for i in range(n):
            bit = 1 << i
            if mask & bit:
                continue
            gain = f[mask | bit] - f[mask]
            if gain not in (0, 1):
                raise NotAMatroid(f"non-unit increment at mask {mask}, element {i + 1}")
    try:
        validate_rank_table(n, f)
    except ValidationError as exc:
        raise NotAMatroid(f"rank table is not submodular: {exc}") from exc
    return table


def classical_tutte(table: RankTable) -> BiPoly:
    """Corank-nullity expansion over all subsets of the ground set.

    sum over S of (x-1)^(r(E)-r(S)) * (y-1)^(|S|-r(S)); the independent
    oracle for the matroid-form bridge.
    """
    validate_matroid_rank(table)
    n = table.n
    f = table.f
    full_rank = f[(1 << n) - 1]
    xm1 = X - BiPoly.one()
    ym1 = Y - BiPoly.one()
    xp = [BiPoly.one()]
    yp = [BiPoly.one()]
    for _ in range(n):
        xp.append(xp[-1] * xm1)
        yp.append(yp[-1] * ym1)
    acc: dict[tuple[int, int], int] = {}
    for mask in range(1 << n):
        r = f[mask]
        term = xp[full_rank - r] * yp[bin(mask).count("1") - r]
        for e, c in term._terms.items():  # noqa: SLF001
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                del acc[e]
    return from_dict(acc)


def uniform_matroid(d: int, n: int) -> RankTable:
    """Rank function of the uniform matroid: r(S) = min(|S|, d)."""
    if not 0 <= d <= n:
        raise ValidationError(f"uniform matroid needs 0 <= d <= n, got d={d}, n={n}")
    return RankTable(n, [min(bin(m).count("1"), d) for m in range(1 << n)], validate=False)


def graphic_matroid(num_vertices: int, edges: Sequence[tuple[int, int]]) -> RankTable:
    """Rank function of a multigraph's cycle matroid, edges as the ground set.

    r(S) = (number of vertices) - (components of the spanning subgraph with
    edge set S); vertices are 1-based, loops and parallel edges allowed.
    """
    m = len(edges)
    if m < 1:
        raise ValidationError("graphic matroid needs at least one edge")
    for u, v in edges:
        if not (1 <= u <= num_vertices and 1 <= v <= num_vertices):
            raise ValidationError(f"edge ({u}, {v}) outside vertex range")
    values = []
    for mask in range(1 << m):
        parent = list(range(num_vertices + 1))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        comps = num_vertices
        for i in range(m):
            if mask & (1 << i):
                ra, rb = find(edges[i][0]), find(edges[i][1])
                if ra != rb:
                    parent[ra] = rb
                    comps -= 1
        values.append(num_vertices - comps)
    return RankTable(m, values, validate=False)


def is_zero_one(p: Polymatroid) -> bool:
    """True when every basis is a 0/1 vector (matroid indicator form)."""
    return all(all(c in (0, 1) for c in v) for v in p.bases)
