"""Polymatroid representations and structural operators.

A polymatroid over the ground set [n] = {1, ..., n} is stored as its finite
set of integer basis vectors.  Subsets of [n] are n-bit masks with element i
on bit i-1; rank functions are dense tables of 2^n integers indexed by mask.

The two representations convert both ways:

  * rank_from_bases    f(I) = max over bases of the I-coordinate sum
  * enumerate_bases    recover the basis set from a submodular table by
                       recursing on the last coordinate: the bases with the
                       last coordinate pinned to j project to the polymatroid
                       of the slice table min(f(I), f(I + {t}) - j)

Every submodular table with f(empty) = 0 is attained exactly (the greedy
vector for an order putting I first realizes f(I)), so the round trip is the
identity in both directions.

Validating constructors check the defining axioms (equal coordinate sums and
the basis exchange axiom, or zero-at-empty-set and submodularity).  Functions
that produce polymatroids from already-valid inputs use a trusted fast path.
All values are immutable after construction and safe to share.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import (
    EmptyBasisSet,
    EmptySlice,
    ExchangeFailure,
    FullGroundSet,
    GroundSetTooLarge,
    NonzeroEmptySet,
    OutOfRange,
    OverlappingSets,
    SizeLimitExceeded,
    SubmodularityFailure,
    UnequalSums,
    ValidationError,
)

MAX_GROUND_SET = 16
DEFAULT_MAX_BASES = 10 ** 6

Vector = tuple[int, ...]


def _check_ground_size(n: int) -> None:
    if n < 1:
        raise ValidationError(f"ground set must have at least one element, got {n}")
    if n > MAX_GROUND_SET:
        raise GroundSetTooLarge(f"n = {n} exceeds the maximum {MAX_GROUND_SET}")


def _mask_of(elements: Iterable[int], n: int) -> int:
    mask = 0
    for i in elements:
        if not 1 <= i <= n:
            raise ValidationError(f"element {i} outside 1..{n}")
        mask |= 1 << (i - 1)
    return mask


def _elements_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


class RankTable:
    """Dense integer rank function f: 2^[n] -> Z, indexed by subset mask."""

    __slots__ = ("n", "f")

    def __init__(self, n: int, values: Sequence[int], *, validate: bool = True):
        _check_ground_size(n)
        f = tuple(values)
        if len(f) != 1 << n:
            raise ValidationError(f"expected {1 << n} rank values, got {len(f)}")
        if not all(isinstance(v, int) for v in f):
            raise ValidationError("rank values must be integers")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "f", f)
        if validate:
            self.validate()

    def __setattr__(self, name, value):
        raise AttributeError("RankTable is immutable")

    def validate(self) -> "RankTable":
        """Check f(empty) = 0 and submodularity over all mask pairs."""
        f = self.f
        if f[0] != 0:
            raise NonzeroEmptySet(f"f(empty set) = {f[0]}, expected 0")
        size = len(f)
        for a in range(size):
            fa = f[a]
            for b in range(a + 1, size):
                if f[a | b] + f[a & b] > fa + f[b]:
                    raise SubmodularityFailure(a, b)
        return self

    def value(self, elements: Iterable[int]) -> int:
        """Rank of a subset given as 1-based element labels."""
        return self.f[_mask_of(elements, self.n)]

    def full_rank(self) -> int:
        return self.f[(1 << self.n) - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, RankTable) and self.n == other.n and self.f == other.f

    def __hash__(self) -> int:
        return hash((self.n, self.f))

    def __repr__(self) -> str:
        return f"RankTable(n={self.n}, f={list(self.f)})"

    def to_json(self) -> dict:
        return {"n": self.n, "f": list(self.f)}

    @staticmethod
    def from_json(data: dict) -> "RankTable":
        try:
            n = int(data["n"])
            values = [int(v) for v in data["f"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"bad rank table JSON: {exc}") from exc
        return RankTable(n, values)


class SliceRange:
    """Attained value range of one coordinate: alpha_t..beta_t.

    alpha_t = f([n]) - f([n] - {t}) is the minimum of coordinate t over the
    bases, beta_t = f({t}) is its maximum, and every value in between is
    attained (slices are nonempty exactly on this interval).
    """

    __slots__ = ("t", "alpha", "beta")

    def __init__(self, t: int, alpha: int, beta: int):
        if alpha > beta:
            raise ValidationError(f"empty slice range for element {t}: {alpha}..{beta}")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    def __setattr__(self, name, value):
        raise AttributeError("SliceRange is immutable")

    def values(self) -> range:
        return range(self.alpha, self.beta + 1)

    def spread(self) -> int:
        return self.beta - self.alpha

    def __contains__(self, j: int) -> bool:
        return self.alpha <= j <= self.beta

    def __repr__(self) -> str:
        return f"SliceRange(t={self.t}, alpha={self.alpha}, beta={self.beta})"


class Polymatroid:
    """Finite set of integer basis vectors over [n], in lexicographic order."""

    __slots__ = ("n", "bases", "_set", "_rank", "_hash")

    def __init__(self, vectors: Iterable[Sequence[int]], *, validate: bool = True):
        rows = sorted({tuple(v) for v in vectors})
        if not rows:
            raise EmptyBasisSet("a polymatroid needs at least one basis")
        n = len(rows[0])
        _check_ground_size(n)
        for v in rows:
            if len(v) != n:
                raise ValidationError(f"mixed vector lengths: {len(v)} vs {n}")
            if not all(isinstance(c, int) for c in v):
                raise ValidationError(f"non-integer coordinates in {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bases", tuple(rows))
        object.__setattr__(self, "_set", frozenset(rows))
        object.__setattr__(self, "_rank", None)
        object.__setattr__(self, "_hash", None)
        if validate:
            self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("Polymatroid is immutable")

    def _validate(self) -> None:
        rows = self.bases
        total = sum(rows[0])
        for v in rows[1:]:
            if sum(v) != total:
                raise UnequalSums(rows[0], v)
        member = self._set
        n = self.n
        for a in rows:
            for b in rows:
                if a is b:
                    continue
                for i in range(n):
                    if a[i] <= b[i]:
                        continue
                    # need j with a_j < b_j, a + e_j - e_i and b + e_i - e_j inside
                    for j in range(n):
                        if a[j] >= b[j]:
                            continue
                        a2 = list(a)
                        a2[i] -= 1
                        a2[j] += 1
                        if tuple(a2) not in member:
                            continue
                        b2 = list(b)
                        b2[i] += 1
                        b2[j] -= 1
                        if tuple(b2) in member:
                            break
                    else:
                        raise ExchangeFailure(a, b, i + 1)

    # -- queries -------------------------------------------------------------

    def __contains__(self, v) -> bool:
        return tuple(v) in self._set

    def __len__(self) -> int:
        return len(self.bases)

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.bases)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polymatroid)
            and self.n == other.n
            and self.bases == other.bases
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.n, self.bases))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        shown = ", ".join(map(str, self.bases[:4]))
        more = f", ... ({len(self.bases)} bases)" if len(self.bases) > 4 else ""
        return f"Polymatroid(n={self.n}, {{{shown}{more}}})"

    def total(self) -> int:
        """Common coordinate sum of all bases."""
        return sum(self.bases[0])

    def rank_table(self) -> RankTable:
        """Rank function recovered as subset-wise maxima (cached)."""
        cached = self._rank
        if cached is None:
            cached = rank_from_bases(self)
            object.__setattr__(self, "_rank", cached)
        return cached

    def slice_range(self, t: int) -> SliceRange:
        """Attained range of coordinate t, directly from the bases."""
        if not 1 <= t <= self.n:
            raise ValidationError(f"element {t} outside 1..{self.n}")
        col = [v[t - 1] for v in self.bases]
        return SliceRange(t, min(col), max(col))

    # -- structural operators --------------------------------------------------

    def slice(self, t: int, j: int) -> "Polymatroid":
        """Bases with coordinate t pinned to j, with that coordinate dropped."""
        rng = self.slice_range(t)
        if j not in rng:
            raise EmptySlice(f"level {j} outside {rng.alpha}..{rng.beta} for element {t}")
        k = t - 1
        picked = [v[:k] + v[k + 1 :] for v in self.bases if v[k] == j]
        return Polymatroid(picked, validate=False)

    def delete(self, elements: Iterable[int]) -> "Polymatroid":
        """Restriction to [n] - A: rank of a surviving subset is unchanged."""
        mask = _mask_of(elements, self.n)
        if mask == 0:
            return self
        if mask == (1 << self.n) - 1:
            raise FullGroundSet("cannot delete the whole ground set")
        table = self.rank_table()
        sub = _project_table(table.f, self.n, mask, contract=False)
        return enumerate_bases(RankTable(self.n - bin(mask).count("1"), sub, validate=False))

    def contract(self, elements: Iterable[int]) -> "Polymatroid":
        """Contraction by A: rank of T becomes f(T + A) - f(A)."""
        mask = _mask_of(elements, self.n)
        if mask == 0:
            return self
        if mask == (1 << self.n) - 1:
            raise FullGroundSet("cannot contract the whole ground set")
        table = self.rank_table()
        sub = _project_table(table.f, self.n, mask, contract=True)
        return enumerate_bases(RankTable(self.n - bin(mask).count("1"), sub, validate=False))

    def minor(self, delete: Iterable[int], contract: Iterable[int]) -> "Polymatroid":
        """(P - A) / B for disjoint A, B; order of operations is immaterial."""
        a = _mask_of(delete, self.n)
        b = _mask_of(contract, self.n)
        if a & b:
            raise OverlappingSets("deletion and contraction sets must be disjoint")
        if (a | b) == (1 << self.n) - 1:
            raise FullGroundSet("minor would remove the whole ground set")
        out = self
        if a:
            out = out.delete(_elements_of(a))
        if b:
            # relabel the contraction set into the surviving ground set of P - A
            out = out.contract(_relabel_after_removal(b, a))
        return out

    def dual(self) -> "Polymatroid":
        """Elementwise negation."""
        return Polymatroid([tuple(-c for c in v) for v in self.bases], validate=False)

    def translate(self, c: Sequence[int]) -> "Polymatroid":
        """Add the integer vector c to every basis."""
        c = tuple(c)
        if len(c) != self.n or not all(isinstance(v, int) for v in c):
            raise ValidationError(f"translation vector must be {self.n} integers")
        return Polymatroid(
            [tuple(a + d for a, d in zip(v, c)) for v in self.bases], validate=False
        )

    def permute(self, w: Sequence[int]) -> "Polymatroid":
        """Coordinate permutation: position k of the image reads a_{w(k)}."""
        w = tuple(w)
        if sorted(w) != list(range(1, self.n + 1)):
            raise ValidationError(f"{w} is not a permutation of 1..{self.n}")
        return Polymatroid(
            [tuple(v[wk - 1] for wk in w) for v in self.bases], validate=False
        )

    # -- serialization -----------------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "bases": [list(v) for v in self.bases]}

    @staticmethod
    def from_json(data: dict) -> "Polymatroid":
        try:
            n = int(data["n"])
            rows = [tuple(int(c) for c in row) for row in data["bases"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"bad polymatroid JSON: {exc}") from exc
        p = Polymatroid(rows)
        if p.n != n:
            raise ValidationError(f"declared n = {n} but vectors have length {p.n}")
        return p


# -- validating entry points ---------------------------------------------------


def validate_basis_set(vectors: Iterable[Sequence[int]]) -> Polymatroid:
    """Check equal coordinate sums and the exchange axiom; return the result."""
    return Polymatroid(vectors, validate=True)


def validate_rank_table(n: int, values: Sequence[int]) -> RankTable:
    """Check f(empty) = 0 and submodularity; return the table."""
    return RankTable(n, values, validate=True)


# -- conversions between representations -----------------------------------------


def rank_from_bases(p: Polymatroid) -> RankTable:
    """f(I) = max over bases of the I-coordinate sum, for every mask."""
    n = p.n
    size = 1 << n
    best = [None] * size
    for v in p.bases:
        sums = [0] * size
        for mask in range(1, size):
            low = mask & -mask
            sums[mask] = sums[mask ^ low] + v[low.bit_length() - 1]
        if best[0] is None:
            best = sums
        else:
            for mask in range(size):
                if sums[mask] > best[mask]:
                    best[mask] = sums[mask]
    return RankTable(n, best, validate=False)


def greedy_basis(table: RankTable, order: Sequence[int]) -> Vector:
    """Telescoping basis for an element order: each step takes the rank gain.

    The result always lies in the polymatroid of the table and attains f(I)
    for every prefix I of the order.
    """
    n = table.n
    order = tuple(order)
    if sorted(order) != list(range(1, n + 1)):
        raise ValidationError(f"{order} is not a permutation of 1..{n}")
    out = [0] * n
    mask = 0
    prev = 0
    for t in order:
        mask |= 1 << (t - 1)
        cur = table.f[mask]
        out[t - 1] = cur - prev
        prev = cur
    return tuple(out)


def slice_rank(table: RankTable, t: int, j: int) -> RankTable:
    """Rank table of the slice at coordinate t pinned to level j.

    The slice polymatroid over [n] - {t} has rank min(f(I), f(I + {t}) - j);
    at the extremes of the level interval this reduces to the deletion rank
    f(I) and the contraction rank f(I + {t}) - f({t}).
    """
    n = table.n
    if not 1 <= t <= n:
        raise ValidationError(f"element {t} outside 1..{n}")
    full = (1 << n) - 1
    tbit = 1 << (t - 1)
    alpha = table.f[full] - table.f[full ^ tbit]
    beta = table.f[tbit]
    if not alpha <= j <= beta:
        raise OutOfRange(f"level {j} outside {alpha}..{beta} for element {t}")
    values = _slice_table(table.f, n, t, j)
    return RankTable(n - 1, values, validate=False)


def _slice_table(f: Sequence[int], n: int, t: int, j: int) -> list[int]:
    """min(f(I), f(I + {t}) - j) with masks renumbered to n-1 bits."""
    tbit = 1 << (t - 1)
    low = tbit - 1
    out = [0] * (1 << (n - 1))
    for m in range(1 << (n - 1)):
        orig = (m & low) | ((m & ~low) << 1)
        a = f[orig]
        b = f[orig | tbit] - j
        out[m] = a if a < b else b
    return out


def _project_table(f: Sequence[int], n: int, removed: int, *, contract: bool) -> list[int]:
    """Deletion or contraction table over the surviving, renumbered elements."""
    keep_bits = [i for i in range(n) if not removed & (1 << i)]
    base = removed if contract else 0
    offset = f[removed] if contract else 0
    out = [0] * (1 << len(keep_bits))
    for m in range(len(out)):
        orig = base
        mm = m
        k = 0
        while mm:
            if mm & 1:
                orig |= 1 << keep_bits[k]
            mm >>= 1
            k += 1
        out[m] = f[orig] - offset
    return out


def _relabel_after_removal(target: int, removed: int) -> tuple[int, ...]:
    """1-based labels of the target elements inside the ground set left after
    removing ``removed`` (order-preserving renumbering; sets are disjoint)."""
    labels = []
    new_index = 0
    bit = 1
    while target:
        if not removed & bit:
            new_index += 1
            if target & bit:
                labels.append(new_index)
        target &= ~bit
        bit <<= 1
    return tuple(labels)


def surviving_labels(n: int, removed: Iterable[int]) -> tuple[int, ...]:
    """Original labels of the surviving elements, in their new order.

    After deleting/contracting/slicing, element k of the reduced ground set
    corresponds to original element surviving_labels(n, removed)[k-1].
    """
    gone = set(removed)
    return tuple(i for i in range(1, n + 1) if i not in gone)


def enumerate_bases(table: RankTable, max_bases: int = DEFAULT_MAX_BASES) -> Polymatroid:
    """All integer bases of a submodular table, via slice recursion.

    Recurses on the last coordinate: for each attainable level j the bases
    with that coordinate equal to j are exactly the bases of the slice table
    with j appended.  The result is capped at ``max_bases`` vectors.
    """
    rows = _enumerate(tuple(table.f), table.n, max_bases)
    return Polymatroid(rows, validate=False)


def _enumerate(f: tuple[int, ...], n: int, limit: int) -> list[Vector]:
    if n == 1:
        return [(f[1],)]
    full = (1 << n) - 1
    tbit = 1 << (n - 1)
    alpha = f[full] - f[full ^ tbit]
    beta = f[tbit]
    acc: list[Vector] = []
    for j in range(alpha, beta + 1):
        sub = _slice_table(f, n, n, j)
        for v in _enumerate(tuple(sub), n - 1, limit):
            acc.append(v + (j,))
        if len(acc) > limit:
            raise SizeLimitExceeded(limit)
    return acc


def in_polytope(table: RankTable, v: Sequence[int]) -> bool:
    """Membership test against the table: all subset sums within rank, total
    sum equal to the full rank."""
    n = table.n
    if len(v) != n:
        return False
    size = 1 << n
    sums = [0] * size
    for mask in range(1, size):
        low = mask & -mask
        s = sums[mask ^ low] + v[low.bit_length() - 1]
        if s > table.f[mask]:
            return False
        sums[mask] = s
    return sums[size - 1] == table.f[size - 1]


def exchange_closure(table: RankTable, max_bases: int = DEFAULT_MAX_BASES) -> Polymatroid:
    """Independent enumeration oracle: breadth-first closure of the greedy
    vertex under single-unit transfer moves a - e_i + e_j that stay inside
    the polytope.  Used to cross-check ``enumerate_bases``."""
    n = table.n
    start = greedy_basis(table, tuple(range(1, n + 1)))
    seen = {start}
    queue = [start]
    while queue:
        a = queue.pop()
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                b = list(a)
                b[i] -= 1
                b[j] += 1
                bt = tuple(b)
                if bt in seen:
                    continue
                if in_polytope(table, bt):
                    seen.add(bt)
                    queue.append(bt)
                    if len(seen) > max_bases:
                        raise SizeLimitExceeded(max_bases)
    return Polymatroid(seen, validate=False)


# -- exhaustive small-case generator -----------------------------------------------


def _union_pairs(n: int) -> list[list[tuple[int, int, int]]]:
    """For each mask m, the proper unordered pairs (a, b, a & b) with a | b = m."""
    size = 1 << n
    pairs: list[list[tuple[int, int, int]]] = [[] for _ in range(size)]
    for a in range(size):
        for b in range(a + 1, size):
            m = a | b
            if m != a and m != b:
                pairs[m].append((a, b, a & b))
    return pairs


def enumerate_small_polymatroids(
    n: int, max_rank: int, max_bases: int = DEFAULT_MAX_BASES
) -> Iterator[Polymatroid]:
    """Yield every polymatroid arising from a submodular table with values in
    0..max_rank, deduplicated by basis set.

    Candidate tables are built mask by mask in increasing numeric order;
    submodularity is enforced incrementally through the pairs whose union is
    the mask being assigned, which prunes the search exactly.
    """
    _check_ground_size(n)
    if max_rank < 0:
        raise ValidationError("max_rank must be nonnegative")
    size = 1 << n
    pairs = _union_pairs(n)
    f = [0] * size
    seen: set[tuple[Vector, ...]] = set()

    def assign(mask: int):
        if mask == size:
            rows = _enumerate(tuple(f), n, max_bases)
            key = tuple(sorted(rows))
            if key not in seen:
                seen.add(key)
                yield Polymatroid(rows, validate=False)
            return
        bound = max_rank
        for a, b, meet in pairs[mask]:
            bound = min(bound, f[a] + f[b] - f[meet])
            if bound < 0:
                return
        for v in range(bound + 1):
            f[mask] = v
            yield from assign(mask + 1)
        f[mask] = 0

    yield from assign(1)
