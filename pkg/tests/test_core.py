"""Unit tests for polymatroid representations and structural operators."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from polytutte.core import (
    Polymatroid,
    RankTable,
    enumerate_bases,
    enumerate_small_polymatroids,
    exchange_closure,
    greedy_basis,
    in_polytope,
    rank_from_bases,
    slice_rank,
    surviving_labels,
    validate_basis_set,
    validate_rank_table,
)
from polytutte.errors import (
    EmptyBasisSet,
    EmptySlice,
    ExchangeFailure,
    FullGroundSet,
    NonzeroEmptySet,
    OutOfRange,
    OverlappingSets,
    SizeLimitExceeded,
    SubmodularityFailure,
    UnequalSums,
)


def table(n, values):
    return RankTable(n, values)


def uniform_rank_one(n):
    """f(I) = min(|I|, 1): one of everything, the n-element rank-1 polymatroid."""
    return RankTable(n, [min(bin(m).count("1"), 1) for m in range(1 << n)])


U13 = Polymatroid([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
U12 = Polymatroid([(1, 0), (0, 1)])
SCALED2 = Polymatroid([(2, 0), (1, 1), (0, 2)])


# -- basis set validation -------------------------------------------------------


def test_valid_two_element_exchange():
    p = validate_basis_set([(1, 0), (0, 1)])
    assert p.bases == ((0, 1), (1, 0))


def test_unequal_sums_rejected():
    with pytest.raises(UnequalSums):
        validate_basis_set([(1, 0), (0, 2)])


def test_exchange_failure_requires_midpoint():
    with pytest.raises(ExchangeFailure):
        validate_basis_set([(2, 0), (0, 2)])
    validate_basis_set([(2, 0), (1, 1), (0, 2)])


def test_empty_set_rejected():
    with pytest.raises(EmptyBasisSet):
        validate_basis_set([])


# -- rank recovery ----------------------------------------------------------------


def test_rank_from_bases_pair():
    f = rank_from_bases(U12)
    assert f.value([1]) == 1 and f.value([2]) == 1 and f.value([1, 2]) == 1


def test_rank_from_single_vector():
    f = rank_from_bases(Polymatroid([(5,)]))
    assert f.value([1]) == 5


def test_rank_from_bases_scaled():
    f = rank_from_bases(SCALED2)
    assert f.value([1]) == 2 and f.value([2]) == 2 and f.value([1, 2]) == 2


# -- rank table validation ----------------------------------------------------------


def test_uniform_rank_table_valid():
    validate_rank_table(3, uniform_rank_one(3).f)


def test_nonzero_empty_set_rejected():
    with pytest.raises(NonzeroEmptySet):
        validate_rank_table(2, [1, 1, 1, 1])


def test_submodularity_failure_witness():
    with pytest.raises(SubmodularityFailure) as e:
        validate_rank_table(2, [0, 0, 0, 1])
    assert {e.value.i_mask, e.value.j_mask} == {1, 2}


# -- greedy -------------------------------------------------------------------------


def test_greedy_identity_order():
    assert greedy_basis(uniform_rank_one(3), (1, 2, 3)) == (1, 0, 0)


def test_greedy_reversed_order():
    assert greedy_basis(uniform_rank_one(3), (3, 2, 1)) == (0, 0, 1)


def test_greedy_scaled():
    f = RankTable(2, [0, 2, 2, 2])
    assert greedy_basis(f, (1, 2)) == (2, 0)


# -- enumeration ----------------------------------------------------------------------


def test_enumerate_uniform_rank_one():
    assert enumerate_bases(uniform_rank_one(2)) == U12


def test_enumerate_scaled():
    assert enumerate_bases(RankTable(2, [0, 2, 2, 2])) == SCALED2


def test_enumerate_unique_basis():
    assert enumerate_bases(RankTable(2, [0, 1, 1, 2])) == Polymatroid([(1, 1)])


def test_enumerate_respects_cap():
    with pytest.raises(SizeLimitExceeded):
        enumerate_bases(RankTable(2, [0, 2, 2, 2]), max_bases=2)


def test_membership():
    assert (1, 0) in U12
    assert (2, -1) not in U12
    assert (1, 1) in SCALED2


# -- slices -------------------------------------------------------------------------


def test_slice_drops_coordinate():
    assert SCALED2.slice(2, 1) == Polymatroid([(1,)])
    assert U12.slice(1, 0) == Polymatroid([(1,)])
    assert U13.slice(3, 0) == U12


def test_slice_out_of_range():
    with pytest.raises(EmptySlice):
        U12.slice(1, 2)


def test_slice_range_matches_rank_table():
    # alpha = f([n]) - f([n]-t) and beta = f({t}) equal the attained extremes
    for p in (U12, U13, SCALED2):
        f = p.rank_table()
        full = (1 << p.n) - 1
        for t in range(1, p.n + 1):
            rng = p.slice_range(t)
            assert rng.alpha == f.f[full] - f.f[full ^ (1 << (t - 1))]
            assert rng.beta == f.f[1 << (t - 1)]


def test_slice_rank_deletion_end():
    f = uniform_rank_one(2)
    assert slice_rank(f, 2, 0).f == (0, 1)  # f^2_0({1}) = f({1}) = 1


def test_slice_rank_contraction_end():
    f = uniform_rank_one(2)
    assert slice_rank(f, 2, 1).f == (0, 0)  # f({1,2}) - f({2}) = 0


def test_slice_rank_middle_level():
    f = RankTable(2, [0, 2, 2, 2])
    assert slice_rank(f, 2, 1).f == (0, 1)  # min(2, 2 - 1)


def test_slice_rank_out_of_range():
    with pytest.raises(OutOfRange):
        slice_rank(uniform_rank_one(2), 2, 5)


def test_slice_rank_matches_sliced_bases():
    for p in (U12, U13, SCALED2):
        f = p.rank_table()
        for t in range(1, p.n + 1):
            for j in p.slice_range(t).values():
                assert slice_rank(f, t, j) == p.slice(t, j).rank_table()


def test_slice_completeness():
    for p in (U12, U13, SCALED2):
        for t in range(1, p.n + 1):
            rebuilt = []
            for j in p.slice_range(t).values():
                for v in p.slice(t, j):
                    rebuilt.append(v[: t - 1] + (j,) + v[t - 1 :])
            assert sorted(rebuilt) == list(p.bases)


# -- deletion, contraction, duality ------------------------------------------------------


def test_delete_single_element():
    assert U13.delete([3]) == U12


def test_contract_single_element():
    assert U13.contract([3]) == Polymatroid([(0, 0)])


def test_delete_nothing():
    assert U13.delete([]) == U13


def test_delete_full_ground_set_rejected():
    with pytest.raises(FullGroundSet):
        U12.delete([1, 2])


def test_single_element_cases_agree_with_slices():
    for p in (U12, U13, SCALED2):
        for t in range(1, p.n + 1):
            rng = p.slice_range(t)
            assert p.delete([t]) == p.slice(t, rng.alpha)
            assert p.contract([t]) == p.slice(t, rng.beta)


def test_dual():
    assert U12.dual() == Polymatroid([(-1, 0), (0, -1)])


def test_dual_involution():
    for p in (U12, U13, SCALED2):
        assert p.dual().dual() == p


def test_translate():
    assert U12.translate((1, 1)) == Polymatroid([(2, 1), (1, 2)])


def test_permute():
    p = Polymatroid([(2, 0, 1)])
    assert p.permute((3, 1, 2)) == Polymatroid([(1, 2, 0)])


def test_minor_identity():
    assert U13.minor([], []) == U13


def test_minor_is_deletion_when_contract_empty():
    assert U13.minor([3], []) == U12


def test_minor_rejects_overlap_and_full_removal():
    with pytest.raises(OverlappingSets):
        U13.minor([1], [1])
    with pytest.raises(FullGroundSet):
        U13.minor([1, 2], [3])


def relabel(targets, removed, n):
    kept = surviving_labels(n, removed)
    return tuple(kept.index(t) + 1 for t in targets)


def disjoint_proper_pairs(n):
    elements = range(1, n + 1)
    for a_size in range(n + 1):
        for a in itertools.combinations(elements, a_size):
            rest = [e for e in elements if e not in a]
            for b_size in range(len(rest) + 1):
                for b in itertools.combinations(rest, b_size):
                    if len(a) + len(b) < n:
                        yield a, b


def test_minor_order_independence_exhaustive_small():
    for p in small_family(2) + small_family(3):
        n = p.n
        for a, b in disjoint_proper_pairs(n):
            left = p.minor(a, b)
            assert left == p.delete(a).contract(relabel(b, a, n))
            assert left == p.contract(b).delete(relabel(a, b, n))


def test_surviving_labels():
    assert surviving_labels(5, [2, 4]) == (1, 3, 5)


# -- small-case generator ------------------------------------------------------------


def small_family(n, max_rank=2):
    return list(enumerate_small_polymatroids(n, max_rank))


def test_enumerate_small_n1():
    got = list(enumerate_small_polymatroids(1, 1))
    assert sorted(p.bases for p in got) == [((0,),), ((1,),)]


def test_enumerate_small_contains_uniform():
    assert U12 in small_family(2, 1)


def test_enumerate_small_all_pass_validation():
    for n in (1, 2, 3):
        for p in small_family(n, 2):
            validate_basis_set(p.bases)


def test_enumerate_small_no_duplicates():
    fam = small_family(3, 2)
    assert len(fam) == len({p.bases for p in fam})


# -- round trips and oracles ------------------------------------------------------------


def all_small_tables(n, max_rank):
    """Every submodular table with values in 0..max_rank, brute force."""
    size = 1 << n
    for values in itertools.product(range(max_rank + 1), repeat=size - 1):
        f = (0,) + values
        ok = True
        for a in range(size):
            for b in range(a + 1, size):
                if f[a | b] + f[a & b] > f[a] + f[b]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield RankTable(n, f, validate=False)


def test_round_trip_exhaustive_small():
    for n in (1, 2):
        for f in all_small_tables(n, 2):
            assert rank_from_bases(enumerate_bases(f)) == f


def test_round_trip_n3():
    count = 0
    for f in all_small_tables(3, 3):
        assert rank_from_bases(enumerate_bases(f)) == f
        count += 1
    assert count > 1000


def test_exchange_closure_matches_enumeration():
    for f in all_small_tables(2, 2):
        assert exchange_closure(f) == enumerate_bases(f)
    for f in itertools.islice(all_small_tables(3, 2), 0, None, 7):
        assert exchange_closure(f) == enumerate_bases(f)


def test_in_polytope():
    f = uniform_rank_one(2)
    assert in_polytope(f, (1, 0))
    assert not in_polytope(f, (2, -1))
    assert not in_polytope(f, (0, 0))


# -- randomized properties -----------------------------------------------------------


@st.composite
def random_tables(draw, max_n=3):
    """Submodular tables built from truncated weighted coverage functions."""
    n = draw(st.integers(1, max_n))
    universe = draw(st.integers(1, 4))
    weights = draw(
        st.lists(st.integers(1, 3), min_size=universe, max_size=universe)
    )
    covers = [
        draw(st.sets(st.integers(0, universe - 1), min_size=1, max_size=universe))
        for _ in range(n)
    ]
    cap = draw(st.integers(0, sum(weights)))
    size = 1 << n
    values = []
    for mask in range(size):
        covered = set()
        for i in range(n):
            if mask & (1 << i):
                covered |= covers[i]
        g = sum(weights[q] for q in covered)
        values.append(min(g, cap) if mask else 0)
    shift = draw(
        st.lists(st.integers(-2, 2), min_size=n, max_size=n)
    )
    shifted = []
    for mask in range(size):
        s = sum(shift[i] for i in range(n) if mask & (1 << i))
        shifted.append(values[mask] + s)
    return RankTable(n, shifted)


@settings(max_examples=60, deadline=None)
@given(random_tables())
def test_round_trip_random(f):
    assert rank_from_bases(enumerate_bases(f)) == f


@settings(max_examples=40, deadline=None)
@given(random_tables())
def test_slice_rank_matches_brute_force_random(f):
    p = enumerate_bases(f)
    for t in range(1, p.n + 1):
        if p.n == 1:
            continue
        rebuilt = []
        for j in p.slice_range(t).values():
            sliced = p.slice(t, j)
            assert slice_rank(f, t, j) == rank_from_bases(sliced)
            rebuilt.extend(v[: t - 1] + (j,) + v[t - 1 :] for v in sliced)
        assert sorted(rebuilt) == list(p.bases)


@settings(max_examples=40, deadline=None)
@given(random_tables())
def test_greedy_always_a_basis(f):
    p = enumerate_bases(f)
    n = f.n
    for order in itertools.islice(itertools.permutations(range(1, n + 1)), 6):
        assert greedy_basis(f, order) in p
