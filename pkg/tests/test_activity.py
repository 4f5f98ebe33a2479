"""Unit tests for tight sets, activity, and the direct Tutte polynomial."""

from __future__ import annotations

import pytest

from polytutte.activity import (
    activities,
    activities_from_tight_sets,
    exterior_direct,
    interior_direct,
    tight_sets,
    tutte_direct,
)
from polytutte.bipoly import parse
from polytutte.core import Polymatroid, enumerate_small_polymatroids
from polytutte.errors import NotABasis

U12 = Polymatroid([(1, 0), (0, 1)])
U13 = Polymatroid([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
SCALED2 = Polymatroid([(2, 0), (1, 1), (0, 2)])


def masks_to_sets(masks):
    return {frozenset(i + 1 for i in range(8) if m & (1 << i)) for m in masks}


# -- tight sets --------------------------------------------------------------


def test_tight_sets_first_basis():
    fam = tight_sets(U12, U12.rank_table(), (1, 0))
    assert masks_to_sets(fam.masks) == {frozenset(), frozenset({1}), frozenset({1, 2})}


def test_tight_sets_second_basis():
    fam = tight_sets(U12, U12.rank_table(), (0, 1))
    assert masks_to_sets(fam.masks) == {frozenset(), frozenset({2}), frozenset({1, 2})}


def test_tight_sets_contain_extremes():
    for p in (U12, U13, SCALED2):
        f = p.rank_table()
        full = (1 << p.n) - 1
        for a in p:
            fam = tight_sets(p, f, a)
            assert 0 in fam.masks and full in fam.masks


def test_tight_sets_lattice_closure():
    for p in (U12, U13, SCALED2):
        f = p.rank_table()
        for a in p:
            masks = set(tight_sets(p, f, a).masks)
            for i in masks:
                for j in masks:
                    assert (i | j) in masks and (i & j) in masks


def test_tight_sets_rejects_non_basis():
    with pytest.raises(NotABasis):
        tight_sets(U12, U12.rank_table(), (2, -1))


# -- activities ----------------------------------------------------------------


def test_activities_pair_first():
    prof = activities(U12, (1, 0))
    assert prof.int_set == {1, 2} and prof.ext_set == {1}
    assert (prof.oi, prof.oe, prof.ie) == (1, 0, 1)


def test_activities_pair_second():
    prof = activities(U12, (0, 1))
    assert prof.int_set == {1} and prof.ext_set == {1, 2}
    assert (prof.oi, prof.oe, prof.ie) == (0, 1, 1)


def test_activities_singleton():
    p = Polymatroid([(7,)])
    prof = activities(p, (7,))
    assert prof.int_set == prof.ext_set == {1}
    assert (prof.oi, prof.oe, prof.ie) == (0, 0, 1)


def test_index_one_always_doubly_active():
    for p in (U12, U13, SCALED2):
        for a in p:
            prof = activities(p, a)
            assert 1 in prof.int_set and 1 in prof.ext_set


def test_activity_counts_consistent():
    for p in (U12, U13, SCALED2):
        for a in p:
            prof = activities(p, a)
            assert prof.oi + prof.ie == len(prof.int_set)
            assert prof.oe + prof.ie == len(prof.ext_set)
            assert prof.iota_bar == p.n - len(prof.int_set)
            assert prof.eps_bar == p.n - len(prof.ext_set)


def test_activities_reject_non_basis():
    with pytest.raises(NotABasis):
        activities(U12, (1, 1))


# -- tight-set characterization agrees with the definition ------------------------


def test_tight_characterization_on_pair():
    f = U12.rank_table()
    prof = activities_from_tight_sets(U12, f, (1, 0))
    assert prof.int_set == {1, 2} and prof.ext_set == {1}


def test_tight_characterization_exhaustive_small():
    for n in (1, 2, 3):
        for p in enumerate_small_polymatroids(n, 2):
            f = p.rank_table()
            for a in p:
                assert activities(p, a) == activities_from_tight_sets(p, f, a)


# -- direct Tutte polynomial ---------------------------------------------------------


def test_tutte_single_basis():
    assert tutte_direct(Polymatroid([(3,)])) == parse("x + y - 1")


def test_tutte_pair():
    assert tutte_direct(U12) == parse("x^2 + 2*x*y + y^2 - x - y")


def test_tutte_scaled_pair():
    expected = parse("x^2 + 2*x*y + y^2 - 1")
    assert tutte_direct(SCALED2) == expected
    xy1 = parse("x + y - 1")
    assert expected == parse("x") * xy1 + xy1 + parse("y") * xy1


def test_tutte_three_singletons():
    assert tutte_direct(U13) == parse(
        "x^3 + 3*x^2*y + 3*x*y^2 + y^3 - x^2 - 3*x*y - 2*y^2 + y"
    )


def test_interior_exterior_three_singletons():
    assert interior_direct(U13) == parse("2*x + 1")
    assert exterior_direct(U13) == parse("y^2 + y + 1")


def test_interior_exterior_singleton():
    p = Polymatroid([(4,)])
    assert interior_direct(p) == parse("1")
    assert exterior_direct(p) == parse("1")


def test_exterior_scaled_pair():
    assert exterior_direct(SCALED2) == parse("2*y + 1")


# -- structural identities on small families ------------------------------------------


def small_corpus():
    out = []
    for n in (1, 2, 3):
        out.extend(enumerate_small_polymatroids(n, 2))
    return out


def test_reversal_identities_small():
    for p in small_corpus():
        t = tutte_direct(p)
        assert interior_direct(p) == t.substitute_one("y").reversed_in("x", p.n)
        assert exterior_direct(p) == t.substitute_one("x").reversed_in("y", p.n)


def test_count_and_divisibility_small():
    for p in small_corpus():
        t = tutte_direct(p)
        assert t.evaluate(1, 1) == len(p)
        assert t.divisible_by_x_plus_y_minus_1()


def test_translation_invariance_small():
    shifts = [(1,) * 3, (-2, 0, 3), (5, -5, 1)]
    for p in small_corpus():
        t = tutte_direct(p)
        for c in shifts:
            assert tutte_direct(p.translate(c[: p.n])) == t


def test_permutation_invariance_small():
    import itertools

    for p in small_corpus():
        t = tutte_direct(p)
        for w in itertools.permutations(range(1, p.n + 1)):
            assert tutte_direct(p.permute(w)) == t


def test_duality_swaps_variables_small():
    for p in small_corpus():
        assert tutte_direct(p.dual()) == tutte_direct(p).swap_vars()


def test_duality_swaps_interior_exterior_small():
    for p in small_corpus():
        assert interior_direct(p.dual()) == exterior_direct(p).swap_vars()
        assert exterior_direct(p.dual()) == interior_direct(p).swap_vars()


def test_constant_terms_are_one_small():
    for p in small_corpus():
        assert interior_direct(p).coeff(0, 0) == 1
        assert exterior_direct(p).coeff(0, 0) == 1
