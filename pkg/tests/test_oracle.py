import random

import pytest
from hypothesis import given, strategies as st

from prodmeasure import (EMPTY, INF, BudgetError, CoverBudget, Finite, GenConfig, Rational,
                         Set1D, cover_search, diagonal, gen_disjoint_family, gen_rect_factors,
                         gen_tame_set1d, gen_tame_set2d, pi_cover_upper_bound, pi_outer,
                         rect, rho_cld, rho_restriction_lower_bound)
from prodmeasure.set1d import UNIT, Interval

q = Rational
D = diagonal()


def test_cover_three_columns():
    e = rect(Set1D.of_points(0, q(1, 2), 1), UNIT)
    generous = CoverBudget(grid_denominator_max=32, max_rectangles=64)
    assert pi_cover_upper_bound(e, generous) == Finite(3) == pi_outer(e)
    search = cover_search(e, generous)
    assert search.found_finite and search.verdict == "3"
    # every reported rectangle is used and together they cover e
    cover = EMPTY
    for A, B in search.rectangles:
        cover = cover | rect(A, B)
    assert e.issubset(cover)


def test_cover_diagonal():
    for budget in (CoverBudget(), CoverBudget(grid_denominator_max=4, max_rectangles=8)):
        search = cover_search(D, budget)
        assert search.value == INF and not search.found_finite
        assert search.verdict == "no finite-value cover found"


def test_cover_empty():
    assert pi_cover_upper_bound(EMPTY) == Finite(0)


def test_cover_outside_window():
    with pytest.raises(BudgetError):
        cover_search(rect(UNIT, Set1D.closed(10, 11)))


def test_budget_validation():
    with pytest.raises(ValueError):
        CoverBudget(grid_denominator_max=0)
    assert CoverBudget().to_dict()["y_window"] == "[-4,4]"


def test_rho_lower_examples():
    assert rho_restriction_lower_bound(D, 32, seed=3) == Finite(0)
    assert rho_restriction_lower_bound(rect(Set1D.of_points(q(1, 2)), Set1D.closed(0, 3))) == Finite(3)
    assert rho_restriction_lower_bound(EMPTY) == Finite(0)


def test_generators_deterministic():
    cfg = GenConfig(seed=42)
    assert gen_tame_set1d(cfg) == gen_tame_set1d(cfg)
    assert gen_tame_set2d(cfg) == gen_tame_set2d(cfg)
    assert gen_disjoint_family(cfg, 5) == gen_disjoint_family(cfg, 5)


def test_disjoint_family():
    fam = gen_disjoint_family(GenConfig(seed=1), 3)
    assert len(fam) == 3
    for i, a in enumerate(fam):
        for b in fam[i + 1:]:
            assert (a & b).is_empty()
    with pytest.raises(ValueError):
        gen_disjoint_family(GenConfig(), 21)


def test_case_mix_finite_null():
    cfg = GenConfig(seed=0, case_mix=(("finite_null", 1.0),))
    rng = random.Random(0)
    for _ in range(50):
        A, B, case = gen_rect_factors(cfg, rng)
        assert case == "finite_null" and A.is_finite() and B.is_finite()
        assert A.issubset(UNIT)


def test_genconfig_validation():
    with pytest.raises(ValueError):
        GenConfig(case_mix=(("bogus", 1.0),))
    with pytest.raises(ValueError):
        GenConfig(max_patches=0)


@given(st.integers(0, 10**6))
def test_generated_sets_are_canonical(seed):
    cfg = GenConfig(seed=seed)
    rng = random.Random(seed)
    gen_tame_set1d(cfg, rng).check_invariants()
    gen_tame_set2d(cfg, rng).check_invariants()
    A, B, _ = gen_rect_factors(cfg, rng)
    A.check_invariants()
    B.check_invariants()


@pytest.mark.parametrize("seed", range(8))
def test_sandwich_and_budget_monotone(seed):
    e = gen_tame_set2d(GenConfig(seed=seed, max_patches=3))
    small = CoverBudget(grid_denominator_max=2, max_rectangles=8)
    large = CoverBudget(grid_denominator_max=16, max_rectangles=32)
    lower = rho_restriction_lower_bound(e, 16, seed)
    assert lower <= rho_cld(e) <= pi_outer(e) <= pi_cover_upper_bound(e, large)
    assert pi_cover_upper_bound(e, large) <= pi_cover_upper_bound(e, small)
