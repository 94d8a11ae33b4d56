from fractions import Fraction

import pytest

from srgbounds.identities import (
    CASES,
    ResidualDivisionError,
    cleared_degree,
    cleared_sides,
    general_srg_point,
    general_srg_symbols,
    random_point_crosscheck,
    rhs_term_count,
    substitute,
    type1_symbols,
    verify_identity,
    verify_identity_mutated,
)
from srgbounds.mpoly import MPoly
from srgbounds.srg import SrgParams

CASE_BY_NAME = {case.name: case for case in CASES}

EXPECTED_DEGREES = {
    "cap-negative-at-ratio-point": 6,
    "conference-level-3-shift": 3,
    "conference-level-2-shift": 3,
    "shifted-ratio-point-level-2": 9,
    "shifted-ratio-point-level-1": 9,
    "complement-exclusivity-product": 5,
    "trivial-level-at-one": 5,
    "level-monotonicity": 3,
}


def test_case_inventory():
    assert len(CASES) == 8
    assert set(CASE_BY_NAME) == set(EXPECTED_DEGREES)


@pytest.mark.parametrize("case", CASES, ids=lambda c: c.name)
def test_identity_verifies(case):
    assert verify_identity(case)


@pytest.mark.parametrize("case", CASES, ids=lambda c: c.name)
def test_cleared_degree(case):
    assert cleared_degree(case) == EXPECTED_DEGREES[case.name]


@pytest.mark.parametrize("case", CASES, ids=lambda c: c.name)
def test_every_mutation_fails(case):
    count = rhs_term_count(case)
    assert count >= 1
    for i in range(count):
        assert not verify_identity_mutated(case, i)
    with pytest.raises(IndexError):
        verify_identity_mutated(case, count)


@pytest.mark.parametrize("case", CASES, ids=lambda c: c.name)
def test_random_point_crosscheck(case):
    assert random_point_crosscheck(case, trials=100, seed=20260823)


def test_crosscheck_rejects_bad_trials():
    with pytest.raises(ValueError):
        random_point_crosscheck(CASES[0], trials=0)


def test_parameterizations_agree_on_instances():
    # integer-eigenvalue tuples plug into the general parameterization exactly
    for tup in ((10, 3, 0, 1), (50, 7, 0, 1), (144, 39, 6, 12)):
        p = SrgParams(*tup)
        sym = general_srg_point(p)
        assert sym["v"] == p.v
        assert sym["k"] == p.k
        assert sym["lam"] == p.lam
        assert sym["mu"] == p.mu


def test_type1_symbols_at_sqrt17():
    # w = sqrt(17) symbolically stands for sqrt(v); numeric w = 5 gives the
    # conference tuple shape on v = 25
    sym = type1_symbols(Fraction(5))
    assert sym["v"] == 25
    assert sym["k"] == 12
    assert sym["lam"] == 5
    assert sym["mu"] == 6
    assert sym["r"] == 2
    assert sym["s"] == -3


def test_general_srg_symbols_counting_identity():
    sym = general_srg_symbols(Fraction(2), Fraction(-3), Fraction(4))
    v, k, lam, mu = sym["v"], sym["k"], sym["lam"], sym["mu"]
    assert (v - k - 1) * mu == k * (k - lam - 1)


def test_substitute_counting_identity_is_zero():
    # (v-k-1)mu - k(k-lam-1) vanishes identically under general-srg
    v, k, lam, mu = (MPoly.var(n) for n in ("v", "k", "lam", "mu"))
    poly = (v - k - 1) * mu - k * (k - lam - 1)
    assert substitute(poly, "general-srg").is_zero()
    assert substitute(poly, "type-i").is_zero()


def test_substitute_nonzero_poly():
    out = substitute(MPoly.var("k") + 1, "type-i")
    # k + 1 = (w^2 + 1)/2
    w = MPoly.var("w")
    assert out == (w * w + 1) * Fraction(1, 2)


def test_substitute_unknown_symbol_rejected():
    with pytest.raises(ValueError):
        substitute(MPoly.var("b"), "type-i")


def test_residual_division_error():
    # a lhs with an uncleared 1/s pole must be reported, not silently dropped
    from srgbounds.identities import IdentityCase

    bad = IdentityCase(
        name="bad",
        parameterization="general-srg",
        lhs=lambda sym: sym["k"] / sym["s"],
        rhs=lambda sym: sym["k"],
        clearing={},
    )
    with pytest.raises(ResidualDivisionError):
        cleared_sides(bad)
