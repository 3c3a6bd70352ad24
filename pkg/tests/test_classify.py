import itertools
import random

import pytest

from smashkit.classify import (
    SearchSpace,
    c2c2_R,
    enumerate_normal_R,
    kc2_algebra,
    normal_R,
    paper_families,
    thm25_exhaustive_gf2,
    verify_c2c2_system,
    verify_paper_families,
)
from smashkit.errors import BudgetExceeded, UnitNotFirstBasisVector
from smashkit.fields import FieldSpec, Scalar
from smashkit.linalg import Matrix
from smashkit.smash import SmashData, is_left_multiplicative, is_right_multiplicative, is_smash_product
from smashkit.structures import FiniteDimAlgebra

QQ = FieldSpec.rational()
GF2 = FieldSpec.prime(2)
GF3 = FieldSpec.prime(3)
GF5 = FieldSpec.prime(5)


def test_enumeration_gf3_count_and_families():
    a = kc2_algebra(GF3)
    sols = enumerate_normal_R(a, kc2_algebra(GF3))
    assert len(sols) == 8  # 1 + 3 + 4
    enum_keys = {r.key() for r, _ in sols}
    fam_keys = set()
    for _, tuples in paper_families(GF3):
        for t in tuples:
            fam_keys.add(c2c2_R(*t).R.key())
    assert enum_keys == fam_keys


def test_enumeration_gf2_count():
    a = kc2_algebra(GF2)
    sols = enumerate_normal_R(a, kc2_algebra(GF2))
    assert len(sols) == 3  # overlap of (a)(i) delta=0 with (a)(ii) beta=0


def test_enumeration_dim1():
    k = FiniteDimAlgebra.from_products(GF3, 1, {(0, 0): [(0, 1)]})
    sols = enumerate_normal_R(k, k)
    assert len(sols) == 1
    assert sols[0][0] == Matrix.identity(GF3, 1)


def test_enumeration_deterministic():
    a = kc2_algebra(GF3)
    first = [r.key() for r, _ in enumerate_normal_R(a, kc2_algebra(GF3))]
    second = [r.key() for r, _ in enumerate_normal_R(a, kc2_algebra(GF3))]
    assert first == second


def test_budget_and_cap():
    a = kc2_algebra(GF3)
    with pytest.raises(BudgetExceeded):
        enumerate_normal_R(a, kc2_algebra(GF3), budget=10)
    big = FiniteDimAlgebra.from_products(
        GF3, 3, {(0, 0): [(0, 1)], (0, 1): [(1, 1)], (1, 0): [(1, 1)],
                 (0, 2): [(2, 1)], (2, 0): [(2, 1)], (1, 1): [(2, 1)],
                 (1, 2): [(0, 1)], (2, 1): [(0, 1)], (2, 2): [(1, 1)]},
    )
    with pytest.raises(BudgetExceeded):
        SearchSpace.build(big, big)


def test_unit_must_be_first():
    # put the unit at index 1 instead of 0
    field = GF3
    a = FiniteDimAlgebra.from_products(
        field, 2, {(0, 0): [(1, 1)], (0, 1): [(0, 1)], (1, 0): [(0, 1)], (1, 1): [(1, 1)]},
        unit_index=1,
    )
    with pytest.raises(UnitNotFirstBasisVector):
        SearchSpace.build(a, a)


# -- the eight-equation system -----------------------------------------------------


def test_system_family_b_i():
    one = Scalar.one(QQ)
    zero = Scalar.zero(QQ)
    assert verify_c2c2_system(one, zero, zero, zero)


def test_system_family_b_ii_all_delta():
    one = Scalar.one(QQ)
    zero = Scalar.zero(QQ)
    for d in (0, 1, -1, 7):
        assert verify_c2c2_system(-one, zero, zero, Scalar(QQ, d))


def test_system_rejects_1100():
    one = Scalar.one(QQ)
    zero = Scalar.zero(QQ)
    assert not verify_c2c2_system(one, one, zero, zero)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_system_matches_generic_checker_exhaustively(p):
    field = FieldSpec.prime(p)
    for a, b, c, d in itertools.product(range(p), repeat=4):
        t = (Scalar(field, a), Scalar(field, b), Scalar(field, c), Scalar(field, d))
        data = c2c2_R(*t)
        generic = is_left_multiplicative(data) and is_right_multiplicative(data)
        assert verify_c2c2_system(*t) == generic


def test_verify_paper_families_gf3():
    rep = verify_paper_families(GF3)
    assert rep.passed
    assert rep.check("families_equal_enumeration").passed


def test_verify_paper_families_gf2():
    rep = verify_paper_families(GF2)
    assert rep.passed


def test_verify_paper_families_rational_samples():
    rep = verify_paper_families(QQ)
    assert rep.passed  # all sampled family members are smash products


# -- slow tier ----------------------------------------------------------------------


@pytest.mark.slow
def test_thm25_exhaustive_gf2_sweep():
    stats = thm25_exhaustive_gf2()
    assert stats["agreement"]
    assert stats["total"] == 65536
    # the 3 normal solutions are among the smash products; non-normal R can
    # never pass (unit axiom), so the sweep must find exactly the normal ones
    assert stats["smash_products"] == 3
