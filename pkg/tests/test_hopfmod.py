import pytest

from smashkit.catalog import GroupTable, dual_group_algebra, en, group_algebra, sweedler, taft
from smashkit.fields import FieldSpec
from smashkit.hopfmod import (
    TwistedHopfModule,
    check_comodule,
    check_compatibility,
    check_module,
    compatibility_report,
    r_long,
    r_switch,
    r_yetter_drinfeld,
    regular_action_trivial_coaction,
    regular_module,
)
from smashkit.linalg import Matrix, kron, switch

QQ = FieldSpec.rational()


def kc2():
    return group_algebra(GroupTable.cyclic(2), QQ)


def trivial_module(h):
    """M = k with action eps and coaction 1 (x) unit."""
    action = h.coalgebra.counit  # 1 x (1*nh): M (x) H -> M with dim M = 1
    coaction = h.algebra.unit  # nh x 1: M -> M (x) H
    return TwistedHopfModule(h, 1, action, coaction, r_switch(h))


# -- module / comodule axioms --------------------------------------------------


def test_regular_module_axioms():
    h = kc2()
    t = regular_module(h, r_switch(h))
    assert check_module(t).passed
    assert check_comodule(t).passed


def test_trivial_module_axioms():
    h = kc2()
    t = trivial_module(h)
    assert check_module(t).passed
    assert check_comodule(t).passed


def test_zeroed_action_fails():
    h = kc2()
    t = TwistedHopfModule(
        h, h.dim, Matrix.zeros(QQ, 2, 4), h.coalgebra.comult, r_switch(h)
    )
    assert not check_module(t).passed


# -- compatibility: classical Hopf modules ---------------------------------------


def test_switch_regular_is_classical_hopf_module():
    # the pinned reading of the compatibility must make (H, regular, regular,
    # switch) a twisted module for every catalog Hopf algebra
    for h in (
        kc2(),
        group_algebra(GroupTable.direct_product(GroupTable.cyclic(2), GroupTable.cyclic(2)), QQ),
        dual_group_algebra(GroupTable.cyclic(3), FieldSpec.prime(7)),
        sweedler().K,
        taft(3, 7).K,
        en(2).K,
    ):
        t = regular_module(h, r_switch(h))
        assert check_module(t).passed and check_comodule(t).passed
        assert check_compatibility(t)


def test_switch_trivial_coaction_fails_for_h4():
    h4 = sweedler().K
    t = regular_action_trivial_coaction(h4, r_switch(h4))
    assert check_module(t).passed and check_comodule(t).passed
    assert not check_compatibility(t)
    rep = compatibility_report(t)
    assert not rep.passed


def test_switch_reading_matches_classical_formula():
    # rhs composite equals sum m_(0) h_(1) (x) m_(1) h_(2) for R = switch
    h = sweedler().K
    t = regular_module(h, r_switch(h))
    n = h.dim
    ih = Matrix.identity(QQ, n)
    classical = (
        kron(h.algebra.mult, h.algebra.mult)
        @ kron(ih, kron(switch(n, n, QQ), ih))
        @ kron(h.coalgebra.comult, h.coalgebra.comult)
    )
    assert t.coaction @ t.action == classical


# -- the three twists --------------------------------------------------------------


def test_r_long_on_kc2():
    h = kc2()
    r = r_long(h)
    # R(g (x) g) = eps(g) 1 (x) g = 1 (x) g: input (1,1) flat 3 -> output (0,1) flat 1
    assert r @ Matrix.basis_column(QQ, 4, 3) == Matrix.basis_column(QQ, 4, 1)


def test_r_yd_group_algebra_formula():
    # printed formula on group-likes: R(h (x) g) = g (x) g^{-1} h
    for table in (GroupTable.cyclic(2), GroupTable.cyclic(3)):
        h = group_algebra(table, QQ)
        r = r_yetter_drinfeld(h)
        n = h.dim
        for i in range(n):
            for j in range(n):
                src = kron(Matrix.basis_column(QQ, n, i), Matrix.basis_column(QQ, n, j))
                k = table.cayley[table.inverse[j]][i]
                dst = kron(Matrix.basis_column(QQ, n, j), Matrix.basis_column(QQ, n, k))
                assert r @ src == dst


def test_yd_twist_accepts_trivial_coaction_module():
    # M = H with regular action and trivial coaction is a YD module over a
    # group algebra (the grading is trivial, conjugation collapses)
    for table in (GroupTable.cyclic(2), GroupTable.cyclic(3)):
        h = group_algebra(table, QQ)
        t = regular_action_trivial_coaction(h, r_yetter_drinfeld(h))
        assert check_compatibility(t)


def test_yd_regular_pair_is_not_yd_module():
    # the regular action/coaction pair is a Hopf module, not a YD module
    h = kc2()
    t = regular_module(h, r_yetter_drinfeld(h))
    assert not check_compatibility(t)


def test_long_fixture_behaviour():
    # The printed twist R(u (x) w) = eps(w) 1 (x) u forces, under the pinned
    # reading, the compatibility rho(m h) = sum m_(0) (x) m_(1) h.  For M = H
    # with regular action and trivial coaction the two sides are m h (x) 1 and
    # m (x) h, so the fixture FAILS; see the acceptance notes.
    h = kc2()
    t = regular_action_trivial_coaction(h, r_long(h))
    assert check_module(t).passed and check_comodule(t).passed
    assert not check_compatibility(t)


def test_long_twist_shapes_and_formula():
    h4 = sweedler().K
    r = r_long(h4)
    n = h4.dim
    ih = Matrix.identity(QQ, n)
    assert r == kron(h4.algebra.unit, ih) @ kron(ih, h4.coalgebra.counit)
