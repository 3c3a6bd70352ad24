"""Twisted R-Hopf modules: a right module and right comodule over one Hopf
algebra whose compatibility is twisted by a map R: H (x) H -> H (x) H.

Reading of the compatibility identity (the superscript notation leaves the
slot assignment open; this is the resolved reading, pinned by tests):

    rho(m . h) = (act (x) m_H)(I_M (x) R (x) I_H)(rho (x) Delta)(m (x) h)

i.e. R is applied to the pair (m_(1), h_(1)); its first output feeds the
module action on m_(0) and its second output left-multiplies h_(2).  With
R = switch this is the classical Hopf-module axiom rho(m.h) =
sum m_(0).h_(1) (x) m_(1) h_(2), which is exactly the discriminating test.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import AntipodeNotInvertible, FieldMismatch, ShapeMismatch
from .linalg import (
    Matrix,
    TensorIndex,
    apply_kron2,
    apply_middle,
    invert,
    kron,
    permute_tensor_factors,
    switch,
)
from .report import Check, Report, matrices_equal
from .structures import HopfAlgebra


@dataclass
class TwistedHopfModule:
    H: HopfAlgebra
    dim: int
    action: Matrix  # M (x) H -> M
    coaction: Matrix  # M -> M (x) H
    R: Matrix  # H (x) H -> H (x) H

    def __post_init__(self):
        n, nh = self.dim, self.H.dim
        if self.action.shape != (n, n * nh):
            raise ShapeMismatch(f"action must be {n}x{n * nh}")
        if self.coaction.shape != (n * nh, n):
            raise ShapeMismatch(f"coaction must be {n * nh}x{n}")
        if self.R.shape != (nh * nh, nh * nh):
            raise ShapeMismatch(f"R must be {nh * nh}x{nh * nh}")
        for m in (self.action, self.coaction, self.R):
            if m.field != self.H.field:
                raise FieldMismatch("module data must share the Hopf algebra's field")

    @property
    def field(self):
        return self.H.field


def check_module(t: TwistedHopfModule) -> Report:
    """Right-module axioms for the action."""
    rep = Report("right module")
    h = t.H
    im = Matrix.identity(t.field, t.dim)
    ih = Matrix.identity(t.field, h.dim)
    rep.add(
        matrices_equal(
            "associative_action",
            t.action @ kron(t.action, ih),
            t.action @ kron(im, h.algebra.mult),
            TensorIndex((t.dim, h.dim, h.dim)),
        )
    )
    rep.add(matrices_equal("unit_acts_trivially", t.action @ kron(im, h.algebra.unit), im))
    return rep


def check_comodule(t: TwistedHopfModule) -> Report:
    """Right-comodule axioms for the coaction."""
    rep = Report("right comodule")
    h = t.H
    im = Matrix.identity(t.field, t.dim)
    ih = Matrix.identity(t.field, h.dim)
    rep.add(
        matrices_equal(
            "coassociative_coaction",
            kron(t.coaction, ih) @ t.coaction,
            kron(im, h.coalgebra.comult) @ t.coaction,
            TensorIndex((t.dim,)),
        )
    )
    rep.add(matrices_equal("counit_coacts_trivially", kron(im, h.coalgebra.counit) @ t.coaction, im))
    return rep


def _compat_sides(t: TwistedHopfModule) -> tuple[Matrix, Matrix]:
    h = t.H
    lhs = t.coaction @ t.action
    expanded = kron(t.coaction, h.coalgebra.comult)
    twisted = apply_middle(t.R, expanded, t.dim, h.dim)
    rhs = apply_kron2(t.action, h.algebra.mult, twisted)
    return lhs, rhs


def check_compatibility(t: TwistedHopfModule) -> bool:
    """The twisted compatibility rho(m.h) = sum m_(0) (R-out-1) (x) (R-out-2) h_(2)
    with R applied to m_(1) (x) h_(1)."""
    lhs, rhs = _compat_sides(t)
    return lhs == rhs


def compatibility_report(t: TwistedHopfModule) -> Report:
    rep = Report("twisted Hopf module")
    rep.subreports["module"] = check_module(t)
    rep.subreports["comodule"] = check_comodule(t)
    lhs, rhs = _compat_sides(t)
    rep.add(matrices_equal("compatibility", lhs, rhs, TensorIndex((t.dim, t.H.dim))))
    return rep


# -- the three standard twists -------------------------------------------------


def r_switch(h: HopfAlgebra) -> Matrix:
    """Classical Hopf modules."""
    return switch(h.dim, h.dim, h.field)


def r_yetter_drinfeld(h: HopfAlgebra) -> Matrix:
    """R(u (x) w) = sum w_(2) (x) S^{-1}(w_(1)) u (Yetter-Drinfel'd modules)."""
    s_inv = invert(h.antipode)
    if s_inv is None:
        raise AntipodeNotInvertible("Yetter-Drinfel'd twist needs invertible antipode")
    n = h.dim
    ih = Matrix.identity(h.field, n)
    # u (x) w -> u (x) w1 (x) w2 -> w2 (x) S^{-1}(w1) (x) u -> w2 (x) S^{-1}(w1) u
    expand = kron(ih, h.coalgebra.comult)
    reorder = permute_tensor_factors(h.field, (n, n, n), (2, 1, 0))
    return kron(ih, h.algebra.mult) @ kron(kron(ih, s_inv), ih) @ reorder @ expand


def r_long(h: HopfAlgebra) -> Matrix:
    """R(u (x) w) = eps(w) 1_H (x) u (Long dimodules)."""
    n = h.dim
    ih = Matrix.identity(h.field, n)
    return kron(h.algebra.unit, ih) @ kron(ih, h.coalgebra.counit)


# -- stock modules ----------------------------------------------------------------


def regular_module(h: HopfAlgebra, r: Matrix) -> TwistedHopfModule:
    """M = H with the regular action and the regular coaction."""
    return TwistedHopfModule(h, h.dim, h.algebra.mult, h.coalgebra.comult, r)


def regular_action_trivial_coaction(h: HopfAlgebra, r: Matrix) -> TwistedHopfModule:
    """M = H with m.h = mh and rho(m) = m (x) 1."""
    coaction = kron(Matrix.identity(h.field, h.dim), h.algebra.unit)
    return TwistedHopfModule(h, h.dim, h.algebra.mult, coaction, r)
