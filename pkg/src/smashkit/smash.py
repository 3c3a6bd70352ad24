"""Twisted tensor-product algebras A #_R B.

R is a linear map B (x) A -> A (x) B and the candidate multiplication on
A (x) B is (m_A (x) m_B)(I_A (x) R (x) I_B).  The module provides the three
equivalent characterizations of when this is an associative unital algebra
(direct axioms; normal + octagon; normal + both pentagons), recovery of R
from a factorisation witness, and the universal property of the product.

is_smash_product evaluates all three characterizations and raises
InternalConsistencyError if they ever disagree, turning the equivalence
theorem into a continuously running self-test.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CompatibilityFailed,
    FieldMismatch,
    InternalConsistencyError,
    NotAlgebraMap,
    ShapeMismatch,
    ZetaNotBijective,
)
from .linalg import Matrix, TensorIndex, invert, kron, kron_all, switch
from .report import Check, Report, matrices_equal
from .structures import FiniteDimAlgebra, check_algebra, is_unital_algebra_map


@dataclass
class SmashData:
    """Two algebras plus a twisting map R: B (x) A -> A (x) B."""

    A: FiniteDimAlgebra
    B: FiniteDimAlgebra
    R: Matrix

    def __post_init__(self):
        na, nb = self.A.dim, self.B.dim
        if self.A.field != self.B.field or self.R.field != self.A.field:
            raise FieldMismatch("smash data must live over one field")
        if self.R.shape != (na * nb, nb * na):
            raise ShapeMismatch(
                f"R must be {na * nb}x{nb * na} (domain B(x)A, codomain A(x)B), got {self.R.shape}"
            )

    @property
    def field(self):
        return self.A.field


@dataclass
class FactorisationWitnessAlg:
    """Candidate algebra factorisation X = AB: maps i_A, i_B into X."""

    A: FiniteDimAlgebra
    B: FiniteDimAlgebra
    X: FiniteDimAlgebra
    iA: Matrix
    iB: Matrix


def build_smash(d: SmashData) -> FiniteDimAlgebra:
    """The candidate algebra A #_R B; associativity is NOT validated here."""
    a, b = d.A, d.B
    ia = Matrix.identity(d.field, a.dim)
    ib = Matrix.identity(d.field, b.dim)
    mult = kron(a.mult, b.mult) @ kron_all(ia, d.R, ib)
    names = None
    if a.basis_names and b.basis_names:
        names = [f"{x}#{y}" for x in a.basis_names for y in b.basis_names]
    return FiniteDimAlgebra(d.field, a.dim * b.dim, mult, kron(a.unit, b.unit), names)


# -- normality (unit compatibility of R) -------------------------------------


def is_left_normal(d: SmashData) -> bool:
    """R(b (x) 1_A) = 1_A (x) b for all b."""
    ib = Matrix.identity(d.field, d.B.dim)
    return d.R @ kron(ib, d.A.unit) == kron(d.A.unit, ib)


def is_right_normal(d: SmashData) -> bool:
    """R(1_B (x) a) = a (x) 1_B for all a."""
    ia = Matrix.identity(d.field, d.A.dim)
    return d.R @ kron(d.B.unit, ia) == kron(ia, d.B.unit)


def is_normal(d: SmashData) -> bool:
    return is_left_normal(d) and is_right_normal(d)


# -- multiplicativity (pentagons) and the octagon ------------------------------


def _pentagon_left(d: SmashData) -> tuple[Matrix, Matrix]:
    a, b, r = d.A, d.B, d.R
    ia = Matrix.identity(d.field, a.dim)
    ib = Matrix.identity(d.field, b.dim)
    lhs = r @ kron(b.mult, ia)
    rhs = kron(ia, b.mult) @ kron(r, ib) @ kron(ib, r)
    return lhs, rhs


def _pentagon_right(d: SmashData) -> tuple[Matrix, Matrix]:
    a, b, r = d.A, d.B, d.R
    ia = Matrix.identity(d.field, a.dim)
    ib = Matrix.identity(d.field, b.dim)
    lhs = r @ kron(ib, a.mult)
    rhs = kron(a.mult, ib) @ kron(ia, r) @ kron(r, ia)
    return lhs, rhs


def is_left_multiplicative(d: SmashData) -> bool:
    lhs, rhs = _pentagon_left(d)
    return lhs == rhs


def is_right_multiplicative(d: SmashData) -> bool:
    lhs, rhs = _pentagon_right(d)
    return lhs == rhs


def _octagon(d: SmashData) -> tuple[Matrix, Matrix]:
    a, b, r = d.A, d.B, d.R
    ia = Matrix.identity(d.field, a.dim)
    ib = Matrix.identity(d.field, b.dim)
    path1 = kron(ia, b.mult) @ kron(r, ib) @ kron_all(ib, a.mult, ib) @ kron_all(ib, ia, r)
    path2 = kron(a.mult, ib) @ kron(ia, r) @ kron_all(ia, b.mult, ia) @ kron_all(r, ib, ia)
    return path1, path2


def is_octagonal(d: SmashData) -> bool:
    """The single composite identity equivalent to associativity of A #_R B."""
    path1, path2 = _octagon(d)
    return path1 == path2


# -- the three-way characterization --------------------------------------------


def is_smash_product(d: SmashData) -> Report:
    """Evaluate all three characterizations of 'A #_R B is a smash product'.

    (1) direct associativity + unit of the built algebra, (2) normal + octagon,
    (3) normal + both pentagons.  The three verdicts provably agree; any
    disagreement is raised as an internal-consistency error.
    """
    na, nb = d.A.dim, d.B.dim
    rep = Report("smash product")
    direct = check_algebra(build_smash(d))
    rep.subreports["direct"] = direct

    ln = rep.add(Check("left_normal", is_left_normal(d)))
    rn = rep.add(Check("right_normal", is_right_normal(d)))
    o1, o2 = _octagon(d)
    oct_ = rep.add(matrices_equal("octagon", o1, o2, TensorIndex((nb, na, nb, na))))
    p1l, p1r = _pentagon_left(d)
    p1 = rep.add(matrices_equal("left_pentagon", p1l, p1r, TensorIndex((nb, nb, na))))
    p2l, p2r = _pentagon_right(d)
    p2 = rep.add(matrices_equal("right_pentagon", p2l, p2r, TensorIndex((nb, na, na))))

    char_direct = direct.passed
    char_octagon = ln.passed and rn.passed and oct_.passed
    char_pentagon = ln.passed and rn.passed and p1.passed and p2.passed
    rep.add(Check("characterization_direct", char_direct))
    rep.add(Check("characterization_normal_octagon", char_octagon))
    rep.add(Check("characterization_normal_pentagons", char_pentagon))
    if not (char_direct == char_octagon == char_pentagon):
        raise InternalConsistencyError(
            f"equivalence violated: direct={char_direct} octagon={char_octagon} "
            f"pentagons={char_pentagon}"
        )
    return rep


# -- factorisation recovery ------------------------------------------------------


def inclusion_A(d: SmashData) -> Matrix:
    """i_A: a |-> a # 1_B."""
    return kron(Matrix.identity(d.field, d.A.dim), d.B.unit)


def inclusion_B(d: SmashData) -> Matrix:
    """i_B: b |-> 1_A # b."""
    return kron(d.A.unit, Matrix.identity(d.field, d.B.dim))


def canonical_witness(d: SmashData) -> FactorisationWitnessAlg:
    """The tautological factorisation of a smash product by its own inclusions."""
    return FactorisationWitnessAlg(d.A, d.B, build_smash(d), inclusion_A(d), inclusion_B(d))


def recover_R(w: FactorisationWitnessAlg) -> SmashData:
    """Recover the twisting map from an algebra factorisation witness.

    R = zeta^{-1} . m_X . (i_B (x) i_A) with zeta = m_X . (i_A (x) i_B);
    the result is re-verified to be a smash product with zeta an algebra
    isomorphism before returning.
    """
    a, b, x = w.A, w.B, w.X
    if not is_unital_algebra_map(w.iA, a, x):
        raise NotAlgebraMap("iA is not a unital algebra map")
    if not is_unital_algebra_map(w.iB, b, x):
        raise NotAlgebraMap("iB is not a unital algebra map")
    zeta = x.mult @ kron(w.iA, w.iB)
    if zeta.rows != zeta.cols:
        raise ZetaNotBijective(f"zeta is {zeta.rows}x{zeta.cols}, not square")
    zeta_inv = invert(zeta)
    if zeta_inv is None:
        raise ZetaNotBijective("zeta = m_X(iA (x) iB) is singular")
    r = zeta_inv @ x.mult @ kron(w.iB, w.iA)
    d = SmashData(a, b, r)
    if not is_smash_product(d).passed:
        raise InternalConsistencyError("recovered R fails the smash-product checks")
    smash = build_smash(d)
    if not (zeta @ smash.mult == x.mult @ kron(zeta, zeta) and zeta @ smash.unit == x.unit):
        raise InternalConsistencyError("zeta is not an algebra isomorphism onto X")
    return d


def universal_map(d: SmashData, x: FiniteDimAlgebra, u: Matrix, v: Matrix) -> Matrix:
    """The unique algebra map w: A #_R B -> X with w . i_A = u and w . i_B = v.

    Requires m_X(v (x) u) = m_X(u (x) v) R (the compatibility making
    w(a # b) = u(a)v(b) multiplicative).
    """
    if not is_smash_product(d).passed:
        raise ValueError("universal_map requires smash-product data")
    if not is_unital_algebra_map(u, d.A, x):
        raise NotAlgebraMap("u is not a unital algebra map")
    if not is_unital_algebra_map(v, d.B, x):
        raise NotAlgebraMap("v is not a unital algebra map")
    if x.mult @ kron(v, u) != x.mult @ kron(u, v) @ d.R:
        raise CompatibilityFailed("m_X(v (x) u) != m_X(u (x) v) R")
    w = x.mult @ kron(u, v)
    smash = build_smash(d)
    ok = (
        is_unital_algebra_map(w, smash, x)
        and w @ inclusion_A(d) == u
        and w @ inclusion_B(d) == v
    )
    if not ok:
        raise InternalConsistencyError("universal map failed its guaranteed properties")
    return w


def smash_of_tensor_product(a: FiniteDimAlgebra, b: FiniteDimAlgebra) -> SmashData:
    """The ordinary tensor product as smash data (R = switch)."""
    return SmashData(a, b, switch(b.dim, a.dim, a.field))
