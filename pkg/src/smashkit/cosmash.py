"""Twisted tensor-product coalgebras (smash coproducts).

W is a linear map C (x) D -> D (x) C and the candidate comultiplication on
C (x) D is (I_C (x) W (x) I_D)(Delta_C (x) Delta_D) with counit
eps_C (x) eps_D.  Everything mirrors the algebra side under duality, and
duality_bridge makes that mirror executable: transposing W turns a smash
coproduct into a smash product of the dual algebras, with structure
constants equal on the nose.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CompatibilityFailed,
    EtaNotBijective,
    FieldMismatch,
    InternalConsistencyError,
    NotCoalgebraMap,
    ShapeMismatch,
)
from .linalg import Matrix, TensorIndex, invert, kron, kron_all, switch
from .report import Check, Report, matrices_equal
from .smash import SmashData
from .structures import (
    FiniteDimCoalgebra,
    check_coalgebra,
    dual_map,
    dual_of_coalgebra,
    is_counital_coalgebra_map,
)


@dataclass
class CosmashData:
    """Two coalgebras plus a twisting map W: C (x) D -> D (x) C."""

    C: FiniteDimCoalgebra
    D: FiniteDimCoalgebra
    W: Matrix

    def __post_init__(self):
        nc, nd = self.C.dim, self.D.dim
        if self.C.field != self.D.field or self.W.field != self.C.field:
            raise FieldMismatch("cosmash data must live over one field")
        if self.W.shape != (nd * nc, nc * nd):
            raise ShapeMismatch(
                f"W must be {nd * nc}x{nc * nd} (domain C(x)D, codomain D(x)C), got {self.W.shape}"
            )

    @property
    def field(self):
        return self.C.field


@dataclass
class FactorisationWitnessCoalg:
    """Candidate coalgebra factorisation Y = CD: maps p_C, p_D out of Y."""

    C: FiniteDimCoalgebra
    D: FiniteDimCoalgebra
    Y: FiniteDimCoalgebra
    pC: Matrix
    pD: Matrix


def build_cosmash(d: CosmashData) -> FiniteDimCoalgebra:
    """The candidate coalgebra C _W|> D; coassociativity is NOT validated here."""
    c, dd = d.C, d.D
    ic = Matrix.identity(d.field, c.dim)
    idd = Matrix.identity(d.field, dd.dim)
    comult = kron_all(ic, d.W, idd) @ kron(c.comult, dd.comult)
    names = None
    if c.basis_names and dd.basis_names:
        names = [f"{x}|>{y}" for x in c.basis_names for y in dd.basis_names]
    return FiniteDimCoalgebra(d.field, c.dim * dd.dim, comult, kron(c.counit, dd.counit), names)


# -- conormality (counit compatibility of W) -----------------------------------


def is_left_conormal(d: CosmashData) -> bool:
    """(I_D (x) eps_C) W = eps_C (x) I_D."""
    idd = Matrix.identity(d.field, d.D.dim)
    return kron(idd, d.C.counit) @ d.W == kron(d.C.counit, idd)


def is_right_conormal(d: CosmashData) -> bool:
    """(eps_D (x) I_C) W = I_C (x) eps_D."""
    ic = Matrix.identity(d.field, d.C.dim)
    return kron(d.D.counit, ic) @ d.W == kron(ic, d.D.counit)


def is_conormal(d: CosmashData) -> bool:
    return is_left_conormal(d) and is_right_conormal(d)


# -- comultiplicativity (co-pentagons) and the co-octagon -----------------------


def _copentagon_left(d: CosmashData) -> tuple[Matrix, Matrix]:
    c, dd, w = d.C, d.D, d.W
    ic = Matrix.identity(d.field, c.dim)
    idd = Matrix.identity(d.field, dd.dim)
    lhs = kron(dd.comult, ic) @ w
    rhs = kron(idd, w) @ kron(w, idd) @ kron(ic, dd.comult)
    return lhs, rhs


def _copentagon_right(d: CosmashData) -> tuple[Matrix, Matrix]:
    c, dd, w = d.C, d.D, d.W
    ic = Matrix.identity(d.field, c.dim)
    idd = Matrix.identity(d.field, dd.dim)
    lhs = kron(idd, c.comult) @ w
    rhs = kron(w, ic) @ kron(ic, w) @ kron(c.comult, idd)
    return lhs, rhs


def is_left_comultiplicative(d: CosmashData) -> bool:
    lhs, rhs = _copentagon_left(d)
    return lhs == rhs


def is_right_comultiplicative(d: CosmashData) -> bool:
    lhs, rhs = _copentagon_right(d)
    return lhs == rhs


def _cooctagon(d: CosmashData) -> tuple[Matrix, Matrix]:
    c, dd, w = d.C, d.D, d.W
    ic = Matrix.identity(d.field, c.dim)
    idd = Matrix.identity(d.field, dd.dim)
    path1 = kron_all(idd, ic, w) @ kron_all(idd, c.comult, idd) @ kron(w, idd) @ kron(ic, dd.comult)
    path2 = kron_all(w, idd, ic) @ kron_all(ic, dd.comult, ic) @ kron(ic, w) @ kron(c.comult, idd)
    return path1, path2


def is_cooctagonal(d: CosmashData) -> bool:
    path1, path2 = _cooctagon(d)
    return path1 == path2


# -- the three-way characterization ---------------------------------------------


def is_smash_coproduct(d: CosmashData) -> Report:
    """Dual of is_smash_product; the three characterizations are cross-checked."""
    nc, nd = d.C.dim, d.D.dim
    rep = Report("smash coproduct")
    direct = check_coalgebra(build_cosmash(d))
    rep.subreports["direct"] = direct

    ln = rep.add(Check("left_conormal", is_left_conormal(d)))
    rn = rep.add(Check("right_conormal", is_right_conormal(d)))
    o1, o2 = _cooctagon(d)
    oct_ = rep.add(matrices_equal("cooctagon", o1, o2, TensorIndex((nc, nd))))
    p1l, p1r = _copentagon_left(d)
    p1 = rep.add(matrices_equal("left_copentagon", p1l, p1r, TensorIndex((nc, nd))))
    p2l, p2r = _copentagon_right(d)
    p2 = rep.add(matrices_equal("right_copentagon", p2l, p2r, TensorIndex((nc, nd))))

    char_direct = direct.passed
    char_octagon = ln.passed and rn.passed and oct_.passed
    char_pentagon = ln.passed and rn.passed and p1.passed and p2.passed
    rep.add(Check("characterization_direct", char_direct))
    rep.add(Check("characterization_conormal_cooctagon", char_octagon))
    rep.add(Check("characterization_conormal_copentagons", char_pentagon))
    if not (char_direct == char_octagon == char_pentagon):
        raise InternalConsistencyError(
            f"equivalence violated: direct={char_direct} cooctagon={char_octagon} "
            f"copentagons={char_pentagon}"
        )
    return rep


# -- factorisation recovery --------------------------------------------------------


def projection_C(d: CosmashData) -> Matrix:
    """p_C: c |> d |-> eps_D(d) c."""
    return kron(Matrix.identity(d.field, d.C.dim), d.D.counit)


def projection_D(d: CosmashData) -> Matrix:
    """p_D: c |> d |-> eps_C(c) d."""
    return kron(d.C.counit, Matrix.identity(d.field, d.D.dim))


def canonical_witness(d: CosmashData) -> FactorisationWitnessCoalg:
    return FactorisationWitnessCoalg(d.C, d.D, build_cosmash(d), projection_C(d), projection_D(d))


def recover_W(w: FactorisationWitnessCoalg) -> CosmashData:
    """Recover W = (p_D (x) p_C) . Delta_Y . eta^{-1} from a coalgebra
    factorisation witness, re-verifying the smash-coproduct property and that
    eta: Y -> C _W|> D is a coalgebra isomorphism."""
    c, dd, y = w.C, w.D, w.Y
    if not is_counital_coalgebra_map(w.pC, y, c):
        raise NotCoalgebraMap("pC is not a counital coalgebra map")
    if not is_counital_coalgebra_map(w.pD, y, dd):
        raise NotCoalgebraMap("pD is not a counital coalgebra map")
    eta = kron(w.pC, w.pD) @ y.comult
    if eta.rows != eta.cols:
        raise EtaNotBijective(f"eta is {eta.rows}x{eta.cols}, not square")
    eta_inv = invert(eta)
    if eta_inv is None:
        raise EtaNotBijective("eta = (pC (x) pD) Delta_Y is singular")
    wmap = kron(w.pD, w.pC) @ y.comult @ eta_inv
    d = CosmashData(c, dd, wmap)
    if not is_smash_coproduct(d).passed:
        raise InternalConsistencyError("recovered W fails the smash-coproduct checks")
    cos = build_cosmash(d)
    if not (cos.comult @ eta == kron(eta, eta) @ y.comult and cos.counit @ eta == y.counit):
        raise InternalConsistencyError("eta is not a coalgebra isomorphism onto C _W|> D")
    return d


def universal_comap(d: CosmashData, y: FiniteDimCoalgebra, u: Matrix, v: Matrix) -> Matrix:
    """The unique coalgebra map w: Y -> C _W|> D with p_C w = u and p_D w = v.

    Requires (v (x) u) Delta_Y = W (u (x) v) Delta_Y.
    """
    if not is_smash_coproduct(d).passed:
        raise ValueError("universal_comap requires smash-coproduct data")
    if not is_counital_coalgebra_map(u, y, d.C):
        raise NotCoalgebraMap("u is not a counital coalgebra map")
    if not is_counital_coalgebra_map(v, y, d.D):
        raise NotCoalgebraMap("v is not a counital coalgebra map")
    if kron(v, u) @ y.comult != d.W @ kron(u, v) @ y.comult:
        raise CompatibilityFailed("(v (x) u) Delta_Y != W (u (x) v) Delta_Y")
    wmap = kron(u, v) @ y.comult
    cos = build_cosmash(d)
    ok = (
        is_counital_coalgebra_map(wmap, y, cos)
        and projection_C(d) @ wmap == u
        and projection_D(d) @ wmap == v
    )
    if not ok:
        raise InternalConsistencyError("universal comap failed its guaranteed properties")
    return wmap


# -- duality bridge -------------------------------------------------------------


def duality_bridge(d: CosmashData) -> SmashData:
    """(C _W|> D)* = C* #_{W*} D*: the dual smash data of a cosmash datum.

    Guarantee (tested): structure constants of dual_of_coalgebra(build_cosmash(d))
    equal those of build_smash(duality_bridge(d)) exactly.
    """
    nc, nd = d.C.dim, d.D.dim
    return SmashData(
        dual_of_coalgebra(d.C),
        dual_of_coalgebra(d.D),
        dual_map(d.W, TensorIndex((nc, nd)), TensorIndex((nd, nc))),
    )


def cosmash_of_tensor_product(c: FiniteDimCoalgebra, d: FiniteDimCoalgebra) -> CosmashData:
    """The ordinary tensor-product coalgebra as cosmash data (W = switch)."""
    return CosmashData(c, d, switch(c.dim, d.dim, c.field))
