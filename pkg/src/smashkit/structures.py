"""Finite-dimensional algebras, coalgebras, bialgebra candidates and Hopf
algebras, given by exact structure-constant tensors.

Conventions:
    mult   is the dim x dim^2 matrix of m: A (x) A -> A, column (i, j) being
           the coefficient vector of e_i * e_j, so m[i][j][k] = mult[k, i*n+j];
    comult is the dim^2 x dim matrix of Delta: C -> C (x) C, with
           c[i][j][k] = comult[j*n+k, i];
    unit / counit are a column / row vector.

The axiom checkers are direct oracles: they evaluate the defining identities
on structure constants and report the first violation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DimensionMismatch, FieldMismatch, NotABialgebra, ShapeMismatch
from .fields import FieldKind, FieldSpec
from .linalg import Matrix, TensorIndex, kron, permute_tensor_factors, solve_unique, switch
from .report import Check, Report, matrices_equal

_INT64_SAFE = 2 ** 62


# -- raw tensor helpers ------------------------------------------------------


def _contract(a: np.ndarray, b: np.ndarray, axes, p: Optional[int]) -> np.ndarray:
    """Exact tensordot; promotes to Python ints when int64 could overflow."""
    if a.dtype != object and b.dtype != object:
        bound_a = int(np.max(np.abs(a))) if a.size else 0
        bound_b = int(np.max(np.abs(b))) if b.size else 0
        inner = 1
        ax_a = axes[0] if isinstance(axes[0], (list, tuple)) else [axes[0]]
        for ax in ax_a:
            inner *= a.shape[ax]
        if bound_a * bound_b * inner >= _INT64_SAFE:
            a = a.astype(object)
            b = b.astype(object)
    out = np.tensordot(a, b, axes=axes)
    if p is not None:
        out = out % p
    return out


def _tensors_equal(num_a, den_a, num_b, den_b, p: Optional[int]):
    """None when equal as exact tensors, else the first differing multi-index."""
    if p is not None:
        diff = (num_a - num_b) % p
    else:
        if den_a != den_b:
            if num_a.dtype != object and (
                int(np.max(np.abs(num_a)) if num_a.size else 0) * den_b >= _INT64_SAFE
                or int(np.max(np.abs(num_b)) if num_b.size else 0) * den_a >= _INT64_SAFE
            ):
                num_a = num_a.astype(object)
                num_b = num_b.astype(object)
            diff = num_a * den_b - num_b * den_a
        else:
            diff = num_a - num_b
    nz = np.nonzero(diff)
    if len(nz[0]) == 0:
        return None
    return tuple(int(ax[0]) for ax in nz)


# -- types -------------------------------------------------------------------


@dataclass
class FiniteDimAlgebra:
    field: FieldSpec
    dim: int
    mult: Matrix
    unit: Matrix
    basis_names: Optional[list[str]] = None

    def __post_init__(self):
        n = self.dim
        if self.mult.shape != (n, n * n):
            raise ShapeMismatch(f"mult must be {n}x{n * n}, got {self.mult.shape}")
        if self.unit.shape != (n, 1):
            raise ShapeMismatch(f"unit must be {n}x1, got {self.unit.shape}")
        if self.mult.field != self.field or self.unit.field != self.field:
            raise FieldMismatch("structure tensors must share the algebra's field")
        if self.basis_names is not None and len(self.basis_names) != n:
            raise ShapeMismatch("basis_names length != dim")

    def multiply(self, v: Matrix, w: Matrix) -> Matrix:
        return self.mult @ kron(v, w)

    def mult_tensor(self) -> np.ndarray:
        """Numerators reshaped to [k, i, j]."""
        return self.mult.nums.reshape(self.dim, self.dim, self.dim)

    @staticmethod
    def from_products(field, dim, products, unit_index=0, basis_names=None) -> "FiniteDimAlgebra":
        """Build from a dict (i, j) -> iterable of (k, coeff); missing pairs are zero."""
        entries = []
        for (i, j), terms in products.items():
            for k, coeff in terms:
                entries.append((k, i * dim + j, coeff))
        mult = Matrix.from_entries(field, dim, dim * dim, entries)
        unit = Matrix.basis_column(field, dim, unit_index)
        return FiniteDimAlgebra(field, dim, mult, unit, basis_names)


@dataclass
class FiniteDimCoalgebra:
    field: FieldSpec
    dim: int
    comult: Matrix
    counit: Matrix
    basis_names: Optional[list[str]] = None

    def __post_init__(self):
        n = self.dim
        if self.comult.shape != (n * n, n):
            raise ShapeMismatch(f"comult must be {n * n}x{n}, got {self.comult.shape}")
        if self.counit.shape != (1, n):
            raise ShapeMismatch(f"counit must be 1x{n}, got {self.counit.shape}")
        if self.comult.field != self.field or self.counit.field != self.field:
            raise FieldMismatch("structure tensors must share the coalgebra's field")
        if self.basis_names is not None and len(self.basis_names) != n:
            raise ShapeMismatch("basis_names length != dim")

    def comult_tensor(self) -> np.ndarray:
        """Numerators reshaped to [i, j, k] with Delta(e_i) = sum c[i][j][k] e_j (x) e_k."""
        n = self.dim
        return self.comult.nums.reshape(n, n, n).transpose(2, 0, 1)

    @staticmethod
    def from_coproducts(field, dim, coproducts, counit_values, basis_names=None) -> "FiniteDimCoalgebra":
        """Build from a dict i -> iterable of (j, k, coeff)."""
        entries = []
        for i, terms in coproducts.items():
            for j, k, coeff in terms:
                entries.append((j * dim + k, i, coeff))
        comult = Matrix.from_entries(field, dim * dim, dim, entries)
        counit = Matrix.row_vector(field, counit_values)
        return FiniteDimCoalgebra(field, dim, comult, counit, basis_names)


@dataclass
class BialgebraCandidate:
    """An algebra and a coalgebra on one underlying space.

    Compatibility is NOT asserted at construction; run check_bialgebra.
    """

    algebra: FiniteDimAlgebra
    coalgebra: FiniteDimCoalgebra

    def __post_init__(self):
        if self.algebra.field != self.coalgebra.field:
            raise FieldMismatch("algebra and coalgebra fields differ")
        if self.algebra.dim != self.coalgebra.dim:
            raise DimensionMismatch("algebra and coalgebra dims differ")

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def mult(self) -> Matrix:
        return self.algebra.mult

    @property
    def unit(self) -> Matrix:
        return self.algebra.unit

    @property
    def comult(self) -> Matrix:
        return self.coalgebra.comult

    @property
    def counit(self) -> Matrix:
        return self.coalgebra.counit

    @property
    def basis_names(self):
        return self.algebra.basis_names or self.coalgebra.basis_names


@dataclass
class HopfAlgebra:
    bialgebra: BialgebraCandidate
    antipode: Matrix

    def __post_init__(self):
        n = self.bialgebra.dim
        if self.antipode.shape != (n, n):
            raise ShapeMismatch(f"antipode must be {n}x{n}")
        if self.antipode.field != self.bialgebra.field:
            raise FieldMismatch("antipode field differs")

    @property
    def algebra(self) -> FiniteDimAlgebra:
        return self.bialgebra.algebra

    @property
    def coalgebra(self) -> FiniteDimCoalgebra:
        return self.bialgebra.coalgebra

    @property
    def field(self) -> FieldSpec:
        return self.bialgebra.field

    @property
    def dim(self) -> int:
        return self.bialgebra.dim


# -- axiom checkers ----------------------------------------------------------


def _char(field: FieldSpec) -> Optional[int]:
    return field.p if field.kind is FieldKind.PRIME else None


def check_algebra(a: FiniteDimAlgebra) -> Report:
    """Associativity and two-sided unit, checked exactly on structure constants."""
    rep = Report("algebra axioms")
    n = a.dim
    p = _char(a.field)
    mt = a.mult_tensor()
    dm = a.mult.den
    # (e_i e_j) e_l  vs  e_i (e_j e_l), coefficient of e_k
    left = _contract(mt, mt, ([1], [0]), p).transpose(0, 2, 3, 1)  # [k,i,j,l]
    right = _contract(mt, mt, ([2], [0]), p)  # [k,i,j,l]
    bad = _tensors_equal(left, dm * dm, right, dm * dm, p)
    if bad is None:
        rep.add(Check("associative", True))
    else:
        _, i, j, l = bad
        rep.add(
            Check(
                "associative",
                False,
                {
                    "input_index": [i, j, l],
                    "lhs": [str(x) for x in _tensor_column(a.field, left, dm * dm, (i, j, l))],
                    "rhs": [str(x) for x in _tensor_column(a.field, right, dm * dm, (i, j, l))],
                },
            )
        )
    ident = Matrix.identity(a.field, n)
    rep.add(matrices_equal("left_unit", a.mult @ kron(a.unit, ident), ident, TensorIndex((n,))))
    rep.add(matrices_equal("right_unit", a.mult @ kron(ident, a.unit), ident, TensorIndex((n,))))
    return rep


def _tensor_column(field, tensor, den, index):
    from fractions import Fraction

    col = tensor[(slice(None),) + index]
    if field.kind is FieldKind.PRIME:
        return [int(x) % field.p for x in col]
    return [Fraction(int(x), den) for x in col]


def check_coalgebra(c: FiniteDimCoalgebra) -> Report:
    """Coassociativity and counit, the duals of the algebra axioms."""
    rep = Report("coalgebra axioms")
    n = c.dim
    p = _char(c.field)
    ct = c.comult_tensor()
    dc = c.comult.den
    left = _contract(ct, ct, ([1], [0]), p).transpose(0, 2, 3, 1)  # [i,a,b,k]
    right = _contract(ct, ct, ([2], [0]), p)  # [i,a,b,k]
    bad = _tensors_equal(left, dc * dc, right, dc * dc, p)
    if bad is None:
        rep.add(Check("coassociative", True))
    else:
        rep.add(Check("coassociative", False, {"input_index": [bad[0]]}))
    ident = Matrix.identity(c.field, n)
    rep.add(matrices_equal("left_counit", kron(c.counit, ident) @ c.comult, ident, TensorIndex((n,))))
    rep.add(matrices_equal("right_counit", kron(ident, c.counit) @ c.comult, ident, TensorIndex((n,))))
    return rep


def check_bialgebra(b: BialgebraCandidate) -> Report:
    """Algebra + coalgebra axioms plus Delta and epsilon being algebra maps."""
    rep = Report("bialgebra axioms")
    rep.subreports["algebra"] = check_algebra(b.algebra)
    rep.subreports["coalgebra"] = check_coalgebra(b.coalgebra)
    n = b.dim
    p = _char(b.field)
    ti2 = TensorIndex((n, n))

    # Delta multiplicative: Delta(xy) = Delta(x)Delta(y), as tensors to avoid n^8 blowup
    mt = b.algebra.mult_tensor()
    ct = b.coalgebra.comult_tensor()
    dm, dc = b.mult.den, b.comult.den
    lhs_m = b.comult @ b.mult
    lhs = lhs_m.nums.reshape(n, n, n, n)  # [a,b,i,j]
    x = _contract(ct, mt, ([1], [1]), p)  # [i,q,a,r]
    w1 = _contract(x, ct, ([3], [1]), p)  # [i,q,a,j,s]
    rhs = _contract(w1, mt, ([1, 4], [1, 2]), p).transpose(1, 3, 0, 2)  # [a,b,i,j]
    bad = _tensors_equal(lhs, lhs_m.den, rhs, dc * dc * dm * dm, p)
    if bad is None:
        rep.add(Check("comult_multiplicative", True))
    else:
        rep.add(Check("comult_multiplicative", False, {"input_index": [bad[2], bad[3]]}))

    rep.add(
        matrices_equal("comult_unital", b.comult @ b.unit, kron(b.unit, b.unit), TensorIndex((1,)))
    )
    rep.add(matrices_equal("counit_multiplicative", b.counit @ b.mult, kron(b.counit, b.counit), ti2))
    rep.add(matrices_equal("counit_unital", b.counit @ b.unit, Matrix.identity(b.field, 1), TensorIndex((1,))))
    return rep


def convolution_unit(b: BialgebraCandidate) -> Matrix:
    """unit . counit, the identity of the convolution algebra End(B)."""
    return b.unit @ b.counit


def check_antipode_axioms(b: BialgebraCandidate, s: Matrix) -> Report:
    """Both convolution axioms for a candidate antipode matrix."""
    rep = Report("antipode axioms")
    n = b.dim
    ident = Matrix.identity(b.field, n)
    target = convolution_unit(b)
    ti = TensorIndex((n,))
    rep.add(matrices_equal("left_convolution", b.mult @ kron(s, ident) @ b.comult, target, ti))
    rep.add(matrices_equal("right_convolution", b.mult @ kron(ident, s) @ b.comult, target, ti))
    return rep


def compute_antipode_info(b: BialgebraCandidate) -> tuple[Optional[HopfAlgebra], bool]:
    """Solve the left convolution identity for S, then verify the right one.

    Returns (hopf, unique) where unique says the linear system pinned S
    completely.  (None, _) when no antipode exists.
    """
    if not check_bialgebra(b).passed:
        raise NotABialgebra("compute_antipode requires a verified bialgebra")
    n = b.dim
    p = _char(b.field)
    mt = b.algebra.mult_tensor()
    ct = b.coalgebra.comult_tensor()
    # sum_j c[h][i][j] * m[k][i'][j] * S[i'][i] = eps(h) unit_k
    coef = _contract(ct, mt, ([2], [2]), p)  # [h,i,k,i']
    coef = coef.transpose(0, 2, 3, 1).reshape(n * n, n * n)
    coef_m = Matrix._make(b.field, coef, b.comult.den * b.mult.den)
    rhs = kron(b.counit.T, b.unit)
    sol, unique = solve_unique(coef_m, rhs)
    if sol is None:
        return None, False
    s = Matrix._make(b.field, sol.nums.reshape(n, n), sol.den)
    if not check_antipode_axioms(b, s).passed:
        return None, unique
    return HopfAlgebra(b, s), unique


def compute_antipode(b: BialgebraCandidate) -> Optional[HopfAlgebra]:
    """The antipode found by linear solving, or None when b is not Hopf."""
    hopf, _ = compute_antipode_info(b)
    return hopf


def check_hopf(h: HopfAlgebra) -> Report:
    rep = Report("hopf axioms")
    rep.subreports["bialgebra"] = check_bialgebra(h.bialgebra)
    rep.subreports["antipode"] = check_antipode_axioms(h.bialgebra, h.antipode)
    return rep


# -- duality and twists ------------------------------------------------------


def _dual_names(names):
    return [f"{nm}*" for nm in names] if names else None


def dual_of_coalgebra(c: FiniteDimCoalgebra) -> FiniteDimAlgebra:
    """Dual algebra at a fixed basis: m*[j][k][i] = c[i][j][k], unit = counit."""
    return FiniteDimAlgebra(c.field, c.dim, c.comult.T, c.counit.T, _dual_names(c.basis_names))


def dual_of_algebra(a: FiniteDimAlgebra) -> FiniteDimCoalgebra:
    """Dual coalgebra at a fixed basis: c[i][j][k] = m[j][k][i], counit = unit."""
    return FiniteDimCoalgebra(a.field, a.dim, a.mult.T, a.unit.T, _dual_names(a.basis_names))


def dual_map(
    f: Matrix,
    dom: Optional[TensorIndex] = None,
    cod: Optional[TensorIndex] = None,
) -> Matrix:
    """The dual of f under (V (x) W)* = V* (x) W*: a plain transpose in the
    row-major convention."""
    if dom is not None and dom.size != f.cols:
        raise ShapeMismatch("dom tensor index does not match f's column count")
    if cod is not None and cod.size != f.rows:
        raise ShapeMismatch("cod tensor index does not match f's row count")
    return f.T


def op_algebra(a: FiniteDimAlgebra) -> FiniteDimAlgebra:
    """Opposite algebra: factors of the multiplication swapped."""
    n = a.dim
    return FiniteDimAlgebra(a.field, n, a.mult @ switch(n, n, a.field), a.unit, a.basis_names)


def cop_coalgebra(c: FiniteDimCoalgebra) -> FiniteDimCoalgebra:
    """Co-opposite coalgebra: factors of the comultiplication swapped."""
    n = c.dim
    return FiniteDimCoalgebra(c.field, n, switch(n, n, c.field) @ c.comult, c.counit, c.basis_names)


# -- maps and tensor products --------------------------------------------------


def is_unital_algebra_map(f: Matrix, dom: FiniteDimAlgebra, cod: FiniteDimAlgebra) -> bool:
    if f.shape != (cod.dim, dom.dim):
        raise ShapeMismatch(f"map must be {cod.dim}x{dom.dim}")
    return f @ dom.mult == cod.mult @ kron(f, f) and f @ dom.unit == cod.unit


def is_counital_coalgebra_map(f: Matrix, dom: FiniteDimCoalgebra, cod: FiniteDimCoalgebra) -> bool:
    if f.shape != (cod.dim, dom.dim):
        raise ShapeMismatch(f"map must be {cod.dim}x{dom.dim}")
    return cod.comult @ f == kron(f, f) @ dom.comult and cod.counit @ f == dom.counit


def tensor_algebra(a: FiniteDimAlgebra, b: FiniteDimAlgebra) -> FiniteDimAlgebra:
    """The ordinary tensor-product algebra on A (x) B."""
    na, nb = a.dim, b.dim
    perm = permute_tensor_factors(a.field, (na, nb, na, nb), (0, 2, 1, 3))
    mult = kron(a.mult, b.mult) @ perm
    names = None
    if a.basis_names and b.basis_names:
        names = [f"{x}(x){y}" for x in a.basis_names for y in b.basis_names]
    return FiniteDimAlgebra(a.field, na * nb, mult, kron(a.unit, b.unit), names)


def tensor_coalgebra(c: FiniteDimCoalgebra, d: FiniteDimCoalgebra) -> FiniteDimCoalgebra:
    """The ordinary tensor-product coalgebra on C (x) D."""
    nc, nd = c.dim, d.dim
    perm = permute_tensor_factors(c.field, (nc, nc, nd, nd), (0, 2, 1, 3))
    comult = perm @ kron(c.comult, d.comult)
    names = None
    if c.basis_names and d.basis_names:
        names = [f"{x}(x){y}" for x in c.basis_names for y in d.basis_names]
    return FiniteDimCoalgebra(c.field, nc * nd, comult, kron(c.counit, d.counit), names)


def algebras_equal(a: FiniteDimAlgebra, b: FiniteDimAlgebra) -> bool:
    """Exact equality of structure constants (same basis)."""
    return a.dim == b.dim and a.mult == b.mult and a.unit == b.unit


def coalgebras_equal(c: FiniteDimCoalgebra, d: FiniteDimCoalgebra) -> bool:
    return c.dim == d.dim and c.comult == d.comult and c.counit == d.counit
