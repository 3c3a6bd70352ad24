"""Constructors for the concrete algebras, Hopf algebras and twisting maps
used as fixtures and golden data: group algebras and their duals, skew group
products, generalized quaternions, matched pairs, (co)quasitriangular-style
R maps, and the pointed Hopf algebra family H(C, n, g*, g^{-1}, 0) with its
biproduct factorisation witness.

Pointed-family conventions (one fixed basis ordering everywhere):
    group elements c of C in lexicographic exponent order (outer index),
    monomials x^m = x_1^{m_1} ... x_t^{m_t} in lexicographic m order (inner),
so the basis of K is c x^m at flat index c_idx * prod(n) + m_idx.  With this
ordering the factorisation witness maps are plain coordinate projections.
The comultiplication of K is computed by multiplying out
(c (x) c) prod_i (x_i (x) g_i + 1 (x) x_i)^{m_i} inside K (x) K; the
q-binomial closed form is a test, not the implementation.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .biproduct import BialgebraFactorisationWitness, BiproductData
from .errors import (
    IndexOutOfRange,
    NoSuchRoot,
    NotAlgebraMap,
    ParamsInvalid,
    RootOfUnityUnavailable,
)
from .fields import FieldSpec, Scalar, as_scalar, find_root_of_unity
from .linalg import Matrix, invert, kron, permute_tensor_factors
from .report import Report
from .smash import SmashData, build_smash, is_smash_product
from .structures import (
    BialgebraCandidate,
    FiniteDimAlgebra,
    FiniteDimCoalgebra,
    HopfAlgebra,
    compute_antipode,
    cop_coalgebra,
    dual_of_algebra,
    dual_of_coalgebra,
    is_unital_algebra_map,
)


# -- groups ------------------------------------------------------------------


@dataclass(frozen=True)
class GroupTable:
    """A finite group as an explicit Cayley table."""

    order: int
    cayley: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]

    def validate(self):
        n = self.order
        for i in range(n):
            for j in range(n):
                if not 0 <= self.cayley[i][j] < n:
                    raise ValueError("cayley entry out of range")
                for k in range(n):
                    if self.cayley[self.cayley[i][j]][k] != self.cayley[i][self.cayley[j][k]]:
                        raise ValueError("group not associative")
        for i in range(n):
            if self.cayley[self.identity][i] != i or self.cayley[i][self.identity] != i:
                raise ValueError("identity fails")
            if (
                self.cayley[i][self.inverse[i]] != self.identity
                or self.cayley[self.inverse[i]][i] != self.identity
            ):
                raise ValueError("inverses fail")

    @staticmethod
    def from_cayley(cayley: Sequence[Sequence[int]]) -> "GroupTable":
        n = len(cayley)
        cay = tuple(tuple(row) for row in cayley)
        identity = None
        for e in range(n):
            if all(cay[e][i] == i and cay[i][e] == i for i in range(n)):
                identity = e
                break
        if identity is None:
            raise ValueError("no identity element")
        inverse = []
        for i in range(n):
            inv = [j for j in range(n) if cay[i][j] == identity]
            if len(inv) != 1:
                raise ValueError("inverses not unique")
            inverse.append(inv[0])
        g = GroupTable(n, cay, identity, tuple(inverse))
        g.validate()
        return g

    @staticmethod
    def cyclic(n: int) -> "GroupTable":
        return GroupTable.from_cayley([[(i + j) % n for j in range(n)] for i in range(n)])

    @staticmethod
    def direct_product(g: "GroupTable", h: "GroupTable") -> "GroupTable":
        n, m = g.order, h.order
        cay = [
            [
                g.cayley[i1][j1] * m + h.cayley[i2][j2]
                for j1 in range(n)
                for j2 in range(m)
            ]
            for i1 in range(n)
            for i2 in range(m)
        ]
        return GroupTable.from_cayley(cay)

    @staticmethod
    def symmetric(n: int) -> "GroupTable":
        perms = sorted(itertools.permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        cay = [
            [index[tuple(p[q[k]] for k in range(n))] for q in perms]
            for p in perms
        ]
        return GroupTable.from_cayley(cay)


def group_algebra(g: GroupTable, field: FieldSpec) -> HopfAlgebra:
    """kG with group-like coproduct and the inverse map as antipode."""
    n = g.order
    products = {(i, j): [(g.cayley[i][j], 1)] for i in range(n) for j in range(n)}
    alg = FiniteDimAlgebra.from_products(field, n, products, unit_index=g.identity)
    coalg = FiniteDimCoalgebra.from_coproducts(
        field, n, {i: [(i, i, 1)] for i in range(n)}, [1] * n
    )
    antipode = Matrix.from_entries(field, n, n, [(g.inverse[i], i, 1) for i in range(n)])
    return HopfAlgebra(BialgebraCandidate(alg, coalg), antipode)


def dual_group_algebra(g: GroupTable, field: FieldSpec, cop: bool = False) -> HopfAlgebra:
    """Functions on G: the dual Hopf algebra of kG, co-opposite on request."""
    kg = group_algebra(g, field)
    alg = dual_of_coalgebra(kg.coalgebra)
    coalg = dual_of_algebra(kg.algebra)
    if cop:
        coalg = cop_coalgebra(coalg)
    bial = BialgebraCandidate(alg, coalg)
    hopf = compute_antipode(bial)
    if hopf is None:  # pragma: no cover - duals of group algebras are Hopf
        raise ParamsInvalid("dual group algebra unexpectedly not Hopf")
    return hopf


def skew_group_R(a: FiniteDimAlgebra, g: GroupTable, sigma: Sequence[Matrix]) -> SmashData:
    """R(g (x) a) = sigma(g)(a) (x) g, the skew group algebra twist.

    Each sigma(g) must be a unital algebra automorphism; the resulting data is
    verified to be a smash product (sigma must be an action for that to hold).
    """
    field = a.field
    n = g.order
    if len(sigma) != n:
        raise ValueError("need one automorphism per group element")
    for s in sigma:
        if not is_unital_algebra_map(s, a, a):
            raise NotAlgebraMap("sigma(g) is not a unital algebra endomorphism")
        if invert(s) is None:
            raise NotAlgebraMap("sigma(g) is not invertible")
    b = group_algebra(g, field).algebra
    entries = []
    for i in range(n):  # group basis
        for j in range(a.dim):  # algebra basis
            col = i * a.dim + j
            image = sigma[i] @ Matrix.basis_column(field, a.dim, j)
            for k in range(a.dim):
                v = image.entry(k, 0)
                if v:
                    entries.append((k * n + i, col, v))
    r = Matrix.from_entries(field, a.dim * n, n * a.dim, entries)
    d = SmashData(a, b, r)
    if not is_smash_product(d).passed:
        raise ValueError("sigma is not a group action: skew data is not a smash product")
    return d


# -- quaternions ---------------------------------------------------------------


@dataclass
class QuaternionResult:
    algebra: FiniteDimAlgebra
    data: SmashData


def quaternion(a: Scalar, b: Scalar) -> QuaternionResult:
    """The generalized quaternion algebra as k[i] #_R k[j], R(j (x) i) = -i (x) j."""
    field = a.field
    b = as_scalar(field, b)
    ka = FiniteDimAlgebra.from_products(
        field, 2, {(0, 0): [(0, 1)], (0, 1): [(1, 1)], (1, 0): [(1, 1)], (1, 1): [(0, a)]},
        basis_names=["1", "i"],
    )
    kb = FiniteDimAlgebra.from_products(
        field, 2, {(0, 0): [(0, 1)], (0, 1): [(1, 1)], (1, 0): [(1, 1)], (1, 1): [(0, b)]},
        basis_names=["1", "j"],
    )
    # normal twist with R(j (x) i) = -i (x) j; domain order (j-part, i-part)
    one = Scalar.one(field)
    r = Matrix.from_entries(
        field,
        4,
        4,
        [
            (0, 0, one),   # 1 (x) 1 -> 1 (x) 1
            (2, 1, one),   # 1 (x) i -> i (x) 1
            (1, 2, one),   # j (x) 1 -> 1 (x) j
            (3, 3, -one),  # j (x) i -> -(i (x) j)
        ],
    )
    d = SmashData(ka, kb, r)
    return QuaternionResult(build_smash(d), d)


# -- matched pairs and (co)quasitriangular twists -----------------------------------


def matched_pair_R(
    g: GroupTable,
    h: GroupTable,
    act: Sequence[Sequence[int]],
    coact: Sequence[Sequence[int]],
    field: FieldSpec,
) -> SmashData:
    """R(g (x) h) = (g . h) (x) g^h from action/coaction tables.

    Matched-pair axioms are NOT verified; is_smash_product is the arbiter.
    """
    kh = group_algebra(h, field).algebra
    kg = group_algebra(g, field).algebra
    entries = []
    for i in range(g.order):
        for j in range(h.order):
            entries.append((act[i][j] * g.order + coact[i][j], i * h.order + j, 1))
    r = Matrix.from_entries(field, h.order * g.order, g.order * h.order, entries)
    return SmashData(kh, kg, r)


def _check_left_module(act: Matrix, h: BialgebraCandidate, a: FiniteDimAlgebra) -> bool:
    ia = Matrix.identity(a.field, a.dim)
    ih = Matrix.identity(a.field, h.dim)
    return (
        act @ kron(h.mult, ia) == act @ kron(ih, act)
        and act @ kron(h.unit, ia) == ia
    )


def _check_right_comodule(coact: Matrix, h: BialgebraCandidate, a: FiniteDimAlgebra) -> bool:
    ia = Matrix.identity(a.field, a.dim)
    ih = Matrix.identity(a.field, h.dim)
    return (
        kron(coact, ih) @ coact == kron(ia, h.comult) @ coact
        and kron(ia, h.counit) @ coact == ia
    )


def qt_smash_R(
    h: BialgebraCandidate,
    a_data: tuple[FiniteDimAlgebra, Matrix],
    b_data: tuple[FiniteDimAlgebra, Matrix],
    x: Matrix,
) -> tuple[SmashData, Report]:
    """R(b (x) a) = sum x^2 . a (x) x^1 . b from left module structures and
    an element x of H (x) H.  No quasitriangularity axioms are checked; the
    returned report is is_smash_product on the assembled data."""
    a, act_a = a_data
    b, act_b = b_data
    if not _check_left_module(act_a, h, a) or not _check_left_module(act_b, h, b):
        raise ValueError("module axioms fail")
    if x.shape != (h.dim * h.dim, 1):
        raise ValueError("x must be a column vector in H (x) H")
    field = a.field
    perm = permute_tensor_factors(field, (h.dim, h.dim, b.dim, a.dim), (1, 3, 0, 2))
    r = kron(act_a, act_b) @ perm @ kron(x, Matrix.identity(field, b.dim * a.dim))
    d = SmashData(a, b, r)
    return d, is_smash_product(d)


def cqt_smash_R(
    h: BialgebraCandidate,
    a_data: tuple[FiniteDimAlgebra, Matrix],
    b_data: tuple[FiniteDimAlgebra, Matrix],
    sigma: Matrix,
) -> tuple[SmashData, Report]:
    """R(b (x) a) = sum sigma(a_(1) (x) b_(1)) a_(0) (x) b_(0) from right
    comodule structures and a functional sigma on H (x) H."""
    a, coact_a = a_data
    b, coact_b = b_data
    if not _check_right_comodule(coact_a, h, a) or not _check_right_comodule(coact_b, h, b):
        raise ValueError("comodule axioms fail")
    if sigma.shape != (1, h.dim * h.dim):
        raise ValueError("sigma must be a functional on H (x) H")
    field = a.field
    perm = permute_tensor_factors(field, (b.dim, h.dim, a.dim, h.dim), (2, 0, 3, 1))
    r = kron(Matrix.identity(field, a.dim * b.dim), sigma) @ perm @ kron(coact_b, coact_a)
    d = SmashData(a, b, r)
    return d, is_smash_product(d)


# -- q-binomials ----------------------------------------------------------------


def qbinom(m: int, i: int, q: Scalar) -> Scalar:
    """Gaussian binomial coefficient via the q-Pascal recurrence."""
    if not 0 <= i <= m:
        raise IndexOutOfRange(f"need 0 <= i <= m, got i={i}, m={m}")
    field = q.field
    row = [Scalar.one(field)]
    for r in range(1, m + 1):
        new = [Scalar.one(field)]
        for k in range(1, r):
            new.append(row[k - 1] + (q ** k) * row[k])
        new.append(Scalar.one(field))
        row = new
    return row[i]


# -- the pointed family H(C, n, g*, g^{-1}, 0) ------------------------------------


@dataclass(frozen=True)
class AbelianGroupSpec:
    """Finite abelian group given by cyclic factor orders."""

    orders: tuple[int, ...]

    def __post_init__(self):
        if any(o < 1 for o in self.orders):
            raise ParamsInvalid("cyclic factor orders must be >= 1")

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    def elements(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*(range(o) for o in self.orders)))

    def index(self, el: Sequence[int]) -> int:
        idx = 0
        for e, o in zip(el, self.orders):
            idx = idx * o + (e % o)
        return idx

    def add(self, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
        return tuple((a + b) % o for a, b, o in zip(x, y, self.orders))

    def neg(self, x: Sequence[int]) -> tuple[int, ...]:
        return tuple((-a) % o for a, o in zip(x, self.orders))

    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.orders)

    def group_table(self) -> GroupTable:
        els = self.elements()
        cay = [[self.index(self.add(x, y)) for y in els] for x in els]
        return GroupTable.from_cayley(cay)


@dataclass(frozen=True)
class PointedParams:
    """Data for H(C, n, g*, g^{-1}, 0).

    g lists the group elements appearing in Delta(x_i) = x_i (x) g_i + 1 (x) x_i
    (as exponent tuples against C's cyclic decomposition); gstar lists the
    characters g*_i as exponent rows, the character value on the j-th cyclic
    generator being zeta_j ** gstar[i][j] for a fixed primitive root zeta_j.
    """

    C: AbelianGroupSpec
    n: tuple[int, ...]
    g: tuple[tuple[int, ...], ...]
    gstar: tuple[tuple[int, ...], ...]
    field: FieldSpec

    @property
    def t(self) -> int:
        return len(self.n)

    def roots(self) -> list[Scalar]:
        try:
            return [find_root_of_unity(self.field, o) for o in self.C.orders]
        except NoSuchRoot as exc:
            raise RootOfUnityUnavailable(str(exc)) from exc

    def character(self, i: int, c: Sequence[int]) -> Scalar:
        """<g*_i, c>."""
        roots = self.roots()
        out = Scalar.one(self.field)
        for z, e, a in zip(roots, self.gstar[i], c):
            out = out * z ** (e * a)
        return out

    def validate(self):
        if not (len(self.g) == len(self.gstar) == self.t):
            raise ParamsInvalid("n, g, gstar must have equal length t")
        for gi in self.g:
            if len(gi) != len(self.C.orders):
                raise ParamsInvalid("group elements must match C's rank")
        for row in self.gstar:
            if len(row) != len(self.C.orders):
                raise ParamsInvalid("character rows must match C's rank")
        for l in range(self.t):
            q = self.character(l, self.g[l])
            if not q:
                raise ParamsInvalid("character value is zero")
            if q.multiplicative_order() != self.n[l]:
                raise ParamsInvalid(
                    f"<g*_{l}, g_{l}> must be a primitive {self.n[l]}-th root of unity"
                )
        for r in range(self.t):
            for l in range(self.t):
                if r != l and self.character(r, self.g[l]) != self.character(l, self.g[r]):
                    raise ParamsInvalid("<g*_r, g_l> = <g*_l, g_r> fails")


@dataclass
class PointedHopfResult:
    K: HopfAlgebra
    witness: BialgebraFactorisationWitness
    params: PointedParams
    L: HopfAlgebra  # the group algebra kC
    H: BialgebraCandidate  # the x-subalgebra with its projected coalgebra


class _PointedBasis:
    """Basis bookkeeping and normal-form products for H(C, n, g*, g^{-1}, 0)."""

    def __init__(self, p: PointedParams):
        self.p = p
        self.cs = p.C.elements()
        self.ms = list(itertools.product(*(range(nj) for nj in p.n)))
        self.m_index = {m: i for i, m in enumerate(self.ms)}
        self.M = len(self.ms)
        self.N = len(self.cs) * self.M
        # cache character values chi[i][c_idx]
        self.chi = [
            [p.character(i, c) for c in self.cs] for i in range(p.t)
        ]
        self.qmat = [
            [p.character(k, p.g[j]) for j in range(p.t)] for k in range(p.t)
        ]

    def idx(self, c_idx: int, m_idx: int) -> int:
        return c_idx * self.M + m_idx

    def basis_product(self, e1: int, e2: int) -> Optional[tuple[Scalar, int]]:
        """(c x^m)(d x^r) in normal form; None when a power overflows."""
        p = self.p
        c1, m1 = divmod(e1, self.M)
        c2, m2 = divmod(e2, self.M)
        m, r = self.ms[m1], self.ms[m2]
        tot = tuple(a + b for a, b in zip(m, r))
        if any(tj >= nj for tj, nj in zip(tot, p.n)):
            return None
        coeff = Scalar.one(p.field)
        for j in range(p.t):  # x^m past d
            if m[j]:
                coeff = coeff * self.chi[j][c2] ** m[j]
        for j in range(p.t):  # x_j^{r_j} past x_k^{m_k}, k > j
            for k in range(j + 1, p.t):
                if m[k] and r[j]:
                    coeff = coeff * self.qmat[k][j] ** (m[k] * r[j])
        c = p.C.index(p.C.add(self.cs[c1], self.cs[c2]))
        return coeff, self.idx(c, self.m_index[tot])

    def el_product(self, u: dict, v: dict) -> dict:
        out: dict[int, Scalar] = {}
        for i, ci in u.items():
            for j, cj in v.items():
                res = self.basis_product(i, j)
                if res is None:
                    continue
                coeff, k = res
                val = out.get(k, Scalar.zero(self.p.field)) + ci * cj * coeff
                out[k] = val
        return {k: v for k, v in out.items() if v}

    def kk_product(self, u: dict, v: dict) -> dict:
        """Product in K (x) K of sparse elements keyed by basis index pairs."""
        out: dict[tuple[int, int], Scalar] = {}
        for (a1, a2), ca in u.items():
            for (b1, b2), cb in v.items():
                r1 = self.basis_product(a1, b1)
                if r1 is None:
                    continue
                r2 = self.basis_product(a2, b2)
                if r2 is None:
                    continue
                s1, k1 = r1
                s2, k2 = r2
                val = out.get((k1, k2), Scalar.zero(self.p.field)) + ca * cb * s1 * s2
                out[(k1, k2)] = val
        return {k: v for k, v in out.items() if v}


def pointed_hopf(p: PointedParams, verify: bool = True) -> PointedHopfResult:
    """Build H(C, n, g*, g^{-1}, 0) together with its Thm-style factorisation
    witness (L = kC, H = the x-subalgebra with projected coalgebra).

    With verify=True the closed-form antipode is cross-checked against the
    generic solver.
    """
    p.validate()
    basis = _PointedBasis(p)
    field = p.field
    n_tot = basis.N
    e_idx = p.C.index(p.C.zero())
    zero_m = basis.m_index[tuple(0 for _ in range(p.t))]

    # multiplication and unit
    mult_entries = []
    for i in range(n_tot):
        for j in range(n_tot):
            res = basis.basis_product(i, j)
            if res is None:
                continue
            coeff, k = res
            mult_entries.append((k, i * n_tot + j, coeff))
    alg = FiniteDimAlgebra(
        field,
        n_tot,
        Matrix.from_entries(field, n_tot, n_tot * n_tot, mult_entries),
        Matrix.basis_column(field, n_tot, basis.idx(e_idx, zero_m)),
        _pointed_names(p, basis),
    )

    # comultiplication: multiply out (c (x) c) prod (x_i (x) g_i + 1 (x) x_i)^{m_i}
    one = Scalar.one(field)
    delta_x = []
    for i in range(p.t):
        ei = tuple(1 if j == i else 0 for j in range(p.t))
        mi = basis.m_index[ei]
        gi = p.C.index(p.g[i])
        delta_x.append(
            {
                (basis.idx(e_idx, mi), basis.idx(gi, zero_m)): one,
                (basis.idx(e_idx, zero_m), basis.idx(e_idx, mi)): one,
            }
        )
    comult_entries = []
    counit_vals = []
    for c_idx in range(len(basis.cs)):
        for m_idx, m in enumerate(basis.ms):
            cur = {(basis.idx(c_idx, zero_m), basis.idx(c_idx, zero_m)): one}
            for i in range(p.t):
                for _ in range(m[i]):
                    cur = basis.kk_product(cur, delta_x[i])
            col = basis.idx(c_idx, m_idx)
            for (k1, k2), v in cur.items():
                comult_entries.append((k1 * n_tot + k2, col, v))
            counit_vals.append(one if m_idx == zero_m else Scalar.zero(field))
    coalg = FiniteDimCoalgebra(
        field,
        n_tot,
        Matrix.from_entries(field, n_tot * n_tot, n_tot, comult_entries),
        Matrix.row_vector(field, counit_vals),
        _pointed_names(p, basis),
    )
    bial = BialgebraCandidate(alg, coalg)

    # closed-form antipode S(c x^m) = S(x_t)^{m_t} ... S(x_1)^{m_1} c^{-1}
    s_x = []
    for i in range(p.t):
        ei = tuple(1 if j == i else 0 for j in range(p.t))
        gi_inv = p.C.neg(p.g[i])
        coeff = -p.character(i, gi_inv)
        s_x.append({basis.idx(p.C.index(gi_inv), basis.m_index[ei]): coeff})
    antipode_entries = []
    for c_idx, c in enumerate(basis.cs):
        for m_idx, m in enumerate(basis.ms):
            cur = {basis.idx(p.C.index(p.C.neg(c)), zero_m): one}
            acc = {basis.idx(e_idx, zero_m): one}
            for i in range(p.t - 1, -1, -1):
                for _ in range(m[i]):
                    acc = basis.el_product(acc, s_x[i])
            cur = basis.el_product(acc, cur)
            col = basis.idx(c_idx, m_idx)
            for k, v in cur.items():
                antipode_entries.append((k, col, v))
    antipode = Matrix.from_entries(field, n_tot, n_tot, antipode_entries)
    hopf = HopfAlgebra(bial, antipode)

    if verify:
        solved = compute_antipode(bial)
        if solved is None or solved.antipode != antipode:
            raise ParamsInvalid(
                "closed-form antipode disagrees with the solver; parameters inconsistent"
            )

    # factorisation witness: L = kC, H = span{x^m} with projected coalgebra
    l_hopf = group_algebra(p.C.group_table(), field)
    h_cand = _pointed_x_part(p, basis, hopf)
    nl, nh = l_hopf.dim, basis.M
    iL = Matrix.from_entries(
        field, n_tot, nl, [(basis.idx(c, zero_m), c, 1) for c in range(nl)]
    )
    iH = Matrix.from_entries(
        field, n_tot, nh, [(basis.idx(e_idx, m), m, 1) for m in range(nh)]
    )
    pL = Matrix.from_entries(
        field, nl, n_tot, [(c, basis.idx(c, zero_m), 1) for c in range(nl)]
    )
    pH = Matrix.from_entries(
        field, nh, n_tot, [(m, basis.idx(c, m), 1) for c in range(nl) for m in range(nh)]
    )
    witness = BialgebraFactorisationWitness(bial, l_hopf.bialgebra, h_cand, iL, iH, pL, pH)
    return PointedHopfResult(hopf, witness, p, l_hopf, h_cand)


def _pointed_names(p: PointedParams, basis: _PointedBasis) -> list[str]:
    names = []
    for c in basis.cs:
        cname = "".join(f"c{i}^{e}" for i, e in enumerate(c) if e) or "1"
        for m in basis.ms:
            mname = "".join(f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}" for i, e in enumerate(m) if e)
            if not mname:
                names.append(cname)
            elif cname == "1":
                names.append(mname)
            else:
                names.append(f"{cname} {mname}")
    return names


def _pointed_x_part(p: PointedParams, basis: _PointedBasis, k: HopfAlgebra) -> BialgebraCandidate:
    """The subalgebra of monomials x^m with Delta_H = (p_H (x) p_H) Delta_K."""
    field = p.field
    nh = basis.M
    e_idx = p.C.index(p.C.zero())
    zero_m = basis.m_index[tuple(0 for _ in range(p.t))]
    mult_entries = []
    for a in range(nh):
        for b in range(nh):
            res = basis.basis_product(basis.idx(e_idx, a), basis.idx(e_idx, b))
            if res is None:
                continue
            coeff, idx = res
            c_res, m_res = divmod(idx, basis.M)
            assert c_res == e_idx
            mult_entries.append((m_res, a * nh + b, coeff))
    alg = FiniteDimAlgebra(
        field,
        nh,
        Matrix.from_entries(field, nh, nh * nh, mult_entries),
        Matrix.basis_column(field, nh, zero_m),
    )
    n_tot = basis.N
    pH = Matrix.from_entries(
        field, nh, n_tot, [(m, basis.idx(c, m), 1) for c in range(len(basis.cs)) for m in range(nh)]
    )
    iH = Matrix.from_entries(field, n_tot, nh, [(basis.idx(e_idx, m), m, 1) for m in range(nh)])
    comult = kron(pH, pH) @ k.coalgebra.comult @ iH
    counit = Matrix.row_vector(
        field, [1 if m == zero_m else 0 for m in range(nh)]
    )
    coalg = FiniteDimCoalgebra(field, nh, comult, counit)
    return BialgebraCandidate(alg, coalg)


def pointed_closed_RW(p: PointedParams) -> tuple[Matrix, Matrix]:
    """Closed-form twisting maps of the pointed family:

        R(x^m (x) c) = prod_j <g*_j, c>^{m_j}  c (x) x^m
        W(c (x) x^m) = x^m (x) c * prod_j g_j^{m_j}
    """
    p.validate()
    basis = _PointedBasis(p)
    field = p.field
    nl = len(basis.cs)
    nh = basis.M
    r_entries = []
    w_entries = []
    for c_idx, c in enumerate(basis.cs):
        for m_idx, m in enumerate(basis.ms):
            coeff = Scalar.one(field)
            for j in range(p.t):
                if m[j]:
                    coeff = coeff * basis.chi[j][c_idx] ** m[j]
            r_entries.append((c_idx * nh + m_idx, m_idx * nl + c_idx, coeff))
            shift = c
            for j in range(p.t):
                for _ in range(m[j]):
                    shift = p.C.add(shift, p.g[j])
            w_entries.append((m_idx * nl + p.C.index(shift), c_idx * nh + m_idx, 1))
    r = Matrix.from_entries(field, nl * nh, nh * nl, r_entries)
    w = Matrix.from_entries(field, nh * nl, nl * nh, w_entries)
    return r, w


def pointed_biproduct_data(res: PointedHopfResult) -> BiproductData:
    """Closed-form BiproductData for a pointed family instance."""
    r, w = pointed_closed_RW(res.params)
    return BiproductData(res.witness.L, res.witness.H, r, w)


# -- named instances ----------------------------------------------------------------


def sweedler_params() -> PointedParams:
    return PointedParams(AbelianGroupSpec((2,)), (2,), ((1,),), ((1,),), FieldSpec.rational())


def sweedler() -> PointedHopfResult:
    """Sweedler's four dimensional Hopf algebra H4 over QQ."""
    return pointed_hopf(sweedler_params())


def taft_params(n: int, p: int) -> PointedParams:
    """Taft algebra of dimension n^2 over GF(p) (needs n | p - 1)."""
    return PointedParams(AbelianGroupSpec((n,)), (n,), ((1,),), ((1,),), FieldSpec.prime(p))


def taft(n: int, p: int) -> PointedHopfResult:
    return pointed_hopf(taft_params(n, p))


def radford_params(n: int, nn: int, nu: int, p: int) -> PointedParams:
    """Radford's four-parameter family: C = C_N (order nn), q of order n
    realized in GF(p), Delta-element g^nu; the nilpotency degree is the order
    of q^nu."""
    if nn % n or not 1 <= nu < nn:
        raise ParamsInvalid("need n | N and 1 <= nu < N")
    field = FieldSpec.prime(p)
    if (p - 1) % nn:
        raise RootOfUnityUnavailable(f"GF({p}) lacks {nn}-th roots of unity")
    # q = zeta_N^(N/n) has order n; x g = q g x comes from gstar = (N/n,)
    k = nn // n
    r = n // math.gcd(n, nu)  # order of q^nu
    return PointedParams(AbelianGroupSpec((nn,)), (r,), ((nu % nn,),), ((k,),), field)


def radford(n: int, nn: int, nu: int, p: int) -> PointedHopfResult:
    return pointed_hopf(radford_params(n, nn, nu, p))


def en_params(n: int) -> PointedParams:
    """E(n) = H(C_2, (2,...,2), (g*,...), (g,...), 0) over QQ."""
    return PointedParams(
        AbelianGroupSpec((2,)),
        (2,) * n,
        ((1,),) * n,
        ((1,),) * n,
        FieldSpec.rational(),
    )


def en(n: int) -> PointedHopfResult:
    return pointed_hopf(en_params(n))


def radford_RW(p: PointedParams) -> tuple[Matrix, Matrix]:
    """Closed forms R(x^m (x) g^l) = q^{lm} g^l (x) x^m and
    W(g^l (x) x^m) = x^m (x) g^{l + nu m} for t = 1 instances."""
    if p.t != 1:
        raise ParamsInvalid("radford_RW applies to t = 1 instances")
    return pointed_closed_RW(p)


def en_RW(n: int) -> tuple[Matrix, Matrix]:
    """The E(n) twisting maps (displayed tables, corrected at odd degree)."""
    return pointed_closed_RW(en_params(n))
