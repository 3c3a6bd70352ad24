"""Exact dense linear and tensor algebra.

Every k-linear map in the toolkit (multiplications, comultiplications, the
twisting maps R and W, witness maps) is a `Matrix`.  Tensor-product spaces use
one global flattening convention, row-major:

    basis vector (i_1, ..., i_m)  <->  ((i_1 * d_2 + i_2) * d_3 + ...)

so `kron(f, g)` is the matrix of f (x) g and `switch(m, n)` is the map
v_i (x) w_j  |->  w_j (x) v_i.

Storage is an integer numerator array plus one common positive denominator
(denominator 1 over prime fields), which keeps all arithmetic exact while
letting numpy do the heavy lifting in int64.  Operations that could overflow
int64 promote to arbitrary-precision Python integers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import FieldMismatch, ShapeMismatch
from .fields import FieldKind, FieldSpec, Scalar, ScalarLike

_INT64_SAFE = 2 ** 62


@dataclass(frozen=True)
class TensorIndex:
    """Ordered factor dimensions of a tensor-product space."""

    dims: tuple[int, ...]

    def __post_init__(self):
        if any(d < 1 for d in self.dims):
            raise ValueError("factor dimensions must be positive")

    @property
    def size(self) -> int:
        return math.prod(self.dims)

    def flatten(self, index: Sequence[int]) -> int:
        if len(index) != len(self.dims):
            raise ValueError("index arity mismatch")
        flat = 0
        for i, d in zip(index, self.dims):
            if not 0 <= i < d:
                raise ValueError("index out of range")
            flat = flat * d + i
        return flat

    def unflatten(self, flat: int) -> tuple[int, ...]:
        if not 0 <= flat < self.size:
            raise ValueError("flat index out of range")
        out = []
        for d in reversed(self.dims):
            out.append(flat % d)
            flat //= d
        return tuple(reversed(out))


def _max_abs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    if arr.dtype == object:
        return max((abs(int(x)) for x in arr.flat), default=0)
    return int(np.max(np.abs(arr)))


def _gcd_reduce(num: np.ndarray, den: int) -> tuple[np.ndarray, int]:
    if den == 1:
        return num, 1
    if num.dtype == object:
        g = den
        for x in num.flat:
            g = math.gcd(g, abs(int(x)))
            if g == 1:
                return num, den
    else:
        g = math.gcd(int(np.gcd.reduce(np.abs(num), axis=None)), den)
    if g > 1:
        num = num // g
        den //= g
    return num, den


class Matrix:
    """Immutable exact matrix over QQ or GF(p)."""

    __slots__ = ("field", "rows", "cols", "_num", "_den")

    def __init__(self, field: FieldSpec, rows: int, cols: int, num: np.ndarray, den: int = 1):
        # internal constructor; use the factory classmethods
        self.field = field
        self.rows = rows
        self.cols = cols
        self._num = num
        self._den = den

    # -- construction ---------------------------------------------------

    @classmethod
    def _make(cls, field: FieldSpec, num: np.ndarray, den: int = 1) -> "Matrix":
        rows, cols = num.shape
        if field.kind is FieldKind.PRIME:
            p = field.p
            if num.dtype == object:
                num = np.array([[int(x) % p for x in row] for row in num], dtype=object)
                if p < 2 ** 31:
                    num = num.astype(np.int64)
            else:
                num = num.astype(np.int64, copy=False) % p
            return cls(field, rows, cols, num, 1)
        if den < 0:
            num, den = -num, -den
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        num, den = _gcd_reduce(num, den)
        if num.dtype != object and _max_abs(num) < _INT64_SAFE:
            num = num.astype(np.int64, copy=False)
        return cls(field, rows, cols, num, den)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols, np.zeros((rows, cols), dtype=np.int64), 1)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        return cls(field, n, n, np.eye(n, dtype=np.int64), 1)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[ScalarLike | str]]) -> "Matrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        vals = [[_to_fraction(field, v) for v in row] for row in rows]
        if field.kind is FieldKind.PRIME:
            num = np.array(
                [[_residue(field.p, v) for v in row] for row in vals], dtype=object
            ).reshape(nr, nc)
            return cls._make(field, num, 1)
        den = 1
        for row in vals:
            for v in row:
                den = den * v.denominator // math.gcd(den, v.denominator)
        num = np.array(
            [[int(v * den) for v in row] for row in vals], dtype=object
        ).reshape(nr, nc)
        return cls._make(field, num, den)

    @classmethod
    def from_entries(
        cls,
        field: FieldSpec,
        rows: int,
        cols: int,
        entries: Iterable[tuple[int, int, ScalarLike | str]],
    ) -> "Matrix":
        vals: dict[tuple[int, int], Fraction] = {}
        for r, c, v in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise ShapeMismatch(f"entry ({r},{c}) outside {rows}x{cols}")
            vals[(r, c)] = vals.get((r, c), Fraction(0)) + _to_fraction(field, v)
        num = np.zeros((rows, cols), dtype=object)
        if field.kind is FieldKind.PRIME:
            for (r, c), v in vals.items():
                num[r, c] = _residue(field.p, v)
            return cls._make(field, num, 1)
        den = 1
        for v in vals.values():
            den = den * v.denominator // math.gcd(den, v.denominator)
        for (r, c), v in vals.items():
            num[r, c] = int(v * den)
        return cls._make(field, num, den)

    @classmethod
    def basis_column(cls, field: FieldSpec, n: int, i: int) -> "Matrix":
        num = np.zeros((n, 1), dtype=np.int64)
        num[i, 0] = 1
        return cls(field, n, 1, num, 1)

    @classmethod
    def row_vector(cls, field: FieldSpec, values: Sequence[ScalarLike | str]) -> "Matrix":
        return cls.from_rows(field, [list(values)])

    @classmethod
    def column_vector(cls, field: FieldSpec, values: Sequence[ScalarLike | str]) -> "Matrix":
        return cls.from_rows(field, [[v] for v in values])

    # -- raw access (read-only by convention) -----------------------------

    @property
    def nums(self) -> np.ndarray:
        return self._num

    @property
    def den(self) -> int:
        return self._den

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def entry(self, r: int, c: int) -> Scalar:
        if self.field.kind is FieldKind.PRIME:
            return Scalar(self.field, int(self._num[r, c]))
        return Scalar(self.field, Fraction(int(self._num[r, c]), self._den))

    def column(self, c: int) -> list[Scalar]:
        return [self.entry(r, c) for r in range(self.rows)]

    def row(self, r: int) -> list[Scalar]:
        return [self.entry(r, c) for c in range(self.cols)]

    def is_zero(self) -> bool:
        return not np.any(self._num)

    def key(self):
        """Hashable canonical form (used for set comparisons)."""
        return (self.rows, self.cols, self._den, tuple(int(x) for x in self._num.flat))

    # -- arithmetic -------------------------------------------------------

    def _check_field(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.shape} @ {other.shape}")
        a, b = self._num, other._num
        inner = max(self.cols, 1)
        if self.field.kind is FieldKind.PRIME:
            p = self.field.p
            if a.dtype == object or b.dtype == object or (p - 1) ** 2 * inner >= _INT64_SAFE:
                a = a.astype(object)
                b = b.astype(object)
            return Matrix._make(self.field, (a @ b) % p, 1)
        bound = _max_abs(a) * _max_abs(b) * inner
        if a.dtype == object or b.dtype == object or bound >= _INT64_SAFE:
            a = a.astype(object)
            b = b.astype(object)
        return Matrix._make(self.field, a @ b, self._den * other._den)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        if self.field.kind is FieldKind.PRIME:
            return Matrix._make(self.field, self._num + other._num, 1)
        d = self._den * other._den // math.gcd(self._den, other._den)
        fa, fb = d // self._den, d // other._den
        a, b = self._num, other._num
        if (
            a.dtype == object
            or b.dtype == object
            or max(_max_abs(a) * fa, _max_abs(b) * fb) * 2 >= _INT64_SAFE
        ):
            a = a.astype(object)
            b = b.astype(object)
        return Matrix._make(self.field, a * fa + b * fb, d)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        if self.field.kind is FieldKind.PRIME:
            return Matrix._make(self.field, -self._num.astype(object), 1)
        return Matrix(self.field, self.rows, self.cols, -self._num, self._den)

    def scale(self, s: ScalarLike) -> "Matrix":
        v = _to_fraction(self.field, s)
        if self.field.kind is FieldKind.PRIME:
            return Matrix._make(self.field, self._num.astype(object) * _residue(self.field.p, v), 1)
        a = self._num
        if a.dtype == object or _max_abs(a) * abs(v.numerator) >= _INT64_SAFE:
            a = a.astype(object)
        return Matrix._make(self.field, a * v.numerator, self._den * v.denominator)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows, self._num.T.copy(), self._den)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and self._den == other._den
            and np.array_equal(self._num, other._num)
        )

    def __hash__(self):
        return hash((self.field,) + self.key())

    def __repr__(self):
        return f"Matrix({self.field}, {self.rows}x{self.cols})"

    def pretty(self) -> str:
        return "\n".join(" ".join(str(self.entry(r, c)) for c in range(self.cols)) for r in range(self.rows))


def _to_fraction(field: FieldSpec, v) -> Fraction:
    if isinstance(v, Scalar):
        if v.field != field:
            raise FieldMismatch(f"{field} vs {v.field}")
        return Fraction(v.value)
    if isinstance(v, str):
        s = Scalar.parse(field, v)
        return Fraction(s.value)
    return Fraction(v)


def _residue(p: int, v: Fraction) -> int:
    """Canonical residue of an exact rational mod p (denominator inverted)."""
    if v.denominator == 1:
        return v.numerator % p
    return v.numerator * pow(v.denominator, p - 2, p) % p


# -- tensor operations -----------------------------------------------------


def kron(f: Matrix, g: Matrix) -> Matrix:
    """Matrix of f (x) g under the row-major flattening convention."""
    if f.field != g.field:
        raise FieldMismatch(f"{f.field} vs {g.field}")
    a, b = f.nums, g.nums
    if f.field.kind is FieldKind.RATIONAL:
        if a.dtype == object or b.dtype == object or _max_abs(a) * _max_abs(b) >= _INT64_SAFE:
            a = a.astype(object)
            b = b.astype(object)
    else:
        if (f.field.p - 1) ** 2 >= _INT64_SAFE:
            a = a.astype(object)
            b = b.astype(object)
    return Matrix._make(f.field, np.kron(a, b), f.den * g.den)


def kron_all(*mats: Matrix) -> Matrix:
    out = mats[0]
    for m in mats[1:]:
        out = kron(out, m)
    return out


def apply_middle(op: Matrix, mat: Matrix, left: int, right: int) -> Matrix:
    """(I_left (x) op (x) I_right) @ mat without materializing the Kronecker.

    mat's row space must be left * op.cols * right in the row-major convention.
    """
    if op.field != mat.field:
        raise FieldMismatch(f"{op.field} vs {mat.field}")
    if mat.rows != left * op.cols * right:
        raise ShapeMismatch("apply_middle: row space does not factor as stated")
    a = op.nums
    b = mat.nums
    if a.dtype != object and b.dtype != object:
        if _max_abs(a) * _max_abs(b) * op.cols >= _INT64_SAFE:
            a = a.astype(object)
            b = b.astype(object)
    t = b.reshape(left, op.cols, right * mat.cols)
    out = np.tensordot(a, t, axes=([1], [1]))  # [op.rows, left, right*cols]
    out = out.transpose(1, 0, 2).reshape(left * op.rows * right, mat.cols)
    if op.field.kind is FieldKind.PRIME:
        return Matrix._make(op.field, out % op.field.p, 1)
    return Matrix._make(op.field, out, op.den * mat.den)


def apply_kron2(op1: Matrix, op2: Matrix, mat: Matrix) -> Matrix:
    """kron(op1, op2) @ mat without materializing the Kronecker product."""
    if op1.field != mat.field or op2.field != mat.field:
        raise FieldMismatch("apply_kron2: field mismatch")
    if mat.rows != op1.cols * op2.cols:
        raise ShapeMismatch("apply_kron2: row space does not factor as stated")
    a1, a2, b = op1.nums, op2.nums, mat.nums
    if a1.dtype != object and a2.dtype != object and b.dtype != object:
        bound = _max_abs(a1) * _max_abs(a2) * _max_abs(b) * op1.cols * op2.cols
        if bound >= _INT64_SAFE:
            a1 = a1.astype(object)
            a2 = a2.astype(object)
            b = b.astype(object)
    t = b.reshape(op1.cols, op2.cols, mat.cols)
    y = np.tensordot(a2, t, axes=([1], [1]))  # [r2, op1.cols, cols]
    z = np.tensordot(a1, y, axes=([1], [1]))  # [r1, r2, cols]
    out = z.reshape(op1.rows * op2.rows, mat.cols)
    if op1.field.kind is FieldKind.PRIME:
        return Matrix._make(op1.field, out % op1.field.p, 1)
    return Matrix._make(op1.field, out, op1.den * op2.den * mat.den)


def permute_tensor_factors(field: FieldSpec, dims: Sequence[int], perm: Sequence[int]) -> Matrix:
    """Permutation matrix sending e_{s_0} (x) ... (x) e_{s_{m-1}} to the tensor
    whose k-th factor is the perm[k]-th input factor."""
    dims = tuple(dims)
    out_dims = tuple(dims[p] for p in perm)
    src = TensorIndex(dims)
    dst = TensorIndex(out_dims)
    num = np.zeros((dst.size, src.size), dtype=np.int64)
    for s in np.ndindex(*dims):
        t = tuple(s[p] for p in perm)
        num[dst.flatten(t), src.flatten(s)] = 1
    return Matrix(field, dst.size, src.size, num, 1)


def switch(m: int, n: int, field: FieldSpec) -> Matrix:
    """The switch map V (x) W -> W (x) V, tau(v_i (x) w_j) = w_j (x) v_i."""
    return permute_tensor_factors(field, (m, n), (1, 0))


# -- solving ---------------------------------------------------------------


def _rref_prime(field: FieldSpec, aug: np.ndarray, acols: int):
    p = field.p
    if p >= 2 ** 31 and aug.dtype != object:
        aug = aug.astype(object)
    aug = aug % p
    rows = aug.shape[0]
    r = 0
    pivots = []
    for c in range(acols):
        pr = None
        for i in range(r, rows):
            if aug[i, c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            aug[[r, pr]] = aug[[pr, r]]
        inv = pow(int(aug[r, c]), p - 2, p)
        aug[r, c:] = (aug[r, c:] * inv) % p
        for i in range(rows):
            f = aug[i, c]
            if i != r and f:
                aug[i, c:] = (aug[i, c:] - f * aug[r, c:]) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return aug, pivots


def _rref_rational(aug: np.ndarray, acols: int):
    rows = aug.shape[0]
    r = 0
    pivots = []
    for c in range(acols):
        pr = None
        for i in range(r, rows):
            if aug[i, c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            aug[[r, pr]] = aug[[pr, r]]
        aug[r, c:] = aug[r, c:] / aug[r, c]
        for i in range(rows):
            f = aug[i, c]
            if i != r and f:
                aug[i, c:] = aug[i, c:] - f * aug[r, c:]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return aug, pivots


def _solve_impl(a: Matrix, b: Matrix) -> tuple[Optional[Matrix], bool]:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if a.rows != b.rows:
        raise ShapeMismatch("solve: row counts differ")
    field = a.field
    if field.kind is FieldKind.PRIME:
        aug = np.concatenate([a.nums, b.nums], axis=1)
        red, pivots = _rref_prime(field, aug, a.cols)
        red = red % field.p
    else:
        aug = np.empty((a.rows, a.cols + b.cols), dtype=object)
        for i in range(a.rows):
            for j in range(a.cols):
                aug[i, j] = Fraction(int(a.nums[i, j]), a.den)
            for j in range(b.cols):
                aug[i, a.cols + j] = Fraction(int(b.nums[i, j]), b.den)
        red, pivots = _rref_rational(aug, a.cols)
    # consistency: beyond the pivot rows the a-part is zero, so the b-part must be too
    for i in range(len(pivots), a.rows):
        if any(red[i, a.cols:]):
            return None, False
    if field.kind is FieldKind.PRIME:
        x = np.zeros((a.cols, b.cols), dtype=red.dtype)
        for i, c in enumerate(pivots):
            x[c, :] = red[i, a.cols:]
        sol = Matrix._make(field, x, 1)
    else:
        rows = []
        zero = Fraction(0)
        lookup = {c: i for i, c in enumerate(pivots)}
        for c in range(a.cols):
            if c in lookup:
                rows.append([red[lookup[c], a.cols + j] for j in range(b.cols)])
            else:
                rows.append([zero] * b.cols)
        sol = Matrix.from_rows(field, rows)
    return sol, len(pivots) == a.cols


def solve(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """Some X with a @ X = b, or None when the system is inconsistent."""
    x, _ = _solve_impl(a, b)
    if __debug__ and x is not None:
        assert a @ x == b, "solve verification failed"
    return x


def solve_unique(a: Matrix, b: Matrix) -> tuple[Optional[Matrix], bool]:
    """Like solve, plus a flag telling whether the solution is unique."""
    x, unique = _solve_impl(a, b)
    if __debug__ and x is not None:
        assert a @ x == b, "solve verification failed"
    return x, unique


def invert(a: Matrix) -> Optional[Matrix]:
    """Exact inverse of a square matrix, or None when singular."""
    if a.rows != a.cols:
        raise ShapeMismatch("invert: matrix not square")
    x = solve(a, Matrix.identity(a.field, a.rows))
    if x is not None and __debug__:
        assert a @ x == Matrix.identity(a.field, a.rows)
    return x
