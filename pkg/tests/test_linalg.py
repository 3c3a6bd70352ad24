import random
from fractions import Fraction

import pytest

from smashkit.errors import FieldMismatch, ShapeMismatch
from smashkit.fields import FieldSpec, Scalar
from smashkit.linalg import (
    Matrix,
    TensorIndex,
    invert,
    kron,
    permute_tensor_factors,
    solve,
    solve_unique,
    switch,
)


def rand_matrix(field, rows, cols, rng):
    if field.kind.value == "prime":
        return Matrix.from_rows(field, [[rng.randrange(field.p) for _ in range(cols)] for _ in range(rows)])
    return Matrix.from_rows(
        field, [[Fraction(rng.randrange(-4, 5), rng.randrange(1, 4)) for _ in range(cols)] for _ in range(rows)]
    )


# -- TensorIndex -------------------------------------------------------------


def test_tensor_index_row_major():
    ti = TensorIndex((2, 3, 4))
    # ((i1*d2 + i2)*d3 + i3)
    assert ti.flatten((1, 2, 3)) == (1 * 3 + 2) * 4 + 3
    for flat in range(ti.size):
        assert ti.flatten(ti.unflatten(flat)) == flat


# -- kron --------------------------------------------------------------------


def test_kron_identity(QQ):
    assert kron(Matrix.identity(QQ, 2), Matrix.identity(QQ, 3)) == Matrix.identity(QQ, 6)


def test_kron_1x1_gf5(GF5):
    a = Matrix.from_rows(GF5, [[2]])
    b = Matrix.from_rows(GF5, [[3]])
    assert kron(a, b) == Matrix.from_rows(GF5, [[1]])


def test_kron_switch_basis_action(QQ):
    # kron(switch22, I2) sends e0 (x) e1 (x) e0 to e1 (x) e0 (x) e0
    m = kron(switch(2, 2, QQ), Matrix.identity(QQ, 2))
    src = TensorIndex((2, 2, 2))
    v = Matrix.basis_column(QQ, 8, src.flatten((0, 1, 0)))
    assert m @ v == Matrix.basis_column(QQ, 8, src.flatten((1, 0, 0)))


def test_kron_field_mismatch(QQ, GF5):
    with pytest.raises(FieldMismatch):
        kron(Matrix.identity(QQ, 2), Matrix.identity(GF5, 2))


def test_kron_bilinear_on_basis(GF7):
    rng = random.Random(7)
    f = rand_matrix(GF7, 3, 2, rng)
    g = rand_matrix(GF7, 2, 3, rng)
    fg = kron(f, g)
    for i in range(2):
        for j in range(3):
            v = Matrix.basis_column(GF7, 2, i)
            w = Matrix.basis_column(GF7, 3, j)
            assert fg @ kron(v, w) == kron(f @ v, g @ w)


def test_kron_associative(QQ):
    rng = random.Random(1)
    a = rand_matrix(QQ, 2, 2, rng)
    b = rand_matrix(QQ, 3, 2, rng)
    c = rand_matrix(QQ, 2, 3, rng)
    assert kron(kron(a, b), c) == kron(a, kron(b, c))


# -- switch ------------------------------------------------------------------


def test_switch_with_trivial_factor(QQ):
    assert switch(1, 5, QQ) == Matrix.identity(QQ, 5)
    assert switch(5, 1, QQ) == Matrix.identity(QQ, 5)


def test_switch_22_flat_index(QQ):
    m = switch(2, 2, QQ)
    assert m @ Matrix.basis_column(QQ, 4, 1) == Matrix.basis_column(QQ, 4, 2)


def test_switch_inverse(QQ):
    assert switch(3, 2, QQ) @ switch(2, 3, QQ) == Matrix.identity(QQ, 6)


def test_permute_tensor_factors(QQ):
    p = permute_tensor_factors(QQ, (2, 3, 4), (2, 0, 1))
    ti_in = TensorIndex((2, 3, 4))
    ti_out = TensorIndex((4, 2, 3))
    v = Matrix.basis_column(QQ, 24, ti_in.flatten((1, 2, 3)))
    assert p @ v == Matrix.basis_column(QQ, 24, ti_out.flatten((3, 1, 2)))


# -- solve / invert -----------------------------------------------------------


def test_solve_identity(QQ):
    rng = random.Random(2)
    b = rand_matrix(QQ, 3, 2, rng)
    assert solve(Matrix.identity(QQ, 3), b) == b


def test_solve_scalar(QQ):
    a = Matrix.from_rows(QQ, [[2]])
    b = Matrix.from_rows(QQ, [[1]])
    assert solve(a, b) == Matrix.from_rows(QQ, [[Fraction(1, 2)]])


def test_solve_gf3(GF3):
    a = Matrix.from_rows(GF3, [[1, 1], [0, 1]])
    x = solve(a, Matrix.identity(GF3, 2))
    assert x == Matrix.from_rows(GF3, [[1, 2], [0, 1]])
    assert a @ x == Matrix.identity(GF3, 2)


def test_solve_no_solution(QQ):
    a = Matrix.from_rows(QQ, [[1, 1], [1, 1]])
    b = Matrix.from_rows(QQ, [[1], [0]])
    assert solve(a, b) is None


def test_solve_underdetermined_flags_nonunique(QQ):
    a = Matrix.from_rows(QQ, [[1, 1]])
    b = Matrix.from_rows(QQ, [[3]])
    x, unique = solve_unique(a, b)
    assert x is not None and not unique
    assert a @ x == b


def test_invert_singular(QQ):
    assert invert(Matrix.from_rows(QQ, [[1, 1], [1, 1]])) is None


def test_invert_random_gf5(GF5):
    rng = random.Random(3)
    found = 0
    while found < 5:
        a = rand_matrix(GF5, 4, 4, rng)
        inv = invert(a)
        if inv is None:
            continue
        assert a @ inv == Matrix.identity(GF5, 4)
        assert inv @ a == Matrix.identity(GF5, 4)
        found += 1


def test_invert_random_rational(QQ):
    rng = random.Random(4)
    found = 0
    while found < 5:
        a = rand_matrix(QQ, 3, 3, rng)
        inv = invert(a)
        if inv is None:
            continue
        assert a @ inv == Matrix.identity(QQ, 3)
        found += 1


# -- arithmetic details --------------------------------------------------------


def test_rational_normal_form(QQ):
    a = Matrix.from_rows(QQ, [[Fraction(2, 4), Fraction(1, 2)]])
    b = Matrix.from_rows(QQ, [["1/2", "2/4"]])
    assert a == b
    assert a.den == 2
    assert a.entry(0, 1) == Scalar(QQ, Fraction(1, 2))


def test_add_mixed_denominators(QQ):
    a = Matrix.from_rows(QQ, [[Fraction(1, 2)]])
    b = Matrix.from_rows(QQ, [[Fraction(1, 3)]])
    assert a + b == Matrix.from_rows(QQ, [[Fraction(5, 6)]])
    assert a - b == Matrix.from_rows(QQ, [[Fraction(1, 6)]])


def test_scale_prime_by_fraction(GF7):
    a = Matrix.identity(GF7, 2)
    assert a.scale(Fraction(3, 5)) == Matrix.identity(GF7, 2).scale(2)


def test_matmul_shape_mismatch(QQ):
    with pytest.raises(ShapeMismatch):
        Matrix.identity(QQ, 2) @ Matrix.identity(QQ, 3)


def test_big_values_promote_to_object(QQ):
    big = 2 ** 40
    a = Matrix.from_rows(QQ, [[big, big], [big, big]])
    sq = a @ a
    assert sq.entry(0, 0) == Scalar(QQ, Fraction(2 * big * big))


def test_transpose_and_entries(GF5):
    a = Matrix.from_rows(GF5, [[1, 2, 3], [4, 0, 1]])
    assert a.T.shape == (3, 2)
    assert a.T.entry(2, 1) == Scalar(GF5, 1)
    assert a.row(0) == [Scalar(GF5, v) for v in (1, 2, 3)]
    assert a.column(1) == [Scalar(GF5, 2), Scalar(GF5, 0)]
