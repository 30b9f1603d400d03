from __future__ import annotations

import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import char_poly_oracle, determinant_oracle
from pgspectra import (
    FactoredPoly,
    IntMatrix,
    IntPolynomial,
    block,
    char_poly,
    determinant,
    expand,
    identity,
    kron,
    ones,
    poly_exact_div,
    x_plus,
    zeros,
)
from pgspectra.errors import (
    BitGrowthExceeded,
    DimensionMismatch,
    InexactDivision,
    NotSquare,
)
from pgspectra.linalg import MAX_BITS_ENV, poly_from_json, poly_to_json


# ---------------------------------------------------------------------------
# strategies
# ---------------------------------------------------------------------------

entries_st = st.integers(-9, 9)


@st.composite
def square_matrices(draw, max_n: int = 5) -> IntMatrix:
    n = draw(st.integers(1, max_n))
    flat = draw(st.lists(entries_st, min_size=n * n, max_size=n * n))
    return IntMatrix(n, n, tuple(flat))


polys_st = st.builds(
    IntPolynomial.from_coeffs, st.lists(st.integers(-20, 20), min_size=0, max_size=6)
)
nonzero_polys_st = polys_st.filter(bool)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


def test_matrix_construction_and_access():
    m = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert (m.rows, m.cols) == (2, 3)
    assert m[0, 2] == 3
    assert m.row(1) == (4, 5, 6)
    assert m.to_rows() == [[1, 2, 3], [4, 5, 6]]
    assert m.transpose().to_rows() == [[1, 4], [2, 5], [3, 6]]


def test_matrix_shape_validation():
    with pytest.raises(DimensionMismatch):
        IntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(DimensionMismatch):
        IntMatrix.from_rows([[1, 2], [3]])


def test_matrix_arithmetic():
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    b = IntMatrix.from_rows([[0, 1], [1, 0]])
    assert (a + b).to_rows() == [[1, 3], [4, 4]]
    assert (a - b).to_rows() == [[1, 1], [2, 4]]
    assert (3 * a).to_rows() == [[3, 6], [9, 12]]
    assert (a @ b).to_rows() == [[2, 1], [4, 3]]
    assert a.apply((1, 1)) == (3, 7)
    assert a.trace() == 5


def test_matmul_shape_check():
    a = IntMatrix.from_rows([[1, 2, 3]])
    with pytest.raises(DimensionMismatch):
        a @ a


def test_identity_ones_zeros():
    assert identity(2).to_rows() == [[1, 0], [0, 1]]
    assert zeros(1, 3).to_rows() == [[0, 0, 0]]
    assert ones(2, 2).to_rows() == [[1, 1], [1, 1]]


def test_kron_example():
    got = kron(IntMatrix.from_rows([[1, 2], [0, 1]]), ones(1, 2))
    assert got.to_rows() == [[1, 1, 2, 2], [0, 0, 1, 1]]


def test_kron_mixed_shapes():
    got = kron(ones(2, 1), identity(2))
    assert got.to_rows() == [[1, 0], [0, 1], [1, 0], [0, 1]]


def test_block_assembly():
    grid = [[identity(2), zeros(2, 1)], [ones(1, 2), 5 * identity(1)]]
    assert block(grid).to_rows() == [[1, 0, 0], [0, 1, 0], [1, 1, 5]]


def test_block_rejects_ragged_grid():
    with pytest.raises(DimensionMismatch):
        block([[identity(2), zeros(1, 1)]])


@given(square_matrices(max_n=4), square_matrices(max_n=4))
def test_trace_of_product_is_symmetric(a: IntMatrix, b: IntMatrix):
    if a.rows != b.rows:
        return
    assert (a @ b).trace() == (b @ a).trace()


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


def test_poly_normalization_and_degree():
    assert IntPolynomial.from_coeffs([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPolynomial.from_coeffs([0, 0]).coeffs == ()
    assert IntPolynomial(()).degree == -1
    assert x_plus(3).coeffs == (3, 1)
    assert x_plus(0).degree == 1


def test_poly_arithmetic():
    p = IntPolynomial((1, 1))  # x + 1
    q = IntPolynomial((-1, 1))  # x - 1
    assert (p * q).coeffs == (-1, 0, 1)
    assert (p + q).coeffs == (0, 2)
    assert (p - q).coeffs == (2,)
    assert (p**3).coeffs == (1, 3, 3, 1)
    assert (p**0).coeffs == (1,)
    assert p(5) == 6
    assert (p * q)(3) == 8


def test_poly_leading_and_monic():
    assert IntPolynomial((2, 0, 1)).is_monic()
    assert not IntPolynomial((1, 2)).is_monic()
    assert IntPolynomial((1, 2)).leading == 2


def test_exact_div_examples():
    num = IntPolynomial((-1, 0, 1))  # x^2 - 1
    assert num.exact_div(x_plus(1)).coeffs == (-1, 1)
    assert num.exact_div(x_plus(-1)).coeffs == (1, 1)
    zero = IntPolynomial(())
    assert zero.exact_div(x_plus(1)).coeffs == ()


def test_exact_div_failures():
    with pytest.raises(InexactDivision):
        IntPolynomial((1, 0, 1)).exact_div(x_plus(1))  # x^2 + 1 by x + 1
    with pytest.raises(InexactDivision):
        IntPolynomial((0, 1)).exact_div(IntPolynomial((0, 2)))  # x by 2x
    with pytest.raises(InexactDivision):
        x_plus(1).exact_div(IntPolynomial((-1, 0, 1)))  # degree too low
    with pytest.raises(InexactDivision):
        x_plus(1).exact_div(IntPolynomial(()))


@given(polys_st, nonzero_polys_st)
def test_mul_then_exact_div_roundtrip(a: IntPolynomial, b: IntPolynomial):
    assert poly_exact_div(a * b, b) == a


@given(polys_st, polys_st, st.integers(-5, 5))
def test_poly_ring_laws_at_points(a: IntPolynomial, b: IntPolynomial, x: int):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


def test_poly_pretty():
    assert IntPolynomial((-13, -25, -5, 1)).pretty() == "x^3 - 5*x^2 - 25*x - 13"
    assert IntPolynomial(()).pretty() == "0"
    assert IntPolynomial((0, -1)).pretty() == "-x"
    assert x_plus(2).pretty("t") == "t + 2"


def test_poly_json_roundtrip():
    p = IntPolynomial((-(10**30), 0, 7))
    text = poly_to_json(p)
    assert json.loads(text) == {"coeffs": [str(-(10**30)), "0", "7"]}
    assert poly_from_json(text) == p


# ---------------------------------------------------------------------------
# factored polynomials
# ---------------------------------------------------------------------------


def test_factored_expand():
    f = FactoredPoly.of((x_plus(1), 1), (x_plus(2), 2))
    assert f.degree == 3
    assert expand(f).coeffs == (4, 8, 5, 1)
    assert f.expand() == expand(f)


def test_factored_of_drops_zero_multiplicity():
    f = FactoredPoly.of((x_plus(1), 0), (x_plus(5), 1))
    assert len(f.factors) == 1
    assert expand(f) == x_plus(5)


def test_factored_rejects_bad_multiplicity():
    with pytest.raises(ValueError):
        FactoredPoly(((x_plus(1), -1),))


def test_factored_pretty_and_json():
    f = FactoredPoly.of((x_plus(1), 2), (IntPolynomial((-3, -4, 1)), 1))
    assert f.pretty() == "(x + 1)^2 * (x^2 - 4*x - 3)"
    back = FactoredPoly.from_json_obj(f.to_json_obj())
    assert expand(back) == expand(f)


# ---------------------------------------------------------------------------
# characteristic polynomial
# ---------------------------------------------------------------------------


def test_char_poly_hand_examples():
    assert char_poly(IntMatrix.from_rows([[0]])).coeffs == (0, 1)
    assert char_poly(identity(3)).coeffs == (-1, 3, -3, 1)  # (x - 1)^3
    assert char_poly(IntMatrix.from_rows([[2, 1], [1, 2]])).coeffs == (3, -4, 1)
    assert char_poly(IntMatrix(0, 0, ())).coeffs == (1,)


def test_char_poly_star_distance_matrix():
    # distance matrix of the star on four vertices, centre first
    d = IntMatrix.from_rows(
        [[0, 1, 1, 1], [1, 0, 2, 2], [1, 2, 0, 2], [1, 2, 2, 0]]
    )
    got = char_poly(d)
    assert got.coeffs == (-12, -28, -15, 0, 1)
    assert got.coeffs == char_poly_oracle(d)
    factored = FactoredPoly.of((x_plus(2), 2), (IntPolynomial((-3, -4, 1)), 1))
    assert expand(factored) == got


def test_char_poly_requires_square():
    with pytest.raises(NotSquare):
        char_poly(ones(2, 3))


def test_char_poly_matches_oracle_on_seeded_matrices():
    rng = random.Random(20240915)
    for _ in range(60):
        n = rng.randint(1, 5)
        m = IntMatrix(n, n, tuple(rng.randint(-10, 10) for _ in range(n * n)))
        assert char_poly(m).coeffs == char_poly_oracle(m)


@given(square_matrices())
def test_char_poly_shape_invariants(m: IntMatrix):
    p = char_poly(m)
    assert p.degree == m.rows
    assert p.is_monic()
    assert p.coeffs[m.rows - 1] == -m.trace()
    assert p(0) == (-1) ** m.rows * determinant(m)


# ---------------------------------------------------------------------------
# determinant
# ---------------------------------------------------------------------------


def test_determinant_examples():
    assert determinant(IntMatrix.from_rows([[1, 2], [3, 4]])) == -2
    assert determinant(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert determinant(IntMatrix.from_rows([[1, 2], [2, 4]])) == 0
    assert determinant(IntMatrix(0, 0, ())) == 1
    assert determinant(identity(6)) == 1


def test_determinant_zero_column_short_circuit():
    m = IntMatrix.from_rows([[0, 1, 2], [0, 3, 4], [0, 5, 6]])
    assert determinant(m) == 0


def test_determinant_requires_square():
    with pytest.raises(NotSquare):
        determinant(zeros(2, 3))


@given(square_matrices())
def test_determinant_matches_oracle(m: IntMatrix):
    assert determinant(m) == determinant_oracle(m)


@given(square_matrices(max_n=4))
def test_determinant_of_transpose(m: IntMatrix):
    assert determinant(m) == determinant(m.transpose())


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def test_matrix_csv_default_labels():
    m = IntMatrix.from_rows([[0, 1], [1, 0]])
    assert m.to_csv() == "v0,v1\n0,1\n1,0\n"


def test_matrix_csv_quotes_awkward_labels():
    m = IntMatrix.from_rows([[0, 1], [1, 0]])
    text = m.to_csv(["(0,0)", "(0,1)"])
    assert text.splitlines()[0] == '"(0,0)","(0,1)"'


def test_matrix_csv_label_count_checked():
    with pytest.raises(DimensionMismatch):
        identity(2).to_csv(["only-one"])


def test_matrix_json_roundtrip():
    m = IntMatrix.from_rows([[10**25, -1], [0, 3]])
    obj = m.to_json_obj()
    assert obj["entries"][0][0] == str(10**25)
    assert IntMatrix.from_json_obj(obj) == m


def test_matrix_json_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        IntMatrix.from_json_obj({"rows": 3, "cols": 2, "entries": [["1", "2"]]})


# ---------------------------------------------------------------------------
# bit-growth guard
# ---------------------------------------------------------------------------


def test_bit_cap_aborts_char_poly(monkeypatch):
    monkeypatch.setenv(MAX_BITS_ENV, "8")
    with pytest.raises(BitGrowthExceeded):
        char_poly(IntMatrix.from_rows([[512]]))


def test_bit_cap_aborts_determinant(monkeypatch):
    monkeypatch.setenv(MAX_BITS_ENV, "8")
    with pytest.raises(BitGrowthExceeded):
        determinant(IntMatrix.from_rows([[300, 0], [0, 300]]))


def test_bit_cap_ignored_when_unset(monkeypatch):
    monkeypatch.delenv(MAX_BITS_ENV, raising=False)
    assert char_poly(IntMatrix.from_rows([[512]])).coeffs == (-512, 1)


def test_bit_cap_rejects_garbage(monkeypatch):
    monkeypatch.setenv(MAX_BITS_ENV, "many")
    with pytest.raises(BitGrowthExceeded):
        char_poly(identity(2))
