from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from twinrep.errors import DegreeMismatch
from twinrep.matrix import Matrix, integer_vector, intersect, nullspace, q_matmul, rank
from twinrep.ring import RAT_ONE, T, RatFunc

small = st.fractions(min_value=-3, max_value=3, max_denominator=3)


def q_matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@settings(max_examples=200)
@given(st.integers(1, 4).flatmap(lambda c: st.tuples(st.just(c), q_matrices(3, c))))
def test_nullspace_and_rank_match_sympy(data):
    cols, rows = data
    ref = sympy.Matrix(rows)
    basis = nullspace(rows, cols)
    assert len(basis) == cols - ref.rank()
    assert rank(rows) == ref.rank()
    for v in basis:
        assert all(x == 0 for x in ref * sympy.Matrix(v))


def test_intersect_of_planes():
    a = [[Fraction(1), Fraction(0), Fraction(0)], [Fraction(0), Fraction(1), Fraction(0)]]
    b = [[Fraction(0), Fraction(1), Fraction(0)], [Fraction(0), Fraction(0), Fraction(1)]]
    got = intersect(a, b, 3)
    assert [integer_vector(v) for v in got] == [[0, 1, 0]]


def test_integer_vector_normalization():
    assert integer_vector([Fraction(-1, 2), Fraction(1, 3), Fraction(0)]) == [3, -2, 0]


def test_det_and_products():
    m = Matrix([[1 - T, T], [2 - T, T - 1]])
    assert m.det() == RatFunc(-1)
    assert (m @ m).is_identity()
    sym = sympy.Matrix([[1 - sympy.Symbol("t"), sympy.Symbol("t")], [2 - sympy.Symbol("t"), sympy.Symbol("t") - 1]])
    assert sympy.expand(sym.det()) == -1


def test_embed_and_minor():
    m = Matrix.embed(4, ((0, 1), (1, 0)), 2)
    assert m[2, 3] == RAT_ONE and m[0, 0] == RAT_ONE and m[3, 3].is_zero()
    assert m.minor(2).is_identity()


def test_json_round_trip():
    m = Matrix([["t^-1", "0"], ["1 + t", "(1)/(1 + t)"]])
    assert Matrix.from_json(m.to_json()) == m
    assert m.to_json()["entries"][1] == ["1 + t", "(1)/(1 + t)"]
    with pytest.raises(DegreeMismatch):
        Matrix.from_json({"degree": 3, "entries": [["1", "0"], ["0", "1"]]})


def test_specialize():
    m = Matrix([[1 - T, T], [2 - T, T - 1]])
    assert m.specialize(3) == [[-2, 3], [-1, 2]]
    assert q_matmul(m.specialize(3), m.specialize(3)) == [[1, 0], [0, 1]]
