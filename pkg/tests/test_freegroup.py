import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twinrep.errors import IndexOutOfRange, RankMismatch
from twinrep.freegroup import (
    FreeAut,
    FreeWord,
    GroupRingElt,
    fox_derivative,
    jacobian_matrix,
    magnus_specialize,
    parse_automorphism,
    parse_word,
    reduce_word,
)
from twinrep.reps import eta1_automorphism, eta1_matrix
from twinrep.matrix import Matrix
from twinrep.ring import T, parse_laurent
from twinrep.suite import fox_identity_holds
from strategies import free_words


def w(n, text):
    return parse_word(text, n)


def ring(n, text_terms):
    return GroupRingElt(n, {parse_word(t, n): c for t, c in text_terms})


# -- words ------------------------------------------------------------------

@pytest.mark.parametrize("raw, expected", [
    ([1, -1], ()),
    ([1, 2, -2, 1], (1, 1)),
    ([1, -2, 2, -1, 3], (3,)),
])
def test_reduce_word(raw, expected):
    assert reduce_word(raw, 3).letters == expected


def test_reduce_word_rejects_bad_index():
    with pytest.raises(IndexOutOfRange):
        reduce_word([1, 4], 3)


def test_multiply_and_invert():
    assert w(2, "x1*x2") * w(2, "x2^-1") == w(2, "x1")
    assert w(2, "x1*x2*x1^-1").inverse() == w(2, "x1*x2^-1*x1^-1")
    assert (w(2, "x1*x2*x1^-1") * w(2, "x1*x2^-1*x1^-1")).is_identity()
    with pytest.raises(RankMismatch):
        w(2, "x1") * w(3, "x1")


@given(free_words())
def test_inverse_cancels(u):
    assert (u * u.inverse()).is_identity()
    assert reduce_word(u.letters, u.rank) == u


def test_text_form():
    assert str(w(3, "x1*x1*x2^-1*x2^-1*x3")) == "x1^2*x2^-2*x3"
    assert str(FreeWord.identity(2)) == "1"
    assert str(ring(2, [("1", 1), ("x1*x2*x1^-1", -1)])) == "1 - x1*x2*x1^-1"


# -- automorphisms --------------------------------------------------------------

def test_eta1_image_of_xi():
    phi = eta1_automorphism(3, 1)
    assert phi(w(3, "x1")) == w(3, "x1*x2*x1^-1")
    assert phi(phi(w(3, "x1"))) == w(3, "x1")
    assert eta1_automorphism(4, 1)(w(4, "x3")) == w(4, "x3")


@settings(max_examples=200)
@given(st.integers(2, 5).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1), free_words(rank=n))))
def test_eta1_is_an_involution_on_words(data):
    n, i, u = data
    phi = eta1_automorphism(n, i)
    assert phi(phi(u)) == u


@given(free_words(rank=3), free_words(rank=3))
def test_automorphism_is_homomorphism(u, v):
    phi = eta1_automorphism(3, 2)
    assert phi(u * v) == phi(u) * phi(v)


def test_parse_automorphism_file():
    phi = parse_automorphism("x1 -> x1*x2*x1^-1\nx2 -> x1*x2^-1*x1*x2*x1^-1\n")
    assert phi == eta1_automorphism(2, 1)
    # unlisted generators are fixed
    assert parse_automorphism("x2 -> x2^-1", rank=3).images[0] == w(3, "x1")


# -- Fox calculus -------------------------------------------------------------------

def test_fox_case_a():
    n = 3
    assert fox_derivative(w(n, "x1*x2*x1^-1"), 1) == ring(n, [("1", 1), ("x1*x2*x1^-1", -1)])


def test_fox_case_c():
    assert fox_derivative(w(3, "x2*x3*x2^-1"), 3) == ring(3, [("x2", 1)])


def test_fox_case_d():
    got = fox_derivative(w(2, "x1*x2^-1*x1*x2*x1^-1"), 2)
    assert got == ring(2, [("x1*x2^-1", -1), ("x1*x2^-1*x1", 1)])


def test_fox_basic_rules():
    n = 2
    assert fox_derivative(w(n, "x1"), 1) == GroupRingElt.scalar(n, 1)
    assert fox_derivative(w(n, "x1"), 2).is_zero()
    assert fox_derivative(w(n, "x1^-1"), 1) == ring(n, [("x1^-1", -1)])
    with pytest.raises(IndexOutOfRange):
        fox_derivative(w(n, "x1"), 3)


@settings(max_examples=300)
@given(free_words())
def test_fundamental_identity(u):
    assert fox_identity_holds(u)


@given(free_words(rank=3), free_words(rank=3), st.integers(-3, 3), st.integers(-3, 3), st.integers(1, 3))
def test_fox_is_linear(u, v, a, b, k):
    combo = GroupRingElt(3, {u: a}) + GroupRingElt(3, {v: b})
    expected = fox_derivative(u, k) * a + fox_derivative(v, k) * b
    assert fox_derivative(combo, k) == expected


@given(free_words(rank=3), free_words(rank=3), st.integers(1, 3))
def test_fox_product_rule(u, v, k):
    assert fox_derivative(u * v, k) == fox_derivative(u, k) + GroupRingElt.from_word(u) * fox_derivative(v, k)


# -- Jacobian and Magnus specialization ------------------------------------------------

def test_jacobian_of_identity():
    jac = jacobian_matrix(FreeAut.identity(3))
    for r in range(3):
        for c in range(3):
            assert jac[r][c] == GroupRingElt.scalar(3, int(r == c))


def test_jacobian_central_block():
    n, i = 3, 1
    jac = jacobian_matrix(eta1_automorphism(n, i))
    assert jac[0][0] == ring(n, [("1", 1), ("x1*x2*x1^-1", -1)])
    assert jac[0][1] == ring(n, [("x1", 1)])
    assert jac[1][0] == ring(n, [("1", 1), ("x1*x2^-1", 1), ("x1*x2^-1*x1*x2*x1^-1", -1)])
    assert jac[1][1] == ring(n, [("x1*x2^-1", -1), ("x1*x2^-1*x1", 1)])


def test_jacobian_identity_rows_away_from_block():
    jac = jacobian_matrix(eta1_automorphism(4, 1))
    for r in (2, 3):
        assert [x for x in jac[r]] == [GroupRingElt.scalar(4, int(r == c)) for c in range(4)]


def test_magnus_examples():
    assert magnus_specialize(ring(3, [("1", 1), ("x1*x2*x1^-1", -1)])) == 1 - T
    assert magnus_specialize(ring(3, [("1", 1), ("x1*x2^-1", 1), ("x1*x2^-1*x1*x2*x1^-1", -1)])) == 2 - T
    assert magnus_specialize(FreeWord.identity(2)) == parse_laurent("1")


@given(free_words(rank=3), free_words(rank=3), st.integers(-3, 3))
def test_magnus_is_ring_homomorphism(u, v, c):
    x = GroupRingElt(3, {u: c}) + 1
    y = GroupRingElt.from_word(v) - GroupRingElt.from_word(u)
    assert magnus_specialize(x * y) == magnus_specialize(x) * magnus_specialize(y)
    assert magnus_specialize(x + y) == magnus_specialize(x) + magnus_specialize(y)


@pytest.mark.parametrize("n", range(2, 7))
def test_specialized_jacobian_is_eta1(n):
    rep = eta1_matrix(n)
    for i in range(1, n):
        assert Matrix(magnus_specialize(jacobian_matrix(eta1_automorphism(n, i)))) == rep.images[("s", i)]
