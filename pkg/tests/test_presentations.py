from collections import deque

import pytest
from hypothesis import given, settings

from twinrep.errors import BadStrandCount, IndexOutOfRange, KindMismatch, ParseError
from twinrep.presentations import (
    TwinWord,
    build_presentation,
    enumerate_T_elements,
    normal_form_T,
    s_word,
    words_equal_in_T,
)
from strategies import t_words


# -- oracles -------------------------------------------------------------------

def brute_normal_form(idx):
    """Shortest, then lexicographically least, word reachable by deleting
    adjacent equal letters and swapping adjacent distant letters."""
    start = tuple(idx)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for k in range(len(w) - 1):
            a, b = w[k], w[k + 1]
            if a == b:
                nxt = [w[:k] + w[k + 2:]]
            elif abs(a - b) >= 2:
                nxt = [w[:k] + (b, a) + w[k + 2:]]
            else:
                continue
            for v in nxt:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return min(seen, key=lambda v: (len(v), v))


def tits_matrices(n):
    """Geometric representation of the Coxeter group with m_ij = 2 for |i-j| >= 2
    and infinity otherwise.  It is faithful, so it decides equality."""
    m = n - 1

    def bilinear(i, j):
        return 1 if i == j else (-1 if abs(i - j) == 1 else 0)

    mats = {}
    for i in range(1, m + 1):
        rows = []
        for r in range(1, m + 1):
            rows.append(tuple((1 if r == c else 0) - (2 * bilinear(i, c) if r == i else 0) for c in range(1, m + 1)))
        mats[i] = rows
    return mats


def tits_image(n, idx):
    mats = tits_matrices(n)
    m = n - 1
    out = [[int(r == c) for c in range(m)] for r in range(m)]
    for i in idx:
        g = mats[i]
        out = [[sum(out[r][k] * g[k][c] for k in range(m)) for c in range(m)] for r in range(m)]
    return tuple(tuple(row) for row in out)


def tits_ball_size(n, maxlen):
    seen = {tits_image(n, ())}
    frontier = [()]
    for _ in range(maxlen):
        new = []
        for w in frontier:
            for i in range(1, n):
                key = tits_image(n, w + (i,))
                if key not in seen:
                    seen.add(key)
                    new.append(w + (i,))
        frontier = new
    return len(seen)


def idx_of(w):
    return tuple(i for _, i in w.letters)


# -- presentations -----------------------------------------------------------------

def test_t2_presentation():
    p = build_presentation("T", 2)
    assert p.name == "T_2"
    assert p.generators == ("s1",)
    assert [str(r) for r in p.relations] == ["(1) i=1: s1 s1 = 1"]


def test_t3_has_no_commutations():
    p = build_presentation("T", 3)
    assert [r.label for r in p.relations] == ["(1) i=1", "(1) i=2"]


def test_t4_commutation():
    labels = [r.label for r in build_presentation("T", 4).relations]
    assert "(2) i=1,j=3" in labels and len(labels) == 4


def test_vt3_relation_families():
    p = build_presentation("VT", 3)
    families = {r.label.split()[0] for r in p.relations}
    assert families == {"(1)", "(3)", "(5)", "(7)", "(7')"}
    assert p.generators == ("s1", "s2", "r1", "r2")
    for rel in p.relations:
        assert rel.lhs.kind == "VT"


def test_wt_adds_mixed_relations():
    vt = {r.label for r in build_presentation("VT", 4).relations}
    wt = {r.label for r in build_presentation("WT", 4).relations}
    assert vt < wt
    assert {x.split()[0] for x in wt - vt} == {"(8)", "(8')"}


def test_relation_8_shape():
    rel = next(r for r in build_presentation("WT", 3).relations if r.label == "(8) i=1")
    assert str(rel.lhs) == "r1 s2 s1"
    assert str(rel.rhs) == "s2 s1 r2"


def test_presentation_errors():
    with pytest.raises(BadStrandCount):
        build_presentation("T", 1)
    with pytest.raises(ValueError):
        build_presentation("XT", 3)


# -- words ---------------------------------------------------------------------------

def test_parse_and_json_round_trip():
    w = TwinWord.parse("VT", 3, "s1 r2 s2")
    assert str(w) == "s1 r2 s2"
    assert TwinWord.from_json("VT", 3, w.to_json()) == w
    assert w.to_json()[1] == {"gen": "r", "i": 2}


def test_word_errors():
    with pytest.raises(KindMismatch):
        TwinWord.parse("T", 3, "r1")
    with pytest.raises(IndexOutOfRange):
        s_word(3, 3)
    with pytest.raises(ParseError) as info:
        TwinWord.parse("T", 3, "s1 x2")
    assert info.value.pos == 3


def test_power_and_concatenation():
    assert str(s_word(3, 1, 2) * 3) == "s1 s2 s1 s2 s1 s2"
    assert s_word(4, 1) + s_word(4, 3) == s_word(4, 1, 3)


# -- normal forms ----------------------------------------------------------------------

@pytest.mark.parametrize("n, idx, nf", [
    (3, (1, 1), ()),
    (4, (3, 1), (1, 3)),
    (4, (1, 3, 1), (3,)),
    (3, (1, 2, 1), (1, 2, 1)),
    (5, (4, 2, 1, 3, 4), (2, 1, 4, 3, 4)),
])
def test_normal_form_examples(n, idx, nf):
    got = idx_of(normal_form_T(s_word(n, *idx)))
    assert got == brute_normal_form(idx)
    assert got == nf


@settings(max_examples=300)
@given(t_words(max_n=5, max_len=8))
def test_normal_form_matches_brute_force(data):
    n, idx = data
    assert idx_of(normal_form_T(s_word(n, *idx))) == brute_normal_form(idx)


@settings(max_examples=300)
@given(t_words(max_n=6, max_len=12))
def test_normal_form_is_idempotent_and_sound(data):
    n, idx = data
    nf = normal_form_T(s_word(n, *idx))
    assert normal_form_T(nf) == nf
    assert tits_image(n, idx_of(nf)) == tits_image(n, idx)


@settings(max_examples=300)
@given(t_words(max_n=5, max_len=8, n=4), t_words(max_n=5, max_len=8, n=4))
def test_words_equal_agrees_with_faithful_rep(a, b):
    (_, u), (_, v) = a, b
    assert words_equal_in_T(s_word(4, *u), s_word(4, *v)) == (tits_image(4, u) == tits_image(4, v))


def test_words_equal_examples():
    assert words_equal_in_T(s_word(4, 1, 3), s_word(4, 3, 1))
    assert not words_equal_in_T(s_word(3, 1, 2), s_word(3, 2, 1))
    assert words_equal_in_T(s_word(3, 1, 2, 2, 1), s_word(3))


# -- enumeration -------------------------------------------------------------------------

@pytest.mark.parametrize("n, maxlen, count", [(3, 3, 7), (4, 2, 9), (2, 5, 2)])
def test_enumeration_counts(n, maxlen, count):
    assert len(enumerate_T_elements(n, maxlen)) == count


@pytest.mark.parametrize("n, maxlen", [(3, 6), (4, 5), (5, 4), (6, 3)])
def test_enumeration_matches_tits_ball(n, maxlen):
    elts = enumerate_T_elements(n, maxlen)
    assert len(elts) == tits_ball_size(n, maxlen)
    assert len({tits_image(n, idx_of(w)) for w in elts}) == len(elts)


def test_t3_growth_is_linear():
    # T_3 is infinite dihedral: 2 elements of each positive length
    for length in range(11):
        assert len(enumerate_T_elements(3, length)) == 2 * length + 1


def test_enumeration_order_and_normal_forms():
    elts = enumerate_T_elements(4, 3)
    keys = [(len(w), idx_of(w)) for w in elts]
    assert keys == sorted(keys)
    assert all(normal_form_T(w) == w for w in elts)
