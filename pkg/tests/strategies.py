from hypothesis import strategies as st

from twinrep.freegroup import FreeWord
from twinrep.ring import LaurentPoly

laurent = st.dictionaries(
    st.integers(-4, 4), st.integers(-6, 6), max_size=5
).map(LaurentPoly)

nonzero_laurent = laurent.filter(lambda p: not p.is_zero())


@st.composite
def free_words(draw, max_rank=5, max_len=12, rank=None):
    n = rank if rank is not None else draw(st.integers(1, max_rank))
    letters = draw(st.lists(st.integers(1, n).flatmap(lambda k: st.sampled_from([k, -k])), max_size=max_len))
    return FreeWord(n, letters)


@st.composite
def t_words(draw, max_n=5, max_len=10, n=None):
    n = n if n is not None else draw(st.integers(2, max_n))
    idx = draw(st.lists(st.integers(1, n - 1), max_size=max_len))
    return n, idx
