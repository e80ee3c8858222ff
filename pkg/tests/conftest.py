import random

from hypothesis import strategies as st

from windlab.laurent import LaurentPoly
from windlab.word import Word, random_derived_word

letters = st.sampled_from([1, -1, 2, -2])
words = st.lists(letters, max_size=40).map(lambda xs: Word(xs))


@st.composite
def derived_words(draw, max_len=60):
    seed = draw(st.integers(0, 2 ** 32))
    return random_derived_word(random.Random(seed), max_len)


small = st.integers(-4, 4)
polys = st.dictionaries(st.tuples(small, small), st.integers(-5, 5), max_size=6).map(LaurentPoly)
