from hypothesis import strategies as st

from clasper4 import ClasperForm, LevineForm, MoveWord
from clasper4.moves import GENERATORS

C = (1, 2, 2, 4, 2, 2)
L1 = ClasperForm(C, (0, 0, 0, 0), (0, 0))
L2 = ClasperForm(C, (-2, 0, 2, 1), (1, 1))
L3 = ClasperForm(C, (-2, 0, 2, 1), (2, 0))
H1 = ClasperForm((-1, -4, -4, -1, -1, -1), (1, 4, 4, 16), (0, 0))
H2 = ClasperForm((-1, -4, -4, -1, -1, -1), (1, 8, 4, 16), (0, 0))


def ints(bound):
    return st.integers(-bound, bound)


def clasper_forms(c_bound=10, ft_bound=10):
    return st.builds(
        ClasperForm,
        st.tuples(*[ints(c_bound)] * 6),
        st.tuples(*[ints(ft_bound)] * 4),
        st.tuples(*[ints(ft_bound)] * 2))


def words(max_len=12, max_power=3):
    letter = st.tuples(st.sampled_from(GENERATORS),
                       st.integers(1, max_power) | st.integers(-max_power, -1))
    return st.lists(letter, max_size=max_len).map(MoveWord)


@st.composite
def levine_forms(draw, bound=8):
    k, l, r = (draw(ints(bound)) for _ in range(3))
    g = __import__("math").gcd(k, l, r)
    d = draw(st.integers(0, g - 1)) if g else draw(ints(bound))
    e = tuple(draw(ints(bound)) for _ in range(8))
    return LevineForm(k, l, r, d, e)
