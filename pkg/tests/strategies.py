from hypothesis import strategies as st

from ncgrowth.sampling import random_monomial

seeds = st.integers(min_value=0, max_value=10_000)


@st.composite
def monomial_presentations(draw, polynomial=False, **bounds):
    return random_monomial(draw(seeds), want_polynomial=polynomial, **bounds)
