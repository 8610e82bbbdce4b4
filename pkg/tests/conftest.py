from fractions import Fraction

from hypothesis import strategies as st

from ennola.core import BiPoly, LaurentPoly

ACCEPTANCE_LINES = []

small_q = st.builds(
    Fraction,
    st.integers(-9, 9),
    st.integers(1, 6),
)
nonzero_q = small_q.filter(bool)

laurent = st.dictionaries(st.integers(-12, 12), small_q, max_size=6).map(LaurentPoly)
nonzero_laurent = laurent.filter(bool)
bipoly = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), small_q, max_size=6
).map(BiPoly)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
