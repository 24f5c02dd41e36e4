from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from supergca.exactmath import BaseNumber, Scalar

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def base_numbers(draw) -> BaseNumber:
    return BaseNumber(*(draw(small) for _ in range(4)))


@st.composite
def scalars(draw) -> Scalar:
    """Short sums of field constants times alpha/beta monomials times u^k."""
    out = Scalar()
    for _ in range(draw(st.integers(0, 3))):
        c = Scalar.const(draw(base_numbers()))
        for p in ("alpha", "beta"):
            e = draw(st.integers(0, 2))
            if e:
                c = c * Scalar.param(p, e)
        out = out + c.times_upow(draw(st.integers(-2, 2)))
    return out


def frac(x) -> Fraction:
    return Fraction(x)


# acceptance summary: one PASS/FAIL line per criterion, printed after the run
ACCEPTANCE: dict[int, list] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, parts = ACCEPTANCE[n]
        ok = all(p[0] for p in parts)
        detail = "; ".join(p[1] for p in parts if p[1])
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n:>2}: {title} ({detail})")
