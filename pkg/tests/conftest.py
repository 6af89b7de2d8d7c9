import pytest

from qcapelli.coefficients import LaurentPoly, RationalFunction

ACCEPTANCE_RESULTS = {}


def to_sympy(x, s):
    """Independent conversion of a coefficient into a sympy expression in ``s``."""
    import sympy

    if isinstance(x, RationalFunction):
        return to_sympy(x.num, s) / to_sympy(x.den, s)
    if isinstance(x, LaurentPoly):
        return sum((sympy.Rational(c.numerator, c.denominator) * s**k for k, c in x.items()), sympy.Integer(0))
    return sympy.Rational(x.numerator, x.denominator) if hasattr(x, "numerator") else sympy.Integer(x)


@pytest.fixture
def sym_s():
    import sympy

    return sympy.Symbol("s", positive=True)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: (int(k.split()[0]), k)):
        ok, note = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {note}")
