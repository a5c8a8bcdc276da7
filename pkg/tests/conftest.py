from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from wittpoisson.poly import Poly

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def partitions_st(draw, max_d: int = 12, max_parts: int = 4):
    parts = []
    budget = draw(st.integers(0, max_d))
    for _ in range(draw(st.integers(0, max_parts))):
        if budget < 1:
            break
        a = draw(st.integers(1, budget))
        parts.append(a)
        budget -= a
    return tuple(sorted(parts))


coefs = st.fractions(min_value=-20, max_value=20, max_denominator=6).filter(bool)


@st.composite
def polys(draw, max_d: int = 12, max_terms: int = 8, constant: bool = True):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        lam = draw(partitions_st(max_d))
        if not constant and not lam:
            continue
        terms[lam] = draw(coefs)
    return Poly(terms)


@st.composite
def s2_homogeneous(draw, d_min: int = 6, d_max: int = 30, i_min: int = 1):
    d = draw(st.integers(max(d_min, 2 * i_min), d_max))
    pairs = [(i, d - i) for i in range(i_min, d // 2 + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=4, unique=True))
    return Poly({p: draw(coefs) for p in chosen})


# -- one summary line per acceptance criterion ----------------------------------------------

_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion_" in report.nodeid:
        name = report.nodeid.split("::test_criterion_")[1]
        _ACCEPTANCE.append((name, report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, duration in sorted(_ACCEPTANCE):
        num, _, label = name.partition("_")
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {int(num):2d} {status}  {label}  ({duration:.1f} s)")
