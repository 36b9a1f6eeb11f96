import pytest

from bimon.core import SampleSpec
from bimon.instances import make_instance


@pytest.fixture
def spec():
    return SampleSpec(max_object_size=3, max_arity_n=2, sample_count=100, seed=42)


@pytest.fixture
def small_spec():
    return SampleSpec(max_object_size=2, max_arity_n=2, sample_count=40, seed=7)


@pytest.fixture
def E():
    return make_instance("finite-sets")


def failing_laws(report):
    return [r.law for r in report.failing()]


def dual_mod_two(c_oplus_11: int = 0, x1_squared: int = 0) -> dict:
    """Objects A in Z/2, each with Aut(A) = Z/2; morphism ``(A, f)`` is named ``f"{f}@{A}"``.

    Sum and composition add labels and ``(A, f) * (B, g) = (AB, fB + Ag)``,
    so every strict law holds by bilinearity.  ``c_oplus_11 = 1`` breaks the
    sum symmetry against d_r; ``x1_squared = 1`` leaves ``1@1`` without an inverse.
    """
    def m(A, f):
        return f"{f % 2}@{A % 2}"

    objs = (0, 1)
    pairs = [(A, f) for A in objs for f in (0, 1)]

    def compose(A, g, f):
        return m(A, x1_squared if (A, g, f) == (1, 1, 1) else g + f)

    return {
        "objects": ["0", "1"], "zero": "0", "one": "1",
        "morphisms": [{"name": m(A, f), "dom": str(A), "cod": str(A)} for A, f in pairs],
        "identity": {str(A): m(A, 0) for A in objs},
        "compose": [[m(A, g), m(A, f), compose(A, g, f)] for A in objs
                    for g in (0, 1) for f in (0, 1)],
        "oplus": {"objects": [[str(A), str(B), str((A + B) % 2)] for A in objs for B in objs],
                  "morphisms": [[m(A, f), m(B, g), m(A + B, f + g)]
                                for A, f in pairs for B, g in pairs]},
        "otimes": {"objects": [[str(A), str(B), str(A * B)] for A in objs for B in objs],
                   "morphisms": [[m(A, f), m(B, g), m(A * B, f * B + A * g)]
                                 for A, f in pairs for B, g in pairs]},
        "c_oplus": [[str(A), str(B), m(A + B, c_oplus_11 if A == B == 1 else 0)]
                    for A in objs for B in objs],
        "d_r": [[str(A), str(B), str(C), m(A * (B + C), 0)]
                for A in objs for B in objs for C in objs],
    }


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
