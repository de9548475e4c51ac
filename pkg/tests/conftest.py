import gc

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from regeq.syntax import ONE, ZERO, Char, Comp, Plus, Star

# Derivative exploration allocates many short-lived cyclic objects; the default
# generation-0 threshold makes the collector dominate the property suites.
gc.set_threshold(200_000, 50, 1000)

settings.register_profile("default", max_examples=200, deadline=None, derandomize=True)
settings.load_profile("default")

ACCEPTANCE_LINES: list = []


def exps(alphabet=("a", "b"), max_leaves=8):
    leaves = st.sampled_from([ZERO, ONE] + [Char(a) for a in alphabet])

    def extend(children):
        return st.one_of(
            st.builds(Plus, children, children),
            st.builds(Comp, children, children),
            st.builds(Star, children),
        )

    return st.recursive(leaves, extend, max_leaves=max_leaves)


@pytest.fixture
def acceptance_report():
    def report(number: int, title: str, ok: bool, detail: str = "") -> None:
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
