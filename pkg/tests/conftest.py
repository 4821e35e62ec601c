import os

import hypothesis
import pytest
from hypothesis import strategies as st

from covercount.atomsets import seven_atoms, tree_atoms
from covercount.graph import make_graph
from covercount.search import run_closure

hypothesis.settings.register_profile("default", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, max_vertices=8, max_edges=12, min_vertices=0):
    n = draw(st.integers(min_vertices, max_vertices))
    slots = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not slots:
        return make_graph(n, [])
    chosen = draw(st.lists(st.sampled_from(slots), unique=True, max_size=min(max_edges, len(slots))))
    return make_graph(n, chosen)


@pytest.fixture(scope="session")
def pool67():
    return run_closure(seven_atoms(), 67)


@pytest.fixture(scope="session")
def pool200():
    return run_closure(seven_atoms(), 200)


@pytest.fixture(scope="session")
def pool1000():
    return run_closure(seven_atoms(), 1000)


@pytest.fixture(scope="session")
def tree_pool256():
    return run_closure(tree_atoms(), 256)


ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion for the summary."""
    name = request.node.name
    state = {"detail": ""}

    def note(detail):
        state["detail"] = detail

    yield note
    rep = getattr(request.node, "rep_call", None)
    ACCEPTANCE[name] = (rep is not None and rep.passed, state["detail"])


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in sorted(ACCEPTANCE.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
