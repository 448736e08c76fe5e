import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from maxline import Digraph

sys.path.insert(0, str(Path(__file__).parent))


@st.composite
def digraphs(draw, max_n=7):
    n = draw(st.integers(min_value=0, max_value=max_n))
    slots = [(i, j) for i in range(n) for j in range(n) if i != j]
    chosen = draw(st.lists(st.sampled_from(slots), unique=True)) if slots else []
    return Digraph(n, chosen)


def random_digraph(rng: random.Random, max_n: int = 8) -> Digraph:
    n = rng.randint(1, max_n)
    p = rng.random()
    return Digraph(n, [(i, j) for i in range(n) for j in range(n) if i != j and rng.random() < p])


def shuffled(G: Digraph, rng: random.Random) -> Digraph:
    perm = list(range(G.n))
    rng.shuffle(perm)
    return Digraph(G.n, [(perm[t], perm[h]) for t, h in G.arcs])


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call":
        item.rep_call = report


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "ACCEPTANCE_RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(results, key=lambda k: int(k[1:])):
        status, detail = results[name]
        terminalreporter.write_line(f"{name} {status}  {detail}")
