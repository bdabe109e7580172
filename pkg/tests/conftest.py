import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from toricvol.errors import DegenerateInput  # noqa: E402
from toricvol.polytope import convex_hull  # noqa: E402

DATA = Path(__file__).parent.parent / "src" / "toricvol" / "data"


def random_lattice_polytope(rng, dim, max_vertices=10, radius=3):
    """Hull of a few random lattice points; retried until full-dimensional."""
    while True:
        k = rng.randint(dim + 1, max_vertices)
        pts = {tuple(rng.randint(-radius, radius) for _ in range(dim)) for _ in range(k)}
        try:
            P = convex_hull(sorted(pts))
        except DegenerateInput:
            continue
        if len(P.vertices) <= max_vertices:
            return P


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def data_dir():
    return DATA


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
