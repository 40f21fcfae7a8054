import numpy as np
import pytest

from npotent.examples import (
    gen_diag_full,
    gen_nonhermitian,
    gen_random_npotent,
    gen_reflection,
    gen_tripotent_family,
)
from npotent.linalg import Tolerances
from npotent.potency import certify
from npotent.roots import unity_power

FIVE_RANKS = {0: 2, 1: 1, 1j: 2, -1: 1, -1j: 2}
FIVE_SEED = 42


def five_potent():
    return certify(gen_random_npotent(5, FIVE_RANKS, cond_bound=100, seed=FIVE_SEED))


def _w(j, n):
    return unity_power(j, n - 1)


def fixture_catalogue():
    """(name, certified operator) pairs covering every generator."""
    out = [("five-potent", five_potent())]
    for p in (1, 10, 100, 1000):
        out.append((f"tripotent-p{p}", certify(gen_tripotent_family(p))))
    out.append(("nonhermitian", certify(gen_nonhermitian())))
    for n in (2, 3, 5, 8):
        out.append((f"diag-n{n}", certify(gen_diag_full(n))))
    out.append(("reflection-k3", certify(gen_reflection(3, 64), n=7)))
    out.append(("reflection-k2", certify(gen_reflection(2, 16))))
    out.append(("reflection-k1", certify(gen_reflection(1, 9))))
    randoms = [
        (2, {0: 3, 1: 2}, 1),
        (3, {1: 3, -1: 2}, 2),
        (4, {0: 1, 1: 1, _w(1, 4): 2, _w(2, 4): 1}, 3),
        (7, {0: 2, _w(1, 7): 1, _w(3, 7): 2, _w(5, 7): 1}, 4),
        (5, {1: 2, 1j: 1, -1j: 3}, 5),
        (9, {_w(j, 9): 1 for j in range(8)}, 6),
    ]
    for n, ranks, seed in randoms:
        out.append((f"random-n{n}-s{seed}", certify(gen_random_npotent(n, ranks, cond_bound=100, seed=seed), n=n)))
    return out


CATALOGUE = fixture_catalogue()
RANDOM_FIXTURES = [(name, op) for name, op in CATALOGUE if name.startswith(("random", "five"))]


@pytest.fixture
def tol():
    return Tolerances()


@pytest.fixture(scope="session")
def five():
    return five_potent()


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


# acceptance reporting: one PASS/FAIL line per criterion marked with @pytest.mark.criterion(id, title)

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when not in ("setup", "call"):
        return
    number, title = marker.args
    ok = rep.passed if rep.when == "call" else not rep.failed
    prev = _ACCEPTANCE.get(number, (title, True))
    _ACCEPTANCE[number] = (title, prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, ok = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] AC{number:>2}  {title}")
