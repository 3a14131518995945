import contextlib

import pytest

from ssrkit.core import normalize_instance
from ssrkit.generate import make_rng, random_values

CORPUS_SIZE = 500
CORPUS_SEED = 20240611

_acceptance_lines = []


def record_criterion(number, title, passed, detail=""):
    status = "PASS" if passed else "FAIL"
    line = f"[{status}] criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    _acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


def build_corpus(size=CORPUS_SIZE, seed=CORPUS_SEED, n_min=3, n_max=12, max_value=1000):
    out = []
    for k in range(size):
        rng = make_rng((seed, k))
        n = int(rng.integers(n_min, n_max, endpoint=True))
        out.append(normalize_instance(random_values(n, max_value, rng)))
    return out


@pytest.fixture
def criterion():
    """Context manager recording one PASS/FAIL summary line."""

    @contextlib.contextmanager
    def record(number, title):
        notes = []
        try:
            yield notes
        except BaseException:
            record_criterion(number, title, False, "; ".join(notes))
            raise
        record_criterion(number, title, True, "; ".join(notes))

    return record


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()
