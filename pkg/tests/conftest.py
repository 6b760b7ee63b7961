import itertools

import numpy as np
import pytest

from surfmono.algebra import fermat, random_polynomial
from surfmono.perms import Permutation


@pytest.fixture
def cubic():
    return fermat(3)


@pytest.fixture
def quadric():
    return fermat(2)


def brute_force_closure(gens, d):
    """Every element generated by ``gens`` (breadth-first products)."""
    ident = Permutation.identity(d)
    seen = {ident.images}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                k = g * h
                if k.images not in seen:
                    seen.add(k.images)
                    nxt.append(k)
        frontier = nxt
    return seen


def smooth_surface(degree, seed):
    """Random dense surface; smoothness spot-checked by the callers that need it."""
    return random_polynomial(4, degree, np.random.default_rng(seed))


def permutations_of(d):
    return [Permutation(p) for p in itertools.permutations(range(d))]


ACCEPTANCE_LINES: list[str] = []


def record_acceptance(number: int, passed: bool, detail: str) -> str:
    line = f"{'PASS' if passed else 'FAIL'} criterion {number:2d}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
