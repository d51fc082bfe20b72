"""Shared fixtures: a seeded corpus of random operators and their solutions."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from vvmf import solve_fundamental_system, unique_operator

CORPUS_SEED = 20260825
CORPUS_SIZE = 100
SOLVE_PRECISION = 30


def random_root_multiset(rng):
    """Order 2..5 roots with denominators <= 24, entries in [0, 2),
    pairwise incongruent modulo the integers."""
    n = rng.randrange(2, 6)
    roots, seen = [], set()
    while len(roots) < n:
        den = rng.randrange(1, 25)
        num = rng.randrange(0, 2 * den)
        r = Fraction(num, den)
        frac = r - r.__floor__()
        if frac in seen:
            continue
        seen.add(frac)
        roots.append(r)
    return roots


@pytest.fixture(scope="session")
def mmde_corpus():
    rng = random.Random(CORPUS_SEED)
    out = []
    for _ in range(CORPUS_SIZE):
        roots = random_root_multiset(rng)
        out.append((roots, unique_operator(roots)))
    return out


@pytest.fixture(scope="session")
def solved_corpus(mmde_corpus):
    return [
        (roots, L, solve_fundamental_system(L, SOLVE_PRECISION))
        for roots, L in mmde_corpus
    ]
