import itertools

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("ci")


def all_subsets(n):
    out = []
    for r in range(n + 1):
        out.extend(frozenset(c) for c in itertools.combinations(range(1, n + 1), r))
    return out


@pytest.fixture(scope="session")
def vectors_by_n():
    from tamari import bracket_b as bb

    return {n: bb.enumerate_vectors(n) for n in range(1, 6)}


@pytest.fixture(scope="session")
def triangulations_by_n(vectors_by_n):
    from tamari import bracket_b as bb

    return {
        n: {v: bb.decode(v, n) for v in vecs}
        for n, vecs in vectors_by_n.items()
        if n <= 4
    }
