import math
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from isospec.spectra import (
    PrimeGraph,
    SpectrumSet,
    contains,
    direct_square_mu,
    independence_number,
    is_complete,
    normalize_mu,
    prime_graph,
)

J1_MU = [6, 7, 10, 11, 15, 19]
R27_MU = [6, 9, 26, 14, 19, 37]

mu_lists = st.lists(st.integers(min_value=1, max_value=400), min_size=1, max_size=6)


def omega(values):
    return {d for m in values for d in range(1, m + 1) if m % d == 0}


def brute_square(values):
    # maximal lcms over the full divisor closure, independent of mu handling
    om = omega(values)
    lcms = {math.lcm(a, b) for a in om for b in om}
    return sorted(x for x in lcms if not any(y != x and y % x == 0 for y in lcms))


def brute_independence(g):
    for size in range(len(g.vertices), 0, -1):
        found = [
            c
            for c in combinations(g.vertices, size)
            if not any(g.adjacent(p, q) for p, q in combinations(c, 2))
        ]
        if found:
            return size, min(found)
    return 0, ()


@pytest.mark.parametrize(
    "values,expected",
    [([1, 2, 3, 4, 7], (3, 4, 7)), ([6], (6,)), (J1_MU, tuple(J1_MU)), ([12, 4, 6, 12], (12,))],
)
def test_normalize_examples(values, expected):
    assert normalize_mu(values).mu == expected


def test_normalize_rejects():
    with pytest.raises(ValueError):
        normalize_mu([])
    with pytest.raises(ValueError):
        normalize_mu([0, 3])
    with pytest.raises(ValueError):
        SpectrumSet((2, 4))
    with pytest.raises(ValueError):
        SpectrumSet((5, 3))


@given(mu_lists)
def test_normalize_preserves_omega_and_is_idempotent(values):
    s = normalize_mu(values)
    assert normalize_mu(s.mu) == s
    assert set(s.elements()) == omega(values)
    for a, b in combinations(s.mu, 2):
        assert b % a and a % b


def test_contains_examples():
    j1 = normalize_mu(J1_MU)
    assert contains(j1, 5)
    assert not contains(j1, 9)
    assert 1 in j1 and 1 in normalize_mu([1])
    with pytest.raises(ValueError):
        contains(j1, 0)


def test_direct_square_examples():
    assert direct_square_mu(normalize_mu([2, 3, 5])).mu == (6, 10, 15)
    assert direct_square_mu(normalize_mu([12])).mu == (12,)


def test_direct_square_ree27():
    got = direct_square_mu(normalize_mu(R27_MU))
    assert list(got.mu) == brute_square(R27_MU)
    assert got.mu == (114, 126, 171, 182, 222, 234, 266, 333, 494, 518, 703, 962)


@given(mu_lists)
def test_direct_square_against_brute_force(values):
    assert list(direct_square_mu(normalize_mu(values)).mu) == brute_square(values)


@given(mu_lists, st.data())
def test_direct_square_closure(values, data):
    s = normalize_mu(values)
    sq = direct_square_mu(s)
    om = s.elements()
    a = data.draw(st.sampled_from(om))
    b = data.draw(st.sampled_from(om))
    assert contains(sq, math.lcm(a, b))
    assert all(contains(sq, x) for x in om)


def test_direct_square_overflow():
    with pytest.raises(OverflowError):
        direct_square_mu(normalize_mu([2**40 + 1, 2**40 - 1]))


def test_prime_graph_examples():
    g = prime_graph(normalize_mu([3, 4, 7]))
    assert g.vertices == (2, 3, 7) and not g.edges
    g = prime_graph(normalize_mu(J1_MU))
    assert g.vertices == (2, 3, 5, 7, 11, 19)
    assert g.edge_list() == [(2, 3), (2, 5), (3, 5)]
    g = prime_graph(normalize_mu([30]))
    assert is_complete(g) and len(g.edges) == 3


def test_prime_graph_dot():
    dot = prime_graph(normalize_mu(J1_MU)).to_dot("J1")
    assert dot.startswith('graph "J1" {')
    assert "  2 -- 3;" in dot and "  19;" in dot
    assert dot.count("--") == 3


def test_independence_examples():
    assert independence_number(prime_graph(normalize_mu(J1_MU))) == (4, (2, 7, 11, 19))
    assert independence_number(prime_graph(normalize_mu(R27_MU)))[0] == 5
    edgeless = PrimeGraph((2, 3, 5, 7, 11))
    assert independence_number(edgeless) == (5, (2, 3, 5, 7, 11))
    assert independence_number(PrimeGraph(())) == (0, ())


@st.composite
def graphs(draw):
    n = draw(st.integers(min_value=1, max_value=11))
    verts = tuple(range(n))
    pairs = list(combinations(verts, 2))
    edges = frozenset(p for p in pairs if draw(st.booleans()))
    return PrimeGraph(verts, edges)


@given(graphs())
def test_independence_against_brute_force(g):
    assert independence_number(g) == brute_independence(g)


def test_is_complete():
    assert is_complete(prime_graph(direct_square_mu(normalize_mu(J1_MU))))
    assert not is_complete(prime_graph(normalize_mu([3, 4, 7])))
    assert is_complete(PrimeGraph((5,)))


@given(mu_lists)
def test_square_graph_complete_when_primes_are_orders(values):
    s = normalize_mu(values)
    # primes of mu always lie in omega, so the square's graph is complete
    assert is_complete(prime_graph(direct_square_mu(s)))
