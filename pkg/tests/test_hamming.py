import pytest
from hypothesis import given

from topocut.graph import all_pairs_distances, build_graph
from topocut.indices import gutman, wiener, wiener_weighted
from topocut.hamming import (
    NotPartialHammingError,
    canonical_embedding,
    gutman_exact_hamming,
    gutman_lower_bound,
    is_partial_hamming,
    weighted_wiener_lower_bound,
)
from topocut.families import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    gen_house,
    hypercube_graph,
    phe6_placement,
)
from topocut.phenylene import build_phenylene

from strategies import connected_graphs, trees, weighted_graphs


def test_canonical_embedding_k2():
    emb = canonical_embedding(build_graph(2, [(0, 1)]))
    assert len(emb.quotients) == 1
    assert emb.coordinates == ((0,), (1,))


def test_canonical_embedding_c6():
    emb = canonical_embedding(cycle_graph(6))
    assert len(emb.quotients) == 3
    assert all(q.graph.n == 2 for q in emb.quotients)
    assert len(set(emb.coordinates)) == 6


def test_canonical_embedding_c5():
    emb = canonical_embedding(cycle_graph(5))
    assert len(emb.quotients) == 1
    assert emb.quotients[0].graph.n == 5


@given(connected_graphs(min_n=2, max_n=10))
def test_embedding_is_isometric(g):
    emb = canonical_embedding(g)
    d = all_pairs_distances(g)
    dq = [all_pairs_distances(q.graph) for q in emb.quotients]
    for u in range(g.n):
        cu = emb.coordinates[u]
        for v in range(u + 1, g.n):
            cv = emb.coordinates[v]
            assert d[u][v] == sum(dm[x][y] for dm, x, y in zip(dq, cu, cv))


@given(connected_graphs(min_n=2, max_n=10))
def test_embedding_is_irredundant(g):
    emb = canonical_embedding(g)
    for i, q in enumerate(emb.quotients):
        used = {c[i] for c in emb.coordinates}
        assert q.graph.n >= 2
        assert used == set(range(q.graph.n))


def test_is_partial_hamming_fixed_cases():
    assert is_partial_hamming(cycle_graph(6))
    assert is_partial_hamming(hypercube_graph(3))
    assert is_partial_hamming(complete_graph(5))
    assert is_partial_hamming(build_phenylene(phe6_placement()).graph)
    assert not is_partial_hamming(cycle_graph(5))
    assert not is_partial_hamming(complete_bipartite_graph(2, 3))
    for n in (2, 3, 7):
        assert is_partial_hamming(gen_house(n))


@given(trees(min_n=2, max_n=10))
def test_trees_are_partial_hamming(t):
    assert is_partial_hamming(t)


def test_bound_examples():
    assert weighted_wiener_lower_bound(cycle_graph(6), (1,) * 6) == 27 == wiener(
        cycle_graph(6)
    )
    assert weighted_wiener_lower_bound(cycle_graph(5), (1,) * 5) == 10 < 15
    for n in (2, 3, 5):
        kn = complete_graph(n)
        assert weighted_wiener_lower_bound(kn, (1,) * n) == n * (n - 1) // 2


def test_gutman_bound_examples():
    assert gutman_lower_bound(gen_house(2)) == 77
    assert gutman_lower_bound(cycle_graph(4)) == 32 == gutman(cycle_graph(4))
    assert gutman_lower_bound(cycle_graph(5)) == 40 < 60 == gutman(cycle_graph(5))


@given(weighted_graphs(min_n=2, max_n=10))
def test_bound_below_oracle_with_equality_iff_hamming(gw):
    g, w = gw
    bound = weighted_wiener_lower_bound(g, w)
    exact = wiener_weighted(g, w)
    assert bound <= exact
    assert (bound == exact) == is_partial_hamming(g)


def test_gutman_exact_hamming_examples():
    for n in range(2, 21):
        hn = gen_house(n)
        assert gutman_exact_hamming(hn) == 6 * n**3 + 9 * n**2 - 4 * n + 1
    q3 = hypercube_graph(3)
    assert gutman_exact_hamming(q3) == gutman(q3)
    assert gutman_exact_hamming(build_phenylene(phe6_placement()).graph) == 22856


def test_gutman_exact_hamming_rejects_c5():
    with pytest.raises(NotPartialHammingError):
        gutman_exact_hamming(cycle_graph(5))


@given(connected_graphs(min_n=2, max_n=10))
def test_hamming_distance_equals_graph_distance(g):
    if not is_partial_hamming(g):
        return
    emb = canonical_embedding(g)
    d = all_pairs_distances(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            differ = sum(
                x != y for x, y in zip(emb.coordinates[u], emb.coordinates[v])
            )
            assert differ == d[u][v]
