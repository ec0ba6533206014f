import random

import pytest
from hypothesis import given

from topocut.cut_method import (
    degree_distance_via_cuts,
    distance_via_quotients,
    partial_cube_double_wiener,
    wiener_double_via_cuts,
    wiener_weighted_via_cuts,
)
from topocut.graph import (
    all_pairs_distances,
    build_graph,
    components_after_deletion,
    degree_vector,
)
from topocut.indices import (
    DoubleWeightedGraph,
    degree_distance,
    wiener,
    wiener_double,
    wiener_plus,
    wiener_weighted,
)
from topocut.theta import (
    EdgePartition,
    NotPartialCubeError,
    PartitionError,
    theta_star_classes,
    trusted_partition,
    validate_coarser,
)
from topocut.families import cycle_graph, hypercube_graph, path_graph, phe6_placement
from topocut.phenylene import build_phenylene

from strategies import connected_graphs, double_weighted_graphs, trees


def finest(g):
    classes = theta_star_classes(g)
    return validate_coarser(g, classes.classes, classes)


def coarsest(g):
    return validate_coarser(g, [range(g.m)])


def merged(g, seed):
    """A random coarser partition: theta*-classes merged into fewer blocks."""
    classes = theta_star_classes(g).classes
    rng = random.Random(seed)
    k = rng.randint(1, len(classes))
    blocks = [[] for _ in range(k)]
    for cls in classes:
        blocks[rng.randrange(k)].extend(cls)
    return validate_coarser(g, [b for b in blocks if b])


def test_distance_via_quotients_examples():
    c6 = cycle_graph(6)
    part = finest(c6)
    assert distance_via_quotients(c6, part, 2, 2) == 0
    assert distance_via_quotients(c6, part, 0, 3) == 3  # one hop per quotient K2


@given(trees(min_n=2, max_n=10))
def test_distance_via_quotients_on_trees(g):
    part = finest(g)
    d = all_pairs_distances(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert distance_via_quotients(g, part, u, v) == d[u][v]


@given(connected_graphs(min_n=2, max_n=10))
def test_distance_decomposition_exhaustive(g):
    d = all_pairs_distances(g)
    for part in (finest(g), coarsest(g), merged(g, 5)):
        for u in range(g.n):
            for v in range(u + 1, g.n):
                assert distance_via_quotients(g, part, u, v) == d[u][v]


def test_wiener_weighted_via_cuts_c6():
    c6 = cycle_graph(6)
    assert wiener_weighted_via_cuts(c6, (1,) * 6, finest(c6)) == 27


def test_wiener_weighted_via_cuts_k2():
    k2 = build_graph(2, [(0, 1)])
    assert wiener_weighted_via_cuts(k2, (5, 7), finest(k2)) == 35


def test_single_block_partition_equals_oracle():
    c6 = cycle_graph(6)
    assert wiener_weighted_via_cuts(c6, (1,) * 6, coarsest(c6)) == 27


@given(trees(min_n=2, max_n=14))
def test_tree_cuts_match_edge_split_oracle(g):
    # independent oracle: classic sum of n1(e) n2(e) over edges
    split_sum = 0
    for e in range(g.m):
        comp = components_after_deletion(g, [e])
        n1, n2 = (len(ms) for ms in comp.members)
        split_sum += n1 * n2
    assert wiener_weighted_via_cuts(g, (1,) * g.n, finest(g)) == split_sum == wiener(g)


def test_wiener_double_via_cuts_c6():
    c6 = cycle_graph(6)
    dwg = DoubleWeightedGraph(c6, (1,) * 6, (1,) * 6)
    assert wiener_double_via_cuts(dwg, finest(c6)) == 54


@given(double_weighted_graphs(min_n=2, max_n=10))
def test_double_cuts_match_oracle_and_are_partition_invariant(gab):
    g, a, b = gab
    dwg = DoubleWeightedGraph(g, a, b)
    want = wiener_double(dwg)
    for part in (finest(g), coarsest(g), merged(g, 11), merged(g, 23)):
        assert wiener_double_via_cuts(dwg, part) == want


@given(double_weighted_graphs(min_n=2, max_n=10))
def test_b_one_reduces_to_wiener_plus(gab):
    g, a, _ = gab
    dwg = DoubleWeightedGraph(g, a, (1,) * g.n)
    assert wiener_double_via_cuts(dwg, finest(g)) == wiener_plus(g, a)


def test_degree_distance_via_cuts_examples():
    p3 = path_graph(3)
    assert degree_distance_via_cuts(p3, finest(p3)) == 10
    c6 = cycle_graph(6)
    assert degree_distance_via_cuts(c6, finest(c6)) == 108


def test_phe6_via_cuts():
    ph = build_phenylene(phe6_placement())
    g = ph.graph
    part = finest(g)
    dwg = DoubleWeightedGraph(g, degree_vector(g), (1,) * g.n)
    assert wiener_double_via_cuts(dwg, part) == 18384
    assert degree_distance_via_cuts(g, part) == 18384


@given(connected_graphs(min_n=2, max_n=10))
def test_degree_distance_via_cuts_matches_oracle(g):
    assert degree_distance_via_cuts(g, merged(g, 3)) == degree_distance(g)


def test_cut_equivalence_sixty_vertices():
    from topocut.families import random_connected_graph

    rng = random.Random(61)
    g = random_connected_graph(60, 100, seed=616)
    a = tuple(rng.randint(1, 9) for _ in range(60))
    b = tuple(rng.randint(1, 9) for _ in range(60))
    dwg = DoubleWeightedGraph(g, a, b)
    want = wiener_double(dwg)
    for part in (finest(g), coarsest(g), merged(g, 8)):
        assert wiener_double_via_cuts(dwg, part) == want
        assert degree_distance_via_cuts(g, part) == degree_distance(g)


def test_partial_cube_double_wiener_examples():
    p3 = path_graph(3)
    assert (
        partial_cube_double_wiener(
            DoubleWeightedGraph(p3, degree_vector(p3), (1, 1, 1))
        )
        == 10
    )
    q3 = hypercube_graph(3)
    ones = (1,) * 8
    assert partial_cube_double_wiener(DoubleWeightedGraph(q3, ones, ones)) == 2 * wiener(q3)
    c6 = cycle_graph(6)
    assert (
        partial_cube_double_wiener(
            DoubleWeightedGraph(c6, degree_vector(c6), (1,) * 6)
        )
        == 108
    )


def test_partial_cube_double_wiener_rejects_c5():
    c5 = cycle_graph(5)
    with pytest.raises(NotPartialCubeError):
        partial_cube_double_wiener(DoubleWeightedGraph(c5, (1,) * 5, (1,) * 5))


def test_partition_mismatch_detected():
    c6 = cycle_graph(6)
    c4 = cycle_graph(4)
    part = finest(c4)
    with pytest.raises(PartitionError):
        wiener_weighted_via_cuts(c6, (1,) * 6, part)


def test_invalid_partition_cannot_sneak_past_validation():
    c6 = cycle_graph(6)
    with pytest.raises(PartitionError):
        validate_coarser(c6, [[0], [1, 2, 3, 4, 5]])


def test_trusted_partition_skips_class_check(monkeypatch):
    c6 = cycle_graph(6)
    bad = [[0], [1, 2, 3, 4, 5]]  # splits the class {0, 3}
    part = trusted_partition(c6, bad)
    assert isinstance(part, EdgePartition)
    monkeypatch.setenv("TOPOCUT_VALIDATE_TRUSTED", "1")
    with pytest.raises(PartitionError, match="split"):
        trusted_partition(c6, bad)
    with pytest.raises(PartitionError, match="partition"):
        monkeypatch.delenv("TOPOCUT_VALIDATE_TRUSTED")
        trusted_partition(c6, [[0, 3]])  # still must cover the edge set
