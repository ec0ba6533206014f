"""Search for the six-hexagon reference placement.

Enumerates catacondensed placements whose inner dual is a five-vertex path
with a pendant at its second vertex, computes the four quotient-tree values
of the phenylene, and reports which geometric isomers (up to lattice
symmetry) reproduce the frozen targets:
    double-weighted: {5208, 2976, 4416} for the direction trees, 5784 for T4
    single-weighted: {6484, 3600, 5520} and 7252
"""

from itertools import product

from topocut.phenylene import (
    NEIGHBOR_OFFSETS,
    BenzenoidPlacement,
    PlacementError,
    build_benzenoid,
    build_phenylene,
    dd_gut_via_squeeze,
    dd_gut_via_trees,
    quotient_trees,
    tree_wiener_double_linear,
    tree_wiener_linear,
)
from topocut.indices import degree_distance, gutman

TARGET_DD_TREES = {5208, 2976, 4416}
TARGET_DD_T4 = 5784
TARGET_GUT_TREES = {6484, 3600, 5520}
TARGET_GUT_T4 = 7252


def axial_to_cube(q, r):
    return (q, -q - r, r)


def cube_to_axial(x, y, z):
    return (x, z)


def rot60(c):
    x, y, z = c
    return (-z, -x, -y)


def mirror(c):
    x, y, z = c
    return (x, z, y)


def symmetries(cells):
    """All 12 images of a cell set under the lattice point group."""
    cubes = [axial_to_cube(q, r) for q, r in cells]
    out = []
    for refl in (False, True):
        base = [mirror(c) for c in cubes] if refl else list(cubes)
        for _ in range(6):
            base = [rot60(c) for c in base]
            out.append([cube_to_axial(*c) for c in base])
    return out


def canonical(cells):
    best = None
    for image in symmetries(cells):
        qmin = min(q for q, r in image)
        rmin = min(r for q, r in image)
        norm = tuple(sorted((q - qmin, r - rmin) for q, r in image))
        if best is None or norm < best:
            best = norm
    return best


def dual_shape_ok(placement):
    """Inner dual must be the 5-path with a pendant at its 2nd vertex."""
    benz = build_benzenoid(placement)
    t = benz.inner_dual
    degs = sorted(len(a) for a in t.adj)
    return degs == [1, 1, 1, 2, 2, 3]
    # 6 vertices, degrees {1,1,1,2,2,3}: for a tree this forces exactly the
    # target shape up to the position of the degree-3 vertex; vertex of
    # degree 3 adjacent to two leaves = pendant+path-end only happens in the
    # target shape or the "spider" -- checked below via path length.


def spider_free(placement):
    """Reject the star-like tree (three branches of length >= 2 impossible
    with 6 vertices and our degree multiset; but the double-pendant-at-centre
    shape T(1,1,3) has the same degrees as T(1,2,2))."""
    benz = build_benzenoid(placement)
    t = benz.inner_dual
    centre = max(range(t.n), key=lambda v: len(t.adj[v]))
    # branch lengths from the degree-3 vertex
    lengths = []
    for start in t.adj[centre]:
        ln, prev, cur = 1, centre, start
        while True:
            nxt = [x for x in t.adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            ln += 1
        lengths.append(ln)
    return sorted(lengths) == [1, 1, 3]


def main():
    seen = set()
    matches = []
    near = []
    # embed: p2 at origin; directions for p1, q, p3 distinct; then p4, p5
    for d1, d2, d3 in product(range(6), repeat=3):
        if len({d1, d2, d3}) != 3 or d1 > d2:  # p1/q pendant symmetry
            continue
        for d4, d5 in product(range(6), repeat=2):
            p2 = (0, 0)
            p1 = NEIGHBOR_OFFSETS[d1]
            qq = NEIGHBOR_OFFSETS[d2]
            p3 = NEIGHBOR_OFFSETS[d3]
            p4 = (p3[0] + NEIGHBOR_OFFSETS[d4][0], p3[1] + NEIGHBOR_OFFSETS[d4][1])
            p5 = (p4[0] + NEIGHBOR_OFFSETS[d5][0], p4[1] + NEIGHBOR_OFFSETS[d5][1])
            cells = [p1, qq, p2, p3, p4, p5]
            if len(set(cells)) != 6:
                continue
            key = canonical(cells)
            if key in seen:
                continue
            seen.add(key)
            try:
                placement = BenzenoidPlacement.of(cells)
                if not dual_shape_ok(placement):
                    continue
                if not spider_free(placement):
                    continue
                ph = build_phenylene(placement)
            except PlacementError:
                continue
            qts = quotient_trees(ph)
            dd_vals = [tree_wiener_double_linear(t.tree, t.a, t.b) for t in qts]
            gut_vals = [tree_wiener_linear(t.tree, t.a) for t in qts]
            row = (key, dd_vals, gut_vals)
            if (
                set(dd_vals[:3]) == TARGET_DD_TREES
                and dd_vals[3] == TARGET_DD_T4
                and set(gut_vals[:3]) == TARGET_GUT_TREES
                and gut_vals[3] == TARGET_GUT_T4
            ):
                matches.append(row)
            elif dd_vals[3] == TARGET_DD_T4:
                near.append(row)

    print(f"catacondensed candidates with the target dual shape: {len(seen and near) + len(matches)} scored")
    print(f"T4-matching isomers: {len(near) + len(matches)}")
    print(f"full matches: {len(matches)}")
    for key, dd_vals, gut_vals in matches:
        print("  cells:", key)
        print("   DD trees:", dd_vals, "sum", sum(dd_vals))
        print("   Gut trees:", gut_vals, "sum", sum(gut_vals))
        ph = build_phenylene(key)
        print("   oracle:", degree_distance(ph.graph), gutman(ph.graph))
        print("   squeeze:", dd_gut_via_squeeze(key))
        print("   trees:", dd_gut_via_trees(ph))
    if not matches:
        print("near misses (T4 matches):")
        for key, dd_vals, gut_vals in near:
            print("  ", key, dd_vals, gut_vals)


if __name__ == "__main__":
    main()
