"""Reflection detection, dihedral groups, fundamental regions and labels."""

from fractions import Fraction

import pytest

from toricsym.errors import (
    EllTooSmall, NotASymmetry, NotFiniteOrder, OrientationAmbiguous,
)
from toricsym.exactlin import RatMatrix
from toricsym.geometry import polygon_from_vertices, pt
from toricsym.symmetry import (
    DihedralGroup, Reflection, coefficient_pair, detect_reflections,
    dihedral_coefficients, dihedral_group, dual_matrix, edge_permutation,
    fundamental_region, orbit_decomposition, single_coefficients,
)

F = Fraction


def M(rows):
    return RatMatrix.from_rows(rows)


SQUARE = polygon_from_vertices([(-1, -1), (1, -1), (1, 1), (-1, 1)])
HEXAGON = polygon_from_vertices(
    [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)])
HOUSE = polygon_from_vertices([(-1, -1), (1, -1), (1, 1), (0, 2), (-1, 1)])

X_MIRROR = Reflection.from_matrix(M([[1, 0], [0, -1]]))   # fixes the x-axis
Y_MIRROR = Reflection.from_matrix(M([[-1, 0], [0, 1]]))
DIAG_MIRROR = Reflection.from_matrix(M([[0, 1], [1, 0]]))  # fixes y = x


def test_detect_reflections_square():
    refl = detect_reflections(SQUARE)
    assert len(refl) == 4
    assert {r.mirror_normal for r in refl} == {(1, 0), (0, 1), (1, -1), (1, 1)}
    for r in refl:
        assert r.matrix @ r.matrix == RatMatrix.identity(2)


def test_detect_reflections_hexagon_and_asymmetric():
    assert len(detect_reflections(HEXAGON)) == 6
    assert len(detect_reflections(HOUSE)) == 1
    scalene = polygon_from_vertices([(3, -1), (-1, 2), (-1, -1)])
    assert detect_reflections(scalene) == ()


def test_edge_permutation():
    # x -> -x fixes the bottom and top edges, swaps left and right
    assert edge_permutation(SQUARE, Y_MIRROR.matrix) == (0, 3, 2, 1)
    with pytest.raises(NotASymmetry):
        edge_permutation(SQUARE, M([[2, 0], [0, 2]]))
    rect = polygon_from_vertices([(-2, -1), (2, -1), (2, 1), (-2, 1)])
    with pytest.raises(NotASymmetry):
        edge_permutation(rect, DIAG_MIRROR.matrix)


def test_dihedral_group_basics():
    g = dihedral_group(Y_MIRROR, DIAG_MIRROR)
    assert g.ell == 4 and g.order == 8
    assert [e.name for e in g.coset_reps(1)] == ["id", "s2", "s1s2", "s2s1s2"]
    assert [e.name for e in g.coset_reps(2)] == ["id", "s1", "s2s1", "s1s2s1"]
    assert len({e.matrix for e in g.elements}) == 8
    # composition stays inside the group and matches word concatenation
    prod = g.multiply(g.element((1,)), g.element((2,)))
    assert prod == g.element((1, 2))
    with pytest.raises(EllTooSmall):
        dihedral_group(X_MIRROR, X_MIRROR)


def test_dihedral_group_infinite_order_guard():
    slanted = Reflection.from_matrix(
        M([[F(3, 5), F(4, 5)], [F(4, 5), F(-3, 5)]]))
    with pytest.raises(NotFiniteOrder):
        dihedral_group(X_MIRROR, slanted)


def test_single_region_case_1_1_square():
    fr = fundamental_region(SQUARE, X_MIRROR)
    assert fr.kind == "1-1" and fr.n == 1
    # canonical pick is the lower half
    assert fr.region.vertices == (pt(-1, -1), pt(1, -1), pt(1, 0), pt(-1, 0))
    assert fr.etas == ((0, 1),)
    assert len(fr.cross_edges) == 2 and len(fr.slot_edges) == 1
    slot_edge = fr.region.edges[fr.slot_edges[1]]
    assert slot_edge.normal == (0, -1)  # E_1 is the bottom edge
    coeffs = single_coefficients(fr)
    assert coeffs.c == {1: 2}
    assert coeffs.integral


def test_single_region_case_1_3_square_diagonal():
    refl = next(r for r in detect_reflections(SQUARE)
                if r.mirror_normal == (1, -1))
    fr = fundamental_region(SQUARE, refl)
    assert fr.kind == "1-3" and fr.n == 2
    assert fr.cross_edges == ()
    assert len(fr.fixed_vertices) == 2
    assert single_coefficients(fr).c == {1: 1, 2: 1}


def test_single_region_case_1_2_house():
    (refl,) = detect_reflections(HOUSE)
    assert refl.mirror_normal == (1, 0)
    fr = fundamental_region(HOUSE, refl)
    assert fr.kind == "1-2" and fr.n == 2
    # E_1 touches the apex vertex (0, 2), E_2 sits next to the crossed edge
    assert HOUSE.vertices[fr.fixed_vertices[0]] == pt(0, 2)
    e1 = fr.region.edges[fr.slot_edges[1]]
    assert e1.normal == (-1, 1)
    e2 = fr.region.edges[fr.slot_edges[2]]
    assert e2.normal == (-1, 0)
    crossed = fr.region.edges[fr.cross_edges[0]]
    assert crossed.normal == (0, -1)
    assert single_coefficients(fr).c == {1: 2, 2: 2}


def test_chamber_hint_single():
    fr = fundamental_region(SQUARE, X_MIRROR, chamber_hint=(0, 5))
    assert fr.etas == ((0, -1),)  # upper half requested
    assert fr.region.vertices[0] == pt(-1, 0)
    with pytest.raises(OrientationAmbiguous):
        fundamental_region(SQUARE, X_MIRROR, chamber_hint=(3, 0))


def _mirror_kinds(p):
    """Split reflections by whether their dual fixes an edge normal."""
    edge_type, vertex_type = [], []
    for r in detect_reflections(p):
        dual = dual_matrix(r.matrix)
        fixes = any(dual.mat_vec(n) == tuple(map(F, n)) for n in p.normals())
        (edge_type if fixes else vertex_type).append(r)
    return edge_type, vertex_type


def test_hexagon_dihedral_cases():
    edge_m, vertex_m = _mirror_kinds(HEXAGON)
    assert len(edge_m) == 3 and len(vertex_m) == 3

    # full symmetry group: an adjacent edge/vertex mirror pair, ell = 6
    g_full = dihedral_group(edge_m[0], vertex_m[0])
    assert g_full.ell == 6
    fr = fundamental_region(HEXAGON, g_full)
    assert fr.kind == "2-2" and fr.n == 2
    assert fr.exits[0][0] == "edge" and fr.exits[1][0] == "vertex"
    assert fr.slots == (1,)
    assert fr.region.m == 3

    # the same pair handed over in the other order gets normalized
    fr_swapped = fundamental_region(HEXAGON, dihedral_group(vertex_m[0], edge_m[0]))
    assert fr_swapped.kind == "2-2"
    assert fr_swapped.exits[0][0] == "edge"

    # index-2 subgroups: two edge mirrors at 60 degrees, two vertex mirrors
    pairs_e = [(a, b) for a in edge_m for b in edge_m
               if a != b and dihedral_group(a, b).ell == 3]
    g21 = dihedral_group(*pairs_e[0])
    fr21 = fundamental_region(HEXAGON, g21)
    assert fr21.kind == "2-1" and fr21.n == 2
    assert fr21.slots == (1, 2)

    pairs_v = [(a, b) for a in vertex_m for b in vertex_m
               if a != b and dihedral_group(a, b).ell == 3]
    g23 = dihedral_group(*pairs_v[0])
    fr23 = fundamental_region(HEXAGON, g23)
    assert fr23.kind == "2-3" and fr23.n == 3
    assert fr23.slots == (2,)


def test_square_ell2_warning():
    g = dihedral_group(X_MIRROR, Y_MIRROR)
    assert g.ell == 2
    fr = fundamental_region(SQUARE, g)
    assert fr.kind == "2-1" and fr.n == 2
    assert any("ell=2" in w for w in fr.warnings)


def test_orbit_decomposition_partitions():
    for p, fr in [
        (SQUARE, fundamental_region(SQUARE, X_MIRROR)),
        (HOUSE, fundamental_region(HOUSE, detect_reflections(HOUSE)[0])),
        (HEXAGON, fundamental_region(
            HEXAGON, dihedral_group(*_mirror_kinds(HEXAGON)[0][:2]))),
    ]:
        decomp = orbit_decomposition(fr)
        covered = [k for entries in decomp.values() for _, k in entries]
        covered += [fr.parent_of[i] for i in fr.cross_edges]
        assert sorted(covered) == list(range(p.m))


def test_dihedral_coefficients_vanishing():
    edge_m, vertex_m = _mirror_kinds(HEXAGON)
    for g in (dihedral_group(edge_m[0], vertex_m[0]),
              dihedral_group(edge_m[0], edge_m[1]),
              dihedral_group(vertex_m[0], vertex_m[1])):
        fr = fundamental_region(HEXAGON, g)
        table = dihedral_coefficients(fr)
        group = fr.group
        for j in fr.slots:
            assert table.c[((), j)] == 0 and table.d[((), j)] == 0
            c_s2, _ = coefficient_pair(fr, group.element((2,)), j)
            _, d_s1 = coefficient_pair(fr, group.element((1,)), j)
            assert c_s2 == 0 and d_s1 == 0


def test_edge_permutation_is_a_homomorphism():
    edge_m, vertex_m = _mirror_kinds(HEXAGON)
    g = dihedral_group(edge_m[0], vertex_m[0])
    perms = {e.word: edge_permutation(HEXAGON, e.matrix) for e in g.elements}
    for a in g.elements:
        for b in g.elements:
            ab = g.multiply(a, b)
            composed = tuple(perms[a.word][perms[b.word][i]]
                             for i in range(HEXAGON.m))
            assert composed == perms[ab.word]


def test_normals_transform_by_dual_matrix():
    g = dihedral_group(*_mirror_kinds(HEXAGON)[1][:2])
    for e in g.elements:
        perm = edge_permutation(HEXAGON, e.matrix)
        dual = dual_matrix(e.matrix)
        for i in range(HEXAGON.m):
            lam = HEXAGON.edges[i].normal
            img = HEXAGON.edges[perm[i]].normal
            assert dual.mat_vec(lam) == tuple(map(F, img))
