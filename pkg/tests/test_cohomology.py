"""Quotient-ring structure: Betti numbers, normal forms, products, pairing.

Dual route for the ring structure: the package reduces degree-4 classes with
its own echelon machinery; the oracle below rebuilds the degree-4 relation
span from the presentation definition and pushes it through sympy's rank /
nullspace instead. A Groebner-basis route (a third algorithm) pins down the
square's ring once more.
"""

from fractions import Fraction

import pytest
import sympy

from toricsym.catalog import corpus, hexagon, house_pentagon, square
from toricsym.cohomology import (
    cohomology_ring, check_invariants_match, invariant_deg2, linear_poly,
    orbit_sums, poly, poly_mul, presentation, reynolds_image, ring_action,
)
from toricsym.errors import DegreeTooHigh, NotASymmetry
from toricsym.exactlin import RatMatrix, rank
from toricsym.geometry import cross, polygon_from_vertices
from toricsym.symmetry import (
    detect_reflections, dihedral_group, edge_permutation, fundamental_region,
)

F = Fraction

CORPUS = corpus()


def test_square_presentation():
    p = square()
    pres = presentation(p)
    assert p.normals() == ((0, -1), (1, 0), (0, 1), (-1, 0))
    assert pres.sr_quadratics == ((0, 2), (1, 3))
    assert pres.sr_cubic is None
    assert pres.linear_rows == RatMatrix.from_rows(
        [[0, 1, 0, -1], [-1, 0, 1, 0]])


def test_triangle_presentation_uses_the_cubic():
    p = CORPUS["triangle"]
    pres = presentation(p)
    assert pres.sr_quadratics == ()
    assert pres.sr_cubic == (0, 1, 2)


def test_square_ring_structure():
    ring = cohomology_ring(square())
    assert ring.betti == (1, 2, 1)
    assert ring.deg2_basis == (2, 3)
    # opposite edges are identified by the linear relations
    assert ring.deg2_nf(0) == (1, 0)
    assert ring.deg2_nf(1) == (0, 1)
    # disjoint edges multiply to zero, adjacent ones to the point class
    assert ring.normal_form(poly({(0, 2): 1})).is_zero()
    assert ring.normal_form(poly({(2, 2): 1})).is_zero()
    assert ring.normal_form(poly({(0, 1): 1})).coords == (F(1),)
    assert ring.pairing == RatMatrix.from_rows([[0, 1], [1, 0]])


def test_product_table_matches_adjacency():
    for name in ("square", "hexagon", "triangle", "circle7", "g2"):
        p = CORPUS[name]
        ring = cohomology_ring(p)
        for i in range(p.m):
            for j in range(p.m):
                got = ring.product_table[i][j]
                if i != j and not p.adjacent(i, j):
                    assert got == 0, (name, i, j)
                elif i != j:
                    det = cross(p.edges[i].normal, p.edges[j].normal)
                    assert got == F(1, abs(det)), (name, i, j)


def test_linear_relations_annihilate_the_table():
    for name in ("house", "circle5", "d12"):
        p = CORPUS[name]
        ring = cohomology_ring(p)
        rows = ring.pres.linear_rows
        for i in range(p.m):
            for r in (0, 1):
                total = sum(rows[r, j] * ring.product_table[i][j]
                            for j in range(p.m))
                assert total == 0, (name, i, r)


def test_degree_routing():
    ring = cohomology_ring(square())
    assert ring.normal_form(poly({(0, 1, 2): 1})).degree == 6
    assert ring.normal_form(poly({(0, 1, 2): 1})).is_zero()
    assert ring.normal_form({}).is_zero()
    with pytest.raises(DegreeTooHigh):
        ring.normal_form(poly({(0,): 1, (0, 1): 1}))


def test_multiply_agrees_with_normal_form():
    ring = cohomology_ring(hexagon())
    a = ring.normal_form(linear_poly({0: 1, 2: F(1, 2)}))
    b = ring.normal_form(linear_poly({1: -3, 4: 1}))
    direct = ring.normal_form(
        poly_mul(linear_poly({0: 1, 2: F(1, 2)}), linear_poly({1: -3, 4: 1})))
    assert ring.multiply(a, b).coords == direct.coords
    point = ring.point_class()
    assert ring.multiply(a, point).degree == 6
    assert ring.multiply(a, point).is_zero()


# --- independent oracle ------------------------------------------------------


def oracle_structure(p):
    """Degree-4 dimension, point functional, and full product table computed
    with sympy only (rank + nullspace on the raw relation span)."""
    m = p.m
    monos = [(i, j) for i in range(m) for j in range(i, m)]
    idx = {mn: a for a, mn in enumerate(monos)}
    rows = []
    for i in range(m):
        for j in range(i + 1, m):
            if not p.adjacent(i, j):
                row = [sympy.Integer(0)] * len(monos)
                row[idx[(i, j)]] = sympy.Integer(1)
                rows.append(row)
    normals = [e.normal for e in p.edges]
    for k in range(m):
        for comp in (0, 1):
            row = [sympy.Integer(0)] * len(monos)
            for i in range(m):
                mn = (min(i, k), max(i, k))
                row[idx[mn]] += sympy.Integer(normals[i][comp])
            rows.append(row)
    rel = sympy.Matrix(rows)
    null = rel.nullspace()
    if len(null) != 1:
        return len(null), None
    f = null[0]
    det01 = abs(cross(normals[0], normals[1]))
    scale = sympy.Integer(det01) * f[idx[(0, 1)]]
    table = [[f[idx[(min(i, j), max(i, j))]] / scale for j in range(m)]
             for i in range(m)]
    return 1, table


def to_fraction(x):
    r = sympy.Rational(x)
    return F(int(r.p), int(r.q))


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_oracle_equivalence(name):
    p = CORPUS[name]
    dim4, table = oracle_structure(p)
    assert dim4 == 1
    ring = cohomology_ring(p)
    assert ring.betti == (1, p.m - 2, 1)
    for i in range(p.m):
        for j in range(p.m):
            assert to_fraction(table[i][j]) == ring.product_table[i][j]
    # pairing determinant nonzero both ways
    sub = sympy.Matrix([[table[a][b] for b in ring.deg2_basis]
                        for a in ring.deg2_basis])
    assert sub.det() != 0
    assert rank(ring.pairing) == p.m - 2


def test_groebner_route_square():
    xs = sympy.symbols("x0 x1 x2 x3")
    x0, x1, x2, x3 = xs
    gens = [x0 * x2, x1 * x3, x1 - x3, -x0 + x2]
    gb = sympy.groebner(gens, *xs, order="grevlex")
    # everything in degree 4 except the point class dies
    assert gb.reduce(x2 ** 2)[1] == 0
    assert gb.reduce(x0 * x2)[1] == 0
    nf01 = gb.reduce(x0 * x1)[1]
    nf23 = gb.reduce(x2 * x3)[1]
    assert nf01 == nf23 and nf01 != 0
    # degree 6 dies
    assert gb.reduce(x0 * x1 * x2)[1] == 0


# --- ring actions -----------------------------------------------------------


def test_ring_action_square_mirror():
    p = square()
    ring = cohomology_ring(p)
    refl = next(r for r in detect_reflections(p) if r.mirror_normal == (0, 1))
    act = ring_action(ring, edge_permutation(p, refl.matrix))
    # bottom <-> top is invisible in the quotient (they are identified)
    assert act.deg2_matrix == RatMatrix.identity(2)
    assert act.deg4_scalar == 1


def test_ring_action_rejects_non_symmetries():
    ring = cohomology_ring(square())
    with pytest.raises(NotASymmetry):
        ring_action(ring, (1, 0, 2, 3))  # swaps adjacency structure
    with pytest.raises(NotASymmetry):
        ring_action(ring, (0, 1, 2))
    # a cyclic shift respects the pentagon's adjacency but not its linear
    # ideal, so it must fail on the second check
    ring2 = cohomology_ring(house_pentagon())
    with pytest.raises(NotASymmetry):
        ring_action(ring2, (1, 2, 3, 4, 0))


def test_ring_action_sees_normals_only():
    # the ring cannot distinguish a rectangle from a square: both have the
    # same normal fan, so the quarter-turn relabeling preserves both ideals
    # even though it is not a rectangle symmetry
    rect = polygon_from_vertices([(-2, -1), (2, -1), (2, 1), (-2, 1)])
    act = ring_action(cohomology_ring(rect), (1, 2, 3, 0))
    assert act.deg4_scalar == 1


def test_ring_action_is_a_representation():
    p = hexagon()
    ring = cohomology_ring(p)
    refl = detect_reflections(p)
    g = dihedral_group(refl[0], refl[1])
    acts = {e.word: ring_action(ring, edge_permutation(p, e.matrix))
            for e in g.elements}
    for a in g.elements:
        for b in g.elements:
            ab = g.multiply(a, b)
            left = acts[a.word].deg2_matrix @ acts[b.word].deg2_matrix
            assert left == acts[ab.word].deg2_matrix
            composed = tuple(acts[a.word].perm[acts[b.word].perm[i]]
                             for i in range(p.m))
            assert composed == acts[ab.word].perm
            assert acts[ab.word].deg4_scalar == (
                acts[a.word].deg4_scalar * acts[b.word].deg4_scalar)


def test_invariants_square_full_group():
    p = square()
    ring = cohomology_ring(p)
    refl = detect_reflections(p)
    g = dihedral_group(refl[0], refl[1])
    acts = [ring_action(ring, edge_permutation(p, e.matrix))
            for e in g.elements]
    gens = [ring_action(ring, edge_permutation(p, r.matrix)) for r in refl[:2]]
    kern = invariant_deg2(ring, gens)
    reyn = reynolds_image(ring, acts)
    assert check_invariants_match(kern, reyn)


def test_invariant_dims_match_region_edge_counts():
    """deg-2 invariants of the action = (edges of the wedge polygon) - 2."""
    cases = []
    p = hexagon()
    refl = detect_reflections(p)
    full = dihedral_group(refl[0], refl[1])
    cases.append((p, full))
    sq = square()
    sq_refl = detect_reflections(sq)
    cases.append((sq, dihedral_group(sq_refl[0], sq_refl[1])))
    for p, g in cases:
        ring = cohomology_ring(p)
        gens = [ring_action(ring, edge_permutation(p, r.matrix))
                for r in (g.s1, g.s2)]
        kern = invariant_deg2(ring, gens)
        fr = fundamental_region(p, g)
        assert kern.cols == fr.region.m - 2


def test_orbit_sums_partition():
    p = hexagon()
    refl = detect_reflections(p)
    g = dihedral_group(refl[0], refl[1])
    perms = [edge_permutation(p, e.matrix) for e in g.elements]
    sums = orbit_sums(p.m, perms)
    combined = {}
    for s in sums:
        for k, v in s.items():
            combined[k] = combined.get(k, 0) + v
    assert combined == {(i,): 1 for i in range(p.m)}
