"""Linear symmetries of a rational polygon and their fundamental regions.

A reflection is stored with its matrix acting on the polygon's plane; the
induced action on edge normals is the inverse transpose. For a single
reflection or a dihedral group the fundamental region is the polygon clipped
to the negative side of the chosen mirror normal(s); its edges are labeled so
downstream code can name the surviving pieces of the original boundary:

  single mirror   E_1 .. E_n inherited edges inside the region, numbered away
                  from the mirror edge; the mirror may additionally cross one
                  or two polygon edges (their halves keep the parent's normal
                  and offset) or pass through one or two vertices,
  dihedral wedge  two mirror edges meeting at the origin, with slot edges
                  between them numbered from the s1 side.

The three single-mirror shapes are called cases 1-1 (two crossed edges),
1-2 (one edge, one vertex) and 1-3 (two vertices); the dihedral shapes are
2-1 (both wedge rays cross edges), 2-2 (s1 ray crosses an edge, s2 ray exits
a vertex) and 2-3 (both rays exit vertices).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    CaseMismatch, EllTooSmall, InconsistentGeometry, NotASymmetry,
    NotFiniteOrder, OrientationAmbiguous, PartitionFailure,
)
from .exactlin import Rat, RatMatrix, kernel_basis, solve
from .geometry import (
    IntVec, Point, RationalPolygon, _region_polygon, clip_halfplane, cross,
    dot, primitive,
)

_ORDER_BOUND = 1000


def inverse2(m: RatMatrix) -> RatMatrix:
    a, b, c, d = m.entries
    det = a * d - b * c
    if det == 0:
        raise ValueError("singular matrix")
    return RatMatrix.from_rows([[d / det, -b / det], [-c / det, a / det]])


def dual_matrix(m: RatMatrix) -> RatMatrix:
    """Action induced on normal vectors by x -> m x (inverse transpose)."""
    return inverse2(m.transpose())


@dataclass(frozen=True)
class Reflection:
    """An orientation-reversing involution preserving some polygon."""

    matrix: RatMatrix
    mirror_normal: IntVec  # primitive, sign-canonical; the fixed line is its kernel

    @staticmethod
    def from_matrix(matrix: RatMatrix) -> "Reflection":
        a, b, c, d = matrix.entries
        if a * d - b * c != -1:
            raise NotASymmetry("a reflection must have determinant -1")
        if matrix @ matrix != RatMatrix.identity(2):
            raise NotASymmetry("a reflection must be an involution")
        fixed = kernel_basis(RatMatrix.from_rows([
            [a - 1, b], [c, d - 1]]))
        assert len(fixed) == 1
        dvec = fixed[0]
        eta = primitive((dvec[1], -dvec[0]))
        if eta[0] < 0 or (eta[0] == 0 and eta[1] < 0):
            eta = (-eta[0], -eta[1])
        return Reflection(matrix, eta)


def vertex_permutation(p: RationalPolygon, matrix: RatMatrix) -> tuple[int, ...]:
    """tau with matrix * vertices[i] == vertices[tau[i]]; NotASymmetry if the
    vertex set is not preserved."""
    index = {v: i for i, v in enumerate(p.vertices)}
    tau = []
    for v in p.vertices:
        w = matrix.mat_vec(v)
        if w not in index:
            raise NotASymmetry(f"image of vertex {v} is not a vertex")
        tau.append(index[w])
    return tuple(tau)


def edge_permutation(p: RationalPolygon, matrix: RatMatrix) -> tuple[int, ...]:
    """pi with matrix * (edge i) == edge pi[i] as point sets."""
    tau = vertex_permutation(p, matrix)
    m = p.m
    pi = []
    for i in range(m):
        a, b = tau[i], tau[(i + 1) % m]
        if (a + 1) % m == b:
            pi.append(a)
        elif (b + 1) % m == a:
            pi.append(b)
        else:
            raise NotASymmetry("vertex images do not map edges to edges")
    return tuple(pi)


def detect_reflections(p: RationalPolygon) -> tuple[Reflection, ...]:
    """All reflections preserving p, in the order of their vertex pairings
    v_i -> v_{k-i} for k = 0..m-1."""
    vs = p.vertices
    m = p.m
    basis = RatMatrix.from_rows([[vs[0][0], vs[1][0]], [vs[0][1], vs[1][1]]])
    binv = inverse2(basis)  # vertices span the plane: no edge line hits 0
    found = []
    for k in range(m):
        t0, t1 = vs[k % m], vs[(k - 1) % m]
        target = RatMatrix.from_rows([[t0[0], t1[0]], [t0[1], t1[1]]])
        cand = target @ binv
        if all(cand.mat_vec(vs[i]) == vs[(k - i) % m] for i in range(m)):
            found.append(Reflection.from_matrix(cand))
    return tuple(found)


@dataclass(frozen=True)
class GroupElement:
    word: tuple[int, ...]  # letters 1 and 2; (a, b) acts as s_a after s_b
    matrix: RatMatrix

    @property
    def name(self) -> str:
        return "id" if not self.word else "".join(f"s{a}" for a in self.word)

    @property
    def length(self) -> int:
        return len(self.word)


def _alternating_word(length: int, last: int) -> tuple[int, ...]:
    letters = []
    cur = last
    for _ in range(length):
        letters.append(cur)
        cur = 3 - cur
    return tuple(reversed(letters))


@dataclass(frozen=True)
class DihedralGroup:
    """Group generated by two distinct reflections, of order 2*ell."""

    s1: Reflection
    s2: Reflection
    ell: int
    elements: tuple[GroupElement, ...]

    @property
    def order(self) -> int:
        return 2 * self.ell

    def identity(self) -> GroupElement:
        return self.elements[0]

    def element(self, word: Sequence[int]) -> GroupElement:
        """The element whose matrix equals the product over the given word."""
        mat = RatMatrix.identity(2)
        gens = {1: self.s1.matrix, 2: self.s2.matrix}
        for a in word:
            mat = mat @ gens[a]
        return self.by_matrix(mat)

    def by_matrix(self, mat: RatMatrix) -> GroupElement:
        for e in self.elements:
            if e.matrix == mat:
                return e
        raise KeyError("matrix is not in the group")

    def multiply(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return self.by_matrix(a.matrix @ b.matrix)

    def coset_reps(self, i: int) -> tuple[GroupElement, ...]:
        """Elements whose reduced word does not end in s_i: one per length
        0..ell-1, ordered by length (the standard transversal of W/<s_i>)."""
        reps = [e for e in self.elements
                if e.length < self.ell and (not e.word or e.word[-1] != i)]
        assert len(reps) == self.ell
        return tuple(reps)

    def swapped(self) -> "DihedralGroup":
        """Same group with the generator names exchanged."""
        return dihedral_group(self.s2, self.s1)


def dihedral_group(r1: Reflection, r2: Reflection) -> DihedralGroup:
    if r1.matrix == r2.matrix:
        raise EllTooSmall("the two generators coincide")
    rot = r1.matrix @ r2.matrix
    power = rot
    ell = 1
    while power != RatMatrix.identity(2):
        power = power @ rot
        ell += 1
        if ell > _ORDER_BOUND:
            raise NotFiniteOrder(
                "product of the two reflections has order beyond the bound")
    gens = {1: r1.matrix, 2: r2.matrix}

    def matrix_of(word):
        m = RatMatrix.identity(2)
        for a in word:
            m = m @ gens[a]
        return m

    words = [()]
    for k in range(1, ell):
        words.append(_alternating_word(k, last=1))
        words.append(_alternating_word(k, last=2))
    longest = tuple(1 if j % 2 == 0 else 2 for j in range(ell))
    words.append(longest)
    elements = tuple(GroupElement(w, matrix_of(w)) for w in words)
    if len({e.matrix for e in elements}) != 2 * ell:
        raise NotFiniteOrder("generators do not generate a dihedral group "
                             "of the computed order")
    return DihedralGroup(r1, r2, ell, elements)


@dataclass(frozen=True)
class FundamentalRegion:
    """The clipped region together with its edge labeling.

    kind is one of "1-1", "1-2", "1-3", "2-1", "2-2", "2-3". slot_edges maps
    the label number j of E_j to a region edge index; mirror_edges holds the
    region indices of the mirror edge(s) (one for a single reflection, two
    for a wedge, in generator order); cross_edges holds, for single-mirror
    cases, the region indices of the crossed halves in label order
    (E_{2n+1}, then E_{2n+2} when present). parent_of sends non-mirror region
    edges to the polygon edge they came from.
    """

    polygon: RationalPolygon
    region: RationalPolygon
    group: "Reflection | DihedralGroup"
    etas: tuple[IntVec, ...]
    kind: str
    n: int
    mirror_edges: tuple[int, ...]
    slot_edges: dict[int, int]
    cross_edges: tuple[int, ...]
    parent_of: dict[int, int]
    exits: tuple[tuple[str, int], ...]  # per mirror ray: ("edge"|"vertex", idx)
    fixed_vertices: tuple[int, ...]
    warnings: tuple[str, ...] = ()

    @property
    def slots(self) -> tuple[int, ...]:
        return tuple(sorted(self.slot_edges))


def _match_parents(p: RationalPolygon, region: RationalPolygon,
                   etas: Sequence[IntVec]) -> tuple[dict[int, int], dict[int, int]]:
    """(mirror edge index -> which eta, non-mirror index -> parent index)."""
    by_halfspace = {(e.normal, e.offset): j for j, e in enumerate(p.edges)}
    mirrors: dict[int, int] = {}
    parents: dict[int, int] = {}
    for idx, e in enumerate(region.edges):
        if e.offset == 0 and e.normal in etas:
            mirrors[idx] = etas.index(e.normal)
            continue
        key = (e.normal, e.offset)
        if key not in by_halfspace:
            raise InconsistentGeometry(
                f"region edge {e.normal}, {e.offset} matches no polygon edge")
        parents[idx] = by_halfspace[key]
    return mirrors, parents


def _truncated(region: RationalPolygon, idx: int, p: RationalPolygon,
               parent: int) -> bool:
    e, pe = region.edges[idx], p.edges[parent]
    return (e.tail, e.head) != (pe.tail, pe.head)


def _walk_from(region: RationalPolygon, start: int, avoid: set[int]) -> list[int]:
    """Region edge indices starting next to `start`, walking the cyclic order
    away from it, skipping nothing, stopping before any index in avoid."""
    m = region.m
    for step in (1, -1):
        first = (start + step) % m
        if first not in avoid:
            out = []
            i = first
            while i not in avoid and i != start:
                out.append(i)
                i = (i + step) % m
            return out
    return []


def _single_region(p: RationalPolygon, r: Reflection, eta: IntVec,
                   warnings: tuple[str, ...]) -> FundamentalRegion:
    pts = clip_halfplane(p.vertices, eta)
    region = _region_polygon(pts)
    if region.area() * 2 != p.area():
        raise InconsistentGeometry("half region does not have half the area")
    mirrors, parents = _match_parents(p, region, [eta])
    if len(mirrors) != 1:
        raise InconsistentGeometry("expected exactly one mirror edge")
    mirror_idx = next(iter(mirrors))
    crossed = [i for i in parents if _truncated(region, i, p, parents[i])]
    fixed_vertices = tuple(
        i for i, v in enumerate(p.vertices) if dot(v, eta) == 0)
    n_inherited = len(parents) - len(crossed)
    if len(crossed) == 2:
        kind = "1-1"
    elif len(crossed) == 1 and len(fixed_vertices) == 1:
        kind = "1-2"
    elif len(fixed_vertices) == 2:
        kind = "1-3"
    else:
        raise CaseMismatch(
            f"mirror meets boundary in {len(crossed)} edges and "
            f"{len(fixed_vertices)} vertices")
    n = n_inherited
    if p.m != {"1-1": 2 * n + 2, "1-2": 2 * n + 1, "1-3": 2 * n}[kind]:
        raise CaseMismatch("edge count does not match the detected case")

    m = region.m
    after = (mirror_idx + 1) % m          # ccw neighbor of the mirror edge
    before = (mirror_idx - 1) % m
    slot_edges: dict[int, int] = {}
    cross_edges: tuple[int, ...] = ()
    if kind == "1-1":
        # ccw cyclic order is mirror, E_{2n+2}, E_1 .. E_n, E_{2n+1}
        cross_edges = (before, after)
        walk = _walk_from(region, after, {mirror_idx, before})
        for j, idx in enumerate(walk, start=1):
            slot_edges[j] = idx
    elif kind == "1-2":
        cross_idx = crossed[0]
        walk = _walk_from(region, mirror_idx, {mirror_idx, cross_idx})
        # E_1 sits at the fixed-vertex end of the mirror edge, E_n next to
        # the crossed half
        for j, idx in enumerate(walk, start=1):
            slot_edges[j] = idx
        cross_edges = (cross_idx,)
    else:
        walk = _walk_from(region, mirror_idx, {mirror_idx})
        for j, idx in enumerate(walk, start=1):
            slot_edges[j] = idx
    if sorted(slot_edges.values()) != sorted(
            set(parents) - set(cross_edges)):
        raise CaseMismatch("slot labeling does not cover the region edges")
    return FundamentalRegion(
        polygon=p, region=region, group=r, etas=(eta,), kind=kind, n=n,
        mirror_edges=(mirror_idx,), slot_edges=slot_edges,
        cross_edges=cross_edges, parent_of=parents, exits=(),
        fixed_vertices=fixed_vertices, warnings=warnings)


def _point_on_edge_interior(p: RationalPolygon, q: Point) -> Optional[int]:
    for j, e in enumerate(p.edges):
        if dot(q, e.normal) + e.offset == 0:
            lo, hi = e.tail, e.head
            seg = (hi[0] - lo[0], hi[1] - lo[1])
            t_num = dot((q[0] - lo[0], q[1] - lo[1]), seg)
            t_den = dot(seg, seg)
            if 0 < t_num < t_den:
                return j
    return None


def _dihedral_region(p: RationalPolygon, group: DihedralGroup,
                     etas: tuple[IntVec, IntVec],
                     warnings: tuple[str, ...]) -> FundamentalRegion:
    pts = clip_halfplane(p.vertices, etas[0])
    pts = clip_halfplane(pts, etas[1])
    region = _region_polygon(pts)
    if region.area() * group.order != p.area():
        raise InconsistentGeometry("wedge area is not area(P)/|W|")
    mirrors, parents = _match_parents(p, region, list(etas))
    if len(mirrors) != 2 or sorted(mirrors.values()) != [0, 1]:
        raise InconsistentGeometry("expected one mirror edge per generator")
    mirror_of = {which: idx for idx, which in mirrors.items()}
    s1_idx, s2_idx = mirror_of[0], mirror_of[1]

    origin = (Fraction(0), Fraction(0))

    def exit_feature(mirror_idx: int) -> tuple[str, int]:
        e = region.edges[mirror_idx]
        if origin not in (e.tail, e.head):
            raise InconsistentGeometry("mirror edge does not start at the origin")
        far = e.head if e.tail == origin else e.tail
        if far in p.vertices:
            return ("vertex", p.vertices.index(far))
        j = _point_on_edge_interior(p, far)
        if j is None:
            raise InconsistentGeometry(
                f"wedge ray endpoint {far} is on neither an edge nor a vertex")
        return ("edge", j)

    exit1, exit2 = exit_feature(s1_idx), exit_feature(s2_idx)
    if exit1[0] == "vertex" and exit2[0] == "edge":
        # normalize so the edge-crossing generator is s1
        return _dihedral_region(
            p, group.swapped(), (etas[1], etas[0]),
            warnings + ("generators reordered so that the mirror crossing "
                        "an edge interior is s1",))
    kind = {("edge", "edge"): "2-1", ("edge", "vertex"): "2-2",
            ("vertex", "vertex"): "2-3"}[(exit1[0], exit2[0])]
    count = len(parents)
    ell = group.ell
    if kind == "2-1":
        n = count
        expected_m = 2 * ell * (n - 1)
        first_slot = 1
    elif kind == "2-2":
        n = count + 1
        expected_m = ell * (2 * n - 3)
        first_slot = 1
    else:
        n = count + 2
        expected_m = 2 * ell * (n - 2)
        first_slot = 2
    if p.m != expected_m:
        raise CaseMismatch(
            f"case {kind} with n={n}, ell={ell} needs m={expected_m}, "
            f"polygon has {p.m}")
    walk = _walk_from(region, s1_idx, {s1_idx, s2_idx})
    if len(walk) != count:
        raise InconsistentGeometry("slot edges do not form one arc")
    slot_edges = {first_slot + k: idx for k, idx in enumerate(walk)}
    return FundamentalRegion(
        polygon=p, region=region, group=group, etas=etas, kind=kind, n=n,
        mirror_edges=(s1_idx, s2_idx), slot_edges=slot_edges,
        cross_edges=(), parent_of=parents, exits=(exit1, exit2),
        fixed_vertices=(), warnings=warnings)


def fundamental_region(p: RationalPolygon,
                       group: "Reflection | DihedralGroup",
                       chamber_hint: Optional[Sequence] = None,
                       ) -> FundamentalRegion:
    """Clip p to a fundamental region of the group and label its edges.

    chamber_hint, when given, must pair strictly negatively with the chosen
    mirror normals and selects among the sign candidates; otherwise the
    candidate whose region has the lexicographically smallest vertex tuple
    is taken.
    """
    if isinstance(group, Reflection):
        edge_permutation(p, group.matrix)  # NotASymmetry when it is not one
        base = group.mirror_normal
        sign_sets = [(base,), ((-base[0], -base[1]),)]
        builder = lambda etas, warns: _single_region(p, group, etas[0], warns)
        warnings: tuple[str, ...] = ()
    else:
        for gen in (group.s1, group.s2):
            edge_permutation(p, gen.matrix)
        b1, b2 = group.s1.mirror_normal, group.s2.mirror_normal
        sign_sets = [
            (b1, b2), (b1, (-b2[0], -b2[1])),
            ((-b1[0], -b1[1]), b2), ((-b1[0], -b1[1]), (-b2[0], -b2[1])),
        ]
        builder = lambda etas, warns: _dihedral_region(p, group, etas, warns)
        warnings = ()
        if group.ell == 2:
            warnings = ("dihedral group with ell=2 (perpendicular mirrors): "
                        "outside the usual ell>=3 setting, handled anyway",)

    if chamber_hint is not None:
        hint = tuple(Fraction(x) for x in chamber_hint)
        chosen = [etas for etas in sign_sets
                  if all(dot(hint, eta) < 0 for eta in etas)]
        if len(chosen) != 1:
            raise OrientationAmbiguous(
                "chamber hint lies on a mirror line and selects no candidate")
        try:
            return builder(chosen[0], warnings)
        except InconsistentGeometry as exc:
            raise OrientationAmbiguous(
                f"chamber hint does not select a fundamental wedge: {exc}")
    candidates = []
    for etas in sign_sets:
        try:
            candidates.append(builder(etas, warnings))
        except InconsistentGeometry:
            continue
    if not candidates:
        raise OrientationAmbiguous("no sign choice yields a fundamental region")
    return min(candidates, key=lambda fr: fr.region.vertices)


# ---------------------------------------------------------------------------
# orbits and coefficients


def orbit_decomposition(fr: FundamentalRegion) -> dict[int, tuple[tuple[GroupElement, int], ...]]:
    """For each slot j, the pairs (u, u(E_j)'s polygon edge index) over the
    slot's summation set, and a proof that these orbits partition the
    polygon's edges (crossed halves count through their parents).

    Summation sets: slot 1 uses the transversal avoiding s1, slot n the one
    avoiding s2, inner slots the whole group. For a single reflection every
    slot uses {id, sigma} and the crossed parents are their own singleton
    orbits.
    """
    p = fr.polygon
    out: dict[int, tuple[tuple[GroupElement, int], ...]] = {}
    used: list[int] = []
    if isinstance(fr.group, Reflection):
        sigma = GroupElement((1,), fr.group.matrix)
        ident = GroupElement((), RatMatrix.identity(2))
        perm = edge_permutation(p, fr.group.matrix)
        for j, idx in fr.slot_edges.items():
            parent = fr.parent_of[idx]
            out[j] = ((ident, parent), (sigma, perm[parent]))
            used += [parent, perm[parent]]
        for idx in fr.cross_edges:
            parent = fr.parent_of[idx]
            if perm[parent] != parent:
                raise InconsistentGeometry(
                    "a mirror-crossed edge must map to itself")
            used.append(parent)
    else:
        group = fr.group
        perms = {e.word: edge_permutation(p, e.matrix) for e in group.elements}
        for j, idx in fr.slot_edges.items():
            parent = fr.parent_of[idx]
            if j == 1:
                summation = group.coset_reps(1)
            elif j == fr.n:
                summation = group.coset_reps(2)
            else:
                summation = group.elements
            entries = tuple((u, perms[u.word][parent]) for u in summation)
            out[j] = entries
            used += [k for _, k in entries]
    if sorted(used) != list(range(p.m)):
        raise PartitionFailure(
            "slot orbits do not cover every polygon edge exactly once")
    return out


@dataclass(frozen=True)
class SingleCoefficients:
    c: dict[int, Rat]  # slot -> coefficient in lambda_{sigma(i)} - lambda_i = c * eta
    integral: bool


def single_coefficients(fr: FundamentalRegion) -> SingleCoefficients:
    """Reflection coefficients, plus the geometric side conditions: the
    normal of a crossed edge is fixed by the dual reflection, and in case
    1-1 the two crossed normals are opposite."""
    assert isinstance(fr.group, Reflection)
    p = fr.polygon
    eta = fr.etas[0]
    perm = edge_permutation(p, fr.group.matrix)
    dual = dual_matrix(fr.group.matrix)
    cs: dict[int, Rat] = {}
    for j, idx in fr.slot_edges.items():
        lam = p.edges[fr.parent_of[idx]].normal
        lam_img = p.edges[perm[fr.parent_of[idx]]].normal
        diff = (Fraction(lam_img[0] - lam[0]), Fraction(lam_img[1] - lam[1]))
        if cross(diff, eta) != 0:
            raise InconsistentGeometry(
                f"normal difference {diff} is not a multiple of eta={eta}")
        cs[j] = diff[0] / eta[0] if eta[0] != 0 else diff[1] / eta[1]
    for idx in fr.cross_edges:
        lam = p.edges[fr.parent_of[idx]].normal
        if dual.mat_vec(lam) != tuple(map(Fraction, lam)):
            raise InconsistentGeometry(
                f"crossed edge normal {lam} is not fixed by the mirror")
    if fr.kind == "1-1":
        l1 = p.edges[fr.parent_of[fr.cross_edges[0]]].normal
        l2 = p.edges[fr.parent_of[fr.cross_edges[1]]].normal
        if (l1[0] + l2[0], l1[1] + l2[1]) != (0, 0):
            raise InconsistentGeometry(
                "the two crossed edge normals must be opposite")
    return SingleCoefficients(
        cs, all(v.denominator == 1 for v in cs.values()))


@dataclass(frozen=True)
class DihedralCoefficients:
    """c and d keyed by (element word, slot): the expansion
    lambda(u(E_j)) - lambda(E_j) = c * eta_1 + d * eta_2."""

    sets: dict[int, tuple[GroupElement, ...]]
    c: dict[tuple[tuple[int, ...], int], Rat]
    d: dict[tuple[tuple[int, ...], int], Rat]
    integral: bool


def coefficient_pair(fr: FundamentalRegion, element: GroupElement,
                     slot: int) -> tuple[Rat, Rat]:
    """(c, d) for one group element and one slot, from the stored normals."""
    p = fr.polygon
    perm = edge_permutation(p, element.matrix)
    parent = fr.parent_of[fr.slot_edges[slot]]
    lam = p.edges[parent].normal
    lam_img = p.edges[perm[parent]].normal
    diff = (lam_img[0] - lam[0], lam_img[1] - lam[1])
    e1, e2 = fr.etas
    mat = RatMatrix.from_rows([[e1[0], e2[0]], [e1[1], e2[1]]])
    c, d = solve(mat, diff)
    return c, d


def dihedral_coefficients(fr: FundamentalRegion) -> DihedralCoefficients:
    assert isinstance(fr.group, DihedralGroup)
    decomp = orbit_decomposition(fr)
    sets: dict[int, tuple[GroupElement, ...]] = {}
    c: dict[tuple[tuple[int, ...], int], Rat] = {}
    d: dict[tuple[tuple[int, ...], int], Rat] = {}
    p = fr.polygon
    e1, e2 = fr.etas
    mat = RatMatrix.from_rows([[e1[0], e2[0]], [e1[1], e2[1]]])
    for j, entries in decomp.items():
        sets[j] = tuple(u for u, _ in entries)
        lam = p.edges[fr.parent_of[fr.slot_edges[j]]].normal
        for u, edge_idx in entries:
            lam_img = p.edges[edge_idx].normal
            cu, du = solve(mat, (lam_img[0] - lam[0], lam_img[1] - lam[1]))
            c[(u.word, j)] = cu
            d[(u.word, j)] = du
    integral = all(v.denominator == 1 for v in list(c.values()) + list(d.values()))
    return DihedralCoefficients(sets, c, d, integral)
