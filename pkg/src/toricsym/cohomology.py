"""Rational cohomology ring of the toric surface attached to a polygon.

The ring is Q[x_0..x_{m-1}] / (I + J) with one generator per edge, where I
is generated by the products of variables whose edges do not meet (all
squarefree monomials x_i x_j with non-adjacent edges; for a triangle the
single cubic x_0 x_1 x_2) and J by the two linear forms sum_i <e_k, n_i> x_i
built from the edge normals. Gradings: variables sit in degree 2, the ring
is 1, m-2, 1 in degrees 0, 2, 4 and zero above.

Polynomials are plain dicts mapping sorted variable-index tuples to
Fractions. Degree-2 classes are coordinatized on the non-pivot variables of
the echelonized linear forms; degree-4 classes on the point class, scaled so
that an adjacent product x_i x_j equals 1/|det(n_i, n_j)| times the point
class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    DegeneratePairing, DegreeTooHigh, NotASymmetry, UnexpectedBettiNumber,
)
from .exactlin import Rat, RatMatrix, Vec, kernel_basis, rank, rref, spans_equal
from .geometry import RationalPolygon, cross

Poly = dict[tuple[int, ...], Rat]


def poly(terms: Mapping[Sequence[int], object]) -> Poly:
    out: Poly = {}
    for mono, coef in terms.items():
        key = tuple(sorted(mono))
        coef = Fraction(coef)
        if coef:
            out[key] = out.get(key, Fraction(0)) + coef
            if not out[key]:
                del out[key]
    return out


def poly_add(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Fraction(0)) + v
        if not out[k]:
            del out[k]
    return out


def poly_scale(c, a: Poly) -> Poly:
    c = Fraction(c)
    return {} if c == 0 else {k: c * v for k, v in a.items()}


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(sorted(ka + kb))
            out[k] = out.get(k, Fraction(0)) + va * vb
            if not out[k]:
                del out[k]
    return out


def linear_poly(coeffs: Mapping[int, object]) -> Poly:
    return poly({(i,): c for i, c in coeffs.items()})


def poly_str(a: Poly, names: Optional[Mapping[int, str]] = None) -> str:
    if not a:
        return "0"
    parts = []
    for mono in sorted(a):
        c = a[mono]
        label = "*".join((names or {}).get(i, f"x{i}") for i in mono) or "1"
        if c == 1 and mono:
            parts.append(label)
        elif c == -1 and mono:
            parts.append(f"-{label}")
        else:
            parts.append(f"{c}*{label}" if mono else f"{c}")
    return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class Presentation:
    polygon: RationalPolygon
    sr_quadratics: tuple[tuple[int, int], ...]
    sr_cubic: Optional[tuple[int, int, int]]
    linear_rows: RatMatrix  # 2 x m

    def sr_polys(self) -> tuple[Poly, ...]:
        gens = [poly({q: 1}) for q in self.sr_quadratics]
        if self.sr_cubic is not None:
            gens.append(poly({self.sr_cubic: 1}))
        return tuple(gens)

    def linear_polys(self) -> tuple[Poly, Poly]:
        r0, r1 = self.linear_rows.row(0), self.linear_rows.row(1)
        return (linear_poly(dict(enumerate(r0))),
                linear_poly(dict(enumerate(r1))))


def presentation(p: RationalPolygon) -> Presentation:
    m = p.m
    quads = tuple((i, j) for i in range(m) for j in range(i + 1, m)
                  if not p.adjacent(i, j))
    cubic = (0, 1, 2) if m == 3 else None
    rows = RatMatrix.from_rows([
        [Fraction(p.edges[i].normal[k]) for i in range(m)] for k in (0, 1)])
    return Presentation(p, quads, cubic, rows)


@dataclass(frozen=True)
class RingElement:
    degree: int
    coords: Vec

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)


@dataclass(frozen=True)
class CohomologyRing:
    pres: Presentation
    betti: tuple[int, int, int]
    deg2_basis: tuple[int, ...]
    _deg2_nf: tuple[Vec, ...]               # per variable
    _monomials: tuple[tuple[int, int], ...]  # all x_i x_j with i <= j
    _mono_index: dict[tuple[int, int], int]
    _red_rows: RatMatrix                     # echelon form of the relations
    _red_pivots: tuple[int, ...]
    _free_mono: int                          # index of the surviving monomial
    _point_scale: Rat                        # reduction value of the point class
    product_table: tuple[tuple[Rat, ...], ...]
    pairing: RatMatrix

    @property
    def m(self) -> int:
        return self.pres.polygon.m

    # -- normal forms -----------------------------------------------------

    def deg2_nf(self, i: int) -> Vec:
        return self._deg2_nf[i]

    def _reduce_deg4(self, vector: Sequence[Rat]) -> Rat:
        v = list(vector)
        for k, p in enumerate(self._red_pivots):
            if v[p]:
                f = v[p]
                row = self._red_rows.row(k)
                for j in range(len(v)):
                    if row[j]:
                        v[j] -= f * row[j]
        for j, x in enumerate(v):
            assert x == 0 or j == self._free_mono
        return v[self._free_mono] / self._point_scale

    def normal_form(self, f: Poly) -> RingElement:
        """Class of a homogeneous polynomial (degree = 2 * monomial length).

        Degree 6 and higher land in zero graded pieces and return the zero
        class; mixed-degree input raises DegreeTooHigh.
        """
        if not f:
            return RingElement(0, (Fraction(0),))
        lengths = {len(k) for k in f}
        if len(lengths) != 1:
            raise DegreeTooHigh("polynomial is not homogeneous")
        ln = lengths.pop()
        if ln == 0:
            return RingElement(0, (f[()],))
        if ln == 1:
            coords = [Fraction(0)] * len(self.deg2_basis)
            for (i,), c in f.items():
                for a, x in enumerate(self._deg2_nf[i]):
                    coords[a] += c * x
            return RingElement(2, tuple(coords))
        if ln == 2:
            v = [Fraction(0)] * len(self._monomials)
            for mono, c in f.items():
                v[self._mono_index[mono]] += c
            return RingElement(4, (self._reduce_deg4(v),))
        return RingElement(2 * ln, ())

    def multiply(self, a: RingElement, b: RingElement) -> RingElement:
        if a.degree == 0:
            return RingElement(b.degree, tuple(a.coords[0] * x for x in b.coords))
        if b.degree == 0:
            return self.multiply(b, a)
        if a.degree == 2 and b.degree == 2:
            s = Fraction(0)
            for i, ai in zip(self.deg2_basis, a.coords):
                if not ai:
                    continue
                for j, bj in zip(self.deg2_basis, b.coords):
                    s += ai * bj * self.product_table[i][j]
            return RingElement(4, (s,))
        return RingElement(min(a.degree + b.degree, 6), ())

    def point_class(self) -> RingElement:
        return RingElement(4, (Fraction(1),))


def cohomology_ring(p: RationalPolygon) -> CohomologyRing:
    pres = presentation(p)
    m = p.m
    red2, piv2 = rref(pres.linear_rows)
    if len(piv2) != 2:
        raise UnexpectedBettiNumber("edge normals do not span the plane")
    basis = tuple(i for i in range(m) if i not in piv2)
    nf2: list[Vec] = []
    for i in range(m):
        if i in basis:
            nf2.append(tuple(Fraction(1) if b == i else Fraction(0)
                             for b in basis))
        else:
            k = piv2.index(i)
            nf2.append(tuple(-red2[k, b] for b in basis))

    monomials = tuple((i, j) for i in range(m) for j in range(i, m))
    mono_index = {mn: a for a, mn in enumerate(monomials)}
    rel_rows: list[list[Rat]] = []
    for q in pres.sr_quadratics:
        row = [Fraction(0)] * len(monomials)
        row[mono_index[q]] = Fraction(1)
        rel_rows.append(row)
    for k in range(m):
        for r in (0, 1):
            row = [Fraction(0)] * len(monomials)
            for i in range(m):
                c = pres.linear_rows[r, i]
                if c:
                    mn = (min(i, k), max(i, k))
                    row[mono_index[mn]] += c
            rel_rows.append(row)
    red4, piv4 = rref(RatMatrix.from_rows(rel_rows))
    free = [a for a in range(len(monomials)) if a not in piv4]
    if len(free) != 1:
        raise UnexpectedBettiNumber(
            f"degree-4 piece has dimension {len(free)}, expected 1")
    red4 = RatMatrix.from_rows(red4.row_list()[:len(piv4)])

    # normalize so an adjacent product x_i x_j is the point class divided by
    # |det(n_i, n_j)|; the first adjacent pair is (0, 1)
    def raw_reduce(vector):
        v = list(vector)
        for k2, p2 in enumerate(piv4):
            if v[p2]:
                f = v[p2]
                row = red4.row(k2)
                for j in range(len(v)):
                    if row[j]:
                        v[j] -= f * row[j]
        return v[free[0]]

    e01 = [Fraction(0)] * len(monomials)
    e01[mono_index[(0, 1)]] = Fraction(1)
    det01 = abs(cross(p.edges[0].normal, p.edges[1].normal))
    point_scale = det01 * raw_reduce(e01)
    if point_scale == 0:
        raise UnexpectedBettiNumber(
            "the class of an adjacent-edge product vanished")

    table = []
    for i in range(m):
        row_vals = []
        for j in range(m):
            v = [Fraction(0)] * len(monomials)
            v[mono_index[(min(i, j), max(i, j))]] = Fraction(1)
            row_vals.append(raw_reduce(v) / point_scale)
        table.append(tuple(row_vals))
    table = tuple(table)

    pairing = RatMatrix.from_rows(
        [[table[a][b] for b in basis] for a in basis])
    if rank(pairing) != len(basis):
        raise DegeneratePairing("degree-2 intersection pairing is singular")

    ring = CohomologyRing(
        pres=pres, betti=(1, m - 2, 1), deg2_basis=basis,
        _deg2_nf=tuple(nf2), _monomials=monomials, _mono_index=mono_index,
        _red_rows=red4, _red_pivots=piv4, _free_mono=free[0],
        _point_scale=point_scale, product_table=table, pairing=pairing)
    return ring


# ---------------------------------------------------------------------------
# group actions on the ring


@dataclass(frozen=True)
class RingAction:
    """A permutation of the variables acting as a ring automorphism."""

    perm: tuple[int, ...]
    deg2_matrix: RatMatrix  # on the deg2 basis, columns = images
    deg4_scalar: Rat


def ring_action(ring: CohomologyRing, perm: Sequence[int]) -> RingAction:
    """Check that permuting variables by perm preserves both ideals and
    return the induced maps on the graded pieces.

    Raises NotASymmetry when a permuted linear form is not again a linear
    combination of the linear forms (equivalently, nonzero in degree 2).
    """
    m = ring.m
    perm = tuple(perm)
    if sorted(perm) != list(range(m)):
        raise NotASymmetry("not a permutation of the variables")
    p = ring.pres.polygon
    for i in range(m):
        for j in range(i + 1, m):
            if not p.adjacent(i, j) and p.adjacent(perm[i], perm[j]):
                raise NotASymmetry(
                    f"permutation sends the disjoint pair ({i},{j}) to "
                    "adjacent edges")
    for f in ring.pres.linear_polys():
        moved = poly({(perm[k[0]],): c for k, c in f.items()})
        if not ring.normal_form(moved).is_zero():
            raise NotASymmetry(
                "permutation does not preserve the linear relations")
    cols = [ring.deg2_nf(perm[b]) for b in ring.deg2_basis]
    deg2 = RatMatrix.from_rows(
        [[cols[a][r] for a in range(len(cols))] for r in range(len(cols))])
    det01 = ring.product_table[0][1]
    scalar = ring.product_table[perm[0]][perm[1]] / det01
    return RingAction(perm, deg2, scalar)


def invariant_deg2(ring: CohomologyRing,
                   actions: Iterable[RingAction]) -> RatMatrix:
    """Basis (as columns) of the degree-2 invariants of the given actions.

    Computed as the kernel of the stacked (rho - 1) blocks and cross-checked
    against the image of the averaging operator over the full action list.
    """
    acts = list(actions)
    dim = len(ring.deg2_basis)
    ident = RatMatrix.identity(dim)
    stacked: Optional[RatMatrix] = None
    for a in acts:
        block = a.deg2_matrix.add(ident.scale(-1))
        stacked = block if stacked is None else stacked.stack(block)
    if stacked is None:
        return ident
    kb = kernel_basis(stacked)
    kmat = RatMatrix.from_rows(
        [[v[r] for v in kb] for r in range(dim)]) if kb else RatMatrix.zeros(dim, 0)
    return kmat


def reynolds_image(ring: CohomologyRing,
                   group_actions: Sequence[RingAction]) -> RatMatrix:
    """Column span of the averaging operator over a full group's actions."""
    dim = len(ring.deg2_basis)
    acc = RatMatrix.zeros(dim, dim)
    for a in group_actions:
        acc = acc.add(a.deg2_matrix)
    return acc.scale(Fraction(1, len(group_actions)))


def check_invariants_match(kernel_mat: RatMatrix,
                           reynolds_mat: RatMatrix) -> bool:
    return spans_equal(kernel_mat, reynolds_mat)


def orbit_sums(m: int, perms: Sequence[Sequence[int]]) -> tuple[Poly, ...]:
    """One linear polynomial per variable orbit: the sum of the orbit."""
    seen: set[int] = set()
    sums = []
    for i in range(m):
        if i in seen:
            continue
        orbit = {i}
        frontier = [i]
        while frontier:
            nxt = []
            for k in frontier:
                for pi in perms:
                    if pi[k] not in orbit:
                        orbit.add(pi[k])
                        nxt.append(pi[k])
            frontier = nxt
        seen |= orbit
        sums.append(linear_poly({k: 1 for k in sorted(orbit)}))
    return tuple(sums)
