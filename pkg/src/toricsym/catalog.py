"""Built-in example polygons.

Four named builtins back the CLI (square, hexagon, g2, d12); the remaining
constructors exist for the test suite: a pentagon whose only mirror passes
through a vertex and an edge, a 9-gon whose wedge boundary mixes an edge
crossing with a vertex exit, and a corpus of m-gons for 3 <= m <= 12 with
rational non-lattice vertices built from rational points on the unit circle.
"""

from __future__ import annotations

from fractions import Fraction

from .geometry import RationalPolygon, polygon_from_halfspaces, polygon_from_vertices
from .rootsystems import normal_orbit, root_system, weight_polytope


def square() -> RationalPolygon:
    return polygon_from_vertices([(-1, -1), (1, -1), (1, 1), (-1, 1)])


def hexagon() -> RationalPolygon:
    return polygon_from_vertices(
        [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)])


def g2_polytope() -> RationalPolygon:
    return weight_polytope(root_system("G2"))


def d12_polytope() -> RationalPolygon:
    """12-gon invariant under the same order-12 group as the G2 polytope but
    with every mirror passing through two vertices (no mirror fixes an edge
    normal, so dihedral wedges are always of the two-vertex kind)."""
    orbit = normal_orbit(root_system("G2"), (1, 1))
    return polygon_from_halfspaces([(n, Fraction(-1)) for n in orbit])


BUILTINS = {
    "square": square,
    "hexagon": hexagon,
    "g2": g2_polytope,
    "d12": d12_polytope,
}


def builtin(name: str) -> RationalPolygon:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise ValueError(f"unknown builtin {name!r}; pick one of "
                         + ", ".join(sorted(BUILTINS))) from None


def house_pentagon() -> RationalPolygon:
    """Pentagon with a single mirror (x -> -x) through the apex vertex and
    the opposite bottom edge."""
    return polygon_from_vertices([(-1, -1), (1, -1), (1, 1), (0, 2), (-1, 1)])


def ninegon() -> RationalPolygon:
    """9-gon invariant under the order-6 group of the A2 system.

    Normals are the two orbits of sizes 3 and 6. The family offsets (-4, -7)
    keep an edge for each of the nine half-spaces and make the short-family
    edges cross the mirrors while every long-family edge ends at vertices;
    valid offsets (a, b) here need 2b < 3a < b, and (-4, -7) is an integer
    point of that window.
    """
    rs = root_system("A2")
    fam_short = normal_orbit(rs, (0, 1))
    fam_long = normal_orbit(rs, (1, 1))
    halfspaces = ([(n, Fraction(-4)) for n in fam_short]
                  + [(n, Fraction(-7)) for n in fam_long])
    return polygon_from_halfspaces(halfspaces)


def _circle_point(t) -> tuple[Fraction, Fraction]:
    # rational parametrization of the unit circle; increasing t walks it
    # counterclockwise from just past the negative x-axis
    t = Fraction(t)
    den = 1 + t * t
    return ((1 - t * t) / den, 2 * t / den)


_CIRCLE_PARAMS = {
    3: ("-2", "0", "2"),
    4: ("-3", "-1/2", "1/2", "3"),
    5: ("-5", "-1", "0", "1", "5"),
    6: ("-6", "-3/2", "-1/3", "1/3", "3/2", "6"),
    7: ("-4", "-1", "-1/3", "0", "1/3", "1", "4"),
    8: ("-7", "-2", "-1", "-1/4", "1/4", "1", "2", "7"),
    9: ("-8", "-3", "-1", "-1/2", "0", "1/2", "1", "3", "8"),
    10: ("-9", "-3", "-3/2", "-2/3", "-1/4", "1/4", "2/3", "3/2", "3", "9"),
    11: ("-10", "-4", "-2", "-1", "-1/2", "0", "1/2", "1", "2", "4", "10"),
    12: ("-12", "-5", "-2", "-1", "-1/2", "-1/6",
         "1/6", "1/2", "1", "2", "5", "12"),
}


def circle_polygon(m: int) -> RationalPolygon:
    """Irregular convex m-gon with vertices on the rational unit circle."""
    return polygon_from_vertices(
        [_circle_point(t) for t in _CIRCLE_PARAMS[m]])


def corpus() -> dict[str, RationalPolygon]:
    """Polygons exercised by the ring-structure properties: one irregular
    rational m-gon for every edge count 3..12 plus the named examples."""
    out = {f"circle{m}": circle_polygon(m) for m in _CIRCLE_PARAMS}
    out["triangle"] = polygon_from_vertices([(-1, -1), (2, -1), (-1, 2)])
    out["square"] = square()
    out["hexagon"] = hexagon()
    out["house"] = house_pentagon()
    out["ninegon"] = ninegon()
    out["g2"] = g2_polytope()
    out["d12"] = d12_polytope()
    return out
