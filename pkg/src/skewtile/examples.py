"""Worked triples used as golden data and CLI demos."""

from __future__ import annotations

from .quiver import Arrow, Quiver, RelationSet, SkewGentleTriple


def odd_cycle_triple() -> SkewGentleTriple:
    """3-cycle 1 -> 2 -> 3 -> 1 with all compositions zero, vertex 1 special."""
    q = Quiver(("1", "2", "3"), (Arrow("alpha", "1", "2"), Arrow("gamma", "2", "3"),
                                 Arrow("beta", "3", "1")))
    r = RelationSet.make([("beta", "gamma"), ("gamma", "alpha"), ("alpha", "beta")])
    return SkewGentleTriple(q, frozenset({"1"}), r)


def even_cycle_triple() -> SkewGentleTriple:
    """4-cycle 1 -> 2 -> 3 -> 4 -> 1 with all compositions zero, vertex 1 special."""
    q = Quiver(("1", "2", "3", "4"), (Arrow("a1", "1", "2"), Arrow("a2", "2", "3"),
                                      Arrow("a3", "3", "4"), Arrow("a4", "4", "1")))
    r = RelationSet.make([("a2", "a1"), ("a3", "a2"), ("a4", "a3"), ("a1", "a4")])
    return SkewGentleTriple(q, frozenset({"1"}), r)


def linear_triple(n: int = 3, relations: int = 1) -> SkewGentleTriple:
    """Linear A_n quiver 1 -> 2 -> ... -> n with the first ``relations`` compositions zero."""
    verts = tuple(str(i) for i in range(1, n + 1))
    arrows = tuple(Arrow(f"x{i}", str(i), str(i + 1)) for i in range(1, n))
    rel = [(f"x{i + 1}", f"x{i}") for i in range(1, min(relations, n - 2) + 1)]
    return SkewGentleTriple(Quiver(verts, arrows), frozenset(), RelationSet.make(rel))


TRIPLES = {
    "odd": odd_cycle_triple,
    "even": even_cycle_triple,
    "linear": linear_triple,
}


# ---------------------------------------------------------------- tilings

from .tiling import Tile, Tiling, arc_edge as _a, segment_edge as _s  # noqa: E402


def odd_cycle_tiling() -> Tiling:
    """Disc with four marked points and one puncture; its algebra is the odd-cycle triple."""
    return Tiling((
        Tile("tri", "V", (_a("1", 0), _a("3", 0), _a("2", 0)), ("b", "b", "q")),
        Tile("mono", "VI", (_a("1", 1),), ("b",), puncture="P"),
        Tile("X", "III", (_a("2", 1), _s("q", "r"), _s("r", "b")), ("b", "q", "r")),
        Tile("Y", "III", (_a("3", 1), _s("b", "s"), _s("s", "q")), ("q", "b", "s")),
    ), "odd")


def even_cycle_tiling() -> Tiling:
    """Disc with six marked points, one puncture, and a central square."""
    return Tiling((
        Tile("sq", "V", (_a("1", 0), _a("4", 0), _a("3", 0), _a("2", 0)), ("b", "b", "q", "r")),
        Tile("mono", "VI", (_a("1", 1),), ("b",), puncture="P"),
        Tile("X4", "III", (_a("4", 1), _s("b", "s1"), _s("s1", "q")), ("q", "b", "s1")),
        Tile("X3", "III", (_a("3", 1), _s("q", "s2"), _s("s2", "r")), ("r", "q", "s2")),
        Tile("X2", "III", (_a("2", 1), _s("r", "s3"), _s("s3", "b")), ("b", "r", "s3")),
    ), "even")


def two_puncture_tiling() -> Tiling:
    """Disc with two marked points and two punctures, each in its own monogon."""
    return Tiling((
        Tile("tri", "V", (_a("lP", 0), _a("x", 0), _a("lQ", 0)), ("b", "b", "b")),
        Tile("monoP", "VI", (_a("lP", 1),), ("b",), puncture="P"),
        Tile("monoQ", "VI", (_a("lQ", 1),), ("b",), puncture="Q"),
        Tile("X", "III", (_a("x", 1), _s("b", "c"), _s("c", "b")), ("b", "b", "c")),
    ), "two")


def pendant_tiling() -> Tiling:
    """Punctured disc: a triangle with one boundary segment next to a monogon."""
    return Tiling((
        Tile("T", "IV", (_a("l", 0), _a("x", 0), _s("c", "b")), ("b", "b", "c")),
        Tile("mono", "VI", (_a("l", 1),), ("b",), puncture="P"),
        Tile("X", "III", (_a("x", 1), _s("b", "d"), _s("d", "c")), ("c", "b", "d")),
    ), "pendant")


def annulus_tiling() -> Tiling:
    """Punctured annulus: a digon around the inner boundary, a monogon, and an outer triangle."""
    return Tiling((
        Tile("D", "II", (_a("l", 0), _a("y", 0)), ("b", "b"), hole="h"),
        Tile("mono", "VI", (_a("l", 1),), ("b",), puncture="P"),
        Tile("X", "III", (_a("y", 1), _s("b", "c"), _s("c", "b")), ("b", "b", "c")),
    ), "annulus")


def hexagon_tiling() -> Tiling:
    """Disc with six marked points; the diagonals 13, 35, 51 bound a central triangle."""
    return Tiling((
        Tile("A", "III", (_a("d13", 1), _s("1", "2"), _s("2", "3")), ("3", "1", "2")),
        Tile("B", "III", (_a("d35", 1), _s("3", "4"), _s("4", "5")), ("5", "3", "4")),
        Tile("C", "III", (_a("d51", 1), _s("5", "6"), _s("6", "1")), ("1", "5", "6")),
        Tile("O", "V", (_a("d13", 0), _a("d35", 0), _a("d51", 0)), ("1", "3", "5")),
    ), "hexagon")


def square_tiling() -> Tiling:
    """Disc with four marked points and a single diagonal."""
    return Tiling((
        Tile("A", "III", (_a("d", 0), _s("3", "4"), _s("4", "1")), ("1", "3", "4")),
        Tile("B", "III", (_a("d", 1), _s("1", "2"), _s("2", "3")), ("3", "1", "2")),
    ), "square")


def pentagon_tiling() -> Tiling:
    """Disc with five marked points triangulated by two diagonals from point 1."""
    return Tiling((
        Tile("A", "III", (_a("d13", 1), _s("1", "2"), _s("2", "3")), ("3", "1", "2")),
        Tile("B", "IV", (_a("d13", 0), _s("3", "4"), _a("d14", 1)), ("1", "3", "4")),
        Tile("C", "III", (_a("d14", 0), _s("4", "5"), _s("5", "1")), ("1", "4", "5")),
    ), "pentagon")


def octagon_tiling() -> Tiling:
    """Disc with eight marked points and a central square; the algebra is a 4-cycle with rad^2 = 0."""
    return Tiling((
        Tile("O", "V", (_a("d13", 0), _a("d35", 0), _a("d57", 0), _a("d71", 0)), ("1", "3", "5", "7")),
        Tile("A", "III", (_a("d13", 1), _s("1", "2"), _s("2", "3")), ("3", "1", "2")),
        Tile("B", "III", (_a("d35", 1), _s("3", "4"), _s("4", "5")), ("5", "3", "4")),
        Tile("C", "III", (_a("d57", 1), _s("5", "6"), _s("6", "7")), ("7", "5", "6")),
        Tile("D", "III", (_a("d71", 1), _s("7", "8"), _s("8", "1")), ("1", "7", "8")),
    ), "octagon")


def gentle_annulus_tiling() -> Tiling:
    """Annulus without punctures: a type-I monogon around the hole inside a triangle."""
    return Tiling((
        Tile("M", "I", (_a("l", 1),), ("b",), hole="h"),
        Tile("T", "IV", (_a("l", 0), _a("x", 0), _s("c", "b")), ("b", "b", "c")),
        Tile("X", "III", (_a("x", 1), _s("b", "d"), _s("d", "c")), ("c", "b", "d")),
    ), "gentle-annulus")


TILINGS = {
    "odd": odd_cycle_tiling,
    "even": even_cycle_tiling,
    "two": two_puncture_tiling,
    "pendant": pendant_tiling,
    "annulus": annulus_tiling,
    "hexagon": hexagon_tiling,
    "square": square_tiling,
    "pentagon": pentagon_tiling,
    "octagon": octagon_tiling,
    "gentle-annulus": gentle_annulus_tiling,
}
