"""A library of named graphs with frozen forest counts.

Every entry is rebuilt from its edge list and re-counted on first access;
a disagreement with the stored expectation raises CatalogMismatch instead
of letting a bad transcription leak into downstream checks.
"""

from dataclasses import dataclass

from .bounds import LESS, BoundExpr, compare, q_bound
from .counting import MemoCache, count_forests
from .errors import CatalogMismatch
from .multigraph import MultiGraph, degree_counts, from_edge_list


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    summary: str
    graph: MultiGraph
    forests: int
    degree_counts: tuple  # (number of degree-2, degree-3, degree-4 vertices)
    bound: BoundExpr
    holds: bool  # forests >= bound


def _clique(n, shift=0):
    return [(i + shift, j + shift) for i in range(n) for j in range(i + 1, n)]


def _prism():
    return [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3), (1, 4), (0, 5)]


def _octahedron():
    return [(u, v) for u, v in _clique(6) if (u, v) not in ((0, 1), (2, 3), (4, 5))]


# name, summary, vertex count, edges, forests, (n2, n3, n4), (a, c), holds
_RAW = [
    (
        "K3",
        "triangle",
        3,
        _clique(3),
        7,
        (3, 0, 0),
        (12, 2),
        True,
    ),
    (
        "K4",
        "complete graph on 4 vertices",
        4,
        _clique(4),
        38,
        (0, 4, 0),
        (6, 6),
        True,
    ),
    (
        "K4-e",
        "complete graph on 4 vertices with one edge removed",
        4,
        [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        24,
        (2, 2, 0),
        (14, 4),
        True,
    ),
    (
        "K5",
        "complete graph on 5 vertices",
        5,
        _clique(5),
        291,
        (0, 0, 5),
        (-8, 12),
        False,
    ),
    (
        "K5-e",
        "complete graph on 5 vertices with one edge removed",
        5,
        [(u, v) for u, v in _clique(5) if (u, v) != (0, 1)],
        198,
        (0, 2, 3),
        (0, 10),
        True,
    ),
    (
        "K6-",
        "complete graph on 6 vertices with a perfect matching removed",
        6,
        _octahedron(),
        1083,
        (0, 0, 6),
        (-6, 14),
        False,
    ),
    (
        "K33",
        "complete bipartite graph with parts of size 3",
        6,
        [(i, 3 + j) for i in range(3) for j in range(3)],
        328,
        (0, 6, 0),
        (18, 8),
        True,
    ),
    (
        "R1",
        "triangular prism: two triangles joined by a perfect matching",
        6,
        _prism(),
        314,
        (0, 6, 0),
        (18, 8),
        True,
    ),
    (
        "R2",
        "complete graph on 4 vertices with one edge subdivided",
        5,
        [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)],
        86,
        (1, 4, 0),
        (16, 6),
        True,
    ),
    (
        "X6",
        "complete graph on 5 vertices with one edge subdivided",
        6,
        [(u, v) for u, v in _clique(5) if (u, v) != (0, 1)] + [(0, 5), (1, 5)],
        687,
        (1, 0, 5),
        (2, 12),
        True,
    ),
    (
        "X7",
        "6-vertex 4-regular graph with one edge subdivided",
        7,
        [(u, v) for u, v in _octahedron() if (u, v) != (0, 2)] + [(0, 6), (2, 6)],
        2527,
        (1, 0, 6),
        (4, 14),
        True,
    ),
    (
        "Y5",
        "4-clique plus a new vertex joined to two of its corners",
        5,
        _clique(4) + [(4, 0), (4, 1)],
        128,
        (1, 2, 2),
        (8, 8),
        True,
    ),
    (
        "Y5p",
        "4-clique plus a new vertex joined to three of its corners",
        5,
        _clique(4) + [(4, 0), (4, 1), (4, 2)],
        198,
        (0, 2, 3),
        (0, 10),
        True,
    ),
    (
        "Y6",
        "4-clique plus two new vertices, each joined to a different pair",
        6,
        _clique(4) + [(4, 0), (4, 1), (5, 2), (5, 3)],
        431,
        (2, 0, 4),
        (10, 10),
        True,
    ),
    (
        "Y6p",
        "4-clique plus two adjacent new vertices on disjoint corner pairs",
        6,
        _clique(4) + [(4, 0), (4, 1), (5, 2), (5, 3), (4, 5)],
        722,
        (0, 2, 4),
        (2, 12),
        True,
    ),
    (
        "D4",
        "two triangles sharing an edge",
        4,
        [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        24,
        (2, 2, 0),
        (14, 4),
        True,
    ),
    (
        "D5",
        "two triangles sharing an edge, plus a vertex joined to that edge",
        5,
        [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 2), (4, 3)],
        81,
        (3, 0, 2),
        (16, 6),
        True,
    ),
    (
        "H1",
        "two 4-cliques joined by a perfect matching",
        8,
        _clique(4) + _clique(4, 4) + [(0, 4), (1, 5), (2, 6), (3, 7)],
        14381,
        (0, 0, 8),
        (-2, 18),
        True,
    ),
    (
        "H2",
        "4-clique matched onto the rim of a 4-spoke wheel",
        9,
        _clique(4, 4)
        + [(0, 1), (1, 2), (2, 3), (0, 3)]
        + [(8, 0), (8, 1), (8, 2), (8, 3)]
        + [(0, 4), (1, 5), (2, 6), (3, 7)],
        52485,
        (0, 0, 9),
        (0, 20),
        True,
    ),
    (
        "H3",
        "4-clique plus two adjacent 4-valent vertices sharing a 2-valent one",
        7,
        _clique(4)
        + [(4, 0), (4, 1), (5, 2), (5, 3), (4, 5), (4, 6), (5, 6)],
        2457,
        (1, 0, 6),
        (4, 14),
        True,
    ),
    (
        "H4",
        "complete bipartite 4-by-3 plus two edges pairing up the 4-side",
        7,
        [(i, 4 + j) for i in range(4) for j in range(3)] + [(0, 1), (2, 3)],
        4061,
        (0, 0, 7),
        (-4, 16),
        True,
    ),
    (
        "H5",
        "8-vertex 4-regular graph",
        8,
        [
            (0, 1),
            (0, 5),
            (0, 6),
            (0, 7),
            (1, 5),
            (1, 6),
            (1, 7),
            (2, 3),
            (2, 4),
            (2, 6),
            (2, 7),
            (3, 4),
            (3, 5),
            (3, 7),
            (4, 5),
            (4, 6),
        ],
        14763,
        (0, 0, 8),
        (-2, 18),
        True,
    ),
    (
        "H6",
        "7-vertex 4-regular graph",
        7,
        [
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (1, 5),
            (1, 6),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 6),
            (5, 6),
        ],
        4019,
        (0, 0, 7),
        (-4, 16),
        True,
    ),
    (
        "H7",
        "9-vertex 4-regular graph: triangle whose neighbourhood is a 3-by-3 biclique",
        9,
        [
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 7),
            (1, 4),
            (1, 6),
            (1, 8),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 6),
            (3, 8),
            (4, 5),
            (4, 8),
            (5, 6),
            (5, 7),
            (6, 7),
            (7, 8),
        ],
        57631,
        (0, 0, 9),
        (0, 20),
        True,
    ),
    (
        "H8",
        "twin of H7 with two biclique spokes rewired",
        9,
        [
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 7),
            (1, 4),
            (1, 6),
            (1, 8),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 6),
            (3, 8),
            (4, 5),
            (4, 7),
            (5, 6),
            (5, 8),
            (6, 7),
            (7, 8),
        ],
        58975,
        (0, 0, 9),
        (0, 20),
        True,
    ),
    (
        "Z1",
        "prism and triangle joined by aligned spokes",
        9,
        _prism() + [(6, 7), (7, 8), (6, 8)]
        + [(6, 0), (6, 3), (7, 1), (7, 4), (8, 2), (8, 5)],
        57631,
        (0, 0, 9),
        (0, 20),
        True,
    ),
    (
        "Z2",
        "prism and triangle joined by once-crossed spokes",
        9,
        _prism() + [(6, 7), (7, 8), (6, 8)]
        + [(6, 0), (6, 4), (7, 1), (7, 3), (8, 2), (8, 5)],
        58417,
        (0, 0, 9),
        (0, 20),
        True,
    ),
    (
        "Z3",
        "prism and triangle joined by twice-crossed spokes",
        9,
        _prism() + [(6, 7), (7, 8), (6, 8)]
        + [(6, 0), (6, 5), (7, 1), (7, 4), (8, 2), (8, 3)],
        56101,
        (0, 0, 9),
        (0, 20),
        True,
    ),
]

_ENTRIES = None


def _check(entry, cache):
    g = entry.graph
    actual = count_forests(g, cache)
    if actual != entry.forests:
        raise CatalogMismatch(
            "%s: counted %d forests, catalog says %d"
            % (entry.name, actual, entry.forests)
        )
    counts = degree_counts(g)
    seen = (counts.get(2, 0), counts.get(3, 0), counts.get(4, 0))
    if seen != entry.degree_counts or sum(seen) != g.n:
        raise CatalogMismatch(
            "%s: degree profile %r, catalog says %r"
            % (entry.name, seen, entry.degree_counts)
        )
    if q_bound(g) != entry.bound:
        raise CatalogMismatch(
            "%s: bound %s, catalog says %s" % (entry.name, q_bound(g), entry.bound)
        )
    if (compare(entry.forests, entry.bound) != LESS) != entry.holds:
        raise CatalogMismatch("%s: bound verdict flipped" % entry.name)


def catalog():
    """All named graphs, verified against their stored counts on first use."""
    global _ENTRIES
    if _ENTRIES is None:
        cache = MemoCache()
        entries = []
        for name, summary, n, edges, forests, degs, (a, c), holds in _RAW:
            entry = CatalogEntry(
                name,
                summary,
                from_edge_list(n, edges),
                forests,
                degs,
                BoundExpr(a, 0, c, 10),
                holds,
            )
            _check(entry, cache)
            entries.append(entry)
        _ENTRIES = tuple(entries)
    return list(_ENTRIES)


def catalog_entry(name):
    for entry in catalog():
        if entry.name == name:
            return entry
    raise KeyError("no catalog graph named %r" % name)
