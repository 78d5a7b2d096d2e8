"""Generators for the graph and matrix families the test suites exercise."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .errors import FamilyParameterError
from .graphs import BinaryMatrix, Graph, _bit, is_isomorphic


def complete(n: int) -> Graph:
    if n < 1:
        raise FamilyParameterError("complete graph needs n >= 1")
    return Graph.from_edges(n, itertools.combinations(range(1, n + 1), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyParameterError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def wheel(n: int) -> Graph:
    """Cycle on nodes 1..n-1 plus the hub node n adjacent to all of them."""
    if n < 4:
        raise FamilyParameterError("wheel needs n >= 4")
    rim = [(i, i + 1) for i in range(1, n - 1)] + [(1, n - 1)]
    return Graph.from_edges(n, rim + [(i, n) for i in range(1, n)])


def _circular_distance(i: int, j: int, n: int) -> int:
    d = abs(i - j)
    return min(d, n - d)


def web(n: int, k: int) -> Graph:
    """Nodes 1..n arranged in a circle; ij is an edge iff circular distance <= k."""
    if n < 2 or k < 1:
        raise FamilyParameterError("web needs n >= 2 and k >= 1")
    return Graph.from_edges(
        n,
        (
            (i, j)
            for i, j in itertools.combinations(range(1, n + 1), 2)
            if _circular_distance(i, j, n) <= k
        ),
    )


def antiweb(n: int, k: int) -> Graph:
    from .graphs import complement

    return complement(web(n, k))


def three_sun() -> Graph:
    """Inner triangle {1,2,3}; outer nodes 4,5,6 each adjacent to one inner pair."""
    return Graph.from_edges(
        6, [(1, 2), (2, 3), (1, 3), (1, 4), (2, 4), (2, 5), (3, 5), (1, 6), (3, 6)]
    )


_PYRAMID_EDGES = ((4, 5), (4, 6), (5, 6))


def pyramid(j: int) -> Graph:
    """Sun with j extra edges among the outer nodes, added in fixed lex order.

    Any placement of j outer edges gives the same graph up to isomorphism;
    the fixed order keeps fixtures deterministic.
    """
    if j not in (1, 2, 3):
        raise FamilyParameterError("pyramid index must be 1, 2 or 3")
    base = three_sun()
    return Graph.from_edges(6, list(base.edges()) + list(_PYRAMID_EDGES[:j]))


def circulant_matrix(n: int, k: int) -> BinaryMatrix:
    """n x n matrix whose row i marks the k cyclically following columns i+1..i+k."""
    if not 1 <= k <= n - 1:
        raise FamilyParameterError("circulant matrix needs 1 <= k <= n-1")
    masks = []
    for i in range(1, n + 1):
        m = 0
        for t in range(1, k + 1):
            col = (i + t - 1) % n + 1
            m |= _bit(col)
        masks.append(m)
    return BinaryMatrix(n, n, tuple(masks))


def clique_cycle_family(k: int) -> Graph:
    """Cycle-like graph on 4k+2 nodes: the even nodes form a clique and each odd
    node is adjacent exactly to its two circular neighbours (node 1 to 2 and 4k+2).
    """
    if k < 1:
        raise FamilyParameterError("clique cycle family needs k >= 1")
    n = 4 * k + 2
    evens = range(2, n + 1, 2)
    edges = list(itertools.combinations(evens, 2))
    for odd in range(1, n + 1, 2):
        before = n if odd == 1 else odd - 1
        edges.append(tuple(sorted((odd, before))))
        edges.append((odd, odd + 1))
    return Graph.from_edges(n, sorted(set(edges)))


# ---------------------------------------------------------------------------
# connected graph census


def _invariant_key(g: Graph):
    degs = [row.bit_count() for row in g.adj]
    profiles = sorted(
        (degs[v - 1], tuple(sorted(degs[u - 1] for u in g.neighbours(v))))
        for v in g.nodes()
    )
    triangles = sum(
        1
        for a, b, c in itertools.combinations(g.nodes(), 3)
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
    )
    return (g.n, g.edge_count(), tuple(sorted(degs)), tuple(profiles), triangles)


@functools.lru_cache(maxsize=None)
def _census(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    # every connected graph arises from a connected graph on n-1 nodes by
    # attaching node n to a nonempty neighbour set
    buckets: dict[tuple, list[Graph]] = {}
    out: list[Graph] = []
    for base in _census(n - 1):
        base_edges = list(base.edges())
        for r in range(1, n):
            for subset in itertools.combinations(range(1, n), r):
                g = Graph.from_edges(n, base_edges + [(v, n) for v in subset])
                key = _invariant_key(g)
                bucket = buckets.setdefault(key, [])
                if any(is_isomorphic(g, h) for h in bucket):
                    continue
                bucket.append(g)
                out.append(g)
    return tuple(out)


def enumerate_connected_graphs(n: int):
    """One representative per isomorphism class of connected graphs on n nodes."""
    if not 1 <= n <= 8:
        raise FamilyParameterError("census supports 1 <= n <= 8")
    yield from _census(n)


# ---------------------------------------------------------------------------
# registry used by the command line front end


@dataclass(frozen=True)
class FamilySpec:
    """A named family member: which generator and which integer parameters."""

    family: str
    parameters: tuple[int, ...]

    def build(self):
        entry = FAMILIES.get(self.family)
        if entry is None:
            raise FamilyParameterError(f"unknown family {self.family!r}")
        builder, arity, _ = entry
        if len(self.parameters) != arity:
            raise FamilyParameterError(
                f"family {self.family!r} takes {arity} parameter(s), "
                f"got {len(self.parameters)}"
            )
        return builder(*self.parameters)


# name -> (builder, parameter count, result kind)
FAMILIES = {
    "complete": (complete, 1, "graph"),
    "cycle": (cycle, 1, "graph"),
    "wheel": (wheel, 1, "graph"),
    "web": (web, 2, "graph"),
    "antiweb": (antiweb, 2, "graph"),
    "three_sun": (three_sun, 0, "graph"),
    "pyramid": (pyramid, 1, "graph"),
    "clique_cycle": (clique_cycle_family, 1, "graph"),
    "circulant": (circulant_matrix, 2, "matrix"),
}
