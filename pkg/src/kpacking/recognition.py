"""Recognizers deciding whether a 0/1 matrix is an extended clique-node matrix.

Three verdict paths are provided:

* ``cliques``   : compare the maximal cliques of the column intersection graph
                  against the row supports (the defining property).
* ``pattern``   : search for a forbidden 3-row pattern: three columns carrying
                  pairwise-complementary zeros, extended by every column where
                  all three rows agree on 1, with no row covering the extension.
* ``structural``: a graph-side screen that looks for small undominated induced
                  subgraphs (4/5/6-cycles and the 3-sun).  It only applies to
                  closed neighbourhood matrices.  The first two paths are exact
                  and provably equivalent; the structural screen is reported
                  separately because it can disagree (see README).

Each path returns a :class:`RecognitionCertificate` whose witness can be
re-checked independently via :func:`recheck_certificate`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapExceededError, ConsistencyError, ZeroColumnError
from .graphs import (
    BinaryMatrix,
    Graph,
    _bit,
    _bits,
    _mask_of,
    closed_neighbourhood_matrix,
    find_induced_cycle,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    maximal_cliques,
)

TOTALLY_BALANCED_COLUMN_CAP = 16


@dataclass(frozen=True)
class RecognitionCertificate:
    """Outcome of one recognizer run, with a re-checkable witness.

    Exactly one witness group is populated, depending on method and verdict:
    cover / uncovered_clique for ``cliques``, pattern_* for ``pattern``,
    obstruction_* / dominated for ``structural``.
    """

    method: str
    verdict: bool
    cover: tuple[tuple[tuple[int, ...], int], ...] | None = None
    uncovered_clique: tuple[int, ...] | None = None
    pattern_columns: tuple[int, ...] | None = None
    pattern_rows: tuple[int, int, int] | None = None
    pattern_zeros: tuple[int, int, int] | None = None
    obstruction_kind: str | None = None
    obstruction_nodes: tuple[int, ...] | None = None
    dominated: tuple[tuple[str, tuple[int, ...], int], ...] | None = None

    def to_payload(self) -> dict:
        out = {"method": self.method, "verdict": self.verdict}
        if self.cover is not None:
            out["cover"] = [
                {"clique": list(cl), "row": row} for cl, row in self.cover
            ]
        if self.uncovered_clique is not None:
            out["uncovered_clique"] = list(self.uncovered_clique)
        if self.pattern_columns is not None:
            out["pattern_columns"] = list(self.pattern_columns)
            out["pattern_rows"] = list(self.pattern_rows)
            out["pattern_zeros"] = list(self.pattern_zeros)
        if self.obstruction_nodes is not None:
            out["obstruction_kind"] = self.obstruction_kind
            out["obstruction_nodes"] = list(self.obstruction_nodes)
        if self.dominated is not None:
            out["dominated"] = [
                {"kind": kind, "nodes": list(nodes), "dominator": dom}
                for kind, nodes, dom in self.dominated
            ]
        return out


def clique_graph(m: BinaryMatrix) -> Graph:
    """Graph on the columns of ``m``; two columns are adjacent iff some row has
    a 1 in both positions.  Undefined when a column is all zeros.
    """
    if m.has_zero_column():
        raise ZeroColumnError("column intersection graph undefined: zero column")
    adj = [0] * m.cols
    for row in m.row_masks:
        for j in _bits(row):
            adj[j - 1] |= row & ~_bit(j)
    return Graph(m.cols, tuple(adj))


def _check_recognizer_input(m: BinaryMatrix) -> None:
    if not m.is_square():
        raise ValueError("recognizers expect a square matrix")
    if m.has_zero_column():
        raise ZeroColumnError("recognizers expect no zero columns")
    if any(mask == 0 for mask in m.row_masks):
        raise ValueError("recognizers expect no zero rows")


def is_extended_clique_node_by_cliques(m: BinaryMatrix) -> RecognitionCertificate:
    """Accept iff every maximal clique of the column intersection graph occurs
    as the support of some row.  Negative witness: the first uncovered maximal
    clique in lexicographic order.
    """
    _check_recognizer_input(m)
    gq = clique_graph(m)
    for i, mask in enumerate(m.row_masks, start=1):
        # holds by construction of gq; a failure would mean a bug here
        for u, v in itertools.combinations(_bits(mask), 2):
            if not gq.has_edge(u, v):
                raise ConsistencyError(f"row {i} support is not a clique")
    support_row = {}
    for i, mask in enumerate(m.row_masks, start=1):
        support_row.setdefault(mask, i)
    cover = []
    for cl in maximal_cliques(gq):
        row = support_row.get(_mask_of(cl))
        if row is None:
            return RecognitionCertificate("cliques", False, uncovered_clique=cl)
        cover.append((cl, row))
    return RecognitionCertificate("cliques", True, cover=tuple(cover))


def is_extended_clique_node_by_pattern(m: BinaryMatrix) -> RecognitionCertificate:
    """Accept iff no 3-row forbidden pattern exists.

    For each row triple (a,b,c) and columns ca, cb, cc where exactly the rows
    b,c / a,c / a,b carry 1s, the maximally extended column set is the triple
    plus every column where all three rows are 1.  A matrix passing this test
    passes it for every sub-extension too, so checking maximal extensions only
    is exhaustive; a missing covering row is itself the violation witness.
    Negative witness: minimal (column set, row triple) in lexicographic order.
    """
    _check_recognizer_input(m)
    rows = m.row_masks
    best = None
    for a, b, c in itertools.combinations(range(m.rows), 3):
        ra, rb, rc = rows[a], rows[b], rows[c]
        za = ~ra & rb & rc
        zb = ra & ~rb & rc
        zc = ra & rb & ~rc
        if not (za and zb and zc):
            continue
        common = ra & rb & rc
        carriers = [r for r in rows if r & common == common]
        for ca in _bits(za):
            for cb in _bits(zb):
                pair = _bit(ca) | _bit(cb)
                carriers2 = [r for r in carriers if r & pair == pair]
                for cc in _bits(zc):
                    ext = common | pair | _bit(cc)
                    if any(r & ext == ext for r in carriers2):
                        continue
                    cols = tuple(_bits(ext))
                    key = (cols, (a + 1, b + 1, c + 1))
                    if best is None or key < best[0]:
                        best = (key, (ca, cb, cc))
    if best is None:
        return RecognitionCertificate("pattern", True)
    (cols, row_triple), zeros = best
    return RecognitionCertificate(
        "pattern",
        False,
        pattern_columns=cols,
        pattern_rows=row_triple,
        pattern_zeros=zeros,
    )


_OBSTRUCTION_SIZES = (4, 5, 6)


def _classify_obstruction(sub: Graph) -> str | None:
    degs = sub.degree_sequence()
    if all(d == 2 for d in degs):
        return f"cycle{sub.n}" if is_connected(sub) else None
    if sub.n == 6 and degs == (2, 2, 2, 4, 4, 4) and is_isomorphic(sub, _sun()):
        return "sun"
    return None


_SUN_CACHE = None


def _sun() -> Graph:
    global _SUN_CACHE
    if _SUN_CACHE is None:
        from .families import three_sun

        _SUN_CACHE = three_sun()
    return _SUN_CACHE


def find_undominated_obstruction(g: Graph) -> RecognitionCertificate:
    """Graph-side screen: scan induced 4/5/6-cycles and 3-suns; accept iff each
    one has an outside node adjacent to all of its nodes (containment may be
    exact).  Negative witness: the first undominated subgraph, scanning sizes
    ascending and node subsets in lexicographic order.
    """
    dominated = []
    for size in _OBSTRUCTION_SIZES:
        if size > g.n:
            break
        for subset in itertools.combinations(g.nodes(), size):
            kind = _classify_obstruction(induced_subgraph(g, subset))
            if kind is None:
                continue
            mask = _mask_of(subset)
            dom = next(
                (
                    v
                    for v in g.nodes()
                    if not mask & _bit(v) and g.adj[v - 1] & mask == mask
                ),
                None,
            )
            if dom is None:
                return RecognitionCertificate(
                    "structural",
                    False,
                    obstruction_kind=kind,
                    obstruction_nodes=subset,
                )
            dominated.append((kind, subset, dom))
    return RecognitionCertificate("structural", True, dominated=tuple(dominated))


def is_totally_balanced(m: BinaryMatrix) -> bool:
    """True iff no row/column submatrix is the node-edge incidence matrix of a
    cycle of length >= 3; equivalently the bipartite row/column incidence graph
    has no induced cycle of length >= 6.
    """
    if m.cols > TOTALLY_BALANCED_COLUMN_CAP:
        raise CapExceededError(
            f"total balancedness capped at {TOTALLY_BALANCED_COLUMN_CAP} columns"
        )
    edges = [
        (i, m.rows + j)
        for i in range(1, m.rows + 1)
        for j in m.row_support(i)
    ]
    bip = Graph.from_edges(m.rows + m.cols, edges)
    return find_induced_cycle(bip, min_length=6) is None


# ---------------------------------------------------------------------------
# certificate re-verification


def recheck_certificate(
    payload: dict, *, graph: Graph | None = None, matrix: BinaryMatrix | None = None
) -> bool:
    """Independently validate an emitted certificate against its instance.

    ``structural`` certificates need the graph; the other methods need the
    matrix (pass the closed neighbourhood matrix when the instance is a graph).
    Positive certificates are rechecked by rerunning the recognizer; negative
    ones by validating the stored witness directly.
    """
    method = payload.get("method")
    verdict = payload.get("verdict")
    if method in ("cliques", "pattern"):
        if matrix is None:
            if graph is None:
                raise ValueError("certificate recheck needs a matrix or graph")
            matrix = closed_neighbourhood_matrix(graph)
        if method == "cliques":
            return _recheck_cliques(payload, matrix, verdict)
        return _recheck_pattern(payload, matrix, verdict)
    if method == "structural":
        if graph is None:
            raise ValueError("structural certificates need the graph")
        return _recheck_structural(payload, graph, verdict)
    raise ValueError(f"unknown certificate method {method!r}")


def _recheck_cliques(payload: dict, m: BinaryMatrix, verdict: bool) -> bool:
    gq = clique_graph(m)
    cliques = set(maximal_cliques(gq))
    supports = {m.row_masks[i] for i in range(m.rows)}
    if verdict:
        cover = payload.get("cover", [])
        covered = set()
        for item in cover:
            cl = tuple(item["clique"])
            row = item["row"]
            if cl not in cliques:
                return False
            if not 1 <= row <= m.rows or m.row_masks[row - 1] != _mask_of(cl):
                return False
            covered.add(cl)
        return covered == cliques
    cl = tuple(payload.get("uncovered_clique", ()))
    return cl in cliques and _mask_of(cl) not in supports


def _recheck_pattern(payload: dict, m: BinaryMatrix, verdict: bool) -> bool:
    if verdict:
        return is_extended_clique_node_by_pattern(m).verdict
    try:
        a, b, c = payload["pattern_rows"]
        ca, cb, cc = payload["pattern_zeros"]
        cols = payload["pattern_columns"]
    except (KeyError, ValueError):
        return False
    idx = (a - 1, b - 1, c - 1)
    if not all(0 <= i < m.rows for i in idx):
        return False
    ra, rb, rc = (m.row_masks[i] for i in idx)
    # each zero column misses exactly its own row among the three
    for col, miss in ((ca, "a"), (cb, "b"), (cc, "c")):
        if not 1 <= col <= m.cols:
            return False
        bit = _bit(col)
        want = {
            "a": (0, bit, bit),
            "b": (bit, 0, bit),
            "c": (bit, bit, 0),
        }[miss]
        if (ra & bit, rb & bit, rc & bit) != want:
            return False
    ext = (ra & rb & rc) | _mask_of((ca, cb, cc))
    if tuple(_bits(ext)) != tuple(cols):
        return False
    return not any(r & ext == ext for r in m.row_masks)


def _recheck_structural(payload: dict, g: Graph, verdict: bool) -> bool:
    if verdict:
        return find_undominated_obstruction(g).verdict
    nodes = tuple(payload.get("obstruction_nodes", ()))
    if not nodes or any(not 1 <= v <= g.n for v in nodes):
        return False
    kind = _classify_obstruction(induced_subgraph(g, nodes))
    if kind is None or kind != payload.get("obstruction_kind"):
        return False
    mask = _mask_of(nodes)
    return not any(
        not mask & _bit(v) and g.adj[v - 1] & mask == mask for v in g.nodes()
    )
