"""Core graph and 0/1-matrix types plus the combinatorial primitives built on them.

Graphs are simple and undirected with nodes labelled 1..n.  Adjacency is kept
as one bitmask per node (bit j-1 set iff node j is a neighbour), which keeps
subset tests, neighbourhood sums and clique expansion cheap at the sizes this
library targets (a few dozen nodes).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ParseError


def _bit(v: int) -> int:
    return 1 << (v - 1)


def _bits(mask: int):
    """Yield the 1-based labels of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def _mask_of(labels) -> int:
    m = 0
    for v in labels:
        m |= _bit(v)
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on nodes 1..n with bitmask adjacency rows."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one node")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj, start=1):
            if row & ~full:
                raise ValueError(f"adjacency row {v} references labels above n")
            if row & _bit(v):
                raise ValueError(f"self-loop on node {v}")
        for v in range(1, self.n + 1):
            for u in _bits(self.adj[v - 1]):
                if not self.adj[u - 1] & _bit(v):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) out of range 1..{n}")
            if u == v:
                raise ValueError(f"self-loop on node {u}")
            adj[u - 1] |= _bit(v)
            adj[v - 1] |= _bit(u)
        return cls(n, tuple(adj))

    def nodes(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        return self.adj[v - 1].bit_count()

    def neighbours(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v - 1]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u - 1] & _bit(v))

    def closed_mask(self, v: int) -> int:
        return self.adj[v - 1] | _bit(v)

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for u in self.nodes():
            for v in _bits(self.adj[u - 1]):
                if v > u:
                    out.append((u, v))
        return tuple(out)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.adj))


@dataclass(frozen=True)
class BinaryMatrix:
    """Immutable 0/1 matrix; each row is stored as a column bitmask."""

    rows: int
    cols: int
    row_masks: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix needs at least one row and one column")
        if len(self.row_masks) != self.rows:
            raise ValueError("row mask count does not match rows")
        full = (1 << self.cols) - 1
        for i, m in enumerate(self.row_masks, start=1):
            if m & ~full:
                raise ValueError(f"row {i} references columns above {self.cols}")

    @classmethod
    def from_rows(cls, entries) -> "BinaryMatrix":
        entries = [list(r) for r in entries]
        if not entries:
            raise ValueError("matrix needs at least one row")
        cols = len(entries[0])
        masks = []
        for r in entries:
            if len(r) != cols:
                raise ValueError("ragged rows")
            m = 0
            for j, x in enumerate(r, start=1):
                if x not in (0, 1):
                    raise ValueError("entries must be 0 or 1")
                if x:
                    m |= _bit(j)
            masks.append(m)
        return cls(len(entries), cols, tuple(masks))

    def entry(self, i: int, j: int) -> int:
        return (self.row_masks[i - 1] >> (j - 1)) & 1

    def row_support(self, i: int) -> tuple[int, ...]:
        return tuple(_bits(self.row_masks[i - 1]))

    def column_mask(self, j: int) -> int:
        """Bitmask over row indices having a 1 in column j."""
        m = 0
        for i, row in enumerate(self.row_masks, start=1):
            if row & _bit(j):
                m |= _bit(i)
        return m

    def has_zero_column(self) -> bool:
        seen = 0
        for row in self.row_masks:
            seen |= row
        return seen != (1 << self.cols) - 1

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        return all(
            self.entry(i, j) == self.entry(j, i)
            for i in range(1, self.rows + 1)
            for j in range(i + 1, self.cols + 1)
        )

    def to_lists(self) -> list[list[int]]:
        return [
            [(m >> (j - 1)) & 1 for j in range(1, self.cols + 1)]
            for m in self.row_masks
        ]

    def same_rows_up_to_permutation(self, other: "BinaryMatrix") -> bool:
        """Equality of the two matrices as multisets of rows."""
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and sorted(self.row_masks) == sorted(other.row_masks)
        )


# ---------------------------------------------------------------------------
# basic operations


def closed_neighbourhood_matrix(g: Graph) -> BinaryMatrix:
    """Square 0/1 matrix with unit diagonal; row v is the incidence vector of N[v]."""
    return BinaryMatrix(g.n, g.n, tuple(g.closed_mask(v) for v in g.nodes()))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full & ~row & ~_bit(v)) for v, row in enumerate(g.adj, 1)))


def induced_subgraph(g: Graph, nodes) -> Graph:
    """Subgraph induced by ``nodes``, relabelled 1..|nodes| in sorted label order."""
    sel = sorted(set(nodes))
    if not sel:
        raise ValueError("node subset must be nonempty")
    if sel[0] < 1 or sel[-1] > g.n:
        raise ValueError(f"node subset out of range 1..{g.n}")
    pos = {v: i + 1 for i, v in enumerate(sel)}
    adj = [0] * len(sel)
    for v in sel:
        for u in _bits(g.adj[v - 1]):
            if u in pos:
                adj[pos[v] - 1] |= _bit(pos[u])
    return Graph(len(sel), tuple(adj))


def relabel(g: Graph, mapping) -> Graph:
    """Apply a bijection old-label -> new-label given as a dict or sequence."""
    if not isinstance(mapping, dict):
        mapping = {i + 1: w for i, w in enumerate(mapping)}
    if sorted(mapping) != list(g.nodes()) or sorted(mapping.values()) != list(g.nodes()):
        raise ValueError("mapping must be a bijection on 1..n")
    return Graph.from_edges(g.n, [(mapping[u], mapping[v]) for u, v in g.edges()])


def universal_nodes(g: Graph) -> tuple[int, ...]:
    """Nodes adjacent to every other node, ascending."""
    full = (1 << g.n) - 1
    return tuple(v for v in g.nodes() if g.adj[v - 1] == full & ~_bit(v))


def is_connected(g: Graph) -> bool:
    seen = _bit(1)
    frontier = _bit(1)
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v - 1]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def _connected_within(g: Graph, mask: int) -> bool:
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v - 1] & mask
        frontier = nxt & ~seen
        seen |= frontier
    return seen == mask


def maximal_cliques(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All maximal cliques, sorted lexicographically by member tuple.

    Pivoting branch and bound over candidate/excluded bitmask sets.
    """
    adj = g.adj
    out: list[int] = []

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pivot = max(_bits(p | x), key=lambda v: (adj[v - 1] & p).bit_count())
        for v in _bits(p & ~adj[pivot - 1]):
            bv = _bit(v)
            expand(r | bv, p & adj[v - 1], x & adj[v - 1])
            p &= ~bv
            x |= bv

    expand(0, (1 << g.n) - 1, 0)
    return tuple(sorted(tuple(_bits(m)) for m in out))


def maximal_cliques_bruteforce(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Reference oracle: scan all 2^n subsets.  Intended for n <= 7."""
    cliques = []
    for mask in range(1, 1 << g.n):
        members = list(_bits(mask))
        if not all(g.has_edge(u, v) for u, v in itertools.combinations(members, 2)):
            continue
        # maximal iff no outside node is adjacent to every member
        if any(
            g.adj[w - 1] & mask == mask
            for w in g.nodes()
            if not mask & _bit(w)
        ):
            continue
        cliques.append(tuple(members))
    return tuple(sorted(cliques))


def _profiles(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
    degs = [row.bit_count() for row in g.adj]
    return [
        (degs[v - 1], tuple(sorted(degs[u - 1] for u in _bits(g.adj[v - 1]))))
        for v in g.nodes()
    ]


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test with degree-profile pruning."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    gp, hp = _profiles(g), _profiles(h)
    if sorted(gp) != sorted(hp):
        return False
    n = g.n

    # order g's nodes so each one touches as many already-placed nodes as possible
    order: list[int] = []
    placed = 0
    rest = set(g.nodes())
    while rest:
        v = max(
            rest,
            key=lambda u: ((g.adj[u - 1] & placed).bit_count(), gp[u - 1], -u),
        )
        order.append(v)
        placed |= _bit(v)
        rest.remove(v)

    cands = {v: [w for w in h.nodes() if hp[w - 1] == gp[v - 1]] for v in order}
    image = {}
    used = 0

    def assign(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        u = order[i]
        req = 0
        for j in range(i):
            if g.has_edge(u, order[j]):
                req |= _bit(image[order[j]])
        for w in cands[u]:
            bw = _bit(w)
            if used & bw or (h.adj[w - 1] & used) != req:
                continue
            image[u] = w
            used |= bw
            if assign(i + 1):
                return True
            used &= ~bw
        return False

    return assign(0)


def is_chordal(g: Graph) -> bool:
    """True iff the graph admits a perfect elimination ordering.

    Greedy simplicial-node removal; correct because chordal graphs always
    contain a simplicial node and stay chordal under node deletion.
    """
    active = (1 << g.n) - 1
    remaining = g.n
    while remaining:
        for v in _bits(active):
            nb = g.adj[v - 1] & active
            if all(nb & ~_bit(u) & ~g.adj[u - 1] == 0 for u in _bits(nb)):
                active &= ~_bit(v)
                remaining -= 1
                break
        else:
            return False
    return True


def induced_cycles(g: Graph, min_length: int = 4, odd_only: bool = False):
    """Yield chordless induced cycles of length >= min_length, one tuple each.

    Each cycle appears exactly once: rotation is fixed by starting at its
    smallest node, reflection by requiring the second node to be smaller than
    the closing node.  The search order (smallest start node first, then
    depth-first over ascending labels) is deterministic.
    """
    n, adj = g.n, g.adj
    full = (1 << n) - 1
    for s in range(1, n + 1):
        sadj = adj[s - 1]
        gt = full & ~((1 << s) - 1)

        def walk(path: list[int], used: int, blocked: int):
            last = path[-1]
            cand = adj[last - 1] & gt & ~used & ~blocked
            length = len(path) + 1
            if length >= min_length and (not odd_only or length % 2 == 1):
                for u in _bits(cand & sadj):
                    if u > path[1]:
                        yield tuple(path) + (u,)
            if len(path) < n - 1:
                nxt_blocked = blocked | adj[last - 1]
                for u in _bits(cand & ~sadj):
                    yield from walk(path + [u], used | _bit(u), nxt_blocked)

        for v1 in _bits(sadj & gt):
            yield from walk([s, v1], _bit(s) | _bit(v1), 0)


def find_induced_cycle(g: Graph, min_length: int = 4, odd_only: bool = False):
    """First induced cycle in the deterministic search order, or None."""
    return next(induced_cycles(g, min_length, odd_only), None)


# ---------------------------------------------------------------------------
# text formats
#
# Graph files: first data line "n m", then m lines "u v" with 1 <= u < v <= n.
# Matrix files: first data line "r c", then r lines of c characters, each 0/1.
# Lines starting with '#' and blank lines are ignored in both formats.


def _data_lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield no, line


def parse_graph(text: str) -> Graph:
    lines = list(_data_lines(text))
    if not lines:
        raise ParseError("empty graph file")
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 2:
        raise ParseError(f"line {no}: expected 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"line {no}: expected 'n m'") from None
    if n < 1 or m < 0:
        raise ParseError(f"line {no}: need n >= 1 and m >= 0")
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    seen = set()
    for no, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {no}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {no}: expected 'u v'") from None
        if not (1 <= u < v <= n):
            raise ParseError(f"line {no}: edge ({u},{v}) violates 1 <= u < v <= {n}")
        if (u, v) in seen:
            raise ParseError(f"line {no}: duplicate edge ({u},{v})")
        seen.add((u, v))
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> BinaryMatrix:
    lines = list(_data_lines(text))
    if not lines:
        raise ParseError("empty matrix file")
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 2:
        raise ParseError(f"line {no}: expected 'r c'")
    try:
        r, c = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"line {no}: expected 'r c'") from None
    if r < 1 or c < 1:
        raise ParseError(f"line {no}: need r >= 1 and c >= 1")
    if len(lines) - 1 != r:
        raise ParseError(f"expected {r} matrix rows, found {len(lines) - 1}")
    masks = []
    for no, line in lines[1:]:
        if len(line) != c or any(ch not in "01" for ch in line):
            raise ParseError(f"line {no}: expected {c} characters of 0/1")
        masks.append(_mask_of(j for j, ch in enumerate(line, start=1) if ch == "1"))
    return BinaryMatrix(r, c, tuple(masks))


def format_matrix(m: BinaryMatrix) -> str:
    lines = [f"{m.rows} {m.cols}"]
    for i in range(1, m.rows + 1):
        lines.append("".join(str(m.entry(i, j)) for j in range(1, m.cols + 1)))
    return "\n".join(lines) + "\n"
