"""Exact solvers for packing optimization over closed neighbourhoods.

Three variants of the same constraint system "sum over every closed
neighbourhood at most k":

* integer values in {0..k}  (the main invariant, solved by branch and bound)
* binary values             (the limited variant)
* rational values in [0,1]^n scaled by k  (the linear relaxation, solved by
  enumerating polytope vertices exactly)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceededError, ConsistencyError
from .graphs import Graph, _bits
from .perfection import RationalPoint, perfection_report, polytope_vertices
from .graphs import closed_neighbourhood_matrix

SOLVER_NODE_CAP = 24
BRUTEFORCE_STATE_CAP = 10**8


@dataclass(frozen=True)
class PackingFunction:
    """Node values (indexed by label order) together with the bound k."""

    values: tuple[int, ...]
    k: int

    def objective(self) -> int:
        return sum(self.values)

    def is_binary(self) -> bool:
        return all(v in (0, 1) for v in self.values)

    def is_feasible(self, g: Graph) -> bool:
        if len(self.values) != g.n:
            return False
        if any(not 0 <= v <= self.k for v in self.values):
            return False
        return all(
            sum(self.values[u - 1] for u in _bits(g.closed_mask(v))) <= self.k
            for v in g.nodes()
        )


@dataclass(frozen=True)
class SolveResult:
    optimum: int
    witness: PackingFunction
    node_order: tuple[int, ...]
    explored: int


def _branch_and_bound(g: Graph, k: int, unit_values: bool, max_nodes: int) -> SolveResult:
    if k < 1:
        raise ValueError("the packing bound k must be a positive integer")
    if g.n > max_nodes:
        raise CapExceededError(f"solver capped at {max_nodes} nodes")
    n = g.n
    order = sorted(g.nodes(), key=lambda v: (-g.degree(v), v))
    closed = [g.closed_mask(v) for v in g.nodes()]
    closed_sizes = [m.bit_count() for m in closed]
    # smallest closed neighbourhood among nodes still to assign, per depth
    min_suffix_size = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        s = closed_sizes[order[i] - 1]
        min_suffix_size[i] = s if i == n - 1 else min(s, min_suffix_size[i + 1])

    residual = [k] * (n + 1)  # 1-based
    assignment = [0] * n
    best_value = -1
    best: tuple[int, ...] | None = None
    explored = 0

    def value_cap(v: int) -> int:
        c = min(residual[u] for u in _bits(closed[v - 1]))
        return min(c, 1) if unit_values else c

    def dfs(i: int, total: int) -> None:
        nonlocal best_value, best, explored
        if i == n:
            if total > best_value:
                best_value = total
                best = tuple(assignment)
            return
        u = order[i]
        for t in range(value_cap(u), -1, -1):
            explored += 1
            assignment[i] = t
            for v in _bits(closed[u - 1]):
                residual[v] -= t
            remaining = order[i + 1 :]
            slack = sum(residual[v] for v in g.nodes())
            pooled = slack // min_suffix_size[i + 1] if remaining else 0
            capped = sum(value_cap(w) for w in remaining)
            if total + t + min(pooled, capped) > best_value:
                dfs(i + 1, total + t)
            for v in _bits(closed[u - 1]):
                residual[v] += t
        assignment[i] = 0

    dfs(0, 0)
    assert best is not None
    values = [0] * n
    for i, v in enumerate(order):
        values[v - 1] = best[i]
    return SolveResult(
        optimum=best_value,
        witness=PackingFunction(tuple(values), k),
        node_order=tuple(order),
        explored=explored,
    )


def solve_kpf(g: Graph, k: int, max_nodes: int = SOLVER_NODE_CAP) -> SolveResult:
    """Maximum total of an integer node labeling with every closed
    neighbourhood summing to at most k.  Exact; witness is the
    lexicographically largest optimum under the returned node order.
    """
    return _branch_and_bound(g, k, unit_values=False, max_nodes=max_nodes)


def solve_limited_packing(
    g: Graph, k: int, max_nodes: int = SOLVER_NODE_CAP
) -> SolveResult:
    """Binary variant: same constraints, values restricted to {0,1}."""
    return _branch_and_bound(g, k, unit_values=True, max_nodes=max_nodes)


def _exhaustive(g: Graph, k: int, top: int) -> SolveResult:
    if k < 1:
        raise ValueError("the packing bound k must be a positive integer")
    states = (top + 1) ** g.n
    if states > BRUTEFORCE_STATE_CAP:
        raise CapExceededError(
            f"brute force needs {states} states, cap is {BRUTEFORCE_STATE_CAP}"
        )
    closed = [g.closed_mask(v) for v in g.nodes()]
    best_value = -1
    best: tuple[int, ...] | None = None
    explored = 0
    for values in itertools.product(range(top, -1, -1), repeat=g.n):
        explored += 1
        if any(
            sum(values[u - 1] for u in _bits(mask)) > k for mask in closed
        ):
            continue
        total = sum(values)
        if total > best_value:
            best_value = total
            best = values
    assert best is not None
    return SolveResult(
        optimum=best_value,
        witness=PackingFunction(best, k),
        node_order=tuple(g.nodes()),
        explored=explored,
    )


def solve_kpf_bruteforce(g: Graph, k: int) -> SolveResult:
    """Independent oracle: exhaustive scan of all (k+1)^n assignments."""
    return _exhaustive(g, k, top=k)


def solve_limited_bruteforce(g: Graph, k: int) -> SolveResult:
    """Independent oracle for the binary variant: scan all 2^n assignments."""
    return _exhaustive(g, k, top=1)


# ---------------------------------------------------------------------------
# linear relaxation


def lp_relaxation(g: Graph, k: int):
    """Exact optimum of the relaxation: k times the best coordinate sum over
    the vertices of the unit polytope of N[g].  Returns (value, unit vertex).
    """
    if k < 1:
        raise ValueError("the packing bound k must be a positive integer")
    vertices = polytope_vertices(closed_neighbourhood_matrix(g))
    best_point = max(vertices, key=lambda p: p.coordinate_sum())
    # max() keeps the first maximizer of the sorted vertex list: deterministic
    return k * best_point.coordinate_sum(), best_point


def lp_relaxation_value(g: Graph, k: int) -> Fraction:
    return lp_relaxation(g, k)[0]


# ---------------------------------------------------------------------------
# scaling identity


@dataclass(frozen=True)
class ScalingReport:
    """Comparison of the integer optimum against k times the binary optimum.

    ``neighbourhood_perfect`` is None when the graph exceeds the perfection
    caps; when it is True, ``equality`` is guaranteed and enforced.
    """

    k: int
    kpf_value: int
    limited_value: int
    l1_value: int
    k_times_l1: int
    lp_value: Fraction | None
    neighbourhood_perfect: bool | None
    equality: bool


def check_scaling_identity(g: Graph, k: int) -> ScalingReport:
    kpf = solve_kpf(g, k).optimum
    limited = solve_limited_packing(g, k).optimum
    l1 = solve_limited_packing(g, 1).optimum
    scaled = k * l1

    if kpf < scaled:
        raise ConsistencyError(
            f"integer optimum {kpf} below k times the binary optimum {scaled}"
        )
    if limited > kpf:
        raise ConsistencyError(
            f"binary optimum {limited} above the integer optimum {kpf}"
        )

    lp_value = None
    if g.n <= 10:
        lp_value = lp_relaxation_value(g, k)
        if kpf > lp_value:
            raise ConsistencyError(
                f"integer optimum {kpf} above the relaxation value {lp_value}"
            )

    perfect = None
    if g.n <= 16:
        perfect = perfection_report(g).neighbourhood_matrix_perfect

    equality = kpf == scaled
    if perfect and not equality:
        raise ConsistencyError(
            "perfect neighbourhood matrix but the scaling identity failed: "
            f"{kpf} != {scaled}"
        )
    return ScalingReport(
        k=k,
        kpf_value=kpf,
        limited_value=limited,
        l1_value=l1,
        k_times_l1=scaled,
        lp_value=lp_value,
        neighbourhood_perfect=perfect,
        equality=equality,
    )
