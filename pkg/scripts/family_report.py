#!/usr/bin/env python3
"""Tabulate recognition and packing verdicts across the built-in families."""

import argparse
from dataclasses import dataclass

from kpacking import (
    FamilySpec,
    Graph,
    lp_relaxation_value,
    perfection_report,
    solve_kpf,
    solve_limited_packing,
)

DEFAULT_ROWS = (
    ("complete", (5,)),
    ("cycle", (4,)),
    ("cycle", (5,)),
    ("cycle", (6,)),
    ("cycle", (7,)),
    ("wheel", (6,)),
    ("wheel", (7,)),
    ("web", (6, 2)),
    ("web", (7, 2)),
    ("web", (7, 3)),
    ("three_sun", ()),
    ("pyramid", (1,)),
    ("pyramid", (2,)),
    ("pyramid", (3,)),
    ("clique_cycle", (1,)),
    ("clique_cycle", (2,)),
)


@dataclass(frozen=True)
class ReportConfig:
    k: int = 3
    rows: tuple = DEFAULT_ROWS


def flag(value) -> str:
    if value is None:
        return "-"
    return "yes" if value else "no"


def run(config: ReportConfig) -> None:
    header = (
        f"{'family':<16} {'accepted':>8} {'gq_perf':>7} {'member':>6} "
        f"{'screen':>6} {'l1':>3} {'kpf':>4} {'k*l1':>4} {'lp':>6}"
    )
    print(header)
    print("-" * len(header))
    for name, params in config.rows:
        built = FamilySpec(name, params).build()
        if not isinstance(built, Graph):
            continue
        rep = perfection_report(built)
        unit = solve_limited_packing(built, 1).optimum
        kpf = solve_kpf(built, config.k).optimum
        lp = lp_relaxation_value(built, config.k)
        label = name if not params else f"{name}({','.join(map(str, params))})"
        print(
            f"{label:<16} {flag(rep.extended_clique_node):>8} "
            f"{flag(rep.clique_graph_perfect):>7} "
            f"{flag(rep.neighbourhood_matrix_perfect):>6} "
            f"{flag(rep.structural_verdict):>6} "
            f"{unit:>3} {kpf:>4} {config.k * unit:>4} {str(lp):>6}"
        )


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, default=3)
    args = parser.parse_args()
    run(ReportConfig(k=args.k))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
