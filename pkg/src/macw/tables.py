"""Cycle-average tables: every allocation against every simple cycle."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .core import Allocation, Instance, WeightGraph, check_same_size, render
from .cycles import TABLE_CAP, all_cycle_averages
from .envy import difference_graph, envy_graph


@dataclass(frozen=True)
class TableRow:
    allocation: Allocation
    averages: tuple[Fraction, ...]
    is_max: tuple[bool, ...]

    @property
    def macw(self) -> Fraction:
        return max(self.averages)


@dataclass(frozen=True)
class CycleTable:
    cycles: tuple[tuple[int, ...], ...]
    rows: tuple[TableRow, ...]

    @property
    def n(self) -> int:
        return len(self.rows[0].allocation.assignment)


def reproduce_table(inst: Instance, g_o: WeightGraph | None = None,
                    cap: int | None = TABLE_CAP) -> CycleTable:
    """Rows in lexicographic allocation order; columns ordered by (cycle length, node sequence)."""
    n = inst.n
    if g_o is None:
        g_o = WeightGraph.zeros(n)
    check_same_size(inst, g_o)
    cycles = None
    rows = []
    for perm in permutations(range(n)):
        alloc = Allocation(perm)
        entries = all_cycle_averages(difference_graph(envy_graph(inst, alloc), g_o), cap)
        if cycles is None:
            cycles = tuple(c.nodes for c, _ in entries)
        averages = tuple(avg for _, avg in entries)
        top = max(averages)
        rows.append(TableRow(alloc, averages, tuple(a == top for a in averages)))
    return CycleTable(cycles, tuple(rows))


def _cycle_name(nodes: tuple[int, ...]) -> str:
    return "(" + ", ".join(f"i{i + 1}" for i in nodes) + ")"


def to_markdown(table: CycleTable) -> str:
    n = table.n
    header = [f"A_{i + 1}" for i in range(n)] + [f"Cycle {_cycle_name(c)}" for c in table.cycles]
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    for row in table.rows:
        cells = [f"o{o + 1}" for o in row.allocation]
        for avg, bold in zip(row.averages, row.is_max):
            cells.append(f"**{render(avg)}**" if bold else render(avg))
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def to_csv(table: CycleTable) -> str:
    """Long format: one line per (allocation, cycle) cell, row maxima in ``is_max``."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["row", "allocation", "cycle", "length", "average", "is_max"])
    for r, row in enumerate(table.rows, 1):
        for nodes, avg, bold in zip(table.cycles, row.averages, row.is_max):
            writer.writerow([
                r,
                row.allocation.label(),
                "(" + ",".join(f"i{i + 1}" for i in nodes) + ")",
                len(nodes),
                render(avg),
                str(bold).lower(),
            ])
    return buf.getvalue()
