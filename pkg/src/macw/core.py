"""Exact-arithmetic domain types: instances, allocations, weight graphs, cycles.

All real quantities are :class:`fractions.Fraction` values. Containers are
frozen dataclasses holding tuples, so every object here is immutable and can
be shared freely between threads or pickled to worker processes.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

Rational = Fraction

METHOD_MATCHING = "zero-offset-matching"
METHOD_EXACT = "exact-enumeration"
METHOD_LOCAL = "local-search"
METHODS = (METHOD_MATCHING, METHOD_EXACT, METHOD_LOCAL)


class MACWError(ValueError):
    """Base class for domain errors (bad input, violated preconditions)."""


class ParseError(MACWError):
    pass


class DimensionError(MACWError):
    pass


class NoCycleError(MACWError):
    pass


class CapExceededError(MACWError):
    pass


_FRACTION_RE = re.compile(r"^\s*[+-]?\d+\s*/\s*\d+\s*$")
_DECIMAL_RE = re.compile(r"^\s*[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?\s*$")


def to_rational(value: Any) -> Fraction:
    """Convert an int, Fraction, or numeric string ("7/3", "0.5", "-2") exactly.

    Binary floats are rejected: they rarely hold the decimal the user meant.
    """
    if isinstance(value, bool):
        raise ParseError(f"malformed number {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        if _FRACTION_RE.match(value):
            num, den = value.split("/")
            if int(den) == 0:
                raise ParseError(f"zero denominator in {value!r}")
            return Fraction(int(num), int(den))
        if _DECIMAL_RE.match(value):
            return Fraction(value.strip())
    raise ParseError(f"malformed number {value!r}")


def render(r: Fraction | int) -> str:
    """Render as "p/q" in lowest terms, or "p" for integers."""
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def rational_matrix(rows: Any, what: str) -> tuple[tuple[Fraction, ...], ...]:
    if not isinstance(rows, Sequence) or isinstance(rows, str) or len(rows) == 0:
        raise ParseError(f"{what} must be a non-empty list of rows")
    n = len(rows)
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, Sequence) or isinstance(row, str):
            raise ParseError(f"{what} row {i} is not a list")
        if len(row) != n:
            raise DimensionError(
                f"{what} is not square: row {i} has {len(row)} entries, expected {n}"
            )
        parsed = []
        for j, x in enumerate(row):
            try:
                parsed.append(to_rational(x))
            except ParseError as exc:
                raise ParseError(f"{what}[{i}][{j}]: {exc}") from None
        out.append(tuple(parsed))
    return tuple(out)


@dataclass(frozen=True)
class Instance:
    """Valuations ``values[i][o]`` of agent ``i`` for object ``o``; all positive."""

    values: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        rows = rational_matrix(self.values, "values")
        for i, row in enumerate(rows):
            for o, x in enumerate(row):
                if x <= 0:
                    raise ParseError(f"non-positive value at values[{i}][{o}] = {render(x)}")
        object.__setattr__(self, "values", rows)

    @property
    def n(self) -> int:
        return len(self.values)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Any]]) -> "Instance":
        return cls(tuple(tuple(r) for r in rows))


@dataclass(frozen=True, order=True)
class Allocation:
    """``assignment[i]`` is the object index held by agent ``i``."""

    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        a = tuple(int(x) for x in self.assignment)
        if sorted(a) != list(range(len(a))):
            raise MACWError(f"allocation {a} is not a permutation of 0..{len(a) - 1}")
        object.__setattr__(self, "assignment", a)

    @property
    def n(self) -> int:
        return len(self.assignment)

    def __getitem__(self, agent: int) -> int:
        return self.assignment[agent]

    def __iter__(self):
        return iter(self.assignment)

    def label(self) -> str:
        return "(" + ",".join(f"o{o + 1}" for o in self.assignment) + ")"


@dataclass(frozen=True)
class WeightGraph:
    """Complete digraph; ``weights[i][j]`` is the weight of arc i->j, diagonal zero."""

    weights: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        rows = rational_matrix(self.weights, "weights")
        for i in range(len(rows)):
            if rows[i][i] != 0:
                raise ParseError(f"graph diagonal must be zero, got weights[{i}][{i}] = {render(rows[i][i])}")
        object.__setattr__(self, "weights", rows)

    @property
    def n(self) -> int:
        return len(self.weights)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Any]]) -> "WeightGraph":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, n: int) -> "WeightGraph":
        return cls(tuple((Fraction(0),) * n for _ in range(n)))

    def is_zero(self) -> bool:
        return all(w == 0 for row in self.weights for w in row)


@dataclass(frozen=True)
class Cycle:
    """A simple directed cycle ``nodes[0] -> nodes[1] -> ... -> nodes[0]``."""

    nodes: tuple[int, ...]
    total_weight: Fraction
    average_weight: Fraction = field(init=False)

    def __post_init__(self) -> None:
        nodes = tuple(int(x) for x in self.nodes)
        if len(nodes) < 2:
            raise MACWError("a cycle needs at least two nodes")
        if len(set(nodes)) != len(nodes):
            raise MACWError(f"cycle nodes {nodes} are not distinct")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "total_weight", Fraction(self.total_weight))
        object.__setattr__(self, "average_weight", self.total_weight / len(nodes))

    @classmethod
    def in_graph(cls, g: WeightGraph, nodes: Sequence[int]) -> "Cycle":
        k = len(nodes)
        total = sum((g.weights[nodes[t]][nodes[(t + 1) % k]] for t in range(k)), Fraction(0))
        return cls(tuple(nodes), total)

    def __len__(self) -> int:
        return len(self.nodes)

    def label(self) -> str:
        return "(" + ",".join(f"i{i + 1}" for i in self.nodes) + ")"


@dataclass(frozen=True)
class Solution:
    allocation: Allocation
    macw: Fraction
    witness: Cycle
    total_value: Fraction
    method: str
    optimal: bool
    info: Mapping[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise MACWError(f"unknown method tag {self.method!r}")
        if self.witness.average_weight != self.macw:
            raise MACWError("witness average does not equal the reported macw")


def check_same_size(*sized: Any) -> int:
    sizes = {x.n for x in sized}
    if len(sizes) != 1:
        raise DimensionError(f"dimension mismatch: sizes {sorted(sizes)}")
    return sizes.pop()


def total_value(inst: Instance, a: Allocation) -> Fraction:
    """Sum of each agent's value for its own object."""
    check_same_size(inst, a)
    return sum((inst.values[i][o] for i, o in enumerate(a.assignment)), Fraction(0))


def common_denominator(*matrices: Sequence[Sequence[Fraction]]) -> int:
    den = 1
    for m in matrices:
        for row in m:
            for x in row:
                den = math.lcm(den, x.denominator)
    return den


def scaled_ints(m: Sequence[Sequence[Fraction]], scale: int) -> list[list[int]]:
    """Multiply by ``scale`` (a common denominator) and return plain ints."""
    return [[int(x * scale) for x in row] for row in m]


def _constant_as_text(name: str) -> str:
    # NaN/Infinity stay strings so to_rational rejects them with their position
    return name


def load_json(text: str) -> Any:
    """JSON decoding with exact decimals (floats become Fractions, NaN rejected)."""
    try:
        return json.loads(text, parse_float=Fraction, parse_constant=_constant_as_text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


def parse_instance(text: str) -> Instance:
    """Parse the ``{"values": [[...]], "offset": [[...]]}`` format; ``offset`` is ignored here."""
    return _instance_from_doc(load_json(text))


def _instance_from_doc(doc: Any) -> Instance:
    if not isinstance(doc, dict) or "values" not in doc:
        raise ParseError('instance JSON must be an object with a "values" key')
    return Instance(rational_matrix(doc["values"], "values"))


def parse_problem(text: str) -> tuple[Instance, WeightGraph]:
    """Parse an instance file and its offset graph (all-zero when absent)."""
    doc = load_json(text)
    inst = _instance_from_doc(doc)
    if doc.get("offset") is None:
        return inst, WeightGraph.zeros(inst.n)
    offset = WeightGraph(rational_matrix(doc["offset"], "offset"))
    check_same_size(inst, offset)
    return inst, offset
