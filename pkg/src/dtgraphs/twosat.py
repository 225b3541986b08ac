"""2SAT instances and an implication-graph/SCC solver.

A literal is a ``(variable, positive)`` pair.  Unit clauses are written as
``(l, l)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ._backend import kernels
from .errors import IndexOutOfRange, LengthMismatch

Literal = tuple[int, bool]
Clause = tuple[Literal, Literal]


def pos(v: int) -> Literal:
    return (v, True)


def neg(v: int) -> Literal:
    return (v, False)


@dataclass(frozen=True)
class TwoSatInstance:
    nvars: int
    clauses: tuple[Clause, ...]

    def __post_init__(self):
        for clause in self.clauses:
            for v, _ in clause:
                if not 0 <= v < self.nvars:
                    raise IndexOutOfRange(f"variable {v} outside [0, {self.nvars})")

    @classmethod
    def from_clauses(cls, nvars: int, clauses: Iterable[Clause]) -> "TwoSatInstance":
        return cls(nvars, tuple(clauses))

    def encoded(self) -> list[tuple[int, int]]:
        return [(2 * a + (not pa), 2 * b + (not pb)) for (a, pa), (b, pb) in self.clauses]


def solve(inst: TwoSatInstance) -> list[bool] | None:
    """A satisfying assignment, or ``None`` when the instance is unsatisfiable."""
    return kernels.solve_2sat(inst.nvars, inst.encoded())


def evaluate(inst: TwoSatInstance, assignment: Sequence[bool]) -> bool:
    if len(assignment) != inst.nvars:
        raise LengthMismatch(f"assignment has {len(assignment)} values for {inst.nvars} variables")
    return all(assignment[a] == pa or assignment[b] == pb for (a, pa), (b, pb) in inst.clauses)
