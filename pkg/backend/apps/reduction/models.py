from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, NamedTuple

from apps.graphs.models import Graph, VertexSet


@dataclass(frozen=True)
class CnfFormula:
    """
    CNF formula over variables 1..k. A literal is a signed variable index;
    clauses keep the order in which their literals were written.
    """

    k: int
    clauses: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        """Total number of literal occurrences"""
        return sum(len(clause) for clause in self.clauses)

    @property
    def m(self) -> int:
        return len(self.clauses)

    def evaluate(self, assignment: Mapping[int, bool]) -> bool:
        return all(
            any(assignment[abs(literal)] == (literal > 0) for literal in clause)
            for clause in self.clauses
        )


class GadgetAnchors(NamedTuple):
    """L, R and the distinguished vertices a, b, c of the gadget pattern H"""

    leaf: VertexSet
    rest: VertexSet
    a: int
    b: int
    c: int


@dataclass(frozen=True)
class CopyLabels:
    """Roles inside one copy M_i of the clause gadget"""

    u: int
    v: int
    w: int
    s: int
    t: int
    h1: VertexSet
    h2: VertexSet
    l1: VertexSet
    l2: VertexSet
    l3: VertexSet
    r1: VertexSet
    r2: VertexSet

    def relabel(self, mapping: Mapping[int, int]) -> CopyLabels:
        def moved(vertices: VertexSet) -> VertexSet:
            return frozenset(mapping[x] for x in vertices)

        return CopyLabels(
            u=mapping[self.u], v=mapping[self.v], w=mapping[self.w],
            s=mapping[self.s], t=mapping[self.t],
            h1=moved(self.h1), h2=moved(self.h2),
            l1=moved(self.l1), l2=moved(self.l2), l3=moved(self.l3),
            r1=moved(self.r1), r2=moved(self.r2),
        )

    def as_dict(self) -> dict:
        return {
            "u": self.u, "v": self.v, "w": self.w, "s": self.s, "t": self.t,
            "H1": sorted(self.h1), "H2": sorted(self.h2),
            "L1": sorted(self.l1), "L2": sorted(self.l2), "L3": sorted(self.l3),
            "R1": sorted(self.r1), "R2": sorted(self.r2),
        }


@dataclass(frozen=True)
class GadgetLabels:
    """
    Labels of a clause gadget for a clause of size n.

    copies[i - 1] describes M_i for 1 <= i <= 2n - 1; modulator lists the
    vertices f_i(v), i <= n, in order.
    """

    n: int
    copies: tuple[CopyLabels, ...]
    modulator: tuple[int, ...]

    def copy(self, index: int) -> CopyLabels:
        """M_index, 1-based"""
        return self.copies[index - 1]

    @property
    def modulator_set(self) -> VertexSet:
        return frozenset(self.modulator)

    def relabel(self, mapping: Mapping[int, int]) -> GadgetLabels:
        return GadgetLabels(
            n=self.n,
            copies=tuple(copy.relabel(mapping) for copy in self.copies),
            modulator=tuple(mapping[x] for x in self.modulator),
        )

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "S": list(self.modulator),
            "copies": [copy.as_dict() for copy in self.copies],
        }


@dataclass(frozen=True)
class InstanceLabels:
    """One copy of the single-pattern construction: variable copies of H and clause gadgets"""

    variables: tuple[tuple[int, int], ...]
    clauses: tuple[GadgetLabels, ...]
    variable_copies: tuple[VertexSet, ...]

    def literal_vertex(self, literal: int) -> int:
        positive, negative = self.variables[abs(literal) - 1]
        return positive if literal > 0 else negative

    @property
    def modulator(self) -> VertexSet:
        return frozenset(vertex for pair in self.variables for vertex in pair)

    def relabel(self, mapping: Mapping[int, int]) -> InstanceLabels:
        return InstanceLabels(
            variables=tuple((mapping[p], mapping[q]) for p, q in self.variables),
            clauses=tuple(labels.relabel(mapping) for labels in self.clauses),
            variable_copies=tuple(frozenset(mapping[x] for x in copy) for copy in self.variable_copies),
        )


@dataclass(frozen=True)
class ReductionArtifact:
    """
    Output of a reduction: G, l and the modulator S.

    pattern is the connected graph the clause gadgets are built from;
    parts holds the 2c - 1 copies of the single-pattern construction
    (one for a connected pattern); filler is V(G2), the copies of H - Y.
    """

    graph: Graph
    ell: int
    modulator: VertexSet
    pattern: Graph
    parts: tuple[InstanceLabels, ...]
    filler: VertexSet = field(default_factory=frozenset)

    @property
    def part_budget(self) -> int:
        """l' of one copy"""
        return self.ell // len(self.parts)

    def labels_dict(self) -> dict:
        return {
            "copies": [
                {
                    "variables": [
                        {"variable": index, "positive": p, "negative": q}
                        for index, (p, q) in enumerate(part.variables, start=1)
                    ],
                    "clauses": [labels.as_dict() for labels in part.clauses],
                }
                for part in self.parts
            ],
            "filler": sorted(self.filler),
        }


@dataclass(frozen=True)
class CheckResult:
    """One verified condition; passed is None when the check was skipped"""

    name: str
    passed: bool | None
    detail: str = ""

    def as_dict(self) -> dict:
        status = "skipped" if self.passed is None else ("passed" if self.passed else "failed")
        return {"check": self.name, "status": status, "detail": self.detail}


@dataclass(frozen=True)
class VerificationReport:
    subject: str
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed is not False for check in self.checks)

    @property
    def failures(self) -> list[str]:
        return [check.name for check in self.checks if check.passed is False]

    def as_dict(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "checks": [check.as_dict() for check in self.checks],
        }
