"""Closed-form predictions of the list r-hued chromatic number.

Every supported graph class gets either an exact value or, in the one band
the underlying theory leaves open (r=2, cycle length not 5 and not divisible
by 3, between 2 and n-2 branch vertices), the two-element candidate set
{k, k+1} with k = min(r, max degree) + 1.  Predictions carry a provenance
tag naming the classification rule that produced them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    CYCLE,
    Graph,
    GraphStructureError,
    TREE,
    UNICYCLIC,
    classify,
    decompose_unicyclic,
)

EXACT = "exact"
TWO_CANDIDATES = "two-candidates"
LOWER_BOUND = "lower-bound"


@dataclass(frozen=True)
class ChiPrediction:
    kind: str
    value: int | None = None
    candidates: tuple[int, int] | None = None
    provenance: str = ""

    @classmethod
    def exact(cls, value: int, provenance: str) -> "ChiPrediction":
        return cls(kind=EXACT, value=value, provenance=provenance)

    @classmethod
    def band(cls, k: int, provenance: str) -> "ChiPrediction":
        return cls(kind=TWO_CANDIDATES, candidates=(k, k + 1), provenance=provenance)

    def possible_values(self) -> tuple[int, ...]:
        if self.kind == EXACT:
            return (self.value,)
        if self.kind == TWO_CANDIDATES:
            return self.candidates
        raise ValueError(f"no value set for kind {self.kind!r}")

    def to_json_dict(self) -> dict:
        if self.kind == EXACT:
            return {"exact": self.value, "provenance": self.provenance}
        if self.kind == TWO_CANDIDATES:
            return {"candidates": list(self.candidates), "provenance": self.provenance}
        return {"lower_bound": self.value, "provenance": self.provenance}


def degree_cap(g: Graph, r: int) -> int:
    """k = min(r, max degree) + 1, the floor every prediction sits on."""
    return min(r, g.max_degree()) + 1


def chi_list_hued_tree(g: Graph, r: int) -> ChiPrediction:
    """Trees: exactly min(r, max degree) + 1; a single vertex needs 1."""
    _check_r(r)
    if classify(g).kind != TREE:
        raise GraphStructureError("input graph is not a tree")
    if g.n == 1:
        return ChiPrediction.exact(1, "trivial-tree")
    return ChiPrediction.exact(degree_cap(g, r), "tree-theorem")


def chi_hued_tree(g: Graph, r: int) -> ChiPrediction:
    """Non-list r-hued number of a tree: same formula once there are at
    least 3 vertices; 1 and 2 vertices take their only sensible values."""
    _check_r(r)
    if classify(g).kind != TREE:
        raise GraphStructureError("input graph is not a tree")
    if g.n <= 2:
        return ChiPrediction.exact(g.n, "small-tree-convention")
    return ChiPrediction.exact(degree_cap(g, r), "hued-tree-theorem")


def chi_list_hued_cycle(n: int, r: int) -> ChiPrediction:
    """Cycles: parity rules the proper case, and for r >= 2 the value is 5
    on the 5-cycle, 3 when the length is divisible by 3, else 4."""
    _check_r(r)
    if n < 3:
        raise ValueError(f"cycle length must be at least 3, got {n}")
    if r == 1:
        return ChiPrediction.exact(2 if n % 2 == 0 else 3, "cycle-parity")
    if n == 5:
        return ChiPrediction.exact(5, "cycle-formula")
    return ChiPrediction.exact(3 if n % 3 == 0 else 4, "cycle-formula")


def chi_list_hued_unicyclic(g: Graph, r: int) -> ChiPrediction:
    """Decision ladder for unicyclic graphs with a pendant vertex.

    r=1 is pure cycle parity.  On a 5-cycle host the value is k+1 exactly
    when r=2 and every branch vertex has both cycle neighbors of degree 2,
    or when r>=3 and the maximum degree is 3, or r=3 with all cycle degrees
    at most 3.  Away from length 5: divisible-by-3 cycles give 3 at r=2,
    a single branch vertex forces 4, branch vertices on almost the whole
    cycle give 3, anything between is the open band {3, 4}; and r>=3 always
    gives k.
    """
    _check_r(r)
    if classify(g).kind != UNICYCLIC:
        raise GraphStructureError("input graph is not unicyclic")
    decomp = decompose_unicyclic(g)
    cycle, m_set = decomp.cycle, decomp.m_set
    n = len(cycle)
    k = degree_cap(g, r)

    if r == 1:
        return ChiPrediction.exact(2 if n % 2 == 0 else 3, "r1-parity")

    if n == 5:
        if r == 2:
            pos = {v: i for i, v in enumerate(cycle)}
            isolated = all(
                g.degree(cycle[(pos[v] - 1) % n]) == 2
                and g.degree(cycle[(pos[v] + 1) % n]) == 2
                for v in m_set)
            return ChiPrediction.exact(k + 1 if isolated else k, "n5-classification")
        bump = (g.max_degree() == 3
                or (r == 3 and all(g.degree(v) <= 3 for v in cycle)))
        return ChiPrediction.exact(k + 1 if bump else k, "n5-classification")

    if r == 2:
        if n % 3 == 0:
            return ChiPrediction.exact(3, "r2-mod3")
        if len(m_set) == 1:
            return ChiPrediction.exact(4, "obs-14")
        if len(m_set) >= n - 1:
            return ChiPrediction.exact(3, "obs-15")
        return ChiPrediction.band(k, "open-band")

    return ChiPrediction.exact(k, "large-r")


def predict(g: Graph, r: int) -> ChiPrediction:
    """Dispatch on the graph's structural class."""
    kind = classify(g).kind
    if kind == TREE:
        return chi_list_hued_tree(g, r)
    if kind == CYCLE:
        return chi_list_hued_cycle(g.n, r)
    if kind == UNICYCLIC:
        return chi_list_hued_unicyclic(g, r)
    raise GraphStructureError(
        "prediction supports trees, cycles, and unicyclic graphs only")


def _check_r(r: int) -> None:
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")
