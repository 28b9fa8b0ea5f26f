"""Color lists, colorings, and the three coloring conditions.

A coloring is a plain dict vertex -> color id.  Color ids are opaque
nonnegative integers: equality is the only operation ever applied to them.
The three conditions checked here:

  C1  proper: endpoints of every edge get different colors.
  C2  r-hued: every vertex sees at least min(degree, r) distinct colors
      among its neighbors.
  C3  list: every vertex's color belongs to its own list.

All public checks demand a total coloring; partial colorings are a
construction-time state inside the solvers only.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping, NamedTuple

from .graph import Graph

Coloring = dict[int, int]


class ListAssignment:
    """Per-vertex finite color lists (immutable)."""

    __slots__ = ("lists",)

    def __init__(self, lists: Mapping[int, Iterable[int]]):
        frozen = {}
        for v, colors in lists.items():
            cs = frozenset(int(c) for c in colors)
            if not cs:
                raise ValueError(f"empty color list at vertex {v}")
            if any(c < 0 for c in cs):
                raise ValueError(f"negative color id at vertex {v}")
            frozen[int(v)] = cs
        self.lists = frozen

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.lists[v]

    def __contains__(self, v: int) -> bool:
        return v in self.lists

    def __len__(self) -> int:
        return len(self.lists)

    def __iter__(self):
        return iter(sorted(self.lists))

    def __eq__(self, other) -> bool:
        return isinstance(other, ListAssignment) and self.lists == other.lists

    def __repr__(self) -> str:
        inner = {v: sorted(cs) for v, cs in sorted(self.lists.items())}
        return f"ListAssignment({inner})"

    def covers(self, vertices: Iterable[int]) -> bool:
        return all(v in self.lists for v in vertices)

    def uniform_size(self) -> int | None:
        """k if this is a k-list (every list has size exactly k), else None."""
        sizes = {len(cs) for cs in self.lists.values()}
        return sizes.pop() if len(sizes) == 1 else None

    def min_size(self) -> int:
        return min(len(cs) for cs in self.lists.values())

    def restricted(self, vertices: Iterable[int]) -> "ListAssignment":
        keep = set(vertices)
        return ListAssignment({v: cs for v, cs in self.lists.items() if v in keep})

    def to_json_dict(self) -> dict[str, list[int]]:
        return {str(v): sorted(cs) for v, cs in sorted(self.lists.items())}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: Mapping[str, Iterable[int]]) -> "ListAssignment":
        return cls({int(v): colors for v, colors in data.items()})

    @classmethod
    def constant(cls, vertices: Iterable[int], colors: Iterable[int]) -> "ListAssignment":
        cs = frozenset(colors)
        return cls({v: cs for v in vertices})


class Violation(NamedTuple):
    condition: str  # "C1" | "C2" | "C3"
    witness: object  # edge (u, v) for C1, vertex id for C2/C3


class Verdict(NamedTuple):
    ok: bool
    violations: tuple[Violation, ...]

    @classmethod
    def from_violations(cls, violations: Iterable[Violation]) -> "Verdict":
        vs = tuple(violations)
        return cls(ok=not vs, violations=vs)


def _require_total(g: Graph, coloring: Mapping[int, int]) -> None:
    missing = [v for v in g.vertices if v not in coloring]
    if missing:
        raise ValueError(f"coloring is partial; missing vertices {missing[:5]}")


def check_proper(g: Graph, coloring: Coloring) -> Verdict:
    """C1: list every edge whose endpoints share a color."""
    _require_total(g, coloring)
    bad = [Violation("C1", (u, v)) for u, v in g.edges if coloring[u] == coloring[v]]
    return Verdict.from_violations(bad)


def check_hued(g: Graph, coloring: Coloring, r: int) -> Verdict:
    """C2: list every vertex seeing fewer than min(degree, r) neighbor colors."""
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")
    _require_total(g, coloring)
    bad = []
    for v in g.vertices:
        nbs = g.neighbors(v)
        if len({coloring[w] for w in nbs}) < min(len(nbs), r):
            bad.append(Violation("C2", v))
    return Verdict.from_violations(bad)


def check_lists(lists: ListAssignment, coloring: Coloring) -> Verdict:
    """C3: list every vertex colored outside its own list."""
    bad = []
    for v in sorted(coloring):
        if v not in lists:
            raise ValueError(f"no color list for vertex {v}")
        if coloring[v] not in lists[v]:
            bad.append(Violation("C3", v))
    return Verdict.from_violations(bad)


def verify_coloring(g: Graph, lists: ListAssignment, coloring: Coloring, r: int) -> Verdict:
    """All three conditions together; the verdict carries every violation."""
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")
    _require_total(g, coloring)
    vs = (check_proper(g, coloring).violations
          + check_hued(g, coloring, r).violations
          + check_lists(lists, coloring).violations)
    return Verdict.from_violations(vs)


def coloring_to_json_dict(coloring: Coloring) -> dict[str, int]:
    return {str(v): c for v, c in sorted(coloring.items())}


def coloring_from_json_dict(data: Mapping[str, int]) -> Coloring:
    return {int(v): int(c) for v, c in data.items()}
