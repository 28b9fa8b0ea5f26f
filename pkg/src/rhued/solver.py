"""Constructive list r-hued coloring of trees, cycles, and unicyclic graphs.

Tree coloring is leaf peeling: repeatedly remove the highest-numbered leaf
outside the anchor set, color the small remainder, then restore peeled
leaves in reverse.  When a leaf u0 with neighbor u1 comes back, the rule is

    fewer than r distinct colors visible around u1
        -> pick the smallest list color of u0 avoiding u1's color and every
           color already visible around u1 (u1 gains a fresh color), else
    -> pick the smallest list color of u0 avoiding only u1's color.

The "fresh color until r are visible" discipline is what makes the r-hued
condition fall out at the end; the list-size preconditions guarantee the
candidate set is never empty.

Cycle coloring is a generic constrained backtracking search (lists plus
per-vertex "my two neighbors must differ" flags), not per-case formulas.
Unicyclic coloring glues the two: color the cycle under the constraints the
pendant trees need, then extend each pendant tree with its three anchor
colors fixed.

Solvers are deterministic: identical inputs give identical colorings.
Failure to color a cycle is a value, not an exception.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .coloring import Coloring, ListAssignment
from .graph import (
    Graph,
    GraphStructureError,
    PendantTree,
    TREE,
    UNICYCLIC,
    classify,
    decompose_unicyclic,
)


@dataclass(frozen=True)
class UnsatisfiableCycle:
    """No cycle coloring satisfies the constraints under these lists.

    Carries the cycle sub-problem so callers can report it or retry with
    larger lists.
    """

    cycle: tuple[int, ...]
    r: int
    m_set: frozenset[int]
    allow_equal_at: frozenset[int]

    def __str__(self) -> str:
        return (f"no admissible coloring of cycle {list(self.cycle)} (r={self.r}, "
                f"branch vertices {sorted(self.m_set)}, "
                f"equal-neighbors allowed at {sorted(self.allow_equal_at)})")


def _check_r(r: int) -> None:
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")


def _peel(adj: dict[int, tuple[int, ...]], anchors: set[int]) -> list[tuple[int, int]]:
    """Peel non-anchor leaves, highest vertex id first, until none remain.

    Returns the peel stack of (leaf, its neighbor at peel time).
    """
    deg = {v: len(nbs) for v, nbs in adj.items()}
    alive = set(adj)
    heap = [-v for v in adj if deg[v] == 1 and v not in anchors]
    heapq.heapify(heap)
    stack: list[tuple[int, int]] = []
    while heap:
        u0 = -heapq.heappop(heap)
        if u0 not in alive or deg[u0] != 1:
            continue
        u1 = next(w for w in adj[u0] if w in alive)
        stack.append((u0, u1))
        alive.discard(u0)
        deg[u1] -= 1
        if deg[u1] == 1 and u1 not in anchors:
            heapq.heappush(heap, -u1)
    return stack


def _restore(adj: dict[int, tuple[int, ...]], lists: ListAssignment, r: int,
             coloring: Coloring, stack: list[tuple[int, int]]) -> Coloring:
    """Replay a peel stack in reverse, extending the coloring leaf by leaf."""
    for u0, u1 in reversed(stack):
        seen = {coloring[x] for x in adj[u1] if x in coloring}
        if len(seen) < r:
            forbidden = seen | {coloring[u1]}
        else:
            forbidden = {coloring[u1]}
        candidates = sorted(lists[u0] - forbidden)
        if not candidates:
            raise ValueError(
                f"color list at vertex {u0} too short to extend the coloring")
        coloring[u0] = candidates[0]
    return coloring


def _check_list_sizes(vertices, lists: ListAssignment, needed: int) -> None:
    for v in vertices:
        if v not in lists:
            raise ValueError(f"no color list for vertex {v}")
        if len(lists[v]) < needed:
            raise ValueError(
                f"list at vertex {v} has {len(lists[v])} colors, need {needed}")


def color_tree_anchored(g: Graph, lists: ListAssignment, r: int,
                        anchor_vertex: int, anchor_color: int) -> Coloring:
    """Color a tree so the anchor vertex gets exactly the anchor color.

    Requires every list to have at least min(r, max degree) + 1 colors; the
    result then always exists and satisfies all three conditions.
    """
    _check_r(r)
    if classify(g).kind != TREE:
        raise GraphStructureError("input graph is not a tree")
    if not (0 <= anchor_vertex < g.n):
        raise ValueError(f"anchor vertex {anchor_vertex} out of range")
    _check_list_sizes(g.vertices, lists, min(r, g.max_degree()) + 1)
    if anchor_color not in lists[anchor_vertex]:
        raise ValueError(
            f"anchor color {anchor_color} not in the list of vertex {anchor_vertex}")
    adj = g.adjacency()
    stack = _peel(adj, {anchor_vertex})
    return _restore(adj, lists, r, {anchor_vertex: anchor_color}, stack)


def color_pendant_tree(tree: PendantTree, lists: ListAssignment, r: int,
                       root_color: int, prev_color: int, next_color: int) -> Coloring:
    """Color a pendant tree with its root and both cycle leaves pre-colored.

    The two leaf colors may coincide only when the root's degree exceeds r
    (otherwise the root could never see enough distinct neighbor colors, and
    the caller must re-color the cycle instead).
    """
    _check_r(r)
    root, prev, nxt = tree.root, tree.cycle_prev, tree.cycle_next
    _check_list_sizes(tree.vertices, lists, min(r, tree.max_degree()) + 1)
    for v, a in ((root, root_color), (prev, prev_color), (nxt, next_color)):
        if a not in lists[v]:
            raise ValueError(f"anchor color {a} not in the list of vertex {v}")
    if root_color in (prev_color, next_color):
        raise ValueError("root anchor color clashes with an adjacent leaf anchor")
    if prev_color == next_color and tree.degree(root) <= r:
        raise ValueError(
            f"equal leaf anchors need root degree > r (degree {tree.degree(root)}, r={r})")
    stack = _peel(tree.adj, {root, prev, nxt})
    preset = {root: root_color, prev: prev_color, nxt: next_color}
    return _restore(tree.adj, lists, r, preset, stack)


def color_cycle_constrained(cycle, lists: ListAssignment, r: int,
                            m_set=(), allow_equal_at=()) -> Coloring | UnsatisfiableCycle:
    """Proper list coloring of a cycle with second-neighbor constraints.

    Every vertex whose two cycle neighbors must show it min(2, r) distinct
    colors gets that enforced; vertices in `allow_equal_at` (branch vertices
    whose full degree exceeds r) are exempt.  Exhaustive backtracking with
    failure memoization on (position, previous two colors): returns the
    lexicographically first admissible coloring, or an UnsatisfiableCycle
    value if none exists for these lists.
    """
    _check_r(r)
    cyc = tuple(cycle)
    n = len(cyc)
    if n < 3 or len(set(cyc)) != n:
        raise ValueError("cycle must list at least 3 distinct vertices")
    m = frozenset(m_set)
    allow = frozenset(allow_equal_at)
    if not m >= allow:
        raise ValueError("allow_equal_at must be a subset of m_set")
    if not m <= set(cyc):
        raise ValueError("m_set must consist of cycle vertices")
    if not lists.covers(cyc):
        raise ValueError("lists do not cover every cycle vertex")

    # needs_distinct[i]: the two neighbors of cyc[i] must receive different
    # colors.  Non-branch vertices need it exactly when r >= 2.
    needs_distinct = [
        (v in m and v not in allow) or (v not in m and r >= 2) for v in cyc
    ]
    choices = [sorted(lists[v]) for v in cyc]
    failure = UnsatisfiableCycle(cycle=cyc, r=r, m_set=m,
                                 allow_equal_at=allow)

    def search(c0: int, c1: int) -> list[int] | None:
        colors = [c0, c1]
        dead: set[tuple[int, int, int]] = set()

        def candidates(p: int):
            for c in choices[p]:
                if c == colors[p - 1]:
                    continue
                if needs_distinct[p - 1] and c == colors[p - 2]:
                    continue
                if p == n - 1:
                    if c == colors[0]:
                        continue
                    if needs_distinct[0] and c == colors[1]:
                        continue
                yield c

        def open_frame(p: int):
            state = (p, colors[-2], colors[-1])
            if state in dead:
                return None
            # wraparound: the middle vertex at position n-1 links c[n-2], c[0]
            if p == n - 1 and needs_distinct[n - 1] and colors[n - 2] == colors[0]:
                dead.add(state)
                return None
            return candidates(p)

        frame = open_frame(2)
        if frame is None:
            return None
        frames = [(2, frame)]
        while frames:
            p, it = frames[-1]
            advanced = False
            for c in it:
                colors.append(c)
                if p == n - 1:
                    return colors
                nxt = open_frame(p + 1)
                if nxt is None:
                    colors.pop()
                    continue
                frames.append((p + 1, nxt))
                advanced = True
                break
            if advanced:
                continue
            dead.add((p, colors[-2], colors[-1]))
            frames.pop()
            if frames:
                colors.pop()
        return None

    for c0 in choices[0]:
        for c1 in choices[1]:
            if c1 == c0:
                continue
            out = search(c0, c1)
            if out is not None:
                return {v: out[i] for i, v in enumerate(cyc)}
    return failure


def color_unicyclic(g: Graph, lists: ListAssignment, r: int) -> Coloring | UnsatisfiableCycle:
    """Color a unicyclic graph: constrained cycle coloring, then pendant
    tree extensions anchored at the cycle colors, merged vertex-disjointly.

    Branch vertices of degree > r may see equal colors on their two cycle
    neighbors (the pendant tree supplies the remaining distinct colors);
    all other second-neighbor pairs on the cycle are forced distinct.
    Returns an UnsatisfiableCycle value when the cycle sub-problem has no
    admissible coloring for these lists.
    """
    _check_r(r)
    if classify(g).kind != UNICYCLIC:
        raise GraphStructureError("input graph is not unicyclic")
    if not lists.covers(g.vertices):
        raise ValueError("lists do not cover every vertex of the graph")

    decomp = decompose_unicyclic(g)
    allow = frozenset(v for v in decomp.m_set if g.degree(v) > r)
    c0 = color_cycle_constrained(decomp.cycle, lists, r, decomp.m_set, allow)
    if isinstance(c0, UnsatisfiableCycle):
        return c0

    coloring = dict(c0)
    for v in sorted(decomp.m_set):
        tree = decomp.trees[v]
        ci = color_pendant_tree(tree, lists, r, c0[v],
                                c0[tree.cycle_prev], c0[tree.cycle_next])
        for u in tree.internal_vertices():
            assert u not in coloring, "pendant trees share only cycle vertices"
            coloring[u] = ci[u]
    return coloring
