"""Shared test helpers: naive reference implementations and relabeling."""

from __future__ import annotations

import itertools
import random

from rhued import Graph, ListAssignment


def relabel(g: Graph, perm: list[int]) -> Graph:
    """perm[v] = new id of vertex v."""
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def naive_cycle_search(cycle, lists, r, m_set=(), allow_equal_at=()):
    """Reference for the constrained cycle coloring: plain product search."""
    cyc = tuple(cycle)
    n = len(cyc)
    m = frozenset(m_set)
    allow = frozenset(allow_equal_at)
    pools = [sorted(lists[v]) for v in cyc]
    for assignment in itertools.product(*pools):
        if any(assignment[i] == assignment[(i + 1) % n] for i in range(n)):
            continue
        ok = True
        for i, v in enumerate(cyc):
            required = (v in m and v not in allow) or (v not in m and r >= 2)
            if required and assignment[(i - 1) % n] == assignment[(i + 1) % n]:
                ok = False
                break
        if ok:
            return {v: assignment[i] for i, v in enumerate(cyc)}
    return None


def naive_is_colorable(g: Graph, lists: ListAssignment, r: int) -> bool:
    """Reference for the oracle: full product over all list choices."""
    pools = [sorted(lists[v]) for v in g.vertices]
    for assignment in itertools.product(*pools):
        if any(assignment[u] == assignment[v] for u, v in g.edges):
            continue
        if all(len({assignment[w] for w in g.neighbors(v)})
               >= min(g.degree(v), r) for v in g.vertices):
            return True
    return False


def random_tree(rng: random.Random, n: int) -> Graph:
    return Graph(n, [(rng.randrange(v), v) for v in range(1, n)])


def random_lists(rng: random.Random, vertices, k: int, universe: int) -> ListAssignment:
    return ListAssignment({v: rng.sample(range(1, universe + 1), k)
                           for v in vertices})
