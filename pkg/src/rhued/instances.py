"""Instance builders and small-scale exhaustive generators.

The exhaustive generators produce one representative per isomorphism class:
free trees via leaf extension with a center-rooted canonical code, and
unicyclic graphs as necklaces of rooted tree shapes around a cycle, deduped
under rotation and reflection.  Used by the reproduction report and the
acceptance suite.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .coloring import ListAssignment
from .graph import Graph


def single_vertex() -> Graph:
    return Graph(1)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaf_count: int) -> Graph:
    """Center 0 with the given number of leaves."""
    return Graph(leaf_count + 1, [(0, i) for i in range(1, leaf_count + 1)])


def cycle_with_pendants(n: int, pendants: Mapping[int, int] | Sequence[int]) -> Graph:
    """Cycle 0..n-1 with pendant leaves attached at the given positions.

    `pendants` maps cycle position -> number of fresh leaves, or is a
    sequence of positions each receiving one leaf.  New vertices are
    numbered n, n+1, ... in position order.
    """
    if not isinstance(pendants, Mapping):
        counts: dict[int, int] = {}
        for p in pendants:
            counts[p] = counts.get(p, 0) + 1
        pendants = counts
    edges = [(i, (i + 1) % n) for i in range(n)]
    nxt = n
    for pos in sorted(pendants):
        if not (0 <= pos < n):
            raise ValueError(f"pendant position {pos} not on the cycle")
        for _ in range(pendants[pos]):
            edges.append((pos, nxt))
            nxt += 1
    return Graph(nxt, edges)


# ---------------------------------------------------------------------------
# exhaustive generation up to isomorphism


def _ahu_code(adj: Sequence[Sequence[int]], root: int, parent: int) -> tuple:
    code = sorted(_ahu_code(adj, w, root) for w in adj[root] if w != parent)
    return tuple(code)


def _tree_centers(g: Graph) -> list[int]:
    if g.n == 1:
        return [0]
    deg = [g.degree(v) for v in g.vertices]
    layer = [v for v in g.vertices if deg[v] == 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in g.neighbors(v):
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
            deg[v] = 0
        layer = nxt
    return sorted(layer)


def free_tree_code(g: Graph) -> tuple:
    """Canonical code of a free tree: rooted code at the center, or the
    sorted pair of codes across the central edge."""
    centers = _tree_centers(g)
    adj = [g.neighbors(v) for v in g.vertices]
    if len(centers) == 1:
        return ("c1", _ahu_code(adj, centers[0], -1))
    a, b = centers
    return ("c2", tuple(sorted((_ahu_code(adj, a, b), _ahu_code(adj, b, a)))))


def all_trees(n: int) -> list[Graph]:
    """All non-isomorphic free trees on n vertices (1, 1, 1, 2, 3, 6, 11, ...)."""
    if n < 1:
        return []
    level = {free_tree_code(single_vertex()): single_vertex()}
    for m in range(2, n + 1):
        nxt: dict[tuple, Graph] = {}
        for tree in level.values():
            for v in tree.vertices:
                g = Graph(m, list(tree.edges) + [(v, m - 1)])
                nxt.setdefault(free_tree_code(g), g)
        level = nxt
    return [level[c] for c in sorted(level)]


@lru_cache(maxsize=None)
def rooted_tree_shapes(size: int) -> tuple[tuple, ...]:
    """Canonical shapes of rooted trees with `size` vertices, as nested
    sorted tuples of child shapes (1, 1, 2, 4, 9, ... shapes)."""
    if size < 1:
        return ()
    if size == 1:
        return ((),)
    # shapes ordered by (size, code); children chosen in non-decreasing order
    pool: list[tuple[int, tuple]] = []
    for s in range(1, size):
        pool.extend((s, shape) for shape in rooted_tree_shapes(s))
    pool.sort()
    results: set[tuple] = set()

    def grow(remaining: int, start: int, chosen: tuple):
        if remaining == 0:
            results.add(tuple(sorted(chosen)))
            return
        for i in range(start, len(pool)):
            s, shape = pool[i]
            if s > remaining:
                continue
            grow(remaining - s, i, chosen + (shape,))

    grow(size - 1, 0, ())
    return tuple(sorted(results))


def shape_size(shape: tuple) -> int:
    return 1 + sum(shape_size(child) for child in shape)


def _necklace_canonical(shapes: tuple[tuple, ...]) -> tuple[tuple, ...]:
    n = len(shapes)
    best = None
    for seq in (shapes, shapes[::-1]):
        for i in range(n):
            rot = seq[i:] + seq[:i]
            if best is None or rot < best:
                best = rot
    return best


def _materialize_unicyclic(cycle_len: int, shapes: Sequence[tuple]) -> Graph:
    edges = [(i, (i + 1) % cycle_len) for i in range(cycle_len)]
    counter = cycle_len

    def attach(parent: int, shape: tuple):
        nonlocal counter
        for child in shape:
            cid = counter
            counter += 1
            edges.append((parent, cid))
            attach(cid, child)

    for pos in range(cycle_len):
        attach(pos, shapes[pos])
    return Graph(counter, edges)


def all_unicyclic(cycle_len: int, max_total: int) -> list[Graph]:
    """All non-isomorphic unicyclic graphs with this cycle length, minimum
    degree 1, and at most `max_total` vertices in all."""
    if cycle_len < 3:
        raise ValueError("cycle length must be at least 3")
    max_extra = max_total - cycle_len
    if max_extra < 1:
        return []
    shapes_by_size = {s: rooted_tree_shapes(s) for s in range(1, max_extra + 2)}
    seen: dict[tuple, tuple] = {}

    def assign(pos: int, extra_left: int, chosen: tuple):
        if pos == cycle_len:
            if chosen != tuple(() for _ in range(cycle_len)):
                canon = _necklace_canonical(chosen)
                seen.setdefault(canon, canon)
            return
        for size in range(1, extra_left + 2):
            for shape in shapes_by_size[size]:
                assign(pos + 1, extra_left - (size - 1), chosen + (shape,))

    assign(0, max_extra, ())
    return [_materialize_unicyclic(cycle_len, shapes) for shapes in sorted(seen)]


# ---------------------------------------------------------------------------
# seeded random instances


def random_unicyclic(rng: random.Random, cycle_len: int, total: int) -> Graph:
    """Cycle 0..cycle_len-1 plus random pendant trees: every later vertex
    attaches to a uniformly random earlier one.  Needs total > cycle_len so
    the minimum degree is 1."""
    if total <= cycle_len:
        raise ValueError("total vertex count must exceed the cycle length")
    edges = [(i, (i + 1) % cycle_len) for i in range(cycle_len)]
    for v in range(cycle_len, total):
        edges.append((rng.randrange(v), v))
    return Graph(total, edges)


def random_tree(rng: random.Random, n: int) -> Graph:
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return Graph(n, edges)


def random_k_lists(rng: random.Random, vertices: Iterable[int], k: int,
                   universe_size: int) -> ListAssignment:
    colors = range(1, universe_size + 1)
    return ListAssignment({v: rng.sample(colors, k) for v in vertices})
