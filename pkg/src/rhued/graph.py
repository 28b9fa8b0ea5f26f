"""Simple undirected graphs and their tree / cycle / unicyclic structure.

Vertices are dense integer ids 0..n-1.  Graphs are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field

TREE = "tree"
CYCLE = "cycle"
UNICYCLIC = "unicyclic"
OTHER = "other"


class GraphStructureError(ValueError):
    """Input graph does not have the structure an operation requires."""


class EdgeListParseError(ValueError):
    """Malformed edge-list text; carries the offending line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Rejects self-loops and out-of-range endpoints; duplicate edges collapse.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            norm.add((min(u, v), max(u, v)))
        self.n = n
        self.edges = tuple(sorted(norm))
        adj = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(nb)) for nb in adj)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(nb) for nb in self._adj), default=0)

    def min_degree(self) -> int:
        return min((len(nb) for nb in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def adjacency(self) -> dict[int, tuple[int, ...]]:
        return {v: self._adj[v] for v in range(self.n)}

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def distance(self, u: int, v: int) -> int:
        """BFS distance; -1 if unreachable."""
        if u == v:
            return 0
        dist = {u: 0}
        frontier = [u]
        while frontier:
            nxt = []
            for x in frontier:
                for w in self._adj[x]:
                    if w not in dist:
                        dist[w] = dist[x] + 1
                        if w == v:
                            return dist[w]
                        nxt.append(w)
            frontier = nxt
        return -1

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class Classification:
    """Structural class of a graph plus the witness that certifies it."""

    kind: str
    leaves: tuple[int, ...] = ()
    cycle: tuple[int, ...] = ()
    detail: str = ""


@dataclass(frozen=True)
class PendantTree:
    """A pendant tree hanging at a cycle vertex, augmented with the two
    cycle neighbors of its root attached as leaves.

    `adj` keeps the original vertex ids of the host graph.  `cycle_prev`
    and `cycle_next` are the root's predecessor/successor on the cycle;
    both have degree 1 here even when the host cycle is a triangle (the
    edge between them is deliberately not part of this tree).
    """

    adj: dict[int, tuple[int, ...]]
    root: int
    cycle_prev: int
    cycle_next: int

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.adj))

    @property
    def anchors(self) -> tuple[int, int, int]:
        return (self.root, self.cycle_prev, self.cycle_next)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max(len(nb) for nb in self.adj.values())

    def internal_vertices(self) -> tuple[int, ...]:
        skip = {self.root, self.cycle_prev, self.cycle_next}
        return tuple(sorted(v for v in self.adj if v not in skip))

    def to_graph(self) -> tuple[Graph, tuple[int, ...]]:
        """Dense relabeling: returns (graph, labels) with labels[i] = original id."""
        labels = self.vertices
        index = {v: i for i, v in enumerate(labels)}
        edges = {(min(index[u], index[w]), max(index[u], index[w]))
                 for u, nbs in self.adj.items() for w in nbs}
        return Graph(len(labels), edges), labels


@dataclass(frozen=True)
class UnicyclicDecomposition:
    """The unique cycle, its branch vertices, and their pendant trees."""

    cycle: tuple[int, ...]
    m_set: frozenset[int]
    trees: dict[int, PendantTree] = field(compare=False)


def classify(g: Graph) -> Classification:
    """Classify as tree / cycle / unicyclic / other, with witness data.

    Connected with |E| = |V|-1 is a tree (leaf list as witness); connected
    2-regular is a cycle; connected with |E| = |V| but not 2-regular is
    unicyclic (so it has a vertex of degree 1).  Everything else, including
    empty and disconnected graphs, is "other".
    """
    if g.n == 0:
        return Classification(OTHER, detail="empty graph")
    if not g.is_connected():
        return Classification(OTHER, detail="disconnected")
    if g.edge_count == g.n - 1:
        leaves = tuple(v for v in g.vertices if g.degree(v) == 1)
        return Classification(TREE, leaves=leaves)
    if g.edge_count == g.n:
        cyc = _strip_to_cycle(g)
        if len(cyc) == g.n:
            return Classification(CYCLE, cycle=cyc)
        return Classification(UNICYCLIC, cycle=cyc)
    return Classification(OTHER, detail="more than one independent cycle")


def find_unique_cycle(g: Graph) -> tuple[int, ...]:
    """The unique cycle of a cycle or unicyclic graph, in traversal order.

    Canonical orientation: starts at the lowest cycle vertex id and steps
    to its lower-numbered cycle neighbor, so the output is deterministic
    and stable under relabeling round-trips.
    """
    c = classify(g)
    if c.kind not in (CYCLE, UNICYCLIC):
        raise GraphStructureError(f"graph is {c.kind}, expected cycle or unicyclic")
    return c.cycle


def _strip_to_cycle(g: Graph) -> tuple[int, ...]:
    """Iteratively delete degree-1 vertices; traverse the 2-regular core."""
    deg = [g.degree(v) for v in g.vertices]
    queue = [v for v in g.vertices if deg[v] == 1]
    alive = [True] * g.n
    while queue:
        u = queue.pop()
        alive[u] = False
        for w in g.neighbors(u):
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    core = [v for v in g.vertices if alive[v]]
    if not core or any(deg[v] != 2 for v in core):
        raise GraphStructureError("leaf stripping did not leave a 2-regular core")
    start = min(core)
    core_set = set(core)
    first = min(w for w in g.neighbors(start) if w in core_set)
    order = [start, first]
    prev, cur = start, first
    while True:
        nxt = next(w for w in g.neighbors(cur) if w in core_set and w != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return tuple(order)


def decompose_unicyclic(g: Graph) -> UnicyclicDecomposition:
    """Split a unicyclic graph into its cycle and the pendant trees hanging
    at every cycle vertex of degree >= 3.

    Cycle indices wrap around: the predecessor of the first cycle vertex is
    the last one, and vice versa.
    """
    c = classify(g)
    if c.kind != UNICYCLIC:
        raise GraphStructureError(f"graph is {c.kind}, expected unicyclic")
    cycle = c.cycle
    n = len(cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    cycle_set = set(cycle)
    m_set = frozenset(v for v in cycle if g.degree(v) >= 3)

    trees: dict[int, PendantTree] = {}
    for v in sorted(m_set):
        prev = cycle[(pos[v] - 1) % n]
        nxt = cycle[(pos[v] + 1) % n]
        # S_v = component of v after removing the cycle's edges; in a
        # unicyclic graph it cannot reach any other cycle vertex.
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if u in cycle_set and w in cycle_set:
                    continue
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        adj: dict[int, list[int]] = {u: [] for u in comp}
        for u in comp:
            for w in g.neighbors(u):
                if w in comp and not (u in cycle_set and w in cycle_set):
                    adj[u].append(w)
        adj[v].extend([prev, nxt])
        adj[prev] = [v]
        adj[nxt] = [v]
        trees[v] = PendantTree(
            adj={u: tuple(sorted(nbs)) for u, nbs in adj.items()},
            root=v, cycle_prev=prev, cycle_next=nxt,
        )
    return UnicyclicDecomposition(cycle=cycle, m_set=m_set, trees=trees)


def square_graph(g: Graph) -> Graph:
    """Same vertices; edges join every pair at distance at most 2."""
    edges = set(g.edges)
    for v in g.vertices:
        nbs = g.neighbors(v)
        for i in range(len(nbs)):
            for j in range(i + 1, len(nbs)):
                edges.add((nbs[i], nbs[j]))
    return Graph(g.n, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    One `u v` pair per line (whitespace separated, nonnegative ints),
    `#` starts a comment, blank lines are ignored.  Vertex count is
    max id + 1 unless an `n <count>` header line is present.
    """
    declared_n: int | None = None
    edges: list[tuple[int, int]] = []
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2:
                raise EdgeListParseError(lineno, "header must be `n <count>`")
            try:
                declared_n = int(parts[1])
            except ValueError:
                raise EdgeListParseError(lineno, f"bad vertex count {parts[1]!r}") from None
            if declared_n < 0:
                raise EdgeListParseError(lineno, "vertex count must be nonnegative")
            continue
        if len(parts) != 2:
            raise EdgeListParseError(lineno, f"expected `u v`, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(lineno, f"non-integer endpoint in {line!r}") from None
        if u < 0 or v < 0:
            raise EdgeListParseError(lineno, "vertex ids must be nonnegative")
        if u == v:
            raise EdgeListParseError(lineno, f"self-loop at {u}")
        edges.append((u, v))
        max_id = max(max_id, u, v)
    n = declared_n if declared_n is not None else max_id + 1
    if max_id >= n:
        raise EdgeListParseError(0, f"vertex id {max_id} exceeds declared count {n}")
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
