"""Core graph and hypergraph types, text serialization, and elementary utilities.

Vertices are 1-based contiguous integers ``1..vertex_count``.  Edges are
normalized tuples ``(u, v)`` with ``u < v``.  Both containers are immutable
after construction, so instances can be shared freely across workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import (
    DuplicateEdgeError,
    MalformedLineError,
    SelfLoopError,
    VertexRangeError,
)

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..vertex_count."""

    vertex_count: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("vertex_count must be a positive integer")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (u < v):
                raise ValueError(f"edge {(u, v)} not normalized")
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise ValueError(f"edge {(u, v)} out of range 1..{self.vertex_count}")

    @classmethod
    def build(cls, vertex_count: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        return cls(vertex_count, frozenset(norm_edge(u, v) for u, v in edges))

    @property
    def n(self) -> int:
        return self.vertex_count

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.vertex_count + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)


@dataclass(frozen=True)
class Hypergraph:
    """r-uniform hypergraph on vertices 1..vertex_count; edges are sorted tuples."""

    vertex_count: int
    arity: int
    edges: frozenset[tuple[int, ...]]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("vertex_count must be a positive integer")
        if self.arity < 2:
            raise ValueError("arity must be at least 2")
        for e in self.edges:
            if len(e) != self.arity or len(set(e)) != self.arity:
                raise ValueError(f"edge {e} is not a {self.arity}-element set")
            if tuple(sorted(e)) != e:
                raise ValueError(f"edge {e} not sorted")
            if e[0] < 1 or e[-1] > self.vertex_count:
                raise ValueError(f"edge {e} out of range 1..{self.vertex_count}")

    @classmethod
    def build(cls, vertex_count: int, arity: int, edges: Iterable[Iterable[int]] = ()) -> "Hypergraph":
        return cls(vertex_count, arity, frozenset(tuple(sorted(e)) for e in edges))

    @cached_property
    def sorted_edges(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.edges))


def check_vertex_subset(g, members: Iterable[int]) -> frozenset[int]:
    """Validate that members lie in 1..g.vertex_count and return a frozenset."""
    s = frozenset(members)
    for v in s:
        if not (1 <= v <= g.vertex_count):
            raise VertexRangeError(f"subset member {v} out of range 1..{g.vertex_count}")
    return s


# ---------------------------------------------------------------------------
# edge-list text format
#
# First line: vertex count.  Each following non-empty, non-comment line:
# "u v".  Comment lines start with '#'.
# ---------------------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    lines = text.splitlines()
    header = None
    header_no = 0
    for i, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        header, header_no = stripped, i
        break
    if header is None:
        raise MalformedLineError("missing vertex-count header")
    try:
        n = int(header)
    except ValueError:
        raise MalformedLineError(f"vertex count is not an integer: {header!r}", header_no) from None
    if n < 1:
        raise MalformedLineError(f"vertex count must be positive, got {n}", header_no)

    edges: set[Edge] = set()
    for i, raw in enumerate(lines[header_no:], start=header_no + 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise MalformedLineError(f"expected two vertex indices, got {stripped!r}", i)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLineError(f"non-integer vertex index in {stripped!r}", i) from None
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", i)
        if not (1 <= u <= n and 1 <= v <= n):
            raise VertexRangeError(f"vertex index out of range 1..{n} in {stripped!r}", i)
        e = norm_edge(u, v)
        if e in edges:
            raise DuplicateEdgeError(f"duplicate edge {e[0]} {e[1]}", i)
        edges.add(e)
    return Graph(n, frozenset(edges))


def write_graph(g: Graph) -> str:
    out = [str(g.vertex_count)]
    out.extend(f"{u} {v}" for u, v in g.sorted_edges)
    return "\n".join(out) + "\n"


def read_graph_file(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph_file(path, g: Graph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_graph(g))


# ---------------------------------------------------------------------------
# elementary operations
# ---------------------------------------------------------------------------

def induced_subgraph(g: Graph, members: Iterable[int]) -> Graph:
    """Subgraph induced on `members`, relabeled 1..|members| by ascending label."""
    s = check_vertex_subset(g, members)
    if not s:
        raise ValueError("induced subgraph needs a non-empty vertex subset")
    order = sorted(s)
    relabel = {v: i + 1 for i, v in enumerate(order)}
    edges = frozenset(
        (relabel[u], relabel[v]) for u, v in g.edges if u in s and v in s
    )
    return Graph(len(order), edges)


def induced_subgraph_with_order(g: Graph, members: Iterable[int]) -> tuple[Graph, list[int]]:
    """Like induced_subgraph but also returns the ascending original labels."""
    s = check_vertex_subset(g, members)
    order = sorted(s)
    sub = induced_subgraph(g, s)
    return sub, order


def degeneracy_order(g: Graph) -> tuple[list[int], int]:
    """Repeated minimum-degree removal; ties broken by smallest label.

    Returns (removal ordering, degeneracy).  Greedy coloring along the
    reverse ordering uses at most degeneracy+1 colors.
    """
    deg = {v: g.degree(v) for v in g.vertices()}
    alive = set(g.vertices())
    ordering = []
    degeneracy = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        degeneracy = max(degeneracy, deg[v])
        ordering.append(v)
        alive.remove(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
    return ordering, degeneracy


def greedy_color_in_order(g: Graph, order: Iterable[int]) -> dict[int, int]:
    """Proper greedy coloring: each vertex gets the smallest color (1-based)
    unused on its already-colored neighbors."""
    color: dict[int, int] = {}
    for v in order:
        used = {color[w] for w in g.neighbors(v) if w in color}
        c = 1
        while c in used:
            c += 1
        color[v] = c
    return color


def ordinary_girth(g: Graph) -> float:
    """Length of a shortest cycle, or math.inf for forests.

    For every edge (u,v): shortest u-v path avoiding that edge plus the edge
    itself is a candidate shortest cycle through it.
    """
    best = math.inf
    adj = g.adjacency
    for u, v in g.sorted_edges:
        dist = {u: 0}
        frontier = [u]
        found = None
        while frontier and found is None:
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if x == u and y == v:
                        continue
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        if y == v:
                            found = dist[y]
                            break
                        nxt.append(y)
                if found is not None:
                    break
            frontier = nxt
        if found is not None:
            best = min(best, found + 1)
    return best


def connected_components(g: Graph) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for v in g.vertices():
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        stack = [v]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def is_two_connected(g: Graph) -> bool:
    """True iff g has >= 3 vertices, is connected, and has no cutvertex."""
    if g.vertex_count < 3:
        return False
    if not is_connected(g):
        return False
    full = set(g.vertices())
    for v in g.vertices():
        rest = full - {v}
        start = next(iter(rest))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y != v and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(rest):
            return False
    return True


def biconnected_blocks(g: Graph) -> list[frozenset[Edge]]:
    """Edge sets of the biconnected components (blocks); bridges are
    single-edge blocks.  Isolated vertices contribute no block."""
    index = {}
    low = {}
    counter = [0]
    stack: list[Edge] = []
    blocks: list[frozenset[Edge]] = []

    def dfs(v: int, parent: int | None) -> None:
        counter[0] += 1
        index[v] = low[v] = counter[0]
        for w in sorted(g.neighbors(v)):
            if w == parent:
                continue
            e = norm_edge(v, w)
            if w not in index:
                stack.append(e)
                dfs(w, v)
                low[v] = min(low[v], low[w])
                if low[w] >= index[v]:
                    block = set()
                    while True:
                        f = stack.pop()
                        block.add(f)
                        if f == e:
                            break
                    blocks.append(frozenset(block))
            elif index[w] < index[v]:
                stack.append(e)
                low[v] = min(low[v], index[w])

    for v in g.vertices():
        if v not in index:
            dfs(v, None)
    return blocks


def simple_cycles_upto(g: Graph, max_len: int, budget: int = 100000) -> list[tuple[int, ...]]:
    """All simple cycles of length <= max_len, each listed once.

    Canonical form: smallest vertex first, second vertex smaller than last.
    Intended for small graphs; raises SearchBudgetError past `budget` cycles.
    """
    from .errors import SearchBudgetError

    out: list[tuple[int, ...]] = []
    adj = g.adjacency

    def extend(root: int, path: list[int], onpath: set[int]) -> None:
        v = path[-1]
        for w in sorted(adj[v]):
            if w == root and len(path) >= 3 and path[1] < path[-1]:
                out.append(tuple(path))
                if len(out) > budget:
                    raise SearchBudgetError(len(out), budget, "cycle enumeration")
            elif w > root and w not in onpath and len(path) < max_len:
                path.append(w)
                onpath.add(w)
                extend(root, path, onpath)
                onpath.remove(w)
                path.pop()

    for root in g.vertices():
        extend(root, [root], {root})
    return out


# ---------------------------------------------------------------------------
# small named graphs
# ---------------------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph.build(n)


def complete_graph(n: int) -> Graph:
    return Graph.build(n, combinations(range(1, n + 1), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.build(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path_graph(n: int) -> Graph:
    return Graph.build(n, [(i, i + 1) for i in range(1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}: center is vertex 1."""
    return Graph.build(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def bowtie_graph(r: int) -> Graph:
    """Two copies of K_{r+1} sharing exactly one vertex (vertex 1)."""
    if r < 1:
        raise ValueError("r must be >= 1")
    left = list(range(1, r + 2))
    right = [1] + list(range(r + 2, 2 * r + 2))
    edges = set()
    edges.update(combinations(left, 2))
    edges.update(combinations(sorted(right), 2))
    return Graph.build(2 * r + 1, edges)
