"""Enumerate copies of a pattern graph inside a host graph.

A *copy* is a distinct subgraph of the host (vertex set plus edge set)
isomorphic to the pattern.  Embeddings that differ only by a pattern
automorphism collapse to the same copy.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, Optional

from .errors import CopyCapExceededError
from .graphs import Graph, check_vertex_subset, induced_subgraph_with_order, is_two_connected, norm_edge

DEFAULT_COPY_CAP = 10**7


@dataclass(frozen=True)
class PatternGraph:
    """A pattern H together with its order and cached 2-connectivity."""

    graph: Graph
    order: int
    two_connected: bool

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("pattern must have at least 2 vertices")

    @classmethod
    def from_graph(cls, g: Graph) -> "PatternGraph":
        return cls(g, g.vertex_count, is_two_connected(g))


@dataclass(frozen=True)
class SubgraphCopy:
    """One copy of the pattern in the host: sorted vertices + sorted edges."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def key(self) -> tuple:
        return (self.vertices, self.edges)

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)


def _map_order(h: Graph) -> list[int]:
    """Pattern-vertex ordering for the backtracking search: start from the
    highest-degree vertex, then prefer vertices adjacent to already-placed
    ones (new components re-seeded by degree)."""
    remaining = set(h.vertices())
    order: list[int] = []
    placed: set[int] = set()
    while remaining:
        adjacent = [v for v in remaining if h.neighbors(v) & placed]
        if adjacent:
            v = max(adjacent, key=lambda x: (len(h.neighbors(x) & placed), h.degree(x), -x))
        else:
            v = max(remaining, key=lambda x: (h.degree(x), -x))
        order.append(v)
        placed.add(v)
        remaining.remove(v)
    return order


def _search(g: Graph, h: PatternGraph, *, through: Optional[int] = None,
            first_only: bool = False, cap: int = DEFAULT_COPY_CAP) -> set[tuple]:
    """Backtracking over vertex maps; collects copies as canonical
    (vertices, edges) keys.  With `through`, only copies containing that
    host vertex are sought.  With `first_only`, stops at the first copy."""
    hp = h.graph
    porder = _map_order(hp)
    pneigh = {v: hp.neighbors(v) for v in hp.vertices()}
    pdeg = {v: hp.degree(v) for v in hp.vertices()}
    found: set[tuple] = set()

    gdeg = {v: g.degree(v) for v in g.vertices()}
    gadj = g.adjacency

    def emit(mapping: dict[int, int]) -> bool:
        verts = tuple(sorted(mapping.values()))
        edges = tuple(sorted(norm_edge(mapping[a], mapping[b]) for a, b in hp.edges))
        found.add((verts, edges))
        if len(found) > cap:
            raise CopyCapExceededError(cap)
        return first_only

    def backtrack(idx: int, mapping: dict[int, int], used: set[int]) -> bool:
        if idx == len(porder):
            if through is not None and through not in used:
                return False
            return emit(mapping)
        pv = porder[idx]
        placed_neighbors = [q for q in pneigh[pv] if q in mapping]
        if placed_neighbors:
            candidates = set(gadj[mapping[placed_neighbors[0]]])
            for q in placed_neighbors[1:]:
                candidates &= gadj[mapping[q]]
            candidates -= used
            cand_iter = sorted(candidates)
        else:
            cand_iter = [v for v in g.vertices() if v not in used]
        must_place_through = (
            through is not None
            and through not in used
            and idx == len(porder) - 1
        )
        for gv in cand_iter:
            if gdeg[gv] < pdeg[pv]:
                continue
            if must_place_through and gv != through:
                continue
            mapping[pv] = gv
            used.add(gv)
            if backtrack(idx + 1, mapping, used):
                return True
            used.remove(gv)
            del mapping[pv]
        return False

    backtrack(0, {}, set())
    return found


def enumerate_copies(g: Graph, h: PatternGraph, cap: int = DEFAULT_COPY_CAP) -> list[SubgraphCopy]:
    """All distinct subgraphs of g isomorphic to h, in lexicographic order
    of (vertex tuple, edge tuple).  Raises CopyCapExceededError past `cap`."""
    if h.order > g.vertex_count:
        return []
    keys = _search(g, h, cap=cap)
    return [SubgraphCopy(v, e) for v, e in sorted(keys)]


def contains_copy(g: Graph, h: PatternGraph, through: Optional[int] = None) -> bool:
    """True iff g contains a copy of h (optionally one through a given
    host vertex); short-circuits on the first match."""
    if h.order > g.vertex_count:
        return False
    return bool(_search(g, h, through=through, first_only=True))


def copies_within(g: Graph, h: PatternGraph, members: Iterable[int],
                  cap: int = DEFAULT_COPY_CAP) -> list[SubgraphCopy]:
    """Copies of h inside the subgraph induced on `members`, reported in
    host labels."""
    s = check_vertex_subset(g, members)
    if len(s) < h.order:
        return []
    sub, order = induced_subgraph_with_order(g, s)
    lift = {i + 1: v for i, v in enumerate(order)}
    out = []
    for c in enumerate_copies(sub, h, cap=cap):
        verts = tuple(sorted(lift[v] for v in c.vertices))
        edges = tuple(sorted(norm_edge(lift[a], lift[b]) for a, b in c.edges))
        out.append(SubgraphCopy(verts, edges))
    out.sort(key=lambda c: c.key())
    return out


def is_copy_of(g: Graph, copy: SubgraphCopy, h: PatternGraph) -> bool:
    """From-scratch check that `copy` is a valid copy of h inside g:
    correct size, edges present in g with endpoints inside the copy, and the
    (vertices, edges) subgraph isomorphic to h by brute-force matching."""
    if len(copy.vertices) != h.order:
        return False
    if len(set(copy.vertices)) != len(copy.vertices):
        return False
    vset = set(copy.vertices)
    if any(not (1 <= v <= g.vertex_count) for v in vset):
        return False
    for u, v in copy.edges:
        if norm_edge(u, v) not in g.edges:
            return False
        if u not in vset or v not in vset:
            return False
    if len(set(copy.edges)) != len(copy.edges) or len(copy.edges) != len(h.graph.edges):
        return False
    edge_set = {norm_edge(u, v) for u, v in copy.edges}
    hp = h.graph
    pverts = list(hp.vertices())
    for perm in permutations(copy.vertices):
        mapping = dict(zip(pverts, perm))
        if all(norm_edge(mapping[a], mapping[b]) in edge_set for a, b in hp.edges):
            return True
    return False
