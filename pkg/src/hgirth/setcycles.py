"""Cyclic arrangements of vertex sets with a system of distinct representatives.

A *set-cycle* of length j over a family of vertex sets is a cyclic
arrangement of j distinct members such that the intersections of successive
pairs admit j pairwise-distinct representative vertices.  The same engine
drives hypergraph set-cycle detection and the weak cycle search over pattern
copies (whose vertex sets may repeat; members are identified by index).
"""

from __future__ import annotations

from typing import Iterator, Optional, Sequence

from .errors import SearchBudgetError

DEFAULT_NODE_BUDGET = 10**7


def sdr(intersections: Sequence[Sequence[int]]) -> Optional[list[int]]:
    """System of distinct representatives via augmenting paths, or None.

    Deterministic: candidates are tried in sorted order.
    """
    owner: dict[int, int] = {}
    pools = [sorted(set(c)) for c in intersections]

    def assign(k: int, seen: set[int]) -> bool:
        for v in pools[k]:
            if v in seen:
                continue
            seen.add(v)
            if v not in owner or assign(owner[v], seen):
                owner[v] = k
                return True
        return False

    for k in range(len(pools)):
        if not assign(k, set()):
            return None
    reps: list[int] = [0] * len(pools)
    for v, k in owner.items():
        reps[k] = v
    return reps


class SetCycleSearch:
    """Exhaustive SDR-cycle search over an indexed family of vertex sets.

    `alive` is consulted live, so members may be deleted between queries
    without rebuilding the index.  The explored-state budget is cumulative
    across queries on the same instance.
    """

    def __init__(self, sets: Sequence[frozenset[int]], *, alive: Optional[set[int]] = None,
                 budget: Optional[int] = DEFAULT_NODE_BUDGET):
        self.sets = [frozenset(s) for s in sets]
        self.alive = alive
        self.budget = budget
        self.explored = 0
        self.vert_index: dict[int, list[int]] = {}
        for i, s in enumerate(self.sets):
            for v in s:
                self.vert_index.setdefault(v, []).append(i)

    def _step(self) -> None:
        self.explored += 1
        if self.budget is not None and self.explored > self.budget:
            raise SearchBudgetError(self.explored, self.budget, "set-cycle search")

    def _is_alive(self, i: int) -> bool:
        return self.alive is None or i in self.alive

    def _neighbors_above(self, i: int, floor: int, exclude: Sequence[int]) -> list[int]:
        out: set[int] = set()
        for v in self.sets[i]:
            for j in self.vert_index.get(v, ()):
                if j > floor and j != i and self._is_alive(j):
                    out.add(j)
        out.difference_update(exclude)
        return sorted(out)

    def cycles(self, length: int, anchor: Optional[int] = None
               ) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Yield (indices, reps) for every set-cycle of exactly `length`
        alive members, each arrangement once.

        Canonical form: indices[0] is the minimum index; for length >= 3 the
        orientation with indices[1] < indices[-1] is reported.  reps[t] lies
        in sets[indices[t-1]] & sets[indices[t]] (cyclically), all distinct.
        With `anchor`, only arrangements whose minimum index equals it.
        """
        if length < 2:
            return
        sets = self.sets

        def dfs(seq: list[int], inters: list[frozenset[int]]
                ) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
            first = seq[0]
            last = seq[-1]
            if len(seq) == length - 1:
                cands = [j for j in self._neighbors_above(last, first, seq)
                         if sets[j] & sets[first]]
            else:
                cands = self._neighbors_above(last, first, seq)
            for j in cands:
                self._step()
                inter = sets[last] & sets[j]
                if not inter:
                    continue
                inters.append(inter)
                if sdr(inters) is None:
                    inters.pop()
                    continue
                seq.append(j)
                if len(seq) == length:
                    if seq[1] < seq[-1]:
                        closing = sets[j] & sets[first]
                        if closing:
                            reps = sdr([closing] + inters)
                            if reps is not None:
                                yield tuple(seq), tuple(reps)
                else:
                    yield from dfs(seq, inters)
                seq.pop()
                inters.pop()

        starts = [anchor] if anchor is not None else range(len(sets))
        for i0 in starts:
            if i0 is None or not (0 <= i0 < len(sets)) or not self._is_alive(i0):
                continue
            if length == 2:
                for j in self._neighbors_above(i0, i0, (i0,)):
                    self._step()
                    inter = sets[i0] & sets[j]
                    if len(inter) >= 2:
                        a, b = sorted(inter)[:2]
                        yield (i0, j), (a, b)
            else:
                yield from dfs([i0], [])

    def first_cycle(self, length: int, anchor: Optional[int] = None
                    ) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
        return next(self.cycles(length, anchor), None)
