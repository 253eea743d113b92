"""Backtracking over partial assignments with constraint propagation.

Every enumeration in this package (homomorphisms, cocycles, sections,
small Cayley tables) is a search for total maps ``position -> value``
subject to equational constraints.  The engine below assigns free
positions in index order, and after every placement runs a caller
supplied ``sweep`` that re-examines the constraints: a sweep may report
a conflict, or pin further positions whose values are now forced.
Solutions come out in lexicographic order of the full value tuple,
which is the canonical order used throughout.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

# sweep(assign) -> None on conflict, else implied (position, value) pins
Sweep = Callable[[list], "list[tuple[int, int]] | None"]


def search_assignments(
    size: int,
    pinned: Iterable[tuple[int, int]],
    candidates: Sequence[Sequence[int]],
    allowed: Sequence[frozenset[int]],
    sweep: Sweep,
    first_only: bool = False,
) -> list[tuple[int, ...]]:
    """All total assignments extending ``pinned`` that survive ``sweep``.

    ``candidates[p]`` is the ordered branching domain for position ``p``;
    ``allowed[p]`` additionally vets values forced by propagation.
    """
    assign: list[int | None] = [None] * size
    trail: list[int] = []
    if not _settle(assign, trail, list(pinned), allowed, sweep):
        return []
    out: list[tuple[int, ...]] = []
    _extend(assign, 0, candidates, allowed, sweep, out, first_only)
    return out


def _settle(
    assign: list,
    trail: list[int],
    pending: list[tuple[int, int]],
    allowed: Sequence[frozenset[int]],
    sweep: Sweep,
) -> bool:
    """Place ``pending`` pins and propagate to a fixpoint; False on conflict."""
    while True:
        progressed = False
        for pos, val in pending:
            cur = assign[pos]
            if cur is not None:
                if cur != val:
                    return False
                continue
            if val not in allowed[pos]:
                return False
            assign[pos] = val
            trail.append(pos)
            progressed = True
        implied = sweep(assign)
        if implied is None:
            return False
        pending = [(p, v) for p, v in implied if assign[p] != v]
        if not pending:
            return True
        if not progressed and all(assign[p] is not None for p, _ in pending):
            # every remaining pin contradicts an existing value
            return False


def _extend(
    assign: list,
    start: int,
    candidates: Sequence[Sequence[int]],
    allowed: Sequence[frozenset[int]],
    sweep: Sweep,
    out: list[tuple[int, ...]],
    first_only: bool,
) -> bool:
    pos = start
    while pos < len(assign) and assign[pos] is not None:
        pos += 1
    if pos == len(assign):
        out.append(tuple(assign))
        return first_only
    for val in candidates[pos]:
        trail: list[int] = []
        if _settle(assign, trail, [(pos, val)], allowed, sweep):
            if _extend(assign, pos + 1, candidates, allowed, sweep, out, first_only):
                for p in trail:
                    assign[p] = None
                return True
        for p in trail:
            assign[p] = None
    return False


class UnionFind:
    """Partition of ``range(n)`` with path-splitting finds."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            x, parent[x] = parent[x], parent[parent[x]]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx

    def groups(self) -> tuple[tuple[int, ...], ...]:
        """Components as sorted tuples, ordered by least member."""
        by_root: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            by_root.setdefault(self.find(x), []).append(x)
        return tuple(tuple(sorted(g)) for _, g in sorted(by_root.items()))
