"""Descent 1-cocycles, the unit-group action on them, and their cohomology.

A left cocycle into a submonoid A fixes A pointwise, is left
A-equivariant, and absorbs its own values on the right.  The unit group
of A acts on the set of cocycles; orbits form the descent cohomology.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .core import (
    ElementMap,
    FiniteMonoid,
    MonoidError,
    NotInvertible,
    SizeBoundExceeded,
    SubMonoid,
    inverse_in,
    is_subgroup,
    opposite,
    units,
)
from .factorization import Factorization, try_factorization
from .search import UnionFind, search_assignments


class NotASubgroup(MonoidError):
    """The first factor was required to be a subgroup."""


class NotACocycle(MonoidError):
    """The supplied map violates the cocycle conditions."""


class NotAFactorization(MonoidError):
    """The supplied pair of submonoids does not factorize the monoid."""


class NotAnAction(MonoidError):
    """The supplied data is not a group action on the objects."""


@dataclass(frozen=True)
class DescentCocycle:
    """A left or right descent 1-cocycle, stored as its value table."""

    underlying: ElementMap
    side: str  # "left" or "right"

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")

    def __call__(self, m: int) -> int:
        return self.underlying(m)

    @property
    def values(self) -> tuple[int, ...]:
        return self.underlying.values

    def __repr__(self) -> str:
        return f"DescentCocycle({self.values}, {self.side})"


@dataclass(frozen=True)
class CohomologyClasses:
    """An orbit/equivalence partition of cocycle-like objects.

    ``witnesses`` holds replayable triples (source index, unit, target
    index): acting by the unit carries the source object to the target.
    The base class, when defined, is the class of the canonical object.
    """

    objects: tuple
    class_of: tuple[int, ...]
    representatives: tuple
    witnesses: tuple[tuple[int, int, int], ...]
    base_class: int | None = None

    @property
    def class_count(self) -> int:
        return len(self.representatives)

    def classes(self) -> tuple[tuple[int, ...], ...]:
        grouped: dict[int, list[int]] = {}
        for i, c in enumerate(self.class_of):
            grouped.setdefault(c, []).append(i)
        return tuple(tuple(grouped[c]) for c in sorted(grouped))


@dataclass(frozen=True)
class ActionGroupoid:
    """Objects with unit-group morphisms and the component partition."""

    objects: tuple
    acting_group: SubMonoid
    morphisms: tuple[tuple[int, int, int], ...]
    components: tuple[tuple[int, ...], ...]


Violation = tuple[str, tuple]

_COCYCLE_DOMAIN_LIMIT = 24


def is_descent_cocycle(
    M: FiniteMonoid, A: SubMonoid, q: ElementMap, side: str = "left"
) -> tuple[bool, Violation | None]:
    """Check the three cocycle conditions pointwise; first violation wins."""
    table = M.table
    if side == "left":
        for a in A.members:
            if q(a) != a:
                return False, ("L1", (a,))
        for a in A.members:
            row = table[a]
            for m in M.elements():
                if q(row[m]) != row[q(m)]:
                    return False, ("L2", (a, m))
        for m1 in M.elements():
            row = table[m1]
            for m2 in M.elements():
                if q(row[m2]) != q(row[q(m2)]):
                    return False, ("L3", (m1, m2))
        return True, None
    if side == "right":
        for a in A.members:
            if q(a) != a:
                return False, ("R1", (a,))
        for m in M.elements():
            row = table[m]
            for a in A.members:
                if q(row[a]) != table[q(m)][a]:
                    return False, ("R2", (m, a))
        for m1 in M.elements():
            for m2 in M.elements():
                if q(table[m1][m2]) != q(table[q(m1)][m2]):
                    return False, ("R3", (m1, m2))
        return True, None
    raise ValueError("side must be 'left' or 'right'")


def enumerate_descent_cocycles(
    M: FiniteMonoid, A: SubMonoid, side: str = "left"
) -> list[DescentCocycle]:
    """All descent 1-cocycles M -> A, in lexicographic value order.

    The right-side search runs the left-side machinery on the opposite
    monoid; value tables carry over verbatim.
    """
    if side == "right":
        Mop = opposite(M)
        mirrored = enumerate_descent_cocycles(Mop, SubMonoid(Mop, A.members), "left")
        return [
            DescentCocycle(ElementMap(M, A, q.values), "right") for q in mirrored
        ]
    if side != "left":
        raise ValueError("side must be 'left' or 'right'")
    if M.size > _COCYCLE_DOMAIN_LIMIT:
        raise SizeBoundExceeded(
            f"descent cocycle search capped at order {_COCYCLE_DOMAIN_LIMIT}"
        )
    n = M.size
    table = M.table
    a_members = A.members
    candidates = [list(a_members)] * n
    allowed = [frozenset(a_members)] * n
    pinned = [(a, a) for a in a_members]

    def sweep(assign: list) -> list[tuple[int, int]] | None:
        pins = []
        # left A-equivariance pins q(a*m) from q(m)
        for a in a_members:
            row = table[a]
            for m in range(n):
                qm = assign[m]
                if qm is None:
                    continue
                target, val = row[m], row[qm]
                cur = assign[target]
                if cur is None:
                    pins.append((target, val))
                elif cur != val:
                    return None
        # q(m1*m2) = q(m1*q(m2)) links two positions once q(m2) is known
        for m2 in range(n):
            q2 = assign[m2]
            if q2 is None:
                continue
            for m1 in range(n):
                row = table[m1]
                t1, t2 = row[m2], row[q2]
                v1, v2 = assign[t1], assign[t2]
                if v1 is None:
                    if v2 is not None:
                        pins.append((t1, v2))
                elif v2 is None:
                    pins.append((t2, v1))
                elif v1 != v2:
                    return None
        return pins

    solutions = search_assignments(n, pinned, candidates, allowed, sweep)
    return [DescentCocycle(ElementMap(M, A, values), "left") for values in solutions]


def star_act(a0: int, q: DescentCocycle) -> DescentCocycle:
    """The unit a0 acting on a left cocycle: m maps to q(m*a0)*a0^{-1}."""
    if q.side != "left":
        raise ValueError("the unit action is defined on left cocycles")
    M = q.underlying.domain
    A = q.underlying.codomain
    if a0 not in A.member_set:
        raise NotInvertible(f"{a0} is not an element of the coefficient submonoid")
    inv = inverse_in(A, a0)  # raises NotInvertible outside U(A)
    table = M.table
    values = tuple(table[q(table[m][a0])][inv] for m in M.elements())
    return DescentCocycle(ElementMap(M, A, values), "left")


def cocycle_kernel(q: DescentCocycle) -> SubMonoid:
    """Preimage of the identity; always a submonoid, a subgroup when M is a group."""
    M = q.underlying.domain
    e = M.identity
    members = tuple(m for m in M.elements() if q(m) == e)
    return SubMonoid(M, members)


def fac_from_subgroup_cocycle(
    M: FiniteMonoid, L: SubMonoid, q: DescentCocycle
) -> Factorization:
    """Factorization (L, Ker q) built from a cocycle into a subgroup L.

    The second component map sends m to q(m)^{-1} * m.
    """
    if not is_subgroup(M, L):
        raise NotASubgroup(f"{L.members} is not a subgroup")
    ok, violation = is_descent_cocycle(M, L, q.underlying, "left")
    if q.side != "left" or not ok:
        raise NotACocycle(f"not a left descent cocycle: {violation}")
    kernel = cocycle_kernel(q)
    table = M.table
    second_values = tuple(table[inverse_in(L, q(m))][m] for m in M.elements())
    to_second = ElementMap(M, kernel, second_values)
    return Factorization(M, L, kernel, q.underlying, to_second)


def unit_valued_cocycles(
    M: FiniteMonoid, A: SubMonoid, B: SubMonoid
) -> list[DescentCocycle]:
    """Left cocycles whose values on the second factor B are units of A."""
    if try_factorization(M, A, B) is None:
        raise NotAFactorization(f"({A.members}, {B.members}) does not factorize the monoid")
    unit_set = units(A).member_set
    return [
        q
        for q in enumerate_descent_cocycles(M, A, "left")
        if all(q(b) in unit_set for b in B.members)
    ]


def conjugate_second_factor(a0: int, B: SubMonoid) -> SubMonoid:
    """The conjugate a0 * B * a0^{-1} by a unit a0."""
    M = B.parent
    inv = inverse_in(M, a0)
    table = M.table
    members = tuple(sorted(table[table[a0][b]][inv] for b in B.members))
    return SubMonoid(M, members)


def _orbit_classes(
    objects: Sequence, group_members: Sequence[int], apply: Callable[[int, object], object]
) -> tuple[tuple[int, ...], tuple, tuple[tuple[int, int, int], ...]]:
    """Orbit partition of a verified group action, with morphism witnesses."""
    index = {obj: i for i, obj in enumerate(objects)}
    dsu = UnionFind(len(objects))
    morphisms = []
    for i, obj in enumerate(objects):
        for g in group_members:
            image = apply(g, obj)
            j = index.get(image)
            if j is None:
                raise NotAnAction(f"action escapes the object set at ({g}, {obj!r})")
            morphisms.append((i, g, j))
            dsu.union(i, j)
    groups = dsu.groups()
    class_of = [0] * len(objects)
    for c, grp in enumerate(groups):
        for i in grp:
            class_of[i] = c
    representatives = tuple(objects[grp[0]] for grp in groups)
    return tuple(class_of), representatives, tuple(morphisms)


def descent_cohomology(
    M: FiniteMonoid, A: SubMonoid, restrict_unit_on: SubMonoid | None = None
) -> CohomologyClasses:
    """Orbits of the unit-group action on the left cocycles into A.

    With ``restrict_unit_on=B`` the orbits are taken on the unit-valued
    subset and pointed by the class of the component map of (A, B).
    """
    base_values = None
    if restrict_unit_on is not None:
        fac = try_factorization(M, A, restrict_unit_on)
        if fac is None:
            raise NotAFactorization(
                f"({A.members}, {restrict_unit_on.members}) does not factorize the monoid"
            )
        cocycles = unit_valued_cocycles(M, A, restrict_unit_on)
        base_values = fac.to_first.values
    else:
        cocycles = enumerate_descent_cocycles(M, A, "left")
    unit_members = units(A).members
    class_of, representatives, witnesses = _orbit_classes(
        cocycles, unit_members, star_act
    )
    base_class = None
    if base_values is not None:
        base_index = next(i for i, q in enumerate(cocycles) if q.values == base_values)
        base_class = class_of[base_index]
    return CohomologyClasses(
        tuple(cocycles), class_of, representatives, witnesses, base_class
    )


def groupoid_components(
    objects: Iterable,
    acting_group: SubMonoid,
    action: Callable[[int, object], object],
) -> ActionGroupoid:
    """The action groupoid of a unit-group action, with component partition.

    Verifies the action axioms (identity acts trivially, composition is
    respected) before recording morphisms.
    """
    objs = tuple(objects)
    parent = acting_group.parent
    if not is_subgroup(parent, acting_group):
        raise NotAnAction("the acting submonoid is not a group")
    e = parent.identity
    table = parent.table
    for x in objs:
        if action(e, x) != x:
            raise NotAnAction(f"identity moves {x!r}")
    for g1 in acting_group.members:
        for g2 in acting_group.members:
            g12 = table[g1][g2]
            for x in objs:
                if action(g12, x) != action(g1, action(g2, x)):
                    raise NotAnAction(f"composition fails at ({g1}, {g2}, {x!r})")
    class_of, _, morphisms = _orbit_classes(objs, acting_group.members, action)
    grouped: dict[int, list[int]] = {}
    for i, c in enumerate(class_of):
        grouped.setdefault(c, []).append(i)
    components = tuple(tuple(grouped[c]) for c in sorted(grouped))
    return ActionGroupoid(objs, acting_group, morphisms, components)
