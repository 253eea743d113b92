"""Finite monoids as validated Cayley tables, and the primitives built on them.

Elements are dense indices ``0..n-1``; a monoid is its ``n x n``
multiplication table plus the index of the two-sided identity.  All
structures are immutable and hashable, so they can be shared freely and
used as dictionary keys.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Union

from .search import search_assignments


class MonoidError(Exception):
    """Base class for structural errors raised by this package."""


class IndexOutOfRange(MonoidError):
    """A table entry or element reference is outside ``0..n-1``."""


class NotAssociative(MonoidError):
    """Associativity fails; carries the witnessing triple."""

    def __init__(self, x: int, y: int, z: int):
        self.witness = (x, y, z)
        super().__init__(f"(x*y)*z != x*(y*z) at (x, y, z) = ({x}, {y}, {z})")


class NoIdentity(MonoidError):
    """No element acts as a two-sided identity."""


class SizeBoundExceeded(MonoidError):
    """An exhaustive enumeration was asked for beyond its practical bound."""


class ParentMismatch(MonoidError):
    """Submonoids passed to an operation live in different parent monoids."""


class NotInvertible(MonoidError):
    """The element is not a unit of the relevant (sub)monoid."""


def _associativity_witness(table: Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    n = len(table)
    rng = range(n)
    for x in rng:
        row_x = table[x]
        for y in rng:
            row_xy = table[row_x[y]]
            row_y = table[y]
            for z in rng:
                if row_xy[z] != row_x[row_y[z]]:
                    return (x, y, z)
    return None


@dataclass(frozen=True)
class FiniteMonoid:
    """An associative Cayley table with a distinguished two-sided identity.

    Validation happens at construction: entries in range, associativity
    (with a witness triple on failure), and the identity law at the
    claimed index.  A two-sided identity is automatically unique.
    """

    table: tuple[tuple[int, ...], ...]
    identity: int
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0:
            raise NoIdentity("a monoid needs at least one element")
        for row in table:
            if len(row) != n:
                raise IndexOutOfRange(f"table is not {n}x{n}")
            for v in row:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise IndexOutOfRange(f"table entry {v!r} not in 0..{n - 1}")
        witness = _associativity_witness(table)
        if witness is not None:
            raise NotAssociative(*witness)
        e = self.identity
        if not isinstance(e, int) or not 0 <= e < n:
            raise NoIdentity(f"identity index {e!r} out of range")
        if any(table[e][x] != x or table[x][e] != x for x in range(n)):
            raise NoIdentity(f"element {e} is not a two-sided identity")
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != n:
                raise IndexOutOfRange("labels must match the table size")
            object.__setattr__(self, "labels", labels)

    @property
    def size(self) -> int:
        return len(self.table)

    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inverse(self, x: int) -> int | None:
        """Two-sided inverse of ``x``, or None."""
        e = self.identity
        row = self.table[x]
        for y in self.elements():
            if row[y] == e and self.table[y][x] == e:
                return y
        return None

    def is_commutative(self) -> bool:
        t = self.table
        return all(t[x][y] == t[y][x] for x in self.elements() for y in self.elements())

    def is_group(self) -> bool:
        return all(self.inverse(x) is not None for x in self.elements())

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def __repr__(self) -> str:
        return f"FiniteMonoid(size={self.size}, identity={self.identity})"


@dataclass(frozen=True)
class SubMonoid:
    """A sorted subset of a parent monoid, containing the identity and closed."""

    parent: FiniteMonoid
    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        n = self.parent.size
        if any(not isinstance(x, int) or not 0 <= x < n for x in members):
            raise IndexOutOfRange(f"members {members} not within 0..{n - 1}")
        if any(a >= b for a, b in zip(members, members[1:])):
            raise MonoidError("members must be strictly sorted")
        if self.parent.identity not in members:
            raise MonoidError("a submonoid must contain the identity")
        table = self.parent.table
        inside = frozenset(members)
        for x in members:
            row = table[x]
            for y in members:
                if row[y] not in inside:
                    raise MonoidError(f"not closed: {x}*{y} = {row[y]} escapes the subset")

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    @cached_property
    def positions(self) -> dict[int, int]:
        return {x: i for i, x in enumerate(self.members)}

    def __contains__(self, x: int) -> bool:
        return x in self.member_set

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def position(self, x: int) -> int:
        return self.positions[x]

    def as_monoid(self) -> FiniteMonoid:
        """The induced monoid on this subset, reindexed to ``0..k-1``."""
        pos = self.positions
        table = tuple(
            tuple(pos[self.parent.table[x][y]] for y in self.members) for x in self.members
        )
        labels = None
        if self.parent.labels is not None:
            labels = tuple(self.parent.labels[x] for x in self.members)
        return FiniteMonoid(table, pos[self.parent.identity], labels)

    def __repr__(self) -> str:
        return f"SubMonoid({self.members})"


Carrier = Union[FiniteMonoid, SubMonoid]


def carrier_monoid(c: Carrier) -> FiniteMonoid:
    """The ambient monoid whose indices a carrier's elements live in."""
    return c.parent if isinstance(c, SubMonoid) else c


def carrier_elements(c: Carrier) -> tuple[int, ...]:
    if isinstance(c, SubMonoid):
        return c.members
    return tuple(range(c.size))


def carrier_identity(c: Carrier) -> int:
    return carrier_monoid(c).identity


@dataclass(frozen=True)
class ElementMap:
    """A total map between carriers, stored as a value table.

    ``values[i]`` is the image of the ``i``-th domain element; images are
    expressed in the codomain's ambient index space.
    """

    domain: Carrier
    codomain: Carrier
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        dom = carrier_elements(self.domain)
        if len(values) != len(dom):
            raise MonoidError(f"expected {len(dom)} values, got {len(values)}")
        target = frozenset(carrier_elements(self.codomain))
        for v in values:
            if v not in target:
                raise MonoidError(f"image {v} is not a codomain element")

    @cached_property
    def _positions(self) -> dict[int, int]:
        return {x: i for i, x in enumerate(carrier_elements(self.domain))}

    def __call__(self, x: int) -> int:
        return self.values[self._positions[x]]

    def is_homomorphism(self) -> bool:
        dom_tab = carrier_monoid(self.domain).table
        cod_tab = carrier_monoid(self.codomain).table
        if self(carrier_identity(self.domain)) != carrier_identity(self.codomain):
            return False
        elems = carrier_elements(self.domain)
        return all(
            self(dom_tab[x][y]) == cod_tab[self(x)][self(y)] for x in elems for y in elems
        )

    def __repr__(self) -> str:
        return f"ElementMap({self.values})"


def identity_map(c: Carrier) -> ElementMap:
    return ElementMap(c, c, carrier_elements(c))


def zero_map(domain: Carrier, codomain: Carrier) -> ElementMap:
    """The map sending every element to the codomain's identity."""
    e = carrier_identity(codomain)
    return ElementMap(domain, codomain, (e,) * len(carrier_elements(domain)))


def compose(outer: ElementMap, inner: ElementMap) -> ElementMap:
    """``outer`` after ``inner``; every inner image must be an outer argument."""
    try:
        values = tuple(outer(v) for v in inner.values)
    except KeyError as exc:
        raise MonoidError(f"maps do not compose: {exc} outside outer domain") from None
    return ElementMap(inner.domain, outer.codomain, values)


@dataclass(frozen=True)
class MonoidIso:
    """A pair of mutually inverse bijective homomorphisms."""

    forward: ElementMap
    backward: ElementMap

    def __post_init__(self):
        fwd, bwd = self.forward, self.backward
        if not (fwd.is_homomorphism() and bwd.is_homomorphism()):
            raise MonoidError("isomorphism components must be homomorphisms")
        dom = carrier_elements(fwd.domain)
        cod = carrier_elements(fwd.codomain)
        if sorted(fwd.values) != sorted(cod) or sorted(bwd.values) != sorted(dom):
            raise MonoidError("isomorphism components must be bijections")
        if any(bwd(fwd(x)) != x for x in dom) or any(fwd(bwd(y)) != y for y in cod):
            raise MonoidError("forward and backward maps are not mutually inverse")


# ---------------------------------------------------------------------------
# construction and basic structure


def from_table(
    table: Sequence[Sequence[int]], labels: Sequence[str] | None = None
) -> FiniteMonoid:
    """Validate a Cayley table and locate its identity."""
    rows = tuple(tuple(row) for row in table)
    n = len(rows)
    if n == 0:
        raise NoIdentity("a monoid needs at least one element")
    for row in rows:
        if len(row) != n:
            raise IndexOutOfRange(f"table is not {n}x{n}")
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise IndexOutOfRange(f"table entry {v!r} not in 0..{n - 1}")
    witness = _associativity_witness(rows)
    if witness is not None:
        raise NotAssociative(*witness)
    for e in range(n):
        if all(rows[e][x] == x and rows[x][e] == x for x in range(n)):
            return FiniteMonoid(rows, e, tuple(labels) if labels is not None else None)
    raise NoIdentity("no two-sided identity in the table")


def units(c: Carrier) -> SubMonoid:
    """The group of invertible elements, as a submonoid of the ambient monoid.

    For a ``SubMonoid`` argument the inverse must itself lie in the subset.
    """
    parent = carrier_monoid(c)
    elems = carrier_elements(c)
    inside = frozenset(elems)
    e = parent.identity
    table = parent.table
    found = []
    for x in elems:
        for y in elems:
            if table[x][y] == e and table[y][x] == e and y in inside:
                found.append(x)
                break
    return SubMonoid(parent, tuple(sorted(found)))


def inverse_in(c: Carrier, x: int) -> int:
    """The inverse of ``x`` inside the carrier; raises NotInvertible."""
    parent = carrier_monoid(c)
    e = parent.identity
    for y in carrier_elements(c):
        if parent.table[x][y] == e and parent.table[y][x] == e:
            return y
    raise NotInvertible(f"element {x} has no inverse in the carrier")


def submonoid_closure(M: FiniteMonoid, generators: Iterable[int]) -> SubMonoid:
    """Smallest submonoid containing the generators (and the identity)."""
    gens = list(generators)
    for g in gens:
        if not isinstance(g, int) or not 0 <= g < M.size:
            raise IndexOutOfRange(f"generator {g!r} not in 0..{M.size - 1}")
    table = M.table
    closed = {M.identity}
    closed.update(gens)
    queue = list(closed)
    while queue:
        y = queue.pop()
        for x in list(closed):
            for p in (table[x][y], table[y][x]):
                if p not in closed:
                    closed.add(p)
                    queue.append(p)
    return SubMonoid(M, tuple(sorted(closed)))


_SUBSET_SCAN_LIMIT = 20
_SUBMONOID_HARD_LIMIT = 24


def enumerate_submonoids(M: FiniteMonoid) -> list[SubMonoid]:
    """All identity-containing closed subsets, sorted by (size, members)."""
    n = M.size
    if n > _SUBMONOID_HARD_LIMIT:
        raise SizeBoundExceeded(f"submonoid enumeration capped at order {_SUBMONOID_HARD_LIMIT}")
    if n <= _SUBSET_SCAN_LIMIT:
        found = _submonoids_by_subset_scan(M)
    else:
        found = _submonoids_by_closure_walk(M)
    found.sort(key=lambda ms: (len(ms), ms))
    return [SubMonoid(M, ms) for ms in found]


def _submonoids_by_subset_scan(M: FiniteMonoid) -> list[tuple[int, ...]]:
    table = M.table
    e = M.identity
    others = [x for x in M.elements() if x != e]
    out = []
    for bits in range(1 << len(others)):
        subset = [e] + [x for i, x in enumerate(others) if bits >> i & 1]
        inside = frozenset(subset)
        if all(table[x][y] in inside for x in subset for y in subset):
            out.append(tuple(sorted(subset)))
    return out


def _submonoids_by_closure_walk(M: FiniteMonoid) -> list[tuple[int, ...]]:
    # grow each known submonoid by one generator; every submonoid is reached
    seed = submonoid_closure(M, ()).members
    found = {seed}
    frontier = [seed]
    while frontier:
        fresh = []
        for ms in frontier:
            for x in M.elements():
                if x not in ms:
                    bigger = submonoid_closure(M, ms + (x,)).members
                    if bigger not in found:
                        found.add(bigger)
                        fresh.append(bigger)
        frontier = fresh
    return list(found)


def is_subgroup(M: FiniteMonoid, S: SubMonoid) -> bool:
    """True iff every element of ``S`` has its inverse inside ``S``."""
    if S.parent != M:
        raise ParentMismatch("submonoid belongs to a different monoid")
    e = M.identity
    table = M.table
    return all(
        any(table[x][y] == e and table[y][x] == e for y in S.members) for x in S.members
    )


def opposite(M: FiniteMonoid) -> FiniteMonoid:
    """Transpose the table; an involution on Cayley tables."""
    n = M.size
    table = tuple(tuple(M.table[y][x] for y in range(n)) for x in range(n))
    return FiniteMonoid(table, M.identity, M.labels)


def direct_product(M: FiniteMonoid, N: FiniteMonoid) -> FiniteMonoid:
    """Componentwise product on pairs, indexed row-major (M-index major)."""
    nn = N.size
    idx = lambda a, b: a * nn + b
    table = tuple(
        tuple(
            idx(M.table[a1][a2], N.table[b1][b2])
            for a2 in M.elements()
            for b2 in N.elements()
        )
        for a1 in M.elements()
        for b1 in N.elements()
    )
    labels = None
    if M.labels is not None or N.labels is not None:
        labels = tuple(
            f"({M.label(a)},{N.label(b)})" for a in M.elements() for b in N.elements()
        )
    return FiniteMonoid(table, idx(M.identity, N.identity), labels)


# ---------------------------------------------------------------------------
# homomorphism and endomorphism enumeration

_HOM_DOMAIN_LIMIT = 8


def enumerate_homs(B: Carrier, A: Carrier) -> list[ElementMap]:
    """All unit-preserving multiplicative maps ``B -> A``, in value order.

    Always contains the zero map; exhaustive only for domains of size <= 8.
    """
    dom = carrier_elements(B)
    if len(dom) > _HOM_DOMAIN_LIMIT:
        raise SizeBoundExceeded(f"homomorphism search capped at domain size {_HOM_DOMAIN_LIMIT}")
    cod = carrier_elements(A)
    k = len(dom)
    pos = {x: i for i, x in enumerate(dom)}
    dom_tab = carrier_monoid(B).table
    prod_pos = [[pos[dom_tab[x][y]] for y in dom] for x in dom]
    cod_tab = carrier_monoid(A).table
    pinned = [(pos[carrier_identity(B)], carrier_identity(A))]
    candidates = [list(cod)] * k
    allowed = [frozenset(cod)] * k

    def sweep(assign: list) -> list[tuple[int, int]] | None:
        pins = []
        known = [i for i in range(k) if assign[i] is not None]
        for i in known:
            fi = assign[i]
            row = cod_tab[fi]
            for j in known:
                target = prod_pos[i][j]
                val = row[assign[j]]
                cur = assign[target]
                if cur is None:
                    pins.append((target, val))
                elif cur != val:
                    return None
        return pins

    solutions = search_assignments(k, pinned, candidates, allowed, sweep)
    return [ElementMap(B, A, values) for values in solutions]


def endomorphism_monoid(A: FiniteMonoid) -> tuple[FiniteMonoid, list[ElementMap]]:
    """The monoid of unit-preserving multiplicative self-maps under composition.

    Returns the composition table (identity endomorphism as unit) together
    with the endomorphisms it indexes; ``(f*g)(a) = f(g(a))``.
    """
    endos = enumerate_homs(A, A)
    index = {f.values: i for i, f in enumerate(endos)}
    table = tuple(
        tuple(index[tuple(f.values[g.values[x]] for x in A.elements())] for g in endos)
        for f in endos
    )
    e = index[tuple(A.elements())]
    labels = tuple("id" if i == e else f"f{i}" for i in range(len(endos)))
    return FiniteMonoid(table, e, labels), endos


# ---------------------------------------------------------------------------
# exhaustive small-order enumeration

_MONOID_ORDER_LIMIT = 4


def enumerate_monoids(n: int, up_to_iso: bool = False) -> list[FiniteMonoid]:
    """All associative tables on ``0..n-1`` with 0 as the identity.

    With ``up_to_iso`` only the lexicographically least representative of
    each relabeling class (permutations fixing 0) is kept.  Exhaustive
    generation is capped at order 4.
    """
    if n < 1:
        raise SizeBoundExceeded("order must be at least 1")
    if n > _MONOID_ORDER_LIMIT:
        raise SizeBoundExceeded(f"exhaustive generation capped at order {_MONOID_ORDER_LIMIT}")
    pinned = [(j, j) for j in range(n)] + [(i * n, i) for i in range(1, n)]
    candidates = [list(range(n))] * (n * n)
    allowed = [frozenset(range(n))] * (n * n)
    triples = list(itertools.product(range(n), repeat=3))

    def sweep(assign: list) -> list[tuple[int, int]] | None:
        pins = []
        for x, y, z in triples:
            xy = assign[x * n + y]
            if xy is None:
                continue
            yz = assign[y * n + z]
            if yz is None:
                continue
            left = assign[xy * n + z]
            right = assign[x * n + yz]
            if left is None:
                if right is not None:
                    pins.append((xy * n + z, right))
            elif right is None:
                pins.append((x * n + yz, left))
            elif left != right:
                return None
        return pins

    flats = search_assignments(n * n, pinned, candidates, allowed, sweep)
    tables = [tuple(tuple(flat[i * n : (i + 1) * n]) for i in range(n)) for flat in flats]
    if up_to_iso:
        tables = [t for t in tables if _is_canonical_table(t, n)]
    return [FiniteMonoid(t, 0) for t in tables]


def _relabeled_table(table, perm):
    n = len(table)
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(tuple(perm[table[inv[x]][inv[y]]] for y in range(n)) for x in range(n))


def _is_canonical_table(table, n: int) -> bool:
    for tail in itertools.permutations(range(1, n)):
        perm = (0,) + tail
        if _relabeled_table(table, perm) < table:
            return False
    return True


def find_isomorphism(M: FiniteMonoid, N: FiniteMonoid) -> MonoidIso | None:
    """Brute-force isomorphism search; returns the lexicographically least one."""
    n = M.size
    if n != N.size:
        return None
    if len(units(M)) != len(units(N)):
        return None
    m_tab, n_tab = M.table, N.table
    for perm in itertools.permutations(range(n)):
        if perm[M.identity] != N.identity:
            continue
        ok = True
        for x in range(n):
            px = perm[x]
            for y in range(n):
                if n_tab[px][perm[y]] != perm[m_tab[x][y]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            inv = [0] * n
            for i, p in enumerate(perm):
                inv[p] = i
            return MonoidIso(ElementMap(M, N, perm), ElementMap(N, M, tuple(inv)))
    return None
