"""Finite partial orders with repeller / saddle / attractor roles.

The relation convention throughout the package: a pair ``(a, b)`` means
``a > b``.  Stored relations are always strict and transitively closed; the
Hasse covers are derived.  Element iteration order is lexicographic
everywhere, which makes every downstream construction deterministic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import (
    CycleInRelation,
    DuplicateElement,
    IsolatedElement,
    UnknownElementInRelation,
)


class Role(enum.Enum):
    REPELLER = "repeller"
    SADDLE = "saddle"
    ATTRACTOR = "attractor"


@dataclass(frozen=True)
class FiniteOrder:
    """A finite strict partial order, transitively closed, with Hasse covers.

    Instances are immutable; all operations on them are pure functions.
    """

    elements: tuple[str, ...]
    relations: frozenset[tuple[str, str]]
    covers: frozenset[tuple[str, str]]
    _down: dict = field(default=None, compare=False, repr=False)
    _up: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        down = {e: set() for e in self.elements}
        up = {e: set() for e in self.elements}
        for a, b in self.relations:
            down[a].add(b)
            up[b].add(a)
        object.__setattr__(self, "_down", {e: frozenset(v) for e, v in down.items()})
        object.__setattr__(self, "_up", {e: frozenset(v) for e, v in up.items()})

    # -- basic queries ------------------------------------------------------

    def greater(self, a: str, b: str) -> bool:
        return (a, b) in self.relations

    def down_set(self, e: str) -> frozenset[str]:
        """Strictly smaller elements."""
        return self._down[e]

    def up_set(self, e: str) -> frozenset[str]:
        """Strictly greater elements."""
        return self._up[e]

    def comparable(self, a: str, b: str) -> bool:
        return (a, b) in self.relations or (b, a) in self.relations

    @property
    def maximal_elements(self) -> tuple[str, ...]:
        return tuple(e for e in self.elements if not self._up[e])

    @property
    def minimal_elements(self) -> tuple[str, ...]:
        return tuple(e for e in self.elements if not self._down[e])

    @property
    def north_south_pairs(self) -> tuple[tuple[str, str], ...]:
        """Cover pairs joining a maximal directly to a minimal element.

        No saddle mediates such a pair; downstream stages realize each one as
        a separate sphere carrying a north-south map.
        """
        maxes = set(self.maximal_elements)
        mins = set(self.minimal_elements)
        return tuple(
            sorted((a, b) for a, b in self.covers if a in maxes and b in mins)
        )

    def cover_children(self, e: str) -> tuple[str, ...]:
        return tuple(sorted(b for a, b in self.covers if a == e))

    def cover_parents(self, e: str) -> tuple[str, ...]:
        return tuple(sorted(a for a, b in self.covers if b == e))

    def components(self) -> tuple[tuple[str, ...], ...]:
        """Connected components of the comparability graph, canonical order."""
        seen: set[str] = set()
        out = []
        for e in self.elements:
            if e in seen:
                continue
            comp = {e}
            stack = [e]
            while stack:
                x = stack.pop()
                for y in self._down[x] | self._up[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            out.append(tuple(sorted(comp)))
        return tuple(sorted(out))

    def restrict(self, keep: set[str]) -> "FiniteOrder":
        """Induced suborder on a union of comparability components."""
        elements = tuple(e for e in self.elements if e in keep)
        relations = frozenset(
            (a, b) for a, b in self.relations if a in keep and b in keep
        )
        covers = frozenset((a, b) for a, b in self.covers if a in keep and b in keep)
        return FiniteOrder(elements, relations, covers)

    def to_dict(self) -> dict:
        return {
            "elements": list(self.elements),
            "relations": sorted([a, b] for a, b in self.relations),
            "covers": sorted([a, b] for a, b in self.covers),
        }


@dataclass(frozen=True)
class RoleMap:
    """Element roles plus saddle generations.

    A saddle has generation 1 when no saddle lies strictly above it, and
    generation k when the deepest saddle chain above it has length k - 1.
    """

    roles: dict
    generations: dict

    def repellers(self) -> tuple[str, ...]:
        return tuple(sorted(e for e, r in self.roles.items() if r is Role.REPELLER))

    def attractors(self) -> tuple[str, ...]:
        return tuple(sorted(e for e, r in self.roles.items() if r is Role.ATTRACTOR))

    def saddles(self) -> tuple[str, ...]:
        return tuple(sorted(e for e, r in self.roles.items() if r is Role.SADDLE))

    def extremals(self) -> tuple[str, ...]:
        return tuple(
            sorted(e for e, r in self.roles.items() if r is not Role.SADDLE)
        )


@dataclass(frozen=True)
class ConnectivityReport:
    """Per-extremal connectivity verdicts.

    Every maximal and minimal element appears exactly once.  ``entries`` maps
    the extremal element to ``(passed, components)`` where ``components`` is
    the partition of the relevant induced subgraph (trivial when passed).
    """

    entries: dict

    @property
    def passed(self) -> bool:
        return all(ok for ok, _ in self.entries.values())

    def failures(self) -> tuple[str, ...]:
        return tuple(sorted(e for e, (ok, _) in self.entries.items() if not ok))

    def to_dict(self) -> dict:
        return {
            e: {"passed": ok, "components": [list(c) for c in comps]}
            for e, (ok, comps) in sorted(self.entries.items())
        }


# --------------------------------------------------------------------------
# operations
# --------------------------------------------------------------------------


def _transitive_closure(elements, pairs):
    down = {e: set() for e in elements}
    for a, b in pairs:
        down[a].add(b)
    # Warshall over the small element set
    for k in elements:
        dk = down[k]
        for e in elements:
            if k in down[e]:
                down[e] |= dk
    return down


def load_order(spec: dict) -> FiniteOrder:
    """Validate an order description and build a :class:`FiniteOrder`.

    ``spec`` carries ``elements`` (list of names) and ``relations`` (list of
    ``[greater, smaller]`` pairs).  Relations may be any generating set; the
    transitive closure is always computed here, so users can write only the
    Hasse covers.
    """
    elements = list(spec.get("elements", []))
    if len(set(elements)) != len(elements):
        dupes = sorted({e for e in elements if elements.count(e) > 1})
        raise DuplicateElement(f"duplicate elements: {dupes}")
    eset = set(elements)
    pairs = []
    for item in spec.get("relations", []):
        a, b = item
        if a not in eset or b not in eset:
            missing = [x for x in (a, b) if x not in eset]
            raise UnknownElementInRelation(f"unknown elements in relation: {missing}")
        pairs.append((a, b))

    elements = sorted(elements)
    down = _transitive_closure(elements, pairs)
    for e in elements:
        if e in down[e]:
            raise CycleInRelation(f"relation pairs induce a directed cycle through {e!r}")
    for e in elements:
        if not down[e] and not any(e in down[x] for x in elements):
            raise IsolatedElement(
                f"element {e!r} is unrelated to every other element"
            )

    relations = frozenset((a, b) for a in elements for b in down[a])
    covers = frozenset(
        (a, b)
        for a, b in relations
        if not any((a, z) in relations and (z, b) in relations for z in elements)
    )
    return FiniteOrder(tuple(elements), relations, covers)


def from_down_sets(names: tuple[str, ...], downs: tuple[int, ...]) -> FiniteOrder:
    """Build an order from per-element bitmask down-sets (already closed).

    Used by the small-order census, where orders arrive with the closure
    precomputed; closure validity is still asserted.
    """
    n = len(names)
    for i in range(n):
        m = downs[i]
        j = 0
        acc = m
        while m:
            if m & 1:
                acc |= downs[j]
            m >>= 1
            j += 1
        if acc != downs[i]:
            raise CycleInRelation("down-sets are not transitively closed")
    relations = frozenset(
        (names[i], names[j]) for i in range(n) for j in range(n) if downs[i] >> j & 1
    )
    up = [0] * n
    for i in range(n):
        for j in range(n):
            if downs[i] >> j & 1:
                up[j] |= 1 << i
    for i in range(n):
        if not downs[i] and not up[i]:
            raise IsolatedElement(f"element {names[i]!r} is unrelated to every other element")
    covers = frozenset(
        (names[i], names[j])
        for i in range(n)
        for j in range(n)
        if downs[i] >> j & 1 and not any(downs[i] >> k & 1 and downs[k] >> j & 1 for k in range(n))
    )
    return FiniteOrder(tuple(names), relations, covers)


def classify(order: FiniteOrder) -> RoleMap:
    """Assign every element its role and every saddle its generation."""
    roles = {}
    for e in order.elements:
        if not order.up_set(e):
            roles[e] = Role.REPELLER
        elif not order.down_set(e):
            roles[e] = Role.ATTRACTOR
        else:
            roles[e] = Role.SADDLE

    generations: dict = {}

    def gen(s: str) -> int:
        if s in generations:
            return generations[s]
        above = [t for t in order.up_set(s) if roles[t] is Role.SADDLE]
        g = 1 if not above else 1 + max(gen(t) for t in above)
        generations[s] = g
        return g

    for e in order.elements:
        if roles[e] is Role.SADDLE:
            gen(e)
    return RoleMap(roles=roles, generations=generations)


def _induced_components(order: FiniteOrder, nodes: frozenset[str]):
    """Components of the comparability graph induced on ``nodes``."""
    comps = []
    seen: set[str] = set()
    for e in sorted(nodes):
        if e in seen:
            continue
        comp = {e}
        stack = [e]
        while stack:
            x = stack.pop()
            for y in (order.down_set(x) | order.up_set(x)) & nodes:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(tuple(sorted(comp)))
    return tuple(sorted(comps))


def check_connectivity(order: FiniteOrder) -> ConnectivityReport:
    """Decide the connectivity condition at every extremal element.

    For each maximal element the comparability graph induced on its strict
    down-set must be connected; symmetrically for minimal elements and their
    up-sets.  The empty subgraph counts as connected.
    """
    entries = {}
    for e in order.maximal_elements:
        comps = _induced_components(order, order.down_set(e))
        entries[e] = (len(comps) <= 1, comps)
    for e in order.minimal_elements:
        comps = _induced_components(order, order.up_set(e))
        # an element can be listed only once; maximal-and-minimal cannot
        # happen here because isolated elements are rejected at load time
        entries[e] = (len(comps) <= 1, comps)
    return ConnectivityReport(entries=entries)
