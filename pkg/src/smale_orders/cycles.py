"""Cycles of bands around extremal elements.

Around every attractor the saddle domains related to it appear in a cyclic
order, consecutive domains being separated by a translation band coming down
from a repeller; symmetrically around every repeller.  Combinatorially a
cycle is a cyclic word of transitions ``left --mediator--> right`` chained so
that the right saddle of each position is the left saddle of the next.

A collection of cycles is usable for gluing when, for every quadruple
(attractor, repeller, saddle pair), the counts of the corresponding
transitions agree across the two sides; ``StarLedger`` tracks those counts
and :func:`balance_cycles` equalizes them by splicing transition pairs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    ConnectivityFailure,
    NoMediator,
    NotExtremal,
    PreconditionViolated,
)
from .order import FiniteOrder, check_connectivity, classify


@dataclass(frozen=True)
class Transition:
    """One band slot in an extremal element's cycle.

    For an attractor-owned cycle the mediator is a repeller above both
    saddles; for a repeller-owned cycle it is an attractor below both.
    """

    left: str
    mediator: str
    right: str
    owner: str

    @property
    def key(self) -> tuple[str, str, str]:
        return (self.left, self.mediator, self.right)

    def reversed(self) -> "Transition":
        return Transition(self.right, self.mediator, self.left, self.owner)


@dataclass(frozen=True)
class CycleAssignment:
    """A cyclic word of transitions per extremal element (index origin 0)."""

    cycles: dict

    def owners(self) -> tuple[str, ...]:
        return tuple(sorted(self.cycles))

    def cycle(self, owner: str) -> tuple[Transition, ...]:
        return tuple(self.cycles[owner])

    def total_bands(self) -> int:
        return sum(len(c) for c in self.cycles.values())

    def to_dict(self) -> dict:
        return {
            owner: [[t.left, t.mediator, t.right] for t in self.cycles[owner]]
            for owner in self.owners()
        }

    @staticmethod
    def from_dict(data: dict) -> "CycleAssignment":
        return CycleAssignment(
            cycles={
                owner: tuple(
                    Transition(left=a, mediator=m, right=b, owner=owner)
                    for a, m, b in word
                )
                for owner, word in data.items()
            }
        )


@dataclass(frozen=True)
class StarLedger:
    """Transition counts per (attractor, repeller, saddle pair) quadruple.

    Each group holds four counts: both directions on the attractor side and
    both directions on the repeller side.  A balanced assignment has all four
    equal within every group.
    """

    groups: dict

    @property
    def balanced(self) -> bool:
        return all(len(set(counts)) == 1 for counts in self.groups.values())

    def unbalanced_groups(self) -> tuple:
        return tuple(
            sorted(k for k, counts in self.groups.items() if len(set(counts)) > 1)
        )

    def deficit(self) -> int:
        """Total splice work: per group, the gap between the two sides."""
        total = 0
        for (om, al, k, l), (a_kl, a_lk, r_kl, r_lk) in self.groups.items():
            total += abs(a_kl - r_kl)
        return total

    def to_dict(self) -> dict:
        return {
            f"{om}|{al}|{k}|{l}": list(counts)
            for (om, al, k, l), counts in sorted(self.groups.items())
        }


# --------------------------------------------------------------------------
# admissibility
# --------------------------------------------------------------------------


def admissible_transitions(order: FiniteOrder, owner: str) -> frozenset[Transition]:
    """All transition types an extremal element's cycle may use.

    Self-transitions (same saddle on both sides) are included; they are
    always admissible because every related saddle shares some opposite
    extremal with itself.
    """
    up, down = order.up_set(owner), order.down_set(owner)
    if up and down:
        raise NotExtremal(f"{owner!r} is a saddle, not an extremal element")
    if not up and not down:
        raise NotExtremal(f"{owner!r} is isolated")
    if down == frozenset():
        # attractor: saddles above, repellers mediate
        saddles = [s for s in sorted(up) if order.up_set(s)]
        mediators = [a for a in sorted(up) if not order.up_set(a)]
        rel = order.greater
        return frozenset(
            Transition(k, m, l, owner)
            for k, l in itertools.product(saddles, repeat=2)
            for m in mediators
            if rel(m, k) and rel(m, l)
        )
    # repeller: saddles below, attractors mediate
    saddles = [s for s in sorted(down) if order.down_set(s)]
    mediators = [w for w in sorted(down) if not order.down_set(w)]
    rel = order.greater
    return frozenset(
        Transition(k, m, l, owner)
        for k, l in itertools.product(saddles, repeat=2)
        for m in mediators
        if rel(k, m) and rel(l, m)
    )


# --------------------------------------------------------------------------
# validation of assignments
# --------------------------------------------------------------------------


def assignment_problems(assignment: CycleAssignment, order: FiniteOrder) -> list[str]:
    """All violations of the cycle typing rules and conditions 1 and 2.

    Condition 1 requires every admissible transition type between two
    distinct saddles to appear; self-transition types are optional (the
    minimal hand-picked assignments omit them).  Condition 2 requires the
    two directions between distinct saddles to appear equally often within
    each cycle.  Coverage requires every related saddle and every related
    opposite extremal to show up at least once.
    """
    problems = []
    for owner in assignment.owners():
        word = assignment.cycle(owner)
        if not word:
            problems.append(f"{owner}: empty cycle")
            continue
        try:
            admissible = admissible_transitions(order, owner)
        except NotExtremal as exc:
            problems.append(str(exc))
            continue
        admissible_keys = {t.key for t in admissible}
        for i, t in enumerate(word):
            if t.owner != owner:
                problems.append(f"{owner}[{i}]: transition owned by {t.owner}")
            if t.key not in admissible_keys:
                problems.append(f"{owner}[{i}]: inadmissible transition {t.key}")
        n = len(word)
        for i, t in enumerate(word):
            nxt = word[(i + 1) % n]
            if t.right != nxt.left:
                problems.append(
                    f"{owner}[{i}]: chain break, right={t.right} next-left={nxt.left}"
                )
        seen_saddles = {t.left for t in word} | {t.right for t in word}
        seen_mediators = {t.mediator for t in word}
        related = order.up_set(owner) or order.down_set(owner)
        for e in sorted(related):
            is_saddle = bool(order.up_set(e)) and bool(order.down_set(e))
            if is_saddle and e not in seen_saddles:
                problems.append(f"{owner}: related saddle {e} never appears")
            if not is_saddle and e not in seen_mediators:
                problems.append(f"{owner}: related extremal {e} never mediates")
        counts: dict = {}
        for t in word:
            counts[t.key] = counts.get(t.key, 0) + 1
        for t in sorted(admissible, key=lambda t: t.key):
            if t.left != t.right and counts.get(t.key, 0) == 0:
                problems.append(f"{owner}: admissible type {t.key} missing (condition 1)")
        for (k, m, l), c in sorted(counts.items()):
            if k < l and c != counts.get((l, m, k), 0):
                problems.append(
                    f"{owner}: {k}->{l} via {m} appears {c} times but the"
                    f" reverse appears {counts.get((l, m, k), 0)} (condition 2)"
                )
    return problems


def validate_assignment(assignment: CycleAssignment, order: FiniteOrder) -> None:
    problems = assignment_problems(assignment, order)
    if problems:
        raise PreconditionViolated("; ".join(problems))


# --------------------------------------------------------------------------
# construction
# --------------------------------------------------------------------------


def _euler_circuit(vertices, edges):
    """Deterministic directed Euler circuit; edges are Transition objects."""
    out: dict = {v: [] for v in vertices}
    for t in edges:
        out[t.left].append(t)
    for v in out:
        out[v].sort(key=lambda t: (t.mediator, t.right))
    start = min(v for v in vertices if out[v])
    ptr = {v: 0 for v in vertices}
    vstack, estack, circuit = [start], [], []
    while vstack:
        v = vstack[-1]
        if ptr[v] < len(out[v]):
            t = out[v][ptr[v]]
            ptr[v] += 1
            vstack.append(t.right)
            estack.append(t)
        else:
            vstack.pop()
            if estack:
                circuit.append(estack.pop())
    circuit.reverse()
    return circuit


def build_initial_cycles(order: FiniteOrder) -> CycleAssignment:
    """Construct cycles satisfying conditions 1 and 2 for every extremal.

    The cycle around an element is an Euler circuit of the directed
    multigraph whose vertices are the related saddles and whose edges are the
    admissible transition types, each taken together with its reverse.  The
    doubling makes in- and out-degrees equal and the two directions equally
    frequent; the connectivity condition makes the multigraph connected, so
    the circuit exists.  Every type then appears exactly twice, so the
    resulting assignment is already balanced across sides.
    """
    report = check_connectivity(order)
    if not report.passed:
        raise ConnectivityFailure(
            f"connectivity condition fails at {', '.join(report.failures())}",
            report=report,
        )
    roles = classify(order)
    cycles = {}
    for owner in roles.extremals():
        related = order.up_set(owner) or order.down_set(owner)
        types = sorted(admissible_transitions(order, owner), key=lambda t: t.key)
        mediated = {t.mediator for t in types}
        for e in sorted(related):
            extremal = not (order.up_set(e) and order.down_set(e))
            if extremal and e not in mediated:
                raise NoMediator(
                    f"extremal {e} related to {owner} mediates no transition"
                )
        if not types:
            raise NoMediator(f"no saddles related to {owner}")
        vertices = sorted({t.left for t in types})
        edges = []
        for t in types:
            edges.append(t)
            edges.append(t.reversed())
        circuit = _euler_circuit(vertices, edges)
        if len(circuit) != len(edges):
            raise ConnectivityFailure(
                f"transition multigraph of {owner} is disconnected", report=report
            )
        cycles[owner] = tuple(circuit)
    return CycleAssignment(cycles=cycles)


# --------------------------------------------------------------------------
# the star ledger and balancing
# --------------------------------------------------------------------------


def _group_key(owner_is_attractor, owner, t):
    k, l = sorted((t.left, t.right))
    if owner_is_attractor:
        return (owner, t.mediator, k, l)
    return (t.mediator, owner, k, l)


def star_ledger(assignment: CycleAssignment, order: FiniteOrder) -> StarLedger:
    """Count transitions per quadruple, on both sides and in both directions.

    The ledger covers exactly the quadruples with at least one admissible
    transition; groups never touched by the assignment carry zero counts.
    """
    groups: dict = {}

    def slot(key):
        return groups.setdefault(key, [0, 0, 0, 0])

    for owner in assignment.owners():
        attractor = not order.down_set(owner)
        for t in admissible_transitions(order, owner):
            slot(_group_key(attractor, owner, t))

    for owner in assignment.owners():
        attractor = not order.down_set(owner)
        for t in assignment.cycle(owner):
            counts = slot(_group_key(attractor, owner, t))
            k, l = sorted((t.left, t.right))
            if k == l:
                if attractor:
                    counts[0] += 1
                    counts[1] = counts[0]
                else:
                    counts[2] += 1
                    counts[3] = counts[2]
            else:
                forward = (t.left, t.right) == (k, l)
                if attractor:
                    counts[0 if forward else 1] += 1
                else:
                    counts[2 if forward else 3] += 1

    return StarLedger(groups={k: tuple(v) for k, v in groups.items()})


def verify_star(assignment: CycleAssignment, order: FiniteOrder) -> tuple[StarLedger, bool]:
    ledger = star_ledger(assignment, order)
    return ledger, ledger.balanced


def _canonical_start(word) -> int:
    """Index starting the lexicographically least rotation of the cycle."""
    keys = [t.key for t in word]
    n = len(keys)
    best, best_rot = 0, keys
    for i in range(1, n):
        rot = keys[i:] + keys[:i]
        if rot < best_rot:
            best, best_rot = i, rot
    return best


def _anchor_position(word, saddle: str) -> int:
    """First position whose right endpoint is the anchor saddle, scanning
    from the canonical rotation start (rotation invariant)."""
    n = len(word)
    start = _canonical_start(word)
    for i in range(n):
        pos = (start + i) % n
        if word[pos].right == saddle:
            return pos
    raise PreconditionViolated(f"anchor saddle {saddle} does not occur")


def balance_cycles(assignment: CycleAssignment, order: FiniteOrder) -> CycleAssignment:
    """Equalize transition counts across the two sides of every quadruple.

    Deficits are resolved in lexicographic group order.  For distinct
    saddles k, l the deficient cycle receives the chained pair
    ``k -> l -> k`` (through its own mediator) right after an occurrence of
    k; for k = l a single self-transition is spliced in.  Each splice
    preserves chaining and conditions 1 and 2 and reduces the total deficit
    by one, so the loop inserts exactly the initial deficit.
    """
    validate_assignment(assignment, order)
    cycles = {owner: list(assignment.cycle(owner)) for owner in assignment.owners()}
    ledger = star_ledger(assignment, order)
    for key in sorted(ledger.groups):
        om, al, k, l = key
        a_kl, a_lk, r_kl, r_lk = ledger.groups[key]
        if a_kl == r_kl:
            continue
        if a_kl > r_kl:
            target, mediator, need = al, om, a_kl - r_kl
        else:
            target, mediator, need = om, al, r_kl - a_kl
        for _ in range(need):
            word = cycles[target]
            pos = _anchor_position(word, k)
            if k == l:
                insert = [Transition(k, mediator, k, target)]
            else:
                insert = [
                    Transition(k, mediator, l, target),
                    Transition(l, mediator, k, target),
                ]
            word[pos + 1 : pos + 1] = insert
    balanced = CycleAssignment(
        cycles={owner: tuple(word) for owner, word in cycles.items()}
    )
    problems = assignment_problems(balanced, order)
    if problems:  # splices must preserve every cycle invariant
        raise PreconditionViolated("balancing broke invariants: " + "; ".join(problems))
    _, ok = verify_star(balanced, order)
    if not ok:
        raise PreconditionViolated("balancing failed to reach equal counts")
    return balanced
