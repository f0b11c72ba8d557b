"""Band gluing and boundary cycles.

Every transition slot in an extremal element's cycle is a band: one half of
a translation band running from a repeller down to an attractor.  Gluing
matches each attractor-side band with a repeller-side band of the same type
(same ordered saddle pair, mediators crossed); the balance condition checked
by ``verify_star`` guarantees a perfect matching exists.

The boundary of a saddle's domain is then read off by walking: glue-step to
the partner band, advance-step to the adjacent band at that extremal point,
and so on until the walk closes up.  Walking away from a beginning band
(saddle on the right) moves to index+1, walking away from an end band
(saddle on the left) moves to index-1; in both cases the end band sits at
the beginning band's index plus one, which is the single indexation axiom
the walk must satisfy.  Partners are chosen lazily during the walk, first
available in index order, which is what makes the length-4 cycle
example close into one long boundary component instead of two short ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ExhaustionFailure, StarViolated
from .order import FiniteOrder, classify
from .cycles import CycleAssignment, Transition, verify_star

BandKey = tuple[str, int]


@dataclass(frozen=True)
class Band:
    """One indexed slot in an extremal element's cycle."""

    owner: str
    index: int
    transition: Transition

    @property
    def key(self) -> BandKey:
        return (self.owner, self.index)

    def is_beginning_for(self, saddle: str) -> bool:
        return self.transition.right == saddle

    def is_end_for(self, saddle: str) -> bool:
        return self.transition.left == saddle


@dataclass(frozen=True)
class BandGluing:
    """Perfect matching of attractor-side bands with repeller-side bands."""

    pairs: tuple  # ((attractor band key, repeller band key), ...) sorted
    _partner: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        partner = {}
        for a, b in self.pairs:
            partner[a] = b
            partner[b] = a
        object.__setattr__(self, "_partner", partner)

    def partner(self, key: BandKey) -> BandKey:
        return self._partner[key]

    def __contains__(self, key: BandKey) -> bool:
        return key in self._partner

    def to_list(self) -> list:
        return [[list(a), list(b)] for a, b in self.pairs]


@dataclass(frozen=True)
class BoundaryCycle:
    """One boundary component of a saddle's domain.

    The sequence alternates glue-steps and advance-steps and repeats its
    first band at the end; the length (glued pairs per circuit) is the number
    of elements after identifying the endpoints, divided by two.
    """

    saddle: str
    sequence: tuple  # band keys, first repeated at the end

    @property
    def length(self) -> int:
        return (len(self.sequence) - 1) // 2

    def to_list(self) -> list:
        return [list(k) for k in self.sequence]


def bands_of(assignment: CycleAssignment) -> dict:
    """Band objects per key, in canonical construction order."""
    out = {}
    for owner in assignment.owners():
        for i, t in enumerate(assignment.cycle(owner)):
            out[(owner, i)] = Band(owner=owner, index=i, transition=t)
    return out


def _group_id(band: Band, attractor_side: bool) -> tuple:
    t = band.transition
    if attractor_side:
        return (band.owner, t.mediator, t.left, t.right)
    return (t.mediator, band.owner, t.left, t.right)


def glue_bands(assignment: CycleAssignment, order: FiniteOrder):
    """Match bands across sides and walk out every saddle's boundary cycles.

    Saddles are processed in canonical order; bands mentioning the current
    saddle are matched on demand while its boundary is walked, taking the
    first not-yet-matched compatible band in index order.  Returns the
    complete gluing and a map from saddle to its boundary cycles.
    """
    ledger, ok = verify_star(assignment, order)
    if not ok:
        raise StarViolated(
            f"unbalanced transition counts: {ledger.unbalanced_groups()}"
        )
    roles = classify(order)
    bands = bands_of(assignment)
    is_attractor = {
        owner: not order.down_set(owner) for owner in assignment.owners()
    }
    cycle_len = {owner: len(assignment.cycle(owner)) for owner in assignment.owners()}

    queues: dict = {}
    for key in sorted(bands):
        band = bands[key]
        gid = _group_id(band, is_attractor[band.owner])
        side = 0 if is_attractor[band.owner] else 1
        queues.setdefault((gid, side), []).append(key)

    partner: dict = {}

    def partner_of(key: BandKey) -> BandKey:
        if key in partner:
            return partner[key]
        band = bands[key]
        attr = is_attractor[band.owner]
        gid = _group_id(band, attr)
        opposite = queues.get((gid, 1 if attr else 0), [])
        for cand in opposite:
            if cand not in partner:
                partner[key] = cand
                partner[cand] = key
                return cand
        raise ExhaustionFailure(
            f"no compatible partner left for band {key} of type {band.transition.key}"
        )

    def advance(key: BandKey, kind: str) -> BandKey:
        owner, idx = key
        n = cycle_len[owner]
        step = 1 if kind == "beg" else -1
        return (owner, (idx + step) % n)

    visited: set = set()
    cycles: dict = {s: [] for s in roles.saddles()}

    for saddle in roles.saddles():
        starts = sorted(
            key
            for key, band in bands.items()
            if is_attractor[band.owner] and band.is_beginning_for(saddle)
        )
        for start in starts:
            if (start, "beg") in visited:
                continue
            seq = [start]
            visited.add((start, "beg"))
            cur, kind = start, "beg"
            while True:
                glued = partner_of(cur)
                if (glued, kind) in visited:
                    raise ExhaustionFailure(
                        f"boundary walk for {saddle} revisited {glued}/{kind}"
                    )
                visited.add((glued, kind))
                seq.append(glued)
                gband = bands[glued]
                if kind == "beg" and is_attractor[gband.owner]:
                    raise ExhaustionFailure("walk pattern broken: expected repeller side")
                if kind == "end" and not is_attractor[gband.owner]:
                    raise ExhaustionFailure("walk pattern broken: expected attractor side")
                nxt = advance(glued, kind)
                nkind = "end" if kind == "beg" else "beg"
                mention = (
                    bands[nxt].transition.left
                    if nkind == "end"
                    else bands[nxt].transition.right
                )
                if mention != saddle:
                    raise ExhaustionFailure(
                        f"boundary walk for {saddle} drifted to band {nxt}"
                    )
                if nxt == start and nkind == "beg":
                    seq.append(start)
                    break
                if (nxt, nkind) in visited:
                    raise ExhaustionFailure(
                        f"boundary walk for {saddle} revisited {nxt}/{nkind}"
                    )
                visited.add((nxt, nkind))
                seq.append(nxt)
                cur, kind = nxt, nkind
            cycles[saddle].append(BoundaryCycle(saddle=saddle, sequence=tuple(seq)))

    unmatched = sorted(k for k in bands if k not in partner)
    if unmatched:
        raise ExhaustionFailure(f"bands left unmatched: {unmatched}")

    pairs = tuple(
        sorted((a, partner[a]) for a in bands if is_attractor[a[0]])
    )
    gluing = BandGluing(pairs=pairs)
    return gluing, {s: tuple(cs) for s, cs in cycles.items()}


def boundary_profile(cycles) -> tuple[int, ...]:
    """Multiset of boundary cycle lengths, largest first."""
    return tuple(sorted((c.length for c in cycles), reverse=True))


def verify_boundary_cycles(
    gluing: BandGluing,
    cycles: dict,
    assignment: CycleAssignment,
    order: FiniteOrder,
) -> list[str]:
    """Independently re-check the gluing and the boundary cycle axioms.

    Returns a list of violations (empty means pass): type compatibility and
    perfectness of the matching, membership of every listed band, the
    index+1 adjacency of every advance step, the appearance bounds (once for
    bands joining distinct saddles, twice for self bands), the partition of
    every saddle's bands by its cycles, and the global identity between the
    total boundary length and the band count.
    """
    problems = []
    bands = bands_of(assignment)
    is_attractor = {o: not order.down_set(o) for o in assignment.owners()}
    cycle_len = {o: len(assignment.cycle(o)) for o in assignment.owners()}

    seen_in_pairs: dict = {}
    for a, b in gluing.pairs:
        for k in (a, b):
            if k not in bands:
                problems.append(f"matching references unknown band {k}")
        if a not in bands or b not in bands:
            continue
        ba, bb = bands[a], bands[b]
        if not is_attractor.get(ba.owner, False) or is_attractor.get(bb.owner, True):
            problems.append(f"pair {a}~{b} does not join the two sides")
        ta, tb = ba.transition, bb.transition
        if (ta.left, ta.right) != (tb.left, tb.right):
            problems.append(f"pair {a}~{b} joins incompatible types {ta.key} / {tb.key}")
        if ta.mediator != bb.owner or tb.mediator != ba.owner:
            problems.append(f"pair {a}~{b} crosses the wrong extremal pair")
        for k in (a, b):
            seen_in_pairs[k] = seen_in_pairs.get(k, 0) + 1
    for k in bands:
        if seen_in_pairs.get(k, 0) != 1:
            problems.append(f"band {k} is in {seen_in_pairs.get(k, 0)} pairs, not 1")

    total_len = 0
    for saddle in sorted(cycles):
        appearances: dict = {}
        for cyc in cycles[saddle]:
            seq = cyc.sequence
            if len(seq) < 3 or seq[0] != seq[-1]:
                problems.append(f"{saddle}: cycle does not close on its first band")
                continue
            if cyc.length * 2 != len(seq) - 1:
                problems.append(f"{saddle}: stored length {cyc.length} inconsistent")
            if cyc.length % 2 != 0:
                problems.append(f"{saddle}: odd boundary length {cyc.length}")
            total_len += cyc.length
            body = seq[:-1]
            for key in body:
                if key not in bands:
                    problems.append(f"{saddle}: unknown band {key} in cycle")
                    break
                t = bands[key].transition
                if saddle not in (t.left, t.right):
                    problems.append(f"{saddle}: band {key} of type {t.key} unrelated")
                appearances[key] = appearances.get(key, 0) + 1
            else:
                for i in range(len(seq) - 1):
                    cur, nxt = seq[i], seq[i + 1]
                    if i % 2 == 0:  # glue step
                        if cur not in gluing or gluing.partner(cur) != nxt:
                            problems.append(
                                f"{saddle}: step {cur}->{nxt} is not a glued pair"
                            )
                    else:  # advance step at one extremal point
                        if cur[0] != nxt[0]:
                            problems.append(
                                f"{saddle}: advance {cur}->{nxt} changes extremal point"
                            )
                            continue
                        n = cycle_len[cur[0]]
                        # the walk starts on a beginning band, so positions
                        # 0,1 mod 4 are beginning kind and 2,3 are end kind
                        end_first = i % 4 == 3
                        beg_key, end_key = (nxt, cur) if end_first else (cur, nxt)
                        if (beg_key[1] + 1) % n != end_key[1] % n:
                            problems.append(
                                f"{saddle}: advance {cur}->{nxt} breaks the"
                                " end = beginning + 1 rule"
                            )
        for key, count in sorted(appearances.items()):
            t = bands[key].transition
            allowed = 2 if t.left == t.right == saddle else 1
            if count > allowed:
                problems.append(
                    f"{saddle}: band {key} appears {count} times (max {allowed})"
                )
        for key, band in sorted(bands.items()):
            t = band.transition
            if saddle not in (t.left, t.right):
                continue
            expected = 2 if t.left == t.right else 1
            if appearances.get(key, 0) != expected:
                problems.append(
                    f"{saddle}: band {key} appears {appearances.get(key, 0)}"
                    f" times across its cycles, expected {expected}"
                )

    if total_len != assignment.total_bands():
        problems.append(
            f"total boundary length {total_len} differs from band count"
            f" {assignment.total_bands()}"
        )
    return problems
