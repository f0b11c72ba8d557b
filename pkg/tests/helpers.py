"""Shared test utilities: independent oracles and corpus enumeration.

Everything here deliberately re-derives results from first principles
(union-find, brute-force enumeration, fresh traversal code) so the library
is checked against a second, independent path.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from smale_orders.census import iter_orders
from smale_orders.order import FiniteOrder, check_connectivity


@lru_cache(maxsize=None)
def usable_orders(max_n: int) -> tuple[FiniteOrder, ...]:
    """All census orders up to max_n elements that the realization pipeline
    accepts: no isolated elements, connectivity holds, no north-south pairs."""
    out = []
    for n in range(2, max_n + 1):
        for order in iter_orders(n):
            if order.north_south_pairs:
                continue
            if not check_connectivity(order).passed:
                continue
            out.append(order)
    return tuple(out)


def oracle_connectivity(downs: tuple[int, ...]) -> dict:
    """Union-find over the induced comparability subgraphs (bitmask input)."""
    n = len(downs)
    up = [0] * n
    for i in range(n):
        for j in range(n):
            if downs[i] >> j & 1:
                up[j] |= 1 << i
    verdicts = {}
    for e in range(n):
        if up[e] and downs[e]:
            continue  # saddle
        mask = downs[e] if not up[e] else up[e]
        members = [i for i in range(n) if mask >> i & 1]
        parent = {i: i for i in members}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in members:
            for b in members:
                if a < b and (downs[a] >> b & 1 or downs[b] >> a & 1):
                    ra, rb = find(a), find(b)
                    if ra != rb:
                        parent[ra] = rb
        verdicts[e] = len({find(m) for m in members}) <= 1
    return verdicts


def oracle_admissible(order: FiniteOrder, owner: str) -> set:
    """Brute-force triple loop over all elements, testing the relation."""
    rel = order.relations
    elements = order.elements
    maxes = {e for e in elements if not any((x, e) in rel for x in elements)}
    mins = {e for e in elements if not any((e, x) in rel for x in elements)}
    saddles = {e for e in elements if e not in maxes and e not in mins}
    out = set()
    for k in elements:
        for m in elements:
            for l in elements:
                if owner in mins:
                    ok = (
                        k in saddles
                        and l in saddles
                        and m in maxes
                        and (k, owner) in rel
                        and (l, owner) in rel
                        and (m, k) in rel
                        and (m, l) in rel
                    )
                else:
                    ok = (
                        k in saddles
                        and l in saddles
                        and m in mins
                        and (owner, k) in rel
                        and (owner, l) in rel
                        and (k, m) in rel
                        and (l, m) in rel
                    )
                if ok:
                    out.add((k, m, l))
    return out


# ---------------------------------------------------------------------------
# independent band-gluing oracle
# ---------------------------------------------------------------------------


def _band_tables(assignment, order):
    is_attr = {o: not order.down_set(o) for o in assignment.owners()}
    bands = {}
    by_group: dict = {}
    for owner in assignment.owners():
        for i, t in enumerate(assignment.cycle(owner)):
            key = (owner, i)
            bands[key] = t
            gid = (
                (owner, t.mediator, t.left, t.right)
                if is_attr[owner]
                else (t.mediator, owner, t.left, t.right)
            )
            by_group.setdefault(gid, ([], []))[0 if is_attr[owner] else 1].append(key)
    return bands, by_group, is_attr


def enumerate_type_matchings(assignment, order):
    """Every type-compatible perfect matching, as a symmetric dict."""
    bands, by_group, _ = _band_tables(assignment, order)
    gids = sorted(by_group)
    options = []
    for gid in gids:
        a_side, r_side = (sorted(x) for x in by_group[gid])
        assert len(a_side) == len(r_side), f"group {gid} is unbalanced"
        options.append(
            [tuple(zip(a_side, perm)) for perm in itertools.permutations(r_side)]
        )
    for combo in itertools.product(*options):
        m = {}
        for pairs in combo:
            for x, y in pairs:
                m[x] = y
                m[y] = x
        yield m


def walk_boundaries(assignment, order, matching):
    """Boundary cycles under a fixed matching: an independent re-walk.

    Returns a dict saddle -> list of band-key sequences (first repeated at
    the end), or raises AssertionError if the walk drifts or revisits slots.
    """
    bands, _, is_attr = _band_tables(assignment, order)
    n_of = {o: len(assignment.cycle(o)) for o in assignment.owners()}
    saddles = sorted(
        {t.left for t in bands.values()} | {t.right for t in bands.values()}
    )
    visited = set()
    cycles: dict = {s: [] for s in saddles}
    for s in saddles:
        starts = sorted(
            k for k, t in bands.items() if is_attr[k[0]] and t.right == s
        )
        for start in starts:
            if (start, "beg") in visited:
                continue
            visited.add((start, "beg"))
            seq = [start]
            cur, kind = start, "beg"
            while True:
                p = matching[cur]
                assert (p, kind) not in visited, "revisit during walk"
                visited.add((p, kind))
                seq.append(p)
                step = 1 if kind == "beg" else -1
                nxt = (p[0], (p[1] + step) % n_of[p[0]])
                nkind = "end" if kind == "beg" else "beg"
                t = bands[nxt]
                assert (t.left if nkind == "end" else t.right) == s, "walk drifted"
                if nxt == start and nkind == "beg":
                    seq.append(start)
                    break
                assert (nxt, nkind) not in visited, "revisit during walk"
                visited.add((nxt, nkind))
                seq.append(nxt)
                cur, kind = nxt, nkind
            cycles[s].append(tuple(seq))
    return cycles


def oracle_axiom_counts(assignment, order, cycles) -> bool:
    """Appearance bounds: once per non-self band per incident saddle, twice
    for self bands; plus the total-length identity."""
    bands, _, _ = _band_tables(assignment, order)
    total_len = 0
    for s, seqs in cycles.items():
        counts: dict = {}
        for seq in seqs:
            assert seq[0] == seq[-1]
            assert (len(seq) - 1) % 2 == 0
            total_len += (len(seq) - 1) // 2
            for k in seq[:-1]:
                counts[k] = counts.get(k, 0) + 1
        for k, c in counts.items():
            t = bands[k]
            expected = 2 if t.left == t.right else 1
            if c != expected:
                return False
    return total_len == sum(len(assignment.cycle(o)) for o in assignment.owners())
