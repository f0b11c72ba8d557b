import pytest

from smale_orders.bands import (
    BandGluing,
    BoundaryCycle,
    boundary_profile,
    glue_bands,
    verify_boundary_cycles,
)
from smale_orders.corpus import diamond_order, example1_cycles, example_cycles
from smale_orders.cycles import CycleAssignment, Transition, build_initial_cycles
from smale_orders.errors import StarViolated
from smale_orders.order import load_order

from helpers import (
    enumerate_type_matchings,
    oracle_axiom_counts,
    usable_orders,
    walk_boundaries,
)

CHAIN3 = load_order({"elements": ["A", "s", "w"], "relations": [["A", "s"], ["s", "w"]]})


def T(left, mediator, right, owner):
    return Transition(left=left, mediator=mediator, right=right, owner=owner)


def test_example1_boundary_cycles_have_length_two():
    order = diamond_order()
    gluing, cycles = glue_bands(example1_cycles(), order)
    assert len(gluing.pairs) == 2
    for s in ("s1", "s2"):
        assert boundary_profile(cycles[s]) == (2,)
    assert verify_boundary_cycles(gluing, cycles, example1_cycles(), order) == []


def test_example_boundary_cycle_matches_displayed_walk():
    order = diamond_order()
    assignment = example_cycles()
    gluing, cycles = glue_bands(assignment, order)
    for s in ("s1", "s2"):
        assert boundary_profile(cycles[s]) == (4,)
        assert len(cycles[s]) == 1
    # the eight-band walk of s2 alternates the displayed transition types
    walk = cycles["s2"][0].sequence[:-1]
    types = [(key[0], assignment.cycle(key[0])[key[1]].key) for key in walk]
    assert types == [
        ("w", ("s1", "A", "s2")),
        ("A", ("s1", "w", "s2")),
        ("A", ("s2", "w", "s1")),
        ("w", ("s2", "A", "s1")),
        ("w", ("s1", "A", "s2")),
        ("A", ("s1", "w", "s2")),
        ("A", ("s2", "w", "s1")),
        ("w", ("s2", "A", "s1")),
    ]
    assert verify_boundary_cycles(gluing, cycles, assignment, order) == []


def test_three_chain_doubled_partitions_four_bands():
    built = build_initial_cycles(CHAIN3)
    gluing, cycles = glue_bands(built, CHAIN3)
    assert boundary_profile(cycles["s"]) == (2, 2)
    # every self band appears exactly twice across the saddle's cycles
    appearances = {}
    for cyc in cycles["s"]:
        for key in cyc.sequence[:-1]:
            appearances[key] = appearances.get(key, 0) + 1
    assert set(appearances.values()) == {2}
    assert verify_boundary_cycles(gluing, cycles, built, CHAIN3) == []


def test_three_chain_minimal_cycle_single_component():
    minimal = CycleAssignment(
        cycles={"w": (T("s", "A", "s", "w"),), "A": (T("s", "w", "s", "A"),)}
    )
    gluing, cycles = glue_bands(minimal, CHAIN3)
    assert boundary_profile(cycles["s"]) == (2,)
    assert verify_boundary_cycles(gluing, cycles, minimal, CHAIN3) == []


def test_glue_rejects_unbalanced_assignment():
    unbalanced = CycleAssignment(
        cycles={
            "w": tuple(T(a, "A", b, "w") for a, b in [("s1", "s2"), ("s2", "s1")] * 2),
            "A": tuple(T(a, "w", b, "A") for a, b in [("s1", "s2"), ("s2", "s1")]),
        }
    )
    with pytest.raises(StarViolated):
        glue_bands(unbalanced, diamond_order())


def test_glue_bands_deterministic():
    order = diamond_order()
    built = build_initial_cycles(order)
    g1, c1 = glue_bands(built, order)
    g2, c2 = glue_bands(built, order)
    assert g1.pairs == g2.pairs
    assert {s: [c.sequence for c in cs] for s, cs in c1.items()} == {
        s: [c.sequence for c in cs] for s, cs in c2.items()
    }


def test_verify_rejects_plus_two_advance_jump():
    order = diamond_order()
    assignment = example_cycles()
    gluing, cycles = glue_bands(assignment, order)
    seq = list(cycles["s2"][0].sequence)
    owner, idx = seq[2]  # an advance target
    seq[2] = (owner, (idx + 1) % len(assignment.cycle(owner)))
    broken = dict(cycles)
    broken["s2"] = (BoundaryCycle(saddle="s2", sequence=tuple(seq)),)
    problems = verify_boundary_cycles(gluing, broken, assignment, order)
    assert any("end = beginning + 1" in p for p in problems)


def test_verify_rejects_reversed_type_matching():
    order = diamond_order()
    assignment = example1_cycles()
    # pair (s1 -> s2 at w) with (s2 -> s1 at A): reversed direction
    bad = BandGluing(pairs=((("w", 0), ("A", 1)), (("w", 1), ("A", 0))))
    _, cycles = glue_bands(assignment, order)
    problems = verify_boundary_cycles(bad, cycles, assignment, order)
    assert any("incompatible types" in p for p in problems)


def small_instances():
    """All pipeline instances with at most ten bands: built cycles over the
    small census plus the hand-picked assignments."""
    out = []
    for order in usable_orders(5):
        built = build_initial_cycles(order)
        if built.total_bands() <= 10:
            out.append((order, built))
    out.append((diamond_order(), example1_cycles()))
    out.append((diamond_order(), example_cycles()))
    out.append(
        (
            CHAIN3,
            CycleAssignment(
                cycles={"w": (T("s", "A", "s", "w"),), "A": (T("s", "w", "s", "A"),)}
            ),
        )
    )
    return out


def test_small_instance_set_is_nonempty():
    assert len(small_instances()) >= 5


def test_glue_output_among_exhaustive_matchings():
    """Oracle equivalence: the lazy matching is one of the type-compatible
    perfect matchings, and its walk agrees with an independent re-walk."""
    for order, assignment in small_instances():
        gluing, cycles = glue_bands(assignment, order)
        got_matching = {}
        for a, b in gluing.pairs:
            got_matching[a] = b
            got_matching[b] = a
        matchings = list(enumerate_type_matchings(assignment, order))
        assert got_matching in matchings
        # every type-compatible matching closes into valid boundary cycles
        valid = 0
        for m in matchings:
            walked = walk_boundaries(assignment, order, m)
            assert oracle_axiom_counts(assignment, order, walked)
            valid += 1
            if m == got_matching:
                got_cycles = {
                    s: [c.sequence for c in cs] for s, cs in cycles.items()
                }
                assert {s: list(map(tuple, w)) for s, w in walked.items()} == got_cycles
        assert valid == len(matchings)


def test_partition_property_on_random_balanced_assignments():
    for order in usable_orders(6):
        built = build_initial_cycles(order)
        if built.total_bands() > 24:
            continue
        gluing, cycles = glue_bands(built, order)
        assert verify_boundary_cycles(gluing, cycles, built, order) == []


def test_pair_count_is_half_the_band_count():
    for order, assignment in small_instances():
        gluing, _ = glue_bands(assignment, order)
        assert 2 * len(gluing.pairs) == assignment.total_bands()


def test_boundary_profile_trivia():
    assert boundary_profile([]) == ()
    cyc = BoundaryCycle(saddle="s", sequence=(("w", 0), ("A", 0), ("A", 0), ("w", 0), ("w", 0)))
    assert cyc.length == 2
