"""End-to-end realization pipeline and certificate re-verification.

``realize`` runs connectivity -> cycles -> balancing -> band gluing ->
profile repair -> domain selection -> assembly -> handles and returns a
certificate.  ``verify_certificate`` recomputes every stage from the data
stored in a certificate and reports any mismatch, so certificates can be
re-checked after serialization by an independent process.
"""

from __future__ import annotations

from .assemble import (
    DEFAULT_MATCHING_STRATEGY,
    RealizationCertificate,
    add_saddle_handles,
    assemble,
    saddle_handle_pairs,
)
from .bands import BandGluing, BoundaryCycle, boundary_profile, glue_bands, verify_boundary_cycles
from .cycles import (
    CycleAssignment,
    assignment_problems,
    balance_cycles,
    build_initial_cycles,
    verify_star,
)
from .domains import (
    LengthProfile,
    RepairLog,
    Verdict,
    check_constructible,
    repair_profile,
)
from .errors import ConnectivityFailure, PreconditionViolated
from .order import FiniteOrder, check_connectivity, classify, load_order


def realize(
    order: FiniteOrder,
    assignment: CycleAssignment | None = None,
    matching_strategy: str = DEFAULT_MATCHING_STRATEGY,
) -> RealizationCertificate:
    """Realize the order, or raise ConnectivityFailure naming the obstacle.

    An externally supplied cycle assignment must cover exactly the extremal
    elements outside north-south pairs and satisfy the cycle conditions; by
    default the doubled Euler-circuit cycles are built.
    """
    if matching_strategy != DEFAULT_MATCHING_STRATEGY:
        raise ValueError(f"unknown matching strategy {matching_strategy!r}")
    report = check_connectivity(order)
    if not report.passed:
        raise ConnectivityFailure(
            f"connectivity condition fails at {', '.join(report.failures())}",
            report=report,
        )

    ns_elements = {e for pair in order.north_south_pairs for e in pair}
    for a, b in order.north_south_pairs:
        # under the connectivity condition these pairs are always isolated
        # two-element components
        if order.up_set(b) != {a} or order.down_set(a) != {b}:
            raise AssertionError(f"north-south pair {a}>{b} is not isolated")
    core = (
        order.restrict(set(order.elements) - ns_elements) if ns_elements else order
    )

    if core.elements:
        if assignment is None:
            assignment = build_initial_cycles(core)
        else:
            expected = set(classify(core).extremals())
            if set(assignment.owners()) != expected:
                raise PreconditionViolated(
                    f"assignment owners {sorted(assignment.owners())} do not"
                    f" match the extremal elements {sorted(expected)}"
                )
        balanced = balance_cycles(assignment, core)
        gluing, boundary = glue_bands(balanced, core)
        problems = verify_boundary_cycles(gluing, boundary, balanced, core)
        if problems:
            raise AssertionError("gluing invariants broken: " + "; ".join(problems))
    else:
        balanced = CycleAssignment(cycles={})
        gluing = BandGluing(pairs=())
        boundary = {}

    domains, repairs = {}, {}
    for saddle in sorted(boundary):
        profile = LengthProfile(boundary_profile(boundary[saddle]))
        verdict, spec = check_constructible(profile)
        if verdict is Verdict.CONSTRUCTIBLE:
            repairs[saddle] = RepairLog(steps=())
        else:
            repaired, log = repair_profile(profile)
            verdict, spec = check_constructible(repaired)
            if verdict is not Verdict.CONSTRUCTIBLE:
                raise AssertionError(f"repair left {repaired.lengths} unbuildable")
            repairs[saddle] = log
        domains[saddle] = spec

    certificate = assemble(
        order,
        balanced,
        gluing,
        boundary,
        domains,
        repairs,
        matching_strategy=matching_strategy,
    )
    return add_saddle_handles(certificate, order)


# --------------------------------------------------------------------------
# re-verification and (de)serialization
# --------------------------------------------------------------------------


def verify_certificate(cert: RealizationCertificate) -> list[str]:
    """Recompute every typed invariant from the certificate's own data."""
    problems = []
    order = cert.order

    reloaded = load_order(
        {"elements": list(order.elements), "relations": [list(p) for p in order.relations]}
    )
    if reloaded.relations != order.relations:
        problems.append("stored relations are not transitively closed")
    if reloaded.covers != order.covers:
        problems.append("stored covers do not match the relation")

    roles = classify(order)
    if roles.roles != cert.roles.roles or roles.generations != cert.roles.generations:
        problems.append("stored roles differ from reclassification")

    report = check_connectivity(order)
    if not report.passed:
        problems.append(f"order fails connectivity at {report.failures()}")

    if cert.north_south != order.north_south_pairs:
        problems.append("stored north-south pairs differ")

    ns_elements = {e for pair in order.north_south_pairs for e in pair}
    core = (
        order.restrict(set(order.elements) - ns_elements) if ns_elements else order
    )

    if cert.assignment.owners():
        problems += assignment_problems(cert.assignment, core)
        ledger, ok = verify_star(cert.assignment, core)
        if not ok:
            problems.append(
                f"transition counts unbalanced: {ledger.unbalanced_groups()}"
            )
        problems += verify_boundary_cycles(
            cert.gluing, cert.boundary, cert.assignment, core
        )

    if cert.edge_count != len(cert.gluing.pairs):
        problems.append("edge count differs from the matching size")
    if 2 * cert.edge_count != cert.assignment.total_bands():
        problems.append("edge identity 2E = total band count fails")
    if cert.vertex_count != len(roles.extremals()):
        problems.append("vertex count differs from the number of extremals")

    for saddle in sorted(cert.boundary):
        raw = LengthProfile(boundary_profile(cert.boundary[saddle]))
        verdict, spec = check_constructible(raw)
        if verdict is Verdict.CONSTRUCTIBLE:
            expected_spec, expected_log = spec, RepairLog(steps=())
        else:
            repaired, expected_log = repair_profile(raw)
            _, expected_spec = check_constructible(repaired)
        if cert.domains.get(saddle) != expected_spec:
            problems.append(f"domain spec for {saddle} differs from recomputation")
        stored_log = cert.repairs.get(saddle, RepairLog(steps=()))
        if stored_log != (expected_log if expected_log.steps else RepairLog(steps=())):
            problems.append(f"repair log for {saddle} differs from recomputation")
    if set(cert.domains) != set(cert.boundary):
        problems.append("domains and boundary cycles cover different saddles")

    expected_handles = saddle_handle_pairs(order)
    if cert.handle_pairs != expected_handles:
        problems.append("handle pairs differ from the saddle cover pairs")
    if cert.handle_count != len(expected_handles):
        problems.append("handle count differs")

    extra = sum(log.extra_band_pairs for log in cert.repairs.values())
    if cert.repair_extra_pairs != extra:
        problems.append("repair surplus differs from the logs")

    chi = (
        sum(2 - 2 * spec.genus - spec.profile.s for spec in cert.domains.values())
        + cert.vertex_count
        - cert.edge_count
        - extra
        - 2 * cert.handle_count
    )
    if cert.chi != chi:
        problems.append(f"stored chi {cert.chi} differs from recomputed {chi}")
    if chi % 2:
        problems.append(f"odd Euler characteristic {chi}")
    if cert.connected:
        if chi > 2:
            problems.append(f"Euler characteristic {chi} exceeds 2")
        if cert.genus != (2 - chi) // 2:
            problems.append("stored genus differs from (2 - chi) / 2")
    elif cert.genus is not None:
        problems.append("disconnected assembly should not carry a global genus")
    for comp in cert.components:
        if comp.chi % 2:
            problems.append(f"component {comp.elements} has odd chi")
        if comp.chi > 2:
            problems.append(f"component {comp.elements} chi {comp.chi} exceeds 2")
        if comp.genus != (2 - comp.chi) // 2:
            problems.append(f"component {comp.elements} genus mismatch")
    if sum(c.chi for c in cert.components) != chi:
        problems.append("component characteristics do not sum to chi")
    if cert.connected != (len(cert.components) <= 1):
        problems.append("connected flag contradicts the component list")
    return problems


def certificate_from_dict(data: dict) -> RealizationCertificate:
    """Rebuild a certificate from its serialized form."""
    from .domains import DomainSpec, Recipe, RecipeKind, RepairOp, RepairStep
    from .assemble import ComponentSummary
    from .order import RoleMap, Role

    order = load_order(
        {"elements": data["order"]["elements"], "relations": data["order"]["relations"]}
    )
    roles = RoleMap(
        roles={e: Role(v) for e, v in data["roles"].items()},
        generations={e: int(g) for e, g in data["generations"].items()},
    )
    assignment = CycleAssignment.from_dict(data["cycles"])
    gluing = BandGluing(
        pairs=tuple(sorted((tuple(a), tuple(b)) for a, b in data["gluing"]))
    )
    boundary = {
        s: tuple(
            BoundaryCycle(saddle=s, sequence=tuple(tuple(k) for k in seq))
            for seq in seqs
        )
        for s, seqs in data["boundary_cycles"].items()
    }
    domains = {}
    for s, d in data["domains"].items():
        recipe = Recipe(
            kind=RecipeKind(d["recipe"]["kind"]),
            prongs=tuple(d["recipe"]["prongs"]),
            saddle_openings=d["recipe"]["saddle_openings"],
        )
        domains[s] = DomainSpec(
            profile=LengthProfile(tuple(d["profile"])), genus=d["genus"], recipe=recipe
        )
    repairs = {
        s: RepairLog(
            steps=tuple(
                RepairStep(
                    op=RepairOp(step["op"]),
                    before=tuple(step["before"]),
                    after=tuple(step["after"]),
                )
                for step in steps
            )
        )
        for s, steps in data["repairs"].items()
        if steps
    }
    return RealizationCertificate(
        order=order,
        roles=roles,
        assignment=assignment,
        gluing=gluing,
        boundary=boundary,
        domains=domains,
        repairs=repairs,
        north_south=tuple(tuple(p) for p in data["north_south"]),
        handle_pairs=tuple(tuple(p) for p in data["handles"]),
        vertex_count=data["vertex_count"],
        edge_count=data["edge_count"],
        handle_count=data["handle_count"],
        repair_extra_pairs=data["repair_extra_pairs"],
        chi=data["chi"],
        connected=data["connected"],
        genus=data["genus"],
        components=tuple(
            ComponentSummary(
                elements=tuple(c["elements"]), chi=c["chi"], genus=c["genus"]
            )
            for c in data["components"]
        ),
        notes=tuple(data["notes"]),
        matching_strategy=data["matching_strategy"],
    )
