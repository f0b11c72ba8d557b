"""Realizability of finite partial orders as Smale orders of surface
diffeomorphisms with trivial attractors and repellers."""

from .order import (
    ConnectivityReport,
    FiniteOrder,
    Role,
    RoleMap,
    check_connectivity,
    classify,
    load_order,
)
from .cycles import (
    CycleAssignment,
    StarLedger,
    Transition,
    admissible_transitions,
    balance_cycles,
    build_initial_cycles,
    star_ledger,
    verify_star,
)
from .bands import (
    Band,
    BandGluing,
    BoundaryCycle,
    boundary_profile,
    glue_bands,
    verify_boundary_cycles,
)
from .domains import (
    DomainSpec,
    LengthProfile,
    Recipe,
    RecipeKind,
    RepairLog,
    Verdict,
    check_constructible,
    domain_genus,
    repair_profile,
)
from .assemble import (
    PlugPlan,
    RealizationCertificate,
    add_saddle_handles,
    assemble,
    plan_plugs,
)
from .gradient import (
    GradientVerdict,
    LevelGraph,
    RotationSystem,
    ViolationReport,
    check_gradient_like,
    check_necessary,
    enumerate_embeddings,
    level_graphs,
)
from .pipeline import certificate_from_dict, realize, verify_certificate

__version__ = "0.1.0"

__all__ = [
    "Band",
    "BandGluing",
    "BoundaryCycle",
    "ConnectivityReport",
    "CycleAssignment",
    "DomainSpec",
    "FiniteOrder",
    "GradientVerdict",
    "LengthProfile",
    "LevelGraph",
    "PlugPlan",
    "RealizationCertificate",
    "Recipe",
    "RecipeKind",
    "RepairLog",
    "Role",
    "RoleMap",
    "RotationSystem",
    "StarLedger",
    "Transition",
    "Verdict",
    "ViolationReport",
    "add_saddle_handles",
    "admissible_transitions",
    "assemble",
    "balance_cycles",
    "boundary_profile",
    "build_initial_cycles",
    "certificate_from_dict",
    "check_connectivity",
    "check_constructible",
    "check_gradient_like",
    "check_necessary",
    "classify",
    "domain_genus",
    "enumerate_embeddings",
    "glue_bands",
    "level_graphs",
    "load_order",
    "plan_plugs",
    "realize",
    "repair_profile",
    "star_ledger",
    "verify_boundary_cycles",
    "verify_certificate",
    "verify_star",
]
