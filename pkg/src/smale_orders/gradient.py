"""Necessary-condition checks and gradient-like realizability.

When the connectivity condition fails at a maximal element, that element
could only be realized by a non-trivial repeller, and then everything two or
more steps below it must be a periodic point.  That forces two checkable
rules below such an element: no non-extremal element may touch more than two
maximal or two minimal elements (R1, a separatrix count), and every minimal
element below must itself satisfy the connectivity condition (R2).  The
mirrored rules apply below-to-above for minimal elements.

For orders shaped like gradient-like diffeomorphisms (only first-generation
saddles, each touching at most two extremals per side) realizability is a
pure graph embedding question: the graph of repellers joined by saddles must
embed cellularly in some closed oriented surface so that its dual is the
graph of attractors joined by saddles.  Rotation systems enumerate those
embeddings exhaustively.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DisconnectedGraph, NotGradientShape
from .order import FiniteOrder, Role, check_connectivity, classify


@dataclass(frozen=True)
class Violation:
    rule: str  # "Connectivity" | "R1" | "R2"
    witnesses: tuple[str, ...]
    detail: str

    def to_dict(self) -> dict:
        return {"rule": self.rule, "witnesses": list(self.witnesses), "detail": self.detail}


@dataclass(frozen=True)
class ViolationReport:
    violations: tuple[Violation, ...]

    @property
    def empty(self) -> bool:
        return not self.violations

    def rules(self) -> tuple[str, ...]:
        return tuple(sorted({v.rule for v in self.violations}))

    def to_dict(self) -> dict:
        return {"violations": [v.to_dict() for v in self.violations]}


def check_necessary(order: FiniteOrder) -> ViolationReport:
    """Fire the rules forced by theory at every connectivity failure."""
    roles = classify(order)
    report = check_connectivity(order)
    failures = set(report.failures())
    found: dict = {}

    def add(rule, witnesses, detail):
        key = (rule, tuple(sorted(set(witnesses))))
        if key not in found:
            found[key] = Violation(rule=rule, witnesses=key[1], detail=detail)

    maxes = set(order.maximal_elements)
    mins = set(order.minimal_elements)

    for e in sorted(failures):
        is_max = e in maxes
        side = order.down_set(e) if is_max else order.up_set(e)
        _, comps = report.entries[e]
        detail = (
            f"the comparability graph {'below' if is_max else 'above'} {e} splits"
            f" into {len(comps)} components"
        )
        if is_max:
            deep = sorted(
                x
                for x in side
                if x not in mins and any(order.greater(y, x) for y in side)
            )
        else:
            deep = sorted(
                x
                for x in side
                if x not in maxes and any(order.greater(x, y) for y in side)
            )
        if deep:
            which = "attracting" if is_max else "repelling"
            detail += (
                f"; {e} would have to be a non-trivial piece, forcing"
                f" {', '.join(deep)} to be {which} periodic points, which"
                " their further relations forbid"
            )
        add("Connectivity", (e,), detail)

        for x in sorted(side):
            if roles.roles[x] is not Role.SADDLE:
                continue
            max_anc = sorted(m for m in order.up_set(x) if m in maxes)
            min_desc = sorted(m for m in order.down_set(x) if m in mins)
            if len(max_anc) > 2 or len(min_desc) > 2:
                add(
                    "R1",
                    (e, x),
                    f"{x} below a forced non-trivial piece must be a periodic"
                    f" point with two separatrices per side, but it touches"
                    f" {len(max_anc)} maximal and {len(min_desc)} minimal elements",
                )
        opposite = mins if is_max else maxes
        for b in sorted(side & opposite):
            if b in failures:
                add(
                    "R2",
                    (e, b),
                    f"{b} must be a periodic point under a non-trivial {e},"
                    " but it fails the connectivity condition itself",
                )

    ordered = tuple(found[k] for k in sorted(found))
    return ViolationReport(violations=ordered)


# --------------------------------------------------------------------------
# level graphs
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class LevelGraph:
    """Multigraph with loops: vertices are extremals of one side, one edge
    per first-generation saddle joining its (at most two) neighbors."""

    vertices: tuple[str, ...]
    edges: tuple  # ((label, (u, v)), ...) loops as (u, u)

    def endpoint_pairs(self) -> tuple:
        return tuple(pair for _, pair in self.edges)

    def degree(self, v: str) -> int:
        return sum((pair.count(v)) for _, pair in self.edges)

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"label": lab, "ends": list(pair)} for lab, pair in self.edges],
        }


def level_graphs(order: FiniteOrder) -> tuple[LevelGraph, LevelGraph]:
    """The graphs of the two highest and two lowest levels."""
    roles = classify(order)
    maxes = set(order.maximal_elements)
    mins = set(order.minimal_elements)
    top_edges, bottom_edges = [], []
    for s in roles.saddles():
        if roles.generations[s] != 1 or any(
            roles.roles[x] is Role.SADDLE for x in order.down_set(s)
        ):
            raise NotGradientShape(f"saddle {s} is not first generation on both sides")
        ups = sorted(order.up_set(s) & maxes)
        downs = sorted(order.down_set(s) & mins)
        if not 1 <= len(ups) <= 2 or not 1 <= len(downs) <= 2:
            raise NotGradientShape(
                f"saddle {s} touches {len(ups)} maximal and {len(downs)} minimal"
                " elements; gradient-like saddles allow at most two per side"
            )
        top_edges.append((s, (ups[0], ups[-1])))
        bottom_edges.append((s, (downs[0], downs[-1])))
    highest = LevelGraph(
        vertices=tuple(sorted(maxes)), edges=tuple(sorted(top_edges))
    )
    lowest = LevelGraph(
        vertices=tuple(sorted(mins)), edges=tuple(sorted(bottom_edges))
    )
    return highest, lowest


# --------------------------------------------------------------------------
# rotation systems and cellular embeddings
# --------------------------------------------------------------------------

Dart = tuple[int, int]  # (edge index, end)


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic order of edge-ends around each vertex."""

    rotation: dict  # vertex -> tuple[Dart, ...]

    def to_dict(self) -> dict:
        return {v: [list(d) for d in darts] for v, darts in sorted(self.rotation.items())}


@dataclass(frozen=True)
class Embedding:
    rotation: RotationSystem
    faces: tuple  # tuple of dart tuples
    genus: int

    @property
    def face_count(self) -> int:
        return len(self.faces)


def _darts_at(graph: LevelGraph) -> dict:
    at: dict = {v: [] for v in graph.vertices}
    for idx, (_, (u, v)) in enumerate(graph.edges):
        at[u].append((idx, 0))
        at[v].append((idx, 1))
    return {v: tuple(sorted(ds)) for v, ds in at.items()}


def _graph_connected(graph: LevelGraph) -> bool:
    if len(graph.vertices) <= 1:
        return True
    adj = {v: set() for v in graph.vertices}
    for _, (u, v) in graph.edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {graph.vertices[0]}
    stack = [graph.vertices[0]]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(graph.vertices)


def _trace_faces(rotation: dict):
    """Orbits of the face permutation: from a dart, flip to the other end of
    its edge, then take the next dart counterclockwise there."""
    succ = {}
    for darts in rotation.values():
        for i, d in enumerate(darts):
            succ[d] = darts[(i + 1) % len(darts)]

    def alpha(d: Dart) -> Dart:
        return (d[0], 1 - d[1])

    faces = []
    seen = set()
    for start in sorted(succ):
        if start in seen:
            continue
        face = []
        d = start
        while d not in seen:
            seen.add(d)
            face.append(d)
            d = succ[alpha(d)]
        faces.append(tuple(face))
    return tuple(faces)


def enumerate_embeddings(graph: LevelGraph, max_genus: int | None = None):
    """All rotation systems of the graph with genus at most the bound.

    The count of rotation systems is the product over vertices of
    (degree - 1)! and each one determines a cellular embedding in a closed
    oriented surface whose faces come from the standard tracing rule.
    Deterministic lexicographic order.  A vertex without edges contributes
    one face (point on a sphere).
    """
    if not _graph_connected(graph):
        raise DisconnectedGraph(f"level graph on {graph.vertices} is disconnected")
    if max_genus is None:
        max_genus = len(graph.edges)
    darts_at = _darts_at(graph)
    vertices = list(graph.vertices)
    choices = []
    for v in vertices:
        ds = darts_at[v]
        if len(ds) <= 1:
            choices.append([ds])
        else:
            choices.append([(ds[0],) + rest for rest in itertools.permutations(ds[1:])])
    out = []
    v_count = len(vertices)
    e_count = len(graph.edges)
    for combo in itertools.product(*choices):
        rotation = dict(zip(vertices, combo))
        faces = _trace_faces(rotation)
        f_count = len(faces) if e_count else 1
        chi = v_count - e_count + f_count
        if chi % 2:
            raise AssertionError(f"odd characteristic {chi} from a rotation system")
        genus = (2 - chi) // 2
        if genus < 0:
            raise AssertionError(f"negative genus from rotation system {rotation}")
        if genus <= max_genus:
            out.append(
                Embedding(
                    rotation=RotationSystem(rotation=rotation),
                    faces=faces if e_count else ((),),
                    genus=genus,
                )
            )
    return out


def dual_graph(embedding: Embedding, graph: LevelGraph) -> LevelGraph:
    """One dual vertex per face, one dual edge per primal edge joining the
    faces on its two sides (a loop when both sides see the same face)."""
    face_of: dict = {}
    for i, face in enumerate(embedding.faces):
        for d in face:
            face_of[d] = i
    names = tuple(f"f{i}" for i in range(len(embedding.faces)))
    edges = []
    for idx, (label, _) in enumerate(graph.edges):
        a = face_of[(idx, 0)]
        b = face_of[(idx, 1)]
        u, v = sorted((names[a], names[b]))
        edges.append((label, (u, v)))
    return LevelGraph(vertices=names, edges=tuple(sorted(edges)))


def dual_map(embedding: Embedding, graph: LevelGraph) -> Embedding:
    """The dual combinatorial map: faces become vertices, rotation given by
    the face traversal, and the dual's faces are traced the same way."""
    rotation = {f"f{i}": face for i, face in enumerate(embedding.faces) if face}
    if not rotation:
        rotation = {"f0": ()}
    faces = _trace_faces({k: v for k, v in rotation.items() if v})
    v_count = len(embedding.faces)
    e_count = len(graph.edges)
    f_count = len(faces) if e_count else 1
    genus = (2 - (v_count - e_count + f_count)) // 2
    return Embedding(rotation=RotationSystem(rotation=rotation), faces=faces or ((),), genus=genus)


def graph_of_map(embedding: Embedding, graph: LevelGraph) -> LevelGraph:
    """Underlying multigraph of a combinatorial map (edge labels kept)."""
    vertex_of: dict = {}
    for v, darts in embedding.rotation.rotation.items():
        for d in darts:
            vertex_of[d] = v
    edges = []
    for idx, (label, _) in enumerate(graph.edges):
        u = vertex_of[(idx, 0)]
        v = vertex_of[(idx, 1)]
        a, b = sorted((u, v))
        edges.append((label, (a, b)))
    vertices = tuple(sorted(embedding.rotation.rotation))
    return LevelGraph(vertices=vertices, edges=tuple(sorted(edges)))


# --------------------------------------------------------------------------
# multigraph isomorphism (small instances, backtracking)
# --------------------------------------------------------------------------


def _edge_multiset(graph: LevelGraph, mapping: dict):
    return sorted(
        tuple(sorted((mapping[u], mapping[v]))) for _, (u, v) in graph.edges
    )


def multigraphs_isomorphic(a: LevelGraph, b: LevelGraph) -> bool:
    """Vertex bijection preserving edge multiplicities and loops."""
    if len(a.vertices) != len(b.vertices) or len(a.edges) != len(b.edges):
        return False

    def signature(g: LevelGraph, v: str):
        loops = sum(1 for _, (x, y) in g.edges if x == y == v)
        return (g.degree(v), loops)

    sig_a = {v: signature(a, v) for v in a.vertices}
    sig_b = {v: signature(b, v) for v in b.vertices}
    if sorted(sig_a.values()) != sorted(sig_b.values()):
        return False

    b_edges = sorted(tuple(sorted(pair)) for _, pair in b.edges)
    avs = sorted(a.vertices, key=lambda v: (sig_a[v], v))

    def backtrack(i: int, mapping: dict, used: set) -> bool:
        if i == len(avs):
            return _edge_multiset(a, mapping) == b_edges
        v = avs[i]
        for w in b.vertices:
            if w in used or sig_b[w] != sig_a[v]:
                continue
            mapping[v] = w
            if backtrack(i + 1, mapping, used | {w}):
                return True
            del mapping[v]
        return False

    return backtrack(0, {}, set())


# --------------------------------------------------------------------------
# the gradient-like decision
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class GradientVerdict:
    realizable: bool
    genus: int | None
    max_genus_searched: int
    embedding: Embedding | None
    dual: LevelGraph | None

    def to_dict(self) -> dict:
        out = {
            "realizable": self.realizable,
            "genus": self.genus,
            "max_genus_searched": self.max_genus_searched,
        }
        if self.embedding is not None:
            out["rotation_system"] = self.embedding.rotation.to_dict()
            out["faces"] = [[list(d) for d in f] for f in self.embedding.faces]
        if self.dual is not None:
            out["dual"] = self.dual.to_dict()
        return out


def check_gradient_like(order: FiniteOrder, max_genus: int | None = None) -> GradientVerdict:
    """Search cellular embeddings of the highest-level graph whose dual is
    the lowest-level graph; first witness wins, else exhaustion up to the
    genus bound."""
    highest, lowest = level_graphs(order)
    if max_genus is None:
        max_genus = len(highest.edges)
    for emb in enumerate_embeddings(highest, max_genus):
        dual = dual_graph(emb, highest)
        if multigraphs_isomorphic(dual, lowest):
            return GradientVerdict(
                realizable=True,
                genus=emb.genus,
                max_genus_searched=max_genus,
                embedding=emb,
                dual=dual,
            )
    return GradientVerdict(
        realizable=False,
        genus=None,
        max_genus_searched=max_genus,
        embedding=None,
        dual=None,
    )
