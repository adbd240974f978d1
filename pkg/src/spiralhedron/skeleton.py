"""Edge orbits, stars, and the transitive graph they generate.

Edges are unordered segments between exact points, stored with the
lexicographically smaller endpoint first so that equality and hashing are
structural.  Grünbaum style polyhedra allow self intersecting immersions, so
no planarity or edge crossing checks are imposed anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import deque

from .field import Vec3Q
from .group import GroupSpec, Window, point_stabilizer, orbit_points, paired_orbit, \
    _rational_upper_sqrt
from .isometry import Isometry


class SkeletonError(Exception):
    pass


class Edge:
    """Unordered segment with distinct exact endpoints."""

    __slots__ = ("_p", "_q")

    def __init__(self, p: Vec3Q, q: Vec3Q) -> None:
        if p == q:
            raise ValueError("edge endpoints must be distinct")
        if q.sort_key() < p.sort_key():
            p, q = q, p
        self._p = p
        self._q = q

    @property
    def p(self) -> Vec3Q:
        return self._p

    @property
    def q(self) -> Vec3Q:
        return self._q

    def __repr__(self) -> str:
        return f"Edge({self._p!r}, {self._q!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Edge):
            return NotImplemented
        return self._p == other._p and self._q == other._q

    def __hash__(self) -> int:
        return hash((self._p, self._q))

    def endpoints(self) -> tuple[Vec3Q, Vec3Q]:
        return (self._p, self._q)

    def other(self, v: Vec3Q) -> Vec3Q:
        if v == self._p:
            return self._q
        if v == self._q:
            return self._p
        raise ValueError("vertex is not an endpoint of this edge")

    def has_endpoint(self, v: Vec3Q) -> bool:
        return v == self._p or v == self._q

    def apply(self, g: Isometry) -> Edge:
        return Edge(g.apply(self._p), g.apply(self._q))

    def length_sq(self):
        return (self._q - self._p).norm_sq()

    def sort_key(self):
        return (self._p.sort_key(), self._q.sort_key())


@dataclass(frozen=True)
class SkeletonGraph:
    vertices: tuple[Vec3Q, ...]
    edges: tuple[Edge, ...]

    def adjacency(self) -> dict[Vec3Q, tuple[Vec3Q, ...]]:
        adj: dict[Vec3Q, list[Vec3Q]] = {v: [] for v in self.vertices}
        for e in self.edges:
            adj[e.p].append(e.q)
            adj[e.q].append(e.p)
        return {v: tuple(sorted(ns, key=Vec3Q.sort_key)) for v, ns in adj.items()}

    def degree(self, v: Vec3Q) -> int:
        return sum(1 for e in self.edges if e.has_endpoint(v))


def edge_orbit(group: GroupSpec, e: Edge, window: Window) -> SkeletonGraph:
    """All images of e with at least one endpoint in the window.

    Precondition checked: both endpoints lie in one point orbit, otherwise the
    graph could not be vertex transitive.
    """
    reach = max(
        _rational_upper_sqrt(e.p.norm_sq()),
        _rational_upper_sqrt(e.q.norm_sq()),
    )
    probe = window.grow(reach)
    orbit_of_p = set(orbit_points(group, e.p, probe))
    if e.q not in orbit_of_p:
        raise SkeletonError("not vertex-transitive: edge endpoints lie in different orbits")

    edges: set[Edge] = set()
    vertices: set[Vec3Q] = set()
    for a, b in paired_orbit(group, e.p, e.q, window):
        edges.add(Edge(a, b))
        vertices.add(a)
        vertices.add(b)
    return SkeletonGraph(
        vertices=tuple(sorted(vertices, key=Vec3Q.sort_key)),
        edges=tuple(sorted(edges, key=Edge.sort_key)),
    )


def star(group: GroupSpec, u: Vec3Q, v: Vec3Q) -> tuple[Edge, ...]:
    """The stabilizer orbit of [u v]: every edge of the star emanates from u."""
    if u == v:
        raise ValueError("star needs distinct points")
    stab = point_stabilizer(group, u)
    endpoints = {g.apply(v) for g in stab}
    return tuple(sorted((Edge(u, q) for q in endpoints), key=Edge.sort_key))


def star_endpoints(edges: tuple[Edge, ...], u: Vec3Q) -> tuple[Vec3Q, ...]:
    return tuple(e.other(u) for e in edges)


@dataclass(frozen=True)
class ClassStarReport:
    representative: Vec3Q
    member_count: int
    orbit_groups: tuple[tuple[Vec3Q, int], ...]  # (orbit representative, star size)
    star_sizes: tuple[int, ...]                  # distinct sizes seen in the class
    uniform_size: bool
    size_witnesses: tuple[Vec3Q, Vec3Q] | None   # members with differing star sizes
    passed: bool                                 # conjugation invariance held
    failure_witness: tuple[Vec3Q, Vec3Q] | None


@dataclass(frozen=True)
class StarInvarianceReport:
    classes: tuple[ClassStarReport, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.classes)


def star_class_invariance(
    group: GroupSpec,
    partition: tuple[tuple[Vec3Q, ...], ...],
    window: Window,
    u: Vec3Q,
) -> StarInvarianceReport:
    """Check star invariance along the stabilizer action, class by class.

    For every member v of a lattice class (inside the core window, v != u) the
    star Q_v is the stabilizer orbit of [u v].  Members related by a
    stabilizer element must have setwise congruent stars; this is verified
    exhaustively and is what `passed` certifies.  The report also records the
    distinct star sizes met in each class: a class mixing sizes is flagged via
    `uniform_size`, which is the mismatch hook used by negative controls.
    """
    stab = point_stabilizer(group, u)
    reports: list[ClassStarReport] = []
    for members in partition:
        inside = [v for v in members if v != u and window.in_core(v)]
        star_cache: dict[Vec3Q, frozenset[Vec3Q]] = {}

        def star_set(v: Vec3Q) -> frozenset[Vec3Q]:
            if v not in star_cache:
                star_cache[v] = frozenset(g.apply(v) for g in stab)
            return star_cache[v]

        passed = True
        failure: tuple[Vec3Q, Vec3Q] | None = None
        seen: set[Vec3Q] = set()
        orbit_groups: list[tuple[Vec3Q, int]] = []
        for v in inside:
            if v in seen:
                continue
            orbit = sorted(star_set(v), key=Vec3Q.sort_key)
            rep_star = star_set(v)
            for q in orbit:
                seen.add(q)
                if q in inside and star_set(q) != rep_star:
                    # conjugation must carry Q_v onto Q_q setwise
                    if not any(
                        frozenset(s.apply(pt) for pt in rep_star) == star_set(q)
                        for s in stab
                    ):
                        passed = False
                        failure = (v, q)
            orbit_groups.append((orbit[0], len(rep_star)))

        sizes = tuple(sorted({size for _, size in orbit_groups}))
        uniform = len(sizes) <= 1
        size_witness = None
        if not uniform:
            by_size: dict[int, Vec3Q] = {}
            for rep, size in orbit_groups:
                by_size.setdefault(size, rep)
            keys = sorted(by_size)
            size_witness = (by_size[keys[0]], by_size[keys[-1]])
        reports.append(
            ClassStarReport(
                representative=members[0],
                member_count=len(inside),
                orbit_groups=tuple(orbit_groups),
                star_sizes=sizes,
                uniform_size=uniform,
                size_witnesses=size_witness,
                passed=passed,
                failure_witness=failure,
            )
        )
    return StarInvarianceReport(classes=tuple(reports))


@dataclass(frozen=True)
class ConnectivityReport:
    connected_in_core: bool
    core_vertex_count: int
    reached_count: int
    witness: Vec3Q | None  # an unreached core vertex, if any

    def __str__(self) -> str:
        if self.connected_in_core:
            return f"connected in core window ({self.core_vertex_count} vertices)"
        return f"disconnected: {self.witness!r} unreachable"


def connectivity_check(graph: SkeletonGraph, window: Window, start: Vec3Q) -> ConnectivityReport:
    """Breadth first reachability from start inside the full window.

    Passing certifies connectivity of the core window only; it is a necessary
    check for the infinite graph, not a proof.
    """
    adj = graph.adjacency()
    if start not in adj:
        raise SkeletonError("start vertex is not in the graph")
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for n in adj.get(v, ()):
            if n not in seen and window.contains(n):
                seen.add(n)
                queue.append(n)
    core = [v for v in graph.vertices if window.in_core(v)]
    missing = [v for v in core if v not in seen]
    return ConnectivityReport(
        connected_in_core=not missing,
        core_vertex_count=len(core),
        reached_count=len([v for v in core if v in seen]),
        witness=missing[0] if missing else None,
    )
