"""Vertex figures, angle classes, and face filling.

A vertex figure at the base point u is a cyclic order on the far endpoints of
the star, in which consecutive endpoints share a face.  Faces are grown from
an angle (a consecutive pair) by the alternation rule: around the figure the
angle classes alternate between two buckets, and along a face the buckets must
alternate as well, which leaves exactly one continuation at every vertex.

Local figures away from u are group transports of the base figure.  When the
base figure is not invariant under the full stabilizer of u there are two
candidate transports per vertex, and the choice is pinned edge by edge: the
beta-bucket flank classes at the two ends of an edge must differ.  With that
convention the filled face system is consistent (every edge ends up in exactly
two faces) and is the orbit of the base face under the index two subgroup of
the enumerated group that preserves the resulting figure field.  The full
group orbit would put four faces on every edge and is not a polyhedron; the
pinned system is what the face orbit of this module returns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import permutations

from .field import QSqrt3, Vec3Q
from .group import GroupSpec, Window, point_stabilizer, transporters
from .isometry import Isometry
from .skeleton import Edge, SkeletonGraph, edge_orbit, star, star_endpoints


class FaceFillError(Exception):
    pass


class AmbiguousFillingError(FaceFillError):
    """Raised when the filling rule does not determine a unique continuation."""


class AlternationError(FaceFillError):
    """Raised when no continuation keeps the angle buckets alternating."""


# ---------------------------------------------------------------------------
# Angle classes


class AngleTable:
    """Congruence classes of endpoint pairs of one star, under the stabilizer.

    Two angles at u are equivalent when a stabilizer element carries one
    unordered endpoint pair onto the other.  Class ids are assigned in
    canonical order of their least representative pair.
    """

    def __init__(self, u: Vec3Q, endpoints: tuple[Vec3Q, ...], stab: tuple[Isometry, ...]):
        self.u = u
        self.endpoints = tuple(sorted(endpoints, key=Vec3Q.sort_key))
        self.stab = stab
        pairs = [
            frozenset((p, q))
            for i, p in enumerate(self.endpoints)
            for q in self.endpoints[i + 1:]
        ]
        assignment: dict[frozenset[Vec3Q], int] = {}
        orbits: list[frozenset[Vec3Q]] = []
        for pair in sorted(pairs, key=self._pair_key):
            if pair in assignment:
                continue
            cls = len(orbits)
            orbits.append(pair)
            for s in stab:
                image = frozenset(s.apply(p) for p in pair)
                assignment[image] = cls
        self._assignment = assignment
        self.class_representatives = tuple(orbits)

    @staticmethod
    def _pair_key(pair: frozenset[Vec3Q]):
        return tuple(sorted(p.sort_key() for p in pair))

    def class_of(self, pair: frozenset[Vec3Q]) -> int:
        try:
            return self._assignment[pair]
        except KeyError:
            raise FaceFillError("pair is not a pair of star endpoints") from None

    def cos_value(self, pair: frozenset[Vec3Q]) -> QSqrt3 | None:
        """Exact cosine when both edges have equal length, else None."""
        a, b = sorted(pair, key=Vec3Q.sort_key)
        va, vb = a - self.u, b - self.u
        na, nb = va.norm_sq(), vb.norm_sq()
        if na == nb:
            return va.dot(vb) / na
        return None

    def invariant(self, pair: frozenset[Vec3Q]) -> tuple[QSqrt3, QSqrt3, QSqrt3]:
        """(dot, |a|^2, |b|^2), the exact data behind angle congruence."""
        a, b = sorted(pair, key=Vec3Q.sort_key)
        va, vb = a - self.u, b - self.u
        return (va.dot(vb), va.norm_sq(), vb.norm_sq())


@dataclass(frozen=True)
class AngleClass:
    label: str
    class_id: int
    representative: frozenset[Vec3Q]
    cos_value: QSqrt3 | None
    multiplicity: int  # appearances around the figure


# ---------------------------------------------------------------------------
# Vertex figures


@dataclass(frozen=True)
class VertexFigure:
    """Canonical cyclic order on the star's far endpoints."""

    cycle: tuple[Vec3Q, ...]

    def pairs(self) -> tuple[frozenset[Vec3Q], ...]:
        q = len(self.cycle)
        return tuple(
            frozenset((self.cycle[i], self.cycle[(i + 1) % q])) for i in range(q)
        )

    def neighbors(self) -> dict[Vec3Q, tuple[Vec3Q, Vec3Q]]:
        q = len(self.cycle)
        return {
            self.cycle[i]: (self.cycle[(i - 1) % q], self.cycle[(i + 1) % q])
            for i in range(q)
        }


def _cycle_canonical(cycle: tuple[Vec3Q, ...]) -> tuple[Vec3Q, ...]:
    """Least rotation or reflection of the cycle, by coordinate order."""
    q = len(cycle)
    best = None
    for seq in (cycle, tuple(reversed(cycle))):
        for r in range(q):
            rot = seq[r:] + seq[:r]
            key = tuple(p.sort_key() for p in rot)
            if best is None or key < best[0]:
                best = (key, rot)
    return best[1]


def _figure_canonical(cycle: tuple[Vec3Q, ...], stab: tuple[Isometry, ...]) -> tuple[Vec3Q, ...]:
    """Canonical form modulo cycle symmetry and the stabilizer action."""
    best = None
    for s in stab:
        image = tuple(s.apply(p) for p in cycle)
        cand = _cycle_canonical(image)
        key = tuple(p.sort_key() for p in cand)
        if best is None or key < best[0]:
            best = (key, cand)
    return best[1]


def _alternation_buckets(class_seq: tuple[int, ...]) -> dict[int, int] | None:
    """Two-bucket split proving the classes alternate, or None.

    A single class is vacuously alternating.  Otherwise the classes met at
    even positions must be disjoint from those at odd positions, which fails
    for odd cycle lengths.
    """
    distinct = set(class_seq)
    if len(distinct) == 1:
        return {class_seq[0]: 0}
    if len(class_seq) % 2 == 1:
        return None
    evens = {class_seq[i] for i in range(0, len(class_seq), 2)}
    odds = {class_seq[i] for i in range(1, len(class_seq), 2)}
    if evens & odds:
        return None
    # normalize: bucket 0 holds the smallest class id
    if min(evens) > min(odds):
        evens, odds = odds, evens
    buckets = {c: 0 for c in evens}
    buckets.update({c: 1 for c in odds})
    return buckets


def figure_class_sequence(figure: VertexFigure, table: AngleTable) -> tuple[int, ...]:
    return tuple(table.class_of(p) for p in figure.pairs())


def enumerate_vertex_figures(
    star_edges: tuple[Edge, ...], stab: tuple[Isometry, ...], u: Vec3Q
) -> list[VertexFigure]:
    """All vertex figure classes for the star, canonical representatives.

    Cyclic orders are reduced modulo rotation, reflection and the stabilizer
    action, then filtered by the alternation condition on their angle
    classes.  Results are sorted canonically so class labels downstream are
    reproducible.  The reduction runs on endpoint indices: the stabilizer acts
    on the endpoint set by permutations.
    """
    endpoints = tuple(sorted(star_endpoints(star_edges, u), key=Vec3Q.sort_key))
    n = len(endpoints)
    if n < 3:
        raise FaceFillError("degenerate vertex figure: star has fewer than 3 edges")
    table = AngleTable(u, endpoints, stab)
    index = {p: i for i, p in enumerate(endpoints)}
    perms = {tuple(index[s.apply(p)] for p in endpoints) for s in stab}
    cls: dict[tuple[int, int], int] = {}
    for i in range(n):
        for j in range(i + 1, n):
            c = table.class_of(frozenset((endpoints[i], endpoints[j])))
            cls[(i, j)] = cls[(j, i)] = c

    def canonical(cycle: tuple[int, ...]) -> tuple[int, ...]:
        best = None
        for perm in perms:
            img = tuple(perm[i] for i in cycle)
            for seq in (img, tuple(reversed(img))):
                for r in range(n):
                    rot = seq[r:] + seq[:r]
                    if best is None or rot < best:
                        best = rot
        return best

    seen: set[tuple[int, ...]] = set()
    out: list[VertexFigure] = []
    for perm in permutations(range(1, n)):
        cycle = (0,) + perm
        canon = canonical(cycle)
        if canon in seen:
            continue
        seen.add(canon)
        class_seq = tuple(cls[(canon[i], canon[(i + 1) % n])] for i in range(n))
        if _alternation_buckets(class_seq) is None:
            continue
        out.append(VertexFigure(tuple(endpoints[i] for i in canon)))
    out.sort(key=lambda f: tuple(p.sort_key() for p in f.cycle))
    return out


def angle_classes(
    figure: VertexFigure, table: AngleTable
) -> list[AngleClass]:
    """The figure's angle classes with canonical, bucket aware labels.

    The bucket with fewer distinct classes is alpha (ties go to the bucket of
    the least class id); the other bucket's classes are beta1, beta2, ... in
    order of exact cosine descending, then class id.
    """
    seq = figure_class_sequence(figure, table)
    buckets = _alternation_buckets(seq)
    if buckets is None:
        raise AlternationError("figure's angle classes do not alternate")
    by_class: dict[int, int] = {}
    for c in seq:
        by_class[c] = by_class.get(c, 0) + 1
    bucket_classes: dict[int, list[int]] = {0: [], 1: []}
    for c, b in buckets.items():
        bucket_classes[b].append(c)
    sizes = {b: len(cs) for b, cs in bucket_classes.items() if cs}
    if len(sizes) == 1:
        alpha_bucket = next(iter(sizes))
    else:
        alpha_bucket = min(sizes, key=lambda b: (sizes[b], min(bucket_classes[b])))

    def cos_key(cls: int):
        rep = next(p for p in figure.pairs() if table.class_of(p) == cls)
        cos = table.cos_value(rep)
        return (0, -cos.to_float()) if cos is not None else (1, cls)

    out: list[AngleClass] = []
    alpha_classes = sorted(bucket_classes[alpha_bucket], key=cos_key)
    beta_classes = sorted(bucket_classes[1 - alpha_bucket], key=cos_key)
    for i, cls in enumerate(alpha_classes):
        label = "alpha" if len(alpha_classes) == 1 else f"alpha{i + 1}"
        rep = next(p for p in figure.pairs() if table.class_of(p) == cls)
        out.append(AngleClass(label, cls, rep, table.cos_value(rep), by_class[cls]))
    for i, cls in enumerate(beta_classes):
        label = "beta" if len(beta_classes) == 1 else f"beta{i + 1}"
        rep = next(p for p in figure.pairs() if table.class_of(p) == cls)
        out.append(AngleClass(label, cls, rep, table.cos_value(rep), by_class[cls]))
    return out


# ---------------------------------------------------------------------------
# Faces


@dataclass(frozen=True)
class Face:
    """A traced face: closed polygon or window-truncated infinite path."""

    path: tuple[Vec3Q, ...]
    closed: bool
    truncated: bool
    angle_class_ids: tuple[int, ...]  # classes at interior path vertices

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        pts = self.path + (self.path[0],) if self.closed else self.path
        return frozenset(Edge(pts[i], pts[i + 1]) for i in range(len(pts) - 1))

    def vertices(self) -> tuple[Vec3Q, ...]:
        return self.path

    def __hash__(self) -> int:
        return hash(self.edge_set)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Face):
            return NotImplemented
        return self.edge_set == other.edge_set

    def core_key(self, window: Window) -> frozenset[Edge]:
        return frozenset(
            e for e in self.edge_set if window.in_core(e.p) and window.in_core(e.q)
        )


class FigureField:
    """Per-vertex local figures, transported from the base figure.

    Built over one connected graph component by breadth first propagation.
    When the base figure has a nontrivial orbit under the stabilizer the local
    choice is pinned by the edge mesh rule (opposite beta flank classes); the
    construction verifies consistency on every edge it crosses and raises if
    the pin is indeterminate or contradictory.
    """

    def __init__(
        self,
        group: GroupSpec,
        u: Vec3Q,
        figure: VertexFigure,
        graph: SkeletonGraph,
        window: Window,
    ) -> None:
        self.group = group
        self.u = u
        self.window = window
        self.figure = figure
        self.stab = point_stabilizer(group, u)
        endpoints = tuple(sorted(figure.cycle, key=Vec3Q.sort_key))
        self.table = AngleTable(u, endpoints, self.stab)
        seq = figure_class_sequence(figure, self.table)
        buckets = _alternation_buckets(seq)
        if buckets is None:
            raise AlternationError("base figure's angle classes do not alternate")
        self.buckets = buckets

        reach = max((p.norm_sq() for p in graph.vertices), default=u.norm_sq())
        from .group import _rational_upper_sqrt

        probe = Window(max(window.radius, _rational_upper_sqrt(reach)) + 1, window.margin)
        self.transport = transporters(group, u, probe)

        # distinct stabilizer images of the base figure
        variant_cycles: dict[frozenset[frozenset[Vec3Q]], tuple[Vec3Q, ...]] = {}
        for s in self.stab:
            img = tuple(s.apply(p) for p in figure.cycle)
            key = frozenset(
                frozenset((img[i], img[(i + 1) % len(img)])) for i in range(len(img))
            )
            variant_cycles.setdefault(key, img)
        self.variants = tuple(variant_cycles.values())

        self.local: dict[Vec3Q, dict[Vec3Q, tuple[Vec3Q, Vec3Q]]] = {}
        self.local_pairs: dict[Vec3Q, frozenset[frozenset[Vec3Q]]] = {}
        self._transport_cache: dict[Vec3Q, Isometry] = {}
        self._build(graph)

    # -- class bookkeeping ---------------------------------------------------

    def class_at(self, b: Vec3Q, pair: frozenset[Vec3Q]) -> int:
        inv = self.transport[b].inverse()
        base_pair = frozenset(inv.apply(p) for p in pair)
        return self.table.class_of(base_pair)

    def bucket_at(self, b: Vec3Q, pair: frozenset[Vec3Q]) -> int:
        return self.buckets[self.class_at(b, pair)]

    def _beta_flank_class(self, b: Vec3Q, cycle_neighbors: dict, member: Vec3Q) -> int:
        left, right = cycle_neighbors[member]
        cls_l = self.class_at(b, frozenset((member, left)))
        cls_r = self.class_at(b, frozenset((member, right)))
        beta = [c for c in (cls_l, cls_r) if self.buckets[c] == 1]
        if len(beta) == 1:
            return beta[0]
        # single-bucket figures: flank classes coincide
        return cls_l

    # -- field construction --------------------------------------------------

    def _assign(self, b: Vec3Q, cycle: tuple[Vec3Q, ...]) -> None:
        q = len(cycle)
        self.local[b] = {
            cycle[i]: (cycle[(i - 1) % q], cycle[(i + 1) % q]) for i in range(q)
        }
        self.local_pairs[b] = frozenset(
            frozenset((cycle[i], cycle[(i + 1) % q])) for i in range(q)
        )

    def _candidates(self, b: Vec3Q) -> list[tuple[Vec3Q, ...]]:
        g = self.transport[b]
        cands: dict[frozenset[frozenset[Vec3Q]], tuple[Vec3Q, ...]] = {}
        for variant in self.variants:
            img = tuple(g.apply(p) for p in variant)
            key = frozenset(
                frozenset((img[i], img[(i + 1) % len(img)])) for i in range(len(img))
            )
            cands.setdefault(key, img)
        return list(cands.values())

    def _pin(self, a: Vec3Q, b: Vec3Q) -> tuple[Vec3Q, ...]:
        """Choose the local figure at b across edge (a, b)."""
        candidates = self._candidates(b)
        if len(candidates) == 1:
            return candidates[0]
        beta_a = self._beta_flank_class(a, self.local[a], b)
        chosen = []
        for cand in candidates:
            q = len(cand)
            neigh = {cand[i]: (cand[(i - 1) % q], cand[(i + 1) % q]) for i in range(q)}
            if a not in neigh:
                continue
            if self._beta_flank_class(b, neigh, a) != beta_a:
                chosen.append(cand)
        if len(chosen) != 1:
            raise AmbiguousFillingError(
                f"face filling not unique: {len(chosen)} pinned figures at {b!r}"
            )
        return chosen[0]

    def _build(self, graph: SkeletonGraph) -> None:
        from collections import deque

        adj = graph.adjacency()
        if self.u not in adj:
            raise FaceFillError("base point is not a vertex of the graph")
        self._assign(self.u, self.figure.cycle)
        queue = deque([self.u])
        while queue:
            a = queue.popleft()
            for b in adj[a]:
                if b not in self.transport:
                    continue  # outside the transported window; faces truncate here
                if b in self.local:
                    # consistency: re-derive the pin and compare
                    if len(self.variants) > 1:
                        pinned = self._pin(a, b)
                        q = len(pinned)
                        key = frozenset(
                            frozenset((pinned[i], pinned[(i + 1) % q])) for i in range(q)
                        )
                        if key != self.local_pairs[b]:
                            raise FaceFillError(
                                "inconsistent vertex-figure field across an edge"
                            )
                    continue
                self._assign(b, self._pin(a, b))
                queue.append(b)

    # -- tracing ---------------------------------------------------------

    def _next_by_alternation(self, b: Vec3Q, incoming: Vec3Q, prev_bucket: int) -> Vec3Q:
        left, right = self.local[b][incoming]
        options = []
        for flank in dict.fromkeys((left, right)):
            if self.bucket_at(b, frozenset((incoming, flank))) != prev_bucket:
                options.append(flank)
        if not options:
            raise AlternationError("alternation violated: no consistent next edge")
        if len(set(options)) > 1:
            raise AmbiguousFillingError("face filling not unique at a vertex")
        return options[0]

    def _matching_transport(self, b: Vec3Q) -> Isometry:
        """Group element sending u to b and the base figure onto the local one."""
        cached = self._transport_cache.get(b)
        if cached is not None:
            return cached
        g = self.transport[b]
        for s in self.stab:
            h = g.compose(s, check=False)
            image = frozenset(
                frozenset(h.apply(p) for p in pair) for pair in self._base_pairs
            )
            if image == self.local_pairs[b]:
                self._transport_cache[b] = h
                return h
        raise FaceFillError("no transport matches the local figure")

    @cached_property
    def _base_pairs(self) -> frozenset[frozenset[Vec3Q]]:
        return frozenset(self.figure.pairs())

    @cached_property
    def _base_neighbors(self) -> dict[Vec3Q, tuple[Vec3Q, Vec3Q]]:
        return self.figure.neighbors()

    def _next_by_transport(self, b: Vec3Q, incoming: Vec3Q, prev_bucket: int) -> Vec3Q:
        h = self._matching_transport(b)
        hinv = h.inverse()
        n = hinv.apply(incoming)
        left, right = self._base_neighbors[n]
        options = []
        for flank in dict.fromkeys((left, right)):
            cls = self.table.class_of(frozenset((n, flank)))
            if self.buckets[cls] != prev_bucket:
                options.append(flank)
        if not options:
            raise AlternationError("alternation violated: no consistent next edge")
        if len(set(options)) > 1:
            raise AmbiguousFillingError("face filling not unique at a vertex")
        return h.apply(options[0])

    def step(self, b: Vec3Q, incoming: Vec3Q, prev_bucket: int) -> Vec3Q:
        """One face step past b; both methods must agree."""
        by_alt = self._next_by_alternation(b, incoming, prev_bucket)
        by_transport = self._next_by_transport(b, incoming, prev_bucket)
        if by_alt != by_transport:
            raise FaceFillError("transport and alternation methods disagree")
        return by_alt


def trace_face(
    field: FigureField,
    start_vertex: Vec3Q,
    start_pair: tuple[Vec3Q, Vec3Q],
    max_steps: int = 10_000,
) -> Face:
    """The unique face realizing the given angle at the given vertex.

    The pair names two far endpoints consecutive in the local figure.  The
    face is grown in both directions until it closes or leaves the assigned
    field (the window).
    """
    n1, n2 = start_pair
    if start_vertex not in field.local:
        raise FaceFillError("start vertex carries no local figure")
    local = field.local[start_vertex]
    if n2 not in dict.fromkeys(local.get(n1, ())):
        raise FaceFillError("start pair is not consecutive in the local figure")
    seed_pair = frozenset((n1, n2))
    seed_cls = field.class_at(start_vertex, seed_pair)
    seed_bucket = field.buckets[seed_cls]

    def walk(first: Vec3Q) -> tuple[list[Vec3Q], list[int], bool]:
        """Forward path [start_vertex, first, ...]; returns (path, classes, closed)."""
        path = [start_vertex, first]
        classes: list[int] = []
        prev_bucket = seed_bucket
        prev, cur = start_vertex, first
        for _ in range(max_steps):
            if cur not in field.local:
                return path, classes, False
            nxt = field.step(cur, prev, prev_bucket)
            cls = field.class_at(cur, frozenset((prev, nxt)))
            prev_bucket = field.buckets[cls]
            classes.append(cls)
            if (cur, nxt) == (start_vertex, first):
                return path[:-1], classes[:-1], True
            path.append(nxt)
            prev, cur = cur, nxt
        raise FaceFillError("face trace exceeded step budget")

    fwd_path, fwd_classes, closed = walk(n2)
    if closed:
        # rotate so the seed angle sits between path[-1], path[0], path[1]
        return Face(
            path=tuple(fwd_path),
            closed=True,
            truncated=False,
            angle_class_ids=(seed_cls, *fwd_classes),
        )
    bwd_path, bwd_classes, closed_b = walk(n1)
    if closed_b:
        raise FaceFillError("face closed in one direction only")
    path = tuple(reversed(bwd_path)) + tuple(fwd_path[1:])
    classes = tuple(reversed(bwd_classes)) + (seed_cls,) + tuple(fwd_classes)
    return Face(path=path, closed=False, truncated=True, angle_class_ids=classes)


# ---------------------------------------------------------------------------
# Polyhedron assembly


@dataclass(frozen=True)
class Polyhedron:
    """Windowed vertex, edge and face structure with its construction context."""

    vertices: tuple[Vec3Q, ...]
    edges: tuple[Edge, ...]
    faces: tuple[Face, ...]
    group: GroupSpec | None = None
    window: Window | None = None
    base_point: Vec3Q | None = None

    def edge_faces(self) -> dict[Edge, tuple[int, ...]]:
        index: dict[Edge, list[int]] = {}
        for i, f in enumerate(self.faces):
            for e in f.edge_set:
                index.setdefault(e, []).append(i)
        return {e: tuple(ids) for e, ids in index.items()}

    def pair_to_face(self) -> dict[tuple[Vec3Q, frozenset[Vec3Q]], int]:
        """(vertex, consecutive neighbor pair) -> face id, for interior vertices."""
        out: dict[tuple[Vec3Q, frozenset[Vec3Q]], int] = {}
        for i, f in enumerate(self.faces):
            pts = f.path + (f.path[0], f.path[1]) if f.closed else f.path
            for k in range(1, len(pts) - 1):
                out[(pts[k], frozenset((pts[k - 1], pts[k + 1])))] = i
        return out


def _component_of(graph: SkeletonGraph, start: Vec3Q) -> SkeletonGraph:
    """Connected component of start; the natural carrier of one filling."""
    from collections import deque

    adj = graph.adjacency()
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for n in adj[v]:
            if n not in seen:
                seen.add(n)
                queue.append(n)
    edges = tuple(e for e in graph.edges if e.p in seen)
    return SkeletonGraph(
        vertices=tuple(v for v in graph.vertices if v in seen), edges=edges
    )


def fill_faces(field: FigureField, graph: SkeletonGraph) -> tuple[Face, ...]:
    """Every face of the filled system meeting the field's window.

    One face per (vertex, consecutive pair) seed, deduplicated; each in-window
    angle of the figure field belongs to exactly one face, so this sweep is
    the complete face set.
    """
    faces: dict[frozenset[Edge], Face] = {}
    covered: set[tuple[Vec3Q, frozenset[Vec3Q]]] = set()
    for b in graph.vertices:
        local = field.local.get(b)
        if local is None:
            continue
        for member, (left, right) in local.items():
            for flank in (left, right):
                key = (b, frozenset((member, flank)))
                if key in covered:
                    continue
                face = trace_face(field, b, (member, flank))
                faces.setdefault(face.edge_set, face)
                pts = face.path + (face.path[0], face.path[1]) if face.closed else face.path
                for k in range(1, len(pts) - 1):
                    covered.add((pts[k], frozenset((pts[k - 1], pts[k + 1]))))
    return tuple(sorted(faces.values(), key=lambda f: tuple(p.sort_key() for p in f.path)))


def build_polyhedron(
    group: GroupSpec,
    u: Vec3Q,
    v: Vec3Q,
    figure: VertexFigure,
    window: Window,
) -> Polyhedron:
    """Steps 1 to 3 in one call: orbit graph, figure field, filled faces.

    The structure is built on the connected component of u (a planar figure
    fills one layer; disconnected copies are other components).  By
    construction the filled system realizes the chosen figure at u and its
    transports elsewhere, so the preserving subgroup of the enumerated group
    acts transitively on vertices, edges and faces in-window.
    """
    graph = _component_of(edge_orbit(group, Edge(u, v), window), u)
    field = FigureField(group, u, figure, graph, window)
    faces = fill_faces(field, graph)
    if not faces:
        raise FaceFillError("window too small: no faces fit")
    return Polyhedron(
        vertices=graph.vertices,
        edges=graph.edges,
        faces=faces,
        group=group,
        window=window,
        base_point=u,
    )


def face_orbit(
    group: GroupSpec, face: Face, window: Window, field: FigureField | None = None
) -> tuple[Face, ...]:
    """All faces of face's filled system that meet the window.

    With a figure field this is the sweep of the filling rule, equivalently
    the orbit of the face under the subgroup of enumerated elements that
    preserves the field (the full orbit would breach the two faces per edge
    axiom).  Without a field, the images of the rigid path under enumerated
    elements are returned; for the trivial group that is just the face itself.
    """
    if field is not None:
        graph_vertices = tuple(field.local.keys())
        edges: set[Edge] = set()
        for b, local in field.local.items():
            for m in local:
                edges.add(Edge(b, m))
        graph = SkeletonGraph(
            vertices=tuple(sorted(set(graph_vertices) | {q for e in edges for q in e.endpoints()},
                                  key=Vec3Q.sort_key)),
            edges=tuple(sorted(edges, key=Edge.sort_key)),
        )
        faces = fill_faces(field, graph)
        if not any(f == face for f in faces):
            raise FaceFillError("face does not belong to the filled system")
        return faces

    from .group import enumerate_elements

    images: dict[frozenset[Edge], Face] = {face.edge_set: face}
    for g in enumerate_elements(group, window):
        path = tuple(g.apply(p) for p in face.path)
        if not any(window.contains(p) for p in path):
            continue
        img = Face(path=path, closed=face.closed, truncated=face.truncated,
                   angle_class_ids=face.angle_class_ids)
        images.setdefault(img.edge_set, img)
    return tuple(sorted(images.values(), key=lambda f: tuple(p.sort_key() for p in f.path)))


# ---------------------------------------------------------------------------
# The hexagonal zig-zag spiralhedron


def select_matching_figure(
    figures: list[VertexFigure],
    table: AngleTable,
    quoted_pairs: tuple[frozenset[Vec3Q], ...],
) -> VertexFigure:
    """The unique enumerated figure whose angle classes are the quoted ones."""
    wanted = {table.class_of(p) for p in quoted_pairs}
    matches = [
        f for f in figures if set(figure_class_sequence(f, table)) == wanted
    ]
    if len(matches) != 1:
        raise FaceFillError(
            f"{len(matches)} figures match the quoted angle classes, expected 1"
        )
    return matches[0]


def build_s1(cfg=None, window: Window | None = None) -> Polyhedron:
    """The full pipeline for the hexagonal zig-zag spiralhedron.

    Reflections, base point, the lifted edge [u v1], its eight edge star, the
    vertex figure with the three quoted angle classes, the unique filling, and
    the windowed face system.
    """
    from .honeypie import HoneypieConfig, base_point, honeypie_generators, named_points

    if cfg is None:
        cfg = HoneypieConfig()
    if window is None:
        window = Window(Fraction(6), Fraction(2))
    group = honeypie_generators(cfg)
    pts = named_points(cfg)
    u = base_point(cfg)
    v1 = pts["v1"]

    edges = star(group, u, v1)
    stab = point_stabilizer(group, u)
    endpoints = tuple(sorted(star_endpoints(edges, u), key=Vec3Q.sort_key))
    table = AngleTable(u, endpoints, stab)
    figures = enumerate_vertex_figures(edges, stab, u)
    quoted = (
        frozenset((pts["x1"], pts["x2"])),
        frozenset((pts["x1"], pts["y2"])),
        frozenset((pts["y1"], pts["v2"])),
    )
    figure = select_matching_figure(figures, table, quoted)
    return build_polyhedron(group, u, v1, figure, window)
