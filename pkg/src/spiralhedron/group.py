"""Windowed enumeration engine for groups generated by exact isometries.

The groups of interest are infinite, so every set-valued result is taken
relative to a Window (a ball around the origin with a safety margin).  Claims
are only certified inside the core window, radius minus margin, which keeps
boundary artifacts out of the verified region.

Breadth first search over generator words is exhaustive in the following
sense: an element g is guaranteed to be found whenever |g(0)| <= radius -
margin.  Words are pruned once their origin image leaves radius plus twice the
longest generator displacement.  For reflection generators of a compact
fundamental region a minimal word for g can always be chosen whose prefixes
stay within that excursion bound of the segment from 0 to g(0), so pruning at
radius + 2 L loses nothing inside the core.

Internally the search runs on an integer representation: the orthogonal parts
of a crystallographic group form a finite point group whose entries are half
integers of Z[sqrt 3], and every translation part lies in the lattice spanned
by point-group images of the generator translations, so one global denominator
clears all fractions.  Results are converted back to exact field elements at
the boundary; each distinct orthogonal part is verified orthogonal exactly,
once, when it first appears.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .field import QSqrt3, Vec3Q, ZERO
from .isometry import IDENTITY, Isometry, IsometryKind, Mat3Q


class GroupError(Exception):
    """Domain error raised by the group engine."""


_POINT_GROUP_CAP = 3072


@dataclass(frozen=True)
class GroupSpec:
    """A finitely generated subgroup of E(3), given by its generators."""

    generators: tuple[Isometry, ...]

    def __post_init__(self) -> None:
        if not self.generators:
            raise ValueError("generator list must be nonempty")
        for g in self.generators:
            if not g.q.is_orthogonal():
                raise ValueError("generator is not exactly orthogonal")

    def with_inverses(self) -> tuple[Isometry, ...]:
        seen: dict[Isometry, None] = {}
        for g in self.generators:
            seen.setdefault(g, None)
            seen.setdefault(g.inverse(), None)
        return tuple(seen)

    def max_step_sq(self) -> QSqrt3:
        """Largest |g(0)|^2 over generators, the BFS excursion unit."""
        best = ZERO
        for g in self.with_inverses():
            d = g.t.norm_sq()
            if d > best:
                best = d
        return best


@dataclass(frozen=True)
class Window:
    """Ball around the origin; membership is decided on exact squared radii."""

    radius: Fraction
    margin: Fraction

    def __post_init__(self) -> None:
        if not (0 < self.margin < self.radius):
            raise ValueError("window needs 0 < margin < radius")

    @property
    def core_radius(self) -> Fraction:
        return self.radius - self.margin

    def contains(self, p: Vec3Q) -> bool:
        return p.norm_sq() <= QSqrt3(self.radius * self.radius)

    def in_core(self, p: Vec3Q) -> bool:
        r = self.core_radius
        return p.norm_sq() <= QSqrt3(r * r)

    def grow(self, extra: Fraction) -> Window:
        return Window(self.radius + extra, self.margin)


def _rational_upper_sqrt(x: QSqrt3) -> Fraction:
    """A rational r with r >= sqrt(x), modestly tight.  x must be >= 0."""
    if x.sign() < 0:
        raise ValueError("negative input")
    approx = math.sqrt(x.to_float())
    r = Fraction(math.ceil((approx + 1e-9) * 1024), 1024)
    while QSqrt3(r * r) < x:
        r *= 2
    return r


# ---------------------------------------------------------------------------
# Integer representation
#
# A field value (a + b sqrt3)/den is held as integer numerators (a, b) over a
# denominator fixed per context.  Matrices are 18 integer numerators over 2,
# vectors 6 numerators over a per-group S.


def _sqrt3_sign_int(a: int, b: int) -> int:
    """Sign of a + b sqrt3 for integers a, b."""
    if a == 0 and b == 0:
        return 0
    if a >= 0 and b >= 0:
        return 1
    if a <= 0 and b <= 0:
        return -1
    if a > 0:
        return 1 if a * a > 3 * b * b else -1
    return -1 if 3 * b * b > a * a else 1


def _q_to_ints(m: Mat3Q) -> tuple[int, ...]:
    """Matrix entries as numerators over denominator 2; entries must be half integers."""
    out = []
    for row in m.rows:
        for v in row:
            a2, b2 = 2 * v.a, 2 * v.b
            if a2.denominator != 1 or b2.denominator != 1:
                raise GroupError("orthogonal part is not half-integral over Z[sqrt3]")
            out.append(int(a2))
            out.append(int(b2))
    return tuple(out)


def _q_from_ints(qi: tuple[int, ...]) -> Mat3Q:
    half = Fraction(1, 2)
    vals = [QSqrt3(qi[2 * k] * half, qi[2 * k + 1] * half) for k in range(9)]
    return Mat3Q((vals[0:3], vals[3:6], vals[6:9]))


def _q_mul(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    """Product of two den-2 matrices, renormalized back to den 2."""
    out = [0] * 18
    for i in range(3):
        for j in range(3):
            a = b = 0
            for k in range(3):
                xa, xb = x[2 * (3 * i + k)], x[2 * (3 * i + k) + 1]
                ya, yb = y[2 * (3 * k + j)], y[2 * (3 * k + j) + 1]
                a += xa * ya + 3 * xb * yb
                b += xa * yb + xb * ya
            if a % 2 or b % 2:
                raise GroupError("point group not closed over half integers")
            out[2 * (3 * i + j)] = a // 2
            out[2 * (3 * i + j) + 1] = b // 2
    return tuple(out)


def _q_apply(q: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """Apply a den-2 matrix to a den-S vector, result over den S (asserted even)."""
    out = [0] * 6
    for i in range(3):
        a = b = 0
        for k in range(3):
            qa, qb = q[2 * (3 * i + k)], q[2 * (3 * i + k) + 1]
            va, vb = v[2 * k], v[2 * k + 1]
            a += qa * va + 3 * qb * vb
            b += qa * vb + qb * va
        if a % 2 or b % 2:
            raise GroupError("translation left the group lattice")
        out[2 * i] = a // 2
        out[2 * i + 1] = b // 2
    return tuple(out)


def _vec_to_ints(v: Vec3Q, scale: int) -> tuple[int, ...]:
    out = []
    for comp in v.components():
        a, b = comp.a * scale, comp.b * scale
        if a.denominator != 1 or b.denominator != 1:
            raise GroupError("vector does not lie on the chosen integer grid")
        out.append(int(a))
        out.append(int(b))
    return tuple(out)


def _vec_from_ints(v: tuple[int, ...], scale: int) -> Vec3Q:
    return Vec3Q(
        QSqrt3(Fraction(v[0], scale), Fraction(v[1], scale)),
        QSqrt3(Fraction(v[2], scale), Fraction(v[3], scale)),
        QSqrt3(Fraction(v[4], scale), Fraction(v[5], scale)),
    )


def _norm_sq_ints(v: tuple[int, ...]) -> tuple[int, int]:
    """|v|^2 * S^2 as (a, b) meaning a + b sqrt3."""
    a = b = 0
    for i in range(3):
        va, vb = v[2 * i], v[2 * i + 1]
        a += va * va + 3 * vb * vb
        b += 2 * va * vb
    return a, b


def _within(norm: tuple[int, int], bound_num: int, bound_den: int) -> bool:
    """(a + b sqrt3) / den_sq <= bound  with bound = num/den given premultiplied."""
    # compare a + b sqrt3 <= bound_num/bound_den, all integer data
    a, b = norm
    pa = bound_num - a * bound_den
    pb = -b * bound_den
    return _sqrt3_sign_int(pa, pb) >= 0


class _Engine:
    """Integer BFS engine for one GroupSpec."""

    def __init__(self, spec: GroupSpec) -> None:
        self.spec = spec
        self._bfs_cache: dict[Fraction, list[tuple[int, tuple[int, ...]]]] = {}
        gens = spec.with_inverses()
        gen_q_ints = [_q_to_ints(g.q) for g in gens]

        # Close the point group; verify each new matrix exactly orthogonal.
        index: dict[tuple[int, ...], int] = {}
        mats: list[tuple[int, ...]] = []

        def intern(qi: tuple[int, ...]) -> int:
            if qi in index:
                return index[qi]
            if not _q_from_ints(qi).is_orthogonal():
                raise GroupError("orthogonality lost in point group closure")
            index[qi] = len(mats)
            mats.append(qi)
            if len(mats) > _POINT_GROUP_CAP:
                raise GroupError("point group closure exceeds cap; group not crystallographic?")
            return index[qi]

        ident = _q_to_ints(Mat3Q.identity())
        intern(ident)
        frontier = deque([ident])
        while frontier:
            cur = frontier.popleft()
            for gq in gen_q_ints:
                prod = _q_mul(gq, cur)
                if prod not in index:
                    intern(prod)
                    frontier.append(prod)
        self.mats = mats
        self.q_index = index
        self.identity_q = index[ident]

        n = len(mats)
        self.mul_table = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                self.mul_table[i][j] = index[_q_mul(mats[i], mats[j])]

        # Global denominator: every word translation lies in the Z-span of
        # point group images of generator translations.
        denom = 1
        for g in gens:
            for q in mats:
                probe = _q_from_ints(q).apply(g.t)
                for comp in probe.components():
                    denom = math.lcm(denom, comp.a.denominator, comp.b.denominator)
        self.scale = denom
        self.gens = [
            (self.q_index[_q_to_ints(g.q)], _vec_to_ints(g.t, denom)) for g in gens
        ]

    def origin_image(self, state: tuple[int, tuple[int, ...]]) -> tuple[int, ...]:
        return state[1]

    def compose_gen(self, gen: tuple[int, tuple[int, ...]],
                    state: tuple[int, tuple[int, ...]]) -> tuple[int, tuple[int, ...]]:
        gq, gt = gen
        sq, st = state
        nq = self.mul_table[gq][sq]
        moved = _q_apply(self.mats[gq], st)
        nt = tuple(moved[i] + gt[i] for i in range(6))
        return (nq, nt)

    def bfs(self, prune_bound: Fraction) -> list[tuple[int, tuple[int, ...]]]:
        """All states whose origin image stays within the prune bound, sorted.

        Sorting makes every downstream choice independent of set iteration
        order, which is the determinism contract of the engine.
        """
        cached = self._bfs_cache.get(prune_bound)
        if cached is not None:
            return cached
        s2 = self.scale * self.scale
        num = prune_bound.numerator * prune_bound.numerator * s2
        den = prune_bound.denominator * prune_bound.denominator
        start = (self.identity_q, (0,) * 6)
        seen = {start}
        frontier = deque([start])
        while frontier:
            cur = frontier.popleft()
            for gen in self.gens:
                nxt = self.compose_gen(gen, cur)
                if nxt in seen:
                    continue
                if not _within(_norm_sq_ints(nxt[1]), num, den):
                    continue
                seen.add(nxt)
                frontier.append(nxt)
        result = sorted(seen)
        self._bfs_cache[prune_bound] = result
        return result

    def to_isometry(self, state: tuple[int, tuple[int, ...]]) -> Isometry:
        q = _q_from_ints(self.mats[state[0]])
        t = _vec_from_ints(state[1], self.scale)
        return Isometry(q, t, check=False)


_ENGINES: dict[GroupSpec, _Engine] = {}


def _engine(spec: GroupSpec) -> _Engine:
    eng = _ENGINES.get(spec)
    if eng is None:
        eng = _Engine(spec)
        _ENGINES[spec] = eng
    return eng


def enumerate_elements(group: GroupSpec, window: Window) -> tuple[Isometry, ...]:
    """All elements found by pruned BFS, canonically ordered.

    Retained: |g(0)| <= radius + one generator step.  Guaranteed complete for
    |g(0)| <= radius - margin.  The output order is independent of generator
    order and of exploration order because it is sorted at the end.
    """
    eng = _engine(group)
    step = _rational_upper_sqrt(group.max_step_sq())
    keep = window.radius + step
    states = eng.bfs(window.radius + 2 * step)
    s2 = eng.scale * eng.scale
    keep_num = keep.numerator * keep.numerator * s2
    keep_den = keep.denominator * keep.denominator
    kept = [
        eng.to_isometry(s)
        for s in states
        if _within(_norm_sq_ints(s[1]), keep_num, keep_den)
    ]
    kept.sort(key=Isometry.sort_key)
    return tuple(kept)


def point_stabilizer(group: GroupSpec, p: Vec3Q, word_cap: int = 20) -> tuple[Isometry, ...]:
    """The finite subgroup fixing p, by excursion-bounded BFS plus a closure check.

    Any stabilizer element satisfies |g(0)| <= 2 |p| (it moves the origin
    within a sphere around p), so a BFS complete out to that radius finds all
    of them.  Termination is certified by verifying closure of the result
    under composition; the word cap turns a failed search into a loud error
    instead of a silent truncation.
    """
    eng = _engine(group)
    step = _rational_upper_sqrt(group.max_step_sq())
    p_norm = _rational_upper_sqrt(p.norm_sq())
    reach = 2 * p_norm + step

    s2 = eng.scale * eng.scale
    prune = reach + 2 * step
    num = prune.numerator * prune.numerator * s2
    den = prune.denominator * prune.denominator

    # One spare factor of 2 keeps half-integral matrix entries integral on p.
    denom = 2 * eng.scale
    for comp in p.components():
        denom = math.lcm(denom, 2 * comp.a.denominator, 2 * comp.b.denominator)
    mult = denom // eng.scale
    pi = _vec_to_ints(p, denom)

    start = (eng.identity_q, (0,) * 6)
    seen = {start: 0}
    frontier = deque([start])
    while frontier:
        cur = frontier.popleft()
        depth = seen[cur]
        if depth >= word_cap:
            continue
        for gen in eng.gens:
            nxt = eng.compose_gen(gen, cur)
            if nxt in seen:
                continue
            if not _within(_norm_sq_ints(nxt[1]), num, den):
                continue
            seen[nxt] = depth + 1
            frontier.append(nxt)

    def fixes_p(state: tuple[int, tuple[int, ...]]) -> bool:
        img = _q_apply(eng.mats[state[0]], pi)
        return all(img[i] + state[1][i] * mult == pi[i] for i in range(6))

    fixing_states = [s for s in seen if fixes_p(s)]
    fixing = [eng.to_isometry(s) for s in fixing_states]
    stab = set(fixing)
    for a in fixing:
        for b in fixing:
            if a.compose(b, check=False) not in stab:
                raise GroupError(
                    "stabilizer search exhausted: closure not reached within word cap"
                )
    fixing.sort(key=Isometry.sort_key)
    return tuple(fixing)


def orbit_points(group: GroupSpec, p: Vec3Q, window: Window) -> tuple[Vec3Q, ...]:
    """All images of p inside the window, deduplicated, canonically ordered."""
    eng = _engine(group)
    p_norm = _rational_upper_sqrt(p.norm_sq())
    step = _rational_upper_sqrt(group.max_step_sq())
    grown = window.grow(p_norm)
    states = eng.bfs(grown.radius + 2 * step)

    # p may sit on a finer grid than the translation lattice; the spare factor
    # of 2 keeps half-integral matrix entries integral on p.
    denom = 2 * eng.scale
    for comp in p.components():
        denom = math.lcm(denom, 2 * comp.a.denominator, 2 * comp.b.denominator)
    mult = denom // eng.scale
    pi = _vec_to_ints(p, denom)

    r = window.radius
    num = r.numerator * r.numerator * denom * denom
    den = r.denominator * r.denominator
    images: set[tuple[int, ...]] = set()
    for qidx, t in states:
        img = _q_apply(eng.mats[qidx], pi)
        moved = tuple(img[i] + t[i] * mult for i in range(6))
        if _within(_norm_sq_ints(moved), num, den):
            images.add(moved)
    pts = [_vec_from_ints(v, denom) for v in images]
    pts.sort(key=Vec3Q.sort_key)
    return tuple(pts)


@dataclass(frozen=True)
class LatticeBasis:
    """Three exactly independent vectors spanning the translation subgroup."""

    b1: Vec3Q
    b2: Vec3Q
    b3: Vec3Q

    def __post_init__(self) -> None:
        if self._det() == ZERO:
            raise ValueError("lattice basis is linearly dependent")

    def vectors(self) -> tuple[Vec3Q, Vec3Q, Vec3Q]:
        return (self.b1, self.b2, self.b3)

    def _det(self) -> QSqrt3:
        return self.b1.dot(self.b2.cross(self.b3))

    def solve(self, t: Vec3Q) -> tuple[QSqrt3, QSqrt3, QSqrt3]:
        """Coefficients (c1, c2, c3) with c1 b1 + c2 b2 + c3 b3 = t, by Cramer."""
        d = self._det()
        c1 = t.dot(self.b2.cross(self.b3)) / d
        c2 = self.b1.dot(t.cross(self.b3)) / d
        c3 = self.b1.dot(self.b2.cross(t)) / d
        return (c1, c2, c3)

    def integer_coefficients(self, t: Vec3Q) -> tuple[int, int, int] | None:
        coeffs = self.solve(t)
        out = []
        for c in coeffs:
            if not c.is_rational or c.a.denominator != 1:
                return None
            out.append(int(c.a))
        return tuple(out)  # type: ignore[return-value]

    def contains(self, t: Vec3Q) -> bool:
        return self.integer_coefficients(t) is not None


def translation_lattice(group: GroupSpec, window: Window) -> LatticeBasis:
    """Reduced rank-3 basis of the pure translations found in the window.

    Picks the three shortest independent translations, then verifies that every
    enumerated pure translation is an exact integer combination, refining the
    basis when one is not.  The result is stable under window growth once the
    window comfortably contains a generating set.
    """
    elements = enumerate_elements(group, window)
    translations = [
        g.t for g in elements if g.classify() is IsometryKind.PURE_TRANSLATION
    ]
    if not translations:
        raise GroupError("window too small: no pure translations found")
    translations.sort(key=lambda v: (v.norm_sq().sort_key(), v.sort_key()))

    basis: list[Vec3Q] = []
    for t in translations:
        trial = basis + [t]
        if len(trial) == 1:
            basis = trial
            continue
        if len(trial) == 2:
            if trial[0].cross(trial[1]).is_zero():
                continue
            basis = trial
            continue
        if trial[0].dot(trial[1].cross(trial[2])) != ZERO:
            basis = trial
            break
    if len(basis) != 3:
        raise GroupError("window too small: fewer than 3 independent translations")

    result = LatticeBasis(*basis)
    # Refine until every enumerated translation solves to integers.
    for _ in range(64):
        bad = next((t for t in translations if not result.contains(t)), None)
        if bad is None:
            return result
        result = _refine_basis(result, bad)
    raise GroupError("lattice reduction failed to converge")


def _refine_basis(basis: LatticeBasis, t: Vec3Q) -> LatticeBasis:
    """Shrink the basis so that t becomes an integer combination."""
    coeffs = basis.solve(t)
    residual = t
    vecs = list(basis.vectors())
    for c, v in zip(coeffs, vecs):
        if not c.is_rational:
            raise GroupError("translation with irrational lattice coordinates")
        whole = math.floor(c.a)
        residual = residual - v.scale(QSqrt3(whole))
    # residual is a shorter lattice vector with fractional coordinates; swap it
    # for the basis vector carrying the largest fractional part.
    fracs = [c.a - math.floor(c.a) for c in coeffs]
    idx = max(range(3), key=lambda i: fracs[i])
    if fracs[idx] == 0:
        raise GroupError("refinement stalled on an integral translation")
    vecs[idx] = residual
    return LatticeBasis(*vecs)


def lattice_class_partition(
    points: tuple[Vec3Q, ...], basis: LatticeBasis
) -> tuple[tuple[Vec3Q, ...], ...]:
    """Partition points by v ~ v' iff v - v' is an integer combination of the basis.

    Classes are keyed by canonical representatives (the lexicographically least
    member), and the classes themselves are returned in that order.
    """
    if not points:
        raise ValueError("empty point set")
    classes: list[list[Vec3Q]] = []
    reps: list[Vec3Q] = []
    for p in sorted(points, key=Vec3Q.sort_key):
        for i, rep in enumerate(reps):
            if basis.contains(p - rep):
                classes[i].append(p)
                break
        else:
            reps.append(p)
            classes.append([p])
    return tuple(tuple(c) for c in classes)


def _fine_grid(eng: _Engine, points: tuple[Vec3Q, ...]) -> tuple[int, int, list[tuple[int, ...]]]:
    """Common denominator for arbitrary exact points against the engine grid.

    The spare factor of 2 keeps half-integral matrix entries integral on the
    rescaled numerators.
    """
    denom = 2 * eng.scale
    for p in points:
        for comp in p.components():
            denom = math.lcm(denom, 2 * comp.a.denominator, 2 * comp.b.denominator)
    mult = denom // eng.scale
    return denom, mult, [_vec_to_ints(p, denom) for p in points]


def _apply_state(eng: _Engine, state: tuple[int, tuple[int, ...]],
                 pi: tuple[int, ...], mult: int) -> tuple[int, ...]:
    img = _q_apply(eng.mats[state[0]], pi)
    t = state[1]
    return (
        img[0] + t[0] * mult, img[1] + t[1] * mult,
        img[2] + t[2] * mult, img[3] + t[3] * mult,
        img[4] + t[4] * mult, img[5] + t[5] * mult,
    )


def paired_orbit(
    group: GroupSpec, p: Vec3Q, q: Vec3Q, window: Window
) -> tuple[tuple[Vec3Q, Vec3Q], ...]:
    """Images of the ordered pair (p, q) with at least one member in the window.

    Images are deduplicated as unordered pairs and returned in canonical
    order.  This is the engine behind edge orbits.
    """
    eng = _engine(group)
    step = _rational_upper_sqrt(group.max_step_sq())
    reach = max(_rational_upper_sqrt(p.norm_sq()), _rational_upper_sqrt(q.norm_sq()))
    states = eng.bfs(window.radius + reach + 2 * step)
    denom, mult, (pi, qi) = _fine_grid(eng, (p, q))

    r = window.radius
    num = r.numerator * r.numerator * denom * denom
    den = r.denominator * r.denominator
    pairs: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    for state in states:
        a = _apply_state(eng, state, pi, mult)
        b = _apply_state(eng, state, qi, mult)
        if _within(_norm_sq_ints(a), num, den) or _within(_norm_sq_ints(b), num, den):
            pairs.add((a, b) if a <= b else (b, a))
    out = [(_vec_from_ints(a, denom), _vec_from_ints(b, denom)) for a, b in sorted(pairs)]
    return tuple(out)


def transporters(group: GroupSpec, base: Vec3Q, window: Window) -> dict[Vec3Q, Isometry]:
    """One group element per in-window orbit point, mapping base onto it.

    The representative chosen for each point is deterministic (least internal
    state), so repeated runs agree.
    """
    eng = _engine(group)
    step = _rational_upper_sqrt(group.max_step_sq())
    reach = _rational_upper_sqrt(base.norm_sq())
    states = eng.bfs(window.radius + reach + 2 * step)
    denom, mult, (pi,) = _fine_grid(eng, (base,))

    r = window.radius
    num = r.numerator * r.numerator * denom * denom
    den = r.denominator * r.denominator
    best: dict[tuple[int, ...], tuple[int, tuple[int, ...]]] = {}
    for state in states:
        img = _apply_state(eng, state, pi, mult)
        if not _within(_norm_sq_ints(img), num, den):
            continue
        cur = best.get(img)
        if cur is None or state < cur:
            best[img] = state
    return {
        _vec_from_ints(img, denom): eng.to_isometry(state)
        for img, state in best.items()
    }


def orbit_points_float_shadow(
    group: GroupSpec, p: Vec3Q, window: Window, tol: float = 1e-9
) -> list[tuple[float, float, float]]:
    """Double precision re-run of orbit_points, for the shadow oracle only."""
    eng = _engine(group)
    p_norm = _rational_upper_sqrt(p.norm_sq())
    step = _rational_upper_sqrt(group.max_step_sq())
    states = eng.bfs(window.radius + p_norm + 2 * step)
    sqrt3 = math.sqrt(3.0)
    scale = float(eng.scale)
    pf = p.to_floats()
    r = float(window.radius)
    found: dict[tuple[int, int, int], tuple[float, float, float]] = {}
    for qidx, t in states:
        qm = eng.mats[qidx]
        qf = [(qm[2 * k] + qm[2 * k + 1] * sqrt3) / 2.0 for k in range(9)]
        tf = [(t[2 * i] + t[2 * i + 1] * sqrt3) / scale for i in range(3)]
        img = tuple(
            qf[3 * i] * pf[0] + qf[3 * i + 1] * pf[1] + qf[3 * i + 2] * pf[2] + tf[i]
            for i in range(3)
        )
        if img[0] ** 2 + img[1] ** 2 + img[2] ** 2 > (r + tol) ** 2:
            continue
        key = tuple(round(c / tol / 16.0) for c in img)
        found.setdefault(key, img)  # type: ignore[arg-type]
    return sorted(found.values())
