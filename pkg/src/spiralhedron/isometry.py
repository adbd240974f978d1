"""Exact affine isometries of E^3: orthogonal part plus translation.

The composition convention is "right factor acts first": compose(A, B) is the
map p -> A(B(p)).  This matches juxtaposition of reflection words, where the
rightmost letter is applied to the point first.  The convention determines
which concrete points named reflection words denote, so it is fixed here once
and used everywhere.
"""

from __future__ import annotations

from enum import Enum
from functools import cached_property

from .field import MAT_IDENTITY, ONE, QSqrt3, Mat3Q, Vec3Q, VEC_ZERO


class IsometryKind(Enum):
    IDENTITY = "identity"
    PURE_TRANSLATION = "pure_translation"
    OTHER = "other"


class Isometry:
    """p -> Q p + t with Q exactly orthogonal and det Q in {+1, -1}."""

    __slots__ = ("_q", "_t", "__dict__")

    def __init__(self, q: Mat3Q, t: Vec3Q, check: bool = True) -> None:
        if check and not q.is_orthogonal():
            raise ValueError("orthogonal part fails Q^T Q = I exactly")
        self._q = q
        self._t = t

    @property
    def q(self) -> Mat3Q:
        return self._q

    @property
    def t(self) -> Vec3Q:
        return self._t

    def __repr__(self) -> str:
        return f"Isometry(q={self._q!r}, t={self._t!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Isometry):
            return NotImplemented
        return self._q == other._q and self._t == other._t

    @cached_property
    def _hash(self) -> int:
        return hash((self._q, self._t))

    def __hash__(self) -> int:
        return self._hash

    def apply(self, p: Vec3Q) -> Vec3Q:
        return self._q.apply(p) + self._t

    def __call__(self, p: Vec3Q) -> Vec3Q:
        return self.apply(p)

    def compose(self, other: Isometry, check: bool = True) -> Isometry:
        """self after other: (self.compose(other))(p) = self(other(p))."""
        return Isometry(self._q @ other._q, self._q.apply(other._t) + self._t, check=check)

    def __matmul__(self, other: Isometry) -> Isometry:
        return self.compose(other)

    def inverse(self) -> Isometry:
        qt = self._q.transpose()
        return Isometry(qt, -qt.apply(self._t), check=False)

    def classify(self) -> IsometryKind:
        if self._q == MAT_IDENTITY:
            if self._t.is_zero():
                return IsometryKind.IDENTITY
            return IsometryKind.PURE_TRANSLATION
        return IsometryKind.OTHER

    def det(self) -> QSqrt3:
        return self._q.det()

    def sort_key(self):
        return self._q.sort_key() + self._t.sort_key()

    def to_json(self) -> list[str]:
        """12 exact coordinate strings: 9 matrix entries row major, then translation."""
        parts = [str(v) for row in self._q.rows for v in row]
        parts.extend(self._t.format())
        return parts

    @classmethod
    def from_json(cls, parts: list[str]) -> Isometry:
        from .field import parse_qsqrt3

        if len(parts) != 12:
            raise ValueError("isometry JSON needs 12 entries")
        vals = [parse_qsqrt3(p) for p in parts]
        q = Mat3Q((vals[0:3], vals[3:6], vals[6:9]))
        return cls(q, Vec3Q(*vals[9:12]))

    @classmethod
    def identity(cls) -> Isometry:
        return IDENTITY


IDENTITY = Isometry(MAT_IDENTITY, VEC_ZERO, check=False)


class PlaneQ:
    """Plane n . p = d with an exactly unit normal."""

    __slots__ = ("_n", "_d")

    def __init__(self, n: Vec3Q, d: QSqrt3) -> None:
        if n.norm_sq() != ONE:
            raise ValueError("plane normal must have norm_sq exactly 1")
        self._n = n
        self._d = d if isinstance(d, QSqrt3) else QSqrt3(d)

    @property
    def n(self) -> Vec3Q:
        return self._n

    @property
    def d(self) -> QSqrt3:
        return self._d

    def __repr__(self) -> str:
        return f"PlaneQ(n={self._n!r}, d={self._d})"

    def contains(self, p: Vec3Q) -> bool:
        return self._n.dot(p) == self._d

    def signed_offset(self, p: Vec3Q) -> QSqrt3:
        return self._n.dot(p) - self._d


def reflection_through_plane(plane: PlaneQ) -> Isometry:
    """The involution p -> p - 2 (n.p - d) n, as (Q, t) with Q = I - 2 n n^T."""
    n = plane.n
    outer = Mat3Q.from_outer(n, n)
    rows = tuple(
        tuple(MAT_IDENTITY.rows[i][j] - QSqrt3(2) * outer.rows[i][j] for j in range(3))
        for i in range(3)
    )
    q = Mat3Q(rows)
    t = n.scale(QSqrt3(2) * plane.d)
    return Isometry(q, t)
