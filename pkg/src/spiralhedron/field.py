"""Exact arithmetic in the real quadratic field Q(sqrt 3) and small linear algebra over it.

Every geometric predicate in this package is decided here, without floating
point.  Values are immutable and hashable, so they can be shared freely and
used as dict keys for deduplication.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import cached_property
from typing import Iterable

RationalLike = Fraction | int


class QSqrt3:
    """A number a + b*sqrt(3) with rational a, b, stored in lowest terms.

    Equality and hashing are structural, which is sound because the
    representation is unique: sqrt(3) is irrational, so a + b*sqrt(3) = 0
    forces a = b = 0.
    """

    __slots__ = ("_a", "_b")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0) -> None:
        self._a = a if isinstance(a, Fraction) else Fraction(a)
        self._b = b if isinstance(b, Fraction) else Fraction(b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    def __repr__(self) -> str:
        return f"QSqrt3({self._a!r}, {self._b!r})"

    def __str__(self) -> str:
        return format_qsqrt3(self)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QSqrt3):
            return self._a == other._a and self._b == other._b
        if isinstance(other, (int, Fraction)):
            return self._a == other and self._b == 0
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __add__(self, other: QSqrt3 | RationalLike) -> QSqrt3:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QSqrt3(self._a + other._a, self._b + other._b)

    __radd__ = __add__

    def __sub__(self, other: QSqrt3 | RationalLike) -> QSqrt3:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QSqrt3(self._a - other._a, self._b - other._b)

    def __rsub__(self, other: QSqrt3 | RationalLike) -> QSqrt3:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> QSqrt3:
        return QSqrt3(-self._a, -self._b)

    def __mul__(self, other: QSqrt3 | RationalLike) -> QSqrt3:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        # (a + b s)(c + d s) = (ac + 3bd) + (ad + bc) s  with s^2 = 3
        a, b, c, d = self._a, self._b, other._a, other._b
        return QSqrt3(a * c + 3 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other: QSqrt3 | RationalLike) -> QSqrt3:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        c, d = other._a, other._b
        norm = c * c - 3 * d * d
        if norm == 0:
            # c^2 = 3 d^2 has no nonzero rational solutions, so this is 0.
            raise ZeroDivisionError("division by zero in Q(sqrt3)")
        # multiply by the conjugate (c - d s) / (c^2 - 3 d^2)
        a, b = self._a, self._b
        return QSqrt3((a * c - 3 * b * d) / norm, (b * c - a * d) / norm)

    def __rtruediv__(self, other: QSqrt3 | RationalLike) -> QSqrt3:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __lt__(self, other: QSqrt3 | RationalLike) -> bool:
        other = _coerce_strict(other)
        return (self - other).sign() < 0

    def __le__(self, other: QSqrt3 | RationalLike) -> bool:
        other = _coerce_strict(other)
        return (self - other).sign() <= 0

    def __gt__(self, other: QSqrt3 | RationalLike) -> bool:
        other = _coerce_strict(other)
        return (self - other).sign() > 0

    def __ge__(self, other: QSqrt3 | RationalLike) -> bool:
        other = _coerce_strict(other)
        return (self - other).sign() >= 0

    def sign(self) -> int:
        """Sign of the real value a + b*sqrt(3), by rational comparisons only.

        If a and b do not disagree in sign the answer is immediate.  Otherwise
        the term with the larger square dominates: compare a^2 against 3 b^2.
        Equality of the squares cannot happen for nonzero terms because
        sqrt(3) is irrational.
        """
        a, b = self._a, self._b
        if a == 0 and b == 0:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        a2, b2 = a * a, 3 * b * b
        if a2 == b2:
            raise ArithmeticError("a^2 == 3 b^2 with a, b nonzero; irrationality violated")
        big_is_a = a2 > b2
        if a > 0:
            return 1 if big_is_a else -1
        return -1 if big_is_a else 1

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    def to_float(self) -> float:
        """Floating shadow value, for diagnostics only; never used in predicates."""
        return float(self._a) + float(self._b) * math.sqrt(3.0)

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (self._a, self._b)

    @classmethod
    def from_rational(cls, value: RationalLike) -> QSqrt3:
        return cls(value, 0)


def _coerce(value: object) -> QSqrt3 | None:
    if isinstance(value, QSqrt3):
        return value
    if isinstance(value, (int, Fraction)):
        return QSqrt3(value, 0)
    return None


def _coerce_strict(value: object) -> QSqrt3:
    coerced = _coerce(value)
    if coerced is None:
        raise TypeError(f"cannot compare QSqrt3 with {type(value)!r}")
    return coerced


ZERO = QSqrt3(0)
ONE = QSqrt3(1)
SQRT3 = QSqrt3(0, 1)
HALF = QSqrt3(Fraction(1, 2))
SQRT3_HALF = QSqrt3(0, Fraction(1, 2))


_TERM_RE = re.compile(
    r"""^\s*
        (?P<sign>[+-]?)\s*
        (?:
            (?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*(?P<root1>sqrt3))?
          | (?P<root2>sqrt3)
        )
        \s*""",
    re.VERBOSE,
)


def format_qsqrt3(x: QSqrt3) -> str:
    """Render as "p/q+r/s*sqrt3", omitting zero terms ("0" for zero)."""
    parts: list[str] = []
    if x.a != 0:
        parts.append(str(x.a))
    if x.b != 0:
        coef = str(x.b)
        term = f"{coef}*sqrt3" if abs(x.b) != 1 else ("sqrt3" if x.b > 0 else "-sqrt3")
        if abs(x.b) != 1 and x.b > 0 and parts:
            term = "+" + term
        elif abs(x.b) == 1 and x.b > 0 and parts:
            term = "+" + term
        elif abs(x.b) != 1 and x.b < 0:
            term = term  # already carries the minus from str(x.b)
        parts.append(term)
    if not parts:
        return "0"
    return "".join(parts)


def parse_qsqrt3(text: str) -> QSqrt3:
    """Parse the textual form produced by :func:`format_qsqrt3`."""
    remaining = text.strip()
    if not remaining:
        raise ValueError("empty QSqrt3 literal")
    a = Fraction(0)
    b = Fraction(0)
    first = True
    while remaining:
        match = _TERM_RE.match(remaining)
        if not match or (not first and match.group("sign") == ""):
            raise ValueError(f"bad QSqrt3 literal: {text!r}")
        sign = -1 if match.group("sign") == "-" else 1
        if match.group("root2") is not None:
            b += sign
        else:
            coef = Fraction(match.group("coef"))
            if match.group("root1") is not None:
                b += sign * coef
            else:
                a += sign * coef
        remaining = remaining[match.end():]
        first = False
    return QSqrt3(a, b)


class Vec3Q:
    """Point or vector of E^3 with exact QSqrt3 coordinates."""

    __slots__ = ("_x", "_y", "_z")

    def __init__(self, x: QSqrt3 | RationalLike, y: QSqrt3 | RationalLike,
                 z: QSqrt3 | RationalLike) -> None:
        self._x = x if isinstance(x, QSqrt3) else QSqrt3(x)
        self._y = y if isinstance(y, QSqrt3) else QSqrt3(y)
        self._z = z if isinstance(z, QSqrt3) else QSqrt3(z)

    @property
    def x(self) -> QSqrt3:
        return self._x

    @property
    def y(self) -> QSqrt3:
        return self._y

    @property
    def z(self) -> QSqrt3:
        return self._z

    def __repr__(self) -> str:
        return f"Vec3Q({self._x}, {self._y}, {self._z})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Vec3Q):
            return NotImplemented
        return self._x == other._x and self._y == other._y and self._z == other._z

    def __hash__(self) -> int:
        return hash((self._x, self._y, self._z))

    def __add__(self, other: Vec3Q) -> Vec3Q:
        return Vec3Q(self._x + other._x, self._y + other._y, self._z + other._z)

    def __sub__(self, other: Vec3Q) -> Vec3Q:
        return Vec3Q(self._x - other._x, self._y - other._y, self._z - other._z)

    def __neg__(self) -> Vec3Q:
        return Vec3Q(-self._x, -self._y, -self._z)

    def scale(self, factor: QSqrt3 | RationalLike) -> Vec3Q:
        return Vec3Q(self._x * factor, self._y * factor, self._z * factor)

    def dot(self, other: Vec3Q) -> QSqrt3:
        return self._x * other._x + self._y * other._y + self._z * other._z

    def cross(self, other: Vec3Q) -> Vec3Q:
        return Vec3Q(
            self._y * other._z - self._z * other._y,
            self._z * other._x - self._x * other._z,
            self._x * other._y - self._y * other._x,
        )

    def norm_sq(self) -> QSqrt3:
        return self.dot(self)

    def is_zero(self) -> bool:
        return not (self._x or self._y or self._z)

    def sort_key(self):
        return (self._x.sort_key(), self._y.sort_key(), self._z.sort_key())

    def to_floats(self) -> tuple[float, float, float]:
        return (self._x.to_float(), self._y.to_float(), self._z.to_float())

    def components(self) -> tuple[QSqrt3, QSqrt3, QSqrt3]:
        return (self._x, self._y, self._z)

    def format(self) -> tuple[str, str, str]:
        return (format_qsqrt3(self._x), format_qsqrt3(self._y), format_qsqrt3(self._z))

    @classmethod
    def parse(cls, parts: Iterable[str]) -> Vec3Q:
        x, y, z = (parse_qsqrt3(p) for p in parts)
        return cls(x, y, z)


VEC_ZERO = Vec3Q(0, 0, 0)


class Mat3Q:
    """Exact 3x3 matrix over Q(sqrt 3), row major."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[QSqrt3 | RationalLike]]) -> None:
        norm_rows = tuple(
            tuple(v if isinstance(v, QSqrt3) else QSqrt3(v) for v in row)
            for row in rows
        )
        if len(norm_rows) != 3 or any(len(r) != 3 for r in norm_rows):
            raise ValueError("Mat3Q needs 3 rows of 3 entries")
        self._rows = norm_rows

    @property
    def rows(self) -> tuple[tuple[QSqrt3, ...], ...]:
        return self._rows

    def __repr__(self) -> str:
        return f"Mat3Q({self._rows!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat3Q):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __matmul__(self, other: Mat3Q) -> Mat3Q:
        a, b = self._rows, other._rows
        return Mat3Q(
            tuple(
                tuple(sum((a[i][k] * b[k][j] for k in range(3)), ZERO) for j in range(3))
                for i in range(3)
            )
        )

    def apply(self, v: Vec3Q) -> Vec3Q:
        r = self._rows
        return Vec3Q(
            r[0][0] * v.x + r[0][1] * v.y + r[0][2] * v.z,
            r[1][0] * v.x + r[1][1] * v.y + r[1][2] * v.z,
            r[2][0] * v.x + r[2][1] * v.y + r[2][2] * v.z,
        )

    def transpose(self) -> Mat3Q:
        r = self._rows
        return Mat3Q(tuple(tuple(r[j][i] for j in range(3)) for i in range(3)))

    def det(self) -> QSqrt3:
        r = self._rows
        return (
            r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
        )

    def is_orthogonal(self) -> bool:
        return (self @ self.transpose()) == MAT_IDENTITY

    def sort_key(self):
        return tuple(v.sort_key() for row in self._rows for v in row)

    @classmethod
    def identity(cls) -> Mat3Q:
        return MAT_IDENTITY

    @classmethod
    def from_outer(cls, u: Vec3Q, v: Vec3Q) -> Mat3Q:
        uc, vc = u.components(), v.components()
        return cls(tuple(tuple(uc[i] * vc[j] for j in range(3)) for i in range(3)))


MAT_IDENTITY = Mat3Q(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
