"""Exact-arithmetic generation and verification of fully transitive periodic polyhedra."""

from .field import QSqrt3, Vec3Q, Mat3Q, parse_qsqrt3, format_qsqrt3
from .isometry import Isometry, PlaneQ, reflection_through_plane, IsometryKind
from .group import (
    GroupSpec,
    Window,
    LatticeBasis,
    enumerate_elements,
    point_stabilizer,
    orbit_points,
    translation_lattice,
    lattice_class_partition,
)
from .honeypie import HoneypieConfig, Corner, honeypie_generators, base_point, named_points, select_corner

__version__ = "0.1.0"

__all__ = [
    "QSqrt3",
    "Vec3Q",
    "Mat3Q",
    "parse_qsqrt3",
    "format_qsqrt3",
    "Isometry",
    "PlaneQ",
    "reflection_through_plane",
    "IsometryKind",
    "GroupSpec",
    "Window",
    "LatticeBasis",
    "enumerate_elements",
    "point_stabilizer",
    "orbit_points",
    "translation_lattice",
    "lattice_class_partition",
    "HoneypieConfig",
    "Corner",
    "honeypie_generators",
    "base_point",
    "named_points",
    "select_corner",
    "__version__",
]
