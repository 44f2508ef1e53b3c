"""Ambient space model: vectors in C^d, norms, and simplex combinations.

Dimension is fixed per run and carried in every :class:`Point`; there is no
implicit broadcasting.  A point is exact when all of its coordinates are
exact scalars, float otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .scalars import GaussianRational, is_exact, to_complex, to_exact

NORM_KINDS = ("l1", "l2", "linf")

_DUAL = {"l1": "linf", "l2": "l2", "linf": "l1"}


def dual_norm_kind(kind: str) -> str:
    """Dual pairing used by linear-functional domains: l1<->linf, l2 self."""
    _check_kind(kind)
    return _DUAL[kind]


def _check_kind(kind: str) -> None:
    if kind not in NORM_KINDS:
        raise ValueError(f"unknown norm kind {kind!r}; expected one of {NORM_KINDS}")


class DimensionMismatch(ValueError):
    pass


class Point:
    """Immutable vector in C^d with coordinatewise, dimension-checked arithmetic."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(coords)
        if len(coords) < 1:
            raise ValueError("points need dimension >= 1")
        self.coords = coords

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.coords)

    @classmethod
    def zero(cls, dim: int, exact: bool = False) -> "Point":
        fill = GaussianRational(0) if exact else 0j
        return cls((fill,) * dim)

    @classmethod
    def basis(cls, dim: int, index: int, exact: bool = True) -> "Point":
        """Standard basis vector e_{index+1} (0-based index)."""
        if not 0 <= index < dim:
            raise ValueError(f"basis index {index} out of range for dim {dim}")
        one = GaussianRational(1) if exact else 1 + 0j
        zero = GaussianRational(0) if exact else 0j
        return cls(tuple(one if i == index else zero for i in range(dim)))

    def _check_dim(self, other: "Point") -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(
                f"dimension mismatch: {self.dim} vs {other.dim}"
            )

    def __add__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        self._check_dim(other)
        return Point(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        self._check_dim(other)
        return Point(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Point(tuple(-a for a in self.coords))

    def scale(self, scalar) -> "Point":
        return Point(tuple(scalar * c for c in self.coords))

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.dim == other.dim and all(
            a == b for a, b in zip(self.coords, other.coords)
        )

    def __hash__(self):
        return hash(self.coords)

    def to_float(self) -> "Point":
        return Point(tuple(to_complex(c) for c in self.coords))

    def to_exact(self) -> "Point":
        return Point(tuple(to_exact(c) for c in self.coords))

    def as_array(self) -> np.ndarray:
        return np.array([to_complex(c) for c in self.coords], dtype=complex)

    def __repr__(self):
        return f"Point({list(self.coords)!r})"


def norm(p: Point, kind: str = "l2") -> float:
    """l1/l2/linf norm of the coordinatewise moduli; always a float."""
    _check_kind(kind)
    moduli = [abs(to_complex(c)) for c in p.coords]
    if kind == "l1":
        return math.fsum(moduli)
    if kind == "linf":
        return max(moduli)
    return math.sqrt(math.fsum(m * m for m in moduli))


def norm_array(x: np.ndarray, kind: str = "l2") -> np.ndarray:
    """Row-wise norm of a complex array of shape (..., d)."""
    _check_kind(kind)
    moduli = np.abs(x)
    if kind == "l1":
        return moduli.sum(axis=-1)
    if kind == "linf":
        return moduli.max(axis=-1)
    return np.sqrt((moduli * moduli).sum(axis=-1))


@dataclass(frozen=True)
class SimplexCoords:
    """Coordinates (s_1, ..., s_k) in the standard simplex S_k.

    The omitted coordinate s_0 = 1 - s_1 - ... - s_k is derived; all entries
    stay nonnegative and sum (with s_0) to one.
    """

    k: int
    s: tuple

    def __init__(self, s, tol: float = 1e-12):
        s = tuple(float(v) for v in s)
        if len(s) < 1:
            raise ValueError("simplex degree k must be >= 1")
        if any(v < -tol for v in s) or sum(s) > 1 + tol:
            raise ValueError(f"coordinates {s} lie outside the standard simplex")
        object.__setattr__(self, "k", len(s))
        object.__setattr__(self, "s", s)

    @property
    def s0(self) -> float:
        return 1.0 - math.fsum(self.s)

    def weights(self) -> tuple:
        """Full barycentric weight vector (s_0, s_1, ..., s_k)."""
        return (self.s0,) + self.s


def affine_point(nodes, s: SimplexCoords, x: Point | None = None) -> Point:
    """Barycentric combination s_0*node_0 + s_1*node_1 + ... over k+1 points.

    When ``x`` is given it is the final point, weighted s_k.  Simplex weights
    are floats, so the result lives on the float path.
    """
    points = list(nodes) + ([x] if x is not None else [])
    if len(points) != s.k + 1:
        raise ValueError(
            f"need {s.k + 1} points for coordinates in S_{s.k}, got {len(points)}"
        )
    dim = points[0].dim
    for p in points:
        if p.dim != dim:
            raise DimensionMismatch("affine_point requires a shared dimension")
    weights = s.weights()
    acc = [0j] * dim
    for w, p in zip(weights, points):
        for i, c in enumerate(p.coords):
            acc[i] += w * to_complex(c)
    return Point(acc)
