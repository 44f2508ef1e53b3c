"""Holomorphic function oracles: polynomials with exact algebra plus
evaluation-only built-ins, each carrying an explicit domain.

Evaluation outside the domain raises :class:`DomainViolation` with the
offending point and its distance to the boundary.  That error is a first
class diagnostic: the convergence machinery is all about keeping contour and
simplex points inside the domain, so a violation means the caller's geometry
is wrong, not that the library crashed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .polynomials import MultiPoly
from .scalars import to_complex
from .space import Point, dual_norm_kind, norm, norm_array


class DomainViolation(Exception):
    """Evaluation attempted outside an oracle's domain."""

    def __init__(self, point, distance: float, context: str = ""):
        self.point = point
        self.distance = distance
        self.context = context
        msg = f"point {point} outside domain (distance to boundary {distance:.6g})"
        if context:
            msg += f" [{context}]"
        super().__init__(msg)


@dataclass(frozen=True)
class DomainSpec:
    """Either all of C^d or an open norm ball {x: ||x - center|| < radius}."""

    kind: str  # "all" | "ball"
    center: Point | None = None
    radius: float = math.inf
    norm_kind: str = "l2"

    @classmethod
    def all_space(cls) -> "DomainSpec":
        return cls(kind="all")

    @classmethod
    def ball(cls, center: Point, radius: float, norm_kind: str = "l2") -> "DomainSpec":
        if radius <= 0:
            raise ValueError("ball radius must be positive")
        return cls(kind="ball", center=center, radius=float(radius), norm_kind=norm_kind)

    def distance_to_boundary(self, p: Point) -> float:
        """Positive inside, negative outside; inf for all-space."""
        if self.kind == "all":
            return math.inf
        return self.radius - norm(p - self.center, self.norm_kind)

    def contains(self, p: Point) -> bool:
        # strict inequality: the ball is open
        return self.distance_to_boundary(p) > 0

    def margins_many(self, xs: np.ndarray) -> np.ndarray:
        if self.kind == "all":
            return np.full(xs.shape[0], math.inf)
        c = self.center.as_array()
        return self.radius - norm_array(xs - c[None, :], self.norm_kind)

    def describe(self) -> str:
        if self.kind == "all":
            return "all-space"
        return f"ball(radius={self.radius:g}, norm={self.norm_kind})"


@dataclass
class FunctionOracle:
    """Evaluatable holomorphic function with capability flags.

    ``poly`` is set when the oracle is polynomial-backed, which unlocks the
    exact-derivative engines; evaluation-only oracles go through contour or
    finite-difference differentiation instead.
    """

    evaluator: object
    domain: DomainSpec
    exact_derivatives: bool = False
    poly: MultiPoly | None = None
    batch_evaluator: object | None = None
    name: str = "oracle"
    params: dict = field(default_factory=dict)

    def eval(self, x: Point):
        if not self.domain.contains(x):
            raise DomainViolation(x, self.domain.distance_to_boundary(x), self.name)
        return self.evaluator(x)

    __call__ = eval

    def eval_many(self, xs: np.ndarray) -> np.ndarray:
        """Vectorized float-path evaluation with a batched domain check."""
        xs = np.asarray(xs, dtype=complex)
        margins = self.domain.margins_many(xs)
        bad = np.nonzero(margins <= 0)[0]
        if bad.size:
            i = int(bad[0])
            raise DomainViolation(Point(xs[i]), float(margins[i]), self.name)
        if self.batch_evaluator is not None:
            return self.batch_evaluator(xs)
        return np.array([to_complex(self.evaluator(Point(row))) for row in xs])


def poly_oracle(p: MultiPoly, name: str = "poly") -> FunctionOracle:
    return FunctionOracle(
        evaluator=lambda x: p.eval(x),
        domain=DomainSpec.all_space(),
        exact_derivatives=True,
        poly=p,
        batch_evaluator=p.eval_many,
        name=name,
    )


def builtin_oracle(name: str, **params) -> FunctionOracle:
    """Built-in oracles by name.

    rational_pole: 1/(1 - <u, x>) on the open ball of radius 1/||u||_dual in
        the requested norm (<.,.> is the bilinear pairing, no conjugation).
    exp_linear: exp(<u, x>) on all of C^d.
    poly: wraps a MultiPoly on all of C^d.
    """
    if name == "poly":
        p = params.get("poly")
        if not isinstance(p, MultiPoly):
            raise ValueError("poly oracle needs poly=MultiPoly")
        return poly_oracle(p)

    if name in ("rational_pole", "exp_linear"):
        u = params.get("u")
        if u is None:
            raise ValueError(f"{name} oracle needs a direction u")
        u = u if isinstance(u, Point) else Point(u)
        ua = u.as_array()
        norm_kind = params.get("norm", "l2")

        if name == "exp_linear":
            return FunctionOracle(
                evaluator=lambda x: cmath.exp(
                    sum(a * to_complex(b) for a, b in zip(ua, x.coords))
                ),
                domain=DomainSpec.all_space(),
                batch_evaluator=lambda xs: np.exp(xs @ ua),
                name="exp_linear",
                params={"u": list(ua)},
            )

        dual = norm(u, dual_norm_kind(norm_kind))
        if dual <= 0:
            raise ValueError("rational_pole needs a nonzero u")
        radius = 1.0 / dual
        dim = u.dim

        def _eval(x: Point) -> complex:
            return 1.0 / (1.0 - sum(a * to_complex(b) for a, b in zip(ua, x.coords)))

        return FunctionOracle(
            evaluator=_eval,
            domain=DomainSpec.ball(Point.zero(dim), radius, norm_kind),
            batch_evaluator=lambda xs: 1.0 / (1.0 - xs @ ua),
            name="rational_pole",
            params={"u": list(ua), "norm": norm_kind},
        )

    raise ValueError(f"unknown builtin oracle {name!r}")
