"""Higher directional derivatives d^k f(a; v_0, ..., v_{k-1}).

Three interchangeable engines, cross-validated against each other:

* ``dk_exact``      symbolic, for polynomial oracles (the reference);
* ``dk_cauchy``     tensor-product contour quadrature on a k-torus,
                    cost m^k, kept as a validation path;
* ``dk_polarized``  polarization identity reducing the mixed derivative to
                    2^k single-circle integrals, cost 2^k * m, the
                    production path for evaluation-only oracles;
* ``dk_fd``         nested central differences, an independent low-accuracy
                    check.

The contour engines extract the coefficient of z_0 * ... * z_{k-1} in
g(z) = f(a + sum_j z_j v_j) via the trapezoid rule on circles of radius r_c:

    d^k f(a; v) = r_c^{-k} * int_{T^k} g(r_c e^{2 pi i t}) e^{-2 pi i sum t_j} dt.

The e^{-2 pi i sum t_j} phase selects the mixed first-order Fourier
coefficient.  Dropping it (``apply_phase=False``) leaves the plain circle
average, which by the mean value property returns f(a) at k = 1; that
uncorrected form is kept only as a regression guard.

Trapezoid sums on circles are spectrally accurate for holomorphic integrands
and exact for trigonometric polynomials below the node count, so polynomial
oracles are differentiated exactly (to roundoff) once m exceeds the degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .oracles import DomainViolation, FunctionOracle
from .polynomials import MultiPoly
from .space import DimensionMismatch, Point, norm_array

_EVAL_CHUNK = 1 << 18  # points per oracle batch, bounds peak memory

_METHODS = ("auto", "exact", "polarized", "cauchy", "finite_difference")


@dataclass(frozen=True)
class DerivativeRequest:
    """Evaluation contract for d^k f(base; directions)."""

    base: Point
    directions: tuple
    method: str = "auto"
    contour_radius: float | None = None
    contour_nodes: int | None = None
    fd_step: float = 1e-3

    def __post_init__(self):
        dirs = tuple(self.directions)
        object.__setattr__(self, "directions", dirs)
        if len(dirs) < 1:
            raise ValueError("need at least one direction (k >= 1)")
        for v in dirs:
            if v.dim != self.base.dim:
                raise DimensionMismatch("directions must share the base dimension")
        if self.method not in _METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.contour_nodes is not None and self.contour_nodes < 2:
            raise ValueError("contour needs m >= 2 nodes per circle")
        if self.fd_step <= 0:
            raise ValueError("finite-difference step must be positive")
        if self.contour_radius is not None and self.contour_radius <= 0:
            raise ValueError("contour radius must be positive")

    @property
    def k(self) -> int:
        return len(self.directions)


def dk_exact(p: MultiPoly, a: Point, directions):
    """Iterated symbolic directional derivative, evaluated at ``a``.

    Exact on the exact scalar path; the reference all contour and
    finite-difference results are checked against.
    """
    q = p
    for v in directions:
        q = q.directional_derivative(v)
    return q.eval(a)


def default_contour_radius(margin: float, direction_norm: float) -> float:
    """Largest radius r <= 1 whose contour keeps a 0.9 safety margin.

    The domain check is the triangle-inequality bound r * ||u|| <= 0.9 *
    margin; found by bisection (30 iterations) rather than solved in closed
    form so that the same search works for any monotone check.
    """
    if margin <= 0:
        raise DomainViolation(None, margin, "contour base point at or outside boundary")
    if not math.isfinite(margin) or direction_norm == 0:
        return 1.0

    def ok(r: float) -> bool:
        return r * direction_norm <= 0.9 * margin

    if ok(1.0):
        return 1.0
    lo, hi = 0.0, 1.0
    for _ in range(30):
        mid = 0.5 * (lo + hi)
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return lo


def _direction_matrix(directions) -> np.ndarray:
    return np.array([v.as_array() for v in directions])


def _batched_eval(f: FunctionOracle, pts: np.ndarray) -> np.ndarray:
    if pts.shape[0] <= _EVAL_CHUNK:
        return f.eval_many(pts)
    out = np.empty(pts.shape[0], dtype=complex)
    for start in range(0, pts.shape[0], _EVAL_CHUNK):
        out[start : start + _EVAL_CHUNK] = f.eval_many(pts[start : start + _EVAL_CHUNK])
    return out


def _default_nodes(f: FunctionOracle, req: DerivativeRequest) -> int:
    if req.contour_nodes is not None:
        return req.contour_nodes
    if f.poly is not None:
        return max(16, f.poly.total_degree() + 1)
    return 16


def dk_cauchy(f: FunctionOracle, req: DerivativeRequest, apply_phase: bool = True):
    """Tensor-product trapezoid rule over the k-torus; cost m^k evaluations.

    With ``apply_phase=False`` the directions are used unscaled and the bare
    torus average of f is returned (equals f(base) at k = 1).
    """
    k = req.k
    m = _default_nodes(f, req)
    base = req.base.as_array()
    dirs = _direction_matrix(req.directions)

    if apply_phase:
        total_norm = float(
            norm_array(dirs, f.domain.norm_kind).sum()
        )
        margin = f.domain.distance_to_boundary(req.base)
        rc = req.contour_radius or default_contour_radius(margin, total_norm)
    else:
        rc = 1.0

    grid = np.array(list(product(range(m), repeat=k)))  # (m^k, k)
    phases = np.exp(2j * np.pi * grid / m)
    pts = base[None, :] + rc * (phases @ dirs)
    vals = _batched_eval(f, pts)
    if not apply_phase:
        return complex(vals.mean())
    weights = np.exp(-2j * np.pi * grid.sum(axis=1) / m)
    return complex((vals * weights).sum() / (m**k * rc**k))


def _polarized_batch(
    f: FunctionOracle,
    bases: np.ndarray,
    dirs: np.ndarray,
    m: int,
    radius: float | None,
) -> np.ndarray:
    """d^k f at many base points sharing one direction list.

    Polarization over subset sums u_eps = sum_{j in eps} v_j:
        d^k f(a; v_1..v_k) = (1/k!) sum_eps (-1)^{k-|eps|} D^k_{u_eps} f(a),
    each diagonal derivative D^k_u f(a) from a single circle.  Every subset
    direction is domain-checked; the fixed subset order keeps summation
    deterministic.
    """
    k = dirs.shape[0]
    kfact = math.factorial(k)
    q = bases.shape[0]
    margin = float(f.domain.margins_many(bases).min())
    j = np.arange(m)
    circle = np.exp(2j * np.pi * j / m)
    dft = np.exp(-2j * np.pi * k * j / m) / m
    acc = np.zeros(q, dtype=complex)
    for eps in product((0, 1), repeat=k):
        weight = sum(eps)
        if weight == 0:
            continue  # zero direction: D^k_0 f = 0 for k >= 1
        u = np.asarray(eps, dtype=float) @ dirs
        un = float(norm_array(u[None, :], f.domain.norm_kind)[0])
        if un == 0.0:
            continue
        rc = radius or default_contour_radius(margin, un)
        pts = bases[:, None, :] + (rc * circle)[None, :, None] * u[None, None, :]
        vals = _batched_eval(f, pts.reshape(-1, bases.shape[1])).reshape(q, m)
        dku = (vals @ dft) * (kfact / rc**k)
        if (k - weight) % 2:
            acc -= dku
        else:
            acc += dku
    return acc / kfact


def dk_polarized(f: FunctionOracle, req: DerivativeRequest):
    """Polarization-identity contour derivative; cost 2^k * m evaluations."""
    m = _default_nodes(f, req)
    out = _polarized_batch(
        f,
        req.base.as_array()[None, :],
        _direction_matrix(req.directions),
        m,
        req.contour_radius,
    )
    return complex(out[0])


def dk_fd(f: FunctionOracle, req: DerivativeRequest):
    """k-fold nested central difference with step h; error O(h^2) per level.

    Exact on functions multilinear in the stepped directions, e.g. the mixed
    derivative of x1*x2 along (e1, e2).
    """
    k = req.k
    h = req.fd_step
    base = req.base.as_array()
    dirs = _direction_matrix(req.directions)
    signs = np.array(list(product((-1.0, 1.0), repeat=k)))  # (2^k, k)
    pts = base[None, :] + h * (signs @ dirs)
    vals = _batched_eval(f, pts)
    coeffs = signs.prod(axis=1)
    return complex((vals * coeffs).sum() / (2 * h) ** k)


def evaluate(f: FunctionOracle, req: DerivativeRequest):
    """Dispatch on the request's method; ``auto`` prefers, in order of
    accuracy: exact (polynomial oracles) > polarized > cauchy > fd."""
    method = req.method
    if method == "auto":
        method = "exact" if f.poly is not None else "polarized"
    if method == "exact":
        if f.poly is None:
            raise ValueError("exact derivatives need a polynomial oracle")
        return dk_exact(f.poly, req.base, req.directions)
    if method == "polarized":
        return dk_polarized(f, req)
    if method == "cauchy":
        return dk_cauchy(f, req)
    return dk_fd(f, req)
