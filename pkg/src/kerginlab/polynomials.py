"""Sparse multivariate polynomials with exact or float coefficients.

Terms live in a dict mapping exponent multi-indices (tuples of length d) to
coefficients.  Coefficients may be exact scalars (int / Fraction /
GaussianRational) or complex floats; a polynomial is "exact" when every
coefficient is.  Zero coefficients are never stored.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .scalars import GaussianRational, is_exact, to_complex
from .space import DimensionMismatch


class MultiPoly:
    """Polynomial in d variables, stored as {exponent tuple: coefficient}."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms=None):
        if dim < 1:
            raise ValueError("polynomial dimension must be >= 1")
        self.dim = dim
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != dim:
                raise DimensionMismatch(
                    f"exponent {exps} has length {len(exps)}, expected {dim}"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if _is_zero(coeff):
                continue
            clean[exps] = clean.get(exps, 0) + coeff
            if _is_zero(clean[exps]):
                del clean[exps]
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, dim: int, value) -> "MultiPoly":
        return cls(dim, {(0,) * dim: value})

    @classmethod
    def variable(cls, dim: int, index: int) -> "MultiPoly":
        exps = tuple(1 if i == index else 0 for i in range(dim))
        return cls(dim, {exps: 1})

    @classmethod
    def monomial(cls, exps, coeff=1) -> "MultiPoly":
        exps = tuple(exps)
        return cls(len(exps), {exps: coeff})

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.terms.values())

    def total_degree(self) -> int:
        """Degree of the zero polynomial is -1 by convention."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    # -- ring operations -----------------------------------------------------

    def _check(self, other: "MultiPoly") -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(
                f"polynomial dimensions differ: {self.dim} vs {other.dim}"
            )

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return MultiPoly(self.dim, terms)

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return MultiPoly(self.dim, {e: -c for e, c in self.terms.items()})

    def scale(self, scalar) -> "MultiPoly":
        return MultiPoly(self.dim, {e: scalar * c for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return MultiPoly(self.dim, terms)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = MultiPoly.constant(self.dim, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.dim == other.dim and _terms_equal(self.terms, other.terms)

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    # -- calculus -------------------------------------------------------------

    def partial(self, index: int) -> "MultiPoly":
        terms = {}
        for exps, coeff in self.terms.items():
            e = exps[index]
            if e == 0:
                continue
            key = exps[:index] + (e - 1,) + exps[index + 1 :]
            terms[key] = terms.get(key, 0) + e * coeff
        return MultiPoly(self.dim, terms)

    def directional_derivative(self, direction) -> "MultiPoly":
        """Exact derivative sum_j v_j * dp/dx_j along a coordinate vector."""
        coords = _direction_coords(direction, self.dim)
        out = MultiPoly(self.dim, {})
        for j, vj in enumerate(coords):
            if _is_zero(vj):
                continue
            out = out + self.partial(j).scale(vj)
        return out

    # -- evaluation -------------------------------------------------------------

    def eval(self, point):
        """Evaluate at a Point or coordinate sequence; exact in, exact out."""
        coords = _direction_coords(point, self.dim)
        total = 0
        for exps, coeff in self.terms.items():
            term = coeff
            for x, e in zip(coords, exps):
                if e:
                    term = term * x**e
            total = total + term
        return total

    def eval_many(self, xs: np.ndarray) -> np.ndarray:
        """Float-path evaluation on an (N, d) complex array."""
        xs = np.asarray(xs, dtype=complex)
        if xs.ndim != 2 or xs.shape[1] != self.dim:
            raise DimensionMismatch(f"expected shape (N, {self.dim}), got {xs.shape}")
        out = np.zeros(xs.shape[0], dtype=complex)
        for exps, coeff in self.terms.items():
            term = np.full(xs.shape[0], to_complex(coeff))
            for j, e in enumerate(exps):
                if e:
                    term = term * xs[:, j] ** e
            out += term
        return out

    def substitute(self, values: list["MultiPoly"]) -> "MultiPoly":
        """Compose: replace x_i by values[i] (polynomials in a shared space)."""
        if len(values) != self.dim:
            raise DimensionMismatch(
                f"need {self.dim} substitution polynomials, got {len(values)}"
            )
        out_dim = values[0].dim
        powers: list[list[MultiPoly]] = [[MultiPoly.constant(out_dim, 1)] for _ in values]
        result = MultiPoly(out_dim, {})
        for exps, coeff in self.terms.items():
            factor = MultiPoly.constant(out_dim, coeff)
            for i, e in enumerate(exps):
                while len(powers[i]) <= e:
                    powers[i].append(powers[i][-1] * values[i])
                if e:
                    factor = factor * powers[i][e]
            result = result + factor
        return result

    def to_float(self) -> "MultiPoly":
        return MultiPoly(self.dim, {e: to_complex(c) for e, c in self.terms.items()})

    # -- serialization -------------------------------------------------------------

    def to_records(self) -> list:
        """Config-format records: {exponents, coeff_re, coeff_im}."""
        records = []
        for exps in sorted(self.terms):
            coeff = self.terms[exps]
            if isinstance(coeff, GaussianRational):
                re, im = str(coeff.re), str(coeff.im)
            elif isinstance(coeff, (int, Fraction)):
                re, im = str(coeff), "0"
            else:
                c = to_complex(coeff)
                re, im = c.real, c.imag
            records.append({"exponents": list(exps), "coeff_re": re, "coeff_im": im})
        return records

    @classmethod
    def from_records(cls, dim: int, records, exact: bool = True) -> "MultiPoly":
        terms = {}
        for rec in records:
            exps = tuple(rec["exponents"])
            re, im = rec.get("coeff_re", 0), rec.get("coeff_im", 0)
            if exact:
                coeff = GaussianRational(Fraction(re), Fraction(im))
            else:
                coeff = complex(float(Fraction(re) if isinstance(re, str) else re),
                                float(Fraction(im) if isinstance(im, str) else im))
            terms[exps] = terms.get(exps, 0) + coeff
        return cls(dim, terms)

    def __repr__(self):
        if not self.terms:
            return f"MultiPoly({self.dim}, 0)"
        bits = []
        for exps in sorted(self.terms):
            mono = "*".join(
                f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}"
                for i, e in enumerate(exps)
                if e
            )
            bits.append(f"({self.terms[exps]}){'*' + mono if mono else ''}")
        return f"MultiPoly({self.dim}, {' + '.join(bits)})"


def _is_zero(coeff) -> bool:
    if isinstance(coeff, GaussianRational):
        return not coeff
    return coeff == 0


def _terms_equal(a: dict, b: dict) -> bool:
    if set(a) != set(b):
        return False
    return all(a[k] == b[k] for k in a)


def _direction_coords(direction, dim: int):
    coords = getattr(direction, "coords", None)
    if coords is None:
        coords = tuple(direction)
    if len(coords) != dim:
        raise DimensionMismatch(
            f"vector of length {len(coords)} against polynomial in {dim} variables"
        )
    return coords


def derive_poly(p: MultiPoly, v) -> MultiPoly:
    """Directional derivative sum_j v_j dp/dx_j; iterate for higher orders."""
    return p.directional_derivative(v)


def build_divergence_poly(d: int) -> MultiPoly:
    """sum_{n=1}^{d} n! * x_1 x_2 ... x_n with exact integer coefficients.

    Finite truncation of the entire l^1 function whose Kergin series diverges
    at the origin for standard-basis interpolation nodes; the truncation is
    exact for every quantity the experiments evaluate, because at points
    supported on the first k+1 coordinates all products with n > k+1 vanish.
    """
    if d < 1:
        raise ValueError("dimension must be >= 1")
    terms = {}
    for n in range(1, d + 1):
        exps = tuple(1 if i < n else 0 for i in range(d))
        terms[exps] = math.factorial(n)
    return MultiPoly(d, terms)
