"""
Special functions used by the analytic wavefunctions.

Jacobi polynomials are evaluated with the three-term recurrence in the
degree, which stays stable for the non-integer first exponent 2 sqrt(c)
that appears in the Hulthen eigenfunctions. The hypergeometric function is
only needed in its terminating form 2F1(-n, b; c; x), a finite sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, NamedTuple

import numpy as np

from .errors import DomainError


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


def gamma_fn(x: float) -> float:
    """Gamma function for real x, rejecting the poles at 0, -1, -2, ..."""
    if _is_nonpositive_integer(x):
        raise DomainError(f"gamma has a pole at {x!r}")
    return math.gamma(x)


def log_gamma(x: float) -> float:
    """log |Gamma(x)|; used where Gamma itself would overflow."""
    if _is_nonpositive_integer(x):
        raise DomainError(f"gamma has a pole at {x!r}")
    return math.lgamma(x)


@dataclass(frozen=True)
class JacobiParams:
    n: int
    a: float
    b: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise DomainError(f"Jacobi degree must be a nonnegative integer, got {self.n!r}")
        if self.a <= -1 or self.b <= -1:
            raise DomainError(f"Jacobi exponents must exceed -1, got a={self.a}, b={self.b}")


def jacobi_poly(p: JacobiParams, x):
    """P_n^{(a,b)}(x) by upward recurrence; x may be a scalar or an array."""
    n, a, b = p.n, p.a, p.b
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return float(prev) if prev.ndim == 0 else prev
    cur = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0)
    for k in range(1, n):
        s = 2 * k + a + b
        c1 = 2.0 * (k + 1) * (k + a + b + 1) * s
        c2 = (s + 1.0) * ((s + 2.0) * s * x + a * a - b * b)
        c3 = 2.0 * (k + a) * (k + b) * (s + 2.0)
        prev, cur = cur, (c2 * cur - c3 * prev) / c1
    return float(cur) if cur.ndim == 0 else cur


def _hyp2f1_exact(n: int, b: Fraction, c: Fraction, x: Fraction) -> float:
    term = total = Fraction(1)
    for k in range(n):
        term = term * (k - n) * (b + k) / ((c + k) * (k + 1)) * x
        total += term
    return float(total)


def hyp2f1_terminating(n: int, b: float, c: float, x):
    """Gauss hypergeometric 2F1(-n, b; c; x) as its (n+1)-term polynomial.

    The alternating sum cancels badly for large n, so it is accumulated in
    exact rational arithmetic on the (exactly representable) float inputs
    and rounded once.
    """
    if int(n) != n or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    if _is_nonpositive_integer(c):
        raise DomainError(f"2F1 lower parameter c={c!r} is a nonpositive integer")
    n = int(n)
    bf, cf = Fraction(float(b)), Fraction(float(c))
    x = np.asarray(x, dtype=float)
    out = np.array([_hyp2f1_exact(n, bf, cf, Fraction(float(v))) for v in x.ravel()]).reshape(x.shape)
    return float(out) if out.ndim == 0 else out


class QuadratureResult(NamedTuple):
    value: float
    error: float
    nodes: int
    converged: bool


@lru_cache(maxsize=None)
def _legendre_nodes(n: int):
    return np.polynomial.legendre.leggauss(n)


def _gauss_legendre(f, lo, hi, n):
    x, w = _legendre_nodes(n)
    half = 0.5 * (hi - lo)
    pts = lo + half * (x + 1.0)
    try:
        vals = f(pts)
    except TypeError:
        vals = None
    if vals is None or np.shape(vals) != pts.shape:
        vals = np.array([f(t) for t in pts], dtype=float)
    return half * float(np.dot(w, vals))


def quadrature(
    f: Callable,
    lo: float,
    hi: float,
    nodes: int = 16,
    rtol: float = 1e-10,
    max_nodes: int = 2**14,
) -> QuadratureResult:
    """Gauss-Legendre estimate of the integral of f over [lo, hi].

    The node count doubles until two successive estimates agree to ``rtol``
    (relative). If ``max_nodes`` is reached first, the last estimate is
    returned with ``converged=False`` and the achieved difference in ``error``.
    ``f`` should accept a numpy array; scalar-only callables are evaluated
    pointwise.
    """
    if not lo < hi:
        raise DomainError(f"need lo < hi, got [{lo}, {hi}]")
    if nodes < 2:
        raise DomainError("nodes must be >= 2")
    n = int(nodes)
    prev = _gauss_legendre(f, lo, hi, n)
    while True:
        n2 = 2 * n
        if n2 > max_nodes:
            return QuadratureResult(prev, math.inf if n == nodes else err, n, False)
        cur = _gauss_legendre(f, lo, hi, n2)
        err = abs(cur - prev)
        if err <= rtol * abs(cur) or (cur == 0.0 and err == 0.0):
            return QuadratureResult(cur, err, n2, True)
        prev, n = cur, n2
