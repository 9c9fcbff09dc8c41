"""
Classical building blocks: Pochhammer symbols, terminating 3F2 sums,
Laguerre and Jacobi polynomials with their derivatives, the generalized
Hermite polynomials and the mu-numbers.

Polynomials are evaluated by forward three-term recurrence in the degree.
The ``x`` argument may be a scalar or an array; scalars come back as floats.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .errors import PoleInDenominator, SingularPoint


@dataclass(frozen=True)
class PolyEval:
    """A number stored as ``value * exp(log_scale)`` to defer overflow."""

    value: float
    log_scale: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.value) and math.isfinite(self.log_scale)):
            raise ValueError("PolyEval fields must be finite")

    @property
    def sign(self) -> int:
        return (self.value > 0) - (self.value < 0)

    def __float__(self) -> float:
        return self.value * math.exp(self.log_scale)

    def __mul__(self, other: "PolyEval") -> "PolyEval":
        return PolyEval(self.value * other.value, self.log_scale + other.log_scale)

    def __truediv__(self, other: "PolyEval") -> "PolyEval":
        if other.value == 0:
            raise ZeroDivisionError("division by a zero PolyEval")
        return PolyEval(self.value / other.value, self.log_scale - other.log_scale)


def _scalarize(x, out):
    return float(out) if np.ndim(x) == 0 else out


def mu_number(n: int, mu: float) -> float:
    """[n]_mu: n for even n, n + 2 mu for odd n."""
    return n + 2 * mu if n % 2 else float(n)


def pochhammer(c: float, k: int) -> float:
    """Rising factorial (c)_k = c (c+1) ... (c+k-1)."""
    out = 1.0
    for i in range(k):
        out *= c + i
    return out


def log_pochhammer(c: float, k: int) -> PolyEval:
    """(c)_k as sign times exp(log|.|); exact zero gives value 0."""
    sign = 1.0
    log_abs = 0.0
    for i in range(k):
        t = c + i
        if t == 0:
            return PolyEval(0.0, 0.0)
        if t < 0:
            sign = -sign
        log_abs += math.log(abs(t))
    return PolyEval(sign, log_abs)


def log_gamma_ratio(num: list[float], den: list[float]) -> float:
    """log( prod Gamma(num) / prod Gamma(den) ) for positive arguments."""
    return float(sum(gammaln(a) for a in num) - sum(gammaln(b) for b in den))


def hyp3f2_terminating(n: int, a2: float, a3: float, b1: float, b2: float) -> float:
    """Sum of 3F2(-n, a2, a3; b1, b2; 1), which terminates at k = n."""
    total = 1.0
    term = 1.0
    for k in range(n):
        den = (b1 + k) * (b2 + k) * (k + 1)
        if (b1 + k) == 0 or (b2 + k) == 0:
            raise PoleInDenominator(
                f"lower parameter hits zero at k={k + 1} (b1={b1}, b2={b2}, n={n})")
        term *= (-n + k) * (a2 + k) * (a3 + k) / den
        total += term
    return total


def laguerre(n: int, alpha: float, x):
    """Generalized Laguerre polynomial L_n^(alpha)(x)."""
    x = np.asarray(x, dtype=float)
    p_prev = np.zeros_like(x)
    p = np.ones_like(x)
    for j in range(n):
        p_prev, p = p, ((2 * j + 1 + alpha - x) * p - (j + alpha) * p_prev) / (j + 1)
    return _scalarize(x, p)


def laguerre_derivative(n: int, alpha: float, x):
    if n == 0:
        return _scalarize(x, np.zeros_like(np.asarray(x, dtype=float)))
    return -laguerre(n - 1, alpha + 1, x)


def jacobi(n: int, alpha: float, beta: float, x):
    """Jacobi polynomial P_n^(alpha, beta)(x)."""
    x = np.asarray(x, dtype=float)
    p_prev = np.zeros_like(x)
    p = np.ones_like(x)
    if n == 0:
        return _scalarize(x, p)
    p_prev, p = p, 0.5 * ((alpha + beta + 2) * x + (alpha - beta))
    ab = alpha + beta
    for j in range(1, n):
        c = 2 * j + ab
        a1 = 2 * (j + 1) * (j + ab + 1) * c
        a2 = (c + 1) * (alpha * alpha - beta * beta)
        a3 = c * (c + 1) * (c + 2)
        a4 = 2 * (j + alpha) * (j + beta) * (c + 2)
        p_prev, p = p, ((a2 + a3 * x) * p - a4 * p_prev) / a1
    return _scalarize(x, p)


def jacobi_derivative(n: int, alpha: float, beta: float, x):
    if n == 0:
        return _scalarize(x, np.zeros_like(np.asarray(x, dtype=float)))
    return 0.5 * (n + alpha + beta + 1) * jacobi(n - 1, alpha + 1, beta + 1, x)


def jacobi_mixed_derivative(n: int, alpha: float, beta: float, x):
    """Derivative of P_n^(alpha, beta) through the mixed contiguous relation.

    Independent of :func:`jacobi_derivative`; undefined at x = 1.
    """
    xa = np.asarray(x, dtype=float)
    if np.any(xa == 1.0):
        raise SingularPoint("mixed derivative relation is singular at x = 1")
    return ((alpha + n) * jacobi(n, alpha - 1, beta + 1, x)
            - alpha * jacobi(n, alpha, beta, x)) / (xa - 1)


def gen_hermite(m: int, k: float, x):
    """Generalized Hermite polynomial H_m^k(x), m = 2n + p."""
    n, p = divmod(m, 2)
    log_norm = 0.5 * (math.lgamma(n + 1) - float(gammaln(n + p + k + 0.5)))
    xa = np.asarray(x, dtype=float)
    out = (-1) ** n * math.exp(log_norm) * xa ** p * laguerre(n, k - 0.5 + p, xa * xa)
    return _scalarize(x, out)


def gen_hermite_derivative(m: int, k: float, x):
    n, p = divmod(m, 2)
    log_norm = 0.5 * (math.lgamma(n + 1) - float(gammaln(n + p + k + 0.5)))
    xa = np.asarray(x, dtype=float)
    a = k - 0.5 + p
    lag = laguerre(n, a, xa * xa)
    dlag = 2 * xa * laguerre_derivative(n, a, xa * xa)
    if p:
        out = lag + xa * dlag
    else:
        out = dlag
    return _scalarize(x, (-1) ** n * math.exp(log_norm) * out)
