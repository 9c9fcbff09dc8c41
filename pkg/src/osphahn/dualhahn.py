"""
Monic dual -1 Hahn polynomials P_n(x; xi, zeta, N).

The three-term recurrence is the reference evaluator; the four terminating
3F2 closed forms (N parity x degree parity) serve as the cross-check.
Weights and norms are assembled from signed log-Pochhammer factors so that
large N does not overflow before the final exponentiation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import IndexOutOfRange, InvalidParameters
from .orthopoly import PolyEval, hyp3f2_terminating, log_pochhammer, mu_number, pochhammer


@dataclass(frozen=True)
class DualHahnParams:
    xi: float
    zeta: float
    n_max: int

    def __post_init__(self):
        if not (self.xi > -0.5 and self.zeta > -0.5):
            raise InvalidParameters(f"need xi, zeta > -1/2, got xi={self.xi}, zeta={self.zeta}")
        if int(self.n_max) != self.n_max or self.n_max < 0:
            raise InvalidParameters(f"N must be a nonnegative integer, got {self.n_max}")
        object.__setattr__(self, "n_max", int(self.n_max))

    @property
    def even(self) -> bool:
        return self.n_max % 2 == 0

    def check_index(self, n: int, name: str = "n") -> None:
        if not 0 <= n <= self.n_max:
            raise IndexOutOfRange(f"{name}={n} outside [0, {self.n_max}]")


def recurrence_coefficients(n: int, params: DualHahnParams) -> tuple[float, float]:
    """(b_n, u_n) of x P_n = P_{n+1} + b_n P_n + u_n P_{n-1}."""
    params.check_index(n)
    xi, zeta, N = params.xi, params.zeta, params.n_max
    b = 2 * (-1) ** (n + 1) * (xi + (-1) ** N * zeta) - 1
    u = 4 * mu_number(n, xi) * mu_number(N - n + 1, zeta)
    return float(b), float(u)


def eval_recurrence(n: int, x, params: DualHahnParams):
    params.check_index(n)
    xa = np.asarray(x, dtype=float)
    p_prev = np.zeros_like(xa)
    p = np.ones_like(xa)
    for m in range(n):
        b, u = recurrence_coefficients(m, params)
        p_prev, p = p, (xa - b) * p - u * p_prev
    return float(p) if np.ndim(x) == 0 else p


def eval_all(x, params: DualHahnParams) -> np.ndarray:
    """Rows P_0 .. P_N evaluated at the points ``x``."""
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty((params.n_max + 1, xa.size))
    out[0] = 1.0
    p_prev = np.zeros_like(xa)
    for m in range(params.n_max):
        b, u = recurrence_coefficients(m, params)
        out[m + 1] = (xa - b) * out[m] - u * p_prev
        p_prev = out[m]
    return out


def eval_hypergeometric(n: int, x: float, params: DualHahnParams) -> float:
    params.check_index(n)
    xi, zeta, N = params.xi, params.zeta, params.n_max
    half, odd = divmod(n, 2)
    scale = 16.0 ** half
    if N % 2 == 0:
        d = -0.5 * (xi + zeta + N)
        b1 = 1 - N / 2 if odd else -N / 2
        b2 = -N / 2 + 0.5 - zeta
        pre = (x + 2 * xi + 2 * zeta + 1) if odd else 1.0
        a0 = d
    else:
        d = 0.5 * (xi + zeta + 1)
        b1 = (1 - N) / 2
        b2 = xi + 1.5 if odd else xi + 0.5
        pre = (x + 2 * xi - 2 * zeta + 1) if odd else 1.0
        a0 = d
    shift = (1 + x) / 4
    series = hyp3f2_terminating(half, a0 + shift, a0 - shift, b1, b2)
    return pre * scale * pochhammer(b1, half) * pochhammer(b2, half) * series


def grid_point(s: int, params: DualHahnParams) -> float:
    params.check_index(s, "s")
    xi, zeta, N = params.xi, params.zeta, params.n_max
    if N % 2 == 0:
        return float((-1) ** s * (2 * s - 2 * xi - 2 * zeta - 2 * N - 1))
    return float((-1) ** s * (2 * s + 2 * xi + 2 * zeta + 1))


def weight_log(s: int, params: DualHahnParams) -> PolyEval:
    """w_s as sign and log-magnitude; usable where float(w_s) would overflow."""
    xi, zeta, N = params.xi, params.zeta, params.n_max
    m, j = divmod(s, 2)
    lp = log_pochhammer
    sign = PolyEval((-1.0) ** m, -math.lgamma(m + 1))
    if N % 2 == 0:
        return (sign * lp(-N / 2, m + j) * lp((1 - N) / 2 - zeta, m) * lp(-N - xi - zeta, m)
                / lp((1 - N) / 2 - xi, m) / lp(-N / 2 - xi - zeta, m + j))
    return (sign * lp((1 - N) / 2, m) * lp(xi + 0.5, m + j) * lp(1 + xi + zeta, m)
            / lp(zeta + 0.5, m + j) / lp((N + 2 * xi + 2 * zeta + 3) / 2, m))


def norm_log(n: int, params: DualHahnParams) -> PolyEval:
    """nu_n as sign and log-magnitude."""
    xi, zeta, N = params.xi, params.zeta, params.n_max
    m, j = divmod(n, 2)
    lp = log_pochhammer
    head = PolyEval((-1.0) ** j, 4 * n * math.log(2) + math.lgamma(m + 1)) * lp(xi + 0.5, m + j)
    if N % 2 == 0:
        return (head * lp((1 - N) / 2 - zeta, m) * lp(-N / 2, m + j)
                * lp(-N - xi - zeta, N // 2) / lp((1 - N) / 2 - xi, N // 2))
    return (head * lp((1 - N) / 2, m) * lp(-zeta - N / 2, m + j)
            * lp(xi + zeta + 1, (N + 1) // 2) / lp(zeta + 0.5, (N + 1) // 2))


def weight(s: int, params: DualHahnParams) -> float:
    params.check_index(s, "s")
    return float(weight_log(s, params))


def norm(n: int, params: DualHahnParams) -> float:
    params.check_index(n)
    return float(norm_log(n, params))


@dataclass(frozen=True)
class OrthogonalityData:
    grid: tuple[float, ...]
    weights: tuple[float, ...]
    norms: tuple[float, ...]

    @classmethod
    def from_params(cls, params: DualHahnParams) -> "OrthogonalityData":
        r = range(params.n_max + 1)
        return cls(tuple(grid_point(s, params) for s in r),
                   tuple(weight(s, params) for s in r),
                   tuple(norm(n, params) for n in r))

    @property
    def weight_signs(self) -> tuple[int, ...]:
        return tuple(int(np.sign(w)) for w in self.weights)


def gram_matrix(params: DualHahnParams) -> np.ndarray:
    """G[n, m] = sum_s w_s P_n(x_s) P_m(x_s)."""
    data = OrthogonalityData.from_params(params)
    values = eval_all(data.grid, params)
    return (values * np.asarray(data.weights)) @ values.T


def orthogonality_defect(params: DualHahnParams) -> float:
    """Largest scaled deviation of the Gram matrix from diag(norms).

    Entry (n, m) is scaled by max(1, sqrt|nu_n nu_m|); on the diagonal this is
    the relative error of the norm.
    """
    data = OrthogonalityData.from_params(params)
    nu = np.asarray(data.norms)
    gram = gram_matrix(params)
    scale = np.maximum(1.0, np.sqrt(np.abs(np.outer(nu, nu))))
    return float(np.max(np.abs(gram - np.diag(nu)) / scale))
