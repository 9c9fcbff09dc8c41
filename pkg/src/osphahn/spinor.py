"""
Eigenfunctions of the two-dimensional spinorial oscillator.

Spinors have four components. Which component a separated state occupies is
fixed by the sigma_3 eigenvalues (s1, s2) of the two factors, through
``SLOT_TABLE``; Cartesian states use s_i = (-1)^{m_i}.

All two-dimensional states are normalized on the open first quadrant.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .errors import DomainError, InvalidQuantumNumbers
from .orthopoly import gen_hermite, gen_hermite_derivative, jacobi, jacobi_derivative, laguerre, mu_number

# (s1, s2) -> spinor component
SLOT_TABLE = {(1, 1): 0, (1, -1): 1, (-1, 1): 2, (-1, -1): 3}


def slot_for_signs(s1: int, s2: int) -> int:
    return SLOT_TABLE[(s1, s2)]


def _is_half_odd(x: float) -> bool:
    return abs(2 * x - round(2 * x)) < 1e-12 and round(2 * x) % 2 == 1


def _check_k(*ks):
    for k in ks:
        if int(k) != k or k < 0:
            raise InvalidQuantumNumbers(f"k must be a nonnegative integer, got {k}")


@dataclass(frozen=True)
class CartesianState:
    m1: int
    m2: int
    k1: int
    k2: int

    def __post_init__(self):
        if min(self.m1, self.m2) < 0:
            raise InvalidQuantumNumbers(f"m1, m2 must be >= 0, got {self.m1}, {self.m2}")
        _check_k(self.k1, self.k2)

    @property
    def signs(self) -> tuple[int, int]:
        return (-1) ** self.m1, (-1) ** self.m2

    @property
    def slot(self) -> int:
        return slot_for_signs(*self.signs)

    @property
    def level(self) -> int:
        return self.m1 + self.m2

    @property
    def energy(self) -> float:
        return energy_cartesian(self)


@dataclass(frozen=True)
class PolarState:
    ell: float
    n_r: int
    s1: int
    s2: int
    k1: int
    k2: int

    def __post_init__(self):
        _check_k(self.k1, self.k2)
        if self.s1 not in (1, -1) or self.s2 not in (1, -1):
            raise InvalidQuantumNumbers("s1, s2 must be +1 or -1")
        if self.n_r < 0 or int(self.n_r) != self.n_r:
            raise InvalidQuantumNumbers(f"radial index must be a nonnegative integer, got {self.n_r}")
        if self.s1 * self.s2 == 1:
            ok = self.ell >= 0 and float(self.ell).is_integer()
        else:
            ok = self.ell > 0 and _is_half_odd(self.ell)
        if not ok:
            raise InvalidQuantumNumbers(
                f"ell={self.ell} incompatible with s1*s2={self.s1 * self.s2}")

    @property
    def slot(self) -> int:
        return slot_for_signs(self.s1, self.s2)

    @property
    def degree(self) -> int:
        """Degree of the Jacobi polynomial; -1 means the state vanishes."""
        return int(round(self.ell - (2 - self.s1 - self.s2) / 4))

    @property
    def abs_m(self) -> float:
        return 2 * self.ell + self.k1 + self.k2

    @property
    def energy(self) -> float:
        return 2 * (self.n_r + self.ell) + self.k1 + self.k2 + 1


@dataclass(frozen=True)
class QEigenvector:
    """Eigenvector of the total Casimir inside the level-N eigenspace.

    ``c_minus`` multiplies ``states[0]`` and ``c_plus`` multiplies
    ``states[1]``; when the second Phi factor vanishes identically
    ``states`` has a single entry and ``c_plus`` is 0.
    """

    z: int
    level: int
    k1: int
    k2: int
    delta: int
    c_minus: float
    c_plus: float
    states: tuple[PolarState, ...]

    @property
    def eigenvalue(self) -> float:
        e12 = (-1) ** (self.k1 + self.k2)
        return e12 * (-1) ** (self.z + 1) * (self.z + self.k1 + self.k2 + 0.5)

    @property
    def slots(self) -> tuple[int, ...]:
        return tuple(s.slot for s in self.states)

    @property
    def energy(self) -> float:
        return self.level + self.k1 + self.k2 + 1


def psi_1d(m: int, k: int, rho):
    """Normalized component e^{-rho^2/2} rho^k H_m^k(rho) on the full line."""
    r = np.asarray(rho, dtype=float)
    out = np.exp(-r * r / 2) * r ** k * gen_hermite(m, k, r)
    return float(out) if np.ndim(rho) == 0 else out


def psi_1d_derivative(m: int, k: int, rho):
    r = np.asarray(rho, dtype=float)
    h = gen_hermite(m, k, r)
    dh = gen_hermite_derivative(m, k, r)
    lead = k * r ** (k - 1) if k > 0 else 0.0
    out = np.exp(-r * r / 2) * ((lead - r ** (k + 1)) * h + r ** k * dh)
    return float(out) if np.ndim(rho) == 0 else out


def aplus_1d(m: int, k: int, rho):
    """Nonzero component of A_+ applied to |m, k>, from the analytic derivative.

    The result sits in the component opposite to that of |m, k>.
    """
    r = np.asarray(rho, dtype=float)
    s = 1 if m % 2 == 0 else -1
    out = (r * psi_1d(m, k, r) - psi_1d_derivative(m, k, r) + s * k / r * psi_1d(m, k, r)) / math.sqrt(2)
    return float(out) if np.ndim(rho) == 0 else out


def energy_1d(m: int, k: int) -> float:
    return m + k + 0.5


def energy_cartesian(state: CartesianState) -> float:
    return float(state.m1 + state.m2 + state.k1 + state.k2 + 1)


def _phi_log_norm(state: PolarState) -> float:
    ell, k1, k2, s1, s2 = state.ell, state.k1, state.k2, state.s1, state.s2
    c = ell + k1 + k2 + (2 - s1 - s2) / 4
    am = state.abs_m
    if am == 0:
        # (2l+K) Gamma(c) -> Gamma(c + 1) as both vanish
        head = float(gammaln(c + 1))
    else:
        head = math.log(am) + float(gammaln(c))
    return 0.5 * (math.log(2) + head + math.lgamma(state.degree + 1)
                  - float(gammaln(ell + k1 + (2 - s1 + s2) / 4))
                  - float(gammaln(ell + k2 + (2 + s1 - s2) / 4)))


def _phi_parts(state: PolarState):
    a = state.k1 + (1 - state.s1) / 2
    b = state.k2 + (1 - state.s2) / 2
    alpha = state.k1 - state.s1 / 2
    beta = state.k2 - state.s2 / 2
    return a, b, alpha, beta


def _check_phi(phi):
    p = np.asarray(phi, dtype=float)
    if np.any((p <= 0) | (p >= np.pi / 2)):
        raise DomainError("phi must lie strictly inside (0, pi/2)")
    return p


def phi_angular(state: PolarState, phi):
    p = _check_phi(phi)
    d = state.degree
    if d < 0:
        out = np.zeros_like(p)
    else:
        a, b, alpha, beta = _phi_parts(state)
        out = (math.exp(_phi_log_norm(state)) * np.cos(p) ** a * np.sin(p) ** b
               * jacobi(d, alpha, beta, -np.cos(2 * p)))
    return float(out) if np.ndim(phi) == 0 else out


def phi_angular_derivative(state: PolarState, phi):
    p = _check_phi(phi)
    d = state.degree
    if d < 0:
        out = np.zeros_like(p)
    else:
        a, b, alpha, beta = _phi_parts(state)
        x = -np.cos(2 * p)
        env = np.cos(p) ** a * np.sin(p) ** b
        jac = jacobi(d, alpha, beta, x)
        djac = jacobi_derivative(d, alpha, beta, x) * 2 * np.sin(2 * p)
        out = math.exp(_phi_log_norm(state)) * env * ((b / np.tan(p) - a * np.tan(p)) * jac + djac)
    return float(out) if np.ndim(phi) == 0 else out


def radial(n_r: int, abs_m: float, r):
    rr = np.asarray(r, dtype=float)
    lognorm = 0.5 * (math.log(2) + math.lgamma(n_r + 1) - float(gammaln(n_r + abs_m + 1)))
    out = math.exp(lognorm) * rr ** abs_m * np.exp(-rr * rr / 2) * laguerre(n_r, abs_m, rr * rr)
    return float(out) if np.ndim(r) == 0 else out


def polar_states_at_level(N: int, k1: int, k2: int) -> list[PolarState]:
    """Nonvanishing polar states of energy N + k1 + k2 + 1."""
    out = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            two_ell = N - 2 * np.arange(N // 2 + 1)
            for t in two_ell:
                ell = t / 2
                if (t % 2 == 0) != (s1 * s2 == 1):
                    continue
                st = PolarState(float(ell), int((N - t) // 2), s1, s2, k1, k2)
                if st.degree >= 0:
                    out.append(st)
    return out


def q_eigenvector(z: int, N: int, k1: int, k2: int) -> QEigenvector:
    """Eigenvector |q_z> at level N with eigenvalue e12 (-1)^{z+1} (z + k1 + k2 + 1/2)."""
    _check_k(k1, k2)
    if not 0 <= z <= N:
        raise InvalidQuantumNumbers(f"z={z} outside [0, {N}]")
    e1 = (-1) ** k1
    e12 = (-1) ** (k1 + k2)
    K = k1 + k2
    if N % 2 == 0:
        ell = (z + 1) // 2
        sig = -e12 if z % 2 == 0 else e12
        minus = PolarState(float(ell), N // 2 - ell, 1, 1, k1, k2)
        if ell == 0:
            return QEigenvector(z, N, k1, k2, 1, 1.0, 0.0, (minus,))
        plus = PolarState(float(ell), N // 2 - ell, -1, -1, k1, k2)
        a = math.sqrt((ell + (1 - e12) / 2 * K) / (2 * ell + K))
        b = math.sqrt((ell + (1 + e12) / 2 * K) / (2 * ell + K))
        cm, cp = (a, -e1 * b) if sig == 1 else (b, e1 * a)
        return QEigenvector(z, N, k1, k2, 1, cm, cp, (minus, plus))
    if z % 2 == 0:
        ell, sig = (z + 1) / 2, -e12
    else:
        ell, sig = z / 2, e12
    n_r = int(round(N / 2 - ell))
    minus = PolarState(ell, n_r, -1, 1, k1, k2)
    plus = PolarState(ell, n_r, 1, -1, k1, k2)
    a = math.sqrt((ell + (1 - e12) / 2 * k1 + (1 + e12) / 2 * k2) / (2 * ell + K))
    b = math.sqrt((ell + (1 + e12) / 2 * k1 + (1 - e12) / 2 * k2) / (2 * ell + K))
    cm, cp = (a, -e1 * b) if sig == 1 else (b, e1 * a)
    return QEigenvector(z, N, k1, k2, -1, cm, cp, (minus, plus))


def _points(points) -> tuple[np.ndarray, np.ndarray]:
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts[None, :]
    if pts.shape[-1] != 2:
        raise DomainError("points must be (rho1, rho2) pairs")
    x, y = pts[..., 0], pts[..., 1]
    if np.any((x <= 0) | (y <= 0)):
        raise DomainError("points must lie in the open first quadrant")
    return x, y


def sample_spinor(state: CartesianState | QEigenvector, points, quadrant_normalized: bool = True) -> np.ndarray:
    """Four-component values at the given (rho1, rho2) points, shape (..., 4).

    Cartesian products are doubled when ``quadrant_normalized`` so that their
    norm over the quadrant is 1; without it the quadrant norm is 1/4.
    """
    x, y = _points(points)
    out = np.zeros(x.shape + (4,))
    if isinstance(state, CartesianState):
        scale = 2.0 if quadrant_normalized else 1.0
        out[..., state.slot] = scale * psi_1d(state.m1, state.k1, x) * psi_1d(state.m2, state.k2, y)
        return out
    r = np.hypot(x, y)
    phi = np.arctan2(y, x)
    for c, st in zip((state.c_minus, state.c_plus), state.states):
        out[..., st.slot] += c * phi_angular(st, phi) * radial(st.n_r, st.abs_m, r)
    return out
