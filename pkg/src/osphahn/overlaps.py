"""
Overlaps <q_z | m, N-m> between the Cartesian eigenbasis and the eigenbasis of
the total Casimir at fixed energy level N.

Three routes are provided: the dual -1 Hahn closed form, eigenvectors of the
exact Q12 block, and Gauss-Legendre quadrature of the sampled spinors.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_legendre

from . import dualhahn as dh
from .errors import DegenerateBlock, IndexOutOfRange, QuadratureNotConverged
from .orthopoly import mu_number
from .osprep import RepLabel, block_operators, q_spectrum
from .spinor import CartesianState, q_eigenvector, sample_spinor

QUAD_NODES = 160
QUAD_TOL = 1e-9


@dataclass(frozen=True)
class OverlapMatrix:
    level: int
    k1: int
    k2: int
    entries: np.ndarray

    def __post_init__(self):
        e = np.array(self.entries, dtype=float)
        if e.shape != (self.level + 1, self.level + 1):
            raise ValueError(f"entries must be {(self.level + 1,) * 2}, got {e.shape}")
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)

    def unitarity_defect(self) -> float:
        m = self.entries
        eye = np.eye(self.level + 1)
        return float(max(np.abs(m.T @ m - eye).max(), np.abs(m @ m.T - eye).max()))

    def aligned(self) -> "OverlapMatrix":
        return OverlapMatrix(self.level, self.k1, self.k2, align_rows(self.entries))


def _check(z: int, m: int, N: int):
    if not (0 <= z <= N and 0 <= m <= N):
        raise IndexOutOfRange(f"(z, m) = ({z}, {m}) outside [0, {N}]")


def grid_label(z: int, N: int, k1: int, k2: int) -> float:
    return float((-1) ** (N + z + 1) * (2 * z + 2 * k1 + 2 * k2 + 1))


def _m_phase(m: int, N: int, k2: int) -> int:
    return (-1) ** (k2 * m) * (-1) ** ((m * (m + 2 * N + 1) // 2) % 2)


def overlap_closed_form(z: int, m: int, N: int, k1: int, k2: int) -> float:
    _check(z, m, N)
    p = dh.DualHahnParams(k1, k2, N)
    widx = z if N % 2 else N - z
    val = dh.eval_recurrence(m, grid_label(z, N, k1, k2), p)
    return _m_phase(m, N, k2) * val * math.sqrt(dh.weight(widx, p) / dh.norm(m, p))


def overlap_matrix(N: int, k1: int, k2: int) -> OverlapMatrix:
    """Closed-form overlaps; rows indexed by z, columns by m."""
    p = dh.DualHahnParams(k1, k2, N)
    data = dh.OrthogonalityData.from_params(p)
    xs = [grid_label(z, N, k1, k2) for z in range(N + 1)]
    vals = dh.eval_all(xs, p)
    w = np.array([data.weights[z if N % 2 else N - z] for z in range(N + 1)])
    phase = np.array([_m_phase(m, N, k2) for m in range(N + 1)])
    ent = vals.T * phase * np.sqrt(w[:, None] / np.asarray(data.norms)[None, :])
    return OverlapMatrix(N, k1, k2, ent)


def align_rows(mat: np.ndarray, rtol: float = 1e-8) -> np.ndarray:
    """Flip row signs so each row's largest-magnitude entry is positive.

    Ties within ``rtol`` of the row maximum go to the first such index.
    """
    out = np.array(mat, dtype=float)
    for row in out:
        a = np.abs(row)
        j = int(np.argmax(a >= a.max() * (1 - rtol)))
        if row[j] < 0:
            row *= -1
    return out


def q12_eigenvectors(N: int, k1: int, k2: int) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and eigenvector rows of the level-N block, ordered by z."""
    labels = (RepLabel.from_k(k1), RepLabel.from_k(k2))
    ev, vec = np.linalg.eigh(block_operators(labels, N)["Q12"])
    gaps = np.diff(np.sort(ev))
    if gaps.size and gaps.min() < 1e-8:
        raise DegenerateBlock(f"eigenvalues collide at N={N}: min gap {gaps.min():.3e}")
    predicted = q_spectrum(labels, N)
    order = [int(np.argmin(np.abs(ev - q))) for q in predicted]
    return ev[order], vec[:, order].T


def q12_diagonalization_check(N: int, k1: int, k2: int) -> float:
    """Largest mismatch of eigenvalues and sign-aligned eigenvectors against the closed form."""
    labels = (RepLabel.from_k(k1), RepLabel.from_k(k2))
    ev, rows = q12_eigenvectors(N, k1, k2)
    closed = overlap_matrix(N, k1, k2).entries
    spec_err = np.abs(ev - q_spectrum(labels, N)).max()
    vec = np.abs(align_rows(rows) - align_rows(closed)).max()
    return float(max(spec_err, vec))


def recurrence_check(N: int, k1: int, k2: int) -> float:
    """Max defect of the monic three-term relation at every grid label x_z.

    Values come from the hypergeometric closed forms so the relation is tested
    against an evaluation that does not use it.
    """
    if N < 1:
        raise IndexOutOfRange("recurrence check needs N >= 1")
    p = dh.DualHahnParams(k1, k2, N)
    e12 = (-1) ** (k1 + k2)
    worst = 0.0
    for z in range(N + 1):
        q = e12 * (-1) ** (z + 1) * (z + k1 + k2 + 0.5)
        x = (-1) ** N * 2 * e12 * q
        vals = np.array([dh.eval_hypergeometric(m, x, p) for m in range(N + 1)])
        scale = max(1.0, np.abs(vals).max())
        for m in range(N):
            lhs = x * vals[m]
            rhs = (vals[m + 1] + (2 * (-1) ** (m + 1) * (k1 + (-1) ** N * k2) - 1) * vals[m]
                   + (4 * mu_number(m, k1) * mu_number(N - m + 1, k2) * vals[m - 1] if m else 0.0))
            worst = max(worst, abs(lhs - rhs) / scale)
    return float(worst)


def _quadrature_grid(N: int, k1: int, k2: int, nodes: int):
    energy = N + k1 + k2 + 1
    length = math.sqrt(2 * energy) + 8
    t, w = roots_legendre(nodes)
    x = (t + 1) * length / 2
    w = w * length / 2
    X, Y = np.meshgrid(x, x, indexing="ij")
    return np.stack([X, Y], axis=-1), np.outer(w, w)


def _quadrature_matrix(N: int, k1: int, k2: int, nodes: int) -> np.ndarray:
    pts, W = _quadrature_grid(N, k1, k2, nodes)
    qs = [sample_spinor(q_eigenvector(z, N, k1, k2), pts) for z in range(N + 1)]
    cs = [sample_spinor(CartesianState(m, N - m, k1, k2), pts) for m in range(N + 1)]
    out = np.zeros((N + 1, N + 1))
    for z, q in enumerate(qs):
        for m, c in enumerate(cs):
            out[z, m] = np.einsum("ij,ijs,ijs->", W, q, c)
    return out


def overlap_quadrature_matrix(N: int, k1: int, k2: int, nodes: int = QUAD_NODES,
                              tol: float = QUAD_TOL) -> OverlapMatrix:
    coarse = _quadrature_matrix(N, k1, k2, nodes)
    fine = _quadrature_matrix(N, k1, k2, 2 * nodes)
    diff = float(np.abs(fine - coarse).max())
    if diff > tol:
        raise QuadratureNotConverged(f"N={N}: resolutions {nodes} and {2 * nodes} differ by {diff:.3e}")
    return OverlapMatrix(N, k1, k2, fine)


def overlap_quadrature(z: int, m: int, N: int, k1: int, k2: int, nodes: int = QUAD_NODES,
                       tol: float = QUAD_TOL) -> float:
    _check(z, m, N)
    q = q_eigenvector(z, N, k1, k2)
    c = CartesianState(m, N - m, k1, k2)
    if c.slot not in q.slots:
        return 0.0
    vals = []
    for n in (nodes, 2 * nodes):
        pts, W = _quadrature_grid(N, k1, k2, n)
        vals.append(float(np.einsum("ij,ijs,ijs->", W, sample_spinor(q, pts), sample_spinor(c, pts))))
    if abs(vals[1] - vals[0]) > tol:
        raise QuadratureNotConverged(f"(z, m, N) = ({z}, {m}, {N}): estimates differ by {abs(vals[1] - vals[0]):.3e}")
    return vals[1]


def quadrature_inner(a, b, level: int, k1: int, k2: int, nodes: int = QUAD_NODES) -> float:
    """Quadrant inner product of two sampled states (may be at different levels)."""
    pts, W = _quadrature_grid(level, k1, k2, nodes)
    return float(np.einsum("ij,ijs,ijs->", W, sample_spinor(a, pts), sample_spinor(b, pts)))
