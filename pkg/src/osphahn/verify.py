"""
Verification suites. Each check returns a :class:`CheckReport` with the worst
measured defect, the tolerance it is held to and where the worst entry sits.
"""
from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

import numpy as np
from scipy.special import roots_legendre

from . import dualhahn as dh
from . import osprep as op
from .osprep import RepLabel, anticommutator as acomm, commutator as comm
from .orthopoly import mu_number
from .overlaps import (align_rows, overlap_matrix, overlap_quadrature_matrix, q12_eigenvectors,
                       quadrature_inner, recurrence_check)
from .spinor import (CartesianState, PolarState, aplus_1d, energy_1d, phi_angular, phi_angular_derivative,
                     polar_states_at_level, psi_1d, q_eigenvector, radial)


@dataclass(frozen=True)
class CheckReport:
    name: str
    params: dict
    defect: float
    tolerance: float
    runtime: float = 0.0
    location: str = ""
    info: dict = field(default_factory=dict)
    parts: tuple["CheckReport", ...] = ()

    @property
    def passed(self) -> bool:
        return bool(self.defect <= self.tolerance)

    def summary(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        where = f" at {self.location}" if self.location and not self.passed else ""
        return f"{flag} {self.name} {self.params} defect={self.defect:.3e} tol={self.tolerance:.0e}{where}"


class _Worst:
    """Running maximum of named residual matrices."""

    def __init__(self):
        self.defect = 0.0
        self.location = ""

    def add(self, name: str, residual, where: str = ""):
        r = np.abs(np.asarray(residual))
        if r.size == 0:
            return
        idx = np.unravel_index(int(np.argmax(r)), r.shape)
        if r[idx] >= self.defect:
            self.defect = float(r[idx])
            self.location = f"{name}{where} entry {tuple(int(i) for i in idx)}"


def _timed(name: str, params: dict, tol: float, body: Callable[[_Worst], dict | None]) -> CheckReport:
    t0 = time.perf_counter()
    w = _Worst()
    info = body(w) or {}
    return CheckReport(name, params, w.defect, tol, time.perf_counter() - t0, w.location, info)


def check_osp12(label: RepLabel, n_max: int = op.DEFAULT_N_MAX) -> CheckReport:
    g = op.build_generators(label, n_max)
    s = op.scasimir(label, n_max)
    q = op.casimir(label, n_max)

    def body(w: _Worst):
        w.add("{A+,A-}-2A0", (acomm(g.aplus, g.aminus) - 2 * g.a0).interior())
        w.add("[A0,A+]-A+", (comm(g.a0, g.aplus) - g.aplus).interior())
        w.add("[A0,A-]+A-", (comm(g.a0, g.aminus) + g.aminus).interior())
        w.add("[P,A0]", comm(g.parity, g.a0).interior())
        w.add("{P,A+}", acomm(g.parity, g.aplus).interior())
        w.add("{P,A-}", acomm(g.parity, g.aminus).interior())
        w.add("Q+eps*mu", (q + label.epsilon * label.mu).interior())
        w.add("{S,A+}", acomm(s, g.aplus).interior())
        w.add("{S,A-}", acomm(s, g.aminus).interior())
        w.add("[S,A0]", comm(s, g.a0).interior())

    return _timed("osp12", {"mu": label.mu, "epsilon": label.epsilon, "n_max": n_max}, 1e-12, body)


def check_sl21(k: float, n_max: int = op.DEFAULT_N_MAX, epsilon: int = 1) -> CheckReport:
    g = op.sl21_generators(k, epsilon, n_max)
    a = op.build_generators(RepLabel(k, epsilon), n_max)
    H, Z = g["Hbar"], g["Z"]
    Fp, Fm, Fbp, Fbm, Ep, Em = g["Fp"], g["Fm"], g["Fbp"], g["Fbm"], g["Ep"], g["Em"]
    rels = {
        "{At+,At-}-2A0": acomm(g["Atp"], g["Atm"]) - 2 * a.a0,
        "[A0,At+]-At+": comm(a.a0, g["Atp"]) - g["Atp"],
        "[A0,At-]+At-": comm(a.a0, g["Atm"]) + g["Atm"],
        "{P,At+}": acomm(a.parity, g["Atp"]), "{P,At-}": acomm(a.parity, g["Atm"]),
        "[H,E+]-E+": comm(H, Ep) - Ep, "[H,E-]+E-": comm(H, Em) + Em,
        "[E+,E-]-2H": comm(Ep, Em) - 2 * H,
        "[Z,E+]": comm(Z, Ep), "[Z,E-]": comm(Z, Em), "[Z,H]": comm(Z, H),
        "{F+,Fb-}-(Z-H)": acomm(Fp, Fbm) - (Z - H), "{F-,Fb+}-(Z+H)": acomm(Fm, Fbp) - (Z + H),
        "{F+,Fb+}-E+": acomm(Fp, Fbp) - Ep, "{F-,Fb-}-E-": acomm(Fm, Fbm) - Em,
        "{F+,F+}": acomm(Fp, Fp), "{F-,F-}": acomm(Fm, Fm),
        "{Fb+,Fb+}": acomm(Fbp, Fbp), "{Fb-,Fb-}": acomm(Fbm, Fbm),
        "{F+,F-}": acomm(Fp, Fm), "{Fb+,Fb-}": acomm(Fbp, Fbm),
        "[H,F+]-F+/2": comm(H, Fp) - Fp / 2, "[H,F-]+F-/2": comm(H, Fm) + Fm / 2,
        "[Z,F+]-F+/2": comm(Z, Fp) - Fp / 2, "[Z,F-]-F-/2": comm(Z, Fm) - Fm / 2,
        "[H,Fb+]-Fb+/2": comm(H, Fbp) - Fbp / 2, "[H,Fb-]+Fb-/2": comm(H, Fbm) + Fbm / 2,
        "[Z,Fb+]+Fb+/2": comm(Z, Fbp) + Fbp / 2, "[Z,Fb-]+Fb-/2": comm(Z, Fbm) + Fbm / 2,
        "[E+,F-]+F+": comm(Ep, Fm) + Fp, "[E-,F+]+F-": comm(Em, Fp) + Fm,
        "[E+,Fb-]-Fb+": comm(Ep, Fbm) - Fbp, "[E-,Fb+]-Fb-": comm(Em, Fbp) - Fbm,
        "[E+,F+]": comm(Ep, Fp), "[E-,F-]": comm(Em, Fm),
        "[E+,Fb+]": comm(Ep, Fbp), "[E-,Fb-]": comm(Em, Fbm),
    }

    def body(w: _Worst):
        for name, r in rels.items():
            w.add(name, r.interior())

    return _timed("sl21", {"k": k, "epsilon": epsilon, "n_max": n_max}, 1e-10, body)


def _labels(k1: int, k2: int) -> tuple[RepLabel, RepLabel]:
    return RepLabel.from_k(k1), RepLabel.from_k(k2)


def dualhahn_algebra_residuals(b: dict[str, np.ndarray], eps: tuple[int, int]) -> dict[str, np.ndarray]:
    """Residuals of the symmetry-algebra relations on one exact block.

    The Sigma form uses Omega = -(e1 Q1 Sigma12 + e2 Q2 Sigma34), which equals
    S1 + S2 on the block.
    """
    e1, e2 = eps
    K1, K2, K3, I, H = b["K1"], b["K2"], b["K3"], b["I"], b["H"]
    s12, s34, p1, p2 = b["Sigma12"], b["Sigma34"], b["P1"], b["P2"]
    c = lambda x, y: x @ y - y @ x  # noqa: E731
    a = lambda x, y: x @ y + y @ x  # noqa: E731
    omega = -(e1 * b["Q1"] @ s12 + e2 * b["Q2"] @ s34)
    diff = -(e1 * b["Q1"] @ s12 - e2 * b["Q2"] @ s34)
    ssum = b["S1"] + b["S2"]
    sdiff = b["S1"] - b["S2"]
    return {
        "[K1,K2]-K3": c(K1, K2) - K3,
        "sigma:[K1,K3]": c(K1, K3) - (K2 - (omega - 0.5 * I)),
        "sigma:[K2,K3]": c(K2, K3) - (2 * omega @ K3 + 4 * K1 @ (omega - I) - 2 * H @ diff),
        "sigma:{K2,S12}": a(K2, s12) - 2 * (omega - 0.5 * I) @ s12,
        "sigma:{K2,S34}": a(K2, s34) - 2 * (omega - 0.5 * I) @ s34,
        "sigma:[K1,S12]": c(K1, s12), "sigma:[K1,S34]": c(K1, s34),
        "sigma:{K3,S12}": a(K3, s12), "sigma:{K3,S34}": a(K3, s34),
        "S:[K1,K3]": c(K1, K3) - (K2 - (ssum - 0.5 * I)),
        "S:[K2,K3]": c(K2, K3) - (2 * ssum @ K3 + 4 * K1 @ (ssum - I) - 2 * H @ sdiff),
        "S:{K2,P1}": a(K2, p1) - 2 * (ssum - 0.5 * I) @ p1,
        "S:{K2,P2}": a(K2, p2) - 2 * (ssum - 0.5 * I) @ p2,
        "S:[K1,P1]": c(K1, p1), "S:[K1,P2]": c(K1, p2),
        "S:{K3,P1}": a(K3, p1), "S:{K3,P2}": a(K3, p2),
        "K2=Q12 P1 P2": K2 - b["Q12"] @ p1 @ p2,
    }


def dualhahn_algebra_printed(b: dict[str, np.ndarray], eps: tuple[int, int]) -> dict[str, np.ndarray]:
    """Residuals of the relations exactly as first typeset (informational)."""
    e1, e2 = eps
    K1, K2, K3, I, H = b["K1"], b["K2"], b["K3"], b["I"], b["H"]
    s12, s34 = b["Sigma12"], b["Sigma34"]
    x = e1 * b["Q1"] @ s12 + e2 * b["Q2"] @ s34
    y = e1 * b["Q1"] @ s12 - e2 * b["Q2"] @ s34
    ssum = b["S1"] + b["S2"]
    c = lambda u, v: u @ v - v @ u  # noqa: E731
    a = lambda u, v: u @ v + v @ u  # noqa: E731
    return {
        "[K1,K3]": c(K1, K3) - (K2 - (x - 0.5 * I)),
        "[K2,K3]": c(K2, K3) - (2 * K3 @ x - 4 * K1 @ (I - x) - 2 * H @ y),
        "{K2,S12}": a(K2, s12) - 2 * (x + 0.5 * I) @ s12,
        "S:[K2,K3]": c(K2, K3) - (2 * K3 @ ssum + 4 * K1 @ (ssum - I) - 2 * H @ (b["S1"] - b["S2"])),
        "S:{K2,P1}": a(K2, b["P1"]) - 2 * (ssum + 0.5 * I) @ b["P1"],
    }


def check_dualhahn_algebra(k1: int, k2: int, level_max: int = op.DEFAULT_LEVEL_MAX) -> CheckReport:
    labels = _labels(k1, k2)
    eps = (labels[0].epsilon, labels[1].epsilon)

    def body(w: _Worst):
        printed: dict[str, float] = {}
        for N in range(level_max + 1):
            b = op.block_operators(labels, N)
            for name, r in dualhahn_algebra_residuals(b, eps).items():
                w.add(name, r, f" N={N}")
            for name, r in dualhahn_algebra_printed(b, eps).items():
                printed[name] = max(printed.get(name, 0.0), float(np.abs(r).max()))
        return {"as_printed_defects": printed}

    return _timed("dualhahn-algebra", {"k1": k1, "k2": k2, "N_max": level_max}, 1e-10, body)


def check_q_spectrum(k1: int, k2: int, level_max: int = op.DEFAULT_LEVEL_MAX) -> CheckReport:
    labels = _labels(k1, k2)

    def body(w: _Worst):
        q = op.q12(labels, level_max)
        da0 = op.coproduct_generators(labels, level_max)["da0"]
        w.add("[Q12,dA0]", comm(q, da0).matrix)
        basis = op.TensorBasis(labels, level_max)
        min_gap = math.inf
        for N in range(level_max + 1):
            blk = q.matrix[basis.block_slice(N), basis.block_slice(N)]
            ev = np.sort(np.linalg.eigvalsh(blk))
            w.add("spectrum", ev - np.sort(op.q_spectrum(labels, N)), f" N={N}")
            if N:
                min_gap = min(min_gap, float(np.diff(ev).min()))
        return {"min_eigenvalue_gap": min_gap}

    return _timed("q-spectrum", {"k1": k1, "k2": k2, "N_max": level_max}, 1e-10, body)


def check_su11(label: RepLabel, n_max: int = op.DEFAULT_N_MAX) -> CheckReport:
    j = op.su11_embedding(label, n_max)
    s = op.scasimir(label, n_max)
    J0, Jp, Jm, C = j["J0"], j["Jplus"], j["Jminus"], j["C"]

    def body(w: _Worst):
        w.add("[J0,J+]-J+", (comm(J0, Jp) - Jp).interior())
        w.add("[J0,J-]+J-", (comm(J0, Jm) + Jm).interior())
        w.add("[J+,J-]+2J0", (comm(Jp, Jm) + 2 * J0).interior())
        w.add("C-(S^2+S-3/4)/4", (C - (s @ s + s - 0.75) / 4).interior())
        w.add("[C,J+]", comm(C, Jp).interior())

    return _timed("su11", {"mu": label.mu, "epsilon": label.epsilon, "n_max": n_max}, 1e-12, body)


def check_dual_hahn_embedding(k1: int, k2: int, level_max: int = op.DEFAULT_LEVEL_MAX) -> CheckReport:
    labels = _labels(k1, k2)

    def body(w: _Worst):
        for N in range(level_max + 1):
            b = op.su11_coupled_block(labels, N)
            k1_, k2_, k3_, j0, c1, c2 = b["KK1"], b["KK2"], b["KK3"], b["J0"], b["C1"], b["C2"]
            d1 = 4 * j0 @ (c1 - c2)
            d2 = 2 * j0 @ j0 + 4 * (c1 + c2)
            w.add("[KK1,KK2]-KK3", k1_ @ k2_ - k2_ @ k1_ - k3_, f" N={N}")
            w.add("[KK2,KK3]", k2_ @ k3_ - k3_ @ k2_ - (-2 * (k1_ @ k2_ + k2_ @ k1_) + d1), f" N={N}")
            w.add("[KK3,KK1]", k3_ @ k1_ - k1_ @ k3_ - (-2 * k1_ @ k1_ - 4 * k2_ + d2), f" N={N}")
            for name, d in (("delta1", d1), ("delta2", d2)):
                w.add(f"[{name},KK1]", d @ k1_ - k1_ @ d, f" N={N}")
                w.add(f"[{name},KK2]", d @ k2_ - k2_ @ d, f" N={N}")

    return _timed("dual-hahn-embedding", {"k1": k1, "k2": k2, "N_max": level_max}, 1e-10, body)


def _gl(a: float, b: float, n: int):
    t, w = roots_legendre(n)
    return (t + 1) * (b - a) / 2 + a, w * (b - a) / 2


def _fd2(f, x, h):
    return (f(x + h) - 2 * f(x) + f(x - h)) / (h * h)


def _fd1(f, x, h):
    return (f(x + h) - f(x - h)) / (2 * h)


FD_STEP = 1e-3
FD_CONST = 1e3
RICHARDSON_TOL = 1e-6


def _richardson(res):
    """Residual left after cancelling the h^2 term between steps h and h/2."""
    return (4 * res[1] - res[0]) / 3


def _wave_parts(k1: int, k2: int, max_level: int, m_max: int) -> list[CheckReport]:
    h = FD_STEP
    parts: list[CheckReport] = []
    rho = np.linspace(0.3, 4.0, 50)
    phis = np.linspace(0.15, np.pi / 2 - 0.15, 50)
    rs = np.linspace(0.3, 4.0, 50)
    x, wx = _gl(0.0, 14.0, 200)
    ph_nodes, ph_w = _gl(0.0, np.pi / 2, 200)
    ks = sorted({k1, k2})

    def ode_1d(w: _Worst):
        for k in ks:
            for m in range(m_max + 1):
                s = (-1) ** m
                f = lambda r, m=m, k=k: psi_1d(m, k, r)  # noqa: E731
                res = (-0.5 * _fd2(f, rho, h) + 0.5 * (rho ** 2 + k * (k - s) / rho ** 2) * f(rho)
                       - energy_1d(m, k) * f(rho))
                w.add("1d", res / h ** 2, f" m={m} k={k}")

    def norms(w: _Worst):
        for k in ks:
            for m in range(m_max + 1):
                w.add("psi norm", 2 * np.sum(wx * psi_1d(m, k, x) ** 2) - 1, f" m={m} k={k}")
        for N in range(max_level + 1):
            for st in polar_states_at_level(N, k1, k2):
                w.add("Phi norm", np.sum(ph_w * phi_angular(st, ph_nodes) ** 2) - 1, f" {st}")
                w.add("R norm", np.sum(wx * radial(st.n_r, st.abs_m, x) ** 2 * x) - 1, f" {st}")
            for z in range(N + 1):
                q = q_eigenvector(z, N, k1, k2)
                w.add("q norm", quadrature_inner(q, q, N, k1, k2) - 1, f" N={N} z={z}")
            c = CartesianState(N, 0, k1, k2)
            w.add("cartesian norm", quadrature_inner(c, c, N, k1, k2) - 1, f" N={N}")

    def ladder(w: _Worst):
        for k in ks:
            for m in range(m_max):
                val = 2 * np.sum(wx * psi_1d(m + 1, k, x) * aplus_1d(m, k, x))
                w.add("<m+1|A+|m>", val - math.sqrt(mu_number(m + 1, k)), f" m={m} k={k}")

    def angular(w: _Worst):
        fitted: dict[str, float] = {}
        for N in range(max_level + 1):
            for st in polar_states_at_level(N, k1, k2):
                b1 = k1 * (k1 - st.s1)
                b2 = k2 * (k2 - st.s2)
                f = lambda p, st=st: phi_angular(st, p)  # noqa: E731
                res = [_fd2(f, phis, hh) - b1 / np.cos(phis) ** 2 * f(phis) - b2 / np.sin(phis) ** 2 * f(phis)
                       + st.abs_m ** 2 * f(phis) for hh in (h, h / 2)]
                w.add("angular", _richardson(res), f" {st}")
                fitted["angular"] = max(fitted.get("angular", 0.0), float(np.abs(res[0]).max()) / h ** 2)
        return fitted

    def radial_ode(w: _Worst):
        fitted: dict[str, float] = {}
        for N in range(max_level + 1):
            for st in polar_states_at_level(N, k1, k2):
                f = lambda r, st=st: radial(st.n_r, st.abs_m, r)  # noqa: E731
                res = [_fd2(f, rs, hh) + _fd1(f, rs, hh) / rs
                       + (-rs ** 2 - st.abs_m ** 2 / rs ** 2 + 2 * st.energy) * f(rs) for hh in (h, h / 2)]
                w.add("radial", _richardson(res), f" {st}")
                fitted["radial"] = max(fitted.get("radial", 0.0), float(np.abs(res[0]).max()) / h ** 2)
        return fitted

    def first_order(w: _Worst):
        p = np.linspace(0.1, 1.4, 20)
        e1 = (-1) ** k1
        e12 = (-1) ** (k1 + k2)
        K = k1 + k2
        t, ct = np.tan(p), 1 / np.tan(p)
        for N in range(max_level + 1):
            for z in range(N + 1):
                q = q_eigenvector(z, N, k1, k2)
                fm = q.c_minus * phi_angular(q.states[0], p)
                dfm = q.c_minus * phi_angular_derivative(q.states[0], p)
                if len(q.states) > 1:
                    fp = q.c_plus * phi_angular(q.states[1], p)
                    dfp = q.c_plus * phi_angular_derivative(q.states[1], p)
                else:
                    fp = dfp = np.zeros_like(p)
                lam = q.eigenvalue
                if q.delta == 1:
                    r1 = e1 * (dfp - k1 * t * fp + k2 * ct * fp) - e12 * (K + 0.5) * fm - lam * fm
                    r2 = e1 * (-dfm - k1 * t * fm + k2 * ct * fm) + e12 * (K - 0.5) * fp - lam * fp
                else:
                    r1 = e1 * (dfm - k1 * t * fm - k2 * ct * fm) + e12 * (k1 - k2 + 0.5) * fp - lam * fp
                    r2 = e1 * (-dfp - k1 * t * fp - k2 * ct * fp) - e12 * (k1 - k2 - 0.5) * fm - lam * fm
                w.add("first-order", np.concatenate([r1, r2]), f" N={N} z={z}")

    def energies(w: _Worst):
        for N in range(max_level + 1):
            cart = sorted(CartesianState(m, N - m, k1, k2).energy for m in range(N + 1))
            pol = sorted(st.energy for st in polar_states_at_level(N, k1, k2))
            if len(cart) != len(pol) or len(cart) != N + 1:
                w.add("count", [abs(len(cart) - len(pol)) + abs(len(cart) - N - 1)], f" N={N}")
            else:
                w.add("energy", np.array(cart) - np.array(pol), f" N={N}")
            for m in range(N + 1):
                a = CartesianState(m, N - m, k1, k2).energy
                b = CartesianState(N - m, m, k2, k1).energy
                w.add("exchange", [a - b], f" N={N}")

    params = {"k1": k1, "k2": k2}
    for name, tol, fn in (("ode-1d C", FD_CONST, ode_1d), ("norms", 1e-8, norms), ("ladder", 1e-7, ladder),
                          ("ode-angular", RICHARDSON_TOL, angular), ("ode-radial", RICHARDSON_TOL, radial_ode),
                          ("first-order", 1e-9, first_order), ("energies", 1e-12, energies)):
        parts.append(_timed(name, params, tol, fn))
    return parts


def check_wavefunctions(k1: int, k2: int, max_level: int = 6, m_max: int = 6) -> CheckReport:
    """Norms, ODE residuals, ladder elements and first-order system for one (k1, k2).

    The 1D ODE part reports the fitted constant residual / h^2. The angular and
    radial parts report the residual after Richardson elimination of the h^2
    term, with the raw fitted constant kept in ``info``. The top-level defect
    is the worst ratio defect / tolerance over all parts, held to 1.
    """
    t0 = time.perf_counter()
    parts = tuple(_wave_parts(k1, k2, max_level, m_max))
    worst = max(parts, key=lambda p: p.defect / p.tolerance)
    return CheckReport("wavefunctions", {"k1": k1, "k2": k2, "max_level": max_level, "m_max": m_max},
                       worst.defect / worst.tolerance, 1.0, time.perf_counter() - t0,
                       f"{worst.name}: {worst.location}", {}, parts)


def check_overlaps(k1: int, k2: int, level_max: int = 12, quad_level_max: int = 6) -> CheckReport:
    """Unitarity and closed-form/eigenvector agreement up to ``level_max``; quadrature up to ``quad_level_max``."""
    t0 = time.perf_counter()
    params = {"k1": k1, "k2": k2, "N_max": level_max, "N_quad": quad_level_max}

    def closed(w: _Worst):
        for N in range(level_max + 1):
            c = overlap_matrix(N, k1, k2)
            eye = np.eye(N + 1)
            w.add("M^T M - I", c.entries.T @ c.entries - eye, f" N={N}")
            w.add("M M^T - I", c.entries @ c.entries.T - eye, f" N={N}")
            _, rows = q12_eigenvectors(N, k1, k2)
            w.add("closed vs eigvec", align_rows(rows) - align_rows(c.entries), f" N={N}")
            if N:
                w.add("recurrence", [recurrence_check(N, k1, k2)], f" N={N}")

    def quad(w: _Worst):
        for N in range(quad_level_max + 1):
            qm = overlap_quadrature_matrix(N, k1, k2)
            c = overlap_matrix(N, k1, k2).entries
            w.add("closed vs quadrature", align_rows(qm.entries) - align_rows(c), f" N={N}")
            if N < quad_level_max:
                for z in (0, N):
                    a = q_eigenvector(z, N, k1, k2)
                    for m in (0, N + 1):
                        b = CartesianState(m, N + 1 - m, k1, k2)
                        w.add("superselection", [quadrature_inner(a, b, N + 1, k1, k2)], f" N={N} z={z} m={m}")

    parts = (_timed("overlap-closed", params, 1e-9, closed), _timed("overlap-quadrature", params, 1e-6, quad))
    worst = max(parts, key=lambda p: p.defect / p.tolerance)
    return CheckReport("overlaps", params, worst.defect / worst.tolerance, 1.0, time.perf_counter() - t0,
                       f"{worst.name}: {worst.location}", {}, parts)


def check_dualhahn_orthogonality(xi: float, zeta: float, n_max: int) -> CheckReport:
    def body(w: _Worst):
        p = dh.DualHahnParams(xi, zeta, n_max)
        w.add("gram", [dh.orthogonality_defect(p)])
        data = dh.OrthogonalityData.from_params(p)
        return {"negative_weights": int(sum(s < 0 for s in data.weight_signs))}

    return _timed("dualhahn-orthogonality", {"xi": xi, "zeta": zeta, "N": n_max}, 1e-8, body)


def check_dualhahn_closed_form(xi: float, zeta: float, n_max: int, samples: int = 25) -> CheckReport:
    """Closed form against recurrence, relative to max(1, |recurrence value|)."""
    xs = np.linspace(-2 * n_max - 7.3, 2 * n_max + 7.1, samples)

    def body(w: _Worst):
        p = dh.DualHahnParams(xi, zeta, n_max)
        for n in range(n_max + 1):
            ref = dh.eval_recurrence(n, xs, p)
            hyp = np.array([dh.eval_hypergeometric(n, float(x), p) for x in xs])
            w.add("hyp vs rec", (hyp - ref) / np.maximum(1.0, np.abs(ref)), f" n={n}")

    return _timed("dualhahn-closed-form", {"xi": xi, "zeta": zeta, "N": n_max}, 1e-9, body)


DH_PARAMS = (0.1, 0.5, 1.0, 2.5)
REP_MUS = (0.0, 0.5, 1.0, 2.0)
K_VALUES = (0, 1, 2, 3)


def _suite_jobs() -> dict[str, list[Callable[[], CheckReport]]]:
    pairs = list(product(K_VALUES, K_VALUES))
    return {
        "dualhahn-orthogonality": [
            (lambda a=a, b=b, N=N: check_dualhahn_orthogonality(a, b, N))
            for a, b in product(DH_PARAMS, DH_PARAMS) for N in range(17)],
        "dualhahn-closed-form": [
            (lambda a=a, b=b, N=N: check_dualhahn_closed_form(a, b, N))
            for a, b in product(DH_PARAMS, DH_PARAMS) for N in range(13)],
        "osp12": [(lambda m=m, e=e: check_osp12(RepLabel(m, e))) for m in REP_MUS for e in (1, -1)],
        "sl21": [(lambda m=m, e=e: check_sl21(m, epsilon=e)) for m in REP_MUS for e in (1, -1)],
        "dualhahn-algebra": [(lambda a=a, b=b: check_dualhahn_algebra(a, b)) for a, b in pairs],
        "q-spectrum": [(lambda a=a, b=b: check_q_spectrum(a, b)) for a, b in pairs],
        "su11": [(lambda m=m, e=e: check_su11(RepLabel(m, e))) for m in REP_MUS for e in (1, -1)],
        "dual-hahn-embedding": [(lambda a=a, b=b: check_dual_hahn_embedding(a, b)) for a, b in pairs],
        "wavefunctions": [(lambda a=a, b=b: check_wavefunctions(a, b)) for a, b in pairs],
        "overlaps": [(lambda a=a, b=b: check_overlaps(a, b, 12, 6 if max(a, b) <= 2 else -1))
                     for a, b in pairs],
    }


CHECK_NAMES = tuple(_suite_jobs())


def run_suite(only: list[str] | None = None, workers: int = 4) -> list[CheckReport]:
    """Run the named suites (all by default) concurrently; results keep submission order."""
    jobs = _suite_jobs()
    names = list(jobs) if not only else list(only)
    unknown = [n for n in names if n not in jobs]
    if unknown:
        raise KeyError(f"unknown check(s): {', '.join(unknown)}; choose from {', '.join(jobs)}")
    flat = [fn for n in names for fn in jobs[n]]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda f: f(), flat))
