"""
Truncated matrix models of osp(1|2) discrete-series modules and of their
coproduct tensor products.

One-dimensional operators live on the number basis n = 0..n_max. Products are
only trusted on indices whose distance to the truncation edge exceeds the
accumulated band; :meth:`TruncatedOperator.interior` returns that window.

Two-dimensional operators are assembled per fixed total degree N. Every
summand used here preserves n1 + n2, so building the one-dimensional factors a
few levels above N and restricting the Kronecker product to the states
(m, N - m) gives those blocks without truncation error.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParameters, InvalidTruncation
from .orthopoly import mu_number

DEFAULT_N_MAX = 24
DEFAULT_LEVEL_MAX = 20


@dataclass(frozen=True)
class RepLabel:
    mu: float
    epsilon: int = 1

    def __post_init__(self):
        if not self.mu >= 0:
            raise InvalidParameters(f"mu must be >= 0, got {self.mu}")
        if self.epsilon not in (1, -1):
            raise InvalidParameters(f"epsilon must be +1 or -1, got {self.epsilon}")

    @classmethod
    def from_k(cls, k: int) -> "RepLabel":
        """Label carried by the oscillator with integer parameter k."""
        return cls(float(k), (-1) ** int(k))


@dataclass(frozen=True, eq=False)
class TruncatedOperator:
    """A matrix together with the degree of each basis state and a band.

    ``band`` bounds how far (in degree) truncation can have corrupted entries;
    it adds under products and takes the max under sums.
    """

    matrix: np.ndarray
    band: int = 0
    levels: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        m = np.array(self.matrix)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("operator matrix must be square")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        lv = np.arange(m.shape[0]) if self.levels is None else np.asarray(self.levels)
        if lv.shape != (m.shape[0],):
            raise ValueError("levels must give one degree per basis state")
        object.__setattr__(self, "levels", lv)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def _like(self, matrix, band) -> "TruncatedOperator":
        return TruncatedOperator(matrix, band, self.levels)

    def __matmul__(self, other: "TruncatedOperator") -> "TruncatedOperator":
        return self._like(self.matrix @ other.matrix, self.band + other.band)

    def __add__(self, other):
        if isinstance(other, TruncatedOperator):
            return self._like(self.matrix + other.matrix, max(self.band, other.band))
        return self._like(self.matrix + other * np.eye(self.dim), self.band)

    def __sub__(self, other):
        return self + (-1) * other

    def __rsub__(self, other):
        return (-1) * self + other

    __radd__ = __add__

    def __mul__(self, c) -> "TruncatedOperator":
        return self._like(c * self.matrix, self.band)

    __rmul__ = __mul__

    def __neg__(self):
        return (-1) * self

    def __truediv__(self, c) -> "TruncatedOperator":
        return self._like(self.matrix / c, self.band)

    def window(self) -> np.ndarray:
        """Boolean mask of the basis states where this operator is trusted."""
        return self.levels <= self.levels.max() - self.band

    def interior(self) -> np.ndarray:
        w = self.window()
        return self.matrix[np.ix_(w, w)]


def commutator(a: TruncatedOperator, b: TruncatedOperator) -> TruncatedOperator:
    return a @ b - b @ a


def anticommutator(a: TruncatedOperator, b: TruncatedOperator) -> TruncatedOperator:
    return a @ b + b @ a


@dataclass(frozen=True)
class Generators:
    a0: TruncatedOperator
    aplus: TruncatedOperator
    aminus: TruncatedOperator
    parity: TruncatedOperator

    @property
    def identity(self) -> TruncatedOperator:
        return TruncatedOperator(np.eye(self.a0.dim))


def _raising(mu: float, dim: int) -> np.ndarray:
    ap = np.zeros((dim, dim))
    n = np.arange(1, dim)
    ap[n, n - 1] = np.sqrt([mu_number(int(i), mu) for i in n])
    return ap


def build_generators(label: RepLabel, n_max: int = DEFAULT_N_MAX) -> Generators:
    if n_max < 2:
        raise InvalidTruncation(f"n_max must be at least 2, got {n_max}")
    dim = n_max + 1
    n = np.arange(dim)
    ap = _raising(label.mu, dim)
    return Generators(
        a0=TruncatedOperator(np.diag(n + label.mu + 0.5)),
        aplus=TruncatedOperator(ap, 1),
        aminus=TruncatedOperator(ap.T.copy(), 1),
        parity=TruncatedOperator(np.diag(label.epsilon * (-1.0) ** n)),
    )


def scasimir(label: RepLabel, n_max: int = DEFAULT_N_MAX) -> TruncatedOperator:
    g = build_generators(label, n_max)
    return g.aplus @ g.aminus - g.a0 + 0.5


def casimir(label: RepLabel, n_max: int = DEFAULT_N_MAX) -> TruncatedOperator:
    g = build_generators(label, n_max)
    return scasimir(label, n_max) @ g.parity


@dataclass(frozen=True)
class TensorBasis:
    labels: tuple[RepLabel, RepLabel]
    level_max: int

    @property
    def states(self) -> list[tuple[int, int]]:
        return [(n1, N - n1) for N in range(self.level_max + 1) for n1 in range(N + 1)]

    @property
    def levels(self) -> np.ndarray:
        return np.array([N for N in range(self.level_max + 1) for _ in range(N + 1)])

    def block_slice(self, N: int) -> slice:
        start = N * (N + 1) // 2
        return slice(start, start + N + 1)

    def index(self, n1: int, n2: int) -> int:
        N = n1 + n2
        if N > self.level_max or min(n1, n2) < 0:
            raise IndexError(f"state ({n1}, {n2}) not in basis")
        return N * (N + 1) // 2 + n1

    def __len__(self) -> int:
        return (self.level_max + 1) * (self.level_max + 2) // 2


def _kron_restrict(x1: np.ndarray, x2: np.ndarray, basis: TensorBasis, dim: int) -> np.ndarray:
    idx = [n1 * dim + n2 for n1, n2 in basis.states]
    return np.kron(x1, x2)[np.ix_(idx, idx)]


def coproduct_generators(labels: tuple[RepLabel, RepLabel],
                         level_max: int = DEFAULT_LEVEL_MAX) -> dict[str, TruncatedOperator]:
    """Coproduct images of A0, A+, A-, P on the tensor basis."""
    if level_max < 2:
        raise InvalidTruncation(f"level_max must be at least 2, got {level_max}")
    basis = TensorBasis(labels, level_max)
    dim = level_max + 1
    g1 = build_generators(labels[0], level_max)
    g2 = build_generators(labels[1], level_max)
    eye = np.eye(dim)

    def op(x1, x2, band=0):
        return TruncatedOperator(_kron_restrict(x1, x2, basis, dim), band, basis.levels)

    return {
        "da0": op(g1.a0.matrix, eye) + op(eye, g2.a0.matrix),
        "daplus": op(g1.aplus.matrix, g2.parity.matrix, 1) + op(eye, g2.aplus.matrix, 1),
        "daminus": op(g1.aminus.matrix, g2.parity.matrix, 1) + op(eye, g2.aminus.matrix, 1),
        "dparity": op(g1.parity.matrix, g2.parity.matrix),
    }


def _one_dim(label: RepLabel, dim: int):
    n = np.arange(dim)
    ap = _raising(label.mu, dim)
    return np.diag(n + label.mu + 0.5), ap, ap.T.copy(), np.diag(label.epsilon * (-1.0) ** n)


def block_operators(labels: tuple[RepLabel, RepLabel], N: int) -> dict[str, np.ndarray]:
    """Exact (N+1)x(N+1) blocks on the states (m, N-m), m = 0..N.

    Keys: H (total A0), A0_1, A0_2, P1, P2, Q1, Q2 (Casimir values as
    multiples of the identity), S1, S2, Q12, Sigma12, Sigma34, K1, K2, K3, I.
    """
    if N < 0:
        raise InvalidTruncation(f"level must be nonnegative, got {N}")
    l1, l2 = labels
    dim = N + 2
    a01, ap1, am1, p1 = _one_dim(l1, dim)
    a02, ap2, am2, p2 = _one_dim(l2, dim)
    eye = np.eye(dim)
    sig3 = np.diag((-1.0) ** np.arange(dim))
    ms = np.arange(N + 1)
    ns = N - ms

    def rk(a, b):
        # kron(a, b) restricted to the states (m, N-m)
        return a[np.ix_(ms, ms)] * b[np.ix_(ns, ns)]

    q1 = -l1.epsilon * l1.mu
    q2 = -l2.epsilon * l2.mu
    q12 = (rk(am1 @ p1, ap2) - rk(ap1 @ p1, am2)
           + q1 * rk(eye, p2) + q2 * rk(p1, eye) - 0.5 * rk(p1, p2))
    out = {
        "A0_1": rk(a01, eye), "A0_2": rk(eye, a02),
        "P1": rk(p1, eye), "P2": rk(eye, p2),
        "Sigma12": -rk(sig3, eye), "Sigma34": -rk(eye, sig3),
        "Q12": q12, "I": np.eye(N + 1),
    }
    out["H"] = out["A0_1"] + out["A0_2"]
    out["Q1"] = q1 * out["I"]
    out["Q2"] = q2 * out["I"]
    out["S1"] = q1 * out["P1"]
    out["S2"] = q2 * out["P2"]
    out["K1"] = (out["A0_1"] - out["A0_2"]) / 2
    out["K2"] = l1.epsilon * l2.epsilon * q12 @ out["Sigma12"] @ out["Sigma34"]
    out["K3"] = out["K1"] @ out["K2"] - out["K2"] @ out["K1"]
    return out


def _assemble(labels, level_max: int, key: str) -> TruncatedOperator:
    basis = TensorBasis(labels, level_max)
    mat = np.zeros((len(basis), len(basis)))
    for N in range(level_max + 1):
        s = basis.block_slice(N)
        mat[s, s] = block_operators(labels, N)[key]
    return TruncatedOperator(mat, 0, basis.levels)


def q12(labels: tuple[RepLabel, RepLabel], level_max: int = DEFAULT_LEVEL_MAX) -> TruncatedOperator:
    """Coproduct image of the Casimir Q, exact on every block."""
    if level_max < 2:
        raise InvalidTruncation(f"level_max must be at least 2, got {level_max}")
    return _assemble(labels, level_max, "Q12")


def symmetry_generators(labels: tuple[RepLabel, RepLabel],
                        level_max: int = DEFAULT_LEVEL_MAX) -> dict[str, TruncatedOperator]:
    if level_max < 3:
        raise InvalidTruncation(f"level_max must be at least 3, got {level_max}")
    return {k: _assemble(labels, level_max, k) for k in ("K1", "K2", "K3", "Sigma12", "Sigma34")}


@dataclass(frozen=True)
class CGBranch:
    j: int
    mu12: float
    epsilon12: int


def cg_decompose(labels: tuple[RepLabel, RepLabel], j_max: int) -> list[CGBranch]:
    if j_max < 0:
        raise InvalidParameters(f"j_max must be >= 0, got {j_max}")
    l1, l2 = labels
    return [CGBranch(j, l1.mu + l2.mu + j + 0.5, (-1) ** j * l1.epsilon * l2.epsilon)
            for j in range(j_max + 1)]


def q_spectrum(labels: tuple[RepLabel, RepLabel], N: int) -> np.ndarray:
    """Predicted eigenvalues of the N-th block of Q12, indexed by z."""
    l1, l2 = labels
    e12 = l1.epsilon * l2.epsilon
    z = np.arange(N + 1)
    return e12 * (-1.0) ** (z + 1) * (z + l1.mu + l2.mu + 0.5)


def su11_embedding(label: RepLabel, n_max: int = DEFAULT_N_MAX) -> dict[str, TruncatedOperator]:
    if n_max < 4:
        raise InvalidTruncation(f"n_max must be at least 4, got {n_max}")
    g = build_generators(label, n_max)
    jp = (g.aplus @ g.aplus) / 2
    jm = (g.aminus @ g.aminus) / 2
    j0 = g.a0 / 2
    return {"J0": j0, "Jplus": jp, "Jminus": jm, "C": j0 @ j0 - jp @ jm - j0}


def su11_coupled_block(labels: tuple[RepLabel, RepLabel], N: int) -> dict[str, np.ndarray]:
    """Exact blocks of the coupled su(1,1) model on the states (m, N-m).

    Here KK1 = J0^(1) - J0^(2), KK2 = C^(12) and KK3 = [KK1, KK2]; C1, C2 are
    the single-factor Casimirs and J0 the total J0^(12).
    """
    l1, l2 = labels
    dim = N + 3
    a01, ap1, am1, _ = _one_dim(l1, dim)
    a02, ap2, am2, _ = _one_dim(l2, dim)
    ms = np.arange(N + 1)
    ns = N - ms

    def rk(a, b):
        # kron(a, b) restricted to the states (m, N-m)
        return a[np.ix_(ms, ms)] * b[np.ix_(ns, ns)]

    def cas(a0, ap, am):
        return a0 @ a0 / 4 - ap @ ap @ am @ am / 4 - a0 / 2

    e1, e2 = np.eye(dim), np.eye(dim)
    j01, j02 = rk(a01, e2) / 2, rk(e1, a02) / 2
    j0 = j01 + j02
    # J0^2 is diagonal in the product basis, so its restriction is the square of the restriction
    jpjm = (rk(ap1 @ ap1 @ am1 @ am1, e2) + rk(ap1 @ ap1, am2 @ am2) + rk(am1 @ am1, ap2 @ ap2)
            + rk(e1, ap2 @ ap2 @ am2 @ am2)) / 4
    kk1 = j01 - j02
    kk2 = j0 @ j0 - jpjm - j0
    return {
        "KK1": kk1, "KK2": kk2, "KK3": kk1 @ kk2 - kk2 @ kk1,
        "J0": j0, "C1": rk(cas(a01, ap1, am1), e2),
        "C2": rk(e1, cas(a02, ap2, am2)), "I": np.eye(N + 1),
    }


def sl21_generators(k: float, epsilon: int = 1, n_max: int = DEFAULT_N_MAX) -> dict[str, TruncatedOperator]:
    """Complex generators of sl(2|1) on the number basis of the module (k, epsilon)."""
    if n_max < 4:
        raise InvalidTruncation(f"n_max must be at least 4, got {n_max}")
    g = build_generators(RepLabel(k, epsilon), n_max)
    sig3 = np.diag((-1.0) ** np.arange(n_max + 1))
    y = TruncatedOperator(sig3 / 2j)
    atp = commutator(g.aplus, y)
    atm = commutator(g.aminus, y)
    r = 2 * np.sqrt(2)
    fp = (atp - 1j * g.aplus) / r
    fm = -1j * (atm - 1j * g.aminus) / r
    fbp = 1j * (atp + 1j * g.aplus) / r
    fbm = -1 * (atm + 1j * g.aminus) / r
    return {
        "Hbar": g.a0 / 2,
        "Z": TruncatedOperator(-(k * np.eye(n_max + 1) + sig3 / 2) / 2),
        "Fp": fp, "Fm": fm, "Fbp": fbp, "Fbm": fbm,
        "Ep": anticommutator(fp, fbp), "Em": anticommutator(fm, fbm),
        "Y": y, "Atp": atp, "Atm": atm,
    }
