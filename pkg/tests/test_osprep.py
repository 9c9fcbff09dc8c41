import math

import numpy as np
import pytest

from osphahn import osprep as op
from osphahn.errors import InvalidParameters, InvalidTruncation
from osphahn.osprep import RepLabel, TruncatedOperator, anticommutator, commutator


def test_raising_entry():
    g = op.build_generators(RepLabel(1.0, 1), 6)
    assert g.aplus.matrix[1, 0] == pytest.approx(math.sqrt(3))
    assert g.aminus.matrix[0, 1] == pytest.approx(math.sqrt(3))


def test_lowering_annihilates_lowest_state():
    g = op.build_generators(RepLabel(0.7, -1), 6)
    e0 = np.zeros(7)
    e0[0] = 1
    assert np.all(g.aminus.matrix @ e0 == 0)


def test_a0_and_parity_diagonals():
    g = op.build_generators(RepLabel(0.5, -1), 6)
    assert g.a0.matrix[4, 4] == 5.0
    np.testing.assert_array_equal(np.diag(g.parity.matrix), -((-1.0) ** np.arange(7)))
    assert (g.a0.band, g.aplus.band, g.aminus.band, g.parity.band) == (0, 1, 1, 0)


def test_truncation_guard():
    with pytest.raises(InvalidTruncation):
        op.build_generators(RepLabel(1.0), 1)
    with pytest.raises(InvalidTruncation):
        op.su11_embedding(RepLabel(1.0), 3)


def test_label_validation():
    with pytest.raises(InvalidParameters):
        RepLabel(-0.1, 1)
    with pytest.raises(InvalidParameters):
        RepLabel(1.0, 0)
    assert RepLabel.from_k(3) == RepLabel(3.0, -1)


def test_band_arithmetic_and_window():
    g = op.build_generators(RepLabel(1.0), 10)
    prod = g.aplus @ g.aminus
    assert prod.band == 2
    assert (prod + g.a0).band == 2
    assert (3 * prod).band == 2
    assert prod.interior().shape == (9, 9)
    band_mask = np.abs(np.subtract.outer(np.arange(11), np.arange(11))) > prod.band
    assert np.all(prod.matrix[band_mask] == 0)
    with pytest.raises(ValueError):
        TruncatedOperator(np.zeros((2, 3)))


def test_operator_is_immutable():
    g = op.build_generators(RepLabel(1.0), 4)
    with pytest.raises(ValueError):
        g.a0.matrix[0, 0] = 3.0


@pytest.mark.parametrize("mu,eps", [(0.0, 1), (0.5, -1), (1.0, 1), (2.0, -1)])
def test_osp12_relations_on_interior(mu, eps):
    g = op.build_generators(RepLabel(mu, eps), 24)
    assert np.abs((anticommutator(g.aplus, g.aminus) - 2 * g.a0).interior()).max() <= 1e-12
    assert np.abs((commutator(g.a0, g.aplus) - g.aplus).interior()).max() <= 1e-12
    assert np.abs(anticommutator(g.parity, g.aplus).matrix).max() == 0


@pytest.mark.parametrize("mu,eps", [(1.0, 1), (1.5, -1), (0.0, 1)])
def test_casimir_is_constant(mu, eps):
    q = op.casimir(RepLabel(mu, eps), 24).interior()
    np.testing.assert_allclose(q, -eps * mu * np.eye(len(q)), atol=1e-12)


def test_scasimir_anticommutes_with_raising():
    lab = RepLabel(1.3, 1)
    s = op.scasimir(lab, 20)
    g = op.build_generators(lab, 20)
    assert np.abs(anticommutator(s, g.aplus).interior()).max() <= 1e-12


def test_tensor_basis_ordering():
    b = op.TensorBasis((RepLabel(1.0), RepLabel(2.0)), 3)
    assert b.states[:6] == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
    assert len(b) == len(b.states) == 10
    assert all(b.states[b.index(*s)] == s for s in b.states)
    assert b.block_slice(2) == slice(3, 6)


def test_coproduct_diagonals():
    labs = (RepLabel(1.0, 1), RepLabel(2.0, -1))
    d = op.coproduct_generators(labs, 6)
    basis = op.TensorBasis(labs, 6)
    for i, (n1, n2) in enumerate(basis.states):
        assert d["da0"].matrix[i, i] == pytest.approx(n1 + n2 + 1.0 + 2.0 + 1)
        assert d["dparity"].matrix[i, i] == -((-1) ** (n1 + n2))
    r = anticommutator(d["daplus"], d["daminus"]) - 2 * d["da0"]
    assert np.abs(r.interior()).max() <= 1e-12


@pytest.mark.parametrize("k1,k2", [(0, 0), (1, 2), (3, 1)])
def test_q12_ground_block(k1, k2):
    labs = (RepLabel.from_k(k1), RepLabel.from_k(k2))
    e12 = (-1) ** (k1 + k2)
    assert op.block_operators(labs, 0)["Q12"][0, 0] == pytest.approx(-e12 * (k1 + k2 + 0.5))


def test_q12_commutes_with_total_a0_exactly():
    labs = (RepLabel.from_k(1), RepLabel.from_k(2))
    q = op.q12(labs, 10)
    da0 = op.coproduct_generators(labs, 10)["da0"]
    assert np.abs(commutator(q, da0).matrix).max() == 0


def test_q12_matches_full_kronecker_on_blocks():
    # direct coproduct products, trusted one level below the truncation edge
    labs = (RepLabel(0.5, 1), RepLabel(1.5, -1))
    d = op.coproduct_generators(labs, 9)
    g = [op.build_generators(lab, 9) for lab in labs]
    basis = op.TensorBasis(labs, 9)
    idx = [n1 * 10 + n2 for n1, n2 in basis.states]
    eye = np.eye(10)
    r = lambda x: x[np.ix_(idx, idx)]  # noqa: E731
    am1ap2 = r(np.kron(g[0].aminus.matrix, g[1].aplus.matrix))
    ap1am2 = r(np.kron(g[0].aplus.matrix, g[1].aminus.matrix))
    p1, p2 = r(np.kron(g[0].parity.matrix, eye)), r(np.kron(eye, g[1].parity.matrix))
    q1, q2 = -0.5, 1.5
    direct = (am1ap2 - ap1am2) @ p1 + q1 * p2 + q2 * p1 - 0.5 * p1 @ p2
    keep = basis.levels <= 8
    np.testing.assert_allclose(op.q12(labs, 9).matrix[np.ix_(keep, keep)], direct[np.ix_(keep, keep)],
                               atol=1e-13)
    assert d["dparity"].matrix.shape == direct.shape


@pytest.mark.parametrize("N", [1, 4, 9])
def test_block_spectrum(N):
    labs = (RepLabel.from_k(2), RepLabel.from_k(1))
    ev = np.sort(np.linalg.eigvalsh(op.block_operators(labs, N)["Q12"]))
    np.testing.assert_allclose(ev, np.sort(op.q_spectrum(labs, N)), atol=1e-10)


def test_cg_decompose():
    br = op.cg_decompose((RepLabel(1.0, 1), RepLabel(2.0, 1)), 3)
    assert (br[0].mu12, br[0].epsilon12) == (3.5, 1)
    assert br[1].epsilon12 == -1
    assert [b.j for b in br] == [0, 1, 2, 3]
    # states at degree N: N + 1 = number of branches j <= N
    assert all(len(op.cg_decompose((RepLabel(1.0), RepLabel(2.0)), N)) == N + 1 for N in range(8))


def test_symmetry_generators():
    labs = (RepLabel.from_k(1), RepLabel.from_k(2))
    sg = op.symmetry_generators(labs, 6)
    basis = op.TensorBasis(labs, 6)
    for i, (n1, n2) in enumerate(basis.states):
        assert sg["K1"].matrix[i, i] == pytest.approx((n1 - n2 + 1 - 2) / 2)
    np.testing.assert_array_equal(sg["Sigma12"].matrix @ sg["Sigma12"].matrix, np.eye(len(basis)))
    assert np.abs(commutator(sg["K1"], sg["Sigma12"]).matrix).max() == 0
    with pytest.raises(InvalidTruncation):
        op.symmetry_generators(labs, 2)


@pytest.mark.parametrize("mu,eps", [(0.0, 1), (1.0, -1), (2.0, 1)])
def test_su11_embedding(mu, eps):
    lab = RepLabel(mu, eps)
    j = op.su11_embedding(lab, 24)
    s = op.scasimir(lab, 24)
    assert np.abs((commutator(j["J0"], j["Jplus"]) - j["Jplus"]).interior()).max() <= 1e-12
    both = j["C"] - (s @ s + s - 0.75) / 4
    assert np.abs(both.interior()).max() <= 1e-12


def test_su11_casimir_mu_zero():
    # S has eigenvalues 0 when mu = 0, so C = -3/16
    c = op.su11_embedding(RepLabel(0.0), 12)["C"].interior()
    np.testing.assert_allclose(np.diag(c), -3 / 16, atol=1e-13)


@pytest.mark.parametrize("k", [0.0, 0.5, 2.0])
def test_sl21_examples(k):
    g = op.sl21_generators(k, 1, 16)
    a = op.build_generators(RepLabel(k, 1), 16)
    assert np.abs((anticommutator(g["Atp"], g["Atm"]) - 2 * a.a0).interior()).max() <= 1e-12
    assert np.abs(anticommutator(g["Fp"], g["Fp"]).matrix).max() <= 1e-14
    assert np.abs(commutator(g["Z"], g["Ep"]).interior()).max() <= 1e-12
    assert np.iscomplexobj(g["Fp"].matrix)


@pytest.mark.parametrize("k1,k2,N", [(0, 0, 3), (1, 2, 5), (3, 1, 8)])
def test_su11_block_matches_full_kronecker(k1, k2, N):
    labs = (RepLabel.from_k(k1), RepLabel.from_k(k2))
    dim = N + 3
    g = [op.build_generators(lab, dim - 1) for lab in labs]
    a0 = [x.a0.matrix for x in g]
    ap = [x.aplus.matrix for x in g]
    am = [x.aminus.matrix for x in g]
    eye = np.eye(dim)
    idx = [m * dim + N - m for m in range(N + 1)]
    j01, j02 = np.kron(a0[0], eye) / 2, np.kron(eye, a0[1]) / 2
    jp = (np.kron(ap[0] @ ap[0], eye) + np.kron(eye, ap[1] @ ap[1])) / 2
    jm = (np.kron(am[0] @ am[0], eye) + np.kron(eye, am[1] @ am[1])) / 2
    j0 = j01 + j02
    c12 = (j0 @ j0 - jp @ jm - j0)[np.ix_(idx, idx)]
    b = op.su11_coupled_block(labs, N)
    np.testing.assert_allclose(b["KK2"], c12, atol=1e-12)
    np.testing.assert_allclose(b["KK1"], (j01 - j02)[np.ix_(idx, idx)], atol=0)
