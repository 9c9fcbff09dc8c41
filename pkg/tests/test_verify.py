import pytest

from osphahn import verify as vf
from osphahn.osprep import RepLabel


def test_report_pass_flag_and_summary():
    r = vf.CheckReport("x", {"a": 1}, 2e-3, 1e-3, location="K2 entry (0, 1)")
    assert not r.passed
    assert r.summary().startswith("FAIL x") and "K2 entry (0, 1)" in r.summary()
    assert vf.CheckReport("x", {}, 1e-3, 1e-3).passed


@pytest.mark.parametrize("mu,eps", [(0.0, 1), (2.0, -1)])
def test_osp12_and_su11(mu, eps):
    assert vf.check_osp12(RepLabel(mu, eps)).passed
    assert vf.check_su11(RepLabel(mu, eps)).passed


def test_sl21():
    assert vf.check_sl21(0.5).passed


@pytest.mark.parametrize("k1,k2", [(0, 0), (1, 2), (3, 3)])
def test_block_checks(k1, k2):
    for fn in (vf.check_dualhahn_algebra, vf.check_q_spectrum, vf.check_dual_hahn_embedding):
        r = fn(k1, k2, 8)
        assert r.passed, r.summary()


def test_printed_relations_differ():
    # the relations as literally stated are off by terms the corrected forms account for
    r = vf.check_dualhahn_algebra(1, 2, 6)
    assert r.passed
    assert max(r.info["as_printed_defects"].values()) > 1e-3


def test_wavefunctions_parts():
    r = vf.check_wavefunctions(1, 2, max_level=3, m_max=3)
    assert r.passed, r.summary()
    assert {p.name for p in r.parts} >= {"norms", "ladder", "ode-angular", "ode-radial"}


def test_overlaps_without_quadrature():
    r = vf.check_overlaps(2, 1, level_max=6, quad_level_max=-1)
    assert r.passed and [p.name for p in r.parts] == ["overlap-closed", "overlap-quadrature"]


def test_dualhahn_checks():
    assert vf.check_dualhahn_orthogonality(0.5, 2.5, 9).passed
    assert vf.check_dualhahn_closed_form(0.1, 1.0, 7).passed


def test_run_suite_subset_and_unknown():
    reps = vf.run_suite(["osp12", "su11"], workers=2)
    assert len(reps) == 16 and all(r.passed for r in reps)
    assert [r.name for r in reps[:8]] == ["osp12"] * 8
    with pytest.raises(KeyError):
        vf.run_suite(["nope"])
