import pytest

dgv = pytest.importorskip("_dgv")


def test_build_and_validate():
    g = dgv.build("deloop Z3")
    assert g.n_objects == 1
    assert g.n_squares == 3
    rep = dgv.validate(g)
    assert rep["ok"] and rep["is_groupoid"]


def test_filling_verdicts():
    assert dgv.filling(dgv.build("pair 2"))["ok"]
    nofill = dgv.filling(dgv.build("nofill"))
    assert not nofill["ok"]
    assert nofill["variants_agree"]


def test_homotopy_groups():
    pi = dgv.pi(dgv.build("deloop Z3"))
    assert len(pi["pi1"]["elements"]) == 3
    assert len(pi["pi2"]["elements"]) == 1
    pi_ab = dgv.pi(dgv.build("ab Z2"))
    assert len(pi_ab["pi2"]["elements"]) == 2


def test_theorem_surfaces():
    tri = dgv.theorem_51(dgv.build("ab Z2"))
    assert tri["agree"] and tri["i"]
    bad = dgv.theorem_51(dgv.build("nofill"))
    assert bad["agree"] and not bad["i"]
    assert dgv.theorem_53(dgv.build("deloop Z3"))
    rt = dgv.theorem_63(dgv.build("ab Z2"))
    assert rt["iso"] and rt["epsilon_identity"] and rt["pp_epsilon_identity"]


def test_reflection_of_dec_nerve():
    g = dgv.reflect_dec_nerve("Z2")
    pi = dgv.pi(g)
    assert pi["pi0_classes"] == 1
    assert len(pi["pi1"]["elements"]) == 2
    assert len(pi["pi2"]["elements"]) == 1


def test_json_round_trip():
    g = dgv.build("tensor Z2 Z3")
    back = dgv.from_json(g.to_json())
    assert back.n_squares == g.n_squares


def test_formula_audit_slice():
    out = dgv.verify_formulas(grids=[8], only="eta")
    assert out["ok"]
    assert out["reports"][0]["barycentric"]
