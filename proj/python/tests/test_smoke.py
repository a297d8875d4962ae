import pytest

import aqpy


def cusp():
    return aqpy.Ring(["x", "y"], ["y^2-x^3"], name="S")


def test_kahler_dims_of_cusp():
    eta = aqpy.Map.structure(cusp())
    assert aqpy.kahler_dim_at(eta, {"x": "0", "y": "0"}) == 2
    assert aqpy.kahler_dim_at(eta, {"x": "1", "y": "1"}) == 1


def test_aq_dims_at_singular_point():
    eta = aqpy.Map.structure(cusp())
    assert aqpy.aq_dims_at(eta, {"x": "0", "y": "0"}) == [2, 1, 0]


def test_homology_report_is_a_dict():
    eta = aqpy.Map.structure(cusp())
    r = aqpy.aq_homology(eta, {"x": "1", "y": "1"}, 1)
    assert isinstance(r, dict)
    assert r["degrees"]


def test_classify_square_root_over_finite_field():
    R = aqpy.Ring(["t"], characteristic=5, name="R")
    S = aqpy.Ring(["t", "x"], ["x^2-t"], characteristic=5, name="S")
    phi = aqpy.Map(R, S, {"t": "t"})
    rep = aqpy.classify("etale", phi, [{"t": "1", "x": "1"}, {"t": "0", "x": "0"}])
    verdicts = [p["verdict"] for p in rep["points"]]
    assert verdicts == [True, False]


def test_bad_point_raises_value_error():
    eta = aqpy.Map.structure(cusp())
    with pytest.raises(ValueError):
        aqpy.kahler_dim_at(eta, {"x": "1", "y": "2"})


def test_suite_names_and_small_suite():
    assert "hkr" in aqpy.suite_names()
    assert aqpy.run_suite("polynomial-vanishing")["ok"]


def test_session_round_trip():
    text = """field QQ
ring K = poly()
ring P = poly(x, y)
ring S = P / (y^2-x^3)
map eta : K -> S
point o on S (x=0, y=0)
task homology eta coeff residue o maxdeg 2
"""
    formatted = aqpy.format_session(text)
    assert aqpy.format_session(formatted) == formatted
    out = aqpy.run_session(text)
    assert out["exit_code"] == 0
    assert len(out["tasks"]) == 1
