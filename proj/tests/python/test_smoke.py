import json

import pytest

import instanton


def coefficient(doc, **exponents):
    for t in doc["terms"]:
        if all(t["exponent"].get(k, 0) == v for k, v in exponents.items()) and all(
            v == 0 for k, v in t["exponent"].items() if k not in exponents
        ):
            return t["coefficient"]
    return "0"


def test_zinst_lambda4():
    doc = instanton.zinst(8)
    assert doc["schema_version"] == 1
    assert [t["exponent"]["Lambda"] for t in doc["terms"]] == [0, 4, 8]
    assert coefficient(doc, Lambda=4) == "(-1/2)/((e1)*(e2)*(a - 1/2*e2 - 1/2*e1)*(a + 1/2*e2 + 1/2*e1))"


def test_wallcross_anchor_and_routes():
    for route in ("local", "modular"):
        doc = instanton.wallcross("F1", "H-2E", lambda_order=0, route=route)
        assert coefficient(doc, Lambda=0, z=0, x=0) == "1"
    local = instanton.wallcross("F1", "H-2E", alpha="2H+E", route="local")
    modular = instanton.wallcross("F1", "H-2E", alpha="2H+E", route="modular")
    assert local["terms"] == modular["terms"]
    assert coefficient(local, Lambda=4, z=4) == "-26"
    assert instanton.compare_wallcross("F1", "H-4E", lambda_order=12, z_order=12)["ok"]


def test_bad_wall_and_surface_raise():
    with pytest.raises(instanton.WallNotGood):
        instanton.wallcross("F1", "H")
    s = instanton.surface("P2")
    s["fixed_points"][0]["wy"] = [-2, 0]
    with pytest.raises(instanton.ValidationError):
        instanton.surface_from_json(json.dumps(s))


def test_surface_round_trip():
    f1 = instanton.surface("F1")
    assert instanton.surface_from_json(json.dumps(f1)) == f1
    assert sorted(f1["classes"]) == ["E", "H"]


def test_p2_routes_agree():
    r = instanton.compare_p2(4, 4, 1, "p_y")
    assert r["ok"], r["detail"]
    assert r["slices"] == 14


def test_prepotential_h_vanishes():
    c = instanton.prepotential_constants(12)
    assert all(v == "0" for v in c["H"])


def test_acceptance():
    results = instanton.acceptance()
    assert len(results) == 12
    assert all(r["ok"] for r in results), [r for r in results if not r["ok"]]
