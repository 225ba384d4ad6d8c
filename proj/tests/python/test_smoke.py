import json

import pytest

import zgpd


def test_check_I_is_projective_but_not_injective():
    f = zgpd.to_one(zgpd.standard("check_I"))
    assert f.is_projective_fibration()
    report = f.injective_fibration_report()
    assert not report["holds"]
    assert report["isofibration"]
    assert not report["i_prime_lifting"]
    assert report["has_witness"]


def test_fibrant_objects():
    assert zgpd.is_fibrant(zgpd.standard("nabla"))
    assert not zgpd.is_fibrant(zgpd.standard("check_I"))


def test_generators_are_acyclic_cofibrations():
    for name in ("i_prime", "s_i"):
        assert zgpd.standard(name).is_acyclic_cofibration()


def test_factorize():
    f = zgpd.to_one(zgpd.standard("s_one"))
    j, q = zgpd.factorize(f)
    assert j.is_acyclic_cofibration()
    assert q.is_injective_fibration()
    assert zgpd.compose(q, j) == f


def test_universe_counts_and_univalence():
    counts = zgpd.universe_counts(2)
    assert counts["objects"] == 7
    assert counts["morphisms"] == 25
    assert counts["fixed_objects"] == 5
    assert zgpd.check_universe_maps(2)
    cert = zgpd.check_univalence(2)
    assert cert["conclusion"]
    assert cert["path_objects"] == counts["morphisms"]


def test_classify():
    q = zgpd.to_one(zgpd.standard("s_one"))
    assert q.is_covering()
    assert zgpd.classify_roundtrip(q, 2)
    with pytest.raises(zgpd.ZgpdError):
        zgpd.classify_roundtrip(q, 1)


def test_document_roundtrip():
    nabla = zgpd.standard("nabla")
    text = nabla.to_json()
    back = zgpd.deserialize(text)
    assert back.to_json() == text
    assert json.loads(text)["kind"] == "ztwo-groupoid"


def test_schema_violation():
    doc = json.loads(zgpd.standard("nabla").to_json())
    doc["body"]["groupoid"]["morphisms"][1][2] = "7"
    with pytest.raises(zgpd.ZgpdError, match="/body/groupoid/morphisms/1/2"):
        zgpd.deserialize(json.dumps(doc))


def test_cli_universe():
    code, out, _ = zgpd.run_cli(["universe", "--pool", "2", "--verify", "univalence", "--json"])
    assert code == 0
    assert json.loads(out)["univalence"]["conclusion"] is True
