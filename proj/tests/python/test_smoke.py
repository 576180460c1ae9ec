import newred


def test_iterate_golden():
    assert newred.iterate("x^2-x-1", 2) == "x^4 - 2*x^3 - 2*x^2 + 3*x + 1"


def test_check_golden_third_iterate():
    r = newred.check("x^2-x-1", 3)
    assert r["newly_reducible"] is True
    w = r["witness"]
    assert w["n"] == 3
    assert w["chain"] == [True, True]
    polys = [f["poly"] for f in w["factors"]["factors"]]
    assert ["-1", "4", "0", "-3", "1"] in polys
    assert ["1", "1", "-3", "-1", "1"] in polys


def test_check_second_iterate_negative():
    assert newred.check("x^2-x-1", 2)["newly_reducible"] is False


def test_fast_paths_agree_with_oracle():
    fast = newred.check("x^2-5x+9", 3)
    slow = newred.check("x^2-5x+9", 3, use_fast_paths=False)
    assert fast["newly_reducible"] == slow["newly_reducible"] is True
    assert fast["witness"]["factors"] == slow["witness"]["factors"]


def test_factor():
    r = newred.factor("x^4+4")
    assert r["unit"] == "1"
    assert sorted(f["poly"] for f in r["factors"]) == [["2", "-2", "1"], ["2", "2", "1"]]


def test_family_quartic():
    m = newred.family("quartic_t", 1)
    assert m["f"] == ["1171350433", "25326500", "205350", "740", "1"]
    assert m["all_conditions_hold"] is True


def test_family_rational_params():
    m = newred.family("n23_surface", 1, 1)
    assert m["normal_form"] == {"gamma": "1/2", "m": "-7/4"}


def test_genbigd_params():
    assert newred.genbigd_params(6, 2, 3) == [4, 32, 256]


def test_box_search():
    hits = newred.box_search(-5, 5, -5, 5, n=3)
    assert [(h["a"], h["b"]) for h in hits] == [("-1", "-1")]
    assert hits[0]["witness"]["chain"] == [True, True]


def test_surface_search():
    hits = newred.surface_search(1)
    assert len(hits) == 2
    assert {(h["a"], h["b"]) for h in hits} == {("-1", "-1")}


def test_classify_membership():
    assert newred.classify_membership(2, 2, 2)["member"] is False
    rep = newred.classify_membership(4, 2, 2)
    assert rep["member"] is True and rep["scanned"] == 16


def test_verify_ahmadi():
    rep = newred.verify_ahmadi(4)
    assert rep["verified"] is True
    assert rep["checked"] == 48
    assert rep["exceptions"] == []


def test_claims_quick():
    results = newred.run_claims(quick=True)
    assert len(results) == 12
    assert all(r["pass"] for r in results)
