import pytest

import vtwist


def test_characters():
    ids = vtwist.characters(3, 20)
    assert ids == ["(7; 7:1)", "(9; 9:1)", "(13; 13:1)", "(19; 19:1)"]


def test_twist_value_37b():
    r = vtwist.twist_value("37b", "(7; 7:2)")
    assert r["character"] == "(7; 7:1)"
    assert r["decision"] == "vanishes"
    assert r["omega_scale"] == "2/9"
    assert len(set(r["S"])) == 1


def test_cubic_fields():
    assert vtwist.cubic_field(0, -3, -1)["conductor"] == "9"
    k = vtwist.cubic_field(1, -2, -1)
    assert k["conductor"] == "7" and k["character"] == "(7; 7:1)"
    with pytest.raises(RuntimeError):
        vtwist.cubic_field(0, 0, -2)


def test_e37b():
    k = vtwist.e37b_field(1, 1)
    assert k["conductor"] == "7"
    c = vtwist.census_37b(2000, 30)
    assert c["conductors"][:3] == ["7", "13", "63"]


def test_surface_and_conic():
    assert vtwist.short_quartic_matches("2", "1") == (True, True)
    assert vtwist.short_quartic_matches("2", "5") == (True, False)
    c = vtwist.conic("4/3", "1")
    assert c["q"] == "9472/243" and c["solvable"]


def test_family():
    f = vtwist.family("six-torsion", "-1/2")
    assert f["point"] == ("3/2", "0") and f["singular_fiber"] and f["nontorsion"]
    with pytest.raises(ValueError):
        vtwist.family("four-two", "1")


def test_bad_curve():
    with pytest.raises(ValueError):
        vtwist.twist_value("99z", "(7; 7:1)")
