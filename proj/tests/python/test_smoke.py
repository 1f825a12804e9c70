import json
import os

import pytest

import orbsnake


def load(rel):
    with open(os.path.join(orbsnake.DATA_DIR, rel)) as f:
        return json.load(f)


def test_gamma1_expansion():
    curve = load("curves/gamma1.json")
    tri = load("two_orbifold_points.json")
    assert orbsnake.expand(curve, tri) == "(x2^2*y1^2 + L3*x2*x3*y1 + x3^2)/(x1)"
    assert orbsnake.chi(curve, tri) == orbsnake.expand(curve, tri)
    assert orbsnake.matching_count(curve, tri) == 3


def test_expand_file_matches_dict_input():
    path = os.path.join(orbsnake.DATA_DIR, "curves/gamma2.json")
    tri = load("two_orbifold_points_mirror.json")
    assert orbsnake.expand_file(path) == orbsnake.expand(load("curves/gamma2.json"), tri)
    assert orbsnake.expand_file(path, "latex").startswith("\\frac{")


def test_bad_winding_raises_value_error():
    curve = load("curves/gamma3.json")
    curve["word"][0]["winding"] = 2
    with pytest.raises(ValueError, match="winding out of range"):
        orbsnake.expand(curve, load("two_orbifold_points.json"))


def test_universal_poset_has_eight_nodes():
    dot = orbsnake.universal_poset_dot(3)
    assert dot.count('[label="') == 8 + 12


def test_mutation_round_trip():
    fig = load("mutation/lam_flip_pending.json")
    after = orbsnake.mutate(fig["before"], [fig["index"]])
    assert after["rows"] == fig["after"]["rows"]
    assert orbsnake.mutate(after, [fig["index"]])["rows"] == fig["before"]["rows"]


def test_lift_of_gamma1():
    lifted = orbsnake.lift(load("curves/gamma1.json"), load("two_orbifold_points.json"))
    assert lifted["d"] == 2
    assert lifted["verified"]


@pytest.mark.parametrize("suite", ["skein", "mutation", "universal_matrices"])
def test_suites_pass(suite):
    ok, summary = orbsnake.verify(suite, fuzz=20, n=4)
    assert ok, summary


def test_chebyshev():
    assert orbsnake.cheb_u(2, 5) == "L5^2 - 1"
    assert orbsnake.cheb_u_value(2, 3) == pytest.approx(0.0, abs=1e-12)
    assert orbsnake.cheb_u_value(3, 3) == pytest.approx(-1.0)
