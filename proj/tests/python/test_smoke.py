import json
import os
from fractions import Fraction

import pytest

import tmne

FIXTURES = os.environ.get("TMNE_FIXTURES", os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"))


def fixture(name):
    return tmne.load(os.path.join(FIXTURES, name))


def test_delta_and_bounds():
    assert tmne.delta("2,2,2")["delta"] == 2
    assert tmne.delta("3,3,3")["delta"] == 10
    assert tmne.delta("3,2") == {"shape": [3, 2], "delta": 0, "feasible": False}
    b = tmne.bounds("2,2,2")
    assert b["delta_i"] == [3, 3, 3]
    assert b["D"] == 11


def test_solve_sym222():
    rep = tmne.solve(fixture("sym222.game"))
    assert rep["count"] == 2
    assert rep["P"] == ["2", "-3", "1"]
    profiles = {tuple(tuple(Fraction(x) for x in p) for p in eq) for eq in rep["equilibria"]}
    quarter = (Fraction(3, 4), Fraction(1, 4))
    fifth = (Fraction(3, 5), Fraction(2, 5))
    assert profiles == {(quarter,) * 3, (fifth,) * 3}


def test_certificate_and_count():
    game = fixture("sym222.game")
    assert tmne.count(game) == 2
    cert = tmne.certify(game)["certificate"]
    assert cert["verdict"] is True
    assert cert["S0"] == "-1"


def test_random_game_round_trip_is_deterministic():
    g1 = tmne.random_game("2,3", 7)
    g2 = tmne.random_game("2,3", 7)
    assert g1 == g2
    assert json.loads(tmne._tmne.normalize_game(json.dumps(g1))) == g1


def test_degenerate_path():
    game = fixture("sym222_redundant.game")
    assert tmne.zero_dim_test(game) == "likely-positive-dimensional"
    with pytest.raises(tmne.PositiveDimensional):
        tmne.solve(game)
    assert tmne.isolated(game)["upper_bound"] == 0
    glued = tmne.isolated(fixture("glued_point_line.game"))
    assert glued["upper_bound"] == 1
    assert glued["equilibria"] == [[["1/4", "1/4", "1/2"], ["1/4", "3/4"], ["1/5", "4/5"]]]


def test_hermite_signature():
    # T^2 - 2 has two real roots; weighted by T they cancel
    assert tmne.hermite_signature(["-2", "0", "1"], ["1"]) == 2
    assert tmne.hermite_signature(["-2", "0", "1"], ["0", "1"]) == 0
