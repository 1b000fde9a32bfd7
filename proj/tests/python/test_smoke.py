from fractions import Fraction

import pytest

import augvar


def test_clifford_relation_terms():
    spec = augvar.clifford_relation(3, [1, 1, -1])
    coefs = sorted(t["coef"] for t in spec["relation"]["terms"])
    assert coefs == ["-1", "1", "1"]


def test_solve_formal_matches_log():
    rel = {"vars": ["y1", "y2"],
           "terms": [{"exp": [0, 0], "coef": "1"}, {"exp": [1, 0], "coef": "1"},
                     {"exp": [0, 1], "coef": "-1"}]}
    out = augvar.solve_formal(rel, "y2", 8)
    assert out["kappa"] == "1"
    coef = {t["exp"][0]: Fraction(t["coef"]) for t in out["series"]}
    for j in range(1, 9):
        assert coef[j] == Fraction((-1) ** (j - 1), j)


def test_cover_contributions():
    for d in range(1, 8):
        assert Fraction(augvar.cover_contribution(d)) == Fraction((-1) ** (d - 1), d * d)
    assert augvar.multicover_matches_log(2, 6)


def test_markov_small():
    assert augvar.markov(30) == [(1, 1, 1), (1, 1, 2), (1, 2, 5), (1, 5, 13), (2, 5, 29)]


def test_run_partitions_json():
    code, report = augvar.run("partitions", ell=3)
    assert code == 0
    assert report["result"]["count"] == 4
    assert report["config"]["seed"] == 0


def test_errors_raise():
    with pytest.raises(augvar.AugvarError):
        augvar.clifford_relation(3, [1, 1])
