"""Smoke tests for the Python bindings.

Cross-checks the exact C++ results against independent computations in
``fractions.Fraction`` arithmetic, so agreement is meaningful rather than
circular.
"""

from fractions import Fraction

import pytest

import broadexp


def frac(s: str) -> Fraction:
    return Fraction(s)


def reference_p_broad(n: int, k: int) -> Fraction:
    prod = Fraction(1)
    for i in range(k, n):
        prod *= Fraction(2 * i, 2 * i + 1)
    return 2 + Fraction(6) / (2 * (n - 1) + (k - 1) * prod)


def test_p_broad_matches_reference():
    for n in range(2, 40):
        for k in range(2, n + 1):
            rec = broadexp.p_broad(n, k)
            assert frac(rec["p"]) == reference_p_broad(n, k)
            assert rec["lower_ok"] and rec["upper_ok"]


def test_worked_example():
    rec = broadexp.p_broad(5, 3)
    assert rec["p"] == "263/100"
    assert rec["product"] == "16/21"
    assert broadexp.dyadic_product(3, 5) == "16/21"


def test_figure2_anchors():
    expected = {
        5: Fraction(63, 100),
        7: Fraction(429, 1018),
        9: Fraction(7293, 23032),
        19: Fraction(1, 7),
    }
    for n, gap in expected.items():
        res = broadexp.linear_exponent(n)
        assert frac(res["p"]) - 2 == gap
    assert broadexp.linear_exponent(19)["k_opt"] == 10


def test_linear_exponent_is_the_minimax():
    for n in (6, 9, 13):
        res = broadexp.linear_exponent(n)
        values = []
        for k in range(2, n + 1):
            pb = reference_p_broad(n, k)
            pl = 2 + Fraction(4, 2 * n - k)
            values.append(max(pb, pl))
        assert frac(res["p"]) == min(values)


def test_table_rows():
    rows = broadexp.state_of_art_table(3, 12)
    assert [row["n"] for row in rows] == list(range(3, 13))
    by_n = {row["n"]: row for row in rows}
    assert by_n[5]["winner"] == "new"
    assert by_n[5]["prior"] is None
    assert by_n[6]["winner"] == "prior"
    assert by_n[6]["prior"]["attribution"] == "Guth 2018"


def test_upper_edge():
    assert broadexp.p_upper_bg(7, 2) is None
    assert broadexp.p_upper_bg(7, 4) == "3"


def test_verify_identities():
    rep = broadexp.verify_identities(5, 2)
    assert rep["all_zero"] is True
    assert rep["p0_closed_form_match"] is True
    assert rep["gamma"] == ["50/63", "4/63", "1/7"]
    assert rep["beta"] == ["1", "225/263", "189/263"]
    assert sum(frac(g) for g in rep["gamma"]) == 1
    sym = broadexp.verify_identities_symbolic(1)
    assert sym["all_zero"] is True
    assert sym["p0"] == "(2*n^2 - 2*n + 1)/(n^2 - 2*n + 1)"


def test_beta_ratios_reference():
    p = broadexp.lebesgue_exponents(5, 2)
    beta, alpha = broadexp.beta_ratios(p, "reciprocal")
    a = [Fraction(1, 2) - 1 / frac(s) for s in p]
    for i in range(len(p)):
        assert frac(beta[i]) == a[0] / a[i]
    assert frac(alpha[2]) == a[1] / a[2]


def test_cubic_window():
    iv = broadexp.solve_cubic(64)
    assert Fraction("0.67765") <= frac(iv["lo"])
    assert frac(iv["hi"]) <= Fraction("0.67766")
    lam = broadexp.nu_lambda(64)["lambda"]
    # at 64 bits the enclosure is tighter than double resolution, so the
    # rounded endpoints may coincide
    assert 2.59607 < lam["lo_float"] <= lam["hi_float"] < 2.59608
    card = broadexp.cardano_root(64)
    assert frac(card["lo"]) <= frac(iv["hi"])
    assert frac(iv["lo"]) <= frac(card["hi"])


def test_asymptotic_fit_points():
    pts = broadexp.asymptotic_fit(19, 19, 4, 64)
    assert len(pts) == 1
    assert pts[0]["gap"] == "19/7"
    assert pts[0]["deviation"].startswith("0.118")
    assert broadexp.tomas_gap(10000) == "40000/9999"


def test_direction_lattice_small():
    dirs = broadexp.direction_lattice(2, 100.0)
    assert len(dirs) == 39
    for d in dirs:
        assert d.shape == (2,)
        assert abs(float(d[0] ** 2 + d[1] ** 2) - 1.0) < 1e-12


def test_occupancy_closed_form():
    import numpy as np

    base = np.zeros(3)
    direction = np.array([1.0, 0.0, 0.0])
    conormals = np.array([[0.0], [0.0], [1.0]])
    offset = np.zeros(3)
    center = np.zeros(3)
    occ = broadexp.line_occupancy(base, direction, conormals, offset, 1.0, center, 5.0)
    assert occ == pytest.approx(10.0)
    mc = broadexp.line_occupancy_mc(
        base, direction, conormals, offset, 1.0, center, 5.0, samples=20000, seed=1
    )
    assert mc == pytest.approx(occ, abs=0.1)


def test_trial_determinism_and_bound():
    a = broadexp.falsification_trial(7, n=3, m=1, R=1000.0, budget=3000)
    b = broadexp.falsification_trial(7, n=3, m=1, R=1000.0, budget=3000)
    assert a == b
    assert a["violated"] is False
    assert a["line_count"] == 3000
    assert a["model"] == "affine-flag line surrogate"
    c = broadexp.falsification_trial(8, n=3, m=1, R=1000.0, budget=3000)
    assert c["seed"] == 8


def test_extremal_summary():
    summary = broadexp.extremal_summary(3, 2, 100.0)
    assert summary["count"] == summary["family_size"]
    assert summary["count"] >= 1
    assert summary["bound"] == pytest.approx(1.0)


def test_error_translation():
    with pytest.raises(ValueError):
        broadexp.p_broad(1, 1)
    with pytest.raises(RuntimeError):
        broadexp.verify_identities_symbolic(13, 20)
