"""Smoke tests for the qmhurwitz python module against pinned exact values."""

from fractions import Fraction

import qmhurwitz as qh


def frac(s):
    return Fraction(s)


def test_counting():
    n0 = qh.count_series([2, 2], 5)
    assert [frac(x) for x in n0] == [0, 0, 2, 16, 60, 160]
    c0 = qh.sv_series([2, 2, 2, 2], -1, 5)
    assert [frac(x) for x in c0] == [0, 0, Fraction(5, 2), 216, 3348, 25184]
    s3 = qh.count_series([3], 7)
    assert [frac(x) for x in s3] == [0, 0, 0, 3, 9, 27, 45, 90]


def test_brackets():
    q2 = qh.qbracket_monomial([2], 6)
    # <Q_2> = -P/24 = -1/24 + q + 3 q^2 + 4 q^3 + ...
    assert [frac(x) for x in q2[:4]] == [Fraction(-1, 24), 1, 3, 4]
    form = qh.recognize_monomial([3, 3])
    assert frac(form["(3,0,0)"]) == Fraction(5, 25920)
    assert frac(form["(0,0,1)"]) == Fraction(-2, 25920)
    tp = qh.qbracket_hook_moment(-1, 6)
    assert frac(tp[4]) == Fraction(7, 4)  # sigma_{-1}(4) = 1 + 1/2 + 1/4


def test_cumulants_and_volumes():
    assert frac(qh.cumulant([2, 2])) == Fraction(1, 45)
    assert frac(qh.v_n(4)) == Fraction(-7, 162)
    vol = qh.volume(2)
    assert frac(vol["vol"]["pi^4"]) == Fraction(1, 1350)
    assert frac(vol["carea_times_pi2_over_3"]) == Fraction(5, 4)
    assert frac(qh.carea(6)) == Fraction(102396315, 65973212)
    assert frac(qh.sv_leading(6)) == Fraction(2225, 288)
    kappa = qh.kappa(6)
    assert [frac(x) for x in kappa] == [1, 0, Fraction(-1, 3), 0, Fraction(13, 9), 0, Fraction(-445, 27)]


def test_certificate():
    cert = qh.certify([2, 2], -1, 20)
    # c^0_{-1}(Tr^2) = (5/4)(5P^3 - 3QP - 2R)/25920
    assert frac(cert["connected"]["(3,0,0)"]) == Fraction(5, 25920) * Fraction(5, 4)
    assert cert["pure"] is True


def test_bm_expansion():
    e = qh.bm_expansion(2, 1)
    assert e["gamma"] == "-3/2"
    # A0(2) = 1/2 relative to the 2^{1/2} pi^{-1/2} prefactor: stored with pref2 = -1
    assert frac(e["A"][0]["pi^0"]) * Fraction(2) ** Fraction(e["pref2"] - 1, 2) == Fraction(1, 2) * Fraction(1, 1)


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"ok {t.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    main()
