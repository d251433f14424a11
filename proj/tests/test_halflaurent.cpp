#include "qmh/halflaurent.hpp"

#include <doctest.h>

using namespace qmh;

TEST_CASE("frakB_n for integer n reduces to shifted Bernoulli polynomials") {
    // frakB_2(X) = X^2 - 1/12
    HalfLaurent b2 = blaurent_bn(4, 6);
    CHECK(b2.coeffAtTwiceExp(4) == Rat(1));
    CHECK(b2.coeffAtTwiceExp(2) == Rat(0));
    CHECK(b2.coeffAtTwiceExp(0) == Rat(-1, 12));
    CHECK(b2.coeffAtTwiceExp(-2) == Rat(0));
    // frakB_4(X) = X^4 - X^2/2 + 7/240
    HalfLaurent b4 = blaurent_bn(8, 8);
    CHECK(b4.coeffAtTwiceExp(8) == Rat(1));
    CHECK(b4.coeffAtTwiceExp(4) == Rat(-1, 2));
    CHECK(b4.coeffAtTwiceExp(0) == Rat(7, 240));
}

TEST_CASE("half-integer frakB expansions") {
    // frakB_{1/2} = X^{1/2} + X^{-3/2}/96 - 7 X^{-7/2}/6144 + 31 X^{-11/2}/65536
    HalfLaurent h = blaurent_bn(1, 8);
    CHECK(h.coeffAtTwiceExp(1) == Rat(1));
    CHECK(h.coeffAtTwiceExp(-3) == Rat(1, 96));
    CHECK(h.coeffAtTwiceExp(-7) == Rat(-7, 6144));
    CHECK(h.coeffAtTwiceExp(-11) == Rat(31, 65536));
    // frakB_{-1/2} = X^{-1/2} - X^{-5/2}/32 + 49 X^{-9/2}/6144
    HalfLaurent hm = blaurent_bn(-1, 8);
    CHECK(hm.coeffAtTwiceExp(-1) == Rat(1));
    CHECK(hm.coeffAtTwiceExp(-5) == Rat(-1, 32));
    CHECK(hm.coeffAtTwiceExp(-9) == Rat(49, 6144));
    CHECK(hm.coeffAtTwiceExp(-13) == Rat(-341, 65536));
    // frakB_{3/2} = X^{3/2} - X^{-1/2}/32 + 7 X^{-5/2}/10240
    HalfLaurent h3 = blaurent_bn(3, 8);
    CHECK(h3.coeffAtTwiceExp(3) == Rat(1));
    CHECK(h3.coeffAtTwiceExp(-1) == Rat(-1, 32));
    CHECK(h3.coeffAtTwiceExp(-5) == Rat(7, 10240));
    CHECK(h3.coeffAtTwiceExp(-9) == Rat(-31, 196608));
}

TEST_CASE("functional equation frakB_n(X+1/2) - frakB_n(X-1/2) = n X^{n-1}") {
    for (long twiceN : {-1L, 1L, 3L, 4L, 7L, 8L}) {
        int depth = 9;
        HalfLaurent lhs = bnFunctionalEquationLHS(twiceN, depth);
        // lhs has lead X^n with zero top coefficient; n X^{n-1} sits at index 1
        for (int j = 0; j < depth - 1; ++j) {
            Rat expect = (j == 1) ? Rat(twiceN, 2) : Rat(0);
            CHECK(lhs.coeffs[j] == expect);
        }
    }
}

TEST_CASE("even part frakb_n matches the Laurent coefficients") {
    QSeries s = bnSmallSeries(1, 4);
    CHECK(s.at(0) == Rat(1));
    CHECK(s.at(1) == Rat(1, 96));
    CHECK(s.at(2) == Rat(-7, 6144));
    CHECK(s.at(3) == Rat(31, 65536));
}
