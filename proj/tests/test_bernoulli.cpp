#include "qmh/bernoulli.hpp"

#include <doctest.h>

using namespace qmh;

TEST_CASE("bernoulli numbers by recurrence") {
    CHECK(bernoulliB(0) == Rat(1));
    CHECK(bernoulliB(1) == Rat(-1, 2));
    CHECK(bernoulliB(2) == Rat(1, 6));
    CHECK(bernoulliB(4) == Rat(-1, 30));
    CHECK(bernoulliB(12) == Rat(-691, 2730));
    CHECK(bernoulliB(7) == Rat(0));
}

TEST_CASE("beta coefficients match the pinned values and the independent derivation") {
    CHECK(betaCoeff(0) == Rat(1));
    CHECK(betaCoeff(1) == Rat(0));
    CHECK(betaCoeff(2) == Rat(-1, 24));
    CHECK(betaCoeff(4) == Rat(7, 5760));
    for (int k = 0; k <= 30; ++k) {
        if (k % 2 == 1) CHECK(betaCoeff(k) == Rat(0));
        CHECK(betaCoeff(k) == betaCoeffViaBernoulli(k));  // two independent derivations
    }
}

TEST_CASE("zeta values") {
    CHECK(zetaNegInt(1) == Rat(-1, 12));
    CHECK(zetaNegInt(3) == Rat(1, 120));
    CHECK(zetaNegInt(2) == Rat(0));
    CHECK(zetaEven(1) == PiPoly::piSquaredPow(1, Rat(1, 6)));
    CHECK(zetaEven(2) == PiPoly::piSquaredPow(2, Rat(1, 90)));
    CHECK(zetaEven(3) == PiPoly::piSquaredPow(3, Rat(1, 945)));
}

TEST_CASE("divisor power sums") {
    CHECK(sigmaPower(6, 1) == Rat(12));
    CHECK(sigmaPower(6, -1) == Rat(2));  // 1 + 1/2 + 1/3 + 1/6
    CHECK(sigmaPower(4, 3) == Rat(73));
    QSeries s = sigmaSeries(1, 4);
    CHECK(s.at(4) == Rat(7));
}
