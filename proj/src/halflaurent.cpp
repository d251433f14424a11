#include "qmh/halflaurent.hpp"

namespace qmh {

HalfLaurent blaurent_bn(long twiceN, int depth) {
    if (depth < 1) throw std::invalid_argument("blaurent_bn: depth must be >= 1");
    Rat n(twiceN, 2);
    HalfLaurent r;
    r.twiceLead = twiceN;
    r.coeffs.resize(depth, Rat(0));
    // for integer n >= 0 the falling factorial vanishes for k > n, so this
    // automatically reduces to the Bernoulli polynomial B_n(X + 1/2)
    for (int k = 0; k < depth; ++k) r.coeffs[k] = pochhammerFalling(n, k) * betaCoeff(k);
    return r;
}

QSeries bnSmallSeries(long twiceN, int order) {
    Rat n(twiceN, 2);
    QSeries s(order);
    for (int h = 0; h <= order; ++h) s.set(h, pochhammerFalling(n, 2 * h) * betaCoeff(2 * h));
    return s;
}

HalfLaurent shiftedPower(long twiceN, const Rat& c, int depth) {
    Rat n(twiceN, 2);
    HalfLaurent r;
    r.twiceLead = twiceN;
    r.coeffs.resize(depth, Rat(0));
    for (int j = 0; j < depth; ++j) r.coeffs[j] = binomialRat(n, j) * c.pow(j);
    return r;
}

HalfLaurent bnFunctionalEquationLHS(long twiceN, int depth) {
    // substitute X -> X +- 1/2 into each monomial (n)_k beta_k X^{n-k} and re-expand
    Rat n(twiceN, 2);
    HalfLaurent r;
    r.twiceLead = twiceN;
    r.coeffs.resize(depth, Rat(0));
    for (int k = 0; k < depth; ++k) {
        Rat lead = pochhammerFalling(n, k) * betaCoeff(k);
        if (lead.isZero()) continue;
        HalfLaurent plus = shiftedPower(twiceN - 2 * k, Rat(1, 2), depth - k);
        HalfLaurent minus = shiftedPower(twiceN - 2 * k, Rat(-1, 2), depth - k);
        for (int j = 0; j + k < depth; ++j)
            r.coeffs[j + k] += lead * (plus.coeffs[j] - minus.coeffs[j]);
    }
    return r;
}

}  // namespace qmh
