#pragma once

#include "qmh/bernoulli.hpp"
#include "qmh/qseries.hpp"
#include "qmh/rat.hpp"

#include <vector>

namespace qmh {

/* Laurent series X^e (c0 + c1/X + c2/X^2 + ...) with e in (1/2)Z, stored
 * as twiceLead = 2e.  Exponents descend in integer steps from the lead;
 * depth is the number of stored coefficients. */
struct HalfLaurent {
    long twiceLead = 0;        // 2e for the leading exponent e
    std::vector<Rat> coeffs;   // coefficient of X^{e-j} at index j

    int depth() const { return static_cast<int>(coeffs.size()); }
    Rat leadCoeff() const { return coeffs.empty() ? Rat(0) : coeffs.front(); }

    // coefficient of X^{t/2} where t = twiceLead - 2j for some j
    Rat coeffAtTwiceExp(long t) const {
        long diff = twiceLead - t;
        if (diff < 0 || diff % 2 != 0) return Rat(0);
        long j = diff / 2;
        if (j >= depth()) throw std::out_of_range("HalfLaurent: beyond truncation depth");
        return coeffs[static_cast<size_t>(j)];
    }

    friend HalfLaurent operator-(const HalfLaurent& a, const HalfLaurent& b) {
        if (a.twiceLead != b.twiceLead || a.depth() != b.depth())
            throw std::invalid_argument("HalfLaurent: mismatched shape in subtraction");
        HalfLaurent r = a;
        for (int j = 0; j < r.depth(); ++j) r.coeffs[j] -= b.coeffs[j];
        return r;
    }
};

/* frakB_n(X) = sum_k (n)_k beta_k X^{n-k}, a polynomial for n a
 * non-negative integer and a genuinely divergent shifted Laurent series
 * otherwise; we only ever use it formally.  n is passed as 2n (so
 * half-integers stay exact). */
HalfLaurent blaurent_bn(long twiceN, int depth);

/* The even part in the variable x = X^{-2}:
 * frakB_n(X) = X^n frakb_n(x),  frakb_n(x) = sum_h (n)_{2h} beta_{2h} x^h. */
QSeries bnSmallSeries(long twiceN, int order);

// expansion coefficients of (X + c)^{n} for half-integer n, to given depth
HalfLaurent shiftedPower(long twiceN, const Rat& c, int depth);

// coefficients of frakB_n(X + 1/2) - frakB_n(X - 1/2), same shape as blaurent_bn
HalfLaurent bnFunctionalEquationLHS(long twiceN, int depth);

}  // namespace qmh
