#pragma once

#include "qmh/bigfloat.hpp"
#include "qmh/pipoly.hpp"
#include "qmh/qseries.hpp"
#include "qmh/rat.hpp"

#include <vector>

namespace qmh {

/* 1/n-expansions n^{gamma0} (c_0 + c_1/n + c_2/n^2 + ...), the symbolic
 * currency of the Gevrey-2 calculus.  Coefficients live in Q[pi^2] extended
 * by 1/pi^2. */
struct Ladder {
    Rat gamma0;
    std::vector<PiLaurent> c;

    int order() const { return static_cast<int>(c.size()) - 1; }
    static Ladder zero(const Rat& gamma, int order) {
        return Ladder{gamma, std::vector<PiLaurent>(order + 1)};
    }
    bool isZero() const;
};

// (n+s)^e as a ladder of given order
Ladder ladderPowerShifted(const Rat& e, const Rat& s, int order);
// product (same length), pointwise sum with integer gamma alignment, scaling
Ladder ladderMul(const Ladder& a, const Ladder& b);
Ladder ladderAdd(const Ladder& a, const Ladder& b);
Ladder ladderScale(const PiLaurent& s, const Ladder& a);

/* Asymptotic expansion  a_n ~ n!^2 beta^n n^gamma * pref * sum A_i n^{-i},
 * with pref = 2^{pref2/2} * pi^{-prefInvSqrtPi/2} kept outside the
 * coefficient ring (so half-powers of 2 and pi never contaminate the A_i).
 * A_0 may vanish: the classes are vector spaces. */
struct AsyExpansion {
    PiLaurent beta;
    Rat gamma;
    int pref2 = 0;
    int prefInvSqrtPi = 0;
    std::vector<PiLaurent> A;

    int order() const { return static_cast<int>(A.size()) - 1; }
    bool isIdenticallyZero() const;
    static AsyExpansion zero(int order) {
        AsyExpansion e;
        e.beta = PiLaurent(Rat(1));
        e.A.assign(order + 1, PiLaurent());
        return e;
    }
};

/// exact Taylor prefix + asymptotic expansion of its coefficients
struct GevreyFn {
    QSeries taylor;
    AsyExpansion asy;
};

// product f*g: "first + last" boundary sums, middle dropped (Gevrey-2)
AsyExpansion gv_mul(const GevreyFn& f, const GevreyFn& g, int R);

// coefficients of f^lambda for f = 1 + O(x)
AsyExpansion gv_pow(const GevreyFn& f, const Rat& lambda, int R);

// coefficients of g(x f(x)) for f = 1 + O(x)
AsyExpansion gv_compose(const GevreyFn& g, const GevreyFn& f, int R);

// coefficients of the functional inverse of h = x - c x^{r+1} f(x)
AsyExpansion gv_inverse(const GevreyFn& h, int R);

/* Uniform bounds for powers: |a_n| <= n!^alpha implies
 * |a_n^(k)| <= C(alpha)^{k-1} n!^alpha and, for alpha = 2,
 * |a_n^(k)| <= (n+k-1)! n!/(k-1)!.  The symbolic engine is alpha = 2 only;
 * the bound check also covers other integer alpha >= 1. */
bool power_bound_check(const QSeries& f, int kmax, int nmax, int alpha = 2);
// C(alpha) = max_n sum_m binom(n,m)^{-alpha}, exactly (C(1) = 8/3, C(2) = 9/4)
Rat powerBoundConstant(int nmax, int alpha = 2);

struct ValidationReport {
    std::vector<double> ratios;      // a_n / (n!^2 beta^n n^gamma pref * partial sum)
    double finalRatio = 0;           // after one Richardson step
    bool ok = false;                 // |finalRatio - 1| below tolerance
};
ValidationReport validate_asy(const GevreyFn& f, int depth, double tolerance = 1e-3);

/* Expansion of u_h = u_{h+1}/u_h-determined sequences: given the exact
 * ratio num(h)/den(h) (equal-degree polynomials with equal lead), find
 * gamma and the normalized ladder (c_0 = 1) with u_h ~ h^gamma(1 + ...). */
Ladder ladderFromRatio(const std::vector<Rat>& num, const std::vector<Rat>& den, int order);

/* Seed for the series frakb_n(x) = sum_h (n)_{2h} beta_{2h} x^h (n = twiceN/2):
 * its coefficients lie in Gevrey class 2 with beta = -1/pi^2.  For integer n
 * the expansion is identically zero (the series is a polynomial). */
AsyExpansion bnSmallAsy(long twiceN, int order);

// the central-binomial ladder S(h) with C(2h,h) = 4^h (pi h)^{-1/2} S(h)
Ladder centralBinomialLadder(int order);

/* Re-express a_h ~ n!^2-normalized expansion in the (2h)!-normalized form
 * a_h ~ (2h)! betaOut^h h^gammaOut * 2^{p2/2} pi^{-pPi/2} sum A_i h^{-i}. */
AsyExpansion toTwoHNormalization(const AsyExpansion& e, int order);

// expansion of b_n := a_{n+s} (either sign of s)
AsyExpansion asyShifted(const AsyExpansion& e, long s, int order);

// expansion of b_n := s^n a_n
AsyExpansion asyRescaled(const AsyExpansion& e, const Rat& s);

}  // namespace qmh
