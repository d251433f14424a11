#pragma once

#include "qmh/cumulants.hpp"
#include "qmh/gevrey.hpp"
#include "qmh/pipoly.hpp"
#include "qmh/rat.hpp"

#include <string>
#include <vector>

namespace qmh {

/* Masur-Veech volumes and area Siegel-Veech constants of the principal
 * stratum, assembled from the one-variable cumulant series; no geometric
 * input beyond the two closed conversion formulas. */
struct StratumResult {
    int genus = 0;
    int n = 0;              // 2g - 2
    PiPoly vol;             // exact multiple of pi^{2g}
    PiPoly volEMZ;          // (4n+2) * vol
    Rat cAreaTimesPi2Over3; // (pi^2/3) c_area, a rational
    Rat svLeading;          // c^0_{-1}(Tr^n)_L
};

StratumResult principal_volume(int genus);

// (pi^2/3) c_area as an exact rational; c_area itself is this times 3/pi^2
Rat c_area_rational(int genus);

// c^0_{-1}(Tr^n)_L = -(1/24) (n!/2^n) kappa_n
Rat sv_leading(int n);

// leading X-coefficient of c^0_p(Tr^n) for odd p >= 1, two routes compared
Rat sv_leading_p(int n, long p);
Rat sv_leading_p_bernoulli(int n, long p);  // the explicit double-sum route

struct AsymptoticReport {
    std::vector<double> ratios;   // exact / asymptotic partial sum at sampled indices
    double extrapolated = 0;      // after Richardson extrapolation (depth 3)
    double subleading = 0;        // recovered first subleading coefficient
    double subleadingTarget = 0;  // the closed-form target value
    bool leadingOk = false;
    bool subleadingOk = false;
};

// kind: "vn", "carea", "volume"
AsymptoticReport asymptotic_report(const std::string& kind, int maxIndex);

/* The symbolic asymptotic expansion of b_m(h) = [u^{2h}] (4u)^{m/2} frakB_{m/2}(X(u)),
 * produced by chaining the Gevrey-2 engine through the reversion x(w) of
 * w = x frakb_{1/2}(x)^{-4}.  Returned in the (2h)!-normalized form
 * b_m(h) ~ (2h)! (-4/pi^2)^h h^gamma 2^{1/2} pi^{-1/2} (A_0 + A_1/h + ...). */
AsyExpansion bm_expansion(int m, int R);

}  // namespace qmh
