#pragma once

#include "qmh/ssring.hpp"

namespace qmh {

/* The operators rho_{i,j} on the shifted-symmetric ring, defined by
 * rho_{i,j} = sum_k Q_k rho^{(k)}_{i,j}(d/dp_1, d/dp_2, ...), where the
 * power series rho^(k) come from the generating identity
 *    sum_k rho^(k)(u) v^k / k! = int_v^{v+1} exp(U(t) - U(t-1)) dt .
 * rho^{(k)}_{i,j} is the part of rho^(k) of degree j and weight i+2j+k
 * (u_l carries weight l+1). */
SSPoly rho_ij(int i, int j, const SSPoly& f);

// same operator computed through the closed correlator formula on a single
// monomial Q_{k1} ... Q_{kn}; must agree with rho_ij
SSPoly rho_ij_correlator(int i, int j, const std::vector<int>& ks);

// <T~_p f> = sum_{i,j} <rho_{i,j}(f)> G^(j)_{p+i+1} checked to q-order N
bool effofTp_check(int p, const SSPoly& f, int order);

struct ModifiedBracket {
    QSeries series;          // <f>* = <T_-1 f> - <T_-1><f> - (1/24)<partial_2 f>
    QuasiModForm form;       // recognized, pure weight wt(f)
    bool rhoDecompositionOk; // matches sum_{i>=2,j} G_i^(j) <rho*_{i,j}(f)>
};
ModifiedBracket modified_bracket_star(const SSPoly& f, int order);

// D^j G_k as a q-series
QSeries eisensteinDerivativeSeries(int k, int j, int order);

// T_p as a partition functional (hook enumeration; works for any integer p)
PartitionFunctional hookMomentFunctional(long p);

}  // namespace qmh
