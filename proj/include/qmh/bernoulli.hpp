#pragma once

#include "qmh/pipoly.hpp"
#include "qmh/qseries.hpp"
#include "qmh/rat.hpp"

namespace qmh {

/* Bernoulli numbers B_k (B_1 = -1/2 convention) and the coefficients
 * beta_k of (z/2)/sinh(z/2).  Both caches are filled before any parallel
 * section and are read-only afterwards. */
const Rat& bernoulliB(int k);

// beta_k from B(z) = (z/2)/sinh(z/2) by direct series division
const Rat& betaCoeff(int k);

// independent derivation used as a self-test: beta_k = (2^{1-k}-1) B_k / k!
Rat betaCoeffViaBernoulli(int k);

// zeta(-p) = -B_{p+1}/(p+1) for integer p >= 0
Rat zetaNegInt(int p);

// zeta(2l) as an exact element of Q[pi^2]
PiPoly zetaEven(int l);

// sigma_p(d) = sum_{e | d} e^p, exact for any integer p (negative allowed)
Rat sigmaPower(long d, long p);

// sum_{d<=order} sigma_p(d) q^d
QSeries sigmaSeries(long p, int order);

}  // namespace qmh
