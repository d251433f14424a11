#pragma once

#include "qmh/halflaurent.hpp"
#include "qmh/pipoly.hpp"
#include "qmh/qseries.hpp"
#include "qmh/quasimod.hpp"
#include "qmh/ssring.hpp"

#include <map>
#include <vector>

namespace qmh {

// dense polynomial in one formal variable (u, X or 1/h depending on context)
using UPoly = QSeries;

/* Truncated polynomials in u_1..u_M, y and X.  The u-monomial u^a carries
 * the modular weight K(a) = sum (l+1) a_l; terms beyond the stated bounds
 * are dropped on construction and multiplication. */
class MultiUSeries {
public:
    struct Mono {
        std::vector<int> u;  // exponent of u_{i+1} at index i, trailing zeros stripped
        int y = 0;
        int x = 0;
        bool operator<(const Mono& o) const {
            if (u != o.u) return u < o.u;
            if (y != o.y) return y < o.y;
            return x < o.x;
        }
        bool operator==(const Mono& o) const { return u == o.u && y == o.y && x == o.x; }
    };

    MultiUSeries(int maxUWeight, int maxY, int maxX)
        : maxUW_(maxUWeight), maxY_(maxY), maxX_(maxX) {}

    static int uWeight(const std::vector<int>& u) {
        int w = 0;
        for (size_t i = 0; i < u.size(); ++i) w += static_cast<int>(i + 2) * u[i];
        return w;
    }

    int maxUWeight() const { return maxUW_; }
    int maxY() const { return maxY_; }
    int maxX() const { return maxX_; }
    const std::map<Mono, Rat>& coeffs() const { return c_; }
    bool isZero() const { return c_.empty(); }
    Rat coeff(const Mono& m) const {
        auto it = c_.find(m);
        return it == c_.end() ? Rat(0) : it->second;
    }

    void add(Mono m, const Rat& c);
    MultiUSeries operator-() const;
    friend MultiUSeries operator+(const MultiUSeries& a, const MultiUSeries& b);
    friend MultiUSeries operator-(const MultiUSeries& a, const MultiUSeries& b);
    friend MultiUSeries operator*(const MultiUSeries& a, const MultiUSeries& b);
    friend MultiUSeries operator*(const Rat& a, const MultiUSeries& b);
    friend bool operator==(const MultiUSeries& a, const MultiUSeries& b) { return a.c_ == b.c_; }

    MultiUSeries dY() const;
    MultiUSeries integrateY() const;  // from 0
    // exp of a series with all terms of positive u-weight
    MultiUSeries expSeries() const;

private:
    int maxUW_, maxY_, maxX_;
    std::map<Mono, Rat> c_;
};

/* B(u, y, X) of the Gaussian-integral representation, computed both from
 * the raw multi-index definition and from the Lagrange form
 * int_0^y T + sum beta_k T^{(k-1)} X^{k/2} with T = U(y+T); the two
 * constructions are compared and a mismatch throws. */
MultiUSeries calB(int maxUWeight, int maxY, int maxX, int numVars = 6);

// the formal Gaussian functional: J[y^n] = (-1)^{n/2} (n-1)!! (n even), 0 (n odd)
Rat gauss_functional_moment(int n);
MultiUSeries gauss_functional(const MultiUSeries& f);

// Phi(u)_X = J[e^B]; coefficient of u^a is evX<prod p^a>/a!
MultiUSeries phi_X(int maxUWeight, int numVars = 6);

// connected bracket as a q-series: Moebius sum over set partitions of the arguments
QSeries connected_qbracket(const std::vector<SSPoly>& fs, int order);

struct ConnectedBracket {
    std::vector<SSPoly> args;
    QSeries series;      // connected q-bracket
    QuasiModForm form;   // recognized
    GrowthPoly growth;   // evX image
    Rat leading;         // coefficient of X^{1 - s + K/2}
    int degreeBound = 0; // 1 - s + K/2
};
ConnectedBracket connected_bracket_full(const std::vector<SSPoly>& fs, int order);

// rational cumulant <<l_1,...,l_s>>_Q (cached, symmetric in the indices)
Rat rational_cumulant(const std::vector<long>& ls);

// pi-form (-4 pi^2)^{1 + sum(l_i - 1)/2} <<...>>_Q; zero when the total weight is odd
PiPoly cumulant_pi_form(const std::vector<long>& ls);

/* mixed leading coefficients: <f_{B_1}|...|f_{B_s}>_L for f_B = prod_{b in B} p_{l_b},
 * via the complementary-partition expansion into rational cumulants */
Rat mixed_leading(const std::vector<long>& ls, const SetPartition& beta);
// direct route (connected bracket of the block products, recognized) for cross-checks
Rat mixed_leading_direct(const std::vector<long>& ls, const SetPartition& beta, int order);

struct PsiRoutes {
    UPoly stationary;  // B(u, y0) + y0^2/2
    UPoly asSum;       // Prop. "psi as a sum" route
    UPoly fromXu;      // assembled from v_n = [u^{n+1}] X(u) / (4n+2)
};
// psi(u) = sum v_n u^n computed by all three routes; throws if they disagree
UPoly psi_L_onevar(int order);
PsiRoutes psi_L_routes(int order);

/* X(u) = 1/(4u) - u/12 + ..., odd Laurent series in u defined by
 * frakB_{1/2}(X(u)) = 1/(2 sqrt u).  Computed through the even variable
 * w = 16u^2 by series reversion. */
struct XofU {
    std::vector<Rat> oddCoeffs;  // coefficient of u^{2j-1} at index j (j = 0 is the 1/(4u) term)
    Rat coeffAt(int exponent) const;  // exponent must be odd (or -1)
    Rat vn(int n) const;              // v_n = coeff(u^{n+1}) / (4n+2)
};
XofU X_of_u(int order);

// even series (4u)^{m/2} frakB_{m/2}(X(u)) = sum_h b_m(h) u^{2h}; m >= -1
QSeries bmSeries(int m, int halfOrder);

// psi_k(u) = sum_n v_{n,k} u^n via the binomial/frakB formula; negative powers must cancel
UPoly psi_k(int k, int order);

// K(u) = sum kappa_n u^n = (2 sqrt u)^{-1} frakB_{-1/2}(X(u))
UPoly K_series(int order);

// v_{n,k} extracted from psi_k
Rat v_nk(int n, int k);

}  // namespace qmh
