#pragma once

#include "qmh/partitions.hpp"
#include "qmh/qseries.hpp"
#include "qmh/quasimod.hpp"
#include "qmh/rat.hpp"

#include <functional>
#include <map>
#include <vector>

namespace qmh {

/* The shifted-symmetric ring R = Q[Q_1, Q_2, ...], with Q_k of weight k.
 * A monomial is keyed by its exponent vector (index k-1 holds the exponent
 * of Q_k).  Q_0 = 1 is not a generator; Q_1 vanishes identically on
 * partitions but is kept as a formal generator since the derivations
 * produce it. */
class SSPoly {
public:
    using Key = std::vector<int>;  // exponent of Q_{i+1} at index i, trailing zeros stripped

    SSPoly() {}
    SSPoly(const Rat& c) {
        if (!c.isZero()) c_[{}] = c;
    }
    static SSPoly generatorQ(int k, const Rat& coeff = Rat(1));  // Q_k, k >= 0 (k=0 gives the constant 1)
    static SSPoly generatorP(int l);                             // p_l = l! Q_{l+1}
    static SSPoly monomialFromKey(const Key& key, const Rat& coeff);

    const std::map<Key, Rat>& coeffs() const { return c_; }
    bool isZero() const { return c_.empty(); }
    Rat coeff(const Key& k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Rat(0) : it->second;
    }
    static int keyWeight(const Key& k) {
        int w = 0;
        for (size_t i = 0; i < k.size(); ++i) w += static_cast<int>(i + 1) * k[i];
        return w;
    }
    // largest monomial weight present (0 for constants)
    int weight() const;
    bool isPureWeight(int* weightOut = nullptr) const;
    int maxGenerator() const;

    SSPoly operator-() const;
    SSPoly& operator+=(const SSPoly& o);
    SSPoly& operator-=(const SSPoly& o) { return *this += -o; }
    friend SSPoly operator+(SSPoly a, const SSPoly& b) { return a += b; }
    friend SSPoly operator-(SSPoly a, const SSPoly& b) { return a -= b; }
    friend SSPoly operator*(const SSPoly& a, const SSPoly& b);
    friend SSPoly operator*(const Rat& a, const SSPoly& b);
    friend bool operator==(const SSPoly& a, const SSPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const SSPoly& a, const SSPoly& b) { return !(a == b); }

    SSPoly dQ(int k) const;  // d/dQ_k
    std::string str() const;

private:
    void add(const Key& k, const Rat& c);
    std::map<Key, Rat> c_;
};

using PartitionFunctional = std::function<Rat(const Partition&)>;

// P_l(lambda) = sum_{c in C_lambda} sgn(c) c^l
Rat powerSumP(const Partition& lambda, int l);

// Q_k(lambda) = P_{k-1}(lambda)/(k-1)! + beta_k  (Q_0 = 1)
Rat evalQk(const Partition& lambda, int k);

Rat ss_eval(const SSPoly& f, const Partition& lambda);

// <f>_q to order N: (sum_{|lambda|<=N} f(lambda) q^|lambda|) / (q)_inf^{-1}-normalization
QSeries qbracket(const SSPoly& f, int order);
QSeries qbracket(const PartitionFunctional& f, int order);

// sum_{|lambda|<=N} f(lambda) q^{|lambda|} without the normalization
QSeries partitionSum(const PartitionFunctional& f, int order);

// derivations: partial (Q_k -> Q_{k-1}), partial_2 (Q_k -> Q_{k-2})
SSPoly op_partial(const SSPoly& f);
SSPoly op_partial2(const SSPoly& f);

// Delta = sum_{k,l>=0} C(k+l,k) Q_{k+l} d^2/dQ_{k+1} dQ_{l+1}
SSPoly op_Delta(const SSPoly& f);

// Euler operator E = sum k Q_k d/dQ_k (grading operator)
SSPoly op_euler(const SSPoly& f);

/* tilde T_p = (p-1)!/2 sum_{k=0}^{p+1} (-1)^k Q_k Q_{p+1-k}; equals
 * T_p + zeta(-p)/2 pointwise on partitions, for odd p >= 1. */
SSPoly Ttilde_p(int p);

// the character polynomials f_k of (6.x) for k-cycles, k <= 5
SSPoly fCyclePoly(int k);

// the homomorphism mu: Q_n -> (1-n)/n! used by the top-coefficient formula
Rat muHomomorphism(const SSPoly& f);

}  // namespace qmh
