#pragma once

#include "qmh/pipoly.hpp"
#include "qmh/qseries.hpp"
#include "qmh/rat.hpp"

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace qmh {

/* The ring Q[P,Q,R] of quasimodular forms for SL_2(Z), with P = E_2,
 * Q = E_4, R = E_6.  A form is a sparse polynomial keyed by exponent
 * triples (a,b,c); the weight of a monomial is 2a + 4b + 6c. */
class QuasiModForm {
public:
    using Key = std::array<int, 3>;

    QuasiModForm() {}
    QuasiModForm(const Rat& c) {
        if (!c.isZero()) c_[{0, 0, 0}] = c;
    }
    static QuasiModForm monomial(int a, int b, int c, const Rat& coeff = Rat(1)) {
        QuasiModForm f;
        if (!coeff.isZero()) f.c_[{a, b, c}] = coeff;
        return f;
    }
    static QuasiModForm P() { return monomial(1, 0, 0); }
    static QuasiModForm Q() { return monomial(0, 1, 0); }
    static QuasiModForm R() { return monomial(0, 0, 1); }

    const std::map<Key, Rat>& coeffs() const { return c_; }
    bool isZero() const { return c_.empty(); }
    Rat coeff(const Key& k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Rat(0) : it->second;
    }
    static int monomialWeight(const Key& k) { return 2 * k[0] + 4 * k[1] + 6 * k[2]; }
    std::set<int> weightSupport() const;
    bool isPureWeight(int* weightOut = nullptr) const;
    // the piece of given weight
    QuasiModForm gradedPiece(int weight) const;

    QuasiModForm operator-() const;
    QuasiModForm& operator+=(const QuasiModForm& o);
    QuasiModForm& operator-=(const QuasiModForm& o) { return *this += -o; }
    friend QuasiModForm operator+(QuasiModForm a, const QuasiModForm& b) { return a += b; }
    friend QuasiModForm operator-(QuasiModForm a, const QuasiModForm& b) { return a -= b; }
    friend QuasiModForm operator*(const QuasiModForm& a, const QuasiModForm& b);
    friend QuasiModForm operator*(const Rat& a, const QuasiModForm& b);
    friend bool operator==(const QuasiModForm& a, const QuasiModForm& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QuasiModForm& a, const QuasiModForm& b) { return !(a == b); }

    std::string str() const;

private:
    std::map<Key, Rat> c_;  // no zero entries
};

// G_k = -B_k/2k + sum sigma_{k-1}(n) q^n, k >= 2 even
QSeries eisenstein_q(int k, int order);

// G_k as an element of Q[P,Q,R] (k >= 2 even; recognized for k >= 8)
QuasiModForm eisensteinForm(int k);

// q-expansion of a form, with the generator expansions cached
QSeries qmf_to_qseries(const QuasiModForm& f, int order);

// Ramanujan derivation D = q d/dq on the ring
QuasiModForm derive_D(const QuasiModForm& f);

// the degree -2 derivation 12 d/dP
QuasiModForm derive_frakd(const QuasiModForm& f);

// weight operator W (multiplies each pure piece by its weight)
QuasiModForm weightOperator(const QuasiModForm& f);

// Taylor coefficients H_n of theta: H_0 = 1, H_2 = P/24, 4n(n+1)H_n = 8D(H_{n-2}) + P H_{n-2}
QuasiModForm theta_H(int n);

// sum of all coefficients = constant term of the q-expansion
Rat constantTerm(const QuasiModForm& f);

struct GrowthPoly {
    std::vector<Rat> x;             // coefficient of X^j at index j
    std::map<int, PiPoly> hInv;     // evh: exponent m -> coefficient of h^{-m}
    int degree() const;
    Rat xCoeff(int j) const { return j < static_cast<int>(x.size()) ? x[j] : Rat(0); }
};

// the algebra homomorphism P -> X+12, Q -> X^2, R -> X^3 (x part only)
GrowthPoly evX(const QuasiModForm& f);

// evh[F](h) = h^{-k} evX[F](-4 pi^2 / h) for F of pure weight 2k
GrowthPoly evh(const QuasiModForm& f);

struct RecognitionError : std::runtime_error {
    enum Kind { NoSolution, Underdetermined };
    RecognitionError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
    Kind kind;
};

/* Solve for the unique form in Q[P,Q,R] of (mixed or pure) weight
 * <= maxWeight whose q-expansion matches every available coefficient of s.
 * Requires at least `surplus` more coefficients than basis monomials; the
 * surplus rows act as verification that s really is quasimodular. */
QuasiModForm recognize(const QSeries& s, int maxWeight, bool pure, int surplus = 5);

// basis monomials used by recognize, in a fixed deterministic order
std::vector<QuasiModForm::Key> recognitionBasis(int maxWeight, bool pure);

struct CoeffSumReport {
    int power = 0;              // p with evh = A h^{-p} + ...
    PiPoly leading;             // A
    std::vector<double> ratios; // sum_{n<=N} a_n / (A N^p / p!) at sampled N
    bool converging = false;
};
CoeffSumReport coeff_sum_asy_check(const QuasiModForm& f, int nmax);

}  // namespace qmh
