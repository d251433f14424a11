#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmh {

using Int = mpz_class;

/* Exact rational numbers, always kept in lowest terms with positive
 * denominator.  Every computation in this library that is not explicitly
 * a float comparison goes through this type: no rounding, ever. */
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    Rat(long long n) : v_() { v_ = Int(static_cast<long>(n)); }
    Rat(int n) : v_(n) {}
    Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // parses "a/b" or "a"
    static Rat parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rat: bad literal " + s);
        q.canonicalize();
        return Rat(q);
    }

    const Int num() const { return v_.get_num(); }
    const Int den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool isZero() const { return v_ == 0; }
    bool isInteger() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { Rat r; r.v_ = -v_; return r; }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.isZero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { Rat r; r.v_ = ::abs(v_); return r; }

    Rat pow(long e) const {
        if (e == 0) return Rat(1);
        if (isZero()) {
            if (e < 0) throw std::domain_error("Rat: 0^negative");
            return Rat(0);
        }
        mpq_class b = v_;
        bool inv = e < 0;
        unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), b.get_num().get_mpz_t(), k);
        mpz_pow_ui(den.get_mpz_t(), b.get_den().get_mpz_t(), k);
        return inv ? Rat(den, num) : Rat(num, den);
    }

    // canonical "num/den" (or "num" if integral); byte-stable across platforms
    std::string str() const {
        if (isInteger()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    double toDouble() const { return v_.get_d(); }

    size_t hash() const {
        size_t h = 1469598103934665603ull;
        auto mix = [&h](const Int& z) {
            h ^= static_cast<size_t>(mpz_fdiv_ui(z.get_mpz_t(), 1000000007ul)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h ^= static_cast<size_t>(sgn(z) + 2);
        };
        mix(v_.get_num());
        mix(v_.get_den());
        return h;
    }

private:
    mpq_class v_;
};

inline Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int binomialInt(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// binomial(e, k) for arbitrary rational (or negative integer) e
inline Rat binomialRat(const Rat& e, long k) {
    if (k < 0) return Rat(0);
    Rat r(1);
    for (long j = 0; j < k; ++j) r *= (e - Rat(j)) / Rat(j + 1);
    return r;
}

// descending Pochhammer (e)_k = e(e-1)...(e-k+1)
inline Rat pochhammerFalling(const Rat& e, long k) {
    Rat r(1);
    for (long j = 0; j < k; ++j) r *= e - Rat(j);
    return r;
}

inline Int powInt(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// b^e for integer b and integer exponent of either sign (exact rational)
inline Rat powRat(long b, long e) { return Rat(b).pow(e); }

// (2n-1)!! with the conventions (-1)!! = 1, (-3)!! = -1
inline Rat oddDoubleFactorial(long m) {
    if (m == -1) return Rat(1);
    if (m == -3) return Rat(-1);
    if (m < 0 || m % 2 == 0) throw std::domain_error("oddDoubleFactorial: bad argument");
    Int r(1);
    for (long j = 1; j <= m; j += 2) r *= j;
    return Rat(r);
}

}  // namespace qmh
