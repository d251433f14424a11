#pragma once

#include "qmh/pipoly.hpp"
#include "qmh/rat.hpp"

#include <string>

namespace qmh {

/* Fixed-precision binary floats (mantissa * 2^exp, 256-bit mantissa).
 * Exact rationals are converted to this type only at the final comparison
 * step of asymptotic checks; all upstream arithmetic stays exact. */
class BigFloat {
public:
    static constexpr int kPrecision = 256;

    BigFloat() : m_(0), e_(0) {}
    explicit BigFloat(long v) : m_(v), e_(0) { normalize(); }
    explicit BigFloat(const Int& v) : m_(v), e_(0) { normalize(); }
    static BigFloat fromRat(const Rat& r);
    static BigFloat fromDouble(double d);

    static const BigFloat& pi();

    bool isZero() const { return m_ == 0; }
    int sign() const { return sgn(m_); }

    BigFloat operator-() const;
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend bool operator<(const BigFloat& a, const BigFloat& b);
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }

    BigFloat abs() const;
    BigFloat sqrt() const;  // requires nonnegative value
    BigFloat powInt(long e) const;

    double toDouble() const;
    std::string str() const;  // decimal, for diagnostics

private:
    void normalize();
    Int m_;
    long e_;
};

// evaluate an exact Q[pi^2] element numerically
BigFloat evalPi(const PiLaurent& p);

}  // namespace qmh
