#include "qmh/bigfloat.hpp"

#include <cmath>
#include <sstream>

namespace qmh {

namespace {
size_t bitLength(const Int& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); }
}

void BigFloat::normalize() {
    if (m_ == 0) {
        e_ = 0;
        return;
    }
    long excess = static_cast<long>(bitLength(m_)) - kPrecision;
    if (excess > 0) {
        // round to nearest by adding half the dropped unit
        Int half = qmh::powInt(Int(2), static_cast<unsigned long>(excess - 1));
        if (sgn(m_) >= 0) m_ += half; else m_ -= half;
        mpz_tdiv_q_2exp(m_.get_mpz_t(), m_.get_mpz_t(), static_cast<mp_bitcnt_t>(excess));
        e_ += excess;
    }
}

BigFloat BigFloat::fromRat(const Rat& r) {
    if (r.isZero()) return BigFloat();
    BigFloat num(r.num());
    BigFloat den(r.den());
    return num / den;
}

BigFloat BigFloat::fromDouble(double d) {
    if (d == 0.0) return BigFloat();
    int exp2 = 0;
    double m = std::frexp(d, &exp2);  // d = m * 2^exp2, 0.5 <= |m| < 1
    long long mi = static_cast<long long>(std::ldexp(m, 62));
    BigFloat r;
    r.m_ = Int(static_cast<long>(mi >> 31)) * qmh::powInt(Int(2), 31) + Int(static_cast<long>(mi & ((1ll << 31) - 1)));
    r.e_ = exp2 - 62;
    r.normalize();
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r = *this;
    r.m_ = -r.m_;
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    BigFloat lo = a, hi = b;
    if (lo.e_ > hi.e_) std::swap(lo, hi);
    long shift = hi.e_ - lo.e_;
    BigFloat r;
    if (shift > BigFloat::kPrecision + 8) return hi;  // the other addend is below the precision floor
    r.m_ = (hi.m_ << static_cast<unsigned long>(shift)) + lo.m_;
    r.e_ = lo.e_;
    r.normalize();
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) { return a + (-b); }

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r;
    r.m_ = a.m_ * b.m_;
    r.e_ = a.e_ + b.e_;
    r.normalize();
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.isZero()) throw std::domain_error("BigFloat: division by zero");
    if (a.isZero()) return BigFloat();
    BigFloat r;
    long shift = 2 * BigFloat::kPrecision + 4;
    Int num = a.m_ << static_cast<unsigned long>(shift);
    r.m_ = num / b.m_;
    r.e_ = a.e_ - b.e_ - shift;
    r.normalize();
    return r;
}

bool operator<(const BigFloat& a, const BigFloat& b) { return (b - a).sign() > 0; }

BigFloat BigFloat::abs() const {
    BigFloat r = *this;
    r.m_ = ::abs(r.m_);
    return r;
}

BigFloat BigFloat::sqrt() const {
    if (sign() < 0) throw std::domain_error("BigFloat: sqrt of negative");
    if (isZero()) return BigFloat();
    // scale mantissa so the exponent is even and the integer sqrt has full precision
    Int m = m_;
    long e = e_;
    long deficit = 2 * kPrecision + 2 - static_cast<long>(bitLength(m));
    if (deficit > 0) {
        if ((e - deficit) % 2 != 0) ++deficit;
        m <<= static_cast<unsigned long>(deficit);
        e -= deficit;
    } else if (e % 2 != 0) {
        m <<= 1;
        --e;
    }
    BigFloat r;
    mpz_sqrt(r.m_.get_mpz_t(), m.get_mpz_t());
    r.e_ = e / 2;
    r.normalize();
    return r;
}

BigFloat BigFloat::powInt(long e) const {
    if (e == 0) return BigFloat(1);
    if (e < 0) return BigFloat(1) / powInt(-e);
    BigFloat base = *this, acc(1);
    long k = e;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

double BigFloat::toDouble() const {
    if (isZero()) return 0.0;
    signed long ex = 0;
    double d = mpz_get_d_2exp(&ex, m_.get_mpz_t());
    return std::ldexp(d, static_cast<int>(ex + e_));
}

std::string BigFloat::str() const {
    std::ostringstream os;
    os.precision(18);
    os << toDouble();
    return os.str();
}

const BigFloat& BigFloat::pi() {
    static const BigFloat value = [] {
        // Machin: pi = 16 atan(1/5) - 4 atan(1/239), summed as exact rationals
        auto atanInv = [](long x, int terms) {
            Rat s(0);
            Rat x2 = Rat(1, x * x);
            Rat p = Rat(1, x);
            for (int k = 0; k < terms; ++k) {
                Rat t = p / Rat(2 * k + 1);
                s += (k % 2 == 0) ? t : -t;
                p *= x2;
            }
            return s;
        };
        // 1/25 per term: > 110 terms gives far more than 256 bits
        Rat approx = Rat(16) * atanInv(5, 120) - Rat(4) * atanInv(239, 60);
        return BigFloat::fromRat(approx);
    }();
    return value;
}

BigFloat evalPi(const PiLaurent& p) {
    BigFloat pi2 = BigFloat::pi() * BigFloat::pi();
    BigFloat s;
    for (auto& [k, c] : p.coeffs()) s = s + BigFloat::fromRat(c) * pi2.powInt(k);
    return s;
}

}  // namespace qmh
