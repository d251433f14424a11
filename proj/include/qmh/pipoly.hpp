#pragma once

#include "qmh/rat.hpp"

#include <map>
#include <sstream>

namespace qmh {

/* Laurent polynomials in the formal symbol pi^2.  Exponent k stands for
 * pi^{2k}; negative k is allowed (needed for 1/pi^2 factors in Gevrey
 * normalizations and for c_area).  PiPoly below restricts to k >= 0. */
class PiLaurent {
public:
    PiLaurent() {}
    PiLaurent(const Rat& c) {
        if (!c.isZero()) c_[0] = c;
    }
    PiLaurent(long n) : PiLaurent(Rat(n)) {}
    PiLaurent(int n) : PiLaurent(Rat(n)) {}

    static PiLaurent piSquaredPow(int k, const Rat& c = Rat(1)) {
        PiLaurent p;
        if (!c.isZero()) p.c_[k] = c;
        return p;
    }

    const std::map<int, Rat>& coeffs() const { return c_; }
    bool isZero() const { return c_.empty(); }
    bool isRational() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
    Rat rationalPart() const {
        auto it = c_.find(0);
        return it == c_.end() ? Rat(0) : it->second;
    }
    // lowest and highest pi^2-exponents present (0 if zero)
    int minExp() const { return c_.empty() ? 0 : c_.begin()->first; }
    int maxExp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    Rat coeff(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Rat(0) : it->second;
    }

    PiLaurent operator-() const {
        PiLaurent r;
        for (auto& [k, c] : c_) r.c_[k] = -c;
        return r;
    }
    PiLaurent& operator+=(const PiLaurent& o) {
        for (auto& [k, c] : o.c_) {
            Rat s = coeff(k) + c;
            if (s.isZero()) c_.erase(k); else c_[k] = s;
        }
        return *this;
    }
    PiLaurent& operator-=(const PiLaurent& o) { return *this += -o; }
    friend PiLaurent operator+(PiLaurent a, const PiLaurent& b) { return a += b; }
    friend PiLaurent operator-(PiLaurent a, const PiLaurent& b) { return a -= b; }
    friend PiLaurent operator*(const PiLaurent& a, const PiLaurent& b) {
        PiLaurent r;
        for (auto& [ka, ca] : a.c_)
            for (auto& [kb, cb] : b.c_) {
                Rat s = r.coeff(ka + kb) + ca * cb;
                if (s.isZero()) r.c_.erase(ka + kb); else r.c_[ka + kb] = s;
            }
        return r;
    }
    PiLaurent& operator*=(const PiLaurent& o) { return *this = *this * o; }
    friend PiLaurent operator*(const Rat& a, const PiLaurent& b) { return PiLaurent(a) * b; }

    // division only by monomials c*pi^{2k}
    friend PiLaurent operator/(const PiLaurent& a, const PiLaurent& b) {
        if (b.c_.size() != 1) throw std::domain_error("PiLaurent: can only divide by a monomial");
        auto [kb, cb] = *b.c_.begin();
        PiLaurent r;
        for (auto& [k, c] : a.c_) r.c_[k - kb] = c / cb;
        return r;
    }

    friend bool operator==(const PiLaurent& a, const PiLaurent& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PiLaurent& a, const PiLaurent& b) { return !(a == b); }

    // "3/4 * pi^6 - 1/2" style; deterministic ordering (descending powers)
    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            Rat c = it->second;
            if (!first) {
                os << (c.sign() < 0 ? " - " : " + ");
                if (c.sign() < 0) c = -c;
            }
            if (it->first == 0) os << c.str();
            else {
                if (!(c == Rat(1))) os << c.str() << " * ";
                os << "pi^" << 2 * it->first;
            }
            first = false;
        }
        return os.str();
    }

private:
    std::map<int, Rat> c_;  // exponent of pi^2 -> coefficient, no zero entries
};

/// element of Q[pi^2]
class PiPoly : public PiLaurent {
public:
    PiPoly() {}
    PiPoly(const Rat& c) : PiLaurent(c) {}
    PiPoly(long n) : PiLaurent(n) {}
    PiPoly(int n) : PiLaurent(n) {}
    explicit PiPoly(const PiLaurent& l) : PiLaurent(l) {
        if (!l.isZero() && l.minExp() < 0) throw std::domain_error("PiPoly: negative pi^2 power");
    }
    static PiPoly piSquaredPow(int k, const Rat& c = Rat(1)) {
        if (k < 0) throw std::domain_error("PiPoly: negative pi^2 power");
        return PiPoly(PiLaurent::piSquaredPow(k, c));
    }
};

}  // namespace qmh
