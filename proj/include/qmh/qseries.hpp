#pragma once

#include "qmh/rat.hpp"

#include <algorithm>
#include <vector>

namespace qmh {

/* Truncated power series over Rat.  A QSeries of order N carries exact
 * coefficients of q^0..q^N and knows nothing beyond; every binary
 * operation propagates the minimum of the two orders.  Accessing a
 * coefficient beyond the order throws instead of returning 0 -- silent
 * zero-extension is how series code rots. */
class QSeries {
public:
    QSeries() : c_(1, Rat(0)) {}
    explicit QSeries(int order) : c_(checkOrder(order) + 1, Rat(0)) {}
    QSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("QSeries: empty coefficient vector");
    }

    static QSeries zero(int order) { return QSeries(order); }
    static QSeries one(int order) {
        QSeries s(order);
        s.c_[0] = Rat(1);
        return s;
    }
    // c * q^k
    static QSeries monomial(const Rat& c, int k, int order) {
        QSeries s(order);
        if (k <= order) s.c_[k] = c;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const Rat& at(int n) const {
        if (n < 0 || n > order()) throw std::out_of_range("QSeries: coefficient beyond truncation order");
        return c_[n];
    }
    void set(int n, const Rat& v) {
        if (n < 0 || n > order()) throw std::out_of_range("QSeries: coefficient beyond truncation order");
        c_[n] = v;
    }

    QSeries truncated(int newOrder) const {
        if (newOrder > order()) throw std::out_of_range("QSeries: cannot extend truncation order");
        return QSeries(std::vector<Rat>(c_.begin(), c_.begin() + newOrder + 1));
    }

    bool isZero() const {
        for (auto& c : c_) if (!c.isZero()) return false;
        return true;
    }
    // index of first nonzero coefficient, -1 if none within the order
    int valuation() const {
        for (int n = 0; n <= order(); ++n) if (!c_[n].isZero()) return n;
        return -1;
    }

    QSeries operator-() const {
        QSeries r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        int N = std::min(a.order(), b.order());
        QSeries r(N);
        for (int n = 0; n <= N; ++n) r.c_[n] = a.c_[n] + b.c_[n];
        return r;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }
    friend QSeries operator*(const Rat& a, const QSeries& b) {
        QSeries r = b;
        for (auto& c : r.c_) c = a * c;
        return r;
    }
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        int N = std::min(a.order(), b.order());
        QSeries r(N);
        for (int i = 0; i <= N; ++i) {
            if (a.c_[i].isZero()) continue;
            for (int j = 0; i + j <= N; ++j) {
                if (b.c_[j].isZero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

    friend bool operator==(const QSeries& a, const QSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    // a/b where b has an invertible constant term
    friend QSeries operator/(const QSeries& a, const QSeries& b) {
        if (b.c_[0].isZero()) throw std::domain_error("QSeries: division by series with zero constant term");
        int N = std::min(a.order(), b.order());
        QSeries r(N);
        for (int n = 0; n <= N; ++n) {
            Rat s = a.c_[n];
            for (int k = 1; k <= n; ++k) s -= b.c_[k] * r.c_[n - k];
            r.c_[n] = s / b.c_[0];
        }
        return r;
    }

    // q d/dq
    QSeries thetaDerivative() const {
        QSeries r(order());
        for (int n = 0; n <= order(); ++n) r.c_[n] = Rat(n) * c_[n];
        return r;
    }
    // d/dq (loses one order)
    QSeries derivative() const {
        if (order() == 0) return QSeries(0);
        QSeries r(order() - 1);
        for (int n = 1; n <= order(); ++n) r.c_[n - 1] = Rat(n) * c_[n];
        return r;
    }
    QSeries shift(int k) const {  // multiply by q^k
        QSeries r(order());
        for (int n = 0; n + k <= order(); ++n) r.c_[n + k] = c_[n];
        return r;
    }

    const std::vector<Rat>& coeffs() const { return c_; }

private:
    static int checkOrder(int order) {
        if (order < 0) throw std::invalid_argument("QSeries: negative truncation order");
        return order;
    }
    std::vector<Rat> c_;
};

QSeries series_mul(const QSeries& a, const QSeries& b);

// compose f(g(x)); requires g(0) = 0
QSeries series_compose(const QSeries& f, const QSeries& g);

// functional inverse of f = c1 x + O(x^2), c1 != 0
QSeries series_reverse(const QSeries& f);

// f^lambda for f = 1 + O(x) and rational lambda, via the exact ODE recurrence
QSeries series_pow(const QSeries& f, const Rat& lambda);

/// partition generating function 1/(q)_inf = sum p(d) q^d
QSeries partition_function_series(int order);

}  // namespace qmh
