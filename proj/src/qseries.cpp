#include "qmh/qseries.hpp"

namespace qmh {

QSeries series_mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries series_compose(const QSeries& f, const QSeries& g) {
    if (!g.at(0).isZero()) throw std::domain_error("series_compose: inner series must vanish at 0");
    int N = std::min(f.order(), g.order());
    // Horner from the top coefficient down
    QSeries r = QSeries::monomial(f.at(std::min(N, f.order())), 0, N);
    r = QSeries::zero(N);
    for (int k = N; k >= 0; --k) {
        r = r * g.truncated(N);
        r = r + QSeries::monomial(f.at(k), 0, N);
    }
    return r;
}

QSeries series_reverse(const QSeries& f) {
    int N = f.order();
    if (N < 1 || !f.at(0).isZero() || f.at(1).isZero())
        throw std::domain_error("series_reverse: need f = c1 x + O(x^2) with c1 != 0");
    // Lagrange inversion: n [x^n] g = [x^{n-1}] (x/f)^n
    QSeries xOverF(N - 1);
    for (int n = 0; n <= N - 1; ++n) xOverF.set(n, f.at(n + 1));
    QSeries inv = QSeries::one(N - 1) / xOverF;  // (x/f) as a series in x
    QSeries g(N);
    QSeries p = QSeries::one(N - 1);
    for (int n = 1; n <= N; ++n) {
        p = p * inv;
        g.set(n, p.at(n - 1) / Rat(n));
    }
    return g;
}

QSeries series_pow(const QSeries& f, const Rat& lambda) {
    if (!(f.at(0) == Rat(1))) throw std::domain_error("series_pow: need constant term 1");
    int N = f.order();
    // g = f^lambda solves g' f = lambda f' g;   n g_n = sum_{k=1}^n (lambda k - (n-k)) f_k g_{n-k}
    QSeries g(N);
    g.set(0, Rat(1));
    for (int n = 1; n <= N; ++n) {
        Rat s(0);
        for (int k = 1; k <= n; ++k) {
            if (f.at(k).isZero()) continue;
            s += (lambda * Rat(k) - Rat(n - k)) * f.at(k) * g.at(n - k);
        }
        g.set(n, s / Rat(n));
    }
    return g;
}

QSeries partition_function_series(int order) {
    // Euler: (q)_inf = sum_k (-1)^k q^{k(3k-1)/2}, then invert
    QSeries euler = QSeries::zero(order);
    euler.set(0, Rat(1));
    for (long k = 1;; ++k) {
        long e1 = k * (3 * k - 1) / 2, e2 = k * (3 * k + 1) / 2;
        if (e1 > order && e2 > order) break;
        Rat s = (k % 2 == 0) ? Rat(1) : Rat(-1);
        if (e1 <= order) euler.set(e1, euler.at(e1) + s);
        if (e2 <= order) euler.set(e2, euler.at(e2) + s);
    }
    return QSeries::one(order) / euler;
}

}  // namespace qmh
