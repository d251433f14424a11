#include "qmh/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace qmh {

namespace {

std::mutex cacheMutex;
std::vector<Rat> bCache;     // B_0, B_1, ...
std::vector<Rat> betaCache;  // beta_0, beta_1, ...

void extendBernoulli(int k) {
    // sum_{j=0}^{m} C(m+1,j) B_j = 0 for m >= 1
    if (bCache.empty()) bCache.push_back(Rat(1));
    for (int m = static_cast<int>(bCache.size()); m <= k; ++m) {
        Rat s(0);
        for (int j = 0; j < m; ++j) s += Rat(binomialInt(m + 1, j)) * bCache[j];
        bCache.push_back(-s / Rat(binomialInt(m + 1, m)));
    }
}

void extendBeta(int k) {
    // divide z/2 by sinh(z/2): with s_m = [z^m] sinh(z/2) = 1/(2^m m!) for m odd,
    // beta solves sum_{j} beta_j s_{m+1-j} = [m == 0] / 2
    int old = static_cast<int>(betaCache.size());
    if (old > k) return;
    betaCache.resize(k + 1, Rat(0));
    auto sinhCoeff = [](int m) {  // [z^m] sinh(z/2)
        if (m % 2 == 0) return Rat(0);
        return Rat(Int(1), powInt(2, m) * factorial(m));
    };
    for (int m = old; m <= k; ++m) {
        Rat rhs = (m == 0) ? Rat(1, 2) : Rat(0);
        for (int j = 0; j < m; ++j) {
            if (betaCache[j].isZero()) continue;
            rhs -= betaCache[j] * sinhCoeff(m + 1 - j);
        }
        betaCache[m] = rhs / sinhCoeff(1);
    }
}

}  // namespace

const Rat& bernoulliB(int k) {
    if (k < 0) throw std::domain_error("bernoulliB: negative index");
    std::lock_guard<std::mutex> lock(cacheMutex);
    extendBernoulli(k);
    return bCache[k];
}

const Rat& betaCoeff(int k) {
    if (k < 0) throw std::domain_error("betaCoeff: negative index");
    std::lock_guard<std::mutex> lock(cacheMutex);
    extendBeta(k);
    return betaCache[k];
}

Rat betaCoeffViaBernoulli(int k) {
    if (k == 0) return Rat(1);
    return (Rat(Int(1), powInt(2, k - 1)) - Rat(1)) * bernoulliB(k) / Rat(factorial(k));
}

Rat zetaNegInt(int p) {
    if (p < 0) throw std::domain_error("zetaNegInt: need p >= 0");
    if (p == 0) return Rat(-1, 2);
    return -bernoulliB(p + 1) / Rat(p + 1);
}

PiPoly zetaEven(int l) {
    if (l <= 0) throw std::domain_error("zetaEven: need l >= 1");
    // zeta(2l) = (-1)^{l+1} B_{2l} (2 pi)^{2l} / (2 (2l)!)
    Rat c = bernoulliB(2 * l) * Rat(powInt(2, 2 * l), 2 * factorial(2 * l));
    if (l % 2 == 0) c = -c;
    return PiPoly::piSquaredPow(l, c);
}

Rat sigmaPower(long d, long p) {
    if (d <= 0) throw std::domain_error("sigmaPower: need d >= 1");
    Rat s(0);
    for (long e = 1; e * e <= d; ++e) {
        if (d % e != 0) continue;
        s += powRat(e, p);
        long f = d / e;
        if (f != e) s += powRat(f, p);
    }
    return s;
}

QSeries sigmaSeries(long p, int order) {
    QSeries s(order);
    for (long d = 1; d <= order; ++d) s.set(static_cast<int>(d), sigmaPower(d, p));
    return s;
}

}  // namespace qmh
