#include "qmh/gevrey.hpp"

#include <algorithm>
#include <cmath>

namespace qmh {

namespace {

PiLaurent plPow(const PiLaurent& b, long e) {
    PiLaurent r(Rat(1));
    if (e >= 0) {
        for (long t = 0; t < e; ++t) r *= b;
    } else {
        for (long t = 0; t < -e; ++t) r = r / b;  // monomial division
    }
    return r;
}

std::vector<PiLaurent> convolve(const std::vector<PiLaurent>& a, const std::vector<PiLaurent>& b, int order) {
    std::vector<PiLaurent> r(order + 1);
    for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
        if (a[i].isZero()) continue;
        for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

// multiplicative inverse of a 1/n-series with constant term 1
std::vector<PiLaurent> seriesInvUnit(const std::vector<PiLaurent>& a, int order) {
    if (a.empty() || !(a[0] == PiLaurent(Rat(1))))
        throw std::domain_error("gevrey: series inverse needs constant term 1");
    std::vector<PiLaurent> r(order + 1);
    r[0] = PiLaurent(Rat(1));
    for (int m = 1; m <= order; ++m) {
        PiLaurent s;
        for (int j = 1; j <= m && j < static_cast<int>(a.size()); ++j) s += a[j] * r[m - j];
        r[m] = -s;
    }
    return r;
}

}  // namespace

bool Ladder::isZero() const {
    for (auto& v : c)
        if (!v.isZero()) return false;
    return true;
}

Ladder ladderPowerShifted(const Rat& e, const Rat& s, int order) {
    Ladder l = Ladder::zero(e, order);
    for (int i = 0; i <= order; ++i) l.c[i] = PiLaurent(binomialRat(e, i) * s.pow(i));
    return l;
}

Ladder ladderMul(const Ladder& a, const Ladder& b) {
    int order = std::min(a.order(), b.order());
    Ladder r = Ladder::zero(a.gamma0 + b.gamma0, order);
    r.c = convolve(a.c, b.c, order);
    return r;
}

Ladder ladderAdd(const Ladder& a, const Ladder& b) {
    Rat diff = a.gamma0 - b.gamma0;
    if (!diff.isInteger()) throw std::domain_error("ladderAdd: gamma ladder mismatch (non-integer step)");
    long d = diff.num().get_si();
    const Ladder& hi = d >= 0 ? a : b;
    const Ladder& lo = d >= 0 ? b : a;
    long shift = d >= 0 ? d : -d;
    Ladder r = Ladder::zero(hi.gamma0, std::max(hi.order(), static_cast<int>(lo.order() + shift)));
    for (int i = 0; i <= hi.order(); ++i) r.c[i] += hi.c[i];
    for (int i = 0; i <= lo.order(); ++i)
        if (i + shift <= r.order()) r.c[i + shift] += lo.c[i];
    return r;
}

Ladder ladderScale(const PiLaurent& s, const Ladder& a) {
    Ladder r = a;
    for (auto& v : r.c) v = s * v;
    return r;
}

bool AsyExpansion::isIdenticallyZero() const {
    for (auto& v : A)
        if (!v.isZero()) return false;
    return true;
}

namespace {

void canonicalizePrefs(AsyExpansion& e) {
    while (e.pref2 >= 2) {
        e.pref2 -= 2;
        for (auto& v : e.A) v = PiLaurent(Rat(2)) * v;
    }
    while (e.pref2 <= -2) {
        e.pref2 += 2;
        for (auto& v : e.A) v = PiLaurent(Rat(1, 2)) * v;
    }
    while (e.prefInvSqrtPi >= 4) {
        e.prefInvSqrtPi -= 4;
        for (auto& v : e.A) v = PiLaurent::piSquaredPow(-1) * v;
    }
    while (e.prefInvSqrtPi <= -4) {
        e.prefInvSqrtPi += 4;
        for (auto& v : e.A) v = PiLaurent::piSquaredPow(1) * v;
    }
}

/* Accumulates ladder contributions sharing one (beta, pref) family into a
 * single expansion whose gamma is the running maximum. */
struct Accum {
    bool any = false;
    PiLaurent beta;
    int pref2 = 0, prefPi = 0;
    Ladder total = Ladder::zero(Rat(0), 0);
    int order = 0;

    explicit Accum(int R) : order(R) { total = Ladder::zero(Rat(0), R); }

    void add(const PiLaurent& b, int p2, int pPi, const Ladder& l) {
        if (l.isZero()) return;
        Ladder t = l;
        if (!any) {
            any = true;
            beta = b;
            pref2 = p2;
            prefPi = pPi;
            total = Ladder::zero(l.gamma0, order);
        } else {
            if (!(beta == b)) throw std::domain_error("gevrey: mixing expansions with different beta");
            // even prefactor differences fold into the coefficient ring
            int d2 = p2 - pref2, dPi = pPi - prefPi;
            if (d2 % 2 != 0 || dPi % 4 != 0)
                throw std::domain_error("gevrey: mixing expansions with incompatible prefactors");
            PiLaurent scale = PiLaurent::piSquaredPow(-dPi / 4, Rat(2).pow(d2 / 2));
            t = ladderScale(scale, t);
        }
        Ladder sum = ladderAdd(total, t);
        // keep only `order` coefficients past the top
        sum.c.resize(order + 1, PiLaurent());
        total = sum;
    }

    AsyExpansion finish() const {
        AsyExpansion e;
        if (!any) return AsyExpansion::zero(order);
        e.beta = beta;
        e.pref2 = pref2;
        e.prefInvSqrtPi = prefPi;
        e.gamma = total.gamma0;
        e.A.assign(total.c.begin(), total.c.begin() + std::min<size_t>(total.c.size(), order + 1));
        e.A.resize(order + 1, PiLaurent());
        canonicalizePrefs(e);
        return e;
    }
};

// ladder of a_{n-k} / (n!^2 beta^n): beta^{-k} prod_{t<k} (n-t)^{-2} * (n-k)^{gamma - i} A_i
Ladder shiftDown(const AsyExpansion& e, long k, int order) {
    Ladder sum = Ladder::zero(e.gamma - Rat(2 * k), order);
    bool first = true;
    for (int i = 0; i <= e.order(); ++i) {
        if (e.A[i].isZero()) continue;
        Ladder t = ladderScale(e.A[i], ladderPowerShifted(e.gamma - Rat(i), Rat(-k), order));
        sum = first ? ladderScale(PiLaurent(Rat(1)), t) : ladderAdd(sum, t);
        first = false;
    }
    if (first) return Ladder::zero(e.gamma - Rat(2 * k), order);
    for (long t = 0; t < k; ++t) sum = ladderMul(sum, ladderPowerShifted(Rat(-2), Rat(-t), order));
    sum = ladderScale(plPow(e.beta, -k), sum);
    sum.c.resize(order + 1, PiLaurent());
    return sum;
}

// ladder of a_{n+v} / (n!^2 beta^n): beta^{v} prod_{t=1..v} (n+t)^{2} * (n+v)^{gamma - i} A_i
AsyExpansion shiftUp(const AsyExpansion& e, long v, int order) {
    Ladder sum = Ladder::zero(e.gamma + Rat(2 * v), order);
    bool first = true;
    for (int i = 0; i <= e.order(); ++i) {
        if (e.A[i].isZero()) continue;
        Ladder t = ladderScale(e.A[i], ladderPowerShifted(e.gamma - Rat(i), Rat(v), order));
        sum = first ? t : ladderAdd(sum, t);
        first = false;
    }
    AsyExpansion out;
    out.beta = e.beta;
    out.pref2 = e.pref2;
    out.prefInvSqrtPi = e.prefInvSqrtPi;
    if (first) {
        out.gamma = e.gamma + Rat(2 * v);
        out.A.assign(order + 1, PiLaurent());
        return out;
    }
    for (long t = 1; t <= v; ++t) sum = ladderMul(sum, ladderPowerShifted(Rat(2), Rat(t), order));
    sum = ladderScale(plPow(e.beta, v), sum);
    out.gamma = sum.gamma0;
    out.A.assign(sum.c.begin(), sum.c.end());
    out.A.resize(order + 1, PiLaurent());
    return out;
}

int requiredCut(int R) { return R + 2; }

AsyExpansion mulWithCut(const GevreyFn& f, const GevreyFn& g, int R, int cut) {
    Accum acc(R);
    if (!f.asy.isIdenticallyZero()) {
        if (g.taylor.order() < cut) throw std::domain_error("gv_mul: Taylor prefix of g too short");
        for (int j = 0; j <= cut; ++j) {
            Rat bj = g.taylor.at(j);
            if (bj.isZero()) continue;
            acc.add(f.asy.beta, f.asy.pref2, f.asy.prefInvSqrtPi,
                    ladderScale(PiLaurent(bj), shiftDown(f.asy, j, R)));
        }
    }
    if (!g.asy.isIdenticallyZero()) {
        if (f.taylor.order() < cut) throw std::domain_error("gv_mul: Taylor prefix of f too short");
        for (int j = 0; j <= cut; ++j) {
            Rat aj = f.taylor.at(j);
            if (aj.isZero()) continue;
            acc.add(g.asy.beta, g.asy.pref2, g.asy.prefInvSqrtPi,
                    ladderScale(PiLaurent(aj), shiftDown(g.asy, j, R)));
        }
    }
    return acc.finish();
}

bool sameExpansion(const AsyExpansion& a, const AsyExpansion& b, int R) {
    if (a.isIdenticallyZero() != b.isIdenticallyZero()) return false;
    if (a.isIdenticallyZero()) return true;
    if (!(a.beta == b.beta) || a.pref2 != b.pref2 || a.prefInvSqrtPi != b.prefInvSqrtPi) return false;
    Rat diff = a.gamma - b.gamma;
    if (!diff.isInteger()) return false;
    long d = diff.num().get_si();
    // compare with alignment, through order R relative to the larger gamma
    for (int i = 0; i <= R; ++i) {
        PiLaurent va = (d >= 0) ? (i <= a.order() ? a.A[i] : PiLaurent())
                                : (i - (-d) >= 0 && i - (-d) <= a.order() ? a.A[i + d] : PiLaurent());
        PiLaurent vb = (d <= 0) ? (i <= b.order() ? b.A[i] : PiLaurent())
                                : (i - d >= 0 && i - d <= b.order() ? b.A[i - d] : PiLaurent());
        if (!(va == vb)) return false;
    }
    return true;
}

}  // namespace

AsyExpansion gv_mul(const GevreyFn& f, const GevreyFn& g, int R) {
    if (!f.asy.isIdenticallyZero() && !g.asy.isIdenticallyZero() && !(f.asy.beta == g.asy.beta))
        throw std::domain_error("gv_mul: mismatched beta (rescale first)");
    int cut = requiredCut(R);
    AsyExpansion out = mulWithCut(f, g, R, cut);
    // stability check: doubling the first/last cut must not change the result
    int cut2 = std::min(2 * cut, std::min(f.taylor.order(), g.taylor.order()));
    if (cut2 > cut) {
        AsyExpansion out2 = mulWithCut(f, g, R, cut2);
        if (!sameExpansion(out, out2, R)) throw std::logic_error("gv_mul: first/last cut unstable");
    }
    return out;
}

namespace {

// Taylor series and expansions of f^k for k = 1..K (f with constant term 1)
struct PowerTower {
    std::vector<QSeries> taylor;       // f^k at index k (index 0 = 1)
    std::vector<AsyExpansion> asy;     // asy of f^k at index k (index 0 unused)
};

PowerTower buildPowers(const GevreyFn& f, int K, int R) {
    PowerTower t;
    t.taylor.push_back(QSeries::one(f.taylor.order()));
    t.asy.push_back(AsyExpansion::zero(R));
    for (int k = 1; k <= K; ++k) {
        t.taylor.push_back(t.taylor.back() * f.taylor);
        if (k == 1) t.asy.push_back(f.asy);
        else {
            GevreyFn prev{t.taylor[k - 1], t.asy[k - 1]};
            t.asy.push_back(gv_mul(prev, f, R));
        }
    }
    return t;
}

}  // namespace

AsyExpansion gv_pow(const GevreyFn& f, const Rat& lambda, int R) {
    if (!(f.taylor.at(0) == Rat(1))) throw std::domain_error("gv_pow: need f = 1 + O(x)");
    int v = 0;
    for (int m = 1; m <= f.taylor.order(); ++m)
        if (!f.taylor.at(m).isZero()) { v = m; break; }
    if (v == 0) {
        // f is identically 1 on its prefix: f^lambda has the scaled expansion
        AsyExpansion out = AsyExpansion::zero(R);
        if (!f.asy.isIdenticallyZero()) {
            out = f.asy;
            for (auto& a : out.A) a = PiLaurent(lambda) * a;
        }
        return out;
    }
    Rat c = f.taylor.at(v);
    // f = 1 + c x^v f1,  f1 = 1 + O(x)
    GevreyFn f1;
    f1.taylor = QSeries(f.taylor.order() - v);
    for (int m = 0; m + v <= f.taylor.order(); ++m) f1.taylor.set(m, f.taylor.at(m + v) / c);
    f1.asy = f.asy.isIdenticallyZero() ? AsyExpansion::zero(R) : shiftUp(f.asy, v, R);
    if (!f1.asy.isIdenticallyZero())
        for (auto& a : f1.asy.A) a = PiLaurent(Rat(1) / c) * a;

    int K = requiredCut(R);
    PowerTower tower = buildPowers(f1, K, R);
    Accum acc(R);
    for (int k = 1; k <= K; ++k) {
        if (tower.asy[k].isIdenticallyZero()) continue;
        Rat w = binomialRat(lambda, k) * c.pow(k);
        if (w.isZero()) continue;
        acc.add(tower.asy[k].beta, tower.asy[k].pref2, tower.asy[k].prefInvSqrtPi,
                ladderScale(PiLaurent(w), shiftDown(tower.asy[k], static_cast<long>(v) * k, R)));
    }
    return acc.finish();
}

namespace {

// log f for f = 1 + O(x), exact rational coefficients
QSeries seriesLog(const QSeries& f) {
    if (!(f.at(0) == Rat(1))) throw std::domain_error("seriesLog: need constant term 1");
    int N = f.order();
    QSeries L(N);
    for (int m = 1; m <= N; ++m) {
        Rat s = f.at(m);
        for (int j = 1; j < m; ++j) s -= Rat(j) * L.at(j) * f.at(m - j) / Rat(m);
        L.set(m, s);
    }
    return L;
}

// [x^m] f(x)^t as a polynomial in t (coefficients of t^d at index d)
std::vector<std::vector<Rat>> powerCoeffPolynomials(const QSeries& f, int M) {
    QSeries L = seriesLog(f.truncated(std::min(f.order(), M)));
    // E_m(t) with E_0 = 1 and m E_m = t sum_{j=1..m} j L_j E_{m-j}
    std::vector<std::vector<Rat>> E(M + 1);
    E[0] = {Rat(1)};
    for (int m = 1; m <= M; ++m) {
        std::vector<Rat> acc(m + 1, Rat(0));
        for (int j = 1; j <= m; ++j) {
            if (L.at(j).isZero()) continue;
            Rat w = Rat(j) * L.at(j) / Rat(m);
            for (size_t d = 0; d < E[m - j].size(); ++d) acc[d + 1] += w * E[m - j][d];
        }
        while (acc.size() > 1 && acc.back().isZero()) acc.pop_back();
        E[m] = acc;
    }
    return E;
}

AsyExpansion composeWithCut(const GevreyFn& g, const GevreyFn& f, int R, int cut) {
    PowerTower tower = buildPowers(f, cut, R);
    Accum acc(R);
    // "first" contributions: b_k exact, f^k asymptotic
    if (g.taylor.order() < cut) throw std::domain_error("gv_compose: Taylor prefix of g too short");
    for (int k = 1; k <= cut; ++k) {
        Rat bk = g.taylor.at(k);
        if (bk.isZero() || tower.asy[k].isIdenticallyZero()) continue;
        acc.add(tower.asy[k].beta, tower.asy[k].pref2, tower.asy[k].prefInvSqrtPi,
                ladderScale(PiLaurent(bk), shiftDown(tower.asy[k], k, R)));
    }
    // "last" contributions: b_{n-m} asymptotic, [x^m] f^{n-m} polynomial in n-m
    if (!g.asy.isIdenticallyZero()) {
        auto polys = powerCoeffPolynomials(f.taylor, cut);
        for (int m = 0; m <= cut; ++m) {
            Ladder base = shiftDown(g.asy, m, R);
            // multiply by P_m(n - m)
            Ladder poly = Ladder::zero(Rat(0), R);
            bool first = true;
            for (size_t d = 0; d < polys[m].size(); ++d) {
                if (polys[m][d].isZero()) continue;
                Ladder t = ladderScale(PiLaurent(polys[m][d]),
                                       ladderPowerShifted(Rat(static_cast<long>(d)), Rat(-m), R));
                poly = first ? t : ladderAdd(poly, t);
                first = false;
            }
            if (first) continue;
            acc.add(g.asy.beta, g.asy.pref2, g.asy.prefInvSqrtPi, ladderMul(base, poly));
        }
    }
    return acc.finish();
}

}  // namespace

AsyExpansion gv_compose(const GevreyFn& g, const GevreyFn& f, int R) {
    if (!(f.taylor.at(0) == Rat(1)))
        throw std::domain_error("gv_compose: normalize so that f(0) = 1");
    if (!f.asy.isIdenticallyZero() && !g.asy.isIdenticallyZero() && !(f.asy.beta == g.asy.beta))
        throw std::domain_error("gv_compose: mismatched beta");
    int cut = requiredCut(R);
    AsyExpansion out = composeWithCut(g, f, R, cut);
    int cut2 = std::min(2 * cut, std::min(f.taylor.order(), g.taylor.order()));
    if (cut2 > cut) {
        AsyExpansion out2 = composeWithCut(g, f, R, cut2);
        if (!sameExpansion(out, out2, R)) throw std::logic_error("gv_compose: first/last cut unstable");
    }
    return out;
}

AsyExpansion gv_inverse(const GevreyFn& h, int R) {
    if (h.taylor.order() < 2 || !h.taylor.at(0).isZero() || !(h.taylor.at(1) == Rat(1)))
        throw std::domain_error("gv_inverse: need h = x + O(x^2)");
    // F = x - h = c x^{r+1} f(x), f = 1 + O(x)
    int v = 0;
    for (int m = 2; m <= h.taylor.order(); ++m)
        if (!h.taylor.at(m).isZero()) { v = m; break; }
    if (v == 0) {
        // h = x on the whole prefix; the inverse expansion is just -asy(h)
        AsyExpansion out = h.asy;
        for (auto& a : out.A) a = PiLaurent(Rat(-1)) * a;
        return out;
    }
    long r = v - 1;
    Rat c = -h.taylor.at(v);
    GevreyFn f;
    f.taylor = QSeries(h.taylor.order() - v);
    for (int m = 0; m + v <= h.taylor.order(); ++m) f.taylor.set(m, -h.taylor.at(m + v) / c);
    f.asy = h.asy.isIdenticallyZero() ? AsyExpansion::zero(R) : shiftUp(h.asy, v, R);
    if (!f.asy.isIdenticallyZero())
        for (auto& a : f.asy.A) a = PiLaurent(Rat(-1) / c) * a;

    int K = requiredCut(R);
    PowerTower tower = buildPowers(f, K, R);
    Accum acc(R);
    for (int k = 1; k <= K; ++k) {
        if (tower.asy[k].isIdenticallyZero()) continue;
        // (c^k / k) C(n+k-1, k-1) a^{(k)}_{n - rk - 1}
        Ladder base = shiftDown(tower.asy[k], r * k + 1, R);
        Ladder binom = Ladder::zero(Rat(0), R);
        binom.c[0] = PiLaurent(Rat(1));
        for (long t = 1; t <= k - 1; ++t) binom = ladderMul(binom, ladderPowerShifted(Rat(1), Rat(t), R));
        Rat w = c.pow(k) / (Rat(k) * Rat(factorial(k - 1)));
        acc.add(tower.asy[k].beta, tower.asy[k].pref2, tower.asy[k].prefInvSqrtPi,
                ladderScale(PiLaurent(w), ladderMul(base, binom)));
    }
    return acc.finish();
}

Rat powerBoundConstant(int nmax, int alpha) {
    Rat best(0);
    for (int n = 1; n <= nmax; ++n) {
        Rat s(0);
        for (int m = 0; m <= n; ++m) s += Rat(binomialInt(n, m)).pow(-alpha);
        if (s > best) best = s;
    }
    return best;
}

bool power_bound_check(const QSeries& f, int kmax, int nmax, int alpha) {
    auto facPow = [alpha](int n) {
        Rat r(1);
        for (int t = 0; t < alpha; ++t) r *= Rat(factorial(n));
        return r;
    };
    for (int n = 0; n <= nmax; ++n)
        if (f.at(n).abs() > facPow(n)) return false;
    Rat C = powerBoundConstant(std::min(nmax, 24), alpha);
    QSeries p = QSeries::one(nmax);
    for (int k = 1; k <= kmax; ++k) {
        p = p * f;
        Rat cPow = C.pow(k - 1);
        for (int n = 0; n <= nmax; ++n) {
            Rat v = p.at(n).abs();
            if (v > cPow * facPow(n)) return false;
            if (alpha == 2 && v > Rat(Int(factorial(n + k - 1) * factorial(n)), factorial(k - 1)))
                return false;
        }
    }
    return true;
}

namespace {

BigFloat bfPowRatExp(long n, const Rat& gamma) {
    // n^gamma for gamma with denominator 1 or 2
    Int den = gamma.den();
    BigFloat base(static_cast<long>(n));
    if (den == 1) return base.powInt(gamma.num().get_si());
    if (den == 2) {
        BigFloat r = base.powInt(gamma.num().get_si());
        return r.sign() >= 0 ? r.sqrt() : -((-r).sqrt());
    }
    throw std::domain_error("validate_asy: gamma denominator beyond 2 unsupported");
}

BigFloat prefNumeric(const AsyExpansion& e) {
    BigFloat p(1);
    BigFloat s2 = BigFloat(2).sqrt();
    BigFloat spi = BigFloat::pi().sqrt();
    p = p * s2.powInt(e.pref2);
    p = p / spi.powInt(e.prefInvSqrtPi);
    return p;
}

}  // namespace

ValidationReport validate_asy(const GevreyFn& f, int depth, double tolerance) {
    ValidationReport rep;
    const AsyExpansion& e = f.asy;
    int N = f.taylor.order();
    if (e.isIdenticallyZero()) {
        // a vanishing expansion claims sub-n!^2-beta^n growth; the normalized
        // coefficients must then tend to zero
        BigFloat betaNum0 = evalPi(e.beta);
        for (int n = std::max(2, N / 2); n <= N; n += std::max(1, N / 8)) {
            BigFloat fac = BigFloat(factorial(n));
            BigFloat norm = fac * fac * betaNum0.powInt(n);
            rep.ratios.push_back((BigFloat::fromRat(f.taylor.at(n)) / norm).toDouble());
        }
        rep.finalRatio = rep.ratios.back();
        rep.ok = std::abs(rep.finalRatio) < tolerance;
        return rep;
    }
    BigFloat betaNum = evalPi(e.beta);
    BigFloat pref = prefNumeric(e);
    auto ratioAt = [&](int n) {
        BigFloat fac = BigFloat(factorial(n));
        BigFloat norm = fac * fac * betaNum.powInt(n) * bfPowRatExp(n, e.gamma) * pref;
        BigFloat partial;
        for (int i = 0; i <= std::min(depth, e.order()); ++i)
            partial = partial + evalPi(e.A[i]) / BigFloat(static_cast<long>(n)).powInt(i);
        BigFloat denom = norm * partial;
        return (BigFloat::fromRat(f.taylor.at(n)) / denom).toDouble();
    };
    int step = std::max(1, N / 8);
    for (int n = std::max(2, N / 2); n <= N; n += step) rep.ratios.push_back(ratioAt(n));
    double rN = ratioAt(N), rM = ratioAt(N - 1);
    // one Richardson step assuming error O(n^{-(depth+1)})
    double p = depth + 1;
    double wN = std::pow(N, p), wM = std::pow(N - 1, p);
    rep.finalRatio = (wN * rN - wM * rM) / (wN - wM);
    rep.ok = std::abs(rep.finalRatio - 1.0) < tolerance;
    return rep;
}

Ladder ladderFromRatio(const std::vector<Rat>& num, const std::vector<Rat>& den, int order) {
    if (num.size() != den.size() || num.empty() || !(num.back() == den.back()))
        throw std::domain_error("ladderFromRatio: need equal degree and equal leading coefficients");
    int R = order + 2;
    size_t d = num.size() - 1;
    // expand rho(h) = num/den as a series in 1/h
    auto toSeries = [&](const std::vector<Rat>& p) {
        std::vector<Rat> s(R + 1, Rat(0));
        for (size_t i = 0; i <= d; ++i)
            if (d - i <= static_cast<size_t>(R)) s[d - i] = p[i];
        return s;  // s[j] = coefficient of h^{-j} after dividing by h^d
    };
    auto sNum = toSeries(num), sDen = toSeries(den);
    // divide
    std::vector<Rat> rho(R + 1, Rat(0));
    for (int j = 0; j <= R; ++j) {
        Rat v = sNum[j];
        for (int t = 1; t <= j; ++t) v -= sDen[t] * rho[j - t];
        rho[j] = v / sDen[0];
    }
    // log rho
    std::vector<Rat> logRho(R + 1, Rat(0));
    for (int m = 1; m <= R; ++m) {
        Rat s = rho[m];
        for (int j = 1; j < m; ++j) s -= Rat(j) * logRho[j] * rho[m - j] / Rat(m);
        logRho[m] = s;
    }
    Rat gamma = logRho[1];
    // solve for log u = sum l_i h^{-i}: log rho = gamma log(1+1/h) + L(h+1) - L(h)
    std::vector<Rat> l(R + 1, Rat(0));
    for (int m = 2; m <= R; ++m) {
        // coefficient of h^{-m}: from gamma log(1+1/h): gamma (-1)^{m+1}/m
        Rat target = logRho[m] - gamma * Rat((m % 2 == 0) ? -1 : 1) / Rat(m);
        // contributions of l_i for i < m: l_i ([h^{-m}] (h+1)^{-i}) = l_i C(-i, m-i)
        Rat known(0);
        for (int i = 1; i < m - 1; ++i) known += l[i] * binomialRat(Rat(-i), m - i);
        // l_{m-1} appears with coefficient C(-(m-1), 1) = -(m-1)
        l[m - 1] = (target - known) / Rat(-(m - 1));
    }
    // exponentiate
    std::vector<Rat> u(R + 1, Rat(0));
    u[0] = Rat(1);
    for (int m = 1; m <= R; ++m) {
        Rat s(0);
        for (int j = 1; j <= m; ++j) s += Rat(j) * l[j] * u[m - j];
        u[m] = s / Rat(m);
    }
    Ladder out = Ladder::zero(gamma, order);
    for (int i = 0; i <= order; ++i) out.c[i] = PiLaurent(u[i]);
    return out;
}

Ladder centralBinomialLadder(int order) {
    // t_h = C(2h,h)/4^h, t_{h+1}/t_h = (2h+1)/(2h+2)
    return ladderFromRatio({Rat(1), Rat(2)}, {Rat(2), Rat(2)}, order);
}

namespace {

// Gamma(-n) for half-integer n = twiceN/2 (twiceN odd): rational * sqrt(pi)
Rat gammaOfMinusHalfIntegerOverSqrtPi(long twiceN) {
    // -n = (1 - twiceN)/2 - ... write -n = 1/2 - k with k = (twiceN + 1)/2
    long k = (twiceN + 1) / 2;
    if (k >= 0) {
        // Gamma(1/2 - k) = (-4)^k k! / (2k)! sqrt(pi)
        Rat r = Rat(powInt(4, k) * factorial(k), factorial(2 * k));
        if (k % 2 == 1) r = -r;
        return r;
    }
    // Gamma(1/2 + j) = (2j)!/(4^j j!) sqrt(pi) with j = -k
    long j = -k;
    return Rat(factorial(2 * j), powInt(4, j) * factorial(j));
}

}  // namespace

AsyExpansion bnSmallAsy(long twiceN, int order) {
    if (twiceN % 2 == 0 && twiceN >= 0) {
        // polynomial: expansion identically zero, tagged with the family beta
        AsyExpansion e = AsyExpansion::zero(order);
        e.beta = PiLaurent::piSquaredPow(-1, Rat(-1));
        return e;
    }
    Rat n(twiceN, 2);
    // ratio of (2h)!-normalized terms: (2h-n)(2h+1-n) / ((2h+1)(2h+2)), ascending in h
    std::vector<Rat> num{n * (n - Rat(1)), Rat(2) - Rat(4) * n, Rat(4)};
    std::vector<Rat> den{Rat(2), Rat(6), Rat(4)};  // (2h+1)(2h+2) = 4h^2 + 6h + 2
    Ladder u = ladderFromRatio(num, den, order);
    // expected gamma = -n - 1 (sanity)
    if (!(u.gamma0 == -n - Rat(1))) throw std::logic_error("bnSmallAsy: unexpected exponent from ratio");

    // tilde a_h ~ (2^{-n}/Gamma(-n)) h^{-n-1} u(h); convert (2h)! to h!^2 form
    Ladder S = centralBinomialLadder(order);
    Ladder combined = ladderMul(u, S);
    AsyExpansion e;
    e.beta = PiLaurent::piSquaredPow(-1, Rat(-1));  // 4 * (-1/(4 pi^2))
    e.gamma = u.gamma0 - Rat(1, 2);
    // prefactor: 2^{-n} / (Gamma(-n)) * pi^{-1/2}; Gamma(-n) = gRat sqrt(pi)
    Rat gRat = gammaOfMinusHalfIntegerOverSqrtPi(twiceN);
    e.pref2 = static_cast<int>(-twiceN);
    e.prefInvSqrtPi = 2;  // 1/sqrt(pi) from Gamma and 1/sqrt(pi) from C(2h,h)
    e.A.assign(order + 1, PiLaurent());
    for (int i = 0; i <= order; ++i) e.A[i] = PiLaurent(combined.c[i].rationalPart() / gRat);
    canonicalizePrefs(e);
    return e;
}

AsyExpansion asyShifted(const AsyExpansion& e, long s, int order) {
    if (e.isIdenticallyZero() || s == 0) return e;
    if (s > 0) return shiftUp(e, s, order);
    Ladder l = shiftDown(e, -s, order);
    AsyExpansion out;
    out.beta = e.beta;
    out.pref2 = e.pref2;
    out.prefInvSqrtPi = e.prefInvSqrtPi;
    out.gamma = l.gamma0;
    out.A.assign(l.c.begin(), l.c.end());
    out.A.resize(order + 1, PiLaurent());
    return out;
}

AsyExpansion asyRescaled(const AsyExpansion& e, const Rat& s) {
    AsyExpansion out = e;
    out.beta = PiLaurent(s) * e.beta;
    return out;
}

AsyExpansion toTwoHNormalization(const AsyExpansion& e, int order) {
    if (e.isIdenticallyZero()) return e;
    // a_h = h!^2 beta^h h^gamma pref sum A_i h^{-i}
    //     = (2h)! (beta/4)^h h^{gamma + 1/2} pref * sqrt(pi) * [sum A_i h^{-i}] / S(h)
    Ladder S = centralBinomialLadder(order);
    auto invS = seriesInvUnit(S.c, order);
    AsyExpansion out;
    out.beta = PiLaurent(Rat(1, 4)) * e.beta;
    out.gamma = e.gamma + Rat(1, 2);
    out.pref2 = e.pref2;
    out.prefInvSqrtPi = e.prefInvSqrtPi - 1;
    out.A = convolve(e.A, invS, order);
    canonicalizePrefs(out);
    return out;
}

}  // namespace qmh
