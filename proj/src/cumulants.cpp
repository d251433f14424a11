#include "qmh/cumulants.hpp"

#include "qmh/bernoulli.hpp"

#include <algorithm>
#include <mutex>

namespace qmh {

void MultiUSeries::add(Mono m, const Rat& c) {
    if (c.isZero()) return;
    while (!m.u.empty() && m.u.back() == 0) m.u.pop_back();
    if (uWeight(m.u) > maxUW_ || m.y > maxY_ || m.x > maxX_) return;
    auto it = c_.find(m);
    if (it == c_.end()) c_[m] = c;
    else {
        it->second += c;
        if (it->second.isZero()) c_.erase(it);
    }
}

MultiUSeries MultiUSeries::operator-() const {
    MultiUSeries r(maxUW_, maxY_, maxX_);
    for (auto& [m, c] : c_) r.c_[m] = -c;
    return r;
}

MultiUSeries operator+(const MultiUSeries& a, const MultiUSeries& b) {
    MultiUSeries r(std::min(a.maxUW_, b.maxUW_), std::min(a.maxY_, b.maxY_), std::min(a.maxX_, b.maxX_));
    for (auto& [m, c] : a.c_) r.add(m, c);
    for (auto& [m, c] : b.c_) r.add(m, c);
    return r;
}

MultiUSeries operator-(const MultiUSeries& a, const MultiUSeries& b) { return a + (-b); }

MultiUSeries operator*(const MultiUSeries& a, const MultiUSeries& b) {
    MultiUSeries r(std::min(a.maxUW_, b.maxUW_), std::min(a.maxY_, b.maxY_), std::min(a.maxX_, b.maxX_));
    for (auto& [ma, ca] : a.c_)
        for (auto& [mb, cb] : b.c_) {
            MultiUSeries::Mono m;
            m.u.assign(std::max(ma.u.size(), mb.u.size()), 0);
            for (size_t i = 0; i < ma.u.size(); ++i) m.u[i] += ma.u[i];
            for (size_t i = 0; i < mb.u.size(); ++i) m.u[i] += mb.u[i];
            m.y = ma.y + mb.y;
            m.x = ma.x + mb.x;
            r.add(m, ca * cb);
        }
    return r;
}

MultiUSeries operator*(const Rat& a, const MultiUSeries& b) {
    MultiUSeries r(b.maxUW_, b.maxY_, b.maxX_);
    if (a.isZero()) return r;
    for (auto& [m, c] : b.c_) r.c_[m] = a * c;
    return r;
}

MultiUSeries MultiUSeries::dY() const {
    MultiUSeries r(maxUW_, maxY_, maxX_);
    for (auto& [m, c] : c_) {
        if (m.y == 0) continue;
        Mono n = m;
        n.y--;
        r.add(n, Rat(m.y) * c);
    }
    return r;
}

MultiUSeries MultiUSeries::integrateY() const {
    MultiUSeries r(maxUW_, maxY_, maxX_);
    for (auto& [m, c] : c_) {
        Mono n = m;
        n.y++;
        r.add(n, c / Rat(n.y));
    }
    return r;
}

MultiUSeries MultiUSeries::expSeries() const {
    for (auto& [m, c] : c_)
        if (uWeight(m.u) == 0)
            throw std::domain_error("MultiUSeries::expSeries: needs positive u-weight terms only");
    MultiUSeries result(maxUW_, maxY_, maxX_);
    result.add(Mono{}, Rat(1));
    MultiUSeries power = result;
    // terms have u-weight >= 2, so B^k dies beyond k = maxUW/2
    for (int k = 1; k <= maxUW_ / 2 + 1; ++k) {
        power = power * (*this);
        if (power.isZero()) break;
        result = result + Rat(Int(1), factorial(k)) * power;
    }
    return result;
}

namespace {

void enumerateMultiIndices(int numVars, int maxUWeight, std::vector<int>& cur, int pos,
                           const std::function<void(const std::vector<int>&)>& emit) {
    if (pos == numVars) {
        emit(cur);
        return;
    }
    int w = MultiUSeries::uWeight(cur);
    for (int e = 0; w + e * (pos + 2) <= maxUWeight; ++e) {
        cur[pos] = e;
        enumerateMultiIndices(numVars, maxUWeight, cur, pos + 1, emit);
    }
    cur[pos] = 0;
}

MultiUSeries calBDirect(int maxUW, int maxY, int maxX, int numVars) {
    MultiUSeries B(maxUW, maxY, maxX);
    std::vector<int> a(numVars, 0);
    enumerateMultiIndices(numVars, maxUW, a, 0, [&](const std::vector<int>& idx) {
        long sumLA = 0, wA = 0;  // sum l a_l and w(a) = sum (l-1) a_l
        Rat aFact(1);
        bool zero = true;
        for (size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] == 0) continue;
            zero = false;
            long l = static_cast<long>(i) + 1;
            sumLA += l * idx[i];
            wA += (l - 1) * idx[i];
            aFact *= Rat(factorial(idx[i]));
        }
        if (zero) return;
        Rat base = Rat(factorial(sumLA)) / aFact;
        for (int r = 0; r <= maxY; ++r) {
            long k = 2 - r + wA;
            if (k < 0 || k % 2 != 0) continue;
            if (k / 2 > maxX) continue;
            Rat beta = betaCoeff(static_cast<int>(k));
            if (beta.isZero()) continue;
            MultiUSeries::Mono m;
            m.u = idx;
            m.y = r;
            m.x = static_cast<int>(k / 2);
            B.add(m, base * beta / Rat(factorial(r)));
        }
    });
    return B;
}

MultiUSeries calBViaT(int maxUW, int maxYOut, int maxX, int numVars) {
    // T = U(y + T) by fixed-point iteration; each pass gains one u-degree.
    // The k-th X-term takes k-1 y-derivatives of T, so T needs y-headroom
    // of 2 maxX beyond the requested truncation.
    int maxY = maxYOut + 2 * maxX + 1;
    MultiUSeries y(maxUW, maxY, maxX);
    y.add(MultiUSeries::Mono{{}, 1, 0}, Rat(1));
    MultiUSeries T(maxUW, maxY, maxX);
    int iterations = maxUW / 2 + 1;
    for (int it = 0; it < iterations; ++it) {
        MultiUSeries arg = y + T;
        MultiUSeries next(maxUW, maxY, maxX);
        MultiUSeries pw = arg;
        for (int l = 1; l <= numVars; ++l) {
            MultiUSeries::Mono ul;
            ul.u.assign(l, 0);
            ul.u[l - 1] = 1;
            MultiUSeries uvar(maxUW, maxY, maxX);
            uvar.add(ul, Rat(1));
            next = next + uvar * pw;
            if (l < numVars) pw = pw * arg;
        }
        T = next;
    }
    MultiUSeries B = T.integrateY();
    MultiUSeries deriv = T;
    for (int k = 2; k / 2 <= maxX; ++k) {
        deriv = (k == 2) ? T.dY() : deriv.dY();  // T^{(k-1)}
        Rat beta = betaCoeff(k);
        if (beta.isZero()) continue;
        MultiUSeries xPow(maxUW, maxY, maxX);
        xPow.add(MultiUSeries::Mono{{}, 0, k / 2}, beta);
        B = B + xPow * deriv;
    }
    // shrink back to the requested y-truncation
    MultiUSeries out(maxUW, maxYOut, maxX);
    for (auto& [m, c] : B.coeffs()) out.add(m, c);
    return out;
}

}  // namespace

MultiUSeries calB(int maxUWeight, int maxY, int maxX, int numVars) {
    MultiUSeries direct = calBDirect(maxUWeight, maxY, maxX, numVars);
    MultiUSeries viaT = calBViaT(maxUWeight, maxY, maxX, numVars);
    if (!(direct == viaT))
        throw std::logic_error("calB: multi-index and Lagrange constructions disagree");
    return direct;
}

Rat gauss_functional_moment(int n) {
    if (n % 2 != 0) return Rat(0);
    Rat v(1);
    for (int j = 1; j < n; j += 2) v *= Rat(j);
    return (n / 2) % 2 == 0 ? v : -v;
}

MultiUSeries gauss_functional(const MultiUSeries& f) {
    MultiUSeries r(f.maxUWeight(), f.maxY(), f.maxX());
    for (auto& [m, c] : f.coeffs()) {
        Rat mom = gauss_functional_moment(m.y);
        if (mom.isZero()) continue;
        MultiUSeries::Mono n = m;
        n.y = 0;
        r.add(n, c * mom);
    }
    return r;
}

MultiUSeries phi_X(int maxUWeight, int numVars) {
    int maxY = maxUWeight + 2;
    int maxX = maxUWeight / 2 + 1;
    MultiUSeries B = calB(maxUWeight, maxY, maxX, numVars);
    return gauss_functional(B.expSeries());
}

QSeries connected_qbracket(const std::vector<SSPoly>& fs, int order) {
    int s = static_cast<int>(fs.size());
    if (s < 1) throw std::invalid_argument("connected_qbracket: need at least one argument");
    // block brackets depend only on the multiset of arguments; group equal
    // ones and cache per class signature (Bell(s) grows fast)
    std::vector<int> classId(s);
    std::vector<const SSPoly*> reps;
    for (int i = 0; i < s; ++i) {
        int id = -1;
        for (size_t r = 0; r < reps.size(); ++r)
            if (*reps[r] == fs[i]) { id = static_cast<int>(r); break; }
        if (id < 0) {
            id = static_cast<int>(reps.size());
            reps.push_back(&fs[i]);
        }
        classId[i] = id;
    }
    std::map<std::vector<int>, QSeries> blockCache;
    auto blockBracket = [&](const std::vector<int>& block) {
        std::vector<int> sig;
        for (int b : block) sig.push_back(classId[b]);
        std::sort(sig.begin(), sig.end());
        auto it = blockCache.find(sig);
        if (it != blockCache.end()) return it->second;
        SSPoly prod(Rat(1));
        for (int b : block) prod = prod * fs[b];
        QSeries br = qbracket(prod, order);
        blockCache.emplace(sig, br);
        return br;
    };
    QSeries out = QSeries::zero(order);
    for (auto& alpha : enumerate_set_partitions(s)) {
        QSeries term = QSeries::one(order);
        for (auto& block : alpha.blocks) term = term * blockBracket(block);
        Rat sign = (alpha.length() % 2 == 1) ? Rat(1) : Rat(-1);
        out += sign * Rat(factorial(alpha.length() - 1)) * term;
    }
    return out;
}

ConnectedBracket connected_bracket_full(const std::vector<SSPoly>& fs, int order) {
    ConnectedBracket cb;
    cb.args = fs;
    cb.series = connected_qbracket(fs, order);
    int K = 0;
    bool pure = true;
    for (auto& f : fs) {
        int w = 0;
        pure = pure && f.isPureWeight(&w);
        K += w;
    }
    cb.form = recognize(cb.series, K, pure);
    cb.growth = evX(cb.form);
    if (K % 2 == 1) {
        cb.degreeBound = 0;
        cb.leading = Rat(0);
        return cb;
    }
    cb.degreeBound = 1 - static_cast<int>(fs.size()) + K / 2;
    cb.leading = cb.degreeBound >= 0 ? cb.growth.xCoeff(cb.degreeBound) : Rat(0);
    return cb;
}

namespace {
std::mutex cumulantMutex;
std::map<std::vector<long>, Rat> cumulantCache;

int pureBasisSize(int weight) {
    return static_cast<int>(recognitionBasis(weight, true).size());
}
}  // namespace

Rat rational_cumulant(const std::vector<long>& ls) {
    std::vector<long> key = ls;
    std::sort(key.begin(), key.end());
    if (key.empty() || key.front() < 1)
        throw std::invalid_argument("rational_cumulant: indices must be >= 1");
    {
        std::lock_guard<std::mutex> lock(cumulantMutex);
        auto it = cumulantCache.find(key);
        if (it != cumulantCache.end()) return it->second;
    }
    long K = 0;
    for (long l : key) K += l + 1;
    Rat value(0);
    if (K % 2 == 0) {  // odd total weight brackets vanish
        int order = pureBasisSize(static_cast<int>(K)) + 5;
        std::vector<SSPoly> args;
        for (long l : key) args.push_back(SSPoly::generatorP(static_cast<int>(l)));
        value = connected_bracket_full(args, order).leading;
    }
    std::lock_guard<std::mutex> lock(cumulantMutex);
    cumulantCache[key] = value;
    return value;
}

PiPoly cumulant_pi_form(const std::vector<long>& ls) {
    long s = 0;
    for (long l : ls) s += l - 1;
    if (s % 2 != 0) return PiPoly();  // odd total weight: the rational cumulant is 0
    Rat q = rational_cumulant(ls);
    long e = 1 + s / 2;
    Rat c = q * Rat(powInt(4, e));
    if (e % 2 == 1) c = -c;
    return PiPoly::piSquaredPow(static_cast<int>(e), c);
}

Rat mixed_leading(const std::vector<long>& ls, const SetPartition& beta) {
    int n = static_cast<int>(ls.size());
    Rat s(0);
    for (auto& alpha : complementary_pairs(beta, n)) {
        Rat term(1);
        for (auto& block : alpha.blocks) {
            std::vector<long> idx;
            for (int a : block) idx.push_back(ls[a]);
            term *= rational_cumulant(idx);
            if (term.isZero()) break;
        }
        s += term;
    }
    return s;
}

Rat mixed_leading_direct(const std::vector<long>& ls, const SetPartition& beta, int order) {
    std::vector<SSPoly> blockFs;
    long K = 0;
    for (long l : ls) K += l + 1;
    for (auto& block : beta.blocks) {
        SSPoly prod(Rat(1));
        for (int b : block) prod = prod * SSPoly::generatorP(static_cast<int>(ls[b]));
        blockFs.push_back(prod);
    }
    if (order <= 0) order = pureBasisSize(static_cast<int>(K)) + 5;
    return connected_bracket_full(blockFs, order).leading;
}

/* --- one-variable machinery: u = (0, u, 0, 0, ...) ------------------- */

namespace {

// dense bivariate polynomials in (u, y), truncated at fixed orders
struct Biv {
    int uo, yo;
    std::vector<std::vector<Rat>> c;  // c[a][r]
    Biv(int uOrder, int yOrder) : uo(uOrder), yo(yOrder), c(uOrder + 1, std::vector<Rat>(yOrder + 1, Rat(0))) {}
};

Biv bivMul(const Biv& a, const Biv& b) {
    Biv r(std::min(a.uo, b.uo), std::min(a.yo, b.yo));
    for (int i = 0; i <= r.uo; ++i)
        for (int j = 0; j <= std::min(a.yo, r.yo); ++j) {
            if (a.c[i][j].isZero()) continue;
            for (int k = 0; i + k <= r.uo; ++k)
                for (int l = 0; j + l <= r.yo && l <= b.yo; ++l) {
                    if (b.c[k][l].isZero()) continue;
                    r.c[i + k][j + l] += a.c[i][j] * b.c[k][l];
                }
        }
    return r;
}

Biv bivDY(const Biv& a) {
    Biv r(a.uo, a.yo);
    for (int i = 0; i <= a.uo; ++i)
        for (int j = 1; j <= a.yo; ++j) r.c[i][j - 1] = Rat(j) * a.c[i][j];
    return r;
}

// B(u, y) = sum_k beta_k sum_{a>=1, r>=0, a-r=k-2} (2a)!/(a! r!) u^a y^r
Biv buySimple(int uOrder, int yOrder) {
    Biv B(uOrder, yOrder);
    for (int a = 1; a <= uOrder; ++a)
        for (int r = 0; r <= yOrder; ++r) {
            long k = a - r + 2;
            if (k < 0) continue;
            Rat beta = betaCoeff(static_cast<int>(k));
            if (beta.isZero()) continue;
            B.c[a][r] = beta * Rat(factorial(2 * a)) / Rat(Int(factorial(a) * factorial(r)));
        }
    return B;
}

// substitute a u-series (no y) for y; result has no y
std::vector<Rat> bivEvalY(const Biv& f, const std::vector<Rat>& y0, int uOrder) {
    auto mulU = [uOrder](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> r(uOrder + 1, Rat(0));
        for (int i = 0; i <= uOrder; ++i) {
            if (a[i].isZero()) continue;
            for (int j = 0; i + j <= uOrder; ++j) r[i + j] += a[i] * b[j];
        }
        return r;
    };
    std::vector<Rat> result(uOrder + 1, Rat(0));
    std::vector<Rat> yPow(uOrder + 1, Rat(0));
    yPow[0] = Rat(1);
    for (int r = 0; r <= f.yo; ++r) {
        for (int a = 0; a <= uOrder && a <= f.uo; ++a) {
            if (f.c[a][r].isZero()) continue;
            for (int j = 0; a + j <= uOrder; ++j) result[a + j] += f.c[a][r] * yPow[j];
        }
        if (r < f.yo) yPow = mulU(yPow, y0);
    }
    return result;
}

}  // namespace

PsiRoutes psi_L_routes(int order) {
    PsiRoutes out{UPoly(order), UPoly(order), UPoly(order)};
    int yo = order + 3;
    Biv B = buySimple(order, yo);
    Biv Bp = bivDY(B);

    // route 1: stationary point y0 = -B'(u, y0), one u-order per iteration
    std::vector<Rat> y0(order + 1, Rat(0));
    for (int it = 0; it <= order; ++it) {
        std::vector<Rat> next = bivEvalY(Bp, y0, order);
        for (auto& v : next) v = -v;
        y0 = next;
    }
    {
        std::vector<Rat> psi = bivEvalY(B, y0, order);
        std::vector<Rat> y0sq(order + 1, Rat(0));
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j) y0sq[i + j] += y0[i] * y0[j];
        for (int n = 0; n <= order; ++n) out.stationary.set(n, psi[n] + y0sq[n] / Rat(2));
    }

    // route 2: B(u,0) + sum_{m>=2} (-1)^{m-1}/(m(m-1)) [y^{m-2}] B'(u,y)^m
    {
        std::vector<Rat> psi(order + 1, Rat(0));
        for (int a = 0; a <= order; ++a) psi[a] = B.c[a][0];
        Biv power = Bp;
        for (int m = 2; m <= order + 2; ++m) {
            power = bivMul(power, Bp);  // now B'^m
            Rat w = Rat(1, m * (m - 1));
            if (m % 2 == 0) w = -w;
            if (m - 2 <= power.yo)
                for (int a = 0; a <= order; ++a) psi[a] += w * power.c[a][m - 2];
        }
        for (int n = 0; n <= order; ++n) out.asSum.set(n, psi[n]);
    }

    // route 3: v_n from the generating series X(u)
    {
        XofU X = X_of_u(order);
        for (int n = 2; n <= order; ++n) out.fromXu.set(n, X.vn(n));
    }
    return out;
}

UPoly psi_L_onevar(int order) {
    PsiRoutes r = psi_L_routes(order);
    if (!(r.stationary == r.asSum) || !(r.stationary == r.fromXu))
        throw std::logic_error("psi_L_onevar: the three routes disagree");
    return r.stationary;
}

XofU X_of_u(int order) {
    int H = (order + 3) / 2 + 1;  // w-order needed
    QSeries bHalf = bnSmallSeries(1, H + 1);
    QSeries bInv4 = series_pow(bHalf, Rat(-4));
    // w(x) = x * bHalf(x)^{-4}; revert to get x(w)
    QSeries wOfx(H + 1);
    for (int m = 1; m <= H + 1; ++m) wOfx.set(m, bInv4.at(m - 1));
    QSeries xOfw = series_reverse(wOfx);
    QSeries Y = series_pow(series_compose(bHalf, xOfw), Rat(-2));
    XofU X;
    for (int h = 0; h <= H; ++h)
        X.oddCoeffs.push_back(Y.at(h) * Rat(powInt(4, 2 * h)) / Rat(4));
    return X;
}

Rat XofU::coeffAt(int exponent) const {
    if (exponent % 2 == 0) return Rat(0);
    long h = (exponent + 1) / 2;
    if (h < 0) return Rat(0);
    if (h >= static_cast<long>(oddCoeffs.size())) throw std::out_of_range("XofU: beyond computed order");
    return oddCoeffs[static_cast<size_t>(h)];
}

Rat XofU::vn(int n) const {
    if (n == -2) return Rat(-1, 24);
    if (n < -2 || n % 2 != 0) return Rat(0);
    return coeffAt(n + 1) / Rat(4 * n + 2);
}

QSeries bmSeries(int m, int halfOrder) {
    if (m < -1) throw std::domain_error("bmSeries: need m >= -1");
    int H = halfOrder;
    QSeries bHalf = bnSmallSeries(1, H + 2);
    QSeries bInv4 = series_pow(bHalf, Rat(-4));
    QSeries wOfx(H + 2);
    for (int j = 1; j <= H + 2; ++j) wOfx.set(j, bInv4.at(j - 1));
    QSeries xOfw = series_reverse(wOfx);
    QSeries bHalfAtX = series_compose(bHalf.truncated(H + 1), xOfw.truncated(H + 1));
    QSeries g = series_pow(bHalfAtX, Rat(-m)) * series_compose(bnSmallSeries(m, H + 1), xOfw.truncated(H + 1));
    QSeries out(2 * H);
    for (int h = 0; h <= H && 2 * h <= 2 * H; ++h)
        out.set(2 * h, g.at(h) * Rat(powInt(16, h)));
    return out;
}

UPoly psi_k(int k, int order) {
    if (k < 0) throw std::domain_error("psi_k: need k >= 0");
    int H = (order + k) / 2 + 1;
    std::vector<QSeries> bm;
    for (int m = 0; m <= k; ++m) bm.push_back(bmSeries(m, H));
    UPoly out(order);
    Rat twoPowK(powInt(2, k));
    for (int h = 0; h <= H; ++h) {
        Rat s(0);
        for (int m = 0; m <= k; ++m) {
            Rat term = Rat(binomialInt(k, m)) * bm[m].at(2 * h);
            s += (m % 2 == 0) ? term : -term;
        }
        s /= twoPowK;
        int n = 2 * h - k;
        if (n < 0) {
            if (!s.isZero()) throw std::logic_error("psi_k: negative powers of u failed to cancel");
            continue;
        }
        if (n <= order) out.set(n, s);
    }
    return out;
}

UPoly K_series(int order) {
    int H = order / 2 + 1;
    QSeries b = bmSeries(-1, H);
    UPoly out(order);
    for (int n = 0; n <= order; ++n)
        if (n % 2 == 0) out.set(n, b.at(n));
    return out;
}

Rat v_nk(int n, int k) {
    if (n < 0) return Rat(0);
    return psi_k(k, n).at(n);
}

}  // namespace qmh
