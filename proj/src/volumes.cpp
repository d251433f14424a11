#include "qmh/volumes.hpp"

#include "qmh/bernoulli.hpp"
#include "qmh/bigfloat.hpp"

#include <cmath>
#include <stdexcept>

namespace qmh {

StratumResult principal_volume(int genus) {
    if (genus < 2) throw std::domain_error("principal_volume: need genus >= 2");
    StratumResult r;
    r.genus = genus;
    r.n = 2 * genus - 2;
    int n = r.n;
    // vol_EMZ = <<2,...,2>> / (2^{n-1} (2n)!) with <<2^n>> = (-4 pi^2)^{1+n/2} n! v_n
    Rat vn = X_of_u(n + 1).vn(n);
    Rat c = vn * Rat(factorial(n)) * Rat(powInt(4, 1 + n / 2), powInt(2, n - 1) * factorial(2 * n));
    if ((1 + n / 2) % 2 == 1) c = -c;
    r.volEMZ = PiPoly::piSquaredPow(1 + n / 2, c);
    r.vol = PiPoly::piSquaredPow(1 + n / 2, c / Rat(4 * n + 2));
    r.cAreaTimesPi2Over3 = c_area_rational(genus);
    r.svLeading = sv_leading(n);
    return r;
}

Rat c_area_rational(int genus) {
    int n = 2 * genus - 2;
    Rat kappa = K_series(n).at(n);
    Rat vn = X_of_u(n + 1).vn(n);
    // c_area = -kappa_n / (8 pi^2 v_n);  (pi^2/3) c_area = -kappa_n / (24 v_n)
    return -kappa / (Rat(24) * vn);
}

Rat sv_leading(int n) {
    if (n < 2 || n % 2 != 0) throw std::domain_error("sv_leading: need even n >= 2");
    Rat kappa = K_series(n).at(n);
    return -Rat(1, 24) * Rat(factorial(n), powInt(2, n)) * kappa;
}

Rat sv_leading_p_bernoulli(int n, long p) {
    if (p < 1 || p % 2 == 0) throw std::domain_error("sv_leading_p: need odd p >= 1");
    if (n < 2 || n % 2 != 0) throw std::domain_error("sv_leading_p: need even n >= 2");
    // c^0_p(Tr^n)_L = n! [ sum_{i even >= 0} sum_{k=2}^{n-i}
    //     (2i+k+p)! (-B_{p+i+1}) / (2 (p+i+1) (p+i)! 2^i (i+1)!)
    //     * <<k-1, 2^m>>_Q / ((k-1)! 2^m m!)          (m = n-i-k)
    //   + (2n+p)! (-B_{p+n+1}) / (2 (p+n+1) (p+n)! 2^n (n+1)!) ]
    Rat total(0);
    for (int i = 0; i <= n - 2; i += 2) {
        for (int k = 2; k <= n - i; ++k) {
            int m = n - i - k;
            Rat eis = Rat(factorial(2 * i + k + p)) * (-bernoulliB(static_cast<int>(p) + i + 1)) /
                      (Rat(2) * Rat(p + i + 1) * Rat(factorial(p + i)));
            Rat rho = Rat(1) / (Rat(powInt(2, i)) * Rat(factorial(i + 1)));
            std::vector<long> idx{static_cast<long>(k - 1)};
            for (int t = 0; t < m; ++t) idx.push_back(2);
            Rat cum = rational_cumulant(idx) /
                      (Rat(factorial(k - 1)) * Rat(powInt(2, m)) * Rat(factorial(m)));
            total += eis * rho * cum;
        }
    }
    total += Rat(factorial(2 * n + p)) * (-bernoulliB(static_cast<int>(p) + n + 1)) /
             (Rat(2) * Rat(p + n + 1) * Rat(factorial(p + n)) * Rat(powInt(2, n)) * Rat(factorial(n + 1)));
    return Rat(factorial(n)) * total;
}

Rat sv_leading_p(int n, long p) {
    // cumulant route via <T~_p | p_2 | ... | p_2>_L: expand T~_p as a
    // quadratic polynomial in the Q's and use the complementary-partition identity
    Rat mixed(0);
    std::vector<long> twos(n, 2);
    for (int k = 0; k <= static_cast<int>(p) + 1; ++k) {
        int k2 = static_cast<int>(p) + 1 - k;
        Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
        if (k == 1 || k2 == 1) continue;  // Q_1 vanishes identically
        if (k == 0 || k2 == 0) {
            // Q_0 Q_{p+1} = Q_{p+1} = p_p / p!
            std::vector<long> idx{p};
            for (int t = 0; t < n; ++t) idx.push_back(2);
            mixed += sign * rational_cumulant(idx) / Rat(factorial(p));
            continue;
        }
        // Q_k Q_{k2} = p_{k-1} p_{k2-1} / ((k-1)! (k2-1)!), a two-element block
        std::vector<long> ls{static_cast<long>(k - 1), static_cast<long>(k2 - 1)};
        for (int t = 0; t < n; ++t) ls.push_back(2);
        SetPartition beta;
        beta.blocks.push_back({0, 1});
        for (int t = 0; t < n; ++t) beta.blocks.push_back({2 + t});
        mixed += sign * mixed_leading(ls, beta) / (Rat(factorial(k - 1)) * Rat(factorial(k2 - 1)));
    }
    mixed *= Rat(factorial(p - 1), Int(2));
    // c^0_p(Tr^n) = 2^{-n} <T~_p | p_2 | ... | p_2> (n+1 fully split slots),
    // from <T~ e^{s p_2}>/<e^{s p_2}> with s = t/4 against the C-series weights
    Rat viaCumulants = Rat(Int(1), powInt(2, n)) * mixed;
    Rat viaBernoulli = sv_leading_p_bernoulli(n, p);
    if (viaCumulants != viaBernoulli)
        throw std::logic_error("sv_leading_p: cumulant and Bernoulli routes disagree");
    return viaCumulants;
}

namespace {

/* Neville extrapolation to t = 0 of values sampled at t = 1/index, with
 * depth capped at 3 (deeper tableaux chase the divergent tail).  Exact
 * rationals are converted to floats only on entry, per the comparison-step
 * rule. */
double richardson(const std::vector<std::pair<double, double>>& points) {
    std::vector<double> t, v;
    size_t depth = std::min<size_t>(4, points.size());  // up to 3 elimination steps
    for (size_t i = points.size() - depth; i < points.size(); ++i) {
        t.push_back(1.0 / points[i].first);
        v.push_back(points[i].second);
    }
    for (size_t d = 1; d < t.size(); ++d)
        for (size_t i = t.size() - 1; i >= d; --i)
            v[i] = (t[i - d] * v[i] - t[i] * v[i - 1]) / (t[i - d] - t[i]);
    return v.back();
}

}  // namespace

AsyExpansion bm_expansion(int m, int R) {
    if (m < -1) throw std::domain_error("bm_expansion: need m >= -1");
    int N = 3 * R + 24;  // Taylor depth for the first/last cuts

    // frakb_{1/2}(x) with its seeded expansion
    GevreyFn bHalf{bnSmallSeries(1, N), bnSmallAsy(1, R)};
    // w(x) = x frakb_{1/2}(x)^{-4}
    GevreyFn bInv4{series_pow(bHalf.taylor, Rat(-4)), gv_pow(bHalf, Rat(-4), R)};
    QSeries wTaylor(N + 1);
    for (int j = 1; j <= N + 1; ++j) wTaylor.set(j, bInv4.taylor.at(j - 1));
    GevreyFn w{wTaylor, asyShifted(bInv4.asy, -1, R)};
    // x(w) by reversion, with the engine's inverse expansion
    GevreyFn xOfw{series_reverse(w.taylor), gv_inverse(w, R)};
    // f(w) = x(w)/w, the normalized inner series for compositions
    GevreyFn inner;
    inner.taylor = QSeries(xOfw.taylor.order() - 1);
    for (int j = 0; j < xOfw.taylor.order(); ++j) inner.taylor.set(j, xOfw.taylor.at(j + 1));
    inner.asy = asyShifted(xOfw.asy, 1, R);

    // frakb_{1/2}(x(w)) and its -m-th power
    GevreyFn bHalfAtX{series_compose(bHalf.taylor.truncated(inner.taylor.order()),
                                     xOfw.taylor.truncated(inner.taylor.order())),
                      gv_compose(bHalf, inner, R)};
    GevreyFn pw{series_pow(bHalfAtX.taylor, Rat(-m)), gv_pow(bHalfAtX, Rat(-m), R)};
    // frakb_{m/2}(x(w))
    GevreyFn bm{bnSmallSeries(m, inner.taylor.order()), bnSmallAsy(m, R)};
    GevreyFn bmAtX{series_compose(bm.taylor, xOfw.taylor.truncated(inner.taylor.order())),
                   gv_compose(bm, inner, R)};
    // product, then the u^{2h} = (w/16)^h rescale and the (2h)! renormalization
    AsyExpansion g = gv_mul(pw, bmAtX, R);
    return toTwoHNormalization(asyRescaled(g, Rat(16)), R);
}

AsymptoticReport asymptotic_report(const std::string& kind, int maxIndex) {
    AsymptoticReport rep;
    BigFloat pi = BigFloat::pi();
    BigFloat pi2 = pi * pi;
    if (kind == "vn") {
        // v_n ~ (-1)^{n/2-1} n!/(8 sqrt(2n)) (2/pi)^{n+5/2} (1 + c1/n + c2/n^2 + ...)
        XofU X = X_of_u(maxIndex + 1);
        double c1 = -(2 * pi2.toDouble() + 3) / 24.0;
        double c2 = (4 * pi2.toDouble() * pi2.toDouble() - 36 * pi2.toDouble() + 9) / 1152.0;
        auto ratioAt = [&](int n) {
            BigFloat vn = BigFloat::fromRat(X.vn(n));
            BigFloat lead = BigFloat(factorial(n)) / (BigFloat(8) * (BigFloat(2 * n)).sqrt());
            lead = lead * (BigFloat(2) / pi).powInt(n + 2) * (BigFloat(2) / pi).sqrt();
            if ((n / 2 - 1) % 2 != 0) lead = -lead;
            return (vn / lead).toDouble();
        };
        std::vector<std::pair<double, double>> sub;
        for (int n = maxIndex - 8; n <= maxIndex; n += 2) {
            double r0 = ratioAt(n);
            double partial = 1.0 + c1 / n + c2 / static_cast<double>(n) / n;
            rep.ratios.push_back(r0 / partial);
            sub.push_back({static_cast<double>(n), (r0 - 1.0) * n});
        }
        /* the partial-sum ratio is 1 + c3/n^3 + c4/n^4 + O(1/n^5); fit the
         * constant through three well-separated nodes (a deep Neville tableau
         * on nearby nodes amplifies the divergent tail instead) */
        {
            double K0 = 0;
            std::vector<int> nodes{maxIndex - 20, maxIndex - 10, maxIndex};
            double M[3][4];
            for (int i = 0; i < 3; ++i) {
                int n = nodes[i];
                double t = 1.0 / n;
                double partial = 1.0 + c1 / n + c2 / static_cast<double>(n) / n;
                M[i][0] = 1;
                M[i][1] = t * t * t;
                M[i][2] = t * t * t * t;
                M[i][3] = ratioAt(n) / partial;
            }
            for (int c = 0; c < 3; ++c) {
                int piv = c;
                for (int r = c + 1; r < 3; ++r)
                    if (std::abs(M[r][c]) > std::abs(M[piv][c])) piv = r;
                for (int j = 0; j < 4; ++j) std::swap(M[c][j], M[piv][j]);
                for (int r = 0; r < 3; ++r) {
                    if (r == c) continue;
                    double f = M[r][c] / M[c][c];
                    for (int j = 0; j < 4; ++j) M[r][j] -= f * M[c][j];
                }
            }
            K0 = M[0][3] / M[0][0];
            rep.extrapolated = K0;
        }
        rep.leadingOk = std::abs(rep.extrapolated - 1.0) < 1e-6;
        rep.subleading = richardson(sub);
        rep.subleadingTarget = c1;
        rep.subleadingOk = std::abs(rep.subleading - c1) < 1e-3;
        return rep;
    }
    if (kind == "carea") {
        // c_area(g) ~ 1/2 - 1/(8g) - 5/(32 g^2) - ...
        std::vector<std::pair<double, double>> pts;
        for (int g = maxIndex - 6; g <= maxIndex; ++g) {
            int n = 2 * g - 2;
            Rat kappa = K_series(n).at(n);
            Rat vn = X_of_u(n + 1).vn(n);
            BigFloat carea = -BigFloat::fromRat(kappa) / (BigFloat(8) * pi2 * BigFloat::fromRat(vn));
            double partial = 0.5 - 1.0 / (8.0 * g) - 5.0 / (32.0 * g * g);
            double ratio = carea.toDouble() / partial;
            rep.ratios.push_back(ratio);
            pts.push_back({static_cast<double>(g), ratio});
        }
        rep.extrapolated = richardson(pts);
        rep.leadingOk = std::abs(rep.extrapolated - 1.0) < 1e-3;
        // recover the coefficient of 1/g
        std::vector<std::pair<double, double>> sub;
        for (int g = maxIndex - 6; g <= maxIndex; ++g) {
            int n = 2 * g - 2;
            Rat kappa = K_series(n).at(n);
            Rat vn = X_of_u(n + 1).vn(n);
            BigFloat carea = -BigFloat::fromRat(kappa) / (BigFloat(8) * pi2 * BigFloat::fromRat(vn));
            sub.push_back({static_cast<double>(g), (carea.toDouble() - 0.5) * g});
        }
        rep.subleading = richardson(sub);
        rep.subleadingTarget = -1.0 / 8.0;
        rep.subleadingOk = std::abs(rep.subleading - rep.subleadingTarget) < 1e-3;
        return rep;
    }
    if (kind == "volume") {
        // V(1^n) = ((4n+2)/4) 2^n vol_EMZ-normalized ~ 1 - pi^2/(24 g)
        std::vector<std::pair<double, double>> sub;
        for (int g = maxIndex - 6; g <= maxIndex; ++g) {
            int n = 2 * g - 2;
            Rat vn = X_of_u(n + 1).vn(n);
            Rat c = vn * Rat(factorial(n)) * Rat(powInt(4, 1 + n / 2), powInt(2, n - 1) * factorial(2 * n));
            if ((1 + n / 2) % 2 == 1) c = -c;
            // V = (2^n / 4) vol_EMZ, vol_EMZ = c pi^{n+2}
            BigFloat V = BigFloat::fromRat(c * Rat(powInt(2, n), 4)) * pi.powInt(n + 2);
            double v = V.toDouble();
            rep.ratios.push_back(v);
            sub.push_back({static_cast<double>(g), (v - 1.0) * g});
        }
        rep.subleading = richardson(sub);
        rep.subleadingTarget = -pi2.toDouble() / 24.0;
        rep.subleadingOk = std::abs(rep.subleading - rep.subleadingTarget) < 1e-3;
        rep.extrapolated = rep.ratios.back();
        rep.leadingOk = std::abs(rep.extrapolated - 1.0) < 0.05;
        return rep;
    }
    throw std::invalid_argument("asymptotic_report: unknown kind " + kind);
}

}  // namespace qmh
