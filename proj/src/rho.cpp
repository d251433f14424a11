#include "qmh/rho.hpp"

#include "qmh/bernoulli.hpp"

#include <algorithm>
#include <map>

namespace qmh {

namespace {

// all multisets {n_1 <= ... <= n_j} of positive integers with given sum
void multisetsRec(int sum, int parts, int minVal, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (sum == 0) out.push_back(cur);
        return;
    }
    for (int n = minVal; n * parts <= sum; ++n) {
        cur.push_back(n);
        multisetsRec(sum - n, parts - 1, n, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> multisetsWithSum(int sum, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (sum < 0) return out;
    multisetsRec(sum, parts, 1, cur, out);
    return out;
}

// t^n - (t-1)^n as a dense coefficient vector (degree n-1; the t^n terms cancel)
std::vector<Rat> gPoly(int n) {
    std::vector<Rat> g(n, Rat(0));
    for (int r = 0; r < n; ++r) {
        Rat c = Rat(binomialInt(n, r));
        g[r] = ((n - r) % 2 == 1) ? c : -c;
    }
    return g;
}

std::vector<Rat> polyMul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].isZero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

/* k! [v^k] of int_v^{v+1} (product of g_{n_t}) dt, divided by the multiset's
 * multiplicity factorials (the exp expansion weight). */
Rat rhoSeriesCoeff(const std::vector<int>& multiset, int k) {
    std::vector<Rat> poly{Rat(1)};
    for (int n : multiset) poly = polyMul(poly, gPoly(n));
    // integrate termwise: t^m -> ((v+1)^{m+1} - v^{m+1})/(m+1), pick [v^k]
    Rat coeff(0);
    for (int m = 0; m < static_cast<int>(poly.size()); ++m) {
        if (poly[m].isZero()) continue;
        if (k <= m) coeff += poly[m] * Rat(binomialInt(m + 1, k)) / Rat(m + 1);
    }
    Rat multFac(1);
    int run = 1;
    for (size_t i = 1; i <= multiset.size(); ++i) {
        if (i < multiset.size() && multiset[i] == multiset[i - 1]) ++run;
        else {
            multFac *= Rat(factorial(run));
            run = 1;
        }
    }
    return coeff * Rat(factorial(k)) / multFac;
}

// apply prod_t d/dp_{n_t} = prod_t (1/n_t!) d/dQ_{n_t+1}
SSPoly applyPDerivatives(const SSPoly& f, const std::vector<int>& multiset) {
    SSPoly g = f;
    Rat scale(1);
    for (int n : multiset) {
        g = g.dQ(n + 1);
        scale /= Rat(factorial(n));
        if (g.isZero()) break;
    }
    return scale * g;
}

}  // namespace

SSPoly rho_ij(int i, int j, const SSPoly& f) {
    if (i < 0 || j < 0) throw std::domain_error("rho_ij: need i, j >= 0");
    int w = f.weight();
    SSPoly out;
    int kmax = std::max(w - i - 2 * j, 0);
    for (int k = 0; k <= kmax; ++k) {
        int s = i + j + k;  // required sum of the multiset entries
        SSPoly acc;
        for (auto& ms : multisetsWithSum(s, j)) {
            SSPoly der = applyPDerivatives(f, ms);
            if (der.isZero()) continue;
            Rat c = rhoSeriesCoeff(ms, k);
            if (c.isZero()) continue;
            acc += c * der;
        }
        if (!acc.isZero()) out += SSPoly::generatorQ(k) * acc;
    }
    return out;
}

namespace {

// sparse multivariate polynomial in z_1..z_n
using MPoly = std::map<std::vector<int>, Rat>;

void mAdd(MPoly& p, const std::vector<int>& e, const Rat& c) {
    if (c.isZero()) return;
    auto it = p.find(e);
    if (it == p.end()) p[e] = c;
    else {
        it->second += c;
        if (it->second.isZero()) p.erase(it);
    }
}

MPoly mMul(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) {
            std::vector<int> e = ea;
            for (size_t t = 0; t < e.size(); ++t) e[t] += eb[t];
            mAdd(r, e, ca * cb);
        }
    return r;
}

// exact division by the linear form sum_{v in J} z_v
MPoly mDivLinear(const MPoly& p, const std::vector<int>& J, int n) {
    MPoly rem = p, quot;
    int lead = J.front();
    while (!rem.empty()) {
        auto it = rem.rbegin();  // largest exponent vector lexicographically... use last key
        auto e = it->first;
        Rat c = it->second;
        if (e[lead] == 0) throw std::logic_error("rho correlator: R_i not divisible by z_J");
        std::vector<int> q = e;
        q[lead] -= 1;
        mAdd(quot, q, c);
        for (int v : J) {
            std::vector<int> t = q;
            t[v] += 1;
            mAdd(rem, t, -c);
        }
    }
    return quot;
}

}  // namespace

SSPoly rho_ij_correlator(int i, int j, const std::vector<int>& ks) {
    int n = static_cast<int>(ks.size());
    SSPoly out;
    if (n < j) return out;  // = 0 if n < j
    if (j == 0) {
        // the closed formula degenerates at J = {}; rho_{i,0} = delta_{i,0} Id
        if (i != 0) return out;
        SSPoly prod(Rat(1));
        for (int k : ks) prod = prod * SSPoly::generatorQ(k);
        return prod;
    }
    if (i % 2 == 1) return out;
    // iterate over subsets J of size j
    std::vector<int> idx(j);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == j) {
            std::vector<int> J(idx.begin(), idx.end());
            // generating factor product: coefficient of t^i in
            // (sinh(t z_J/2)/(t/2)) prod_{v in J} (sinh(t z_v/2)/(t/2))
            // each factor: sum_m t^{2m} w^{2m+1} / (4^m (2m+1)!)
            // accumulate per power of t (t-degree even, <= i)
            std::vector<MPoly> byT(i + 1);  // t-degree -> polynomial in z
            {
                // start with the z_J factor
                MPoly zJ;
                for (int v : J) {
                    std::vector<int> e(n, 0);
                    e[v] = 1;
                    mAdd(zJ, e, Rat(1));
                }
                std::vector<MPoly> zJpow{MPoly{{std::vector<int>(n, 0), Rat(1)}}};
                for (int m = 1; m <= 2 * (i / 2) + 1; ++m) zJpow.push_back(mMul(zJpow.back(), zJ));
                for (int m = 0; 2 * m <= i; ++m) {
                    MPoly term = zJpow[2 * m + 1];
                    Rat c = Rat(Int(1), powInt(4, m) * factorial(2 * m + 1));
                    for (auto& [e, cc] : term) mAdd(byT[2 * m], e, cc * c);
                }
                for (int v : J) {
                    std::vector<MPoly> nxt(i + 1);
                    for (int d = 0; d <= i; ++d) {
                        if (byT[d].empty()) continue;
                        for (int m = 0; d + 2 * m <= i; ++m) {
                            std::vector<int> e(n, 0);
                            e[v] = 2 * m + 1;
                            MPoly zf{{e, Rat(Int(1), powInt(4, m) * factorial(2 * m + 1))}};
                            MPoly prod = mMul(byT[d], zf);
                            for (auto& [ee, cc] : prod) mAdd(nxt[d + 2 * m], ee, cc);
                        }
                    }
                    byT = std::move(nxt);
                }
            }
            MPoly Ri = byT[i];
            if (!Ri.empty()) {
                // required W(z_J)-index: m with (m-1) + (i+j+1) = sum_{v in J} (k_v - 1)
                int target = 0;
                for (int v : J) target += ks[v] - 1;
                int m = target - i - j;
                if (m >= 0) {
                    MPoly piece;
                    if (m == 0) piece = mDivLinear(Ri, J, n);
                    else {
                        MPoly zJ;
                        for (int v : J) {
                            std::vector<int> e(n, 0);
                            e[v] = 1;
                            mAdd(zJ, e, Rat(1));
                        }
                        piece = Ri;
                        for (int t = 0; t < m - 1; ++t) piece = mMul(piece, zJ);
                    }
                    // coefficient of prod_{v in J} z_v^{k_v - 1}
                    std::vector<int> want(n, 0);
                    for (int v : J) want[v] = ks[v] - 1;
                    auto it = piece.find(want);
                    if (it != piece.end() && !it->second.isZero()) {
                        SSPoly term = SSPoly::generatorQ(m, it->second);
                        for (int v = 0; v < n; ++v)
                            if (std::find(J.begin(), J.end(), v) == J.end())
                                term = term * SSPoly::generatorQ(ks[v]);
                        out += term;
                    }
                }
            }
            return;
        }
        for (int v = start; v < n; ++v) {
            idx[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 0);
    return out;
}

QSeries eisensteinDerivativeSeries(int k, int j, int order) {
    QSeries g = eisenstein_q(k, order);
    for (int t = 0; t < j; ++t) g = g.thetaDerivative();
    return g;
}

PartitionFunctional hookMomentFunctional(long p) {
    return [p](const Partition& lambda) { return hook_moment_T(lambda, p); };
}

bool effofTp_check(int p, const SSPoly& f, int order) {
    if (p < 1 || p % 2 == 0) throw std::domain_error("effofTp_check: p must be odd and positive");
    SSPoly tp = Ttilde_p(p);
    QSeries lhsRing = qbracket(tp * f, order);
    Rat shift = zetaNegInt(p) / Rat(2);
    QSeries lhsPointwise = qbracket(
        PartitionFunctional([&](const Partition& l) {
            return (hook_moment_T(l, p) + shift) * ss_eval(f, l);
        }),
        order);
    if (lhsRing != lhsPointwise) return false;

    int w = f.weight();
    QSeries rhs = QSeries::zero(order);
    for (int i = 0; i <= w; i += 2)
        for (int j = 0; i + 2 * j <= w; ++j) {
            SSPoly rf = rho_ij(i, j, f);
            if (rf.isZero()) continue;
            rhs += qbracket(rf, order) * eisensteinDerivativeSeries(p + i + 1, j, order);
        }
    return lhsRing == rhs;
}

ModifiedBracket modified_bracket_star(const SSPoly& f, int order) {
    ModifiedBracket mb;
    QSeries fBracket = qbracket(f, order);
    QSeries tm1f = qbracket(
        PartitionFunctional([&](const Partition& l) {
            return hook_moment_T(l, -1) * ss_eval(f, l);
        }),
        order);
    QSeries tm1 = qbracket(hookMomentFunctional(-1), order);
    mb.series = tm1f - tm1 * fBracket - Rat(1, 24) * qbracket(op_partial2(f), order);

    int w = 0;
    bool pure = f.isPureWeight(&w);
    if (!pure) w = f.weight();
    mb.form = recognize(mb.series, w, pure);

    // decomposition via rho*_{i,j} = rho_{i,j} + delta_{i,2} rho_{0,j+1}
    QSeries rhs = QSeries::zero(order);
    int fw = f.weight();
    for (int i = 2; i <= fw + 2; i += 2)
        for (int j = 0; j * 2 <= fw + 2; ++j) {
            SSPoly rf = rho_ij(i, j, f);
            if (i == 2) rf += rho_ij(0, j + 1, f);
            if (rf.isZero()) continue;
            rhs += qbracket(rf, order) * eisensteinDerivativeSeries(i, j, order);
        }
    mb.rhoDecompositionOk = (rhs == mb.series);
    return mb;
}

}  // namespace qmh
