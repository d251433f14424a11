#include "qmh/quasimod.hpp"

#include "qmh/bernoulli.hpp"

#include <cmath>
#include <mutex>
#include <sstream>

namespace qmh {

std::set<int> QuasiModForm::weightSupport() const {
    std::set<int> w;
    for (auto& [k, c] : c_) w.insert(monomialWeight(k));
    return w;
}

bool QuasiModForm::isPureWeight(int* weightOut) const {
    auto w = weightSupport();
    if (w.size() > 1) return false;
    if (weightOut) *weightOut = w.empty() ? 0 : *w.begin();
    return true;
}

QuasiModForm QuasiModForm::gradedPiece(int weight) const {
    QuasiModForm r;
    for (auto& [k, c] : c_)
        if (monomialWeight(k) == weight) r.c_[k] = c;
    return r;
}

QuasiModForm QuasiModForm::operator-() const {
    QuasiModForm r;
    for (auto& [k, c] : c_) r.c_[k] = -c;
    return r;
}

QuasiModForm& QuasiModForm::operator+=(const QuasiModForm& o) {
    for (auto& [k, c] : o.c_) {
        Rat s = coeff(k) + c;
        if (s.isZero()) c_.erase(k); else c_[k] = s;
    }
    return *this;
}

QuasiModForm operator*(const QuasiModForm& a, const QuasiModForm& b) {
    QuasiModForm r;
    for (auto& [ka, ca] : a.c_)
        for (auto& [kb, cb] : b.c_) {
            QuasiModForm::Key k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
            Rat s = r.coeff(k) + ca * cb;
            if (s.isZero()) r.c_.erase(k); else r.c_[k] = s;
        }
    return r;
}

QuasiModForm operator*(const Rat& a, const QuasiModForm& b) {
    QuasiModForm r;
    if (a.isZero()) return r;
    for (auto& [k, c] : b.coeffs()) r += QuasiModForm::monomial(k[0], k[1], k[2], a * c);
    return r;
}

std::string QuasiModForm::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : c_) {
        Rat v = c;
        if (!first) {
            os << (v.sign() < 0 ? " - " : " + ");
            if (v.sign() < 0) v = -v;
        }
        std::string mono;
        auto app = [&mono](const char* g, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += g;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        app("P", k[0]);
        app("Q", k[1]);
        app("R", k[2]);
        if (mono.empty()) os << v.str();
        else if (v == Rat(1)) os << mono;
        else os << v.str() << "*" << mono;
        first = false;
    }
    return os.str();
}

QSeries eisenstein_q(int k, int order) {
    if (k < 2 || k % 2 != 0) throw std::domain_error("eisenstein_q: k must be even and >= 2");
    QSeries s(order);
    s.set(0, -bernoulliB(k) / Rat(2 * k));
    for (int n = 1; n <= order; ++n) s.set(n, sigmaPower(n, k - 1));
    return s;
}

namespace {

std::mutex genMutex;
int genOrder = -1;
QSeries genP, genQ, genR;

void ensureGenerators(int order) {
    std::lock_guard<std::mutex> lock(genMutex);
    if (order <= genOrder) return;
    genP = Rat(-24) * eisenstein_q(2, order);
    genQ = Rat(240) * eisenstein_q(4, order);
    genR = Rat(-504) * eisenstein_q(6, order);
    genOrder = order;
}

QSeries generatorSeries(int which, int order) {
    ensureGenerators(order);
    std::lock_guard<std::mutex> lock(genMutex);
    const QSeries& g = which == 0 ? genP : which == 1 ? genQ : genR;
    return g.truncated(order);
}

}  // namespace

QSeries qmf_to_qseries(const QuasiModForm& f, int order) {
    QSeries out = QSeries::zero(order);
    for (auto& [k, c] : f.coeffs()) {
        QSeries term = QSeries::monomial(c, 0, order);
        for (int which = 0; which < 3; ++which) {
            if (k[which] == 0) continue;
            QSeries g = generatorSeries(which, order);
            for (int e = 0; e < k[which]; ++e) term = term * g;
        }
        out += term;
    }
    return out;
}

QuasiModForm eisensteinForm(int k) {
    if (k < 2 || k % 2 != 0) throw std::domain_error("eisensteinForm: k must be even and >= 2");
    if (k == 2) return Rat(-1, 24) * QuasiModForm::P();
    if (k == 4) return Rat(1, 240) * QuasiModForm::Q();
    if (k == 6) return Rat(-1, 504) * QuasiModForm::R();
    int order = static_cast<int>(recognitionBasis(k, true).size()) + 5;
    return recognize(eisenstein_q(k, order), k, true);
}

QuasiModForm derive_D(const QuasiModForm& f) {
    // D(P) = (P^2-Q)/12, D(Q) = (PQ-R)/3, D(R) = (PR-Q^2)/2, extended as a derivation
    static const QuasiModForm dP = Rat(1, 12) * (QuasiModForm::P() * QuasiModForm::P() - QuasiModForm::Q());
    static const QuasiModForm dQ = Rat(1, 3) * (QuasiModForm::P() * QuasiModForm::Q() - QuasiModForm::R());
    static const QuasiModForm dR = Rat(1, 2) * (QuasiModForm::P() * QuasiModForm::R() - QuasiModForm::Q() * QuasiModForm::Q());
    QuasiModForm r;
    for (auto& [k, c] : f.coeffs()) {
        for (int which = 0; which < 3; ++which) {
            if (k[which] == 0) continue;
            QuasiModForm::Key rest = k;
            rest[which]--;
            QuasiModForm term = QuasiModForm::monomial(rest[0], rest[1], rest[2], c * Rat(k[which]));
            r += term * (which == 0 ? dP : which == 1 ? dQ : dR);
        }
    }
    return r;
}

QuasiModForm derive_frakd(const QuasiModForm& f) {
    QuasiModForm r;
    for (auto& [k, c] : f.coeffs())
        if (k[0] > 0) r += QuasiModForm::monomial(k[0] - 1, k[1], k[2], Rat(12 * k[0]) * c);
    return r;
}

QuasiModForm weightOperator(const QuasiModForm& f) {
    QuasiModForm r;
    for (auto& [k, c] : f.coeffs())
        r += QuasiModForm::monomial(k[0], k[1], k[2], Rat(QuasiModForm::monomialWeight(k)) * c);
    return r;
}

QuasiModForm theta_H(int n) {
    if (n < 0) throw std::domain_error("theta_H: n must be >= 0");
    if (n % 2 == 1) return QuasiModForm();
    std::vector<QuasiModForm> H{QuasiModForm(Rat(1))};
    QuasiModForm P = QuasiModForm::P();
    for (int m = 2; m <= n; m += 2) {
        const QuasiModForm& prev = H.back();
        QuasiModForm next = Rat(1, 4 * m * (m + 1)) * (Rat(8) * derive_D(prev) + P * prev);
        H.push_back(next);
    }
    return H.back();
}

Rat constantTerm(const QuasiModForm& f) {
    // a_0(P^a Q^b R^c) = 1 for every monomial
    Rat s(0);
    for (auto& [k, c] : f.coeffs()) s += c;
    return s;
}

int GrowthPoly::degree() const {
    for (int j = static_cast<int>(x.size()) - 1; j >= 0; --j)
        if (!x[j].isZero()) return j;
    return -1;
}

GrowthPoly evX(const QuasiModForm& f) {
    GrowthPoly g;
    for (auto& [k, c] : f.coeffs()) {
        // (X+12)^a * X^{2b+3c}
        int base = 2 * k[1] + 3 * k[2];
        for (int j = 0; j <= k[0]; ++j) {
            int deg = base + j;
            if (static_cast<int>(g.x.size()) <= deg) g.x.resize(deg + 1, Rat(0));
            g.x[deg] += c * Rat(binomialInt(k[0], j)) * Rat(powInt(Int(12), k[0] - j));
        }
    }
    while (!g.x.empty() && g.x.back().isZero()) g.x.pop_back();
    return g;
}

GrowthPoly evh(const QuasiModForm& f) {
    int weight = 0;
    if (!f.isPureWeight(&weight))
        throw std::domain_error("evh: mixed-weight input; apply per graded piece");
    if (weight % 2 != 0) throw std::domain_error("evh: odd weight");
    int k = weight / 2;
    GrowthPoly g = evX(f);
    // X^j -> (-4 pi^2)^j h^{-j}; overall h^{-k}
    for (int j = 0; j < static_cast<int>(g.x.size()); ++j) {
        if (g.x[j].isZero()) continue;
        Rat c = g.x[j] * Rat(powInt(Int(4), j)) * ((j % 2 == 1) ? Rat(-1) : Rat(1));
        PiPoly term = PiPoly::piSquaredPow(j, c);
        auto it = g.hInv.find(k + j);
        if (it == g.hInv.end()) g.hInv[k + j] = term;
        else it->second += term;
    }
    return g;
}

std::vector<QuasiModForm::Key> recognitionBasis(int maxWeight, bool pure) {
    std::vector<QuasiModForm::Key> basis;
    for (int c = 0; 6 * c <= maxWeight; ++c)
        for (int b = 0; 4 * b + 6 * c <= maxWeight; ++b)
            for (int a = 0; 2 * a + 4 * b + 6 * c <= maxWeight; ++a) {
                int w = 2 * a + 4 * b + 6 * c;
                if (pure && w != maxWeight) continue;
                basis.push_back({a, b, c});
            }
    return basis;
}

QuasiModForm recognize(const QSeries& s, int maxWeight, bool pure, int surplus) {
    auto basis = recognitionBasis(maxWeight, pure);
    int cols = static_cast<int>(basis.size());
    int rows = s.order() + 1;
    if (rows < cols + surplus)
        throw RecognitionError(RecognitionError::Underdetermined,
                               "recognize: need at least " + std::to_string(cols + surplus) +
                                   " coefficients, have " + std::to_string(rows));
    // augmented matrix [ basis q-expansions | s ]
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1, Rat(0)));
    for (int j = 0; j < cols; ++j) {
        auto& k = basis[j];
        QSeries col = qmf_to_qseries(QuasiModForm::monomial(k[0], k[1], k[2]), s.order());
        for (int i = 0; i < rows; ++i) m[i][j] = col.at(i);
    }
    for (int i = 0; i < rows; ++i) m[i][cols] = s.at(i);

    // exact Gaussian elimination
    std::vector<int> pivotCol;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int best = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].isZero()) { best = i; break; }
        if (best < 0) continue;
        std::swap(m[r], m[best]);
        Rat inv = Rat(1) / m[r][c];
        for (int j = c; j <= cols; ++j) m[r][j] = m[r][j] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].isZero()) continue;
            Rat f = m[i][c];
            for (int j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivotCol.push_back(c);
        ++r;
    }
    // inconsistent rows mean the series is not quasimodular of this weight
    for (int i = r; i < rows; ++i)
        if (!m[i][cols].isZero())
            throw RecognitionError(RecognitionError::NoSolution,
                                   "recognize: series is not a quasimodular form of weight <= " +
                                       std::to_string(maxWeight));
    if (r < cols)
        throw RecognitionError(RecognitionError::Underdetermined,
                               "recognize: coefficient system is underdetermined");
    QuasiModForm out;
    for (int i = 0; i < r; ++i) {
        auto& k = basis[pivotCol[i]];
        if (!m[i][cols].isZero()) out += QuasiModForm::monomial(k[0], k[1], k[2], m[i][cols]);
    }
    return out;
}

CoeffSumReport coeff_sum_asy_check(const QuasiModForm& f, int nmax) {
    GrowthPoly g = evh(f);
    CoeffSumReport rep;
    if (g.hInv.empty()) throw std::domain_error("coeff_sum_asy_check: vanishing growth polynomial");
    auto lead = g.hInv.rbegin();
    rep.power = lead->first;
    rep.leading = lead->second;
    QSeries qs = qmf_to_qseries(f, nmax);
    double A = 0;
    for (auto& [k, c] : rep.leading.coeffs()) {
        double pi2 = 9.869604401089358;
        A += c.toDouble() * std::pow(pi2, k);
    }
    Rat partial(0);
    double pfac = 1;
    for (int j = 2; j <= rep.power; ++j) pfac *= j;
    for (int n = 1; n <= nmax; ++n) {
        partial += qs.at(n);
        if (n % (nmax / 8 > 0 ? nmax / 8 : 1) == 0 || n == nmax) {
            double expect = A * std::pow(static_cast<double>(n), rep.power) / pfac;
            rep.ratios.push_back(partial.toDouble() / expect);
        }
    }
    rep.converging = !rep.ratios.empty() && std::abs(rep.ratios.back() - 1.0) < 0.05;
    return rep;
}

}  // namespace qmh
