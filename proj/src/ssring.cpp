#include "qmh/ssring.hpp"

#include "qmh/bernoulli.hpp"
#include "qmh/parallel.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace qmh {

namespace {
void stripKey(SSPoly::Key& k) {
    while (!k.empty() && k.back() == 0) k.pop_back();
}
}

SSPoly SSPoly::generatorQ(int k, const Rat& coeff) {
    if (k < 0) throw std::domain_error("SSPoly: negative generator index");
    if (k == 0) return SSPoly(coeff);
    Key key(k, 0);
    key[k - 1] = 1;
    return monomialFromKey(key, coeff);
}

SSPoly SSPoly::generatorP(int l) {
    if (l < 1) throw std::domain_error("SSPoly: p_l needs l >= 1");
    return generatorQ(l + 1, Rat(factorial(l)));
}

SSPoly SSPoly::monomialFromKey(const Key& key, const Rat& coeff) {
    SSPoly f;
    if (coeff.isZero()) return f;
    Key k = key;
    stripKey(k);
    f.c_[k] = coeff;
    return f;
}

int SSPoly::weight() const {
    int w = 0;
    for (auto& [k, c] : c_) w = std::max(w, keyWeight(k));
    return w;
}

bool SSPoly::isPureWeight(int* weightOut) const {
    int w = -1;
    for (auto& [k, c] : c_) {
        int kw = keyWeight(k);
        if (w == -1) w = kw;
        else if (w != kw) return false;
    }
    if (weightOut) *weightOut = (w == -1 ? 0 : w);
    return true;
}

int SSPoly::maxGenerator() const {
    int m = 0;
    for (auto& [k, c] : c_) m = std::max(m, static_cast<int>(k.size()));
    return m;
}

SSPoly SSPoly::operator-() const {
    SSPoly r;
    for (auto& [k, c] : c_) r.c_[k] = -c;
    return r;
}

void SSPoly::add(const Key& k, const Rat& c) {
    if (c.isZero()) return;
    Rat s = coeff(k) + c;
    if (s.isZero()) c_.erase(k); else c_[k] = s;
}

SSPoly& SSPoly::operator+=(const SSPoly& o) {
    for (auto& [k, c] : o.c_) add(k, c);
    return *this;
}

SSPoly operator*(const SSPoly& a, const SSPoly& b) {
    SSPoly r;
    for (auto& [ka, ca] : a.c_)
        for (auto& [kb, cb] : b.c_) {
            SSPoly::Key k(std::max(ka.size(), kb.size()), 0);
            for (size_t i = 0; i < ka.size(); ++i) k[i] += ka[i];
            for (size_t i = 0; i < kb.size(); ++i) k[i] += kb[i];
            r.add(k, ca * cb);
        }
    return r;
}

SSPoly operator*(const Rat& a, const SSPoly& b) {
    SSPoly r;
    for (auto& [k, c] : b.c_) r.add(k, a * c);
    return r;
}

SSPoly SSPoly::dQ(int k) const {
    if (k < 1) throw std::domain_error("SSPoly::dQ: k >= 1");
    SSPoly r;
    for (auto& [key, c] : c_) {
        if (static_cast<int>(key.size()) < k || key[k - 1] == 0) continue;
        Key nk = key;
        nk[k - 1]--;
        stripKey(nk);
        r.add(nk, c * Rat(key[k - 1]));
    }
    return r;
}

std::string SSPoly::str() const {
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
        for (size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "Q" + std::to_string(i + 1);
            if (k[i] > 1) mono += "^" + std::to_string(k[i]);
        }
        if (mono.empty()) os << v.str();
        else if (v == Rat(1)) os << mono;
        else os << v.str() << "*" << mono;
        first = false;
    }
    return os.str();
}

Rat powerSumP(const Partition& lambda, int l) {
    // sum over the balanced set, sgn(c) c^l; values stored as 2c
    Rat s(0);
    for (long t : lambda.balancedSetTwice()) {
        Rat term = Rat(Int(t), Int(2)).pow(l);
        s += (t > 0) ? term : -term;
    }
    return s;
}

Rat evalQk(const Partition& lambda, int k) {
    if (k < 0) throw std::domain_error("evalQk: k >= 0");
    if (k == 0) return Rat(1);
    return powerSumP(lambda, k - 1) / Rat(factorial(k - 1)) + betaCoeff(k);
}

namespace {

// per-partition cache of Q_k values; single mutex, values immutable once inserted
std::mutex qCacheMutex;
std::map<std::vector<int>, std::vector<Rat>> qCache;

std::vector<Rat> qValues(const Partition& lambda, int maxK) {
    {
        std::lock_guard<std::mutex> lock(qCacheMutex);
        auto it = qCache.find(lambda.parts());
        if (it != qCache.end() && static_cast<int>(it->second.size()) > maxK) return it->second;
    }
    std::vector<Rat> vals(maxK + 1);
    for (int k = 0; k <= maxK; ++k) vals[k] = evalQk(lambda, k);
    std::lock_guard<std::mutex> lock(qCacheMutex);
    auto& slot = qCache[lambda.parts()];
    if (static_cast<int>(slot.size()) <= maxK) slot = vals;
    return slot;
}

}  // namespace

Rat ss_eval(const SSPoly& f, const Partition& lambda) {
    int maxK = f.maxGenerator();
    std::vector<Rat> q = qValues(lambda, maxK);
    Rat s(0);
    for (auto& [key, c] : f.coeffs()) {
        Rat t = c;
        for (size_t i = 0; i < key.size() && !t.isZero(); ++i)
            for (int e = 0; e < key[i]; ++e) t *= q[i + 1];
        s += t;
    }
    return s;
}

QSeries partitionSum(const PartitionFunctional& f, int order) {
    QSeries s(order);
    for (int d = 0; d <= order; ++d) {
        auto parts = enumerate_partitions(d);
        std::vector<Rat> vals(parts.size());
        parallel_for(parts.size(), [&](size_t i) { vals[i] = f(parts[i]); });
        Rat c(0);
        for (auto& v : vals) c += v;
        s.set(d, c);
    }
    return s;
}

QSeries qbracket(const PartitionFunctional& f, int order) {
    return partitionSum(f, order) / partition_function_series(order);
}

QSeries qbracket(const SSPoly& f, int order) {
    return qbracket([&f](const Partition& l) { return ss_eval(f, l); }, order);
}

SSPoly op_partial(const SSPoly& f) {
    SSPoly r;
    for (int k = 1; k <= f.maxGenerator(); ++k)
        r += f.dQ(k) * SSPoly::generatorQ(k - 1);
    return r;
}

SSPoly op_partial2(const SSPoly& f) {
    SSPoly r;
    for (int k = 2; k <= f.maxGenerator(); ++k)
        r += f.dQ(k) * SSPoly::generatorQ(k - 2);
    return r;
}

SSPoly op_Delta(const SSPoly& f) {
    int maxG = f.maxGenerator();
    SSPoly r;
    for (int k = 0; k + 1 <= maxG; ++k)
        for (int l = 0; l + 1 <= maxG; ++l) {
            SSPoly second = f.dQ(k + 1).dQ(l + 1);
            if (second.isZero()) continue;
            r += Rat(binomialInt(k + l, k)) * (SSPoly::generatorQ(k + l) * second);
        }
    return r;
}

SSPoly op_euler(const SSPoly& f) {
    SSPoly r;
    for (auto& [key, c] : f.coeffs())
        r += SSPoly::monomialFromKey(key, c * Rat(SSPoly::keyWeight(key)));
    return r;
}

SSPoly Ttilde_p(int p) {
    if (p < 1 || p % 2 == 0) throw std::domain_error("Ttilde_p: p must be odd and >= 1");
    SSPoly s;
    for (int k = 0; k <= p + 1; ++k) {
        if (k == 1 || p - k == 0) continue;  // Q_1 vanishes on every partition; take the Lambda*-representative
        SSPoly term = SSPoly::generatorQ(k) * SSPoly::generatorQ(p + 1 - k);
        s += ((k % 2 == 0) ? Rat(1) : Rat(-1)) * term;
    }
    return Rat(factorial(p - 1), Int(2)) * s;
}

SSPoly fCyclePoly(int k) {
    auto p = [](int l) { return SSPoly::generatorP(l); };
    switch (k) {
        case 1:
            return p(1) + SSPoly(Rat(1, 24));
        case 2:
            return Rat(1, 2) * p(2);
        case 3:
            return Rat(1, 3) * p(3) - Rat(1, 2) * (p(1) * p(1)) + Rat(3, 8) * p(1) + SSPoly(Rat(9, 640));
        case 4:
            return Rat(1, 4) * p(4) - p(2) * p(1) + Rat(4, 3) * p(2);
        case 5:
            return Rat(1, 5) * p(5) - p(3) * p(1) - Rat(1, 2) * (p(2) * p(2)) + Rat(5, 6) * (p(1) * p(1) * p(1)) -
                   Rat(175, 48) * (p(1) * p(1)) + Rat(25, 8) * p(3) + Rat(2375, 1152) * p(1) + SSPoly(Rat(40625, 580608));
        default:
            throw std::domain_error("fCyclePoly: only cycles of length <= 5 have a stored polynomial");
    }
}

Rat muHomomorphism(const SSPoly& f) {
    Rat s(0);
    for (auto& [key, c] : f.coeffs()) {
        Rat t = c;
        for (size_t i = 0; i < key.size(); ++i) {
            int n = static_cast<int>(i + 1);
            Rat v = Rat(1 - n) / Rat(factorial(n));
            for (int e = 0; e < key[i]; ++e) t *= v;
        }
        s += t;
    }
    return s;
}

}  // namespace qmh
