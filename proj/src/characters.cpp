#include "qmh/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace qmh {

namespace {

/* Murnaghan-Nakayama on beta-sets.  B = {lambda_i + l - i} encodes the
 * boundary of the diagram; removing a rim hook of size m means moving one
 * beta-number down by m into a free slot, with sign (-1)^{#elements jumped}. */
std::vector<long> betaSet(const Partition& lambda) {
    int l = lambda.length();
    std::vector<long> b(l);
    for (int i = 0; i < l; ++i) b[i] = lambda.parts()[i] + (l - 1 - i);
    return b;  // strictly decreasing
}

Partition fromBetaSet(std::vector<long> b) {
    std::sort(b.rbegin(), b.rend());
    int l = static_cast<int>(b.size());
    std::vector<int> parts;
    for (int i = 0; i < l; ++i) {
        long p = b[i] - (l - 1 - i);
        if (p < 0) throw std::logic_error("fromBetaSet: invalid beta set");
        if (p > 0) parts.push_back(static_cast<int>(p));
    }
    return Partition(parts);
}

std::mutex memoMutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;

long long mnRecurse(const Partition& lambda, const std::vector<int>& mu, size_t muIndex) {
    if (lambda.size() == 0) return 1;
    int m = mu[muIndex];
    std::vector<long> b = betaSet(lambda);
    long long total = 0;
    for (size_t i = 0; i < b.size(); ++i) {
        long target = b[i] - m;
        if (target < 0) continue;
        bool occupied = false;
        int jumped = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            if (j == i) continue;
            if (b[j] == target) { occupied = true; break; }
            if (b[j] > target && b[j] < b[i]) ++jumped;
        }
        if (occupied) continue;
        std::vector<long> nb = b;
        nb[i] = target;
        long long sub = mnRecurse(fromBetaSet(nb), mu, muIndex + 1);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    return total;
}

}  // namespace

long long character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("character: |lambda| != |mu|");
    auto key = std::make_pair(lambda.parts(), mu.parts());
    {
        std::lock_guard<std::mutex> lock(memoMutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    long long v = mnRecurse(lambda, mu.parts(), 0);
    std::lock_guard<std::mutex> lock(memoMutex);
    memo.emplace(std::move(key), v);
    return v;
}

Int conjugacyClassSize(const Partition& mu) {
    Int denom(1);
    for (auto& [m, r] : mu.multiplicities()) denom *= powInt(Int(m), r) * factorial(r);
    return factorial(mu.size()) / denom;
}

Rat f_sigma(const Partition& sigma, const Partition& lambda) {
    int d = lambda.size();
    int j = sigma.size();
    if (j > d) return Rat(0);
    std::vector<int> parts = sigma.parts();
    for (int i = j; i < d; ++i) parts.push_back(1);
    std::sort(parts.rbegin(), parts.rend());
    Partition mu(parts);
    /* z counts the embeddings of the pattern sigma into d points:
     * d! / ((d-j)! prod m^{r_m(sigma)} r_m(sigma)!).  This equals the
     * S_d class size of mu when sigma has no 1-parts, but keeps the
     * Kerov-Olshanski normalization (f_1 = p_1 + 1/24) when it does. */
    Int z = factorial(d) / factorial(d - j);
    for (auto& [m, r] : sigma.multiplicities()) z /= powInt(Int(m), r) * factorial(r);
    // dim chi^lambda from the hook length formula
    Int dim = factorial(d);
    for (int h : lambda.hookLengths()) dim /= h;
    return Rat(z) * Rat(character(lambda, mu)) / Rat(dim);
}

CharTable characterTable(int d) {
    CharTable t;
    t.degree = d;
    t.labels = enumerate_partitions(d);
    int n = static_cast<int>(t.labels.size());
    t.chi.assign(n, std::vector<long long>(n, 0));
    t.classSizes.resize(n);
    for (int j = 0; j < n; ++j) t.classSizes[j] = conjugacyClassSize(t.labels[j]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.chi[i][j] = character(t.labels[i], t.labels[j]);
    return t;
}

}  // namespace qmh
