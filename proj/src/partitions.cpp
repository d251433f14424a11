#include "qmh/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qmh {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> c(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) c[j]++;
    return Partition(c);
}

int Partition::multiplicity(int m) const {
    int r = 0;
    for (int p : parts_) r += (p == m);
    return r;
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> r;
    for (int p : parts_) r[p]++;
    return r;
}

Partition::Frobenius Partition::frobenius() const {
    Frobenius f;
    Partition conj = conjugate();
    for (int i = 0; i < length(); ++i) {
        if (parts_[i] <= i) break;
        f.arms.push_back(parts_[i] - i - 1);
        f.legs.push_back(conj.parts()[i] - i - 1);
    }
    return f;
}

std::vector<long> Partition::balancedSetTwice() const {
    Frobenius f = frobenius();
    std::vector<long> c;
    for (int a : f.arms) c.push_back(2L * a + 1);   // a_i + 1/2
    for (int b : f.legs) c.push_back(-2L * b - 1);  // -b_i - 1/2
    return c;
}

Partition Partition::fromBalancedSetTwice(const std::vector<long>& twiceC) {
    std::vector<long> arms, legs;
    for (long t : twiceC) {
        if (t % 2 == 0) throw std::invalid_argument("balanced set must live in Z + 1/2");
        if (t > 0) arms.push_back((t - 1) / 2);
        else legs.push_back((-t - 1) / 2);
    }
    if (arms.size() != legs.size()) throw std::invalid_argument("balanced set is not balanced");
    std::sort(arms.rbegin(), arms.rend());
    std::sort(legs.rbegin(), legs.rend());
    int s = static_cast<int>(arms.size());
    // rows above the diagonal, then fill row lengths below it from the legs
    std::vector<int> rowLen;
    for (int i = 0; i < s; ++i) rowLen.push_back(static_cast<int>(arms[i]) + i + 1);
    // legs give the conjugate rows; convert to the number of rows j > s with given length
    int maxRows = s + (s > 0 ? static_cast<int>(legs[0]) + 1 : 0);
    for (int j = s; j < maxRows; ++j) {
        int len = 0;
        for (int i = 0; i < s; ++i)
            if (static_cast<int>(legs[i]) + i + 1 > j) ++len;
        if (len == 0) break;
        rowLen.push_back(len);
    }
    return Partition(rowLen);
}

int Partition::hookLength(int i, int j) const {
    Partition conj = conjugate();
    return parts_[i] - j + conj.parts()[j] - i - 1;
}

std::vector<int> Partition::hookLengths() const {
    std::vector<int> hooks;
    Partition conj = conjugate();
    for (int i = 0; i < length(); ++i)
        for (int j = 0; j < parts_[i]; ++j)
            hooks.push_back(parts_[i] - j + conj.parts()[j] - i - 1);
    return hooks;
}

std::vector<int> Partition::hookCountsNm() const {
    std::vector<int> counts(size_ + 1, 0);
    for (int h : hookLengths()) counts[h]++;
    return counts;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < length(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

namespace {
void enumerateRec(int remaining, int maxPart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, maxPart); p >= 1; --p) {
        cur.push_back(p);
        enumerateRec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int d) {
    if (d < 0) throw std::invalid_argument("enumerate_partitions: d must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    enumerateRec(d, d, cur, out);
    if (d == 0) out = {Partition()};
    return out;
}

Int partitionCount(int d) {
    static std::vector<Int> cache{Int(1)};
    for (int n = static_cast<int>(cache.size()); n <= d; ++n) {
        Int s(0);
        for (long k = 1;; ++k) {
            long e1 = k * (3 * k - 1) / 2, e2 = k * (3 * k + 1) / 2;
            if (e1 > n && e2 > n) break;
            Int t(0);
            if (e1 <= n) t += cache[n - e1];
            if (e2 <= n) t += cache[n - e2];
            if (k % 2 == 1) s += t; else s -= t;
        }
        cache.push_back(s);
    }
    return cache[d];
}

Rat part_moment_S(const Partition& mu, long p) {
    Rat s(0);
    for (int part : mu.parts()) s += powRat(part, p);
    return s;
}

Rat hook_moment_T(const Partition& lambda, long p) {
    Rat s(0);
    for (int h : lambda.hookLengths()) s += powRat(h, p - 1);
    return s;
}

HookStats hook_stats(const Partition& lambda) {
    HookStats st;
    st.hooks = lambda.hookLengths();
    std::sort(st.hooks.begin(), st.hooks.end());
    st.countsNm = lambda.hookCountsNm();
    return st;
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_set_partitions: n must be >= 0");
    std::vector<SetPartition> out;
    if (n == 0) {
        out.push_back(SetPartition{});
        return out;
    }
    // restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1])
    std::vector<int> a(n, 0);
    auto emit = [&] {
        int m = *std::max_element(a.begin(), a.end());
        SetPartition sp;
        sp.blocks.assign(m + 1, {});
        for (int i = 0; i < n; ++i) sp.blocks[a[i]].push_back(i);
        out.push_back(std::move(sp));
    };
    while (true) {
        emit();
        int i = n - 1;
        for (; i >= 1; --i) {
            int mx = 0;
            for (int j = 0; j < i; ++j) mx = std::max(mx, a[j]);
            if (a[i] <= mx) break;
        }
        if (i < 1) break;
        a[i]++;
        for (int j = i + 1; j < n; ++j) a[j] = 0;
    }
    return out;
}

Int bellNumber(int n) {
    // Bell triangle
    std::vector<Int> row{Int(1)};
    for (int i = 1; i <= n; ++i) {
        std::vector<Int> next;
        next.push_back(row.back());
        for (size_t j = 0; j < row.size(); ++j) next.push_back(next.back() + row[j]);
        row = std::move(next);
    }
    return row.front();
}

namespace {
struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};
}  // namespace

SetPartition joinSetPartitions(const SetPartition& a, const SetPartition& b, int n) {
    DSU dsu(n);
    for (auto& blk : a.blocks)
        for (size_t i = 1; i < blk.size(); ++i) dsu.unite(blk[0], blk[i]);
    for (auto& blk : b.blocks)
        for (size_t i = 1; i < blk.size(); ++i) dsu.unite(blk[0], blk[i]);
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[dsu.find(i)].push_back(i);
    SetPartition r;
    for (auto& [root, blk] : groups) r.blocks.push_back(blk);
    return r;
}

std::vector<SetPartition> joiningPartitions(const SetPartition& beta, int n) {
    std::vector<SetPartition> out;
    for (auto& alpha : enumerate_set_partitions(n))
        if (joinSetPartitions(alpha, beta, n).length() == 1) out.push_back(alpha);
    return out;
}

std::vector<SetPartition> complementary_pairs(const SetPartition& beta, int n) {
    std::vector<SetPartition> out;
    for (auto& alpha : joiningPartitions(beta, n))
        if (alpha.length() + beta.length() == n + 1) out.push_back(alpha);
    return out;
}

}  // namespace qmh
