#pragma once

#include "qmh/rat.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace qmh {

/* Integer partitions in canonical form: weakly decreasing positive parts
 * (zero parts are stripped on construction; every formula downstream is
 * insensitive to trailing zeros).  Immutable after construction. */
class Partition {
public:
    Partition() {}
    Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }            // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-based, 0 beyond length

    Partition conjugate() const;
    // multiplicity r_m of the part m
    int multiplicity(int m) const;
    std::map<int, int> multiplicities() const;

    struct Frobenius {
        std::vector<int> arms;  // a_i = lambda_i - i          (0-based i)
        std::vector<int> legs;  // b_i = lambda^vee_i - i
    };
    Frobenius frobenius() const;

    // balanced set C_lambda in Z + 1/2, stored as twice the values
    std::vector<long> balancedSetTwice() const;
    // rebuild a partition from a balanced set (inverse of the above)
    static Partition fromBalancedSetTwice(const std::vector<long>& twiceC);

    // hook length of the cell (i, j), 0-based
    int hookLength(int i, int j) const;
    std::vector<int> hookLengths() const;          // one entry per cell
    std::vector<int> hookCountsNm() const;         // N_m at index m (index 0 unused)

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    std::string str() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::vector<Partition> enumerate_partitions(int d);

// number of partitions via the pentagonal recurrence (independent of the enumerator)
Int partitionCount(int d);

// p-th part-length moment S_p = sum lambda_j^p (exact for negative p too)
Rat part_moment_S(const Partition& mu, long p);

// hook-length moment T_p = sum_{cells} h^(p-1)
Rat hook_moment_T(const Partition& lambda, long p);

struct HookStats {
    std::vector<int> hooks;  // multiset of hook lengths
    std::vector<int> countsNm;
};
HookStats hook_stats(const Partition& lambda);

/* Set partitions of {0..n-1} as block lists; enumerated through restricted
 * growth strings, so blocks come out sorted by smallest element. */
struct SetPartition {
    std::vector<std::vector<int>> blocks;
    int length() const { return static_cast<int>(blocks.size()); }
};

std::vector<SetPartition> enumerate_set_partitions(int n);
Int bellNumber(int n);

SetPartition joinSetPartitions(const SetPartition& a, const SetPartition& b, int n);

// all alpha with alpha v beta = 1_N and |alpha| + |beta| = n + 1
std::vector<SetPartition> complementary_pairs(const SetPartition& beta, int n);
// all alpha with alpha v beta = 1_N (used for the mixed-bracket identity)
std::vector<SetPartition> joiningPartitions(const SetPartition& beta, int n);

/* Symmetric group characters by the Murnaghan-Nakayama rule, memoized
 * globally.  mu is evaluated as given (pad with 1s yourself if needed). */
long long character(const Partition& lambda, const Partition& mu);

// size of the conjugacy class of mu inside S_{|mu|}
Int conjugacyClassSize(const Partition& mu);

/* f_sigma(lambda) = z_sigma chi^lambda(sigma 1^{d-|sigma|}) / dim chi^lambda,
 * with sigma completed by singletons to d = |lambda|; 0 when |sigma| > d. */
Rat f_sigma(const Partition& sigma, const Partition& lambda);

struct CharTable {
    int degree = 0;
    std::vector<Partition> labels;            // all partitions of degree, canonical order
    std::vector<std::vector<long long>> chi;  // chi[lambda][mu]
    std::vector<Int> classSizes;              // z_mu
};
CharTable characterTable(int d);

}  // namespace qmh
