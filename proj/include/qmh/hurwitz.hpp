#pragma once

#include "qmh/qseries.hpp"
#include "qmh/quasimod.hpp"
#include "qmh/ssring.hpp"

#include <vector>

namespace qmh {

/* Ramification profile: one cycle per branch point, stored by cycle
 * length (>= 2).  The weight bound for quasimodularity is
 * wgt = sum (b_i + 1). */
struct Profile {
    std::vector<int> cycles;

    Profile() {}
    explicit Profile(std::vector<int> c) : cycles(std::move(c)) {
        for (int b : cycles)
            if (b < 2) throw std::invalid_argument("Profile: cycle lengths must be >= 2");
    }
    int branchPoints() const { return static_cast<int>(cycles.size()); }
    int weightBound() const {
        int w = 0;
        for (int b : cycles) w += b + 1;
        return w;
    }
    Profile sub(const std::vector<int>& indices) const {
        std::vector<int> c;
        for (int i : indices) c.push_back(cycles[i]);
        return Profile(c);
    }
    std::string str() const;
};

// Burnside count of all covers: N_d = sum_{lambda |- d} prod_i f_{cycle_i}(lambda)
QSeries count_N(const Profile& pi, int order);

// covers without unramified components: N' = N / N()
QSeries count_Nprime(const Profile& pi, int order);

// connected covers by Moebius inversion over set partitions of the branch points
QSeries count_N0(const Profile& pi, int order);

// Siegel-Veech weighted counts (all covers): the T_p-weighted Burnside sum
QSeries count_cp(const Profile& pi, long p, int order);

// c'_p = (c_p - N' c_p()) / N()
QSeries count_cp_prime(const Profile& pi, long p, int order);

// connected Siegel-Veech count via the additive-weight recursion
QSeries count_cp_connected(const Profile& pi, long p, int order);

// brute-force oracle: c_p(d) by the full character double sum (small d only)
Rat cp_character_oracle(const Profile& pi, long p, int d);

// the three series of one statistic, tagged N or c_p
struct CountFamily {
    QSeries all, noUnramified, connected;
};
CountFamily countFamilyN(const Profile& pi, int order);
CountFamily countFamilyCp(const Profile& pi, long p, int order);

struct Certificate {
    QuasiModForm connectedForm;   // recognized c^0_p (or N^0)
    QuasiModForm noUnramifiedForm;
    int weightBound = 0;
    bool pure = false;
};
/* Recognize c^0_p and c'_p as quasimodular forms of mixed weight
 * <= wgt(pi) + p + 1 (pure weight when all cycles are transpositions).
 * The series order must leave >= 5 surplus coefficients. */
Certificate certify_quasimodular(const Profile& pi, long p, int order);
Certificate certify_counting(const Profile& pi, int order);  // same for N^0 / N'

// f_{b-cycle}(lambda): shifted-symmetric fast path for b <= 5, characters beyond
Rat fCycleValue(int b, const Partition& lambda);

}  // namespace qmh
