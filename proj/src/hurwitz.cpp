#include "qmh/hurwitz.hpp"

#include "qmh/parallel.hpp"
#include "qmh/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace qmh {

std::string Profile::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < cycles.size(); ++i) os << (i ? "," : "") << cycles[i];
    return os.str();
}

Rat fCycleValue(int b, const Partition& lambda) {
    if (b <= 5) return ss_eval(fCyclePoly(b), lambda);
    return f_sigma(Partition(std::vector<int>{b}), lambda);
}

namespace {

// sum over partitions of each degree of a per-partition weight
QSeries burnsideSum(const Profile& pi, int order,
                    const std::function<Rat(const Partition&)>& extraWeight) {
    QSeries s(order);
    for (int d = 0; d <= order; ++d) {
        auto parts = enumerate_partitions(d);
        std::vector<Rat> vals(parts.size());
        parallel_for(parts.size(), [&](size_t idx) {
            const Partition& lambda = parts[idx];
            Rat t = extraWeight ? extraWeight(lambda) : Rat(1);
            for (int b : pi.cycles) {
                if (t.isZero()) break;
                t *= fCycleValue(b, lambda);
            }
            vals[idx] = t;
        });
        Rat c(0);
        for (auto& v : vals) c += v;
        s.set(d, c);
    }
    return s;
}

/* Sub-profile series recur heavily through the set-partition formulas, so
 * every public series is memoized by (sorted profile, statistic, order). */
std::mutex seriesMemoMutex;
std::map<std::string, QSeries> seriesMemo;

QSeries memoized(const std::string& key, int order, const std::function<QSeries()>& compute) {
    {
        std::lock_guard<std::mutex> lock(seriesMemoMutex);
        auto it = seriesMemo.find(key);
        if (it != seriesMemo.end() && it->second.order() >= order)
            return it->second.truncated(order);
    }
    QSeries s = compute();
    std::lock_guard<std::mutex> lock(seriesMemoMutex);
    auto it = seriesMemo.find(key);
    if (it == seriesMemo.end() || it->second.order() < s.order()) seriesMemo[key] = s;
    return s;
}

std::string profileKey(const Profile& pi, const std::string& tag, long p) {
    std::vector<int> c = pi.cycles;
    std::sort(c.begin(), c.end());
    std::string k = tag + ":" + std::to_string(p) + ":";
    for (int b : c) k += std::to_string(b) + ",";
    return k;
}

}  // namespace

QSeries count_N(const Profile& pi, int order) {
    return memoized(profileKey(pi, "N", 0), order,
                    [&] { return burnsideSum(pi, order, nullptr); });
}

QSeries count_Nprime(const Profile& pi, int order) {
    return memoized(profileKey(pi, "Np", 0), order, [&] {
        return count_N(pi, order) / partition_function_series(order);
    });
}

QSeries count_N0(const Profile& pi, int order) {
    int n = pi.branchPoints();
    if (n <= 1) return count_Nprime(pi, order);
    return memoized(profileKey(pi, "N0", 0), order, [&] {
        QSeries s = QSeries::zero(order);
        for (auto& alpha : enumerate_set_partitions(n)) {
            QSeries term = QSeries::one(order);
            for (auto& block : alpha.blocks) term = term * count_Nprime(pi.sub(block), order);
            Rat sign = (alpha.length() % 2 == 1) ? Rat(1) : Rat(-1);
            s += sign * Rat(factorial(alpha.length() - 1)) * term;
        }
        return s;
    });
}

QSeries count_cp(const Profile& pi, long p, int order) {
    // the character inner sum collapses to T_p(lambda) (hook-length moments)
    return memoized(profileKey(pi, "cp", p), order, [&] {
        return burnsideSum(pi, order, [p](const Partition& l) { return hook_moment_T(l, p); });
    });
}

QSeries count_cp_prime(const Profile& pi, long p, int order) {
    return memoized(profileKey(pi, "cpp", p), order, [&] {
        QSeries pf = partition_function_series(order);
        QSeries cpEmpty = count_cp(Profile(), p, order);
        return (count_cp(pi, p, order) - count_Nprime(pi, order) * cpEmpty) / pf;
    });
}

QSeries count_cp_connected(const Profile& pi, long p, int order) {
    int n = pi.branchPoints();
    if (n <= 1) return count_cp_prime(pi, p, order);
    return memoized(profileKey(pi, "cp0", p), order, [&] {
        // c'_p(Pi) = sum_{sigma} sum_k c^0_p(Pi_{sigma_k}) prod_{j != k} N^0(Pi_{sigma_j});
        // the sigma = 1_N term isolates c^0_p(Pi)
        QSeries s = count_cp_prime(pi, p, order);
        for (auto& sigma : enumerate_set_partitions(n)) {
            if (sigma.length() == 1) continue;
            for (int k = 0; k < sigma.length(); ++k) {
                QSeries term = count_cp_connected(pi.sub(sigma.blocks[k]), p, order);
                for (int j = 0; j < sigma.length(); ++j) {
                    if (j == k) continue;
                    term = term * count_N0(pi.sub(sigma.blocks[j]), order);
                }
                s -= term;
            }
        }
        return s;
    });
}

Rat cp_character_oracle(const Profile& pi, long p, int d) {
    Rat total(0);
    for (auto& lambda : enumerate_partitions(d)) {
        Rat outer(1);
        for (int b : pi.cycles) outer *= f_sigma(Partition(std::vector<int>{b}), lambda);
        if (outer.isZero()) continue;
        Rat inner(0);
        for (auto& tau : enumerate_partitions(d)) {
            long long chi = character(lambda, tau);
            if (chi == 0) continue;
            inner += Rat(conjugacyClassSize(tau)) * part_moment_S(tau, p) * Rat(chi) * Rat(chi);
        }
        total += outer * inner / Rat(factorial(d));
    }
    return total;
}

CountFamily countFamilyN(const Profile& pi, int order) {
    return CountFamily{count_N(pi, order), count_Nprime(pi, order), count_N0(pi, order)};
}

CountFamily countFamilyCp(const Profile& pi, long p, int order) {
    return CountFamily{count_cp(pi, p, order), count_cp_prime(pi, p, order),
                       count_cp_connected(pi, p, order)};
}

Certificate certify_quasimodular(const Profile& pi, long p, int order) {
    if (p < -1 || p % 2 == 0) throw std::domain_error("certify_quasimodular: need odd p >= -1");
    Certificate cert;
    cert.weightBound = pi.weightBound() + static_cast<int>(p) + 1;
    cert.pure = true;
    for (int b : pi.cycles) cert.pure = cert.pure && (b == 2);
    cert.connectedForm = recognize(count_cp_connected(pi, p, order), cert.weightBound, cert.pure);
    cert.noUnramifiedForm = recognize(count_cp_prime(pi, p, order), cert.weightBound, cert.pure);
    return cert;
}

Certificate certify_counting(const Profile& pi, int order) {
    Certificate cert;
    cert.weightBound = pi.weightBound();
    cert.pure = true;
    for (int b : pi.cycles) cert.pure = cert.pure && (b == 2);
    cert.connectedForm = recognize(count_N0(pi, order), cert.weightBound, cert.pure);
    cert.noUnramifiedForm = recognize(count_Nprime(pi, order), cert.weightBound, cert.pure);
    return cert;
}

}  // namespace qmh
