#include "bgrank/counting.hpp"

#include <cmath>
#include <stdexcept>

namespace bgrank {

namespace {

CountTable& p_table() {
    static CountTable table(CountTable::Kind::p);
    return table;
}

CountTable& pp_table() {
    static CountTable table(CountTable::Kind::pp);
    return table;
}

}  // namespace

BigInt CountTable::at(long long n) {
    if (n < 0) return 0;
    std::scoped_lock lock(mutex_);
    if (static_cast<std::size_t>(n) >= values_.size()) {
        switch (kind_) {
            case Kind::p: extend_p(n); break;
            case Kind::pp: extend_pp(n); break;
            case Kind::pj:
                for (long long k = static_cast<long long>(values_.size()); k <= n; ++k) {
                    values_.push_back(pj_formula(k, fixed_j_));
                }
                break;
        }
    }
    return values_[static_cast<std::size_t>(n)];
}

void CountTable::extend_p(long long n) {
    if (values_.empty()) values_.push_back(1);
    for (long long m = static_cast<long long>(values_.size()); m <= n; ++m) {
        // p(m) = sum_k (-1)^(k-1) [p(m - k(3k-1)/2) + p(m - k(3k+1)/2)]
        BigInt sum = 0;
        for (long long k = 1;; ++k) {
            const long long g1 = k * (3 * k - 1) / 2;
            const long long g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            BigInt term = values_[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) term += values_[static_cast<std::size_t>(m - g2)];
            if (k % 2 != 0) {
                sum += term;
            } else {
                sum -= term;
            }
        }
        values_.push_back(sum);
    }
}

void CountTable::extend_pp(long long n) {
    for (long long m = static_cast<long long>(values_.size()); m <= n; ++m) {
        BigInt sum = 0;
        for (long long k = 0; k <= m; ++k) {
            sum += partition_count(k) * partition_count(m - k);
        }
        values_.push_back(sum);
    }
}

BigInt partition_count(long long n) { return p_table().at(n); }

BigInt pair_count(long long n) { return pp_table().at(n); }

void for_each_partition(long long n, const std::function<void(const Partition&)>& fn) {
    if (n < 0) return;
    if (n == 0) {
        fn(Partition{});
        return;
    }
    // Reverse-lexicographic loop: shrink the last part above 1 and greedily
    // redistribute the freed cells.
    std::vector<long long> parts{n};
    for (;;) {
        fn(Partition(std::vector<long long>(parts)));
        long long ones = 0;
        while (!parts.empty() && parts.back() == 1) {
            parts.pop_back();
            ++ones;
        }
        if (parts.empty()) return;
        parts.back() -= 1;
        long long rem = ones + 1;
        const long long cap = parts.back();
        while (rem >= cap) {
            parts.push_back(cap);
            rem -= cap;
        }
        if (rem > 0) parts.push_back(rem);
    }
}

std::vector<Partition> enumerate_partitions(long long n, long long bound) {
    if (n < 0) throw std::domain_error("cannot enumerate partitions of a negative integer");
    if (n > bound) {
        throw std::domain_error("enumeration bound exceeded: n=" + std::to_string(n) +
                                " > bound=" + std::to_string(bound));
    }
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

BigInt pj_enumerate(long long n, long long j, long long bound) {
    if (n < 0) return 0;
    if (n > bound) {
        throw std::domain_error("enumeration bound exceeded: n=" + std::to_string(n) +
                                " > bound=" + std::to_string(bound));
    }
    long count = 0;
    for_each_partition(n, [&](const Partition& p) {
        if (bg_rank(p) == j) ++count;
    });
    return BigInt(count);
}

BigInt pj_formula(long long n, long long j) {
    const long long shifted = n - j * (2 * j - 1);
    if (shifted < 0 || shifted % 2 != 0) return 0;  // non-integer or negative argument
    return pair_count(shifted / 2);
}

bool rank_exists(long long n, long long j) {
    return (n + j) % 2 == 0 && j * (2 * j - 1) <= n;
}

std::vector<long long> rank_range(long long n) {
    std::vector<long long> out;
    if (n < 0) return out;
    // j(2j-1) <= n forces |j| <= sqrt(n) + 1
    const long long span = static_cast<long long>(std::sqrt(static_cast<double>(n))) + 2;
    for (long long j = -span; j <= span; ++j) {
        if (rank_exists(n, j)) out.push_back(j);
    }
    return out;
}

}  // namespace bgrank
