#pragma once

#include <gmpxx.h>

#include <functional>
#include <mutex>
#include <vector>

#include "bgrank/partition.hpp"

namespace bgrank {

using BigInt = mpz_class;

/// Default cap on how large an n the enumeration-backed operations accept.
inline constexpr long long kDefaultEnumerationBound = 40;

/// Append-only memo of counting values. Concurrent readers are safe;
/// extension is serialized internally. Returned values are copies.
class CountTable {
public:
    enum class Kind { p, pp, pj };

    explicit CountTable(Kind kind, long long fixed_j = 0) : kind_(kind), fixed_j_(fixed_j) {}

    Kind kind() const { return kind_; }
    long long fixed_j() const { return fixed_j_; }

    /// Value at n, extending the table as needed; 0 for n < 0.
    BigInt at(long long n);

private:
    void extend_p(long long n);
    void extend_pp(long long n);

    Kind kind_;
    long long fixed_j_;
    std::vector<BigInt> values_;
    std::mutex mutex_;
};

/// p(n), the number of partitions of n, by the pentagonal-number
/// recurrence with memoization; 0 for n < 0.
BigInt partition_count(long long n);

/// pp(n), the number of ordered pairs of partitions of total weight n,
/// by convolution of memoized p-values; 0 for n < 0.
BigInt pair_count(long long n);

/// Calls fn once per partition of n in reverse-lexicographic order.
void for_each_partition(long long n, const std::function<void(const Partition&)>& fn);

/// All partitions of n in reverse-lexicographic order. Throws
/// std::domain_error when n exceeds `bound` (or is negative).
std::vector<Partition> enumerate_partitions(long long n, long long bound = kDefaultEnumerationBound);

/// Partitions of n with chessboard statistic j, counted by filtering the
/// full enumeration. Same bound guard as enumerate_partitions.
BigInt pj_enumerate(long long n, long long j, long long bound = kDefaultEnumerationBound);

/// Partitions of n with chessboard statistic j by the closed formula
/// pp((n - j(2j-1)) / 2); 0 when n - j(2j-1) is odd or negative.
BigInt pj_formula(long long n, long long j);

/// True iff some partition of n has chessboard statistic j: j + n even
/// and j(2j-1) <= n. Coincides with pj_formula(n, j) > 0.
bool rank_exists(long long n, long long j);

/// All j with rank_exists(n, j), increasing. Summing pj_formula over
/// this range recovers partition_count(n).
std::vector<long long> rank_range(long long n);

}  // namespace bgrank
