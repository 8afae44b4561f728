#pragma once

#include <optional>
#include <string>
#include <vector>

namespace bgrank {

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty sequence is the unique partition of 0. Instances are
/// immutable after construction.
class Partition {
public:
    Partition() = default;

    /// Takes ownership of `parts`, which must already be weakly
    /// decreasing with every part >= 1. Throws std::invalid_argument
    /// otherwise.
    explicit Partition(std::vector<long long> parts);

    /// Sorts `parts` into weakly decreasing order and drops zeros.
    /// Negative entries still throw.
    static Partition normalized(std::vector<long long> parts);

    const std::vector<long long>& parts() const { return parts_; }
    std::size_t rows() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// Number of cells: the sum of the parts.
    long long weight() const { return weight_; }

    /// Part of the given 1-indexed row, 0 past the last row.
    long long part(std::size_t row) const {
        return row >= 1 && row <= parts_.size() ? parts_[row - 1] : 0;
    }

    /// Canonical single-line rendering: parts joined by '+', "0" when empty.
    std::string str() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<long long> parts_;
    long long weight_ = 0;
};

/// Parses "4+3+3+1+1+1" or "3,2,1" (whitespace tolerated). "" and "0"
/// denote the empty partition. Parts must already be weakly decreasing;
/// malformed input throws std::invalid_argument.
Partition parse_partition(const std::string& text);

/// A staircase partition k + (k-1) + ... + 1, identified by its height.
struct Staircase {
    long long height = 0;

    Partition to_partition() const;
    long long weight() const { return height * (height + 1) / 2; }

    bool operator==(const Staircase&) const = default;
};

/// Height k when p equals (k, k-1, ..., 1); empty maps to 0.
std::optional<long long> is_staircase(const Partition& p);

/// Chessboard statistic computed cell by cell: fill cell (i, j) with
/// (-1)^(i+j), +1 at (1,1), and sum. Testing oracle for bg_rank.
long long bg_rank_naive(const Partition& p);

/// Same statistic via the closed form: odd parts in odd rows minus odd
/// parts in even rows. O(#parts), agrees with bg_rank_naive everywhere.
long long bg_rank(const Partition& p);

/// Chessboard statistic of the height-k staircase: (k+1)/2 for odd k,
/// -k/2 for even k. Throws std::domain_error for k < 0.
long long staircase_bg_rank(long long k);

}  // namespace bgrank
