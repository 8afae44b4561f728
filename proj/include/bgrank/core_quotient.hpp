#pragma once

#include <vector>

#include "bgrank/partition.hpp"

namespace bgrank {

enum class Orientation { horizontal, vertical };

/// A removable pair of adjacent cells, addressed by the 1-indexed row and
/// column of its upper-left cell.
struct DominoPosition {
    Orientation orientation = Orientation::horizontal;
    long long row = 1;
    long long column = 1;

    bool operator==(const DominoPosition&) const = default;
};

/// Core-and-quotient triple: every partition corresponds to exactly one
/// (core, q0, q1) with weight(p) = core.weight() + 2|q0| + 2|q1|.
struct Decomposition {
    Staircase core;
    Partition q0;
    Partition q1;

    bool operator==(const Decomposition&) const = default;
};

/// All domino positions whose deletion leaves a valid diagram. A
/// horizontal pair in row i is deletable when the row shrinks by two cells
/// without passing the row below; a vertical pair needs two equal-length
/// rows that can both shrink by one. Empty exactly when p is its own
/// 2-core. Ordered by (row, column, vertical-before-horizontal).
std::vector<DominoPosition> removable_dominoes(const Partition& p);

/// Deletes the two cells of `d` from `p`. Throws std::invalid_argument
/// when the deletion would break diagram validity.
Partition remove_domino(const Partition& p, const DominoPosition& d);

/// Strips dominoes, always taking the first position listed by
/// removable_dominoes, until none remain. The result is independent of
/// the removal order and is always a staircase.
Partition two_core_by_removal(const Partition& p);

/// Splits p into its 2-core and 2-quotient via beta-numbers: pad the part
/// list with zeros to even length m, form {part_i + (m - i)}, and halve
/// the even and odd classes into the beta-sets of q0 and q1. The core
/// height comes from the size imbalance of the two classes.
Decomposition decompose(const Partition& p);

/// Exact inverse of decompose.
Partition compose(const Decomposition& d);

/// Height of the 2-core shared by all partitions of chessboard statistic
/// j: 2j-1 for j > 0, -2j for j <= 0. That staircase has j(2j-1) cells.
long long core_height_for_rank(long long j);

}  // namespace bgrank
