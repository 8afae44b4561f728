#include "bgrank/core_quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace bgrank {

namespace {

// Row i (1-indexed) can lose a horizontal domino iff the shortened row
// still covers the row below.
bool horizontal_ok(const Partition& p, long long row) {
    return p.part(row) >= 2 && p.part(row) - 2 >= p.part(row + 1);
}

// Rows i, i+1 can lose a vertical domino iff they have equal length and
// shrinking both by one still covers row i+2. Any column of the flat
// segment names the same move: the surviving cells right of the column
// slide over, and the resulting shape does not depend on the column.
bool vertical_ok(const Partition& p, long long row) {
    return row + 1 <= static_cast<long long>(p.rows()) && p.part(row) == p.part(row + 1) &&
           p.part(row + 1) - 1 >= p.part(row + 2);
}

Partition shrink_row_by_two(const Partition& p, long long row) {
    auto parts = p.parts();
    parts[static_cast<std::size_t>(row - 1)] -= 2;
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

Partition shrink_two_rows_by_one(const Partition& p, long long row) {
    auto parts = p.parts();
    parts[static_cast<std::size_t>(row - 1)] -= 1;
    parts[static_cast<std::size_t>(row)] -= 1;
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

}  // namespace

std::vector<DominoPosition> removable_dominoes(const Partition& p) {
    std::vector<DominoPosition> out;
    const long long m = static_cast<long long>(p.rows());
    for (long long row = 1; row <= m; ++row) {
        const bool v = vertical_ok(p, row);
        const bool h = horizontal_ok(p, row);
        if (!v && !h) continue;
        // (row, column, vertical first); v and h are mutually exclusive
        // within a row since h needs a strictly longer row than the next.
        for (long long col = 1; col <= p.part(row); ++col) {
            if (v) out.push_back({Orientation::vertical, row, col});
            if (h && col + 1 <= p.part(row)) out.push_back({Orientation::horizontal, row, col});
        }
    }
    return out;
}

Partition remove_domino(const Partition& p, const DominoPosition& d) {
    const long long m = static_cast<long long>(p.rows());
    if (d.row < 1 || d.row > m || d.column < 1) {
        throw std::invalid_argument("domino position outside the diagram");
    }
    if (d.orientation == Orientation::horizontal) {
        if (d.column + 1 > p.part(d.row) || !horizontal_ok(p, d.row)) {
            throw std::invalid_argument("horizontal domino not removable at (" +
                                        std::to_string(d.row) + "," + std::to_string(d.column) +
                                        ")");
        }
        return shrink_row_by_two(p, d.row);
    }
    if (d.column > p.part(d.row) || !vertical_ok(p, d.row)) {
        throw std::invalid_argument("vertical domino not removable at (" + std::to_string(d.row) +
                                    "," + std::to_string(d.column) + ")");
    }
    return shrink_two_rows_by_one(p, d.row);
}

Partition two_core_by_removal(const Partition& p) {
    Partition cur = p;
    for (;;) {
        auto dominoes = removable_dominoes(cur);
        if (dominoes.empty()) return cur;
        cur = remove_domino(cur, dominoes.front());
    }
}

Decomposition decompose(const Partition& p) {
    const long long rows = static_cast<long long>(p.rows());
    const long long m = rows + (rows % 2);  // smallest even length

    // Beta-numbers part_i + (m - i), strictly decreasing; padded rows
    // contribute m-1-rows .. 0.
    std::vector<long long> evens;  // halved even beta-numbers
    std::vector<long long> odds;   // halved odd beta-numbers
    for (long long i = 1; i <= m; ++i) {
        const long long beta = p.part(i) + (m - i);
        if (beta % 2 == 0) {
            evens.push_back(beta / 2);
        } else {
            odds.push_back((beta - 1) / 2);
        }
    }

    // Each class is a strictly decreasing beta-set of its quotient.
    auto quotient_from = [](const std::vector<long long>& betas) {
        const long long len = static_cast<long long>(betas.size());
        std::vector<long long> parts;
        for (long long i = 1; i <= len; ++i) {
            const long long part = betas[static_cast<std::size_t>(i - 1)] - (len - i);
            if (part > 0) parts.push_back(part);
        }
        return Partition(std::move(parts));
    };

    const long long j = (static_cast<long long>(evens.size()) - static_cast<long long>(odds.size())) / 2;
    return Decomposition{Staircase{core_height_for_rank(j)}, quotient_from(evens),
                         quotient_from(odds)};
}

Partition compose(const Decomposition& d) {
    if (d.core.height < 0) throw std::invalid_argument("core height must be nonnegative");
    const long long j = staircase_bg_rank(d.core.height);
    const long long q0_rows = static_cast<long long>(d.q0.rows());
    const long long q1_rows = static_cast<long long>(d.q1.rows());

    // Pick a class split (e, o) wide enough for both quotients with
    // e - o = 2j; decompose() is insensitive to extra padding.
    const long long half = std::max(q0_rows, q1_rows) + std::max(j, -j) + 1;
    const long long e = half + j;
    const long long o = half - j;

    std::vector<long long> betas;
    betas.reserve(static_cast<std::size_t>(e + o));
    for (long long i = 1; i <= e; ++i) betas.push_back(2 * (d.q0.part(i) + (e - i)));
    for (long long i = 1; i <= o; ++i) betas.push_back(2 * (d.q1.part(i) + (o - i)) + 1);
    std::sort(betas.begin(), betas.end(), std::greater<>());

    const long long m = e + o;
    std::vector<long long> parts;
    for (long long i = 1; i <= m; ++i) {
        const long long part = betas[static_cast<std::size_t>(i - 1)] - (m - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

long long core_height_for_rank(long long j) {
    return j > 0 ? 2 * j - 1 : -2 * j;
}

}  // namespace bgrank
