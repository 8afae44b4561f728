#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bgrank/counting.hpp"

namespace bgrank {

/// A residue class pair (n mod 5, j mod 5).
struct ResiduePair {
    int n_residue = 0;
    int j_residue = 0;

    bool operator==(const ResiduePair&) const = default;
};

struct CongruenceFailure {
    long long n = 0;
    std::optional<long long> j;
    std::string value;
};

/// Outcome of one verification sweep. Failures carry every counterexample
/// found, never just the first.
struct CongruenceReport {
    std::string family;
    long long range = 0;
    std::vector<CongruenceFailure> failures;

    bool passed() const { return failures.empty(); }
};

std::string to_json_string(const CongruenceReport& report);

/// (3j' - 2n' - j'^2) mod 5, mapped into [0, 5).
int residue_rhs(const ResiduePair& pair);

/// The 15 residue pairs (n', j') that the refined congruence families
/// cover: (0,1),(0,2),(1,0),(1,3),(1,4),(2,1),(2,2),(2,4),(3,0),(3,3)
/// and all five (4,*).
std::vector<ResiduePair> fifteen_pairs();

/// residue_rhs lands in {2,3,4} on each of the 15 pairs.
CongruenceReport verify_fifteen_pairs();

/// For all 0 <= n <= bound and parity-matched j, the residue of
/// (n - j(2j-1))/2 mod 5 depends only on (n mod 5, j mod 5) and equals
/// residue_rhs.
CongruenceReport verify_reduction_identity(long long bound);

/// pp(k) == 0 (mod 5) for k <= bound with k in {2,3,4} mod 5, computed
/// independently by convolution and by the mod-5 series product; both
/// paths must agree coefficientwise.
CongruenceReport verify_pp_mod5(long long bound);

/// T(n) = n(n+1)/2 is 0, 1 or 3 mod 5, and T(n) == 3 forces n == 2 and
/// 2n+1 == 0 mod 5, for n <= bound.
CongruenceReport triangular_residue_analysis(long long bound);

/// The refined families: p_j(n) == 0 (mod 5) whenever (n mod 5, j mod 5)
/// is one of the 15 covered pairs. Formula path for n <= bound,
/// enumeration cross-check for n <= enum_bound. Every tested case must
/// also reduce to a pair-count argument in {2,3,4} mod 5.
CongruenceReport verify_refined_congruences(long long bound, long long enum_bound);

/// p(5n+4) == 0 (mod 5) for n <= bound.
CongruenceReport ramanujan_check(long long bound);

/// The cube product expanded factor by factor matches its triangular
/// closed form coefficientwise over exact integers.
CongruenceReport verify_jacobi_cube(long long order);

/// Report wrapper around the mod-5 factor identity check.
CongruenceReport verify_factor_identity(long long order);

/// Negative control: asserts pp(k) == 0 (mod 5) on the complementary
/// residues {0, 1}, which is false. Exercises failure reporting.
CongruenceReport negative_control(long long bound);

}  // namespace bgrank
