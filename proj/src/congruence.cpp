#include "bgrank/congruence.hpp"

#include <cmath>

#include <json.hpp>

#include "bgrank/series.hpp"

namespace bgrank {

namespace {

long long mod5(long long x) { return ((x % 5) + 5) % 5; }

BigInt mod5(const BigInt& x) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), BigInt(5).get_mpz_t());
    return r;
}

// j-residue sets covered by the refined families, indexed by n mod 5.
const std::vector<std::vector<int>>& covered_j_residues() {
    static const std::vector<std::vector<int>> table{
        {1, 2}, {0, 3, 4}, {1, 2, 4}, {0, 3}, {0, 1, 2, 3, 4},
    };
    return table;
}

}  // namespace

std::string to_json_string(const CongruenceReport& report) {
    nlohmann::json j;
    j["family"] = report.family;
    j["range"] = report.range;
    j["passed"] = report.passed();
    j["failures"] = nlohmann::json::array();
    for (const auto& f : report.failures) {
        nlohmann::json entry;
        entry["n"] = f.n;
        if (f.j) {
            entry["j"] = *f.j;
        } else {
            entry["j"] = nullptr;
        }
        entry["value"] = f.value;
        j["failures"].push_back(std::move(entry));
    }
    return j.dump();
}

int residue_rhs(const ResiduePair& pair) {
    const long long jp = pair.j_residue;
    const long long np = pair.n_residue;
    return static_cast<int>(mod5(3 * jp - 2 * np - jp * jp));
}

std::vector<ResiduePair> fifteen_pairs() {
    std::vector<ResiduePair> pairs{
        {0, 1}, {0, 2}, {1, 0}, {1, 3}, {1, 4},
        {2, 1}, {2, 2}, {2, 4}, {3, 0}, {3, 3},
    };
    for (int j = 0; j < 5; ++j) pairs.push_back({4, j});
    return pairs;
}

CongruenceReport verify_fifteen_pairs() {
    CongruenceReport report{"fifteen-pairs", 15, {}};
    const auto pairs = fifteen_pairs();
    if (pairs.size() != 15) {
        report.failures.push_back({static_cast<long long>(pairs.size()), std::nullopt,
                                   "expected 15 residue pairs"});
    }
    for (const auto& pair : pairs) {
        const int rhs = residue_rhs(pair);
        if (rhs != 2 && rhs != 3 && rhs != 4) {
            report.failures.push_back(
                {pair.n_residue, pair.j_residue, "residue " + std::to_string(rhs)});
        }
    }
    return report;
}

CongruenceReport verify_reduction_identity(long long bound) {
    CongruenceReport report{"reduction", bound, {}};
    for (long long n = 0; n <= bound; ++n) {
        const long long span = static_cast<long long>(std::sqrt(static_cast<double>(n))) + 3;
        for (long long j = -span; j <= span; ++j) {
            if ((n + j) % 2 != 0) continue;
            const long long lhs = mod5((n - j * (2 * j - 1)) / 2);
            const int rhs = residue_rhs(
                {static_cast<int>(mod5(n)), static_cast<int>(mod5(j))});
            if (lhs != rhs) {
                report.failures.push_back(
                    {n, j, std::to_string(lhs) + " != " + std::to_string(rhs)});
            }
        }
    }
    return report;
}

CongruenceReport verify_pp_mod5(long long bound) {
    CongruenceReport report{"pp-mod5", bound, {}};
    const TruncatedSeries gf = expand_product({{{1, -2}}}, bound, 5);
    for (long long k = 0; k <= bound; ++k) {
        const BigInt via_convolution = mod5(pair_count(k));
        const BigInt& via_series = gf.coeff(k);
        if (via_convolution != via_series) {
            report.failures.push_back({k, std::nullopt,
                                       "convolution " + via_convolution.get_str() +
                                           " != series " + via_series.get_str()});
            continue;
        }
        const long long r = mod5(k);
        if ((r == 2 || r == 3 || r == 4) && via_convolution != 0) {
            report.failures.push_back({k, std::nullopt, "pp(k) mod 5 = " + via_convolution.get_str()});
        }
    }
    return report;
}

CongruenceReport triangular_residue_analysis(long long bound) {
    CongruenceReport report{"triangular", bound, {}};
    for (long long n = 0; n <= bound; ++n) {
        const long long t = mod5(n * (n + 1) / 2);
        if (t != 0 && t != 1 && t != 3) {
            report.failures.push_back({n, std::nullopt, "T(n) mod 5 = " + std::to_string(t)});
        } else if (t == 3 && (mod5(n) != 2 || mod5(2 * n + 1) != 0)) {
            report.failures.push_back(
                {n, std::nullopt, "T(n) == 3 but n mod 5 = " + std::to_string(mod5(n))});
        }
    }
    return report;
}

CongruenceReport verify_refined_congruences(long long bound, long long enum_bound) {
    CongruenceReport report{"refined", bound, {}};
    const auto& covered = covered_j_residues();
    for (long long n = 0; n <= bound; ++n) {
        const auto& j_set = covered[static_cast<std::size_t>(mod5(n))];
        for (long long j : rank_range(n)) {
            const int jr = static_cast<int>(mod5(j));
            bool applies = false;
            for (int r : j_set) applies = applies || (r == jr);
            if (!applies) continue;

            // Every covered case must reduce to a pair-count argument in
            // {2,3,4} mod 5; that is what forces the congruence.
            const int rhs = residue_rhs({static_cast<int>(mod5(n)), jr});
            if (rhs != 2 && rhs != 3 && rhs != 4) {
                report.failures.push_back({n, j, "reduces to residue " + std::to_string(rhs)});
                continue;
            }

            const BigInt by_formula = pj_formula(n, j);
            if (mod5(by_formula) != 0) {
                report.failures.push_back({n, j, "p_j(n) = " + by_formula.get_str()});
                continue;
            }
            if (n <= enum_bound) {
                const BigInt by_enum = pj_enumerate(n, j, enum_bound);
                if (by_enum != by_formula) {
                    report.failures.push_back(
                        {n, j, "enumeration " + by_enum.get_str() + " != formula " +
                                   by_formula.get_str()});
                }
            }
        }
    }
    return report;
}

CongruenceReport ramanujan_check(long long bound) {
    CongruenceReport report{"ramanujan", bound, {}};
    for (long long n = 0; n <= bound; ++n) {
        const BigInt value = partition_count(5 * n + 4);
        if (mod5(value) != 0) {
            report.failures.push_back({5 * n + 4, std::nullopt, value.get_str()});
        }
    }
    return report;
}

CongruenceReport verify_jacobi_cube(long long order) {
    CongruenceReport report{"jacobi", order, {}};
    const TruncatedSeries expanded = expand_product({{{1, 3}}}, order);
    const TruncatedSeries closed = jacobi_cube(order);
    for (long long k = 0; k <= order; ++k) {
        if (expanded.coeff(k) != closed.coeff(k)) {
            report.failures.push_back({k, std::nullopt,
                                       expanded.coeff(k).get_str() + " != " +
                                           closed.coeff(k).get_str()});
        }
    }
    return report;
}

CongruenceReport verify_factor_identity(long long order) {
    CongruenceReport report{"mod5-factor", order, {}};
    if (!verify_mod5_factor_identity(order)) {
        report.failures.push_back({order, std::nullopt, "factor identity mismatch"});
    }
    return report;
}

CongruenceReport negative_control(long long bound) {
    CongruenceReport report{"negative-control", bound, {}};
    for (long long k = 0; k <= bound; ++k) {
        const long long r = mod5(k);
        if (r == 0 || r == 1) {
            const BigInt value = pair_count(k);
            if (mod5(value) != 0) {
                report.failures.push_back({k, std::nullopt, "pp(k) = " + value.get_str()});
            }
        }
    }
    return report;
}

}  // namespace bgrank
