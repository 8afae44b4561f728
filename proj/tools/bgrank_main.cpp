// Command-line front end: chessboard-rank statistics, 2-core/2-quotient
// decomposition, partition counting, and the mod-5 congruence verifier.
//
// Exit codes: 0 success, 1 verification failure or method disagreement,
// 2 usage or parse error.

#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bgrank/congruence.hpp"
#include "bgrank/core_quotient.hpp"
#include "bgrank/counting.hpp"
#include "bgrank/partition.hpp"
#include "bgrank/series.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
    bool json_output = false;
    bool check = false;
    long long enumeration_bound = bgrank::kDefaultEnumerationBound;
    long long modulus = 0;
    std::string method = "formula";
    std::optional<long long> max_n;
    std::optional<long long> order;
    std::optional<long long> enum_max;
};

void emit(const CliConfig& cfg, const json& doc, const std::string& text) {
    if (cfg.json_output) {
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << text << "\n";
    }
}

int run_bgrank(const CliConfig& cfg, const std::string& text) {
    const bgrank::Partition p = bgrank::parse_partition(text);
    const long long rank = bgrank::bg_rank(p);
    json doc{{"partition", p.str()}, {"bg_rank", rank}};
    std::string line = std::to_string(rank);
    if (cfg.check) {
        const long long naive = bgrank::bg_rank_naive(p);
        doc["naive"] = naive;
        doc["agrees"] = naive == rank;
        line += naive == rank ? " (naive agrees)" : " (NAIVE DISAGREES)";
        if (naive != rank) {
            emit(cfg, doc, line);
            return kExitVerifyFailed;
        }
    }
    emit(cfg, doc, line);
    return kExitOk;
}

int run_core(const CliConfig& cfg, const std::string& text) {
    const bgrank::Partition p = bgrank::parse_partition(text);
    const bgrank::Partition core = bgrank::two_core_by_removal(p);
    emit(cfg,
         json{{"partition", p.str()},
              {"core", core.str()},
              {"core_height", is_staircase(core).value_or(-1)}},
         core.str());
    return kExitOk;
}

int run_decompose(const std::string& text) {
    const bgrank::Partition p = bgrank::parse_partition(text);
    const bgrank::Decomposition d = bgrank::decompose(p);
    // This subcommand's output is the decomposition JSON schema itself.
    json doc{{"core_height", d.core.height}, {"q0", d.q0.str()}, {"q1", d.q1.str()}};
    std::cout << doc.dump() << "\n";
    return kExitOk;
}

int run_compose(const CliConfig& cfg, long long height, const std::string& q0_text,
                const std::string& q1_text) {
    if (height < 0) throw std::invalid_argument("core height must be nonnegative");
    const bgrank::Decomposition d{bgrank::Staircase{height}, bgrank::parse_partition(q0_text),
                                  bgrank::parse_partition(q1_text)};
    const bgrank::Partition p = bgrank::compose(d);
    emit(cfg,
         json{{"core_height", height}, {"q0", d.q0.str()}, {"q1", d.q1.str()},
              {"partition", p.str()}},
         p.str());
    return kExitOk;
}

int run_count(const CliConfig& cfg, const std::string& kind, long long n,
              std::optional<long long> j) {
    json doc{{"kind", kind}, {"n", n}};
    bgrank::BigInt value;
    if (kind == "p") {
        value = bgrank::partition_count(n);
    } else if (kind == "pp") {
        value = bgrank::pair_count(n);
    } else if (kind == "pj") {
        if (!j) throw CLI::ValidationError("count pj requires both n and j");
        doc["j"] = *j;
        if (cfg.method == "formula") {
            value = bgrank::pj_formula(n, *j);
        } else if (cfg.method == "enumerate") {
            value = bgrank::pj_enumerate(n, *j, cfg.enumeration_bound);
        } else if (cfg.method == "both") {
            value = bgrank::pj_formula(n, *j);
            const bgrank::BigInt enumerated = bgrank::pj_enumerate(n, *j, cfg.enumeration_bound);
            if (enumerated != value) {
                std::cerr << "method disagreement: formula " << value.get_str()
                          << " != enumeration " << enumerated.get_str() << "\n";
                return kExitVerifyFailed;
            }
        } else {
            throw CLI::ValidationError("unknown --method '" + cfg.method + "'");
        }
    } else {
        throw CLI::ValidationError("unknown count kind '" + kind + "'");
    }
    doc["count"] = value.get_str();
    emit(cfg, doc, value.get_str());
    return kExitOk;
}

// "step:exponent[,step:exponent...]", e.g. "1:-2" or "1:3,5:-1".
bgrank::FactoredProduct parse_factors(const std::string& text) {
    bgrank::FactoredProduct product;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i != text.size() && text[i] != ',') continue;
        const std::string item = text.substr(start, i - start);
        start = i + 1;
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("factor '" + item + "' is not of the form step:exponent");
        }
        product.factors.push_back(
            {std::stoll(item.substr(0, colon)), std::stoll(item.substr(colon + 1))});
    }
    return product;
}

int run_expand(const CliConfig& cfg, const std::string& factors_text) {
    const long long order = cfg.order.value_or(500);
    const bgrank::TruncatedSeries series =
        bgrank::expand_product(parse_factors(factors_text), order, cfg.modulus);

    json coeffs = json::array();
    std::string line;
    for (long long k = 0; k <= series.order(); ++k) {
        coeffs.push_back(series.coeff(k).get_str());
        if (k > 0) line += ' ';
        line += series.coeff(k).get_str();
    }
    emit(cfg,
         json{{"order", series.order()},
              {"modulus", series.modular() ? json(series.modulus()) : json(nullptr)},
              {"coeffs", std::move(coeffs)}},
         line);
    return kExitOk;
}

bgrank::CongruenceReport run_family(const std::string& family, const CliConfig& cfg) {
    // Defaults match the verification sweep bounds the test suite pins.
    const auto n_bound = [&](long long dflt) { return cfg.max_n.value_or(dflt); };
    const auto s_order = [&](long long dflt) { return cfg.order.value_or(cfg.max_n.value_or(dflt)); };

    if (family == "fifteen-pairs") return bgrank::verify_fifteen_pairs();
    if (family == "reduction") return bgrank::verify_reduction_identity(n_bound(500));
    if (family == "pp-mod5") return bgrank::verify_pp_mod5(n_bound(5000));
    if (family == "refined") {
        return bgrank::verify_refined_congruences(n_bound(500), cfg.enum_max.value_or(30));
    }
    if (family == "triangular") return bgrank::triangular_residue_analysis(n_bound(10000));
    if (family == "ramanujan") return bgrank::ramanujan_check(n_bound(200));
    if (family == "jacobi") return bgrank::verify_jacobi_cube(s_order(1000));
    if (family == "mod5-factor") return bgrank::verify_factor_identity(s_order(500));
    if (family == "negative-control") return bgrank::negative_control(n_bound(50));
    throw CLI::ValidationError("unknown verify family '" + family + "'");
}

void print_report_text(const bgrank::CongruenceReport& report) {
    std::cout << (report.passed() ? "pass" : "FAIL") << "  " << report.family
              << " (range " << report.range << ", " << report.failures.size()
              << " counterexample" << (report.failures.size() == 1 ? "" : "s") << ")\n";
    for (const auto& f : report.failures) {
        std::cout << "  n=" << f.n;
        if (f.j) std::cout << " j=" << *f.j;
        std::cout << ": " << f.value << "\n";
    }
}

int run_verify(const CliConfig& cfg, const std::string& family) {
    static const std::vector<std::string> kAllFamilies{
        "fifteen-pairs", "reduction", "pp-mod5",     "refined",
        "triangular",    "ramanujan", "mod5-factor", "jacobi",
    };

    std::vector<bgrank::CongruenceReport> reports;
    if (family == "all") {
        for (const auto& name : kAllFamilies) reports.push_back(run_family(name, cfg));
    } else {
        reports.push_back(run_family(family, cfg));
    }

    bool all_passed = true;
    for (const auto& r : reports) all_passed = all_passed && r.passed();

    if (cfg.json_output) {
        if (reports.size() == 1) {
            std::cout << bgrank::to_json_string(reports.front()) << "\n";
        } else {
            json doc{{"passed", all_passed}, {"reports", json::array()}};
            for (const auto& r : reports) {
                doc["reports"].push_back(json::parse(bgrank::to_json_string(r)));
            }
            std::cout << doc.dump() << "\n";
        }
    } else {
        for (const auto& r : reports) print_report_text(r);
    }
    return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partition statistics: chessboard ranks, 2-cores, counting, mod-5 congruences"};
    app.require_subcommand(1);
    app.fallthrough();  // let subcommands see the global flags
    CliConfig cfg;
    app.add_flag("--json", cfg.json_output, "emit a single JSON document on stdout");

    std::string partition_text;
    std::string kind;
    std::string family;
    long long n = 0;
    long long height = 0;
    std::optional<long long> j;
    std::string q0_text;
    std::string q1_text;

    auto* cmd_bgrank = app.add_subcommand("bgrank", "chessboard rank of a partition");
    cmd_bgrank->add_option("partition", partition_text, "e.g. 4+3+3+1+1+1")->required();
    cmd_bgrank->add_flag("--check", cfg.check, "also run the cell-by-cell computation");

    auto* cmd_core = app.add_subcommand("core", "2-core by repeated domino removal");
    cmd_core->add_option("partition", partition_text)->required();

    auto* cmd_decompose = app.add_subcommand("decompose", "core and quotient pair of a partition");
    cmd_decompose->add_option("partition", partition_text)->required();

    auto* cmd_compose = app.add_subcommand("compose", "rebuild a partition from core height, q0, q1");
    cmd_compose->add_option("height", height, "staircase core height")->required();
    cmd_compose->add_option("q0", q0_text, "first quotient, '0' for empty")->required();
    cmd_compose->add_option("q1", q1_text, "second quotient, '0' for empty")->required();

    auto* cmd_count = app.add_subcommand("count", "p(n), pp(n), or p_j(n)");
    cmd_count->add_option("kind", kind, "p | pp | pj")->required();
    cmd_count->add_option("n", n)->required();
    cmd_count->add_option("j", j, "required for kind pj");
    cmd_count->add_option("--method", cfg.method, "formula | enumerate | both (pj only)");
    cmd_count->add_option("--enum-bound", cfg.enumeration_bound,
                          "largest n the enumeration path accepts");

    std::string factors_text;
    auto* cmd_expand =
        app.add_subcommand("expand", "coefficients of prod (1-x^(step*i))^exponent");
    cmd_expand->add_option("factors", factors_text, "step:exponent[,step:exponent...]")->required();
    cmd_expand->add_option("--order", cfg.order, "truncation order (default 500)");
    cmd_expand->add_option("--mod", cfg.modulus, "coefficient modulus, 0 for exact integers");

    auto* cmd_verify = app.add_subcommand("verify", "machine-check a congruence family");
    cmd_verify
        ->add_option("family", family,
                     "all | fifteen-pairs | reduction | pp-mod5 | refined | triangular | "
                     "ramanujan | mod5-factor | jacobi | negative-control")
        ->required();
    cmd_verify->add_option("--max-n", cfg.max_n, "override the n sweep bound");
    cmd_verify->add_option("--order", cfg.order, "override the series truncation order");
    cmd_verify->add_option("--enum-max", cfg.enum_max,
                           "enumeration cross-check bound for 'refined'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_bgrank->parsed()) return run_bgrank(cfg, partition_text);
        if (cmd_core->parsed()) return run_core(cfg, partition_text);
        if (cmd_decompose->parsed()) return run_decompose(partition_text);
        if (cmd_compose->parsed()) return run_compose(cfg, height, q0_text, q1_text);
        if (cmd_count->parsed()) return run_count(cfg, kind, n, j);
        if (cmd_expand->parsed()) return run_expand(cfg, factors_text);
        if (cmd_verify->parsed()) return run_verify(cfg, family);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
