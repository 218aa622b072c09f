// simwaring: simultaneous Waring ranks, bounds, freeness checks, and explicit
// power-sum decompositions for collections of monomials.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "simwaring/simwaring.hpp"

namespace {

using nlohmann::json;
using namespace simwaring;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitVerification = 3;

struct CommonOptions {
    std::string collection_path;
    bool json_input = false;
    bool explain = false;
    std::string out_path;
    double tol = 1e-8;
    int threads = 1;
    std::uint64_t max_points = kDefaultMaxPoints;
};

std::uint64_t max_points_default() {
    if (const char* env = std::getenv("SIMWARING_MAX_POINTS")) {
        try {
            const long long parsed = std::stoll(env);
            if (parsed > 0) return static_cast<std::uint64_t>(parsed);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring unparsable SIMWARING_MAX_POINTS='" << env << "'\n";
        }
    }
    return kDefaultMaxPoints;
}

void emit(const json& report, const std::string& out_path) {
    if (out_path.empty()) return;
    if (out_path == "-") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw parse_error("cannot write to " + out_path);
    out << report.dump(2) << "\n";
}

Collection load_collection(const CommonOptions& options, json& report) {
    const CollectionFile file = read_collection_file(options.collection_path, options.json_input);
    Collection coll = to_collection(file);
    report["vars"] = coll.nvars();
    json names = json::array();
    for (const auto& m : coll.monomials()) names.push_back(m.str());
    report["monomials"] = names;
    if (coll.had_duplicates()) {
        std::cerr << "warning: duplicate monomials removed\n";
        report["warnings"] = json::array({"duplicate monomials removed"});
    }
    return coll;
}

json verdict_json(const RankVerdict& verdict) {
    json out;
    out["justification"] = rule_tag(verdict.rule);
    if (verdict.is_exact()) {
        out["kind"] = "exact";
        out["value"] = to_decimal(verdict.exact_value);
    } else {
        out["kind"] = "bounds";
        out["lower"] = to_decimal(verdict.lower);
        out["upper"] = to_decimal(verdict.upper);
    }
    return out;
}

json freeness_json(const Collection& coll) {
    json out;
    out["one_one_free"] = check_11_free(coll);
    out["free"] = check_free(coll);
    const auto base = find_base_variable(coll);
    if (base) {
        out["base_variable"] = base->index;
        out["c"] = base->c;
    } else {
        out["base_variable"] = nullptr;
        out["c"] = nullptr;
    }
    return out;
}

json explain_json(const Collection& coll) {
    json terms = json::array();
    for (const auto& term : alternating_sum_terms(coll)) {
        json entry;
        entry["subset"] = term.indices;
        entry["gcd"] = term.gcd.str();
        entry["sign"] = term.sign;
        entry["rank"] = term.rank ? json(to_decimal(*term.rank)) : json(nullptr);
        terms.push_back(entry);
    }
    return terms;
}

void print_verdict(const RankVerdict& verdict) {
    if (verdict.is_exact())
        std::cout << "verdict: exact " << to_decimal(verdict.exact_value) << "  ["
                  << rule_tag(verdict.rule) << "]\n";
    else
        std::cout << "verdict: bounds [" << to_decimal(verdict.lower) << ", "
                  << to_decimal(verdict.upper) << "]  [" << rule_tag(verdict.rule) << "]\n";
}

int run_rank(const std::string& text, int vars, const std::string& out_path) {
    int nvars = vars;
    if (nvars <= 0) {
        // Infer the variable count: bracket entries, or the highest index
        // mentioned.
        nvars = 1;
        if (text.find('[') != std::string::npos) {
            nvars = 1 + static_cast<int>(std::count(text.begin(), text.end(), ','));
        } else {
            for (std::size_t i = 0; i + 1 < text.size(); ++i) {
                if (text[i] != 'x' && text[i] != 'X') continue;
                std::size_t end = i + 1;
                long index = 0;
                while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) {
                    index = index * 10 + (text[end] - '0');
                    ++end;
                }
                if (end > i + 1) nvars = std::max(nvars, static_cast<int>(index) + 1);
            }
        }
    }
    const Monomial m = Monomial::parse(text, nvars);
    const BigInt rank = waring_rank(m);
    std::cout << to_decimal(rank) << "\n";
    json report;
    report["command"] = "rank";
    report["monomial"] = m.str();
    report["vars"] = nvars;
    report["rank"] = to_decimal(rank);
    emit(report, out_path);
    return kExitOk;
}

int run_simrank(const CommonOptions& options) {
    json report;
    report["command"] = "simrank";
    const Collection coll = load_collection(options, report);

    const auto started = std::chrono::steady_clock::now();
    const RankVerdict verdict = simultaneous_rank(coll);
    const auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - started);

    report["verdict"] = verdict_json(verdict);
    report["free"] = freeness_json(coll);
    if (options.explain) report["explain"] = explain_json(coll);

    std::cout << "collection: " << coll.size() << " monomial" << (coll.size() == 1 ? "" : "s")
              << " in " << coll.nvars() << " variables\n";
    print_verdict(verdict);
    if (options.explain) {
        std::cout << "inclusion-exclusion terms:\n";
        for (const auto& term : alternating_sum_terms(coll)) {
            std::cout << "  " << (term.sign > 0 ? '+' : '-') << " {";
            for (std::size_t i = 0; i < term.indices.size(); ++i)
                std::cout << (i ? "," : "") << term.indices[i];
            std::cout << "} gcd " << term.gcd.str() << " rank "
                      << (term.rank ? to_decimal(*term.rank) : "undefined") << "\n";
        }
    }
    std::cout << "elapsed: " << elapsed.count() << " ms\n";
    emit(report, options.out_path);
    return kExitOk;
}

int run_checkfree(const CommonOptions& options) {
    json report;
    report["command"] = "checkfree";
    const Collection coll = load_collection(options, report);
    const json freeness = freeness_json(coll);
    for (const auto& [key, value] : freeness.items()) report[key] = value;
    emit(report, options.out_path);

    std::cout << "(1,1)-free: " << (freeness["one_one_free"].get<bool>() ? "yes" : "no") << "\n";
    if (freeness["base_variable"].is_null()) {
        std::cout << "free: no (no base variable)\n";
        return kExitHypothesis;
    }
    std::cout << "base variable: x" << freeness["base_variable"].get<int>()
              << " with exponent c = " << freeness["c"].get<int>() << "\n";
    std::cout << "free: " << (freeness["free"].get<bool>() ? "yes" : "no") << "\n";
    return freeness["free"].get<bool>() ? kExitOk : kExitHypothesis;
}

int run_bounds(const CommonOptions& options) {
    json report;
    report["command"] = "bounds";
    const Collection coll = load_collection(options, report);

    std::optional<BigInt> lower, upper;
    std::string lower_error, upper_error;
    try {
        lower = lower_bound(coll);
    } catch (const std::exception& e) {
        lower_error = e.what();
    }
    try {
        upper = upper_bound_lcm(coll);
    } catch (const std::exception& e) {
        upper_error = e.what();
    }

    if (lower) {
        report["lower"] = to_decimal(*lower);
        std::cout << "lower bound: " << to_decimal(*lower) << "\n";
    } else {
        report["lower_error"] = lower_error;
        std::cout << "lower bound: unavailable (" << lower_error << ")\n";
    }
    if (upper) {
        report["upper"] = to_decimal(*upper);
        std::cout << "upper bound: " << to_decimal(*upper) << "\n";
    } else {
        report["upper_error"] = upper_error;
        std::cout << "upper bound: unavailable (" << upper_error << ")\n";
    }
    emit(report, options.out_path);
    return lower && upper ? kExitOk : kExitHypothesis;
}

int run_decompose(const CommonOptions& options) {
    json report;
    report["command"] = "decompose";
    const Collection coll = load_collection(options, report);

    const RankVerdict verdict = simultaneous_rank(coll);
    ApolarScheme scheme;
    BigInt claimed;
    if (verdict.rule == Rule::DerivativeCollection) {
        // Derivative collections decompose on the parent monomial's scheme;
        // every form is supported on all of its points.
        Monomial parent = coll[0];
        for (std::size_t j = 1; j < coll.size(); ++j) parent = lcm(parent, coll[j]);
        scheme = construct_apolar_scheme(Collection(coll.nvars(), {parent}), options.max_points);
        std::vector<std::size_t> everything(scheme.size());
        for (std::size_t k = 0; k < everything.size(); ++k) everything[k] = k;
        scheme.membership.assign(coll.size(), everything);
        claimed = verdict.exact_value;
    } else {
        scheme = construct_apolar_scheme(coll, options.max_points);
        claimed = alternating_sum(coll);
    }
    SolveOptions solve_options;
    solve_options.tol = options.tol;
    solve_options.threads = options.threads;
    Decomposition dec = solve_coefficients(scheme, coll, solve_options);
    dec.claimed_rank = claimed;

    const bool rechecked = verify_decomposition(dec, coll, options.tol);
    const BigInt certified_lower = lower_bound(coll);
    const bool minimal = BigInt(scheme.size()) == certified_lower;

    if (!options.out_path.empty()) {
        const json doc = decomposition_json(dec, coll, rule_tag(verdict.rule));
        emit(doc, options.out_path);
    }

    std::cout << "points: " << scheme.size() << "\n";
    std::cout << "max residual: " << dec.max_residual() << "\n";
    std::cout << "verified: " << (dec.verified() && rechecked ? "yes" : "no") << "\n";
    std::cout << "minimal: " << (minimal ? "yes" : "no") << " (lower bound "
              << to_decimal(certified_lower) << ")\n";
    if (!dec.verified() || !rechecked) {
        std::cerr << "error: residual " << dec.max_residual() << " exceeds tolerance "
                  << options.tol << "\n";
        return kExitVerification;
    }
    if (!minimal) {
        std::cerr << "error: point count does not certify minimality\n";
        return kExitVerification;
    }
    return kExitOk;
}

int run_highrank(long t, int family, const std::string& out_path) {
    const auto [m1, m2] = high_rank_pair(t, family);
    const BigInt rank = high_rank_pair_formula(t, family);
    const RankVerdict verdict = pair_rank_same_support(m1, m2);
    if (!verdict.is_exact() || verdict.exact_value != rank)
        throw std::logic_error("closed form disagrees with the pair rank");
    const long degree = 2 * t + 1 + family;
    const BigInt generic = generic_ternary_pair_rank(degree);

    std::cout << "pair: " << m1.str() << ", " << m2.str() << "\n";
    std::cout << "simultaneous rank: " << to_decimal(rank) << "\n";
    std::cout << "generic pair rank (degree " << degree << "): " << to_decimal(generic) << "\n";
    std::cout << "excess: " << to_decimal(rank - generic) << "\n";

    json report;
    report["command"] = "highrank";
    report["t"] = t;
    report["family"] = family;
    report["monomials"] = json::array({m1.str(), m2.str()});
    report["degree"] = degree;
    report["rank"] = to_decimal(rank);
    report["generic_rank"] = to_decimal(generic);
    report["excess"] = to_decimal(rank - generic);
    emit(report, out_path);
    return kExitOk;
}

void attach_common(CLI::App* cmd, CommonOptions& options, bool with_tol = false) {
    cmd->add_option("file", options.collection_path,
                    "collection file (vars n, one monomial per line)")
        ->required();
    cmd->add_flag("--json", options.json_input, "read the collection file as JSON");
    cmd->add_option("--out", options.out_path,
                    "write the JSON report to this path ('-' for stdout)");
    cmd->add_option("--threads", options.threads, "worker threads for independent solves")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-points", options.max_points, "apolar scheme point cap");
    if (with_tol) cmd->add_option("--tol", options.tol, "acceptance tolerance for residuals");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"simultaneous Waring ranks of monomial collections"};
    app.require_subcommand(1);

    std::string rank_text;
    int rank_vars = 0;
    std::string rank_out;
    auto* rank_cmd = app.add_subcommand("rank", "complex Waring rank of one monomial");
    rank_cmd->add_option("monomial", rank_text, "monomial, e.g. \"x0*x1^3\" or \"[1,3]\"")
        ->required();
    rank_cmd->add_option("--vars", rank_vars, "number of variables (default: inferred)");
    rank_cmd->add_option("--out", rank_out, "write the JSON report to this path ('-' for stdout)");

    CommonOptions simrank_options;
    auto* simrank_cmd = app.add_subcommand("simrank", "simultaneous rank or bounds");
    attach_common(simrank_cmd, simrank_options);
    simrank_cmd->add_flag("--explain", simrank_options.explain,
                          "print the inclusion-exclusion table of subset gcd ranks");

    CommonOptions checkfree_options;
    auto* checkfree_cmd = app.add_subcommand("checkfree", "(1,1)-freeness and freeness flags");
    attach_common(checkfree_cmd, checkfree_options);

    CommonOptions bounds_options;
    auto* bounds_cmd = app.add_subcommand("bounds", "lower and upper rank bounds");
    attach_common(bounds_cmd, bounds_options);

    CommonOptions decompose_options;
    decompose_options.max_points = max_points_default();
    auto* decompose_cmd =
        app.add_subcommand("decompose", "explicit simultaneous power-sum decomposition");
    attach_common(decompose_cmd, decompose_options, true);

    long highrank_t = 1;
    int highrank_family = 1;
    std::string highrank_out;
    auto* highrank_cmd =
        app.add_subcommand("highrank", "ternary pairs with rank above the generic value");
    highrank_cmd->add_option("--t", highrank_t, "parameter t >= 1")->required();
    highrank_cmd->add_option("--family", highrank_family, "family 1 or 2")->required();
    highrank_cmd->add_option("--out", highrank_out,
                             "write the JSON report to this path ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (rank_cmd->parsed()) return run_rank(rank_text, rank_vars, rank_out);
        if (simrank_cmd->parsed()) return run_simrank(simrank_options);
        if (checkfree_cmd->parsed()) return run_checkfree(checkfree_options);
        if (bounds_cmd->parsed()) return run_bounds(bounds_options);
        if (decompose_cmd->parsed()) return run_decompose(decompose_options);
        if (highrank_cmd->parsed()) return run_highrank(highrank_t, highrank_family, highrank_out);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hypothesis_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
