#include "cayley/ak_bound.hpp"
#include "cayley/alg_a.hpp"
#include "cayley/cayley_bfs.hpp"
#include "cayley/experiments.hpp"
#include "cayley/sorter.hpp"
#include "cayley/tree_enum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>

using json = nlohmann::json;
using namespace cayley;

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

json pairs_to_json(const std::vector<Edge>& pairs) {
    json out = json::array();
    for (const auto& [a, b] : pairs) out.push_back({a, b});
    return out;
}

json run_to_json(const AlgARun& run) {
    return {{"pairs", pairs_to_json(run.pairs)},
            {"per_step_diameters", run.per_step_diameters},
            {"beta", run.beta},
            {"leftover", run.leftover}};
}

int cmd_diam(const std::string& file, int max_n, bool as_json) {
    const auto t = TranspositionTree::load_file(file);
    const auto field = bfs_from_identity(t, max_n);
    if (as_json) {
        json hist = json::array();
        for (auto c : field.eccentricity_histogram) hist.push_back(c);
        std::cout << json{{"n", field.n},
                          {"diameter", field.diameter},
                          {"eccentricity_histogram", hist}}
                  << "\n";
    } else {
        std::cout << field.diameter << "\n";
    }
    return 0;
}

int cmd_ft(const std::string& file, int max_n, bool as_json) {
    const auto t = TranspositionTree::load_file(file);
    const auto t0 = std::chrono::steady_clock::now();
    const auto report = tree_bound(t, max_n);
    const double ms = elapsed_ms(t0);
    if (as_json) {
        std::cout << json{{"value", report.value},
                          {"witness", report.witness.to_string()},
                          {"permutations_scanned", report.permutations_scanned},
                          {"time_ms", ms}}
                  << "\n";
    } else {
        std::cout << report.value << "  (witness " << report.witness.to_string() << ", "
                  << report.permutations_scanned << " permutations, " << ms << " ms)\n";
    }
    return 0;
}

int cmd_alga(const std::string& file, bool all, PairStrategy strategy, int max_n, bool as_json) {
    const auto t = TranspositionTree::load_file(file);
    const auto t0 = std::chrono::steady_clock::now();
    const auto run = run_alg_a(t, strategy);
    const double ms = elapsed_ms(t0);
    json out{{"beta", run.beta}, {"run", run_to_json(run)}, {"time_ms", ms}};
    if (!as_json) {
        std::cout << "beta = " << run.beta << "  (" << ms << " ms)\n";
        for (std::size_t i = 0; i < run.pairs.size(); ++i)
            std::cout << "  removed {" << run.pairs[i].first << "," << run.pairs[i].second
                      << "} at diameter " << run.per_step_diameters[i] << "\n";
    }
    if (all) {
        const auto bs = enumerate_beta_set(t, max_n);
        if (as_json) {
            json values = json::array();
            for (int v : bs.values) values.push_back(v);
            json witnesses = json::object();
            for (const auto& [v, r] : bs.runs) witnesses[std::to_string(v)] = run_to_json(r);
            out["beta_set"] = {{"values", values},
                               {"beta_min", bs.beta_min},
                               {"beta_max", bs.beta_max},
                               {"witnesses", witnesses}};
        } else {
            std::cout << "B = {";
            for (auto it = bs.values.begin(); it != bs.values.end(); ++it)
                std::cout << (it == bs.values.begin() ? "" : ", ") << *it;
            std::cout << "}; beta_max = " << bs.beta_max << "\n";
        }
    }
    if (as_json) std::cout << out << "\n";
    return 0;
}

int cmd_sort(const std::string& file, const std::string& perm_csv, const std::string& method,
             bool as_json) {
    const auto t = TranspositionTree::load_file(file);
    const auto p = Permutation::parse(perm_csv);
    SortingSequence seq{p, {}};
    if (method == "admissible") {
        seq = sort_admissible(t, p);
    } else if (method == "pair") {
        seq = sort_by_pair_homing(t, p).seq;
    } else if (method == "sequential") {
        seq = sort_sequential_leaf(t, p);
    } else {
        throw std::invalid_argument("unknown method: " + method);
    }
    const bool ok = verify(t, seq);
    if (as_json) {
        std::cout << json{{"start", p.to_string()},
                          {"method", method},
                          {"length", seq.length()},
                          {"edges", pairs_to_json(seq.edges)},
                          {"verified", ok}}
                  << "\n";
    } else {
        std::cout << seq.length() << " edges:";
        for (const auto& [a, b] : seq.edges) std::cout << " (" << a << "," << b << ")";
        std::cout << "\nverified: " << (ok ? "yes" : "NO") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_strictness(int from, int to, int max_n, const std::string& cache_path, bool as_json) {
    std::optional<ResultCache> cache;
    if (!cache_path.empty()) cache.emplace(cache_path);
    const auto rows = strictness_table(from, to, max_n, cache ? &*cache : nullptr);
    if (as_json) {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"n", r.n},
                           {"s_n", r.s_n},
                           {"delta_n", r.delta_n},
                           {"argmax_tree", r.argmax_tree}});
        std::cout << out << "\n";
    } else {
        std::cout << "n\ts(n)\tdelta_n\n";
        for (const auto& r : rows)
            std::cout << r.n << "\t" << r.s_n << "\t" << r.delta_n << "\t" << r.argmax_tree
                      << "\n";
    }
    return 0;
}

int cmd_enum_trees(int n, int max_n, bool as_json) {
    const auto catalog = enumerate_trees(n, max_n);
    if (as_json) {
        json out = json::array();
        for (const auto& t : catalog.representatives)
            out.push_back({{"canonical_form", canonical_form(t)},
                           {"edges", pairs_to_json(t.edges())}});
        std::cout << json{{"n", n}, {"count", catalog.count()}, {"trees", out}} << "\n";
    } else {
        bool first = true;
        for (const auto& t : catalog.representatives) {
            if (!first) std::cout << "\n";
            first = false;
            std::cout << t.to_edge_list();
        }
    }
    return 0;
}

int cmd_examples(bool as_json) {
    const auto results = reproduce_named_examples();
    bool all_pass = true;
    if (as_json) {
        json out = json::array();
        for (const auto& r : results) {
            out.push_back({{"name", r.name},
                           {"pass", r.pass},
                           {"detail", r.detail},
                           {"informational", r.informational}});
            if (!r.pass && !r.informational) all_pass = false;
        }
        std::cout << out << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "pass" : "FAIL") << (r.informational ? " (finding)" : "")
                      << "  " << r.name << "  [" << r.detail << "]\n";
            if (!r.pass && !r.informational) all_pass = false;
        }
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Diameters and diameter estimates of Cayley graphs generated by transposition trees"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    std::string file, perm_csv, method = "admissible", cache_path, strategy_name = "double_sweep";
    int max_n = 10, enum_max_n = 10, beta_max_n = 16, strict_max_n = 9;
    int from = 5, to = 9, enum_n = 0;
    bool all = false;

    auto* diam = app.add_subcommand("diam", "exact Cayley-graph diameter via BFS over n! states");
    diam->add_option("treefile", file)->required();
    diam->add_option("--max-n", max_n, "refuse larger degrees without this");

    auto* ft = app.add_subcommand("ft", "brute-force diameter upper bound over all n! permutations");
    ft->add_option("treefile", file)->required();
    ft->add_option("--max-n", max_n);

    auto* alga = app.add_subcommand("alga", "O(n^2) diametral-pair-removal estimate");
    alga->add_option("treefile", file)->required();
    alga->add_flag("--all", all, "enumerate every achievable estimate");
    alga->add_option("--strategy", strategy_name)
        ->check(CLI::IsMember({"double_sweep", "lexicographic_min"}));
    alga->add_option("--max-n", beta_max_n, "limit for --all enumeration");

    auto* sort_cmd = app.add_subcommand("sort", "constructive marker-homing sorters");
    sort_cmd->add_option("treefile", file)->required();
    sort_cmd->add_option("--perm", perm_csv, "one-line image, e.g. 3,5,1,4,2")->required();
    sort_cmd->add_option("--method", method)
        ->check(CLI::IsMember({"admissible", "pair", "sequential"}));

    auto* strict = app.add_subcommand("strictness", "per-n worst gap between bound and diameter");
    strict->add_option("--from", from);
    strict->add_option("--to", to);
    strict->add_option("--max-n", strict_max_n, "opt-in ceiling for heavy scans");
    strict->add_option("--cache", cache_path, "plain-text per-tree results cache");

    auto* enum_cmd = app.add_subcommand("enum-trees", "non-isomorphic trees on n vertices");
    enum_cmd->add_option("--n", enum_n)->required();
    enum_cmd->add_option("--max-n", enum_max_n);

    auto* examples = app.add_subcommand("examples", "re-run all benchmark-tree checks");
    (void)examples;

    CLI11_PARSE(app, argc, argv);

    try {
        if (diam->parsed()) return cmd_diam(file, max_n, as_json);
        if (ft->parsed()) return cmd_ft(file, max_n, as_json);
        if (alga->parsed()) {
            const auto strategy = strategy_name == "double_sweep" ? PairStrategy::double_sweep
                                                                  : PairStrategy::lexicographic_min;
            return cmd_alga(file, all, strategy, beta_max_n, as_json);
        }
        if (sort_cmd->parsed()) return cmd_sort(file, perm_csv, method, as_json);
        if (strict->parsed()) return cmd_strictness(from, to, strict_max_n, cache_path, as_json);
        if (enum_cmd->parsed()) return cmd_enum_trees(enum_n, enum_max_n, as_json);
        if (examples->parsed()) return cmd_examples(as_json);
    } catch (const std::runtime_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
