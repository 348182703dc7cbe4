#include "cayley/experiments.hpp"

#include "cayley/ak_bound.hpp"
#include "cayley/alg_a.hpp"
#include "cayley/cayley_bfs.hpp"
#include "cayley/tree_enum.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cayley {

TranspositionTree caterpillar8_tree() {
    return TranspositionTree::validate(
        8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {3, 7}, {7, 8}});
}

TranspositionTree double_spider9_tree() {
    return TranspositionTree::validate(
        9, {{1, 2}, {2, 3}, {3, 6}, {3, 4}, {4, 5}, {6, 7}, {6, 8}, {6, 9}});
}

TranspositionTree long_broom9_tree() {
    return TranspositionTree::validate(
        9, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {6, 8}, {6, 9}});
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string form;
        long bound = 0;
        int diam = 0;
        if (ls >> form >> bound >> diam) entries_[form] = {bound, diam};
    }
}

std::optional<std::pair<long, int>> ResultCache::lookup(const std::string& form) const {
    const auto it = entries_.find(form);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ResultCache::store(const std::string& form, long bound, int diam) {
    if (entries_.count(form)) return;
    entries_[form] = {bound, diam};
    std::ofstream out(path_, std::ios::app);
    out << form << ' ' << bound << ' ' << diam << '\n';
}

std::vector<StrictnessRow> strictness_table(int n_min, int n_max, int max_n, ResultCache* cache) {
    if (n_min < 2 || n_min > n_max) throw std::invalid_argument("bad strictness range");
    if (n_max > max_n)
        throw std::runtime_error("strictness scan up to n=" + std::to_string(n_max) +
                                 " exceeds the limit " + std::to_string(max_n));
    std::vector<StrictnessRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        const auto catalog = enumerate_trees(n, max_n);
        StrictnessRow row{n, catalog.count(), -1, ""};
        for (const auto& tree : catalog.representatives) {
            const auto form = canonical_form(tree);
            long bound = 0;
            int diam = 0;
            if (cache) {
                if (const auto hit = cache->lookup(form)) {
                    bound = hit->first;
                    diam = hit->second;
                } else {
                    bound = tree_bound(tree, max_n).value;
                    diam = bfs_from_identity(tree, max_n).diameter;
                    cache->store(form, bound, diam);
                }
            } else {
                bound = tree_bound(tree, max_n).value;
                diam = bfs_from_identity(tree, max_n).diameter;
            }
            const int delta = static_cast<int>(bound) - diam;
            if (delta < 0)
                throw std::logic_error("bound below diameter on " + form);
            if (delta > row.delta_n) {
                row.delta_n = delta;
                row.argmax_tree = form;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

long binom2(long n) { return n * (n - 1) / 2; }

void check(std::vector<CheckResult>& out, const std::string& name, bool pass,
           const std::string& detail) {
    out.push_back({name, pass, detail, false});
}

std::string set_to_string(const std::set<int>& s) {
    std::string txt = "{";
    for (int v : s) {
        if (txt.size() > 1) txt += ", ";
        txt += std::to_string(v);
    }
    return txt + "}";
}

}  // namespace

std::vector<CheckResult> reproduce_named_examples() {
    std::vector<CheckResult> out;

    {
        const auto t = caterpillar8_tree();
        const auto run1 = replay_alg_a(t, {{1, 8}, {5, 7}, {2, 6}});
        const auto run2 = replay_alg_a(t, {{1, 5}, {6, 8}, {2, 7}});
        check(out, "caterpillar-8: estimate 18 via pairs {1,8},{5,7},{2,6}", run1.beta == 18,
              "beta=" + std::to_string(run1.beta));
        check(out, "caterpillar-8: estimate 18 via pairs {1,5},{6,8},{2,7}", run2.beta == 18,
              "beta=" + std::to_string(run2.beta));
        const auto bs = enumerate_beta_set(t);
        check(out, "caterpillar-8: full estimate set {18}", bs.values == std::set<int>{18},
              "B=" + set_to_string(bs.values));
    }

    {
        const auto t = double_spider9_tree();
        const int diam = bfs_from_identity(t).diameter;
        const long bound = tree_bound(t).value;
        check(out, "double-spider-9: Cayley diameter 18", diam == 18, std::to_string(diam));
        check(out, "double-spider-9: brute-force bound 22", bound == 22, std::to_string(bound));
        const auto bs = enumerate_beta_set(t);
        const bool contains = bs.values.count(20) && bs.values.count(22);
        check(out, "double-spider-9: estimate set contains {20,22}", contains,
              "B=" + set_to_string(bs.values));
        check(out, "double-spider-9: beta_max 22", bs.beta_max == 22,
              std::to_string(bs.beta_max));
        check(out, "double-spider-9: some estimate strictly below the bound",
              bs.beta_min < bound, std::to_string(bs.beta_min) + " < " + std::to_string(bound));
        out.push_back({"double-spider-9: every estimate >= diameter (open conjecture)",
                       *bs.values.begin() >= diam, "B=" + set_to_string(bs.values) +
                       ", diam=" + std::to_string(diam), true});
    }

    {
        const auto t = long_broom9_tree();
        const int diam = bfs_from_identity(t).diameter;
        const long bound = tree_bound(t).value;
        check(out, "long-broom-9: Cayley diameter 24", diam == 24, std::to_string(diam));
        check(out, "long-broom-9: brute-force bound 30", bound == 30, std::to_string(bound));
    }

    for (int n = 5; n <= 8; ++n) {
        const auto suffix = " (n=" + std::to_string(n) + ")";
        {
            const auto t = TranspositionTree::path(n);
            const int diam = bfs_from_identity(t).diameter;
            const long bound = tree_bound(t).value;
            check(out, "path: diameter = bound = C(n,2)" + suffix,
                  diam == binom2(n) && bound == binom2(n),
                  "diam=" + std::to_string(diam) + ", bound=" + std::to_string(bound));
        }
        {
            const auto t = TranspositionTree::star(n);
            const int diam = bfs_from_identity(t).diameter;
            check(out, "star: diameter = floor(3(n-1)/2)" + suffix, diam == 3 * (n - 1) / 2,
                  std::to_string(diam));
        }
        {
            const auto t = TranspositionTree::broom(n);
            const int diam = bfs_from_identity(t).diameter;
            const long bound = tree_bound(t).value;
            const auto bs = enumerate_beta_set(t);
            check(out, "broom: bound = C(n,2)-2" + suffix, bound == binom2(n) - 2,
                  std::to_string(bound));
            check(out, "broom: diameter <= C(n-1,2)+1" + suffix, diam <= binom2(n - 1) + 1,
                  std::to_string(diam));
            check(out, "broom: bound - diameter >= n-4" + suffix, bound - diam >= n - 4,
                  std::to_string(bound - diam));
            const bool unique_value =
                bs.values.size() == 1 && *bs.values.begin() == binom2(n - 1) + n - 3;
            check(out, "broom: unique estimate C(n-1,2)+n-3" + suffix, unique_value,
                  "B=" + set_to_string(bs.values));
        }
    }

    {
        const int diam = bfs_from_identity(TranspositionTree::star(4)).diameter;
        check(out, "star on 4: Cayley diameter 4", diam == 4, std::to_string(diam));
    }

    return out;
}

}  // namespace cayley
