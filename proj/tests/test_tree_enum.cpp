#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/tree_enum.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace cayley;

TEST_CASE("labeled trees from codes") {
    const auto t3 = from_pruefer({1});
    CHECK(t3.vertex_count() == 3);
    CHECK(t3.edges() == std::vector<Edge>{{1, 2}, {1, 3}});

    const auto t2 = from_pruefer({});
    CHECK(t2.edges() == std::vector<Edge>{{1, 2}});

    CHECK_THROWS_AS(from_pruefer({5}), std::invalid_argument);

    // the 16 codes on 4 vertices give 16 distinct labeled trees in 2 classes
    std::set<std::vector<Edge>> labeled;
    std::set<std::string> classes;
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            const auto t = from_pruefer({a, b});
            auto edges = t.edges();
            std::sort(edges.begin(), edges.end());
            labeled.insert(edges);
            classes.insert(canonical_form(t));
        }
    }
    CHECK(labeled.size() == 16);
    CHECK(classes.size() == 2);
}

TEST_CASE("canonical form separates and identifies") {
    CHECK(canonical_form(TranspositionTree::path(3)) ==
          canonical_form(TranspositionTree::validate(3, {{2, 1}, {2, 3}})));
    CHECK(canonical_form(TranspositionTree::path(4)) !=
          canonical_form(TranspositionTree::star(4)));

    std::set<std::string> five;
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b)
            for (int c = 1; c <= 5; ++c) five.insert(canonical_form(from_pruefer({a, b, c})));
    CHECK(five.size() == 3);
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(41);
    for (int n = 3; n <= 9; ++n) {
        std::uniform_int_distribution<int> label(1, n);
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<int> code(static_cast<std::size_t>(n) - 2);
            for (auto& v : code) v = label(rng);
            const auto t = from_pruefer(code);

            std::vector<int> relabel(static_cast<std::size_t>(n));
            std::iota(relabel.begin(), relabel.end(), 1);
            std::shuffle(relabel.begin(), relabel.end(), rng);
            std::vector<Edge> mapped;
            for (const auto& [u, v] : t.edges())
                mapped.push_back({relabel[static_cast<std::size_t>(u - 1)],
                                  relabel[static_cast<std::size_t>(v - 1)]});
            const auto t2 = TranspositionTree::validate(n, mapped);
            REQUIRE(canonical_form(t) == canonical_form(t2));
        }
    }
}

TEST_CASE("catalog counts match the known sequence") {
    CHECK(enumerate_trees(2).count() == 1);
    CHECK(enumerate_trees(3).count() == 1);
    CHECK(enumerate_trees(4).count() == 2);
    CHECK(enumerate_trees(5).count() == 3);
    CHECK(enumerate_trees(6).count() == 6);
    CHECK(enumerate_trees(7).count() == 11);
    CHECK(enumerate_trees(8).count() == 23);
}

TEST_CASE("representatives are valid and pairwise non-isomorphic") {
    for (int n = 2; n <= 8; ++n) {
        const auto cat = enumerate_trees(n);
        std::set<std::string> forms;
        for (const auto& t : cat.representatives) {
            CHECK(t.vertex_count() == n);
            CHECK(t.edges().size() == static_cast<std::size_t>(n) - 1);
            CHECK(forms.insert(canonical_form(t)).second);
        }
    }
    CHECK_THROWS_AS(enumerate_trees(1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_trees(11, 10), std::runtime_error);
}
