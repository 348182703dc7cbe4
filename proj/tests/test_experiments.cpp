#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/experiments.hpp"
#include "cayley/tree_enum.hpp"

#include <cstdio>
#include <fstream>

using namespace cayley;

TEST_CASE("strictness rows for the small sizes") {
    const auto rows = strictness_table(5, 7);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].s_n == 3);
    CHECK(rows[0].delta_n == 1);
    CHECK(rows[1].s_n == 6);
    CHECK(rows[1].delta_n == 2);
    CHECK(rows[2].s_n == 11);
    CHECK(rows[2].delta_n == 3);
    for (const auto& r : rows) {
        CHECK(r.delta_n >= r.n - 4);
        CHECK_FALSE(r.argmax_tree.empty());
    }
}

TEST_CASE("rows are reproducible in isolation") {
    const auto alone = strictness_table(6, 6);
    const auto ranged = strictness_table(5, 7);
    CHECK(alone[0].delta_n == ranged[1].delta_n);
    CHECK(alone[0].argmax_tree == ranged[1].argmax_tree);
}

TEST_CASE("result cache makes reruns incremental") {
    const std::string path = "strictness_cache_test.txt";
    std::remove(path.c_str());
    {
        ResultCache cache(path);
        const auto rows = strictness_table(5, 6, 9, &cache);
        CHECK(rows[0].delta_n == 1);
        CHECK(cache.lookup(rows[0].argmax_tree).has_value());
    }
    {
        // reload from disk; every tree should hit the cache
        ResultCache cache(path);
        for (const auto& t : enumerate_trees(5).representatives)
            CHECK(cache.lookup(canonical_form(t)).has_value());
        const auto rows = strictness_table(5, 6, 9, &cache);
        CHECK(rows[0].delta_n == 1);
        CHECK(rows[1].delta_n == 2);
    }
    std::remove(path.c_str());
}

TEST_CASE("strictness guardrails") {
    CHECK_THROWS_AS(strictness_table(7, 5), std::invalid_argument);
    CHECK_THROWS_AS(strictness_table(5, 10, 9), std::runtime_error);
}

TEST_CASE("benchmark-tree report passes in full") {
    const auto results = reproduce_named_examples();
    CHECK(results.size() > 20);
    for (const auto& r : results) {
        INFO(r.name, ": ", r.detail);
        if (!r.informational) CHECK(r.pass);
    }
}
