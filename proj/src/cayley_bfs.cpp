#include "cayley/cayley_bfs.hpp"

#include <stdexcept>

namespace cayley {

int DistanceField::distance(const Permutation& p) const {
    if (p.degree() != n) throw std::invalid_argument("degree mismatch");
    return dist[p.rank()];
}

namespace {

// Rank/unrank specialized for the BFS hot loop: plain arrays, no checks.
std::uint64_t rank_of(const int* img, int n) {
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (img[j] < img[i]) ++smaller;
        r = r * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
    }
    return r;
}

void unrank_to(std::uint64_t k, int n, const std::uint64_t* fact, int* img) {
    int avail[32];
    for (int i = 0; i < n; ++i) avail[i] = i + 1;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t f = fact[n - 1 - i];
        const int idx = static_cast<int>(k / f);
        k %= f;
        img[i] = avail[idx];
        for (int j = idx; j < n - 1 - i; ++j) avail[j] = avail[j + 1];
    }
}

}  // namespace

DistanceField bfs_from_identity(const TranspositionTree& t, int max_n) {
    const int n = t.vertex_count();
    if (t.active_count() != n) throw std::invalid_argument("BFS needs the full tree");
    if (n > max_n)
        throw std::runtime_error("degree " + std::to_string(n) + " exceeds the BFS limit " +
                                 std::to_string(max_n) + "; raise the limit to confirm a " +
                                 std::to_string(n) + "! state scan is intended");

    std::uint64_t fact[33];
    fact[0] = 1;
    for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * static_cast<std::uint64_t>(i);
    const std::uint64_t total = fact[n];

    const auto edges = t.edges();
    constexpr std::uint8_t unvisited = 0xFF;
    std::vector<std::uint8_t> dist(total, unvisited);

    std::vector<std::uint64_t> frontier{Permutation::identity(n).rank()};
    dist[frontier[0]] = 0;
    int level = 0;
    std::vector<std::uint64_t> histogram{1};

    int img[32];
    std::vector<std::uint64_t> next;
    while (!frontier.empty()) {
        next.clear();
        for (const std::uint64_t r : frontier) {
            unrank_to(r, n, fact, img);
            for (const auto& [u, v] : edges) {
                std::swap(img[u - 1], img[v - 1]);
                const std::uint64_t nr = rank_of(img, n);
                std::swap(img[u - 1], img[v - 1]);
                if (dist[nr] == unvisited) {
                    dist[nr] = static_cast<std::uint8_t>(level + 1);
                    next.push_back(nr);
                }
            }
        }
        if (!next.empty()) {
            ++level;
            histogram.push_back(next.size());
        }
        frontier.swap(next);
    }

    return {n, std::move(dist), level, std::move(histogram)};
}

int cayley_distance(const TranspositionTree& t, const Permutation& p, int max_n) {
    return bfs_from_identity(t, max_n).distance(p);
}

}  // namespace cayley
