#include "cayley/ak_bound.hpp"

#include <algorithm>
#include <stdexcept>

namespace cayley {

BoundParts f_parts(const TranspositionTree& t, const DistanceTable& dist, const Permutation& p) {
    const int n = t.vertex_count();
    if (p.degree() != n) throw std::invalid_argument("degree mismatch between tree and permutation");
    long sum = 0;
    for (int i = 1; i <= n; ++i) sum += dist(i, p(i));
    return {p.cycle_count() - n + sum, sum};
}

long f_permutation(const TranspositionTree& t, const Permutation& p) {
    return f_parts(t, t.all_pairs_distances(), p).value;
}

BoundReport tree_bound(const TranspositionTree& t, int max_n) {
    const int n = t.vertex_count();
    if (t.active_count() != n) throw std::invalid_argument("tree bound needs the full tree");
    if (n > max_n)
        throw std::runtime_error("degree " + std::to_string(n) + " exceeds the scan limit " +
                                 std::to_string(max_n) + "; raise the limit to confirm a " +
                                 std::to_string(n) + "! scan is intended");
    const auto dist = t.all_pairs_distances();

    // Lehmer rank order is lexicographic order of the one-line image, so a
    // next_permutation sweep visits ranks 0..n!-1 and the first max seen is
    // the lowest-rank witness.
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    std::vector<char> pos_seen(static_cast<std::size_t>(n) + 1, 0);

    long best = -1;
    std::vector<int> best_img;
    std::uint64_t scanned = 0;
    do {
        long sum = 0;
        for (int i = 1; i <= n; ++i) sum += dist(i, img[static_cast<std::size_t>(i - 1)]);
        // inline cycle count
        std::fill(pos_seen.begin(), pos_seen.end(), 0);
        int cycles = 0;
        for (int i = 1; i <= n; ++i) {
            if (pos_seen[static_cast<std::size_t>(i)]) continue;
            ++cycles;
            int j = i;
            while (!pos_seen[static_cast<std::size_t>(j)]) {
                pos_seen[static_cast<std::size_t>(j)] = 1;
                j = img[static_cast<std::size_t>(j - 1)];
            }
        }
        const long value = cycles - n + sum;
        if (value > best) {
            best = value;
            best_img = img;
        }
        ++scanned;
    } while (std::next_permutation(img.begin(), img.end()));

    return {best, Permutation(std::move(best_img)), scanned};
}

}  // namespace cayley
