#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cayley {

std::uint64_t factorial(int n);

/// A permutation of {1..n}, stored as its one-line image.
/// Immutable: every operation returns a new value.
class Permutation {
public:
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);
    static Permutation transposition(int n, int i, int j);

    /// Parses the comma-separated one-line format, e.g. "3,5,1,4,2".
    static Permutation parse(const std::string& text);

    int degree() const { return static_cast<int>(image_.size()); }

    /// pi(i), 1-based.
    int operator()(int i) const { return image_[static_cast<std::size_t>(i) - 1]; }

    const std::vector<int>& image() const { return image_; }

    /// this o other: result(i) = this(other(i)), i.e. other is applied first.
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;

    /// Number of cycles, fixed points counted as 1-cycles.
    int cycle_count() const;

    /// Disjoint cycles covering {1..n}, each starting at its smallest
    /// element, sorted by that element. Singletons included.
    std::vector<std::vector<int>> cycles() const;

    std::vector<int> fixed_points() const;

    /// this * (i,j): swaps the images at positions i and j.
    Permutation apply_transposition(int i, int j) const;

    bool is_identity() const;

    /// Lehmer-code rank; identity has rank 0.
    std::uint64_t rank() const;
    static Permutation unrank(std::uint64_t k, int n);

    std::string to_string() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> image_;
};

inline Permutation compose(const Permutation& p, const Permutation& q) { return p.compose(q); }

}  // namespace cayley
