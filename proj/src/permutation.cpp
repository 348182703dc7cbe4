#include "cayley/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cayley {

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = degree();
    if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : image_) {
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation value out of range: " + std::to_string(v));
        if (seen[static_cast<std::size_t>(v) - 1])
            throw std::invalid_argument("duplicate value in permutation: " + std::to_string(v));
        seen[static_cast<std::size_t>(v) - 1] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int i, int j) {
    if (i == j) throw std::invalid_argument("transposition endpoints must differ");
    Permutation p = identity(n);
    return p.apply_transposition(i, j);
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> img;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw std::invalid_argument("not an integer: '" + tok + "'");
        img.push_back(v);
    }
    if (img.empty()) throw std::invalid_argument("empty permutation");
    const int n = static_cast<int>(img.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : img) {
        if (v < 1 || v > n)
            throw std::invalid_argument("value " + std::to_string(v) + " out of range 1.." +
                                        std::to_string(n));
        if (seen[static_cast<std::size_t>(v) - 1])
            throw std::invalid_argument("value " + std::to_string(v) + " appears twice");
        seen[static_cast<std::size_t>(v) - 1] = 1;
    }
    return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (degree() != other.degree()) throw std::invalid_argument("degree mismatch in compose");
    const int n = degree();
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i) - 1] = (*this)(other(i));
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    const int n = degree();
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>((*this)(i)) - 1] = i;
    return Permutation(std::move(img));
}

int Permutation::cycle_count() const {
    const int n = degree();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int count = 0;
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<std::size_t>(i) - 1]) continue;
        ++count;
        int j = i;
        while (!seen[static_cast<std::size_t>(j) - 1]) {
            seen[static_cast<std::size_t>(j) - 1] = 1;
            j = (*this)(j);
        }
    }
    return count;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    const int n = degree();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<std::size_t>(i) - 1]) continue;
        std::vector<int> cyc;
        int j = i;
        while (!seen[static_cast<std::size_t>(j) - 1]) {
            seen[static_cast<std::size_t>(j) - 1] = 1;
            cyc.push_back(j);
            j = (*this)(j);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> Permutation::fixed_points() const {
    std::vector<int> out;
    for (int i = 1; i <= degree(); ++i)
        if ((*this)(i) == i) out.push_back(i);
    return out;
}

Permutation Permutation::apply_transposition(int i, int j) const {
    const int n = degree();
    if (i == j) throw std::invalid_argument("transposition endpoints must differ");
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("transposition endpoint out of range");
    std::vector<int> img = image_;
    std::swap(img[static_cast<std::size_t>(i) - 1], img[static_cast<std::size_t>(j) - 1]);
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

std::uint64_t Permutation::rank() const {
    const int n = degree();
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (image_[static_cast<std::size_t>(j)] < image_[static_cast<std::size_t>(i)]) ++smaller;
        r = r * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
    }
    return r;
}

Permutation Permutation::unrank(std::uint64_t k, int n) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    if (k >= factorial(n)) throw std::invalid_argument("rank out of range");
    std::vector<int> avail(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) avail[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> img;
    img.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const std::uint64_t f = factorial(n - 1 - i);
        const auto idx = static_cast<std::ptrdiff_t>(k / f);
        k %= f;
        img.push_back(avail[static_cast<std::size_t>(idx)]);
        avail.erase(avail.begin() + idx);
    }
    return Permutation(std::move(img));
}

std::string Permutation::to_string() const {
    std::string s;
    for (int i = 1; i <= degree(); ++i) {
        if (i > 1) s += ',';
        s += std::to_string((*this)(i));
    }
    return s;
}

}  // namespace cayley
