#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace losq {

// Immutable lower-triangular table with entries T(n,k) for 0 <= k <= n <= rows().
// Stored row-major packed; built once from a generator and never mutated.
template <class E>
class Triangle {
public:
    Triangle(std::size_t max_n, std::string provenance, std::vector<E> packed)
        : max_n_(max_n), provenance_(std::move(provenance)), cells_(std::move(packed)) {
        if (cells_.size() != (max_n_ + 1) * (max_n_ + 2) / 2)
            throw std::invalid_argument("Triangle: packed size does not match max_n");
    }

    // gen(n, k) is called once per cell in row order.
    template <class Gen>
    static Triangle build(std::size_t max_n, std::string provenance, Gen gen) {
        std::vector<E> cells;
        cells.reserve((max_n + 1) * (max_n + 2) / 2);
        for (std::size_t n = 0; n <= max_n; ++n)
            for (std::size_t k = 0; k <= n; ++k) cells.push_back(gen(n, k));
        return Triangle(max_n, std::move(provenance), std::move(cells));
    }

    std::size_t max_n() const { return max_n_; }
    const std::string& provenance() const { return provenance_; }

    const E& at(std::size_t n, std::size_t k) const {
        if (n > max_n_ || k > n) throw std::out_of_range("Triangle: (n,k) outside table");
        return cells_[n * (n + 1) / 2 + k];
    }

    // T(n,k) with the conventional zero outside 0 <= k <= n.
    E at_or_zero(long long n, long long k) const {
        if (n < 0 || k < 0 || k > n) return E{};
        return at(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
    }

    const std::vector<E>& cells() const { return cells_; }

private:
    std::size_t max_n_;
    std::string provenance_;
    std::vector<E> cells_;
};

}  // namespace losq
