#ifndef HOMOPS_TEST_SUPPORT_HPP
#define HOMOPS_TEST_SUPPORT_HPP

#include <initializer_list>
#include <random>
#include <vector>

#include "homops/abgroup.hpp"

namespace homops::test {

inline FgAbGroup G(std::size_t free_rank, std::initializer_list<long long> factors = {}) {
    std::vector<Int> orders;
    for (long long f : factors) orders.emplace_back(f);
    return FgAbGroup::from_orders(free_rank, orders);
}

inline FgAbGroup Zn(long long n) { return FgAbGroup::cyclic(n); }

inline IntMatrix M(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<Int>> r;
    for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
    return IntMatrix::from_rows(r);
}

inline long long rnd(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline FgAbGroup random_group(std::mt19937_64& rng, int max_summands = 3, long long max_factor = 12,
                              bool allow_free = true) {
    std::size_t free_rank = 0;
    std::vector<Int> orders;
    long long summands = rnd(rng, 0, max_summands);
    for (long long i = 0; i < summands; ++i) {
        if (allow_free && rnd(rng, 0, 4) == 0) ++free_rank;
        else orders.emplace_back(rnd(rng, 2, max_factor));
    }
    return FgAbGroup::from_orders(free_rank, orders);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                               long long lo = -9, long long hi = 9) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rnd(rng, lo, hi);
    return m;
}

// A few random elementary row/column operations (unimodular on both sides).
inline IntMatrix randomly_transformed(std::mt19937_64& rng, IntMatrix m, int ops = 12) {
    for (int k = 0; k < ops; ++k) {
        bool on_rows = rnd(rng, 0, 1) == 0;
        std::size_t n = on_rows ? m.rows() : m.cols();
        if (n < 2) continue;
        std::size_t a = static_cast<std::size_t>(rnd(rng, 0, static_cast<long long>(n - 1)));
        std::size_t b = static_cast<std::size_t>(rnd(rng, 0, static_cast<long long>(n - 1)));
        switch (rnd(rng, 0, 2)) {
            case 0:
                if (on_rows) m.swap_rows(a, b);
                else m.swap_cols(a, b);
                break;
            case 1:
                if (on_rows) m.negate_row(a);
                else m.negate_col(a);
                break;
            default:
                if (a != b) {
                    Int c(rnd(rng, -3, 3));
                    if (on_rows) m.add_row(a, b, c);
                    else m.add_col(a, b, c);
                }
        }
    }
    return m;
}

}  // namespace homops::test

#endif
