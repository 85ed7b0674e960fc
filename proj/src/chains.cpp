#include "homops/chains.hpp"

#include <numeric>
#include <string>

#include "homops/functors.hpp"

namespace homops::chains {

ChainComplex::ChainComplex(int min_degree, std::vector<std::size_t> ranks,
                           std::vector<IntMatrix> boundaries)
    : min_degree_(min_degree), ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
    if (boundaries_.size() != ranks_.size())
        throw ValueError("chain complex needs one boundary per stored degree");
    for (std::size_t k = 0; k < ranks_.size(); ++k) {
        std::size_t below = k == 0 ? 0 : ranks_[k - 1];
        if (boundaries_[k].rows() != below || boundaries_[k].cols() != ranks_[k])
            throw ValueError("boundary matrix shape mismatch at degree " +
                             std::to_string(min_degree_ + static_cast<int>(k)));
    }
    for (std::size_t k = 1; k < ranks_.size(); ++k) {
        if (!(boundaries_[k - 1] * boundaries_[k]).is_zero())
            throw ValueError("boundary composite is nonzero at degree " +
                             std::to_string(min_degree_ + static_cast<int>(k)));
    }
}

std::size_t ChainComplex::rank(int n) const {
    if (n < min_degree_ || n > max_degree()) return 0;
    return ranks_[static_cast<std::size_t>(n - min_degree_)];
}

IntMatrix ChainComplex::boundary(int n) const {
    if (n < min_degree_ || n > max_degree()) return IntMatrix(rank(n - 1), rank(n));
    return boundaries_[static_cast<std::size_t>(n - min_degree_)];
}

std::size_t ChainComplex::total_rank() const {
    return std::accumulate(ranks_.begin(), ranks_.end(), std::size_t{0});
}

ChainComplex moore_complex(const FgAbGroup& g, int n) {
    if (n < 2) throw DegreeTooSmall("Moore space degree must be >= 2");
    const std::size_t f = g.free_rank();
    const auto& torsion = g.invariant_factors();
    const std::size_t t = torsion.size();
    if (f + t == 0) return ChainComplex(n, {0}, {IntMatrix(0, 0)});
    if (t == 0) return ChainComplex(n, {f}, {IntMatrix(0, f)});
    IntMatrix attach(f + t, t);  // free cells first, then torsion cells
    for (std::size_t i = 0; i < t; ++i) attach(f + i, i) = torsion[i];
    return ChainComplex(n, {f + t, t}, {IntMatrix(0, f + t), attach});
}

namespace {

// Column layout of the degree-n piece of a tensor complex: one block per
// degree i of the first factor, ordered by i, entries (p, q) in row-major
// order over (first-factor cell p, second-factor cell q).
std::size_t block_offset(const ChainComplex& a, const ChainComplex& b, int n, int i) {
    std::size_t off = 0;
    for (int k = a.min_degree(); k < i; ++k) off += a.rank(k) * b.rank(n - k);
    return off;
}

}  // namespace

ChainComplex tensor_complex(const ChainComplex& a, const ChainComplex& b, LeibnizSign sign) {
    const int min = a.min_degree() + b.min_degree();
    const int max = a.max_degree() + b.max_degree();
    std::vector<std::size_t> ranks;
    for (int n = min; n <= max; ++n) {
        std::size_t r = 0;
        for (int i = a.min_degree(); i <= a.max_degree(); ++i) r += a.rank(i) * b.rank(n - i);
        ranks.push_back(r);
    }
    std::vector<IntMatrix> boundaries;
    for (int n = min; n <= max; ++n) {
        IntMatrix d(n == min ? 0 : ranks[static_cast<std::size_t>(n - 1 - min)],
                    ranks[static_cast<std::size_t>(n - min)]);
        for (int i = a.min_degree(); i <= a.max_degree(); ++i) {
            const std::size_t ra = a.rank(i), rb = b.rank(n - i);
            if (ra == 0 || rb == 0) continue;
            const std::size_t col0 = block_offset(a, b, n, i);
            const IntMatrix da = a.boundary(i);
            const IntMatrix db = b.boundary(n - i);
            const Int first_sign = (sign == LeibnizSign::OnFirstFactor && ((n - i) % 2 != 0)) ? -1 : 1;
            const Int second_sign = (sign == LeibnizSign::OnSecondFactor && (i % 2 != 0)) ? -1 : 1;
            for (std::size_t p = 0; p < ra; ++p)
                for (std::size_t q = 0; q < rb; ++q) {
                    const std::size_t col = col0 + p * rb + q;
                    // (da x) (x) y lands in block i-1 of degree n-1
                    if (n - 1 >= min) {
                        const std::size_t rb_same = b.rank(n - i);
                        const std::size_t row0a = block_offset(a, b, n - 1, i - 1);
                        for (std::size_t r = 0; r < da.rows(); ++r)
                            if (da(r, p) != 0) d(row0a + r * rb_same + q, col) += first_sign * da(r, p);
                        // x (x) (db y) lands in block i of degree n-1
                        const std::size_t rb_down = b.rank(n - 1 - i);
                        const std::size_t row0b = block_offset(a, b, n - 1, i);
                        for (std::size_t s = 0; s < db.rows(); ++s)
                            if (db(s, q) != 0) d(row0b + p * rb_down + s, col) += second_sign * db(s, q);
                    }
                }
        }
        boundaries.push_back(std::move(d));
    }
    return ChainComplex(min, std::move(ranks), std::move(boundaries));
}

ChainComplex wedge_complex(const ChainComplex& a, const ChainComplex& b) {
    const int min = std::min(a.min_degree(), b.min_degree());
    const int max = std::max(a.max_degree(), b.max_degree());
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> boundaries;
    for (int n = min; n <= max; ++n) {
        ranks.push_back(a.rank(n) + b.rank(n));
        IntMatrix d(n == min ? 0 : a.rank(n - 1) + b.rank(n - 1), a.rank(n) + b.rank(n));
        if (n > min) {
            IntMatrix da = a.boundary(n), db = b.boundary(n);
            for (std::size_t i = 0; i < da.rows(); ++i)
                for (std::size_t j = 0; j < da.cols(); ++j) d(i, j) = da(i, j);
            for (std::size_t i = 0; i < db.rows(); ++i)
                for (std::size_t j = 0; j < db.cols(); ++j)
                    d(a.rank(n - 1) + i, a.rank(n) + j) = db(i, j);
        }
        boundaries.push_back(std::move(d));
    }
    return ChainComplex(min, std::move(ranks), std::move(boundaries));
}

FgAbGroup homology(const ChainComplex& c, int n) {
    if (c.rank(n) == 0) return FgAbGroup{};
    IntMatrix cycles = kernel_basis(c.boundary(n));
    if (cycles.cols() == 0) return FgAbGroup{};
    // Express the image of the next boundary in the cycle basis; the cycle
    // lattice is saturated, so the division is exact.
    IntMatrix coeffs = solve_in_lattice(cycles, c.boundary(n + 1));
    return cokernel(coeffs.transposed());
}

KunnethReport kunneth_check(const FgAbGroup& g1, int q1, const FgAbGroup& g2, int q2) {
    ChainComplex product = tensor_complex(moore_complex(g1, q1), moore_complex(g2, q2));
    KunnethReport report{g1, g2, q1, q2, {}, true};
    const int lo = std::min(product.min_degree(), q1 + q2) - 1;
    const int hi = std::max(product.max_degree(), q1 + q2 + 1);
    for (int n = lo; n <= hi; ++n) {
        FgAbGroup expected;
        if (n == q1 + q2) expected = functors::tensor(g1, g2);
        else if (n == q1 + q2 + 1) expected = functors::tor(g1, g2);
        FgAbGroup computed = homology(product, n);
        bool ok = expected == computed;
        report.pass = report.pass && ok;
        report.lines.push_back({n, std::move(expected), std::move(computed), ok});
    }
    return report;
}

}  // namespace homops::chains
