#include "homops/abgroup.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace homops {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw ValueError("matrix entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ValueError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& v) { return v == 0; });
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ValueError("matrix product dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t a, std::size_t b, const Int& c) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += c * (*this)(b, j);
}

void IntMatrix::add_col(std::size_t a, std::size_t b, const Int& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += c * (*this)(i, b);
}

void IntMatrix::negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
}

void IntMatrix::negate_col(std::size_t a) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) = -(*this)(i, a);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Locates the nonzero entry of smallest absolute value in the submatrix
// starting at (t, t); returns false when the submatrix is zero.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Int v = abs_int(a(i, j));
            if (!found || v < best) {
                best = v;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m, bool with_transforms) {
    SmithResult res;
    res.smith = m;
    IntMatrix& a = res.smith;
    if (with_transforms) {
        res.row_ops = IntMatrix::identity(m.rows());
        res.col_ops = IntMatrix::identity(m.cols());
    }
    const std::size_t steps = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(a, t, pi, pj)) break;
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        if (with_transforms) {
            res.row_ops.swap_rows(t, pi);
            res.col_ops.swap_cols(t, pj);
        }

        for (;;) {
            // Reduce the pivot column and row; leftover remainders become the
            // new (smaller) pivot on the next pass.
            bool clean = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);
                if (q != 0) {
                    a.add_row(i, t, -q);
                    if (with_transforms) res.row_ops.add_row(i, t, -q);
                }
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                if (q != 0) {
                    a.add_col(j, t, -q);
                    if (with_transforms) res.col_ops.add_col(j, t, -q);
                }
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) {
                std::size_t qi, qj;
                find_pivot(a, t, qi, qj);
                a.swap_rows(t, qi);
                a.swap_cols(t, qj);
                if (with_transforms) {
                    res.row_ops.swap_rows(t, qi);
                    res.col_ops.swap_cols(t, qj);
                }
                continue;
            }
            // Pivot divides everything in its row/column; enforce the
            // divisibility chain against the rest of the submatrix.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < a.rows() && divides_all; ++i)
                for (std::size_t j = t + 1; j < a.cols() && divides_all; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        a.add_row(t, i, 1);
                        if (with_transforms) res.row_ops.add_row(t, i, 1);
                        divides_all = false;
                    }
            if (divides_all) break;
        }

        if (a(t, t) < 0) {
            a.negate_row(t);
            if (with_transforms) res.row_ops.negate_row(t);
        }
        res.diag.push_back(a(t, t));
    }
    return res;
}

FgAbGroup cokernel(const IntMatrix& relations) {
    SmithResult s = smith_normal_form(relations, false);
    std::vector<Int> factors;
    for (const Int& d : s.diag)
        if (d > 1) factors.push_back(d);
    return FgAbGroup::from_orders(relations.cols() - s.rank(), factors);
}

IntMatrix kernel_basis(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    const std::size_t r = s.rank();
    IntMatrix k(m.cols(), m.cols() - r);
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = r; j < m.cols(); ++j) k(i, j - r) = s.col_ops(i, j);
    return k;
}

IntMatrix solve_in_lattice(const IntMatrix& k, const IntMatrix& b) {
    if (k.rows() != b.rows()) throw ValueError("solve_in_lattice dimension mismatch");
    SmithResult s = smith_normal_form(k);
    if (s.rank() != k.cols()) throw std::logic_error("solve_in_lattice: matrix not of full column rank");
    IntMatrix ub = s.row_ops * b;
    IntMatrix y(k.cols(), b.cols());
    for (std::size_t i = 0; i < k.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (i < k.cols()) {
                if (ub(i, j) % s.diag[i] != 0)
                    throw std::logic_error("solve_in_lattice: column not in lattice");
                y(i, j) = ub(i, j) / s.diag[i];
            } else if (ub(i, j) != 0) {
                throw std::logic_error("solve_in_lattice: inconsistent system");
            }
        }
    return s.col_ops * y;
}

std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
    if (n < 2) throw ValueError("factorize requires n >= 2");
    std::vector<std::pair<Int, unsigned>> out;
    Int rest = n;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Int p = 5; p * p <= rest; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (rest > 1) out.emplace_back(rest, 1u);
    return out;
}

FgAbGroup FgAbGroup::free(std::size_t rank) {
    FgAbGroup g;
    g.free_rank_ = rank;
    return g;
}

FgAbGroup FgAbGroup::cyclic(const Int& n) {
    if (n < 1) throw ValueError("cyclic order must be >= 1");
    FgAbGroup g;
    if (n > 1) g.torsion_.push_back(n);
    return g;
}

FgAbGroup FgAbGroup::from_orders(std::size_t free_rank, const std::vector<Int>& orders) {
    // Canonicalize through the primary decomposition: per prime, sort the
    // exponents descending; the j-th invariant factor (from the top) is the
    // product of the j-th largest prime powers.
    std::map<Int, std::vector<unsigned>> primary;
    for (const Int& o : orders) {
        if (o < 1) throw ValueError("cyclic order must be >= 1");
        if (o == 1) continue;
        for (const auto& [p, e] : factorize(o)) primary[p].push_back(e);
    }
    std::size_t chain_len = 0;
    for (auto& [p, exps] : primary) {
        std::sort(exps.begin(), exps.end(), std::greater<>());
        chain_len = std::max(chain_len, exps.size());
    }
    std::vector<Int> factors(chain_len, Int(1));
    for (const auto& [p, exps] : primary)
        for (std::size_t j = 0; j < exps.size(); ++j) {
            Int pw = 1;
            for (unsigned e = 0; e < exps[j]; ++e) pw *= p;
            factors[j] *= pw;
        }
    std::reverse(factors.begin(), factors.end());
    FgAbGroup g;
    g.free_rank_ = free_rank;
    g.torsion_ = std::move(factors);
    return g;
}

bool FgAbGroup::has_2_torsion() const {
    return std::any_of(torsion_.begin(), torsion_.end(), [](const Int& d) { return d % 2 == 0; });
}

Order FgAbGroup::order() const {
    if (free_rank_ > 0) return Order::infinite();
    Int o = 1;
    for (const Int& d : torsion_) o *= d;
    return Order::of(o);
}

std::vector<std::pair<Int, unsigned>> FgAbGroup::primary_factors() const {
    std::vector<std::pair<Int, unsigned>> out;
    for (const Int& d : torsion_)
        for (const auto& pe : factorize(d)) out.push_back(pe);
    std::sort(out.begin(), out.end());
    return out;
}

std::strong_ordering operator<=>(const FgAbGroup& a, const FgAbGroup& b) {
    if (a.free_rank_ != b.free_rank_)
        return a.free_rank_ <=> b.free_rank_;
    if (a.torsion_.size() != b.torsion_.size())
        return a.torsion_.size() <=> b.torsion_.size();
    for (std::size_t i = 0; i < a.torsion_.size(); ++i)
        if (a.torsion_[i] != b.torsion_[i])
            return a.torsion_[i] < b.torsion_[i] ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

FgAbGroup direct_sum(const FgAbGroup& g, const FgAbGroup& h) {
    std::vector<Int> orders = g.invariant_factors();
    orders.insert(orders.end(), h.invariant_factors().begin(), h.invariant_factors().end());
    return FgAbGroup::from_orders(g.free_rank() + h.free_rank(), orders);
}

GroupMorphism::GroupMorphism(FgAbGroup src, FgAbGroup tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    const std::size_t src_gens = source.free_rank() + source.invariant_factors().size();
    const std::size_t tgt_gens = target.free_rank() + target.invariant_factors().size();
    if (matrix.rows() != tgt_gens || matrix.cols() != src_gens)
        throw ValueError("morphism matrix dimensions do not match generator counts");
    if (!respects_relations(source, target, matrix))
        throw ValueError("morphism does not respect torsion relations");
}

bool GroupMorphism::respects_relations(const FgAbGroup& src, const FgAbGroup& tgt,
                                       const IntMatrix& m) {
    const std::size_t sf = src.free_rank();
    const std::size_t tf = tgt.free_rank();
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j < sf) continue;  // free generator: no relation
        const Int& d = src.invariant_factors()[j - sf];
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Int v = d * m(i, j);
            if (i < tf) {
                if (v != 0) return false;
            } else if (v % tgt.invariant_factors()[i - tf] != 0) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace homops
