#ifndef HOMOPS_ABGROUP_HPP
#define HOMOPS_ABGROUP_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "homops/errors.hpp"

namespace homops {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense integer matrix with exact entries. Row-major.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row a += c * row b / col a += c * col b
    void add_row(std::size_t a, std::size_t b, const Int& c);
    void add_col(std::size_t a, std::size_t b, const Int& c);
    void negate_row(std::size_t a);
    void negate_col(std::size_t a);

    std::string to_string() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

// Order of a group: a positive integer or infinite.
struct Order {
    bool finite = true;
    Int value = 1;  // meaningful only when finite

    static Order infinite() { return Order{false, 0}; }
    static Order of(Int v) { return Order{true, std::move(v)}; }
    Order operator*(const Order& rhs) const {
        if (!finite || !rhs.finite) return infinite();
        return of(value * rhs.value);
    }
    bool operator==(const Order& rhs) const {
        if (finite != rhs.finite) return false;
        return !finite || value == rhs.value;
    }
    std::string to_string() const { return finite ? value.str() : "infinite"; }
};

// Finitely generated abelian group in canonical form: free rank plus the
// invariant-factor chain d1 | d2 | ... | dt with every di >= 2. Canonical
// form makes isomorphism a structural equality.
class FgAbGroup {
  public:
    FgAbGroup() = default;  // trivial group

    static FgAbGroup free(std::size_t rank);
    // n >= 2 gives Z/n; n == 1 gives the trivial group.
    static FgAbGroup cyclic(const Int& n);
    // Canonicalizes an arbitrary list of cyclic orders (>= 1; 1s are dropped).
    static FgAbGroup from_orders(std::size_t free_rank, const std::vector<Int>& orders);

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Int>& invariant_factors() const { return torsion_; }

    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    bool is_free() const { return torsion_.empty(); }
    bool has_2_torsion() const;

    Order order() const;

    // Prime-power cyclic summands (p, e) meaning Z/p^e, sorted by (p, e).
    std::vector<std::pair<Int, unsigned>> primary_factors() const;

    bool operator==(const FgAbGroup& rhs) const = default;
    friend std::strong_ordering operator<=>(const FgAbGroup& a, const FgAbGroup& b);

  private:
    std::size_t free_rank_ = 0;
    std::vector<Int> torsion_;
};

FgAbGroup direct_sum(const FgAbGroup& g, const FgAbGroup& h);

// Homomorphism between canonical groups, described by a matrix on the chosen
// generators (free generators first, then torsion generators in factor order).
// Column j is the image of source generator j.
struct GroupMorphism {
    FgAbGroup source;
    FgAbGroup target;
    IntMatrix matrix;

    GroupMorphism(FgAbGroup src, FgAbGroup tgt, IntMatrix m);
    // True when every source relation is annihilated in the target.
    static bool respects_relations(const FgAbGroup& src, const FgAbGroup& tgt, const IntMatrix& m);
};

struct SmithResult {
    IntMatrix smith;        // diagonalized matrix, same shape as the input
    IntMatrix row_ops;      // U with U * m * V = smith (present when requested)
    IntMatrix col_ops;      // V
    std::vector<Int> diag;  // positive invariant factors d1 | d2 | ... | dr
    std::size_t rank() const { return diag.size(); }
};

SmithResult smith_normal_form(const IntMatrix& m, bool with_transforms = true);

// Presentation convention: rows are relations, columns are generators.
FgAbGroup cokernel(const IntMatrix& relations);

// Basis of the integer kernel of m, as matrix columns. The kernel of an
// integer matrix is a saturated sublattice, so this basis extends to a basis
// of the ambient lattice.
IntMatrix kernel_basis(const IntMatrix& m);

// Solves k * x = b exactly; requires k to have full column rank and every
// column of b to lie in the column lattice of k (logic_error otherwise).
IntMatrix solve_in_lattice(const IntMatrix& k, const IntMatrix& b);

// Trial-division factorization of n >= 2 into (prime, exponent) pairs.
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

}  // namespace homops

#endif
