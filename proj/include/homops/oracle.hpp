#ifndef HOMOPS_ORACLE_HPP
#define HOMOPS_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "homops/abgroup.hpp"

namespace homops::oracle {

// Brute-force routes through resolutions, presentations and element
// enumeration. These deliberately avoid the closed-form gcd formulas so the
// two implementations check each other.

// Enumerated elements of a finite group as exponent tuples modulo the
// invariant factors.
class ElementTable {
  public:
    explicit ElementTable(const FgAbGroup& g, std::size_t bound = kDefaultBound);

    static constexpr std::size_t kDefaultBound = 10'000;

    const FgAbGroup& group() const { return group_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<Int>& element(std::size_t i) const { return elements_[i]; }
    std::size_t add(std::size_t i, std::size_t j) const;  // index of sum
    // Index of n * element(i).
    std::size_t scale(const Int& n, std::size_t i) const;

  private:
    std::size_t index_of(const std::vector<Int>& e) const;
    FgAbGroup group_;
    std::vector<std::vector<Int>> elements_;
};

// Counts homomorphisms G -> H by enumerating candidate images of each
// generator of G and keeping those annihilated by the generator's order.
// Throws BoundExceeded when more than `bound` candidate images would have to
// be inspected.
Int hom_count(const FgAbGroup& g, const FgAbGroup& h,
              std::size_t bound = ElementTable::kDefaultBound);

// Ext(G, H) for finite G via the free resolution 0 -> Z^t -> Z^t -> G -> 0:
// the direct sum over invariant factors d of H/dH, each presented by
// relations and reduced through Smith normal form.
FgAbGroup ext(const FgAbGroup& g, const FgAbGroup& h);

// G (x) H presented by generators g_i (x) h_j with relations d_i x = e_j x = 0.
FgAbGroup tensor(const FgAbGroup& g, const FgAbGroup& h,
                 std::size_t bound = ElementTable::kDefaultBound);

// Tor(G, H) as H_1 of the tensor product of free resolutions of G and H,
// computed by integer kernel/quotient linear algebra.
FgAbGroup tor(const FgAbGroup& g, const FgAbGroup& h,
              std::size_t bound = ElementTable::kDefaultBound);

}  // namespace homops::oracle

#endif
