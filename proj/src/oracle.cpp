#include "homops/oracle.hpp"

#include <string>

namespace homops::oracle {

namespace {

std::size_t checked_order(const FgAbGroup& g, std::size_t bound, const char* who) {
    Order o = g.order();
    if (!o.finite) throw ValueError(std::string(who) + " requires a finite group");
    if (o.value > bound)
        throw BoundExceeded(std::string(who) + ": group order " + o.value.str() +
                            " exceeds bound " + std::to_string(bound));
    return static_cast<std::size_t>(o.value);
}

}  // namespace

ElementTable::ElementTable(const FgAbGroup& g, std::size_t bound) : group_(g) {
    std::size_t n = checked_order(g, bound, "ElementTable");
    const auto& factors = g.invariant_factors();
    std::vector<Int> current(factors.size(), Int(0));
    elements_.reserve(n);
    elements_.push_back(current);
    for (std::size_t c = 1; c < n; ++c) {
        // mixed-radix increment
        for (std::size_t k = factors.size(); k-- > 0;) {
            current[k] += 1;
            if (current[k] < factors[k]) break;
            current[k] = 0;
        }
        elements_.push_back(current);
    }
}

std::size_t ElementTable::index_of(const std::vector<Int>& e) const {
    const auto& factors = group_.invariant_factors();
    std::size_t idx = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        idx = idx * static_cast<std::size_t>(factors[k]) + static_cast<std::size_t>(e[k]);
    }
    return idx;
}

std::size_t ElementTable::add(std::size_t i, std::size_t j) const {
    const auto& factors = group_.invariant_factors();
    std::vector<Int> sum(factors.size());
    for (std::size_t k = 0; k < factors.size(); ++k)
        sum[k] = (elements_[i][k] + elements_[j][k]) % factors[k];
    return index_of(sum);
}

std::size_t ElementTable::scale(const Int& n, std::size_t i) const {
    const auto& factors = group_.invariant_factors();
    std::vector<Int> out(factors.size());
    for (std::size_t k = 0; k < factors.size(); ++k) {
        Int v = (n * elements_[i][k]) % factors[k];
        if (v < 0) v += factors[k];
        out[k] = v;
    }
    return index_of(out);
}

Int hom_count(const FgAbGroup& g, const FgAbGroup& h, std::size_t bound) {
    if (!g.is_finite() || !h.is_finite())
        throw ValueError("oracle hom_count requires finite groups");
    const auto& gens = g.invariant_factors();
    if (gens.empty()) return 1;  // only the zero map
    // Candidate images inspected: |H| per generator of G.
    Int inspected = Int(gens.size()) * h.order().value;
    if (inspected > bound)
        throw BoundExceeded("hom_count: " + inspected.str() + " candidate images exceed bound " +
                            std::to_string(bound));
    ElementTable table(h, bound);
    Int count = 1;
    for (const Int& d : gens) {
        Int killed = 0;
        for (std::size_t i = 0; i < table.size(); ++i)
            if (table.scale(d, i) == 0) ++killed;
        count *= killed;
    }
    return count;
}

FgAbGroup ext(const FgAbGroup& g, const FgAbGroup& h) {
    if (!g.is_finite()) throw ValueError("oracle ext requires a finite first argument");
    // Ext(G, H) = (+) over invariant factors d of G of H/dH.
    FgAbGroup result;
    const std::size_t hf = h.free_rank();
    const auto& he = h.invariant_factors();
    const std::size_t gens = hf + he.size();
    for (const Int& d : g.invariant_factors()) {
        IntMatrix rel(he.size() + gens, gens);
        for (std::size_t j = 0; j < he.size(); ++j) rel(j, hf + j) = he[j];
        for (std::size_t j = 0; j < gens; ++j) rel(he.size() + j, j) = d;
        result = direct_sum(result, cokernel(rel));
    }
    return result;
}

FgAbGroup tensor(const FgAbGroup& g, const FgAbGroup& h, std::size_t bound) {
    if (!g.is_finite() || !h.is_finite())
        throw ValueError("oracle tensor requires finite groups");
    const auto& gd = g.invariant_factors();
    const auto& he = h.invariant_factors();
    const std::size_t n = gd.size() * he.size();
    if (n > bound)
        throw BoundExceeded("tensor: presentation with " + std::to_string(n) +
                            " generators exceeds bound " + std::to_string(bound));
    // Generators x_(i,j) = g_i (x) h_j; relations d_i x = 0 and e_j x = 0.
    IntMatrix rel(2 * n, n);
    for (std::size_t i = 0; i < gd.size(); ++i)
        for (std::size_t j = 0; j < he.size(); ++j) {
            std::size_t col = i * he.size() + j;
            rel(col, col) = gd[i];
            rel(n + col, col) = he[j];
        }
    return cokernel(rel);
}

FgAbGroup tor(const FgAbGroup& g, const FgAbGroup& h, std::size_t bound) {
    if (!g.is_finite() || !h.is_finite()) throw ValueError("oracle tor requires finite groups");
    const auto& gd = g.invariant_factors();
    const auto& he = h.invariant_factors();
    const std::size_t t = gd.size(), u = he.size();
    const std::size_t n = t * u;
    if (n > bound)
        throw BoundExceeded("tor: resolution complex with " + std::to_string(n) +
                            " generators per block exceeds bound " + std::to_string(bound));
    // Tensor the resolutions 0 -> Z^t -> Z^t -> G -> 0 and likewise for H;
    // Tor(G, H) is the degree-1 homology of the total complex.
    IntMatrix d1(n, 2 * n);   // (P0 (x) Q1) (+) (P1 (x) Q0) -> P0 (x) Q0
    IntMatrix d2(2 * n, n);   // P1 (x) Q1 -> (P0 (x) Q1) (+) (P1 (x) Q0)
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < u; ++j) {
            std::size_t c = i * u + j;
            d1(c, c) = he[j];
            d1(c, n + c) = gd[i];
            d2(c, c) = gd[i];
            d2(n + c, c) = -he[j];
        }
    IntMatrix cycles = kernel_basis(d1);
    IntMatrix coeffs = solve_in_lattice(cycles, d2);
    return cokernel(coeffs.transposed());
}

}  // namespace homops::oracle
