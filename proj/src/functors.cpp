#include "homops/functors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace homops::functors {

using boost::multiprecision::gcd;

namespace {

void append_copies(std::vector<Int>& orders, const Int& d, std::size_t copies) {
    for (std::size_t i = 0; i < copies; ++i) orders.push_back(d);
}

void append_pairwise_gcds(std::vector<Int>& orders, const FgAbGroup& g, const FgAbGroup& h) {
    for (const Int& d : g.invariant_factors())
        for (const Int& e : h.invariant_factors()) orders.push_back(gcd(d, e));
}

}  // namespace

FgAbGroup tensor(const FgAbGroup& g, const FgAbGroup& h) {
    std::vector<Int> orders;
    append_pairwise_gcds(orders, g, h);
    for (const Int& d : g.invariant_factors()) append_copies(orders, d, h.free_rank());
    for (const Int& e : h.invariant_factors()) append_copies(orders, e, g.free_rank());
    return FgAbGroup::from_orders(g.free_rank() * h.free_rank(), orders);
}

FgAbGroup tor(const FgAbGroup& g, const FgAbGroup& h) {
    std::vector<Int> orders;
    append_pairwise_gcds(orders, g, h);
    return FgAbGroup::from_orders(0, orders);
}

FgAbGroup hom(const FgAbGroup& g, const FgAbGroup& h) {
    // Hom(Z, H) = H; Hom(Z/d, Z) = 0; Hom(Z/d, Z/e) = Z/gcd(d, e).
    std::vector<Int> orders;
    append_pairwise_gcds(orders, g, h);
    for (const Int& e : h.invariant_factors()) append_copies(orders, e, g.free_rank());
    return FgAbGroup::from_orders(g.free_rank() * h.free_rank(), orders);
}

FgAbGroup ext(const FgAbGroup& g, const FgAbGroup& h) {
    // Ext(Z, H) = 0; Ext(Z/d, Z) = Z/d; Ext(Z/d, Z/e) = Z/gcd(d, e).
    std::vector<Int> orders;
    append_pairwise_gcds(orders, g, h);
    for (const Int& d : g.invariant_factors()) append_copies(orders, d, h.free_rank());
    return FgAbGroup::from_orders(0, orders);
}

FgAbGroup apply(FunctorKind kind, const FgAbGroup& g, const FgAbGroup& h) {
    switch (kind) {
        case FunctorKind::Hom: return hom(g, h);
        case FunctorKind::Ext: return ext(g, h);
        case FunctorKind::Tensor: return tensor(g, h);
        case FunctorKind::Tor: return tor(g, h);
    }
    throw std::logic_error("unreachable functor kind");
}

}  // namespace homops::functors
