#ifndef HOMOPS_FUNCTORS_HPP
#define HOMOPS_FUNCTORS_HPP

#include "homops/abgroup.hpp"

namespace homops::functors {

enum class FunctorKind { Hom, Ext, Tensor, Tor };

// Closed forms over the invariant-factor decomposition. All results are
// re-canonicalized. Z is the tensor unit; Tor and Ext vanish on free
// arguments (first argument for Ext); on cyclic pairs all four give
// Z/gcd(m, n).
FgAbGroup tensor(const FgAbGroup& g, const FgAbGroup& h);
FgAbGroup tor(const FgAbGroup& g, const FgAbGroup& h);
FgAbGroup hom(const FgAbGroup& g, const FgAbGroup& h);
FgAbGroup ext(const FgAbGroup& g, const FgAbGroup& h);

FgAbGroup apply(FunctorKind kind, const FgAbGroup& g, const FgAbGroup& h);

}  // namespace homops::functors

#endif
