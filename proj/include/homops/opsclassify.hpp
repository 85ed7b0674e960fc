#ifndef HOMOPS_OPSCLASSIFY_HPP
#define HOMOPS_OPSCLASSIFY_HPP

#include <string>
#include <vector>

#include "homops/abgroup.hpp"
#include "homops/errors.hpp"
#include "homops/moorecalc.hpp"

namespace homops::ops {

// A binary-operation type {G1, G2, G3; q1, q2, q3} on homotopy groups with
// coefficients: arguments in pi_{q1}(X; G1) x pi_{q2}(X; G2), values in
// pi_{q3}(X; G3).
struct OperationType {
    FgAbGroup g1, g2, g3;
    int q1, q2, q3;

    OperationType(FgAbGroup g1, FgAbGroup g2, FgAbGroup g3, int q1, int q2, int q3);
};

enum class RangeVerdict { Yes, YesByFreeRelaxation, No };

std::string to_string(RangeVerdict v);

struct RangeReport {
    RangeVerdict verdict;
    bool degree_floor_ok;  // q1, q2 >= 3, required for basic operations
};

// Checks q3 < q1 + q2 + min(q1, q2) - 3; equality passes when G3 is free.
RangeReport basic_range_check(const OperationType& t);

// Within the basic range, every operation of the type vanishes identically
// iff q3 <= q1 + q2 - 3.
bool triviality_check(const OperationType& t);

enum class SpecialKind { None, WhiteheadCandidate, TorsionCandidate };

std::string to_string(SpecialKind k);

// Whitehead shape: q3 = q1+q2-1, G3 = G1 (x) G2, q1,q2 >= 3.
// Torsion shape:   q3 = q1+q2,   G3 = Tor(G1,G2), q1,q2 >= 4.
SpecialKind special_kind(const OperationType& t);

// The group of basic operations, computed as pi_{q3} of the suspended smash
// of the desuspended Moore spaces, with coefficients G3. Requires the type to
// pass basic_range_check and q1, q2 >= 3.
Maybe<moore::UctSequence> bo_group(const OperationType& t,
                                   const moore::StemTable& table = moore::StemTable::builtin());

// Number of Whitehead (resp. Torsion) products of the type: the cardinality
// of Ext(G3, pi_{q3+2}(M1 ^ M2)). Torsion counts additionally assume the
// Hurewicz comparison map is an isomorphism in the relevant degree; callers
// should surface that hypothesis. Unknown when a needed stem is untabulated
// or, for cyclic Torsion types, when no Torsion product exists at all.
Maybe<Int> count_special_ops(const OperationType& t,
                             const moore::StemTable& table = moore::StemTable::builtin());

// Hilton's criterion: a Torsion product of type {Z/m, Z/n; q1, q2} exists iff
// gcd(m, n) is odd, or m and n are even and 4 divides m or n. Degrees >= 4.
bool torsion_exists(const Int& m, const Int& n, int q1, int q2);

struct ExtOpDescriptor {
    long long index;  // 0 .. k-1
    bool is_zero;
    std::string universal_element;
    FgAbGroup g3;
    int q1, q2, q3;
};

// The k operations of type {Z, Z, Z/k; q1, q2, q1+q2-2}: composites of the
// classical Whitehead product with multiples of the degree-collapse
// projection M(Z/k, q1+q2-2) -> S^{q1+q2-1}.
std::vector<ExtOpDescriptor> ext_ops_enumerate(long long k, int q1, int q2);

enum class ProductKind { Whitehead, Torsion };

struct CommutativitySign {
    long long exponent;  // q1*q2 for Whitehead, q1*q2 + 1 for Torsion
    int sign;            // (-1)^exponent
    std::string note;
};

// Sign rule for switching the two arguments, paired with the coefficient
// switch isomorphism G2 (x) G1 -> G1 (x) G2 (resp. Tor).
CommutativitySign commutativity_sign(ProductKind kind, int q1, int q2);

enum class ShiftDirection { ToCoMoore, ToMoore };

// Degree bookkeeping between Moore-space and co-Moore-space indexing of
// homotopy groups with cyclic prime-power coefficients:
// pi_n(X; Z/p^k) = pi'_{n+1}(X; Z/p^k).
int neisendorfer_shift(int n, ShiftDirection direction);

struct ClassificationReport {
    OperationType type;
    RangeVerdict in_basic_range;
    bool degree_floor_ok;
    bool bi_additive_forced;  // strict range: basic <=> bi-additive
    bool trivially_zero;
    SpecialKind special;
    Maybe<moore::UctSequence> bo;
    Maybe<Int> special_count;
    std::optional<bool> torsion_existence;  // cyclic Torsion types only
    std::optional<CommutativitySign> sign;
    std::vector<std::string> notes;
};

ClassificationReport classify(const OperationType& t,
                              const moore::StemTable& table = moore::StemTable::builtin());

}  // namespace homops::ops

#endif
