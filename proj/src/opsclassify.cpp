#include "homops/opsclassify.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "homops/functors.hpp"
#include "homops/groupexpr.hpp"

namespace homops::ops {

using boost::multiprecision::gcd;

OperationType::OperationType(FgAbGroup g1_, FgAbGroup g2_, FgAbGroup g3_, int q1_, int q2_, int q3_)
    : g1(std::move(g1_)), g2(std::move(g2_)), g3(std::move(g3_)), q1(q1_), q2(q2_), q3(q3_) {
    if (q1 < 2 || q2 < 2 || q3 < 2) throw DegreeTooSmall("operation degrees must be >= 2");
}

std::string to_string(RangeVerdict v) {
    switch (v) {
        case RangeVerdict::Yes: return "yes";
        case RangeVerdict::YesByFreeRelaxation: return "yes-by-free-relaxation";
        case RangeVerdict::No: return "no";
    }
    throw std::logic_error("unreachable verdict");
}

std::string to_string(SpecialKind k) {
    switch (k) {
        case SpecialKind::None: return "none";
        case SpecialKind::WhiteheadCandidate: return "whitehead-candidate";
        case SpecialKind::TorsionCandidate: return "torsion-candidate";
    }
    throw std::logic_error("unreachable kind");
}

RangeReport basic_range_check(const OperationType& t) {
    const int bound = t.q1 + t.q2 + std::min(t.q1, t.q2) - 3;
    RangeReport r{RangeVerdict::No, t.q1 >= 3 && t.q2 >= 3};
    if (t.q3 < bound) r.verdict = RangeVerdict::Yes;
    else if (t.q3 == bound && t.g3.is_free()) r.verdict = RangeVerdict::YesByFreeRelaxation;
    return r;
}

bool triviality_check(const OperationType& t) { return t.q3 <= t.q1 + t.q2 - 3; }

SpecialKind special_kind(const OperationType& t) {
    if (t.q3 == t.q1 + t.q2 - 1 && t.q1 >= 3 && t.q2 >= 3 &&
        t.g3 == functors::tensor(t.g1, t.g2))
        return SpecialKind::WhiteheadCandidate;
    if (t.q3 == t.q1 + t.q2 && t.q1 >= 4 && t.q2 >= 4 && t.g3 == functors::tor(t.g1, t.g2))
        return SpecialKind::TorsionCandidate;
    return SpecialKind::None;
}

Maybe<moore::UctSequence> bo_group(const OperationType& t, const moore::StemTable& table) {
    if (t.q1 < 3 || t.q2 < 3)
        throw DegreeTooSmall("the basic-operation group needs q1, q2 >= 3");
    if (basic_range_check(t).verdict == RangeVerdict::No)
        throw ValueError("type is outside the basic range q3 < q1 + q2 + min(q1, q2) - 3");
    // Sigma(M(G1, q1-1) ^ M(G2, q2-1)), decomposed as a wedge of Moore atoms.
    moore::MooreExpr desusp_smash = moore::smash_decompose(
        moore::MooreExpr::atom(t.g1, t.q1 - 1), moore::MooreExpr::atom(t.g2, t.q2 - 1));
    return moore::homotopy_with_coeffs(desusp_smash.suspended(), t.q3, t.g3, table);
}

Maybe<Int> count_special_ops(const OperationType& t, const moore::StemTable& table) {
    SpecialKind kind = special_kind(t);
    if (kind == SpecialKind::None)
        throw ValueError("count_special_ops needs a Whitehead- or Torsion-shaped type");
    if (kind == SpecialKind::TorsionCandidate) {
        bool g1_cyclic = t.g1.is_finite() && t.g1.invariant_factors().size() == 1;
        bool g2_cyclic = t.g2.is_finite() && t.g2.invariant_factors().size() == 1;
        if (g1_cyclic && g2_cyclic &&
            !torsion_exists(t.g1.invariant_factors()[0], t.g2.invariant_factors()[0], t.q1, t.q2))
            return Maybe<Int>::unknown("no Torsion product of this type exists (gcd even and "
                                       "neither order divisible by 4)");
    }
    // |Ext(G3, pi_{q3+2}(M1 ^ M2))| via the Ext term of the universal
    // coefficient sequence for pi_{q3+1}(M1 ^ M2; G3).
    moore::MooreExpr smash =
        moore::smash_decompose(moore::MooreExpr::atom(t.g1, t.q1), moore::MooreExpr::atom(t.g2, t.q2));
    Maybe<moore::UctSequence> seq = moore::homotopy_with_coeffs(smash, t.q3 + 1, t.g3, table);
    if (!seq) return Maybe<Int>::unknown(seq.reason());
    Order n = seq.value().ext_term.order();
    if (!n.finite)
        return Maybe<Int>::unknown("Ext term is infinite; the count is not a finite cardinality");
    return n.value;
}

bool torsion_exists(const Int& m, const Int& n, int q1, int q2) {
    if (q1 < 4 || q2 < 4) throw DegreeTooSmall("Torsion products need q1, q2 >= 4");
    if (m < 2 || n < 2) throw ValueError("Torsion existence is about cyclic orders >= 2");
    Int d = gcd(m, n);
    if (d % 2 != 0) return true;
    return m % 2 == 0 && n % 2 == 0 && (m % 4 == 0 || n % 4 == 0);
}

std::vector<ExtOpDescriptor> ext_ops_enumerate(long long k, int q1, int q2) {
    if (k < 2) throw ValueError("Ext operations need coefficient order k >= 2");
    if (q1 < 3 || q2 < 3) throw DegreeTooSmall("Ext operations need q1, q2 >= 3");
    const int q = q1 + q2;
    std::vector<ExtOpDescriptor> out;
    out.reserve(static_cast<std::size_t>(k));
    for (long long i = 0; i < k; ++i) {
        ExtOpDescriptor d;
        d.index = i;
        d.is_zero = i == 0;
        d.universal_element = "[i1,i2] o (" + std::to_string(i) + "*p), p: M(Z/" +
                              std::to_string(k) + "," + std::to_string(q - 2) + ") -> S^" +
                              std::to_string(q - 1);
        d.g3 = FgAbGroup::cyclic(k);
        d.q1 = q1;
        d.q2 = q2;
        d.q3 = q - 2;
        out.push_back(std::move(d));
    }
    return out;
}

CommutativitySign commutativity_sign(ProductKind kind, int q1, int q2) {
    CommutativitySign s;
    s.exponent = static_cast<long long>(q1) * q2 + (kind == ProductKind::Torsion ? 1 : 0);
    s.sign = s.exponent % 2 == 0 ? 1 : -1;
    s.note = kind == ProductKind::Whitehead
                 ? "S(b,a) = (-1)^(q1*q2) T(a,b) tau with tau the switch isomorphism "
                   "G2 (x) G1 -> G1 (x) G2"
                 : "S(b,a) = (-1)^(q1*q2+1) T(a,b) tau with tau the switch isomorphism "
                   "Tor(G2,G1) -> Tor(G1,G2)";
    return s;
}

int neisendorfer_shift(int n, ShiftDirection direction) {
    if (n < 2) throw DegreeTooSmall("coefficient degrees start at 2");
    if (direction == ShiftDirection::ToCoMoore) return n + 1;
    if (n - 1 < 2) throw DegreeTooSmall("co-Moore degree " + std::to_string(n) +
                                        " has no Moore counterpart >= 2");
    return n - 1;
}

ClassificationReport classify(const OperationType& t, const moore::StemTable& table) {
    RangeReport range = basic_range_check(t);
    ClassificationReport rep{t,
                             range.verdict,
                             range.degree_floor_ok,
                             range.verdict == RangeVerdict::Yes,
                             false,
                             special_kind(t),
                             Maybe<moore::UctSequence>::unknown("not computed"),
                             Maybe<Int>::unknown("not a special operation type"),
                             std::nullopt,
                             std::nullopt,
                             {}};
    rep.notes.push_back("the full operation group satisfies O = pi_q3(M1 v M2; G3); it is not "
                        "computed here");
    if (!range.degree_floor_ok)
        rep.notes.push_back("basic operations are defined for q1, q2 >= 3");
    if (range.verdict == RangeVerdict::No) {
        rep.notes.push_back("outside the basic range: basic operations need not factor through "
                            "the smash of desuspensions, and bi-additivity is not forced");
        return rep;
    }
    if (range.verdict == RangeVerdict::YesByFreeRelaxation)
        rep.notes.push_back("boundary case q3 = q1 + q2 + min(q1, q2) - 3 admitted because G3 "
                            "is free");
    rep.trivially_zero = triviality_check(t);
    if (rep.trivially_zero)
        rep.notes.push_back("q3 <= q1 + q2 - 3: every basic operation of this type is zero");
    else if (t.q3 == t.q1 + t.q2 - 2)
        rep.notes.push_back("q3 = q1 + q2 - 2 admits nontrivial operations (Ext operations) "
                            "when G3 is cyclic of finite order");
    if (rep.bi_additive_forced)
        rep.notes.push_back("in the strict range, basic, bi-additive, unit-killing and "
                            "null-restriction are all equivalent; basic operations vanish on "
                            "H-spaces and suspend to zero");
    if (range.degree_floor_ok) {
        try {
            rep.bo = bo_group(t, table);
        } catch (const Unsupported2Torsion& e) {
            rep.bo = Maybe<moore::UctSequence>::unknown(e.what());
        }
    }
    if (rep.special != SpecialKind::None && t.g3.is_trivial())
        rep.notes.push_back("trivial coefficient group: the only operation is zero, so the "
                            "count below is 1");
    auto try_count = [&] {
        try {
            rep.special_count = count_special_ops(t, table);
        } catch (const Unsupported2Torsion& e) {
            rep.special_count = Maybe<Int>::unknown(e.what());
        }
    };
    if (rep.special == SpecialKind::WhiteheadCandidate) {
        try_count();
        rep.sign = commutativity_sign(ProductKind::Whitehead, t.q1, t.q2);
    } else if (rep.special == SpecialKind::TorsionCandidate) {
        bool g1_cyclic = t.g1.is_finite() && t.g1.invariant_factors().size() == 1;
        bool g2_cyclic = t.g2.is_finite() && t.g2.invariant_factors().size() == 1;
        if (g1_cyclic && g2_cyclic)
            rep.torsion_existence = torsion_exists(t.g1.invariant_factors()[0],
                                                   t.g2.invariant_factors()[0], t.q1, t.q2);
        else
            rep.notes.push_back("Torsion existence criterion is stated for cyclic groups; "
                                "split into cyclic summands to apply it");
        try_count();
        rep.notes.push_back("Torsion count assumes the Hurewicz map is an isomorphism in "
                            "degree q3 + 1 of the smash");
        rep.notes.push_back("co-Moore indexing of this type: degrees {" +
                            std::to_string(t.q1 + 1) + ", " + std::to_string(t.q2 + 1) + ", " +
                            std::to_string(t.q3 + 1) + "}");
        rep.sign = commutativity_sign(ProductKind::Torsion, t.q1, t.q2);
    }
    return rep;
}

}  // namespace homops::ops
