#ifndef HOMOPS_MOORECALC_HPP
#define HOMOPS_MOORECALC_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homops/abgroup.hpp"
#include "homops/errors.hpp"

namespace homops::moore {

struct Atom {
    FgAbGroup group;  // nontrivial
    int degree;       // >= 2
    bool operator==(const Atom&) const = default;
};

// Normal form for finite wedges of Moore spaces: atoms with strictly
// increasing degrees (same-degree atoms merge via direct sum, M(G,n) v M(H,n)
// being a model of M(G+H,n)), trivial groups erased. The empty wedge is a
// point.
class MooreExpr {
  public:
    MooreExpr() = default;  // point

    static MooreExpr point() { return MooreExpr{}; }
    static MooreExpr atom(const FgAbGroup& g, int degree);
    static MooreExpr wedge(const MooreExpr& a, const MooreExpr& b);

    MooreExpr suspended(int times = 1) const;

    const std::vector<Atom>& atoms() const { return atoms_; }
    bool is_point() const { return atoms_.empty(); }
    bool operator==(const MooreExpr&) const = default;

  private:
    std::vector<Atom> atoms_;
};

// Splits a smash product of Moore spaces into a wedge:
// M(G1,q1) ^ M(G2,q2) ~ M(G1 (x) G2, q1+q2) v M(Tor(G1,G2), q1+q2+1),
// valid unless both groups have 2-torsion (Unsupported2Torsion then).
// Distributes over wedges.
MooreExpr smash_decompose(const MooreExpr& a, const MooreExpr& b);

enum class SummandClass { Free, EvenCyclic, OddCyclic };

std::string to_string(SummandClass cls);

struct StemEntry {
    SummandClass cls;
    int stem;  // >= 1; stem 0 is always the group itself
    FgAbGroup value;
    std::string provenance;
};

// Data-driven table of stable stems of Moore spaces per generator class.
// Entries are claimed only for base degree n >= stem + 2 and n >= 3.
class StemTable {
  public:
    static const StemTable& builtin();

    // Text records: `class=<Z|even|odd>, stem=<k>, value=<group-expr>,
    // provenance=<text>`; blank lines and `#` comments ignored.
    static StemTable parse(std::istream& in);
    static StemTable load_file(const std::string& path);

    // Entries of `overrides` shadow entries of *this.
    StemTable merged_with(const StemTable& overrides) const;

    void insert(StemEntry entry);
    std::optional<StemEntry> find(SummandClass cls, int stem) const;
    std::vector<StemEntry> entries() const;

  private:
    std::map<std::pair<int, int>, StemEntry> entries_;
};

// pi_{n+k}(M(G, n)) assembled summand-wise over the primary decomposition of
// G. Unknown when a (class, stem) pair is not tabulated or n < k + 2.
// DegreeTooSmall for n < 2, or n < 3 with k >= 1.
Maybe<FgAbGroup> stem(const FgAbGroup& g, int k, int n,
                      const StemTable& table = StemTable::builtin());

// pi_m of a wedge of Moore atoms, atom-wise. For wedges of two or more atoms
// the degree m must satisfy m <= min over atom pairs of (n_i + n_j - 2);
// beyond that range cross terms appear and the result is Unknown.
Maybe<FgAbGroup> wedge_homotopy_group(const MooreExpr& x, int m,
                                      const StemTable& table = StemTable::builtin());

// One universal-coefficient short exact sequence
//   0 -> Ext(G, pi_{n+1} X) -> pi_n(X; G) -> Hom(G, pi_n X) -> 0.
// Only the cardinality of the middle term is determined (the extension need
// not split canonically).
struct UctSequence {
    FgAbGroup ext_term;
    FgAbGroup hom_term;
    Order middle_cardinality;
    std::string notes;
};

Maybe<UctSequence> homotopy_with_coeffs(const MooreExpr& x, int n, const FgAbGroup& g,
                                        const StemTable& table = StemTable::builtin());

std::string render_moore(const MooreExpr& x);
// Atom syntax `<group-expr>@<degree>`, wedge atoms joined with `|`;
// `point` (or `*`) names the empty wedge.
MooreExpr parse_moore(const std::string& text);

}  // namespace homops::moore

#endif
