#ifndef HOMOPS_CHAINS_HPP
#define HOMOPS_CHAINS_HPP

#include <vector>

#include "homops/abgroup.hpp"

namespace homops::chains {

enum class LeibnizSign { OnSecondFactor, OnFirstFactor };

// Finite free integer chain complex on a bounded degree range. Boundary
// matrices act by columns: boundary(n) has shape rank(n-1) x rank(n) and
// column j holds the image of the j-th degree-n generator. The composite of
// consecutive boundaries is checked to vanish at construction.
class ChainComplex {
  public:
    // ranks[k] is the free rank in degree min_degree + k; boundaries[k] maps
    // degree min_degree + k down one degree (boundaries[0] has zero rows).
    ChainComplex(int min_degree, std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries);

    int min_degree() const { return min_degree_; }
    int max_degree() const { return min_degree_ + static_cast<int>(ranks_.size()) - 1; }
    std::size_t rank(int n) const;
    IntMatrix boundary(int n) const;  // zero-shaped outside the stored range
    std::size_t total_rank() const;

  private:
    int min_degree_ = 0;
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> boundaries_;
};

// Cellular model of a Moore space M(G, n), n >= 2: one degree-n cell per free
// or cyclic summand, one degree-(n+1) cell per torsion summand attached by
// multiplication with the invariant factor (diagonal columns, no mixing).
ChainComplex moore_complex(const FgAbGroup& g, int n);

// Reduced-chain model of the smash product: the tensor-product complex, with
// the Leibniz sign on the chosen factor.
ChainComplex tensor_complex(const ChainComplex& a, const ChainComplex& b,
                            LeibnizSign sign = LeibnizSign::OnSecondFactor);

// Block direct sum; models the wedge.
ChainComplex wedge_complex(const ChainComplex& a, const ChainComplex& b);

// ker boundary(n) / im boundary(n+1), canonical form via Smith reduction.
FgAbGroup homology(const ChainComplex& c, int n);

struct KunnethLine {
    int degree;
    FgAbGroup expected;
    FgAbGroup computed;
    bool ok;
};

struct KunnethReport {
    FgAbGroup g1, g2;
    int q1, q2;
    std::vector<KunnethLine> lines;
    bool pass;
};

// Compares the homology of moore_complex(g1,q1) (x) moore_complex(g2,q2)
// against G1 (x) G2 in degree q1+q2, Tor(G1,G2) in degree q1+q2+1, and the
// trivial group elsewhere. A mismatch is reported, never thrown.
KunnethReport kunneth_check(const FgAbGroup& g1, int q1, const FgAbGroup& g2, int q2);

}  // namespace homops::chains

#endif
