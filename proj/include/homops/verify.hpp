#ifndef HOMOPS_VERIFY_HPP
#define HOMOPS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "homops/abgroup.hpp"

namespace homops::verify {

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    double seconds = 0.0;
    std::vector<std::string> notes;  // first few failure descriptions

    SuiteResult() = default;
    explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

    bool pass() const { return failures == 0; }
};

// Every finite abelian group with at most `max_factors` invariant factors,
// each bounded by `max_factor` (the trivial group included).
std::vector<FgAbGroup> enumerate_finite_groups(std::size_t max_factors, long long max_factor);

// Closed-form functors vs. the brute-force oracle routes, all pairs, all four
// functors.
SuiteResult functor_oracle_sweep(std::size_t max_factors = 3, long long max_factor = 12);

// Random Moore-complex pairs through the chain-level product/Tor comparison.
SuiteResult kunneth_sweep(std::size_t pairs = 200, std::uint64_t seed = 0x5eed0001);

// Homology of the smash model vs. homology of the decomposed wedge, plus the
// double-2-torsion refusal.
SuiteResult smash_consistency_sweep(std::size_t pairs = 200, std::uint64_t seed = 0x5eed0002);

// Hilton's Torsion existence criterion against an independent restatement,
// every pair of cyclic orders in range (2..25 covers the documented 576
// cases), including the odd prime-power diagonal.
SuiteResult torsion_truth_table(long long lo = 2, long long hi = 25);

// Ext-operation counts, the classical Whitehead product count, and the
// two-route Whitehead count agreement.
SuiteResult counting_theorems();

// Cardinality multiplicativity of every universal-coefficient sequence
// computed over a random family of operation types and spaces.
SuiteResult uct_cardinality_law(std::size_t samples = 300, std::uint64_t seed = 0x5eed0003);

// The exact rational identities of the join/suspension point formulas, one
// SuiteResult per identity.
std::vector<SuiteResult> pointmap_identity_suites(int max_denominator = 8,
                                                  std::size_t random_samples = 100,
                                                  std::uint64_t seed = 0x5eed0004);
SuiteResult pointmap_identities(int max_denominator = 8, std::size_t random_samples = 100,
                                std::uint64_t seed = 0x5eed0004);

// Switch-of-arguments signs over 2 <= q1, q2 <= max_degree, both kinds.
SuiteResult commutativity_signs(int max_degree = 10);

std::vector<SuiteResult> run_all(std::size_t kunneth_pairs = 200,
                                 std::uint64_t seed = 0x5eed0000);

}  // namespace homops::verify

#endif
