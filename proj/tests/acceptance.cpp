// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Thresholds (case counts, exactness, runtime budgets) are fixed here.

#include <cstdio>
#include <string>
#include <vector>

#include "homops/verify.hpp"

namespace {

struct Criterion {
    int number;
    std::string description;
    bool pass;
    std::string detail;
};

std::string summarize(const homops::verify::SuiteResult& s) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%zu cases, %zu failures, %.2f s", s.cases, s.failures,
                  s.seconds);
    return buf;
}

}  // namespace

int main() {
    using namespace homops::verify;
    std::vector<Criterion> results;

    {
        SuiteResult s = functor_oracle_sweep(3, 12);
        bool pass = s.failures == 0 && s.cases >= 1000 && s.seconds < 60.0;
        results.push_back({1,
                           "functor-oracle equivalence on all pairs with <= 3 invariant "
                           "factors <= 12, under 60 s",
                           pass, summarize(s)});
    }
    {
        SuiteResult s = kunneth_sweep(200);
        bool pass = s.failures == 0 && s.cases == 200 && s.seconds < 30.0;
        results.push_back(
            {2, "200 random Moore-complex pairs pass the chain-level product/Tor check, under 30 s",
             pass, summarize(s)});
    }
    {
        SuiteResult s = smash_consistency_sweep(200);
        bool pass = s.failures == 0 && s.cases == 200;
        results.push_back({3,
                           "smash decomposition matches tensor-complex homology degree by degree; "
                           "double 2-torsion is refused",
                           pass, summarize(s)});
    }
    {
        SuiteResult s = torsion_truth_table(2, 25);
        bool pass = s.failures == 0 && s.cases >= 576;
        results.push_back(
            {4, "Torsion existence truth table matches the independent restatement (576 cases)",
             pass, summarize(s)});
    }
    {
        SuiteResult s = counting_theorems();
        bool pass = s.failures == 0;
        results.push_back({5,
                           "counting theorems: k Ext operations, unique classical Whitehead "
                           "product, {Z/3, Z/3; 4, 4} count 3 both ways",
                           pass, summarize(s)});
    }
    {
        SuiteResult s = uct_cardinality_law(300);
        bool pass = s.failures == 0 && s.cases > 0;
        results.push_back(
            {6, "universal-coefficient middle cardinality equals the product of the outer orders",
             pass, summarize(s)});
    }
    {
        SuiteResult s = pointmap_identities(8, 100);
        bool pass = s.failures == 0;
        results.push_back({7,
                           "exact rational point-formula identities on the denominator-8 grid "
                           "plus 100 random rationals",
                           pass, summarize(s)});
    }
    {
        SuiteResult s = commutativity_signs(10);
        bool pass = s.failures == 0 && s.cases == 81;
        results.push_back(
            {8, "argument-switch signs for 2 <= q1, q2 <= 10, Whitehead and Torsion kinds", pass,
             summarize(s)});
    }

    bool all_pass = true;
    for (const Criterion& c : results) {
        all_pass = all_pass && c.pass;
        std::printf("criterion %d: %s — %s (%s)\n", c.number, c.pass ? "PASS" : "FAIL",
                    c.description.c_str(), c.detail.c_str());
    }
    std::printf("%s\n", all_pass ? "acceptance: all criteria passed"
                                 : "acceptance: CRITERIA FAILED");
    return all_pass ? 0 : 1;
}
