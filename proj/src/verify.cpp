#include "homops/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "homops/chains.hpp"
#include "homops/functors.hpp"
#include "homops/groupexpr.hpp"
#include "homops/moorecalc.hpp"
#include "homops/opsclassify.hpp"
#include "homops/oracle.hpp"
#include "homops/pointmaps.hpp"

namespace homops::verify {

namespace {

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

void record_failure(SuiteResult& r, const std::string& note) {
    ++r.failures;
    if (r.notes.size() < 8) r.notes.push_back(note);
}

// Deterministic across standard libraries (no distribution objects).
long long rnd_int(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

FgAbGroup random_group(std::mt19937_64& rng, int max_summands, long long max_factor,
                       bool allow_free) {
    std::size_t free_rank = 0;
    std::vector<Int> orders;
    long long summands = rnd_int(rng, 0, max_summands);
    for (long long i = 0; i < summands; ++i) {
        if (allow_free && rnd_int(rng, 0, 4) == 0) ++free_rank;
        else orders.push_back(Int(rnd_int(rng, 2, max_factor)));
    }
    return FgAbGroup::from_orders(free_rank, orders);
}

std::string show(const FgAbGroup& g) { return expr::render_group(g); }

chains::ChainComplex complex_of(const moore::MooreExpr& x) {
    if (x.is_point()) return chains::ChainComplex(2, {0}, {IntMatrix(0, 0)});
    bool first = true;
    chains::ChainComplex acc(2, {0}, {IntMatrix(0, 0)});
    for (const moore::Atom& a : x.atoms()) {
        chains::ChainComplex piece = chains::moore_complex(a.group, a.degree);
        acc = first ? piece : chains::wedge_complex(acc, piece);
        first = false;
    }
    return acc;
}

}  // namespace

std::vector<FgAbGroup> enumerate_finite_groups(std::size_t max_factors, long long max_factor) {
    std::vector<FgAbGroup> out;
    std::vector<Int> chain;
    auto extend = [&](auto&& self, const Int& last) -> void {
        out.push_back(FgAbGroup::from_orders(0, chain));
        if (chain.size() == max_factors) return;
        for (Int d = last; d <= max_factor; ++d) {
            if (d % last != 0) continue;
            chain.push_back(d);
            self(self, d);
            chain.pop_back();
        }
    };
    out.push_back(FgAbGroup{});
    for (Int d = 2; d <= max_factor; ++d) {
        chain.assign(1, d);
        extend(extend, d);
        chain.clear();
    }
    return out;
}

SuiteResult functor_oracle_sweep(std::size_t max_factors, long long max_factor) {
    Stopwatch clock;
    SuiteResult r{"functor-oracle equivalence"};
    std::vector<FgAbGroup> family = enumerate_finite_groups(max_factors, max_factor);
    for (const FgAbGroup& g : family)
        for (const FgAbGroup& h : family) {
            ++r.cases;
            Int expected_count = functors::hom(g, h).order().value;
            if (oracle::hom_count(g, h) != expected_count)
                record_failure(r, "hom count mismatch at (" + show(g) + ", " + show(h) + ")");
            if (oracle::ext(g, h) != functors::ext(g, h))
                record_failure(r, "ext mismatch at (" + show(g) + ", " + show(h) + ")");
            if (oracle::tensor(g, h) != functors::tensor(g, h))
                record_failure(r, "tensor mismatch at (" + show(g) + ", " + show(h) + ")");
            if (oracle::tor(g, h) != functors::tor(g, h))
                record_failure(r, "tor mismatch at (" + show(g) + ", " + show(h) + ")");
        }
    r.seconds = clock.seconds();
    return r;
}

SuiteResult kunneth_sweep(std::size_t pairs, std::uint64_t seed) {
    Stopwatch clock;
    SuiteResult r{"kunneth chain-level sweep"};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < pairs; ++i) {
        FgAbGroup g1 = random_group(rng, 3, 12, true);
        FgAbGroup g2 = random_group(rng, 3, 12, true);
        int q1 = static_cast<int>(rnd_int(rng, 2, 6));
        int q2 = static_cast<int>(rnd_int(rng, 2, 6));
        ++r.cases;
        chains::KunnethReport report = chains::kunneth_check(g1, q1, g2, q2);
        if (!report.pass) {
            std::ostringstream os;
            os << "kunneth failure for (" << show(g1) << ", " << q1 << ") x (" << show(g2) << ", "
               << q2 << ")";
            record_failure(r, os.str());
        }
    }
    r.seconds = clock.seconds();
    return r;
}

SuiteResult smash_consistency_sweep(std::size_t pairs, std::uint64_t seed) {
    Stopwatch clock;
    SuiteResult r{"smash decomposition vs chain homology"};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < pairs; ++i) {
        FgAbGroup g1 = random_group(rng, 3, 12, true);
        FgAbGroup g2 = random_group(rng, 3, 12, true);
        int q1 = static_cast<int>(rnd_int(rng, 2, 6));
        int q2 = static_cast<int>(rnd_int(rng, 2, 6));
        ++r.cases;
        moore::MooreExpr a = moore::MooreExpr::atom(g1, q1);
        moore::MooreExpr b = moore::MooreExpr::atom(g2, q2);
        if (g1.has_2_torsion() && g2.has_2_torsion()) {
            try {
                moore::smash_decompose(a, b);
                record_failure(r, "double 2-torsion accepted for (" + show(g1) + ", " + show(g2) +
                                      ")");
            } catch (const Unsupported2Torsion&) {
                // expected refusal
            }
            continue;
        }
        moore::MooreExpr wedge = moore::smash_decompose(a, b);
        chains::ChainComplex product =
            chains::tensor_complex(chains::moore_complex(g1, q1), chains::moore_complex(g2, q2));
        chains::ChainComplex model = complex_of(wedge);
        int lo = std::min(product.min_degree(), model.min_degree()) - 1;
        int hi = std::max(product.max_degree(), model.max_degree()) + 1;
        for (int n = lo; n <= hi; ++n) {
            if (chains::homology(product, n) != chains::homology(model, n)) {
                std::ostringstream os;
                os << "homology mismatch in degree " << n << " for (" << show(g1) << ", " << q1
                   << ") ^ (" << show(g2) << ", " << q2 << ")";
                record_failure(r, os.str());
            }
        }
    }
    r.seconds = clock.seconds();
    return r;
}

SuiteResult torsion_truth_table(long long lo, long long hi) {
    Stopwatch clock;
    SuiteResult r{"torsion existence truth table"};
    auto restated = [](long long m, long long n) {
        // Independent restatement: products of odd gcd always exist; even gcd
        // requires both orders even and at least one divisible by four.
        long long a = m, b = n;
        while (b) std::swap(a %= b, b);
        bool gcd_odd = a % 2 != 0;
        bool both_even = m % 2 == 0 && n % 2 == 0;
        bool some_multiple_of_4 = m % 4 == 0 || n % 4 == 0;
        return gcd_odd || (both_even && some_multiple_of_4);
    };
    for (long long m = lo; m <= hi; ++m)
        for (long long n = lo; n <= hi; ++n) {
            ++r.cases;
            if (ops::torsion_exists(Int(m), Int(n), 4, 4) != restated(m, n))
                record_failure(r, "torsion_exists(" + std::to_string(m) + ", " +
                                      std::to_string(n) + ") disagrees with the restatement");
        }
    // odd prime-power diagonal must exist
    for (long long v : {3, 5, 7, 9, 11, 13, 17, 19, 23, 25}) {
        if (v < lo || v > hi) continue;
        ++r.cases;
        if (!ops::torsion_exists(Int(v), Int(v), 5, 5))
            record_failure(r, "odd prime power m = n = " + std::to_string(v) + " must exist");
    }
    r.seconds = clock.seconds();
    return r;
}

namespace {

// Z/2 per free generator and per even prime-power summand; the direct route
// to the first stem, bypassing the stem table.
FgAbGroup first_stem_direct(const FgAbGroup& g) {
    std::vector<Int> twos(g.free_rank(), Int(2));
    for (const auto& [p, e] : g.primary_factors())
        if (p == 2) twos.push_back(2);
    return FgAbGroup::from_orders(0, twos);
}

}  // namespace

SuiteResult counting_theorems() {
    Stopwatch clock;
    SuiteResult r{"counting theorems"};
    // k Ext operations for every k
    for (long long k = 2; k <= 12; ++k) {
        for (int q1 : {3, 4, 5})
            for (int q2 : {3, 4, 6}) {
                ++r.cases;
                auto list = ops::ext_ops_enumerate(k, q1, q2);
                ops::OperationType type(FgAbGroup::free(1), FgAbGroup::free(1),
                                        FgAbGroup::cyclic(k), q1, q2, q1 + q2 - 2);
                bool ok = list.size() == static_cast<std::size_t>(k) && list[0].is_zero &&
                          !ops::triviality_check(type) &&
                          ops::basic_range_check(type).verdict == ops::RangeVerdict::Yes;
                for (std::size_t i = 0; i < list.size(); ++i)
                    ok = ok && list[i].index == static_cast<long long>(i) &&
                         list[i].q3 == q1 + q2 - 2;
                if (!ok)
                    record_failure(r, "ext operation enumeration broken for k = " +
                                          std::to_string(k));
            }
    }
    // the classical Whitehead product is unique
    for (int q1 : {3, 4, 5, 6})
        for (int q2 : {3, 4, 5, 6}) {
            ++r.cases;
            ops::OperationType type(FgAbGroup::free(1), FgAbGroup::free(1), FgAbGroup::free(1),
                                    q1, q2, q1 + q2 - 1);
            Maybe<Int> count = ops::count_special_ops(type);
            if (!count || count.value() != 1)
                record_failure(r, "classical Whitehead count at (" + std::to_string(q1) + ", " +
                                      std::to_string(q2) + ") is not 1");
        }
    // two-route Whitehead count agreement over a small exhaustive family
    std::vector<FgAbGroup> family = enumerate_finite_groups(2, 9);
    family.push_back(FgAbGroup::free(1));
    family.push_back(direct_sum(FgAbGroup::free(1), FgAbGroup::cyclic(3)));
    for (const FgAbGroup& g1 : family)
        for (const FgAbGroup& g2 : family) {
            if (g1.has_2_torsion() && g2.has_2_torsion()) continue;
            for (int q1 : {3, 4})
                for (int q2 : {3, 5}) {
                    ++r.cases;
                    FgAbGroup g3 = functors::tensor(g1, g2);
                    ops::OperationType type(g1, g2, g3, q1, q2, q1 + q2 - 1);
                    Maybe<Int> pipeline = ops::count_special_ops(type);
                    Int direct =
                        functors::ext(g3, direct_sum(first_stem_direct(g3), functors::tor(g1, g2)))
                            .order()
                            .value;
                    if (!pipeline || pipeline.value() != direct)
                        record_failure(r, "Whitehead count routes disagree at (" + show(g1) +
                                              ", " + show(g2) + ")");
                    if (g3.is_free()) {
                        ++r.cases;
                        if (!pipeline || pipeline.value() != 1)
                            record_failure(r, "free-coefficient Whitehead count must be 1 at (" +
                                                  show(g1) + ", " + show(g2) + ")");
                    }
                }
        }
    // the named instance {Z/3, Z/3; 4, 4} both ways
    {
        ++r.cases;
        ops::OperationType type(FgAbGroup::cyclic(3), FgAbGroup::cyclic(3), FgAbGroup::cyclic(3),
                                4, 4, 7);
        Maybe<Int> count = ops::count_special_ops(type);
        FgAbGroup g3 = FgAbGroup::cyclic(3);
        Int direct = functors::ext(g3, direct_sum(first_stem_direct(g3),
                                                  functors::tor(type.g1, type.g2)))
                         .order()
                         .value;
        if (!count || count.value() != 3 || direct != 3)
            record_failure(r, "Whitehead count for {Z/3, Z/3; 4, 4} is not 3");
    }
    r.seconds = clock.seconds();
    return r;
}

SuiteResult uct_cardinality_law(std::size_t samples, std::uint64_t seed) {
    Stopwatch clock;
    SuiteResult r{"uct cardinality law"};
    std::mt19937_64 rng(seed);
    auto check_sequence = [&](const moore::UctSequence& seq, const std::string& where) {
        ++r.cases;
        Order expected = seq.ext_term.order() * seq.hom_term.order();
        if (!(seq.middle_cardinality == expected))
            record_failure(r, "cardinality law broken " + where);
        if (expected.finite && (!seq.middle_cardinality.finite ||
                                seq.middle_cardinality.value != expected.value))
            record_failure(r, "finite cardinality mismatch " + where);
    };
    for (std::size_t i = 0; i < samples; ++i) {
        // a random basic-operation group
        FgAbGroup g1 = random_group(rng, 2, 9, true);
        FgAbGroup g2 = random_group(rng, 2, 9, true);
        if (g1.has_2_torsion() && g2.has_2_torsion()) continue;
        FgAbGroup g3 = random_group(rng, 2, 9, true);
        int q1 = static_cast<int>(rnd_int(rng, 3, 6));
        int q2 = static_cast<int>(rnd_int(rng, 3, 6));
        int hi = q1 + q2 + std::min(q1, q2) - 4;
        int q3 = static_cast<int>(rnd_int(rng, 2, hi));
        ops::OperationType type(g1, g2, g3, q1, q2, q3);
        Maybe<moore::UctSequence> seq = ops::bo_group(type);
        if (seq) check_sequence(seq.value(), "in the basic-operation group of a random type");
        // and a random single-atom coefficient computation
        FgAbGroup base = random_group(rng, 2, 9, true);
        if (base.is_trivial()) base = FgAbGroup::cyclic(3);
        int n = static_cast<int>(rnd_int(rng, 3, 7));
        moore::MooreExpr space = moore::MooreExpr::atom(base, n);
        Maybe<moore::UctSequence> pi =
            moore::homotopy_with_coeffs(space, static_cast<int>(rnd_int(rng, n, n + 1)),
                                        random_group(rng, 2, 9, true));
        if (pi) check_sequence(pi.value(), "over a single Moore atom");
    }
    r.seconds = clock.seconds();
    return r;
}

namespace {

using maps::AbstractPoint;
using maps::JoinPoint;
using maps::ProductPoint;
using maps::SuspendedJoinPoint;

std::vector<Rational> rational_grid(int max_denominator) {
    std::set<Rational> values;
    for (int q = 1; q <= max_denominator; ++q)
        for (int p = 0; p <= q; ++p) values.insert(Rational(p, q));
    return {values.begin(), values.end()};
}

struct PointmapChecks {
    SuiteResult branch{"pointmaps: branch agreement at t = 1/2"};
    SuiteResult quotient_lambda{"pointmaps: quotient respect of the cone map"};
    SuiteResult quotient_phi{"pointmaps: quotient respect of the homotopy endpoints"};
    SuiteResult phi_all_s{"pointmaps: identifications preserved at every homotopy stage"};
    SuiteResult endpoints{"pointmaps: endpoint identities (stage 0 and stage 1)"};
    SuiteResult sigma_mu{"pointmaps: swap homeomorphism and smash collapse"};

    void check_point(const Rational& t, const Rational& u, const Rational& s) {
        const AbstractPoint a0 = AbstractPoint::named("a0");
        const AbstractPoint a1 = AbstractPoint::named("a1");
        const AbstractPoint b0 = AbstractPoint::named("b0");
        const AbstractPoint b1 = AbstractPoint::named("b1");
        const AbstractPoint star = AbstractPoint::base();
        const JoinPoint p{a0, b0, t};

        // branch agreement: evaluating at t = 1/2 runs both branches inside
        ++branch.cases;
        try {
            maps::eval_lambda({a0, b0, Rational(1, 2)}, u);
        } catch (const std::logic_error&) {
            record_failure(branch, "lambda branches disagree at t = 1/2");
        }
        ++branch.cases;
        try {
            maps::eval_phi({{a0, b0, Rational(1, 2)}, u}, s);
        } catch (const std::logic_error&) {
            record_failure(branch, "phi branches disagree at t = 1/2");
        }

        // cone map respects the join and cone identifications in the product
        auto expect_product = [&](const ProductPoint& x, const ProductPoint& y,
                                  const std::string& what) {
            ++quotient_lambda.cases;
            if (!maps::equal_in_product(x, y)) record_failure(quotient_lambda, what);
        };
        expect_product(maps::eval_lambda({a0, b0, Rational(0)}, u),
                       maps::eval_lambda({a0, b1, Rational(0)}, u),
                       "t = 0 must not see the second factor");
        expect_product(maps::eval_lambda({a0, b0, Rational(1)}, u),
                       maps::eval_lambda({a1, b0, Rational(1)}, u),
                       "t = 1 must not see the first factor");
        expect_product(maps::eval_lambda({star, star, t}, u),
                       ProductPoint{{star, Rational(1, 2)}, {star, Rational(1, 2)}},
                       "basepoint line must map to the basepoint");
        expect_product(maps::eval_lambda(p, Rational(1)),
                       ProductPoint{{star, Rational(1, 2)}, {star, Rational(1, 2)}},
                       "cone tip must map to the basepoint");

        // the two endpoint stages respect every identification in the smash
        auto expect_smash = [&](SuiteResult& suite, const ProductPoint& x, const ProductPoint& y,
                                const std::string& what) {
            ++suite.cases;
            if (!maps::equal_in_smash(x, y)) record_failure(suite, what);
        };
        const ProductPoint smash_base{{star, Rational(1, 2)}, {star, Rational(1, 2)}};
        for (Rational stage : {Rational(0), Rational(1)}) {
            expect_smash(quotient_phi, maps::eval_phi({{a0, b0, Rational(0)}, u}, stage),
                         maps::eval_phi({{a0, b1, Rational(0)}, u}, stage),
                         "endpoint stage at t = 0 must not see the second factor");
            expect_smash(quotient_phi, maps::eval_phi({{a0, b0, Rational(1)}, u}, stage),
                         maps::eval_phi({{a1, b0, Rational(1)}, u}, stage),
                         "endpoint stage at t = 1 must not see the first factor");
            expect_smash(quotient_phi, maps::eval_phi({{a0, b0, t}, Rational(0)}, stage),
                         smash_base, "endpoint stage must collapse u = 0");
            expect_smash(quotient_phi, maps::eval_phi({{a0, b0, t}, Rational(1)}, stage),
                         smash_base, "endpoint stage must collapse u = 1");
        }

        // identifications that survive at every interior stage
        expect_smash(phi_all_s, maps::eval_phi({{a0, b0, Rational(1)}, u}, s),
                     maps::eval_phi({{a1, b0, Rational(1)}, u}, s),
                     "t = 1 must not see the first factor at any stage");
        expect_smash(phi_all_s, maps::eval_phi({{star, star, t}, u}, s), smash_base,
                     "basepoint line must collapse at any stage");
        expect_smash(phi_all_s, maps::eval_phi({{a0, b0, t}, Rational(1)}, s), smash_base,
                     "u = 1 must collapse at any stage");

        // stage 0 is the suspended cone map, stage 1 the swap of mu'
        const SuspendedJoinPoint x{{a0, b0, t}, u};
        expect_smash(endpoints, maps::eval_phi(x, Rational(0)), maps::eval_lambda(x.p, x.u),
                     "stage 0 must agree with the cone map");
        expect_smash(endpoints, maps::eval_phi(x, Rational(1)), maps::eval_sigma_mu_prime(x),
                     "stage 1 must agree with the swap of the collapse");

        // swap homeomorphism: explicit formula, collapse behavior, round trip
        {
            ++sigma_mu.cases;
            ProductPoint out = maps::eval_sigma({a0, b0, t, u});
            bool interior = t != 0 && t != 1 && u != 0 && u != 1;
            bool ok = true;
            if (interior) {
                ok = out.first.x == a0 && out.first.u == t && out.second.x == b0 &&
                     out.second.u == u;
                // round trip through the inverse assignment
                maps::DoubleSuspensionSmashPoint back{out.first.x, out.second.x, out.first.u,
                                                      out.second.u};
                ok = ok && !back.is_base() && back.t == t && back.u == u;
            } else {
                ok = out.first.is_base() || out.second.is_base();
            }
            if (!ok) record_failure(sigma_mu, "swap formula misbehaved");
            ++sigma_mu.cases;
            bool mu_ok = maps::eval_mu_prime({star, b0, t}).is_base() &&
                         maps::eval_mu_prime({a0, star, t}).is_base() &&
                         (maps::eval_mu_prime({a0, b0, t}).is_base() == (t == 0 || t == 1));
            if (!mu_ok) record_failure(sigma_mu, "collapse of the wedge axes misbehaved");
        }
    }
};

}  // namespace

std::vector<SuiteResult> pointmap_identity_suites(int max_denominator, std::size_t random_samples,
                                                  std::uint64_t seed) {
    Stopwatch clock;
    PointmapChecks checks;
    std::vector<Rational> grid = rational_grid(max_denominator);
    for (const Rational& t : grid)
        for (const Rational& u : grid) {
            // one representative stage per (t, u) plus the endpoints keeps the
            // grid cubic work bounded; endpoint stages are checked explicitly
            // inside check_point
            checks.check_point(t, u, t);
            checks.check_point(t, u, u);
        }
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < random_samples; ++i) {
        auto rnd_rational = [&] {
            long long den = rnd_int(rng, 1, 64);
            long long num = rnd_int(rng, 0, den);
            return Rational(num, den);
        };
        checks.check_point(rnd_rational(), rnd_rational(), rnd_rational());
    }
    std::vector<SuiteResult> out{checks.branch,    checks.quotient_lambda, checks.quotient_phi,
                                 checks.phi_all_s, checks.endpoints,       checks.sigma_mu};
    double total = clock.seconds();
    for (auto& s : out) s.seconds = total / static_cast<double>(out.size());
    return out;
}

SuiteResult pointmap_identities(int max_denominator, std::size_t random_samples,
                                std::uint64_t seed) {
    SuiteResult merged{"pointmap identities"};
    for (const SuiteResult& s : pointmap_identity_suites(max_denominator, random_samples, seed)) {
        merged.cases += s.cases;
        merged.failures += s.failures;
        merged.seconds += s.seconds;
        for (const std::string& n : s.notes)
            if (merged.notes.size() < 8) merged.notes.push_back(n);
    }
    return merged;
}

SuiteResult commutativity_signs(int max_degree) {
    Stopwatch clock;
    SuiteResult r{"commutativity signs"};
    for (int q1 = 2; q1 <= max_degree; ++q1)
        for (int q2 = 2; q2 <= max_degree; ++q2) {
            ++r.cases;
            // independent parity route: q1*q2 is odd exactly when both are odd
            int whitehead = (q1 % 2 == 1 && q2 % 2 == 1) ? -1 : 1;
            ops::CommutativitySign w = ops::commutativity_sign(ops::ProductKind::Whitehead, q1, q2);
            ops::CommutativitySign t = ops::commutativity_sign(ops::ProductKind::Torsion, q1, q2);
            bool ok = w.sign == whitehead && t.sign == -whitehead &&
                      w.exponent == static_cast<long long>(q1) * q2 &&
                      t.exponent == static_cast<long long>(q1) * q2 + 1;
            if (!ok)
                record_failure(r, "sign mismatch at (" + std::to_string(q1) + ", " +
                                      std::to_string(q2) + ")");
        }
    r.seconds = clock.seconds();
    return r;
}

std::vector<SuiteResult> run_all(std::size_t kunneth_pairs, std::uint64_t seed) {
    std::vector<SuiteResult> out;
    out.push_back(functor_oracle_sweep());
    out.push_back(kunneth_sweep(kunneth_pairs, seed + 1));
    out.push_back(smash_consistency_sweep(kunneth_pairs, seed + 2));
    out.push_back(torsion_truth_table());
    out.push_back(counting_theorems());
    out.push_back(uct_cardinality_law(300, seed + 3));
    out.push_back(pointmap_identities());
    out.push_back(commutativity_signs());
    return out;
}

}  // namespace homops::verify
