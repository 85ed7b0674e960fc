#include "homops/pointmaps.hpp"

namespace homops::maps {

namespace {

void check_unit(const Rational& v, const char* name) {
    if (v < 0 || v > 1) throw ValueError(std::string(name) + " coordinate outside [0, 1]");
}

}  // namespace

bool equal_in_product(const ProductPoint& x, const ProductPoint& y) {
    return x.first == y.first && x.second == y.second;
}

bool equal_in_smash(const ProductPoint& x, const ProductPoint& y) {
    const bool xb = x.first.is_base() || x.second.is_base();
    const bool yb = y.first.is_base() || y.second.is_base();
    if (xb || yb) return xb == yb;
    return x.first == y.first && x.second == y.second;
}

ProductPoint eval_lambda(const JoinPoint& p, const Rational& u) {
    check_unit(p.t, "t");
    check_unit(u, "u");
    const Rational one(1);
    auto lower = [&] {
        return ProductPoint{{p.a, u}, {p.b, one - 2 * p.t * (one - u)}};
    };
    auto upper = [&] {
        return ProductPoint{{p.a, one - 2 * (one - p.t) * (one - u)}, {p.b, u}};
    };
    if (p.t < Rational(1, 2)) return lower();
    if (p.t > Rational(1, 2)) return upper();
    ProductPoint lo = lower(), hi = upper();
    if (!equal_in_product(lo, hi))
        throw std::logic_error("branch disagreement at t = 1/2");
    return lo;
}

ProductPoint eval_phi(const SuspendedJoinPoint& x, const Rational& s) {
    check_unit(x.p.t, "t");
    check_unit(x.u, "u");
    check_unit(s, "s");
    const Rational one(1);
    const Rational& t = x.p.t;
    const Rational& u = x.u;
    auto lower = [&] {
        return ProductPoint{{x.p.a, (one - s) * u + s * t},
                            {x.p.b, (one - s) * (one - 2 * t * (one - u)) + s * u}};
    };
    auto upper = [&] {
        return ProductPoint{{x.p.a, (one - s) * (one - 2 * (one - t) * (one - u)) + s * t},
                            {x.p.b, u}};
    };
    if (t < Rational(1, 2)) return lower();
    if (t > Rational(1, 2)) return upper();
    ProductPoint lo = lower(), hi = upper();
    if (!equal_in_smash(lo, hi))
        throw std::logic_error("branch disagreement at t = 1/2");
    return lo;
}

ProductPoint eval_sigma(const DoubleSuspensionSmashPoint& p) {
    check_unit(p.t, "t");
    check_unit(p.u, "u");
    return ProductPoint{{p.a, p.t}, {p.b, p.u}};
}

SuspendedSmashPoint eval_mu_prime(const JoinPoint& p) {
    check_unit(p.t, "t");
    return SuspendedSmashPoint{p.a, p.b, p.t};
}

ProductPoint eval_sigma_mu_prime(const SuspendedJoinPoint& x) {
    SuspendedSmashPoint collapsed = eval_mu_prime(x.p);
    check_unit(x.u, "u");
    return eval_sigma({collapsed.a, collapsed.b, collapsed.t, x.u});
}

}  // namespace homops::maps
