#ifndef HOMOPS_POINTMAPS_HPP
#define HOMOPS_POINTMAPS_HPP

#include <string>

#include "homops/abgroup.hpp"

namespace homops::maps {

// Coordinate evaluation of the join/suspension point formulas, in exact
// rational arithmetic. Points of the abstract factors A and B are opaque
// tokens; only interval coordinates are computed on.

struct AbstractPoint {
    std::string token;
    bool is_basepoint = false;

    static AbstractPoint base() { return {"*", true}; }
    static AbstractPoint named(std::string t) { return {std::move(t), false}; }
    bool operator==(const AbstractPoint& o) const {
        if (is_basepoint || o.is_basepoint) return is_basepoint == o.is_basepoint;
        return token == o.token;
    }
};

// A point (x, u) of the reduced suspension: u in {0, 1} or x = * collapse to
// the basepoint.
struct SuspensionPoint {
    AbstractPoint x;
    Rational u;

    bool is_base() const { return x.is_basepoint || u == 0 || u == 1; }
    bool operator==(const SuspensionPoint& o) const {
        if (is_base() || o.is_base()) return is_base() == o.is_base();
        return x == o.x && u == o.u;
    }
};

// A point (a, b, t) of the join A * B: t = 0 forgets b, t = 1 forgets a, and
// the line a = b = * is the basepoint.
struct JoinPoint {
    AbstractPoint a;
    AbstractPoint b;
    Rational t;

    bool is_base() const { return (a.is_basepoint && b.is_basepoint) ||
                                  (t == 0 && a.is_basepoint) || (t == 1 && b.is_basepoint); }
    bool operator==(const JoinPoint& o) const {
        if (is_base() || o.is_base()) return is_base() == o.is_base();
        if (t != o.t) return false;
        if (t == 0) return a == o.a;
        if (t == 1) return b == o.b;
        return a == o.a && b == o.b;
    }
};

// A join point with one extra interval coordinate: a point of the cone
// C(A * B) or of the suspension Sigma(A * B), depending on which collapses
// the caller intends.
struct SuspendedJoinPoint {
    JoinPoint p;
    Rational u;
};

// A point ((a ^ b), t) of Sigma(A ^ B).
struct SuspendedSmashPoint {
    AbstractPoint a;
    AbstractPoint b;
    Rational t;

    bool is_base() const { return a.is_basepoint || b.is_basepoint || t == 0 || t == 1; }
    bool operator==(const SuspendedSmashPoint& o) const {
        if (is_base() || o.is_base()) return is_base() == o.is_base();
        return a == o.a && b == o.b && t == o.t;
    }
};

// A point ((a ^ b), t, u) of the double suspension Sigma^2(A ^ B).
struct DoubleSuspensionSmashPoint {
    AbstractPoint a;
    AbstractPoint b;
    Rational t;
    Rational u;

    bool is_base() const {
        return a.is_basepoint || b.is_basepoint || t == 0 || t == 1 || u == 0 || u == 1;
    }
};

// A pair of suspension points; equality depends on the ambient space.
struct ProductPoint {
    SuspensionPoint first;
    SuspensionPoint second;
};

// Componentwise equality in Sigma A x Sigma B.
bool equal_in_product(const ProductPoint& x, const ProductPoint& y);
// Equality in Sigma A ^ Sigma B: either component at basepoint collapses the
// pair to the smash basepoint.
bool equal_in_smash(const ProductPoint& x, const ProductPoint& y);

// The cone extension of the join-to-product map,
//   Lambda((a,b,t), u) = ((a, u), (b, 1 - 2t(1-u)))        for t <= 1/2,
//                        ((a, 1 - 2(1-t)(1-u)), (b, u))    for t >= 1/2;
// both branches are evaluated at t = 1/2 and must agree.
ProductPoint eval_lambda(const JoinPoint& p, const Rational& u);

// The straight-line interpolation between the two maps equated below; at
// s = 0 it reproduces eval_lambda, at s = 1 it is the coordinate swap
// sigma o (Sigma mu'). Landing space is the smash Sigma A ^ Sigma B.
ProductPoint eval_phi(const SuspendedJoinPoint& x, const Rational& s);

// sigma((a ^ b), t, u) = ((a, t), (b, u)), a homeomorphism
// Sigma^2(A ^ B) -> Sigma A ^ Sigma B.
ProductPoint eval_sigma(const DoubleSuspensionSmashPoint& p);

// mu'(a, b, t) = ((a ^ b), t): collapses (A x {*} x I) u ({*} x B x I).
SuspendedSmashPoint eval_mu_prime(const JoinPoint& p);

// sigma o (Sigma mu') on a suspended join point.
ProductPoint eval_sigma_mu_prime(const SuspendedJoinPoint& x);

}  // namespace homops::maps

#endif
