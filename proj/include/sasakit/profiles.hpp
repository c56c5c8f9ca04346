#pragma once

#include "sasakit/numberfield.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace sasakit::profiles {

using exact::AlgebraicRoot;
using exact::FieldElem;
using exact::FieldPtr;
using exact::Integer;
using exact::Interval;
using exact::Poly;
using exact::Polynomial;
using exact::RatFn;
using exact::Rational;
using exact::RationalFunction;

// Coprime positive orbifold cone labels (p along z = -1, q along z = +1).
struct ConeLabels {
    long p;
    long q;

    ConeLabels(long p_, long q_) : p(p_), q(q_) {
        if (p < 1 || q < 1) throw std::domain_error("cone labels: p and q must be positive");
        if (std::gcd(p, q) != 1) throw std::domain_error("cone labels: p and q must be coprime");
    }
};

// Fiber parameter r in the open unit interval, either exactly rational or a
// quadratic algebraic number. Carries the field Q(r) all profile arithmetic
// happens in.
class FiberParam {
public:
    explicit FiberParam(const Rational& r) : field_(exact::NumberField::of_rational(r)) {
        if (!(r > 0 && r < 1)) throw std::domain_error("fiber parameter: r must lie in (0,1)");
    }

    explicit FiberParam(const AlgebraicRoot& r) : field_(exact::NumberField::of_root(r)) {
        const FieldElem g = field_->generator();
        if (!(exact::sign_of(g) > 0 && exact::sign_of(FieldElem(1) - g) > 0))
            throw std::domain_error("fiber parameter: r must lie in (0,1)");
    }

    bool is_rational() const { return field_->degree() == 1; }
    const Rational& rational_value() const { return field_->rational_value(); }
    const AlgebraicRoot& algebraic_value() const { return field_->root(); }
    const FieldPtr& field() const { return field_; }
    FieldElem value() const { return field_->generator(); }
    double approx() const { return field_->approx(); }

private:
    FieldPtr field_;
};

// Momentum profile of an admissible metric: Theta(z) and F(z) = Theta(z)(1+rz)
// as rational functions over Q(r). For admissible profiles F is a polynomial;
// synthetic profiles may violate that, which the checks report.
struct Profile {
    ConeLabels labels;
    FiberParam r;
    RationalFunction<FieldElem> theta;
    RationalFunction<FieldElem> F;
};

// Theta for the smooth (p = q = 1) extremal metric, as a rational function
// over Q. Requires rational r in (0,1).
RatFn smooth_extremal_theta(const Rational& r);

// The canonical cone profile 2pq(1+z)(1-z) / (p^2 q (1-z) + q^2 p (1+z)).
RatFn canonical_theta(const ConeLabels& labels);

// Extremal profile: F = (1-z^2) h(z) / (4pq(3-r^2)) with h the quadratic
// determined by the boundary conditions and the vanishing of F'' at -1/r.
Profile extremal_profile(const ConeLabels& labels, const FiberParam& r);

// Profile with the canonical Theta and the given r. Its F = Theta (1+rz) is
// not a polynomial, so it fails the extremality check by construction.
Profile canonical_profile(const ConeLabels& labels, const FiberParam& r);

Profile profile_from_theta(const ConeLabels& labels, const FiberParam& r,
                           RationalFunction<FieldElem> theta);
Profile profile_from_F(const ConeLabels& labels, const FiberParam& r,
                       const Polynomial<FieldElem>& F);

// Boundary and positivity certification of Theta:
//   (i)   Theta > 0 on the open interval (-1,1)
//   (ii)  Theta(-1) = Theta(1) = 0
//   (iii) Theta'(-1) = 2/p and Theta'(1) = -2/q
// All three are decided exactly (Sturm chains plus field-element signs).
struct ConditionsReport {
    bool positive = false;
    bool endpoints_vanish = false;
    bool boundary_derivatives = false;

    bool all() const { return positive && endpoints_vanish && boundary_derivatives; }
};

ConditionsReport check_conditions(const Profile& prof);

// Extremality: F polynomial, deg F <= 4, and F''(-1/r) = 0 (equivalently the
// scalar curvature is an affine function of z).
struct ExtremalReport {
    bool polynomial = false;
    bool degree_at_most_4 = false;
    bool affine_curvature = false;

    bool extremal() const { return polynomial && degree_at_most_4 && affine_curvature; }
};

ExtremalReport check_extremal(const Profile& prof);

// The quadratic p(3+2r-r^2) - q(3-2r-r^2) in the variable r. Its roots in
// (0,1) are exactly the fiber parameters with constant scalar curvature (the
// z^2 coefficient of h is r times this quadratic, and r = 0 is excluded).
Poly csc_quadratic(const ConeLabels& labels);

// Certified roots of the constant-scalar-curvature condition in the open
// unit interval, each with its true minimal polynomial (degree 1 when the
// root is rational) and an isolating interval of width at most 1/4096.
std::vector<AlgebraicRoot> csc_parameters(const ConeLabels& labels);

bool is_csc(const ConeLabels& labels, const FiberParam& r);

// True iff F' is a nonzero constant multiple of (z + 1/r)^2, the
// Kahler-Einstein criterion: Einstein pins F''(z) = -2*lambda*(1 + rz), so
// the double root of F' at -1/r must also be its only root.  Requires an
// extremal profile.  Note F'(-1/r) = 0 alone is necessary but not
// sufficient; quartic F with an extra root of F' can satisfy it while the
// scalar curvature stays non-constant.
bool kahler_einstein_double_root(const Profile& prof);

// Recovers h(z) = 4pq(3-r^2) F(z) / (1-z^2) by exact polynomial division.
Polynomial<FieldElem> profile_h(const Profile& prof);

}  // namespace sasakit::profiles
