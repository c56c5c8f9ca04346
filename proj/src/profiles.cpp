#include "sasakit/profiles.hpp"

#include <algorithm>

namespace sasakit::profiles {

using exact::make_algebraic_root;
using exact::primitive_integer_form;
using exact::rational;
using exact::sign_of;
using exact::sturm_root_count;

namespace {

Polynomial<FieldElem> one_minus_z2_field() {
    return Polynomial<FieldElem>({FieldElem(1), FieldElem(0), FieldElem(-1)});
}

// Coefficients of h(z) = h0 + h1 z + h2 z^2 as polynomials in r.
Poly h0_in_r(const ConeLabels& L) {
    return Poly({rational(6 * (L.p + L.q)), rational(3 * (L.p - L.q)),
                 rational(-4 * (L.p + L.q)), rational(L.q - L.p)});
}

Poly h1_in_r(const ConeLabels& L) {
    return Poly({rational(6 * (L.p - L.q)), rational(6 * (L.p + L.q)),
                 rational(-2 * (L.p - L.q)), rational(-2 * (L.p + L.q))});
}

Poly h2_in_r(const ConeLabels& L) {
    return Poly({rational(0), rational(3 * (L.p - L.q)), rational(2 * (L.p + L.q)),
                 rational(L.q - L.p)});
}

}  // namespace

RatFn smooth_extremal_theta(const Rational& r) {
    if (!(r > 0 && r < 1)) throw std::domain_error("fiber parameter: r must lie in (0,1)");
    const Poly num = exact::make_poly({1, 0, -1}) *
                     Poly({Rational(6 - 4 * r * r), Rational(r * (6 - 2 * r * r)), Rational(2 * r * r)});
    const Poly den = Poly({Rational(1), r}) * Rational(2 * (3 - r * r));
    return {num, den};
}

RatFn canonical_theta(const ConeLabels& L) {
    const long pq = L.p * L.q;
    const Poly num({rational(2 * pq), rational(0), rational(-2 * pq)});
    const Poly den({rational(pq * (L.p + L.q)), rational(pq * (L.q - L.p))});
    return {num, den};
}

Profile extremal_profile(const ConeLabels& L, const FiberParam& r) {
    const FieldElem g = r.value();
    const FieldElem h0 = h0_in_r(L)(g);
    const FieldElem h1 = h1_in_r(L)(g);
    const FieldElem h2 = h2_in_r(L)(g);
    const FieldElem scale = FieldElem(4 * L.p * L.q) * (FieldElem(3) - g * g);
    const Polynomial<FieldElem> F =
        one_minus_z2_field() * Polynomial<FieldElem>({h0, h1, h2}) * scale.inverse();
    return profile_from_F(L, r, F);
}

Profile canonical_profile(const ConeLabels& L, const FiberParam& r) {
    const RatFn theta = canonical_theta(L);
    return profile_from_theta(
        L, r, RationalFunction<FieldElem>(exact::lift(theta.numerator()), exact::lift(theta.denominator())));
}

Profile profile_from_theta(const ConeLabels& L, const FiberParam& r,
                           RationalFunction<FieldElem> theta) {
    const RationalFunction<FieldElem> pole_factor(Polynomial<FieldElem>({FieldElem(1), r.value()}));
    RationalFunction<FieldElem> F = theta * pole_factor;
    return {L, r, std::move(theta), std::move(F)};
}

Profile profile_from_F(const ConeLabels& L, const FiberParam& r, const Polynomial<FieldElem>& F) {
    RationalFunction<FieldElem> theta(F, Polynomial<FieldElem>({FieldElem(1), r.value()}));
    return {L, r, std::move(theta), RationalFunction<FieldElem>(F)};
}

ConditionsReport check_conditions(const Profile& prof) {
    ConditionsReport rep;
    const auto& num = prof.theta.numerator();
    const auto& den = prof.theta.denominator();
    const Interval unit = Interval::open(rational(-1), rational(1));
    const FieldElem plus_one(1);
    const FieldElem minus_one(-1);

    rep.positive = !num.is_zero() && sturm_root_count(num, unit) == 0 &&
                   sturm_root_count(den, unit) == 0 &&
                   sign_of(prof.theta(FieldElem(0))) > 0;

    if (!den(plus_one).is_zero() && !den(minus_one).is_zero())
        rep.endpoints_vanish =
            prof.theta(plus_one).is_zero() && prof.theta(minus_one).is_zero();

    const auto dtheta = prof.theta.derivative();
    const auto& dden = dtheta.denominator();
    if (!dden(plus_one).is_zero() && !dden(minus_one).is_zero())
        rep.boundary_derivatives =
            dtheta(minus_one) == FieldElem(rational(2, prof.labels.p)) &&
            dtheta(plus_one) == FieldElem(rational(-2, prof.labels.q));
    return rep;
}

ExtremalReport check_extremal(const Profile& prof) {
    ExtremalReport rep;
    rep.polynomial = prof.F.is_polynomial();
    if (!rep.polynomial) return rep;
    const auto& F = prof.F.numerator();
    rep.degree_at_most_4 = !F.degree() || *F.degree() <= 4;
    const FieldElem pole = -(prof.r.value().inverse());
    rep.affine_curvature = F.derivative().derivative()(pole).is_zero();
    return rep;
}

Poly csc_quadratic(const ConeLabels& L) {
    return Poly({rational(3 * (L.p - L.q)), rational(2 * (L.p + L.q)), rational(L.q - L.p)});
}

std::vector<AlgebraicRoot> csc_parameters(const ConeLabels& L) {
    const Poly Q = csc_quadratic(L);
    const Interval unit = Interval::open(rational(0), rational(1));
    if (Q.is_zero() || *Q.degree() == 0) return {};
    if (sturm_root_count(Q, unit) == 0) return {};
    const Poly Qz = primitive_integer_form(Q);
    const Rational width = rational(1, 4096);

    std::vector<Rational> rational_roots;
    if (*Qz.degree() == 1) {
        rational_roots.push_back(-Qz.coeff(0) / Qz.coeff(1));
    } else {
        const Integer c2 = Qz.coeff(2).get_num();
        const Integer c1 = Qz.coeff(1).get_num();
        const Integer c0 = Qz.coeff(0).get_num();
        const Integer disc = c1 * c1 - 4 * c2 * c0;
        if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) {
            Integer s;
            mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
            rational_roots.push_back(rational(Integer(-c1 + s), Integer(2 * c2)));
            if (s != 0) rational_roots.push_back(rational(Integer(-c1 - s), Integer(2 * c2)));
        }
    }

    std::vector<AlgebraicRoot> out;
    if (!rational_roots.empty()) {
        std::sort(rational_roots.begin(), rational_roots.end());
        for (const Rational& root : rational_roots) {
            if (!(root > 0 && root < 1)) continue;
            Rational w = std::min({root, Rational(1 - root), width}) / 2;
            out.push_back(make_algebraic_root(Poly({-root, Rational(1)}),
                                              Interval::open(root - w, root + w)));
        }
        return out;
    }

    for (const Interval& iso : exact::isolate_roots(Qz, unit, width))
        out.push_back(make_algebraic_root(Qz, iso));
    return out;
}

bool is_csc(const ConeLabels& L, const FiberParam& r) {
    return csc_quadratic(L)(r.value()).is_zero();
}

bool kahler_einstein_double_root(const Profile& prof) {
    if (!check_extremal(prof).extremal())
        throw std::domain_error("kahler_einstein_double_root: profile is not extremal");
    // Einstein forces F''(z) = -2*lambda*(1 + rz), so F' must be a nonzero
    // multiple of (z + 1/r)^2: the double root has to exhaust F'.  Merely
    // having F'(-1/r) = 0 is weaker (a quartic F can park a third root of F'
    // elsewhere without the curvature ever being constant).
    const auto dF = prof.F.numerator().derivative();
    if (!dF.degree() || *dF.degree() != 2) return false;
    const FieldElem inv_r = prof.r.value().inverse();
    const Polynomial<FieldElem> shifted{{inv_r, FieldElem(1)}};
    const auto [quot, rem] = Polynomial<FieldElem>::divmod(dF, shifted * shifted);
    (void)quot;
    return rem.is_zero();
}

Polynomial<FieldElem> profile_h(const Profile& prof) {
    if (!prof.F.is_polynomial())
        throw std::domain_error("profile_h: F is not a polynomial");
    const FieldElem g = prof.r.value();
    const FieldElem scale = FieldElem(4 * prof.labels.p * prof.labels.q) * (FieldElem(3) - g * g);
    return exact::exact_divide(prof.F.numerator() * scale, one_minus_z2_field());
}

}  // namespace sasakit::profiles
