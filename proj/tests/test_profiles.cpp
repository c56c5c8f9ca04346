#include "sasakit/profiles.hpp"

#include <doctest.h>

#include <vector>

using namespace sasakit::exact;
using namespace sasakit::profiles;

namespace {

Poly lowered_h(const Profile& prof) { return lower(profile_h(prof)); }

Polynomial<FieldElem> one_plus_rz(const FiberParam& r) {
    return Polynomial<FieldElem>{{FieldElem(1), r.value()}};
}

}  // namespace

TEST_CASE("cone labels and fiber parameter validation") {
    CHECK_THROWS_AS(ConeLabels(2, 4), std::domain_error);
    CHECK_THROWS_AS(ConeLabels(0, 1), std::domain_error);
    CHECK_THROWS_AS(ConeLabels(-1, 2), std::domain_error);
    CHECK_THROWS_AS(FiberParam(rational(3, 2)), std::domain_error);
    CHECK_THROWS_AS(FiberParam(rational(0)), std::domain_error);
    CHECK_THROWS_AS(FiberParam(rational(-1, 2)), std::domain_error);
    const auto sqrt3 = make_algebraic_root(make_poly({-3, 0, 1}),
                                           Interval::open(rational(1), rational(2)));
    CHECK_THROWS_AS(FiberParam{sqrt3}, std::domain_error);  // sqrt(3) > 1
}

TEST_CASE("profile factor h has the expected quadratic coefficients") {
    // frozen reference values for h(z) = h0 + h1 z + h2 z^2
    const auto h12 = lowered_h(extremal_profile(ConeLabels(1, 2), FiberParam(rational(1, 2))));
    CHECK(h12 == Poly{{rational(109, 8), rational(11, 4), rational(1, 8)}});
    const auto h23 = lowered_h(extremal_profile(ConeLabels(2, 3), FiberParam(rational(1, 3))));
    CHECK(h23 == Poly{{rational(724, 27), rational(104, 27), rational(4, 27)}});
    const auto h11 = lowered_h(extremal_profile(ConeLabels(1, 1), FiberParam(rational(1, 2))));
    CHECK(h11 == Poly{{rational(10), rational(11, 2), rational(1)}});
}

TEST_CASE("theta midpoint values") {
    const auto prof = extremal_profile(ConeLabels(1, 2), FiberParam(rational(1, 2)));
    CHECK(prof.theta(FieldElem(0)).rational_value() == rational(109, 176));
    CHECK(smooth_extremal_theta(rational(1, 2))(rational(0)) == rational(10, 11));
}

TEST_CASE("extremal profiles satisfy all boundary conditions exactly") {
    for (const auto& [p, q] : std::vector<std::pair<long, long>>{
             {1, 1}, {1, 2}, {2, 1}, {3, 5}, {7, 4}, {9, 10}, {25, 49}}) {
        for (long k = 1; k <= 7; k += 2) {
            const Rational r = rational(k, 8);
            const auto prof = extremal_profile(ConeLabels(p, q), FiberParam(r));
            const auto cond = check_conditions(prof);
            CHECK(cond.positive);
            CHECK(cond.endpoints_vanish);
            CHECK(cond.boundary_derivatives);
            const auto ext = check_extremal(prof);
            CHECK(ext.polynomial);
            CHECK(ext.degree_at_most_4);
            CHECK(ext.affine_curvature);
            // chain rule through F = theta * (1 + rz) at the boundary zeros
            const auto dF = prof.F.numerator().derivative();
            CHECK(dF(FieldElem(-1)).rational_value() == rational(2, p) * (rational(1) - r));
            CHECK(dF(FieldElem(1)).rational_value() == -(rational(2, q) * (rational(1) + r)));
        }
    }
}

TEST_CASE("extremal profile over a quadratic fiber parameter") {
    const auto roots = csc_parameters(ConeLabels(1, 2));
    REQUIRE(roots.size() == 1);
    const FiberParam r(roots[0]);
    CHECK(!r.is_rational());
    const auto prof = extremal_profile(ConeLabels(1, 2), r);
    CHECK(check_conditions(prof).all());
    CHECK(check_extremal(prof).extremal());
    CHECK(is_csc(ConeLabels(1, 2), r));
    // the quadratic relation r^2 = 3 - 6r collapses h to a linear polynomial
    const auto h = profile_h(prof);
    REQUIRE(h.degree());
    CHECK(*h.degree() <= 1);
}

TEST_CASE("canonical profile passes conditions but is not extremal") {
    for (const auto& [p, q] : std::vector<std::pair<long, long>>{{1, 2}, {3, 2}, {5, 7}}) {
        const auto prof = canonical_profile(ConeLabels(p, q), FiberParam(rational(1, 4)));
        CHECK(check_conditions(prof).all());
        const auto ext = check_extremal(prof);
        CHECK(!ext.polynomial);
        CHECK(!ext.extremal());
        CHECK_THROWS_AS(kahler_einstein_double_root(prof), std::domain_error);
    }
}

TEST_CASE("smooth specialization matches the closed form") {
    for (long i = 1; i <= 20; ++i) {
        const Rational r = rational(i, 21);
        const auto prof = extremal_profile(ConeLabels(1, 1), FiberParam(r));
        REQUIRE(prof.F.is_polynomial());
        const RatFn closed = smooth_extremal_theta(r) * RatFn(Poly{{rational(1), r}});
        REQUIRE(closed.is_polynomial());
        CHECK(lower(prof.F.numerator()) == closed.numerator());
    }
}

TEST_CASE("csc root search frozen cases") {
    const auto r12 = csc_parameters(ConeLabels(1, 2));
    REQUIRE(r12.size() == 1);
    CHECK(r12[0].minimal == make_poly({-3, 6, 1}));
    CHECK(r12[0].isolating.lo > rational(46, 100));
    CHECK(r12[0].isolating.hi < rational(47, 100));
    CHECK(r12[0].isolating.width() <= rational(1, 4096));

    CHECK(csc_parameters(ConeLabels(2, 1)).empty());
    CHECK(csc_parameters(ConeLabels(1, 1)).empty());
    CHECK(csc_parameters(ConeLabels(5, 3)).empty());

    const auto r23 = csc_parameters(ConeLabels(2, 3));
    REQUIRE(r23.size() == 1);
    CHECK(r23[0].minimal == make_poly({-3, 10, 1}));

    const auto r7_15 = csc_parameters(ConeLabels(7, 15));
    REQUIRE(r7_15.size() == 1);
    CHECK(is_rational_root(r7_15[0]));
    CHECK(rational_root_value(r7_15[0]) == rational(1, 2));
    CHECK(r7_15[0].minimal == make_poly({-1, 2}));
}

TEST_CASE("csc roots exist exactly when p < q") {
    for (long p = 1; p <= 12; ++p)
        for (long q = 1; q <= 12; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const auto roots = csc_parameters(ConeLabels(p, q));
            CHECK(roots.size() == (p < q ? 1u : 0u));
            for (const auto& root : roots) {
                const FiberParam r(root);
                CHECK(is_csc(ConeLabels(p, q), r));
                CHECK(check_extremal(extremal_profile(ConeLabels(p, q), r)).extremal());
            }
        }
}

TEST_CASE("csc quadratic reflection identity") {
    // swapping the labels mirrors the quadratic: Q_{q,p}(r) = -Q_{p,q}(-r)
    std::vector<std::pair<long, long>> pairs;
    for (long p = 1; pairs.size() < 20; ++p)
        for (long q = p + 1; q <= p + 9 && pairs.size() < 20; ++q)
            if (std::gcd(p, q) == 1) pairs.emplace_back(p, q);
    CHECK(pairs.size() == 20);
    for (const auto& [p, q] : pairs) {
        const Poly a = csc_quadratic(ConeLabels(p, q));
        const Poly b = csc_quadratic(ConeLabels(q, p));
        for (long k = -5; k <= 5; ++k) {
            const Rational r = rational(k, 6);
            CHECK(a(-r) == -(b(r)));
        }
    }
}

TEST_CASE("is_csc distinguishes parameters exactly") {
    CHECK(!is_csc(ConeLabels(1, 2), FiberParam(rational(1, 2))));
    CHECK(is_csc(ConeLabels(7, 15), FiberParam(rational(1, 2))));
}

TEST_CASE("no extremal profile admits a Kahler-Einstein double root") {
    for (const auto& [p, q] : std::vector<std::pair<long, long>>{{1, 1}, {1, 2}, {3, 5}, {7, 4}}) {
        for (long k = 1; k <= 7; ++k) {
            const auto prof = extremal_profile(ConeLabels(p, q), FiberParam(rational(k, 8)));
            CHECK(!kahler_einstein_double_root(prof));
        }
    }
    const auto roots = csc_parameters(ConeLabels(1, 2));
    const auto prof = extremal_profile(ConeLabels(1, 2), FiberParam(roots.at(0)));
    CHECK(!kahler_einstein_double_root(prof));
}

TEST_CASE("F'(-1/r) = 0 alone does not certify Kahler-Einstein") {
    // (27, 17, 1/2) is the unique point with p, q <= 50 coprime and r = k/8
    // where F'(-1/r) vanishes: F' = c (z+2)^2 (z - e) with a third root
    // e != -2, so F'' stays quadratic and the curvature is not constant.
    // The full criterion (F' proportional to (z+1/r)^2) must reject it.
    const auto prof = extremal_profile(ConeLabels(27, 17), FiberParam(rational(1, 2)));
    CHECK(check_conditions(prof).all());
    CHECK(check_extremal(prof).extremal());
    const auto dF = prof.F.numerator().derivative();
    CHECK(dF(FieldElem(-2)).is_zero());
    REQUIRE(dF.degree().has_value());
    CHECK(*dF.degree() == 3);
    CHECK(!kahler_einstein_double_root(prof));
    CHECK(!is_csc(ConeLabels(27, 17), FiberParam(rational(1, 2))));
}

TEST_CASE("synthetic Kahler-Einstein shape is recognized") {
    // F = (z+2)^3 - 27: F' = 3 (z+2)^2 is exactly the double-root square for
    // r = 1/2, so the extremality and Einstein checks pass while the boundary
    // conditions fail (F(-1) = -26); the checks are independent.
    const FiberParam r(rational(1, 2));
    const Poly cube = make_poly({-19, 12, 6, 1});
    const auto ke = profile_from_F(ConeLabels(1, 1), r, lift(cube));
    CHECK(!check_conditions(ke).all());
    CHECK(check_extremal(ke).extremal());
    CHECK(kahler_einstein_double_root(ke));

    // F = (z+2)^3 (z-1): F'(-2) = 0 but F' = (z+2)^2 (4z-1) carries a third
    // root, so the Einstein criterion rejects it.
    const Poly quartic = make_poly({-8, -4, 6, 5, 1});
    const auto skew = profile_from_F(ConeLabels(1, 1), r, lift(quartic));
    const auto cond = check_conditions(skew);
    CHECK(!cond.positive);
    CHECK(!cond.endpoints_vanish);
    CHECK(check_extremal(skew).extremal());
    CHECK(!kahler_einstein_double_root(skew));
}

TEST_CASE("profile_h inverts the profile construction") {
    const auto labels = ConeLabels(3, 4);
    const FiberParam r(rational(2, 5));
    const auto prof = extremal_profile(labels, r);
    const auto h = profile_h(prof);
    // F = (1-z^2) h / (4pq(3-r^2)) reconstructs F
    const auto one_minus_z2 = Polynomial<FieldElem>{{FieldElem(1), FieldElem(0), FieldElem(-1)}};
    const FieldElem scale =
        (FieldElem(4 * 3 * 4) * (FieldElem(3) - r.value() * r.value())).inverse();
    const auto F = one_minus_z2 * h * Polynomial<FieldElem>{{scale}};
    CHECK(F == prof.F.numerator());
    CHECK(prof.theta * RationalFunction<FieldElem>(one_plus_rz(r)) == prof.F);
}
