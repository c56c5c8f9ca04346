#include "sasakit/topology.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

using namespace sasakit::exact;
using namespace sasakit::topology;

TEST_CASE("join parameter validation") {
    CHECK_THROWS_AS(JoinData(2, 4), std::domain_error);
    CHECK_THROWS_AS(JoinData(0, 1), std::domain_error);
    CHECK_THROWS_AS(JoinData(3, -1), std::domain_error);
}

TEST_CASE("sasaki cone membership") {
    const JoinData join(5, 2);
    CHECK(sasaki_cone_member(join, {1, 0}));
    CHECK(sasaki_cone_member(join, {1, 3}));
    CHECK(sasaki_cone_member(join, {3, -1}));   // 3 - 2 = 1 > 0
    CHECK(!sasaki_cone_member(join, {2, -1}));  // 2 - 2 = 0
    CHECK(!sasaki_cone_member(join, {0, 1}));
    CHECK(!sasaki_cone_member(join, {-1, 5}));
}

TEST_CASE("quotient parameters of a quasi-regular ray") {
    const JoinData join(5, 2);
    const auto quot = quotient_params(join, {3, 1});
    CHECK(quot.p == 3);
    CHECK(quot.q == 5);
    CHECK(quot.coprime);
    CHECK(quot.branch_divisor == "2/3 E_n + 4/5 E_inf");
    const auto regular = quotient_params(join, {1, 0});
    CHECK(regular.p == 1);
    CHECK(regular.q == 1);
    CHECK(regular.branch_divisor == "0");
    const auto half = quotient_params(join, {1, 2});
    CHECK(half.p == 1);
    CHECK(half.q == 5);
    CHECK(half.branch_divisor == "4/5 E_inf");
    CHECK(!quotient_params(join, {2, 1}).coprime);  // (2, 4)
    CHECK_THROWS_AS(quotient_params(join, {0, 1}), std::domain_error);
}

TEST_CASE("bouquet combinatorics") {
    const auto desc = bouquet(JoinData(7, 3));
    CHECK(desc.cones.size() == 4);  // ceil(7/3) = 3 split cones + nonsplit
    CHECK(desc.two_dimensional_count() == 3);
    long nonsplit = 0;
    std::set<long> ms;
    for (const auto& cone : desc.cones) {
        if (!cone.m) {
            ++nonsplit;
            CHECK(cone.dimension == 1);
            CHECK(!cone.extremal_exists);
            CHECK(!cone.csc_regular_ray);
        } else {
            ms.insert(*cone.m);
            CHECK(cone.dimension == 2);
            CHECK(cone.extremal_exists);
            CHECK(cone.csc_regular_ray == (*cone.m == 0));
        }
    }
    CHECK(nonsplit == 1);
    CHECK(ms == std::set<long>{0, 1, 2});

    // k2 > k1 leaves a single split cone
    const auto small = bouquet(JoinData(2, 5));
    CHECK(small.two_dimensional_count() == 1);
    CHECK(small.cones.size() == 2);
}

TEST_CASE("bouquet count matches the ceiling formula across a sweep") {
    for (long k1 = 1; k1 <= 40; ++k1)
        for (long k2 = 1; k2 <= 40; ++k2) {
            if (std::gcd(k1, k2) != 1) continue;
            const auto desc = bouquet(JoinData(k1, k2));
            const long expected = (k1 + k2 - 1) / k2;
            CHECK(desc.two_dimensional_count() == expected);
            CHECK(static_cast<long>(desc.cones.size()) == expected + 1);
        }
}

TEST_CASE("chern coefficient separates the joins") {
    CHECK(chern_coefficient(JoinData(1, 1)) == 2);
    CHECK(chern_coefficient(JoinData(12, 5)) == 24);
    std::set<long> seen;
    for (long k1 = 1; k1 <= 200; ++k1) CHECK(seen.insert(chern_coefficient(JoinData(k1, 1))).second);
}

TEST_CASE("kahler cone membership by ruled structure") {
    const JoinData join(5, 2);
    CHECK(kahler_cone_member(join, RuledStructure::Nonsplit));
    CHECK(kahler_cone_member(join, RuledStructure::S0Product));
    CHECK(kahler_cone_member(join, RuledStructure::S0FamilyNonproduct));
    CHECK(kahler_cone_member(join, RuledStructure::SplitDegree, 4));   // 10 > 8
    CHECK(!kahler_cone_member(join, RuledStructure::SplitDegree, 5));  // 10 = 10
    CHECK(!kahler_cone_member(join, RuledStructure::SplitDegree, 6));
}

TEST_CASE("fiber parameter from the kahler class") {
    CHECK(fiber_param_from_class(JoinData(5, 2), 3) == rational(3, 5));
    CHECK(fiber_param_from_class(JoinData(7, 1), 2) == rational(1, 7));
    CHECK_THROWS_AS(fiber_param_from_class(JoinData(5, 2), 0), std::domain_error);
    // kahler membership is equivalent to r < 1
    for (long k1 = 1; k1 <= 25; ++k1)
        for (long k2 = 1; k2 <= 25; ++k2) {
            if (std::gcd(k1, k2) != 1) continue;
            for (long n = 1; n <= 8; ++n) {
                const Rational r = fiber_param_from_class(JoinData(k1, k2), n);
                CHECK((r > 0 && r < 1) ==
                      kahler_cone_member(JoinData(k1, k2), RuledStructure::SplitDegree, n));
            }
        }
}

TEST_CASE("fundamental group structure") {
    const auto abelian = pi1_structure(JoinData(5, 1));
    CHECK(abelian.abelian);
    CHECK(abelian.commutator_order == 1);
    CHECK(abelian.abelianization == "Z^2");
    CHECK(abelian.presentation == "<x, y | [x, y] = 1>");
    const auto heis = pi1_structure(JoinData(5, 3));
    CHECK(!heis.abelian);
    CHECK(heis.commutator_order == 3);
    CHECK(heis.abelianization == "Z^2");
    CHECK(heis.presentation == "<x, y, z | [x, y] = z, z^3 = 1, [x, z] = [y, z] = 1>");
}

TEST_CASE("heisenberg model validates the group statements") {
    for (long k2 = 1; k2 <= 12; ++k2) {
        const auto facts = heisenberg_facts(k2);
        CHECK(facts.group_order == k2 * k2 * k2);
        CHECK(facts.commutator_count == k2);
        CHECK(facts.commutators_central);
        CHECK(facts.commutators_closed);
        CHECK(facts.abelianization_order == k2 * k2);
        CHECK(facts.abelianization_exponent == k2);
        CHECK(facts.abelian == (k2 == 1));
        CHECK(facts.abelian == pi1_structure(JoinData(k2 == 1 ? 2 : 1, k2)).abelian);
    }
    CHECK_THROWS_AS(heisenberg_facts(0), std::domain_error);
    CHECK_THROWS_AS(heisenberg_facts(50), std::domain_error);
}

TEST_CASE("deformation space dimensions") {
    CHECK(deformation_dims(RuledStructure::Nonsplit) == std::pair<long, long>(2, 2));
    CHECK(deformation_dims(RuledStructure::S0Product) == std::pair<long, long>(4, 4));
    CHECK(deformation_dims(RuledStructure::S0FamilyNonproduct) == std::pair<long, long>(2, 2));
    CHECK(deformation_dims(RuledStructure::SplitDegree, 1) == std::pair<long, long>(2, 2));
    CHECK(deformation_dims(RuledStructure::SplitDegree, 3) == std::pair<long, long>(4, 4));
    CHECK_THROWS_AS(deformation_dims(RuledStructure::SplitDegree, 0), std::domain_error);
}

TEST_CASE("transverse homothety acts affinely on the scalar curvature") {
    CHECK(transverse_homothety_scalar(0.0, 1.0) == 0.0);
    CHECK(std::abs(transverse_homothety_scalar(6.0, 2.0) - 1.0) < 1e-15);  // (6+4)/2 - 4
    // a = 1 is the identity
    CHECK(transverse_homothety_scalar(3.25, 1.0) == 3.25);
    // composition: scaling by a then b equals scaling by ab
    const double s = 1.7;
    const double ab = transverse_homothety_scalar(s, 6.0);
    const double chained = transverse_homothety_scalar(transverse_homothety_scalar(s, 2.0), 3.0);
    CHECK(std::abs(ab - chained) < 1e-14);
    CHECK_THROWS_AS(transverse_homothety_scalar(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(transverse_homothety_scalar(1.0, -2.0), std::domain_error);
}
