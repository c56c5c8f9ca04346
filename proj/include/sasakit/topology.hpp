#pragma once

#include "sasakit/rational.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sasakit::topology {

using exact::Rational;

// Coprime positive join parameters (k1, k2) of the 5-manifold built from a
// 3-torus bundle and a 3-sphere.
struct JoinData {
    long k1;
    long k2;

    JoinData(long k1_, long k2_) : k1(k1_), k2(k2_) {
        if (k1 < 1 || k2 < 1) throw std::domain_error("join data: k1 and k2 must be positive");
        if (std::gcd(k1, k2) != 1) throw std::domain_error("join data: k1 and k2 must be coprime");
    }
};

// Integral weights selecting a quasi-regular ray w = a e1 + b e2 in the
// 2-torus Lie algebra.
struct ReebSelection {
    long a;
    long b;
};

// The ray lies in the Sasaki cone iff a > 0 and a + b k2 > 0.
bool sasaki_cone_member(const JoinData& join, const ReebSelection& reeb);

// Orbifold quotient data of a quasi-regular ray: cone labels (p, q) =
// (a, a + b k2) and the branch divisor (1-1/p) E_n + (1-1/q) E_inf.
// Non-coprime (p, q) is reported, not rejected; profile construction
// downstream refuses such labels itself.
struct QuotientParams {
    long p;
    long q;
    bool coprime;
    std::string branch_divisor;
};

QuotientParams quotient_params(const JoinData& join, const ReebSelection& reeb);

// One Sasaki cone of the bouquet. m counts the split complex structures
// (degree 2m); the one-dimensional cone of the nonsplit structure carries no
// extremal representative. The regular ray sits in the m = 0 cone and is the
// only place constant scalar curvature occurs.
struct BouquetCone {
    std::optional<long> m;  // nullopt marks the nonsplit cone
    int dimension;
    bool extremal_exists;
    bool csc_regular_ray;
};

struct BouquetDescriptor {
    long k1;
    long k2;
    std::vector<BouquetCone> cones;

    long two_dimensional_count() const {
        long n = 0;
        for (const auto& c : cones)
            if (c.dimension == 2) ++n;
        return n;
    }
};

// ceil(k1/k2) two-dimensional cones (m = 0 .. ceil-1) plus one
// one-dimensional cone from the nonsplit structure.
BouquetDescriptor bouquet(const JoinData& join);

// Coefficient of the first Chern class of the contact bundle: c1(D) = 2 k1.
long chern_coefficient(const JoinData& join);

enum class RuledStructure { Nonsplit, S0Product, S0FamilyNonproduct, SplitDegree };

// Whether the join's Kahler class sits in the Kahler cone of the given ruled
// structure: always for the nonsplit and S0 structures, and 2 k1 > n k2 for
// the degree-n split structure.
bool kahler_cone_member(const JoinData& join, RuledStructure structure, long n = 0);

// Fiber parameter induced by the join's Kahler class on the degree-n split
// structure: r = n k2 / (2 k1), in (0,1) exactly when the class is Kahler.
Rational fiber_param_from_class(const JoinData& join, long n);

// Fundamental group: central extension of Z^2 with commutator subgroup of
// order k2 (the quotient of the integer Heisenberg group by k2 times its
// center), abelian exactly when k2 = 1, H1 = Z^2 always.
struct Pi1Structure {
    long k2;
    bool abelian;
    long commutator_order;
    std::string abelianization;
    std::string presentation;
};

Pi1Structure pi1_structure(const JoinData& join);

// Dimensions (h0, h1) of the deformation spaces of the four ruled-surface
// structures over an elliptic curve.
std::pair<long, long> deformation_dims(RuledStructure structure, long n = 0);

// Action of the transverse homothety with scale a on the scalar curvature:
// s maps to (s + 2n)/a - 2n, with n = 2 for these 5-manifolds.
double transverse_homothety_scalar(double s, double a, long n = 2);

// Brute-force facts about the mod-k2 Heisenberg group, the finite model used
// to verify the pi1 statements: element (alpha, beta, gamma) with
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b'), all entries mod k2.
struct HeisenbergFacts {
    long group_order = 0;
    long commutator_count = 0;      // distinct commutators [g, h]
    bool commutators_central = false;  // every commutator is (0, 0, *)
    bool commutators_closed = false;   // the commutator set is a subgroup
    long abelianization_order = 0;
    long abelianization_exponent = 0;
    bool abelian = false;
};

HeisenbergFacts heisenberg_facts(long k2);

}  // namespace sasakit::topology
