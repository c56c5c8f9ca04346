#include "sasakit/topology.hpp"

#include "sasakit/rational.hpp"

#include <algorithm>

namespace sasakit::topology {

using exact::rational;
using exact::to_string;

bool sasaki_cone_member(const JoinData& join, const ReebSelection& reeb) {
    return reeb.a > 0 && reeb.a + reeb.b * join.k2 > 0;
}

QuotientParams quotient_params(const JoinData& join, const ReebSelection& reeb) {
    if (!sasaki_cone_member(join, reeb))
        throw std::domain_error("quotient_params: ray is outside the Sasaki cone");
    QuotientParams out;
    out.p = reeb.a;
    out.q = reeb.a + reeb.b * join.k2;
    out.coprime = std::gcd(out.p, out.q) == 1;
    std::string divisor;
    if (out.p > 1) divisor += to_string(rational(out.p - 1, out.p)) + " E_n";
    if (out.q > 1) {
        if (!divisor.empty()) divisor += " + ";
        divisor += to_string(rational(out.q - 1, out.q)) + " E_inf";
    }
    out.branch_divisor = divisor.empty() ? "0" : divisor;
    return out;
}

BouquetDescriptor bouquet(const JoinData& join) {
    BouquetDescriptor out{join.k1, join.k2, {}};
    const long count = (join.k1 + join.k2 - 1) / join.k2;  // ceil(k1/k2)
    for (long m = 0; m < count; ++m) out.cones.push_back({m, 2, true, m == 0});
    out.cones.push_back({std::nullopt, 1, false, false});
    return out;
}

long chern_coefficient(const JoinData& join) { return 2 * join.k1; }

bool kahler_cone_member(const JoinData& join, RuledStructure structure, long n) {
    switch (structure) {
        case RuledStructure::Nonsplit:
        case RuledStructure::S0Product:
        case RuledStructure::S0FamilyNonproduct:
            return true;  // k1, k2 >= 1 by construction
        case RuledStructure::SplitDegree:
            if (n < 0) throw std::domain_error("kahler_cone_member: split degree must be nonnegative");
            return 2 * join.k1 > n * join.k2;
    }
    throw std::logic_error("kahler_cone_member: unknown structure");
}

Rational fiber_param_from_class(const JoinData& join, long n) {
    if (n < 1) throw std::domain_error("fiber_param_from_class: split degree must be positive");
    return rational(n * join.k2, 2 * join.k1);
}

Pi1Structure pi1_structure(const JoinData& join) {
    Pi1Structure out;
    out.k2 = join.k2;
    out.abelian = join.k2 == 1;
    out.commutator_order = join.k2;
    out.abelianization = "Z^2";
    out.presentation = out.abelian
                           ? "<x, y | [x, y] = 1>"
                           : "<x, y, z | [x, y] = z, z^" + std::to_string(join.k2) +
                                 " = 1, [x, z] = [y, z] = 1>";
    return out;
}

std::pair<long, long> deformation_dims(RuledStructure structure, long n) {
    switch (structure) {
        case RuledStructure::Nonsplit:
            return {2, 2};
        case RuledStructure::S0Product:
            return {4, 4};
        case RuledStructure::S0FamilyNonproduct:
            return {2, 2};
        case RuledStructure::SplitDegree:
            if (n < 1)
                throw std::domain_error(
                    "deformation_dims: degree-0 split surfaces are the S0 family; use the S0 variants");
            return {n + 1, n + 1};
    }
    throw std::logic_error("deformation_dims: unknown structure");
}

double transverse_homothety_scalar(double s, double a, long n) {
    if (!(a > 0)) throw std::domain_error("transverse_homothety_scalar: scale must be positive");
    return (s + 2.0 * double(n)) / a - 2.0 * double(n);
}

namespace {

struct Triple {
    long a, b, c;
};

Triple product(const Triple& x, const Triple& y, long k) {
    return {(x.a + y.a) % k, (x.b + y.b) % k, (x.c + y.c + x.a * y.b) % k};
}

Triple inverse(const Triple& x, long k) {
    const auto mod = [k](long v) { return ((v % k) + k) % k; };
    return {mod(-x.a), mod(-x.b), mod(-x.c + x.a * x.b)};
}

long index_of(const Triple& x, long k) { return (x.a * k + x.b) * k + x.c; }

}  // namespace

HeisenbergFacts heisenberg_facts(long k2) {
    if (k2 < 1 || k2 > 24)
        throw std::domain_error("heisenberg_facts: k2 must be between 1 and 24");
    const long k = k2;
    const long order = k * k * k;
    HeisenbergFacts facts;
    facts.group_order = order;

    std::vector<char> is_commutator(order, 0);
    bool central = true;
    for (long ga = 0; ga < k; ++ga)
        for (long gb = 0; gb < k; ++gb)
            for (long gc = 0; gc < k; ++gc) {
                const Triple g{ga, gb, gc};
                const Triple gi = inverse(g, k);
                for (long ha = 0; ha < k; ++ha)
                    for (long hb = 0; hb < k; ++hb)
                        for (long hc = 0; hc < k; ++hc) {
                            const Triple h{ha, hb, hc};
                            const Triple comm =
                                product(product(product(g, h, k), gi, k), inverse(h, k), k);
                            is_commutator[index_of(comm, k)] = 1;
                            if (comm.a != 0 || comm.b != 0) central = false;
                        }
            }

    std::vector<Triple> commutators;
    for (long a = 0; a < k; ++a)
        for (long b = 0; b < k; ++b)
            for (long c = 0; c < k; ++c)
                if (is_commutator[index_of({a, b, c}, k)]) commutators.push_back({a, b, c});
    facts.commutator_count = long(commutators.size());
    facts.commutators_central = central;

    facts.commutators_closed = true;
    for (const auto& x : commutators) {
        if (!is_commutator[index_of(inverse(x, k), k)]) facts.commutators_closed = false;
        for (const auto& y : commutators)
            if (!is_commutator[index_of(product(x, y, k), k)]) facts.commutators_closed = false;
    }

    facts.abelian = facts.commutator_count == 1;
    facts.abelianization_order = order / facts.commutator_count;

    // With the commutator subgroup equal to the whole central gamma-line the
    // quotient is the additive group of (alpha, beta) pairs; compute its
    // exponent by direct accumulation.
    if (facts.commutators_central && facts.commutators_closed &&
        facts.commutator_count == k) {
        long exponent = 1;
        for (long a = 0; a < k; ++a)
            for (long b = 0; b < k; ++b) {
                long ca = a, cb = b, ord = 1;
                while (ca != 0 || cb != 0) {
                    ca = (ca + a) % k;
                    cb = (cb + b) % k;
                    ++ord;
                }
                exponent = std::lcm(exponent, ord);
            }
        facts.abelianization_exponent = exponent;
    }
    return facts;
}

}  // namespace sasakit::topology
