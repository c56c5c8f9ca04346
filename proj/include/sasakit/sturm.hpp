#pragma once

#include "sasakit/interval.hpp"
#include "sasakit/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace sasakit::exact {

// Standard Sturm chain: p, p', then negated euclidean remainders.
template <class K>
std::vector<Polynomial<K>> sturm_chain(const Polynomial<K>& p) {
    std::vector<Polynomial<K>> chain;
    chain.push_back(p);
    auto d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(std::move(d));
    while (true) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        auto [q, r] = Polynomial<K>::divmod(a, b);
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

template <class K>
int sign_variations(const std::vector<Polynomial<K>>& chain, const K& x) {
    int variations = 0;
    int last = 0;
    for (const auto& f : chain) {
        const int s = sign_of(f(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

// Number of distinct real roots of p in I, honoring endpoint openness.
// Multiple roots are counted once (the chain is built on the square-free part).
template <class K>
int sturm_root_count(const Polynomial<K>& p, const Interval& I) {
    if (p.is_zero()) throw std::domain_error("sturm_root_count: zero polynomial");
    const K lo(I.lo);
    const K hi(I.hi);
    if (I.lo == I.hi) return sign_of(p(lo)) == 0 ? 1 : 0;
    if (*p.degree() == 0) return 0;
    auto q = exact_divide(p, gcd(p, p.derivative()));
    const bool root_lo = sign_of(q(lo)) == 0;
    const bool root_hi = sign_of(q(hi)) == 0;
    if (root_lo) q = exact_divide(q, Polynomial<K>({K(0) - lo, K(1)}));
    if (root_hi) q = exact_divide(q, Polynomial<K>({K(0) - hi, K(1)}));
    int count = 0;
    if (q.degree() && *q.degree() > 0) {
        const auto chain = sturm_chain(q);
        count = sign_variations(chain, lo) - sign_variations(chain, hi);
    }
    if (root_lo && I.lo_closed) ++count;
    if (root_hi && I.hi_closed) ++count;
    return count;
}

// True iff p > 0 everywhere on I (endpoints included only when closed):
// zero roots in the open interior, positive midpoint sign, and positive
// values at any closed endpoint.
template <class K>
bool certify_positive(const Polynomial<K>& p, const Interval& I) {
    if (p.is_zero()) return false;
    if (I.lo == I.hi) return sign_of(p(K(I.lo))) > 0;
    if (sturm_root_count(p, Interval::open(I.lo, I.hi)) != 0) return false;
    if (sign_of(p(K(I.midpoint()))) <= 0) return false;
    if (I.lo_closed && sign_of(p(K(I.lo))) <= 0) return false;
    if (I.hi_closed && sign_of(p(K(I.hi))) <= 0) return false;
    return true;
}

namespace detail {

inline void isolate_roots_rec(const Poly& q, const std::vector<Poly>& chain, const Rational& lo,
                              const Rational& hi, const Rational& max_width,
                              std::vector<Interval>& out) {
    const int count = sign_variations(chain, lo) - sign_variations(chain, hi);
    if (count == 0) return;
    if (count == 1 && hi - lo <= max_width) {
        out.push_back(Interval::open(lo, hi));
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (q(mid) == 0) {
        // rational root exactly at the bisection point: carve out a clean
        // isolating neighborhood, then recurse on what is left
        Rational w = std::min(Rational(mid - lo), Rational(hi - mid)) / 2;
        if (w > max_width / 2) w = max_width / 2;
        while (q(mid - w) == 0 || q(mid + w) == 0 ||
               sturm_root_count(q, Interval::open(mid - w, mid + w)) != 1)
            w /= 2;
        out.push_back(Interval::open(mid - w, mid + w));
        isolate_roots_rec(q, chain, lo, mid - w, max_width, out);
        isolate_roots_rec(q, chain, mid + w, hi, max_width, out);
        return;
    }
    isolate_roots_rec(q, chain, lo, mid, max_width, out);
    isolate_roots_rec(q, chain, mid, hi, max_width, out);
}

}  // namespace detail

// Open isolating intervals (width <= max_width, endpoints never roots, one
// distinct root each) for all roots of p inside the open interval I.
// Precondition: p does not vanish at the endpoints of I.
inline std::vector<Interval> isolate_roots(const Poly& p, const Interval& I,
                                           const Rational& max_width) {
    if (p.is_zero()) throw std::domain_error("isolate_roots: zero polynomial");
    if (p(I.lo) == 0 || p(I.hi) == 0)
        throw std::domain_error("isolate_roots: root at an interval endpoint");
    if (*p.degree() == 0) return {};
    const Poly q = exact_divide(p, gcd(p, p.derivative()));
    const auto chain = sturm_chain(q);
    std::vector<Interval> out;
    detail::isolate_roots_rec(q, chain, I.lo, I.hi, max_width, out);
    return out;
}

// Shrinks an isolating interval for the unique root of p inside it by
// bisection until its width is at most max_width.
inline Interval refine_isolating(const Poly& p, Interval iso, const Rational& max_width) {
    if (sturm_root_count(p, iso) != 1)
        throw std::domain_error("refine_isolating: interval does not isolate a single root");
    if (p(iso.lo) == 0 || p(iso.hi) == 0)
        throw std::domain_error("refine_isolating: root at an interval endpoint");
    Rational lo = iso.lo;
    Rational hi = iso.hi;
    while (hi - lo > max_width) {
        const Rational mid = (lo + hi) / 2;
        if (p(mid) == 0) {
            // the root itself is rational; nudge both endpoints around it
            Rational w = std::min({Rational(mid - lo), Rational(hi - mid), max_width}) / 2;
            return Interval::open(mid - w, mid + w);
        }
        if (sturm_root_count(p, Interval::open(lo, mid)) == 1)
            hi = mid;
        else
            lo = mid;
    }
    return Interval::open(lo, hi);
}

}  // namespace sasakit::exact
