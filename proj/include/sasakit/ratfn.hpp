#pragma once

#include "sasakit/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace sasakit::exact {

// Quotient of two polynomials over a field K, kept in canonical form:
// numerator and denominator coprime, denominator monic. The zero function
// is 0/1. Canonical form makes structural equality meaningful.
template <class K>
class RationalFunction {
public:
    RationalFunction() : num_{}, den_{K(1)} {}
    RationalFunction(const Polynomial<K>& num) : num_(num), den_{K(1)} {}
    RationalFunction(Polynomial<K> num, Polynomial<K> den)
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("rational function: zero denominator");
        canonicalize();
    }

    const Polynomial<K>& numerator() const { return num_; }
    const Polynomial<K>& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    // Throws when x is a pole (a zero of the reduced denominator).
    template <class X>
    X operator()(const X& x) const {
        const X d = den_(x);
        if (d == X(0)) throw std::domain_error("rational function: evaluation at a pole");
        return num_(x) / d;
    }

    RationalFunction derivative() const {
        return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction out = a;
        out.num_ = -out.num_;
        return out;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("rational function: division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Polynomial<K>(K(1));
            return;
        }
        const auto g = gcd(num_, den_);
        if (g.degree() && *g.degree() > 0) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
        const K lead = den_.leading();
        if (!(lead == K(1))) {
            const K inv = K(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Polynomial<K> num_;
    Polynomial<K> den_;
};

using RatFn = RationalFunction<Rational>;

}  // namespace sasakit::exact
