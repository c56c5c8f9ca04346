#pragma once

#include "sasakit/interval.hpp"
#include "sasakit/polynomial.hpp"
#include "sasakit/ratfn.hpp"
#include "sasakit/sturm.hpp"

#include <memory>
#include <stdexcept>
#include <utility>

namespace sasakit::exact {

// A real algebraic number of degree at most 2: its minimal polynomial in
// integer-primitive form (positive leading coefficient, irreducible when
// quadratic) together with an open isolating interval that contains exactly
// one root and no root at either endpoint.
struct AlgebraicRoot {
    Poly minimal;
    Interval isolating;
};

inline AlgebraicRoot make_algebraic_root(const Poly& minimal, const Interval& isolating) {
    const Poly m = primitive_integer_form(minimal);
    if (!m.degree() || *m.degree() < 1 || *m.degree() > 2)
        throw std::domain_error("algebraic root: minimal polynomial must have degree 1 or 2");
    if (*m.degree() == 2) {
        const Integer disc = Integer(m.coeff(1).get_num() * m.coeff(1).get_num()) -
                             4 * m.coeff(2).get_num() * m.coeff(0).get_num();
        if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t()))
            throw std::domain_error("algebraic root: quadratic is reducible over the rationals");
    }
    if (isolating.lo_closed || isolating.hi_closed)
        throw std::domain_error("algebraic root: isolating interval must be open");
    if (m(isolating.lo) == 0 || m(isolating.hi) == 0)
        throw std::domain_error("algebraic root: root at an isolating interval endpoint");
    if (sturm_root_count(m, isolating) != 1)
        throw std::domain_error("algebraic root: interval does not isolate exactly one root");
    return {m, isolating};
}

inline AlgebraicRoot refine(const AlgebraicRoot& r, const Rational& max_width) {
    return {r.minimal, refine_isolating(r.minimal, r.isolating, max_width)};
}

inline bool is_rational_root(const AlgebraicRoot& r) { return *r.minimal.degree() == 1; }

// Exact value of a degree-1 root.
inline Rational rational_root_value(const AlgebraicRoot& r) {
    if (!is_rational_root(r)) throw std::domain_error("algebraic root: not rational");
    return -r.minimal.coeff(0) / r.minimal.coeff(1);
}

class FieldElem;

// The real field Q(theta) for an algebraic theta of degree 1 or 2. Elements
// are represented as a + b*theta; a quadratic generator satisfies
// theta^2 = -u*theta - v with u, v rational (monic reduction data).
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    static std::shared_ptr<const NumberField> of_rational(const Rational& value) {
        Poly m({-value, Rational(1)});
        AlgebraicRoot root{primitive_integer_form(m),
                           Interval::open(value - 1, value + 1)};
        return std::shared_ptr<const NumberField>(new NumberField(std::move(root)));
    }

    static std::shared_ptr<const NumberField> of_root(const AlgebraicRoot& root) {
        return std::shared_ptr<const NumberField>(
            new NumberField(make_algebraic_root(root.minimal, root.isolating)));
    }

    int degree() const { return int(*root_.minimal.degree()); }
    const AlgebraicRoot& root() const { return root_; }
    const Poly& minimal() const { return root_.minimal; }
    const Rational& reduction_u() const { return u_; }
    const Rational& reduction_v() const { return v_; }
    double approx() const { return approx_; }

    // Exact generator value; only defined for degree-1 fields.
    const Rational& rational_value() const {
        if (degree() != 1) throw std::domain_error("number field: generator is irrational");
        return value_;
    }

    bool same_root(const NumberField& other) const {
        return root_.minimal == other.root_.minimal && root_.isolating == other.root_.isolating;
    }

    FieldElem element(Rational a, Rational b) const;
    FieldElem generator() const;
    FieldElem from_rational(Rational a) const;

private:
    explicit NumberField(AlgebraicRoot root) : root_(std::move(root)) {
        if (degree() == 1) {
            value_ = rational_root_value(root_);
            approx_ = to_double(value_);
        } else {
            u_ = root_.minimal.coeff(1) / root_.minimal.coeff(2);
            v_ = root_.minimal.coeff(0) / root_.minimal.coeff(2);
            const Rational tight = rational(Integer(1), Integer(1) << 70);
            root_ = refine(root_, tight);
            approx_ = to_double(root_.isolating.midpoint());
        }
    }

    AlgebraicRoot root_;
    Rational value_;  // degree 1 only
    Rational u_, v_;  // degree 2 only
    double approx_ = 0.0;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element a + b*theta of a NumberField. A null field pointer marks a plain
// rational constant, which combines freely with elements of any field.
class FieldElem {
public:
    FieldElem() : a_(0), b_(0) {}
    FieldElem(int n) : a_(n), b_(0) {}
    FieldElem(long n) : a_(n), b_(0) {}
    FieldElem(Rational q) : a_(std::move(q)), b_(0) {}
    FieldElem(FieldPtr field, Rational a, Rational b)
        : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)) {
        normalize();
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const FieldPtr& field() const { return field_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    const Rational& rational_value() const {
        if (!is_rational()) throw std::domain_error("field element: not rational");
        return a_;
    }

    FieldElem inverse() const {
        if (is_zero()) throw std::domain_error("field element: division by zero");
        if (b_ == 0) return {field_, 1 / a_, Rational(0)};
        const Rational& u = field_->reduction_u();
        const Rational& v = field_->reduction_v();
        const Rational norm = a_ * a_ - u * a_ * b_ + v * b_ * b_;
        return {field_, (a_ - u * b_) / norm, -b_ / norm};
    }

    friend FieldElem operator+(const FieldElem& x, const FieldElem& y) {
        return {join(x, y), x.a_ + y.a_, x.b_ + y.b_};
    }
    friend FieldElem operator-(const FieldElem& x, const FieldElem& y) {
        return {join(x, y), x.a_ - y.a_, x.b_ - y.b_};
    }
    friend FieldElem operator-(const FieldElem& x) { return {x.field_, -x.a_, -x.b_}; }
    friend FieldElem operator*(const FieldElem& x, const FieldElem& y) {
        FieldPtr f = join(x, y);
        Rational a = x.a_ * y.a_;
        Rational b = x.a_ * y.b_ + x.b_ * y.a_;
        const Rational bb = x.b_ * y.b_;
        if (bb != 0) {
            // theta^2 = -u*theta - v
            a -= f->reduction_v() * bb;
            b -= f->reduction_u() * bb;
        }
        return {std::move(f), std::move(a), std::move(b)};
    }
    friend FieldElem operator/(const FieldElem& x, const FieldElem& y) { return x * y.inverse(); }

    friend bool operator==(const FieldElem& x, const FieldElem& y) {
        return (x - y).is_zero();
    }
    friend bool operator!=(const FieldElem& x, const FieldElem& y) { return !(x == y); }

private:
    void normalize() {
        if (!field_) {
            if (b_ != 0) throw std::logic_error("field element: irrational part without a field");
            return;
        }
        if (field_->degree() == 1 && b_ != 0) {
            a_ += b_ * field_->rational_value();
            b_ = 0;
        }
    }

    static FieldPtr join(const FieldElem& x, const FieldElem& y) {
        if (!x.field_) return y.field_;
        if (!y.field_) return x.field_;
        if (x.field_ == y.field_ || x.field_->same_root(*y.field_)) return x.field_;
        throw std::logic_error("field element: operands belong to different fields");
    }

    FieldPtr field_;
    Rational a_;
    Rational b_;
};

inline FieldElem NumberField::element(Rational a, Rational b) const {
    return {shared_from_this(), std::move(a), std::move(b)};
}

inline FieldElem NumberField::generator() const {
    return {shared_from_this(), Rational(0), Rational(1)};
}

inline FieldElem NumberField::from_rational(Rational a) const {
    return {shared_from_this(), std::move(a), Rational(0)};
}

// Exact sign of a + b*theta. The rational case is immediate; otherwise the
// generator's isolating interval is bisected against the minimal polynomial
// until the linear form a + b*x has one sign on the whole interval. The loop
// terminates because a nonzero element of a quadratic field cannot vanish at
// the irrational generator.
inline int sign_of(const FieldElem& x) {
    if (x.b() == 0) return sign_of(x.a());
    const NumberField& f = *x.field();
    const Poly& m = f.minimal();
    Rational lo = f.root().isolating.lo;
    Rational hi = f.root().isolating.hi;
    int sign_lo_m = sign_of(m(lo));
    while (true) {
        const int slo = sign_of(Rational(x.a() + x.b() * lo));
        const int shi = sign_of(Rational(x.a() + x.b() * hi));
        if (slo == shi && slo != 0) return slo;
        const Rational mid = (lo + hi) / 2;
        const int smid = sign_of(m(mid));  // never 0: m is irreducible
        if (smid == sign_lo_m)
            lo = mid;
        else
            hi = mid;
    }
}

inline double to_double(const FieldElem& x) {
    if (!x.field()) return to_double(x.a());
    return to_double(x.a()) + to_double(x.b()) * x.field()->approx();
}

// Reinterprets a polynomial over Q as a polynomial over Q(theta).
inline Polynomial<FieldElem> lift(const Poly& p) {
    std::vector<FieldElem> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) out.emplace_back(c);
    return Polynomial<FieldElem>(std::move(out));
}

// Extracts a rational-coefficient polynomial; throws if any coefficient has
// an irrational part.
inline Poly lower(const Polynomial<FieldElem>& p) {
    std::vector<Rational> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) out.push_back(c.rational_value());
    return Poly(std::move(out));
}

}  // namespace sasakit::exact
