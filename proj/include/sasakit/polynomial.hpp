#pragma once

#include "sasakit/rational.hpp"

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sasakit::exact {

// Dense univariate polynomial over a field K, coefficients stored ascending
// by degree with trailing zeros stripped. The zero polynomial has an empty
// coefficient vector and no degree.
template <class K>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const K& constant) {
        if (!(constant == K(0))) coef_.push_back(constant);
    }
    explicit Polynomial(std::vector<K> coeffs) : coef_(std::move(coeffs)) { strip(); }
    Polynomial(std::initializer_list<K> coeffs) : coef_(coeffs) { strip(); }

    static Polynomial monomial(const K& c, std::size_t deg) {
        std::vector<K> v(deg + 1, K(0));
        v[deg] = c;
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coef_.empty(); }

    std::optional<std::size_t> degree() const {
        if (coef_.empty()) return std::nullopt;
        return coef_.size() - 1;
    }

    const std::vector<K>& coefficients() const { return coef_; }

    K coeff(std::size_t i) const { return i < coef_.size() ? coef_[i] : K(0); }

    const K& leading() const {
        if (coef_.empty()) throw std::domain_error("polynomial: zero polynomial has no leading coefficient");
        return coef_.back();
    }

    Polynomial derivative() const {
        if (coef_.size() <= 1) return {};
        std::vector<K> d(coef_.size() - 1, K(0));
        for (std::size_t i = 1; i < coef_.size(); ++i) d[i - 1] = coef_[i] * K(int(i));
        return Polynomial(std::move(d));
    }

    // Horner evaluation at a point of any type constructible from K. The
    // constraint keeps GMP expression templates from being deduced as X;
    // such arguments convert to K and take the overload below.
    template <class X>
        requires requires(X v, const K& c) {
            X(c);
            X(0);
            v = v * v + X(c);
        }
    X operator()(const X& x) const {
        X acc(0);
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * x + X(*it);
        return acc;
    }

    K operator()(const K& x) const { return operator()<K>(x); }

    Polynomial monic() const {
        if (is_zero()) throw std::domain_error("polynomial: cannot normalize the zero polynomial");
        return *this * (K(1) / leading());
    }

    // Quotient and remainder of a by b over the coefficient field.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("polynomial: division by the zero polynomial");
        if (a.coef_.size() < b.coef_.size()) return {Polynomial{}, a};
        std::vector<K> rem = a.coef_;
        const std::size_t db = b.coef_.size() - 1;
        std::vector<K> quot(rem.size() - db, K(0));
        const K inv_lead = K(1) / b.coef_.back();
        for (std::size_t i = quot.size(); i-- > 0;) {
            K c = rem[i + db] * inv_lead;
            if (!(c == K(0))) {
                for (std::size_t j = 0; j < db; ++j) rem[i + j] = rem[i + j] - c * b.coef_[j];
            }
            quot[i] = std::move(c);
        }
        rem.resize(db);
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<K> out(std::max(a.coef_.size(), b.coef_.size()), K(0));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<K> out(std::max(a.coef_.size(), b.coef_.size()), K(0));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a) {
        std::vector<K> out = a.coef_;
        for (auto& c : out) c = K(0) - c;
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> out(a.coef_.size() + b.coef_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.coef_.size(); ++i)
            for (std::size_t j = 0; j < b.coef_.size(); ++j)
                out[i + j] = out[i + j] + a.coef_[i] * b.coef_[j];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& a, const K& s) { return a * Polynomial(s); }
    friend Polynomial operator*(const K& s, const Polynomial& a) { return a * Polynomial(s); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coef_ == b.coef_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void strip() {
        while (!coef_.empty() && coef_.back() == K(0)) coef_.pop_back();
    }

    std::vector<K> coef_;
};

template <class K>
Polynomial<K> derivative(const Polynomial<K>& p) {
    return p.derivative();
}

// Divides a by b and throws unless the remainder vanishes.
template <class K>
Polynomial<K> exact_divide(const Polynomial<K>& a, const Polynomial<K>& b) {
    auto [q, r] = Polynomial<K>::divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("polynomial: division is not exact");
    return q;
}

// Monic greatest common divisor; gcd(0, 0) = 0.
template <class K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = Polynomial<K>::divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

// p(-z): flips the sign of odd-degree coefficients.
template <class K>
Polynomial<K> reflect(const Polynomial<K>& p) {
    std::vector<K> out = p.coefficients();
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = K(0) - out[i];
    return Polynomial<K>(std::move(out));
}

using Poly = Polynomial<Rational>;

inline Poly make_poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return Poly(std::move(v));
}

// Integer-primitive representative: clears denominators, divides out the
// content and makes the leading coefficient positive.
inline Poly primitive_integer_form(const Poly& p) {
    if (p.is_zero()) return p;
    Integer den_lcm = 1;
    for (const auto& c : p.coefficients()) den_lcm = lcm(den_lcm, c.get_den());
    Integer content = 0;
    for (const auto& c : p.coefficients()) content = gcd(content, Integer(c.get_num() * (den_lcm / c.get_den())));
    Rational scale = rational(den_lcm, content);
    if (p.leading() < 0) scale = -scale;
    std::vector<Rational> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) out.push_back(c * scale);
    return Poly(std::move(out));
}

// Human-readable form with terms in descending degree, e.g. "r^2+6r-3".
inline std::string poly_to_string(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.coefficients().size(); i-- > 0;) {
        const Rational& c = p.coeff(i);
        if (c == 0) continue;
        const bool first = out.empty();
        if (c < 0)
            out += '-';
        else if (!first)
            out += '+';
        const Rational mag = abs(c);
        if (mag != 1 || i == 0) out += to_string(mag);
        if (i > 0) {
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace sasakit::exact
