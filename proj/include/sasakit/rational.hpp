#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sasakit::exact {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den reduced to lowest terms with positive denominator.
inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign_of(const Rational& q) { return sgn(q); }

inline double to_double(const Rational& q) { return q.get_d(); }

// "num" or "num/den" (denominator omitted when 1).
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Strict parser for "num" or "num/den" with an optional leading sign on the
// numerator. Floating-point literals, spaces and empty fields are rejected.
inline std::optional<Rational> parse_rational(std::string_view text) {
    const auto all_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view num = text;
    std::string_view den = "1";
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
        negative = num.front() == '-';
        num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    if (negative) n = -n;
    return rational(n, d);
}

}  // namespace sasakit::exact
