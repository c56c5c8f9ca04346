#pragma once

#include "sasakit/rational.hpp"

#include <stdexcept>
#include <utility>

namespace sasakit::exact {

// Rational interval with independently open or closed endpoints.
// A degenerate interval (lo == hi) must be closed on both sides.
struct Interval {
    Rational lo;
    Rational hi;
    bool lo_closed = false;
    bool hi_closed = false;

    Interval(Rational lo_, Rational hi_, bool lo_closed_, bool hi_closed_)
        : lo(std::move(lo_)), hi(std::move(hi_)), lo_closed(lo_closed_), hi_closed(hi_closed_) {
        if (lo > hi) throw std::domain_error("interval: lo > hi");
        if (lo == hi && !(lo_closed && hi_closed)) throw std::domain_error("interval: empty");
    }

    static Interval open(Rational lo, Rational hi) {
        return {std::move(lo), std::move(hi), false, false};
    }
    static Interval closed(Rational lo, Rational hi) {
        return {std::move(lo), std::move(hi), true, true};
    }

    Rational midpoint() const { return (lo + hi) / 2; }
    Rational width() const { return hi - lo; }

    bool contains(const Rational& x) const {
        if (x < lo || x > hi) return false;
        if (x == lo && !lo_closed) return false;
        if (x == hi && !hi_closed) return false;
        return true;
    }

    bool operator==(const Interval& other) const {
        return lo == other.lo && hi == other.hi && lo_closed == other.lo_closed &&
               hi_closed == other.hi_closed;
    }
};

}  // namespace sasakit::exact
