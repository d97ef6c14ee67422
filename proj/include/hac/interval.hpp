#pragma once

#include <cmath>
#include <limits>
#include <string>

namespace hac {

// Real interval with independently open/closed endpoints; upper may be +inf.
struct Interval {
    double lower = 0.0;
    double upper = 0.0;
    bool lower_open = false;
    bool upper_open = false;

    static Interval closed(double a, double b) { return {a, b, false, false}; }
    static Interval open_closed(double a, double b) { return {a, b, true, false}; }
    static Interval closed_open(double a, double b) { return {a, b, false, true}; }
    static Interval open(double a, double b) { return {a, b, true, true}; }

    bool empty() const {
        if (lower > upper) return true;
        if (lower == upper) return lower_open || upper_open;
        return false;
    }

    bool contains(double x) const {
        if (lower_open ? x <= lower : x < lower) return false;
        if (upper_open ? x >= upper : x > upper) return false;
        return true;
    }

    Interval intersect(const Interval& o) const {
        Interval r;
        if (lower > o.lower) {
            r.lower = lower;
            r.lower_open = lower_open;
        } else if (lower < o.lower) {
            r.lower = o.lower;
            r.lower_open = o.lower_open;
        } else {
            r.lower = lower;
            r.lower_open = lower_open || o.lower_open;
        }
        if (upper < o.upper) {
            r.upper = upper;
            r.upper_open = upper_open;
        } else if (upper > o.upper) {
            r.upper = o.upper;
            r.upper_open = o.upper_open;
        } else {
            r.upper = upper;
            r.upper_open = upper_open || o.upper_open;
        }
        return r;
    }

    // Closed hull with open endpoints moved to the nearest representable
    // interior value; realizes "1 - eps"-style boundary handling.
    Interval closure_for_trim() const {
        Interval r = *this;
        if (r.lower_open) {
            r.lower = std::nextafter(r.lower, std::numeric_limits<double>::infinity());
            r.lower_open = false;
        }
        if (r.upper_open && std::isfinite(r.upper)) {
            r.upper = std::nextafter(r.upper, -std::numeric_limits<double>::infinity());
            r.upper_open = false;
        }
        return r;
    }

    bool operator==(const Interval& o) const {
        return lower == o.lower && upper == o.upper &&
               lower_open == o.lower_open && upper_open == o.upper_open;
    }

    std::string str() const;
};

}  // namespace hac
