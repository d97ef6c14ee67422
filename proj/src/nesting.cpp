#include "hac/nesting.hpp"

#include <algorithm>
#include <stdexcept>

#include "hac/detail/math.hpp"

namespace hac {

using detail::inf;

NestingSet NestingSet::of(std::initializer_list<std::pair<Family, Interval>> entries) {
    NestingSet n;
    for (const auto& [f, r] : entries) n.insert(f, r);
    return n;
}

void NestingSet::insert(Family f, const Interval& r) {
    const Interval clipped = r.intersect(theta_range(f));
    if (!clipped.empty()) entries_[f] = clipped;
}

bool NestingSet::member(Family f, double theta) const {
    const auto it = entries_.find(f);
    return it != entries_.end() && it->second.contains(theta);
}

NestingSet NestingSet::intersect(const NestingSet& other) const {
    NestingSet out;
    for (const auto& [f, r] : entries_) {
        const auto it = other.entries_.find(f);
        if (it == other.entries_.end()) continue;
        const Interval m = r.intersect(it->second);
        if (!m.empty()) out.entries_[f] = m;
    }
    return out;
}

NestingSet NestingSet::restrict_to(const std::vector<Family>& families) const {
    NestingSet out;
    for (const auto& [f, r] : entries_)
        if (std::find(families.begin(), families.end(), f) != families.end())
            out.entries_[f] = r;
    return out;
}

std::string NestingSet::str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [f, r] : entries_) {
        if (!first) out += ", ";
        first = false;
        out += "(" + family_name(f) + ", " + r.str() + ")";
    }
    return out + "}";
}

std::vector<Family> case_families(NestingCase c) {
    if (c == NestingCase::F24)
        return {Family::C, Family::F12, Family::F14, Family::F19, Family::F20};
    return {Family::A, Family::C, Family::F19, Family::F20};
}

NestingSet n2_f24(Family family, double theta) {
    if (!theta_range(family).contains(theta))
        throw std::domain_error("n2_f24: theta outside family range");
    switch (family) {
        case Family::C:
            return NestingSet::of({{Family::C, Interval::open_closed(0.0, theta)}});
        case Family::F12:
            return NestingSet::of({{Family::C, Interval::open_closed(0.0, 1.0)},
                                   {Family::F12, Interval::closed(1.0, theta)}});
        case Family::F14:
            return NestingSet::of({{Family::C, Interval::open_closed(0.0, 1.0 / theta)}});
        case Family::F19:
            return NestingSet::of({{Family::C, Interval::open_closed(0.0, 1.0)},
                                   {Family::F19, Interval::open_closed(0.0, theta)}});
        case Family::F20:
            return NestingSet::of({{Family::C, Interval::open_closed(0.0, theta)},
                                   {Family::F20, Interval::open_closed(0.0, theta)}});
        case Family::A:
            throw std::domain_error("n2_f24: family A not part of the F24 case");
    }
    return {};
}

NestingSet n2_f1234(Family family, double theta) {
    if (!theta_range(family).contains(theta))
        throw std::domain_error("n2_f1234: theta outside family range");
    switch (family) {
        case Family::A:
            return NestingSet::of({{Family::A, Interval::closed(0.0, theta)}});
        case Family::C:
            if (theta < 1.0)
                return NestingSet::of({{Family::C, Interval::open_closed(0.0, theta)}});
            return NestingSet::of({{Family::A, Interval::closed_open(0.0, 1.0)},
                                   {Family::C, Interval::open_closed(0.0, theta)}});
        case Family::F19:
            return NestingSet::of({{Family::A, Interval::closed_open(0.0, 1.0)},
                                   {Family::C, Interval::open_closed(0.0, 1.0)},
                                   {Family::F19, Interval::open_closed(0.0, theta)}});
        case Family::F20:
            if (theta < 1.0)
                return NestingSet::of({{Family::C, Interval::open_closed(0.0, theta)},
                                       {Family::F20, Interval::open_closed(0.0, theta)}});
            return NestingSet::of({{Family::A, Interval::closed_open(0.0, 1.0)},
                                   {Family::C, Interval::open_closed(0.0, theta)},
                                   {Family::F20, Interval::open_closed(0.0, theta)}});
        case Family::F12:
        case Family::F14:
            throw std::domain_error("n2_f1234: families 12/14 not part of the F1234 case");
    }
    return {};
}

NestingSet n2(NestingCase c, Family family, double theta) {
    return c == NestingCase::F24 ? n2_f24(family, theta) : n2_f1234(family, theta);
}

NestingSet default_n0(NestingCase c) {
    if (c == NestingCase::F24)
        return NestingSet::of({{Family::C, Interval::open(0.0, inf)},
                               {Family::F12, Interval::closed_open(1.0, inf)},
                               {Family::F14, Interval::closed_open(1.0, inf)},
                               {Family::F19, Interval::open(0.0, inf)},
                               {Family::F20, Interval::open(0.0, inf)}});
    return NestingSet::of({{Family::A, Interval::closed_open(0.0, 1.0)},
                           {Family::C, Interval::closed_open(1.0, inf)},
                           {Family::F19, Interval::open(0.0, inf)},
                           {Family::F20, Interval::closed_open(1.0, inf)}});
}

double trim(double theta, const Interval& r) {
    if (r.empty()) throw std::domain_error("trim: empty interval");
    const Interval c = r.closure_for_trim();
    return std::max(std::min(theta, c.upper), c.lower);
}

}  // namespace hac
