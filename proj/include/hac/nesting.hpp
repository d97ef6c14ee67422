#pragma once

#include <map>
#include <string>
#include <vector>

#include "hac/generators.hpp"
#include "hac/interval.hpp"

namespace hac {

// Element of the nesting semigroup: per family at most one admissible
// parameter interval. Encodes which parent generators keep the sufficient
// nesting condition intact.
class NestingSet {
public:
    NestingSet() = default;

    static NestingSet of(std::initializer_list<std::pair<Family, Interval>> entries);

    void insert(Family f, const Interval& r);  // empty intervals are dropped
    bool has(Family f) const { return entries_.count(f) != 0; }
    const Interval& interval(Family f) const { return entries_.at(f); }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    // Entries in family enumeration order (A, C, 12, 14, 19, 20).
    const std::map<Family, Interval>& entries() const { return entries_; }

    bool member(Family f, double theta) const;
    NestingSet intersect(const NestingSet& other) const;
    NestingSet restrict_to(const std::vector<Family>& families) const;

    bool operator==(const NestingSet& o) const { return entries_ == o.entries_; }
    std::string str() const;

private:
    std::map<Family, Interval> entries_;
};

enum class NestingCase { F24, F1234 };

// Families covered by the case.
std::vector<Family> case_families(NestingCase c);

// Admissible parents of psi^(family, theta) within the F24 case
// {C, 12, 14, 19, 20}. family = A is a usage error.
NestingSet n2_f24(Family family, double theta);

// Admissible parents within the F1234 case {A, C, 19, 20}; families 12 and
// 14 are usage errors.
NestingSet n2_f1234(Family family, double theta);

NestingSet n2(NestingCase c, Family family, double theta);

// Widest starting set keeping the estimator closed under the case: the
// F1234 variant restricts C and 20 to parameters >= 1 so family A remains
// nestable above them.
NestingSet default_n0(NestingCase c);

// Clamp theta into r; open endpoints are first replaced by the nearest
// representable interior value.
double trim(double theta, const Interval& r);

}  // namespace hac
