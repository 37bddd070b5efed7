#ifndef ORDCALC_INTERVAL_SET_HPP
#define ORDCALC_INTERVAL_SET_HPP

#include <utility>
#include <vector>

#include "ordcalc/ordinal.hpp"

namespace ordcalc {

// Half-open range [lo, hi) of ordinals.
struct OrdInterval {
    Ordinal lo;
    Ordinal hi;

    bool operator==(const OrdInterval&) const = default;
};

// A set of ordinals given as a finite union of half-open intervals,
// kept normalized: intervals sorted by lo, nonempty, pairwise disjoint
// and non-adjacent. The empty list is the empty set.
class IntervalSet {
public:
    IntervalSet() = default;

    // [lo, hi); lo == hi gives the empty set, lo > hi is an error.
    static IntervalSet interval(Ordinal lo, Ordinal hi);
    static IntervalSet singleton(const Ordinal& x);  // [x, x+1)
    static IntervalSet below(const Ordinal& bound);  // [0, bound)
    static IntervalSet from_intervals(std::vector<OrdInterval> ranges);

    const std::vector<OrdInterval>& intervals() const { return intervals_; }
    bool empty() const { return intervals_.empty(); }

    bool operator==(const IntervalSet&) const = default;

private:
    std::vector<OrdInterval> intervals_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b);
bool contains(const IntervalSet& a, const Ordinal& x);
bool is_subset(const IntervalSet& a, const IntervalSet& b);

// The order type of A under the ordinal order: the ordered sum of
// sub_left(lo, hi) over the intervals.
Ordinal order_type(const IntervalSet& a);

// A < B elementwise: every element of A is below every element of B
// (vacuously true when either side is empty).
bool sets_less(const IntervalSet& a, const IntervalSet& b);

// Splits S into its initial segment of order type sigma and the rest.
// Requires sigma <= order_type(S).
std::pair<IntervalSet, IntervalSet> take_prefix(const IntervalSet& s, const Ordinal& sigma);

// For indecomposable alpha > 1 with tp A = tp A1 = alpha, A1 <= A and
// x in A: the subset A2 = A1 ∩ (x, ...) with {x} < A2 and tp A2 = alpha.
// Throws precondition_error naming any violated hypothesis.
IntervalSet trim_above(const IntervalSet& a, const IntervalSet& a1, const Ordinal& x,
                       const Ordinal& alpha);

// Cuts [0, beta) along the finite strictly increasing F = {v_1 < ... < v_p}
// into the alternating pieces D_0, {v_1}, D_1, ..., {v_p}, D_p (2p+1 sets,
// segments possibly empty), in elementwise increasing order.
std::vector<IntervalSet> segment_partition(const Ordinal& beta, const std::vector<Ordinal>& f);

// Splits D (a subset of [0, beta)) into consecutive pieces of additively
// indecomposable order type, following decompose_strong(order_type(D)).
std::vector<IntervalSet> strong_decompose_set(const IntervalSet& d, const Ordinal& beta);

}  // namespace ordcalc

#endif
