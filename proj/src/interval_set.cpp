#include "ordcalc/interval_set.hpp"

#include <algorithm>

namespace ordcalc {

IntervalSet IntervalSet::interval(Ordinal lo, Ordinal hi) {
    if (lo > hi)
        throw precondition_error("interval bounds out of order (lo > hi)");
    IntervalSet s;
    if (lo < hi)
        s.intervals_.push_back({std::move(lo), std::move(hi)});
    return s;
}

IntervalSet IntervalSet::singleton(const Ordinal& x) {
    return interval(x, add(x, Ordinal::one()));
}

IntervalSet IntervalSet::below(const Ordinal& bound) {
    return interval(Ordinal::zero(), bound);
}

IntervalSet IntervalSet::from_intervals(std::vector<OrdInterval> ranges) {
    for (const OrdInterval& r : ranges)
        if (r.lo > r.hi)
            throw precondition_error("interval bounds out of order (lo > hi)");
    std::erase_if(ranges, [](const OrdInterval& r) { return r.lo == r.hi; });
    std::sort(ranges.begin(), ranges.end(),
              [](const OrdInterval& a, const OrdInterval& b) { return a.lo < b.lo; });
    IntervalSet s;
    for (OrdInterval& r : ranges) {
        if (!s.intervals_.empty() && r.lo <= s.intervals_.back().hi) {
            if (s.intervals_.back().hi < r.hi)
                s.intervals_.back().hi = std::move(r.hi);
        } else {
            s.intervals_.push_back(std::move(r));
        }
    }
    return s;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
    std::vector<OrdInterval> all = a.intervals();
    all.insert(all.end(), b.intervals().begin(), b.intervals().end());
    return IntervalSet::from_intervals(std::move(all));
}

IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b) {
    std::vector<OrdInterval> out;
    std::size_t i = 0, j = 0;
    while (i < a.intervals().size() && j < b.intervals().size()) {
        const OrdInterval& x = a.intervals()[i];
        const OrdInterval& y = b.intervals()[j];
        const Ordinal& lo = std::max(x.lo, y.lo);
        const Ordinal& hi = std::min(x.hi, y.hi);
        if (lo < hi)
            out.push_back({lo, hi});
        if (x.hi < y.hi)
            ++i;
        else
            ++j;
    }
    return IntervalSet::from_intervals(std::move(out));
}

IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b) {
    std::vector<OrdInterval> out;
    for (const OrdInterval& x : a.intervals()) {
        Ordinal cur = x.lo;
        for (const OrdInterval& y : b.intervals()) {
            if (y.hi <= cur)
                continue;
            if (y.lo >= x.hi)
                break;
            if (cur < y.lo)
                out.push_back({cur, y.lo});
            cur = std::max(cur, y.hi);
            if (cur >= x.hi)
                break;
        }
        if (cur < x.hi)
            out.push_back({cur, x.hi});
    }
    return IntervalSet::from_intervals(std::move(out));
}

bool contains(const IntervalSet& a, const Ordinal& x) {
    for (const OrdInterval& r : a.intervals()) {
        if (x < r.lo)
            return false;
        if (x < r.hi)
            return true;
    }
    return false;
}

bool is_subset(const IntervalSet& a, const IntervalSet& b) {
    // Normalized non-adjacent intervals: each a-range must sit inside a
    // single b-range.
    for (const OrdInterval& r : a.intervals()) {
        bool covered = false;
        for (const OrdInterval& s : b.intervals()) {
            if (s.lo <= r.lo && r.hi <= s.hi) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return false;
    }
    return true;
}

Ordinal order_type(const IntervalSet& a) {
    Ordinal acc;
    for (const OrdInterval& r : a.intervals())
        acc = add(acc, sub_left(r.lo, r.hi));
    return acc;
}

bool sets_less(const IntervalSet& a, const IntervalSet& b) {
    if (a.empty() || b.empty())
        return true;
    return a.intervals().back().hi <= b.intervals().front().lo;
}

std::pair<IntervalSet, IntervalSet> take_prefix(const IntervalSet& s, const Ordinal& sigma) {
    std::vector<OrdInterval> prefix, rest;
    Ordinal need = sigma;
    for (std::size_t i = 0; i < s.intervals().size(); ++i) {
        const OrdInterval& r = s.intervals()[i];
        if (need.is_zero()) {
            rest.insert(rest.end(), s.intervals().begin() + static_cast<std::ptrdiff_t>(i),
                        s.intervals().end());
            break;
        }
        Ordinal t = sub_left(r.lo, r.hi);
        if (t <= need) {
            prefix.push_back(r);
            need = sub_left(t, need);
        } else {
            Ordinal cut = add(r.lo, need);
            prefix.push_back({r.lo, cut});
            rest.push_back({std::move(cut), r.hi});
            rest.insert(rest.end(), s.intervals().begin() + static_cast<std::ptrdiff_t>(i) + 1,
                        s.intervals().end());
            need = Ordinal::zero();
            break;
        }
    }
    if (!need.is_zero())
        throw precondition_error("prefix type exceeds the order type of the set");
    return {IntervalSet::from_intervals(std::move(prefix)),
            IntervalSet::from_intervals(std::move(rest))};
}

IntervalSet trim_above(const IntervalSet& a, const IntervalSet& a1, const Ordinal& x,
                       const Ordinal& alpha) {
    if (!is_indecomposable(alpha))
        throw precondition_error("alpha is not indecomposable");
    if (alpha <= Ordinal::one())
        throw precondition_error("alpha must exceed 1");
    if (order_type(a) != alpha)
        throw precondition_error("order type of A differs from alpha");
    if (!is_subset(a1, a))
        throw precondition_error("A1 is not a subset of A");
    if (order_type(a1) != alpha)
        throw precondition_error("order type of A1 differs from alpha");
    if (!contains(a, x))
        throw precondition_error("x is not an element of A");

    IntervalSet a2 = set_difference(a1, IntervalSet::below(add(x, Ordinal::one())));

    // Guaranteed by indecomposability of alpha; a violation is a logic bug.
    if (order_type(a2) != alpha)
        throw std::logic_error("trim_above: order type of A2 differs from alpha");
    return a2;
}

std::vector<IntervalSet> segment_partition(const Ordinal& beta, const std::vector<Ordinal>& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] >= beta)
            throw precondition_error("F element not below beta");
        if (i > 0 && f[i - 1] >= f[i])
            throw precondition_error("F must be strictly increasing");
    }
    std::vector<IntervalSet> pieces;
    pieces.reserve(2 * f.size() + 1);
    Ordinal prev;
    for (const Ordinal& v : f) {
        pieces.push_back(IntervalSet::interval(prev, v));
        pieces.push_back(IntervalSet::singleton(v));
        prev = add(v, Ordinal::one());
    }
    pieces.push_back(IntervalSet::interval(prev, beta));
    return pieces;
}

std::vector<IntervalSet> strong_decompose_set(const IntervalSet& d, const Ordinal& beta) {
    if (!is_subset(d, IntervalSet::below(beta)))
        throw precondition_error("D is not contained in [0, beta)");
    std::vector<IntervalSet> pieces;
    IntervalSet rest = d;
    for (const Ordinal& tau : decompose_strong(order_type(d))) {
        auto [piece, tail] = take_prefix(rest, tau);
        pieces.push_back(std::move(piece));
        rest = std::move(tail);
    }
    if (!rest.empty())
        throw std::logic_error("strong_decompose_set: leftover elements after decomposition");
    return pieces;
}

}  // namespace ordcalc
