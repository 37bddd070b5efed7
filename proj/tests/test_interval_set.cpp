#include <doctest.h>

#include "ordcalc/interval_set.hpp"
#include "ordcalc/parse.hpp"

#include "gen.hpp"

using namespace ordcalc;

namespace {

Ordinal O(const char* text) {
    return parse_ordinal(text);
}

IntervalSet S(const char* text) {
    return parse_interval_set(text);
}

}  // namespace

TEST_CASE("set algebra basics") {
    CHECK(set_difference(S("[0,w)"), S("[0,5)")) == S("[5,w)"));
    CHECK(set_intersect(S("[0,w)+[w*2,w*3)"), S("[w,w*2)")).empty());
    IntervalSet u = set_union(S("[0,w)"), S("[w,w+1)"));
    CHECK(u == S("[0,w+1)"));
    CHECK(contains(u, O("w")));
    CHECK(contains(u, O("5")));
    CHECK_FALSE(contains(u, O("w+1")));

    CHECK(is_subset(S("[1,3)+[w,w+1)"), S("[0,w+4)")));
    CHECK_FALSE(is_subset(S("[0,w+4)"), S("[1,3)")));
    CHECK(is_subset(IntervalSet{}, IntervalSet{}));
}

TEST_CASE("set algebra matches pointwise membership on probes") {
    ordgen::Gen g(21);
    const Ordinal bound = O("w^3");
    for (int i = 0; i < 120; ++i) {
        IntervalSet a = g.interval_set_below(bound), b = g.interval_set_below(bound);
        IntervalSet u = set_union(a, b), n = set_intersect(a, b), d = set_difference(a, b);
        for (int p = 0; p < 12; ++p) {
            Ordinal x = g.ordinal_below(bound);
            bool ina = contains(a, x), inb = contains(b, x);
            CHECK(contains(u, x) == (ina || inb));
            CHECK(contains(n, x) == (ina && inb));
            CHECK(contains(d, x) == (ina && !inb));
        }
        CHECK(is_subset(a, b) == (set_intersect(a, b) == a));
        CHECK(is_subset(n, a));
        CHECK(is_subset(d, a));
        CHECK(set_intersect(d, b).empty());
    }
}

TEST_CASE("order_type") {
    CHECK(order_type(S("[0,w)")) == O("w"));
    CHECK(order_type(IntervalSet{}) == Ordinal::zero());
    CHECK(order_type(S("[w,w*2)+[w*3,w*3+5)")) == O("w+5"));
    CHECK(order_type(S("[5,8)")) == O("3"));
    CHECK(order_type(S("[w,w^2)")) == O("w^2"));
    CHECK(order_type(IntervalSet::singleton(O("w^w"))) == Ordinal::one());
}

TEST_CASE("sets_less") {
    CHECK(sets_less(S("[0,w)"), S("[w,w*2)")));
    CHECK_FALSE(sets_less(S("[0,5)"), S("[3,9)")));
    CHECK(sets_less(IntervalSet{}, S("[0,1)")));
    CHECK(sets_less(S("[0,1)"), IntervalSet{}));
    CHECK_FALSE(sets_less(S("[5,6)"), S("[0,1)")));
}

TEST_CASE("concatenation law and subset monotonicity") {
    ordgen::Gen g(22);
    const Ordinal bound = O("w^3*2");
    for (int i = 0; i < 150; ++i) {
        IntervalSet a = g.interval_set_below(bound), b = g.interval_set_below(bound);
        if (sets_less(a, b))
            CHECK(order_type(set_union(a, b)) == add(order_type(a), order_type(b)));
        IntervalSet sub = set_intersect(a, b);
        CHECK(order_type(sub) <= order_type(a));
    }
}

TEST_CASE("take_prefix") {
    auto [p, rest] = take_prefix(S("[0,5)+[w,w*2)"), O("w"));
    CHECK(p == S("[0,5)+[w,w*2)"));
    CHECK(rest.empty());

    std::tie(p, rest) = take_prefix(S("[0,5)+[w,w*2)"), O("6"));
    CHECK(p == S("[0,5)+[w,w+1)"));
    CHECK(rest == S("[w+1,w*2)"));

    std::tie(p, rest) = take_prefix(S("[0,w)"), Ordinal::zero());
    CHECK(p.empty());
    CHECK(rest == S("[0,w)"));

    CHECK_THROWS_AS(take_prefix(S("[0,w)"), O("w+1")), precondition_error);
}

TEST_CASE("trim_above examples") {
    CHECK(trim_above(S("[0,w)"), S("[3,w)"), O("5"), O("w")) == S("[6,w)"));
    CHECK(trim_above(S("[0,w^2)"), S("[w,w^2)"), O("w*2+3"), O("w^2")) == S("[w*2+4,w^2)"));

    CHECK_THROWS_WITH_AS(trim_above(S("[0,w+1)"), S("[0,w+1)"), O("5"), O("w+1")),
                         "alpha is not indecomposable", precondition_error);
    CHECK_THROWS_WITH_AS(trim_above(S("[0,1)"), S("[0,1)"), O("0"), O("1")),
                         "alpha must exceed 1", precondition_error);
    CHECK_THROWS_WITH_AS(trim_above(S("[0,w*2)"), S("[0,w)"), O("5"), O("w")),
                         "order type of A differs from alpha", precondition_error);
    CHECK_THROWS_WITH_AS(trim_above(S("[0,w)"), S("[3,w+1)"), O("5"), O("w")),
                         "A1 is not a subset of A", precondition_error);
    CHECK_THROWS_WITH_AS(trim_above(S("[0,w)"), S("[3,7)"), O("5"), O("w")),
                         "order type of A1 differs from alpha", precondition_error);
    CHECK_THROWS_WITH_AS(trim_above(S("[0,w)"), S("[3,w)"), O("w+1"), O("w")),
                         "x is not an element of A", precondition_error);
}

TEST_CASE("trim_above postconditions on random admissible inputs") {
    ordgen::Gen g(23);
    const Ordinal alphas[] = {O("w"), O("w^2"), O("w^w")};
    for (int i = 0; i < 60; ++i) {
        const Ordinal& alpha = alphas[g.uniform(0, 2)];
        // A: a few low-type ranges followed by a final range of type alpha
        std::vector<OrdInterval> ranges;
        Ordinal cursor;
        std::size_t extras = g.uniform(0, 2);
        for (std::size_t e = 0; e < extras; ++e) {
            Ordinal len = g.ordinal_below(alpha);
            if (len.is_zero())
                continue;
            Ordinal hi = add(cursor, len);
            ranges.push_back({cursor, hi});
            cursor = add(hi, Ordinal::one());
        }
        Ordinal final_lo = cursor;
        ranges.push_back({final_lo, add(final_lo, alpha)});
        IntervalSet a = IntervalSet::from_intervals(ranges);
        REQUIRE(order_type(a) == alpha);

        // A1: drop everything below a point inside the final range
        Ordinal offset = g.ordinal_below(alpha);
        IntervalSet a1 = set_difference(a, IntervalSet::below(add(final_lo, offset)));
        REQUIRE(order_type(a1) == alpha);

        // x: any element of A
        Ordinal x;
        const OrdInterval& pick = a.intervals()[g.uniform(0, a.intervals().size() - 1)];
        x = add(pick.lo, g.ordinal_below(sub_left(pick.lo, pick.hi)));
        REQUIRE(contains(a, x));

        IntervalSet a2 = trim_above(a, a1, x, alpha);
        CHECK(order_type(a2) == alpha);
        CHECK(is_subset(a2, a1));
        CHECK(sets_less(IntervalSet::singleton(x), a2));
    }
}

TEST_CASE("segment_partition examples") {
    auto pieces = segment_partition(O("w*2"), {O("w")});
    REQUIRE(pieces.size() == 3);
    CHECK(pieces[0] == S("[0,w)"));
    CHECK(pieces[1] == S("[w,w+1)"));
    CHECK(pieces[2] == S("[w+1,w*2)"));

    pieces = segment_partition(O("w"), {});
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0] == S("[0,w)"));

    pieces = segment_partition(O("5"), {O("0"), O("2")});
    REQUIRE(pieces.size() == 5);
    CHECK(pieces[0].empty());
    CHECK(pieces[1] == S("[0,1)"));
    CHECK(pieces[2] == S("[1,2)"));
    CHECK(pieces[3] == S("[2,3)"));
    CHECK(pieces[4] == S("[3,5)"));

    CHECK_THROWS_AS(segment_partition(O("w"), {O("w")}), precondition_error);
    CHECK_THROWS_AS(segment_partition(O("w"), {O("3"), O("3")}), precondition_error);
    CHECK_THROWS_AS(segment_partition(O("w"), {O("4"), O("3")}), precondition_error);
}

TEST_CASE("segment_partition reconstructs the segment") {
    ordgen::Gen g(24);
    for (int i = 0; i < 100; ++i) {
        Ordinal beta = g.ordinal(2);
        if (beta.is_zero())
            beta = O("w");
        std::vector<Ordinal> f = g.distinct_below(beta, g.uniform(0, 4));
        auto pieces = segment_partition(beta, f);
        REQUIRE(pieces.size() == 2 * f.size() + 1);
        IntervalSet all;
        for (std::size_t p = 0; p < pieces.size(); ++p) {
            if (p > 0)
                CHECK(sets_less(pieces[p - 1], pieces[p]));
            if (p % 2 == 1)
                CHECK(pieces[p] == IntervalSet::singleton(f[p / 2]));
            all = set_union(all, pieces[p]);
        }
        CHECK(all == IntervalSet::below(beta));
    }
}

TEST_CASE("strong_decompose_set examples") {
    auto pieces = strong_decompose_set(S("[0,w^2*2+w)"), O("w^3"));
    REQUIRE(pieces.size() == 3);
    CHECK(pieces[0] == S("[0,w^2)"));
    CHECK(pieces[1] == S("[w^2,w^2*2)"));
    CHECK(pieces[2] == S("[w^2*2,w^2*2+w)"));

    pieces = strong_decompose_set(S("[0,w)"), O("w"));
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0] == S("[0,w)"));

    pieces = strong_decompose_set(S("[5,8)"), O("w"));
    REQUIRE(pieces.size() == 3);
    CHECK(pieces[0] == S("[5,6)"));
    CHECK(pieces[1] == S("[6,7)"));
    CHECK(pieces[2] == S("[7,8)"));

    CHECK_THROWS_AS(strong_decompose_set(S("[0,w^2)"), O("w")), precondition_error);
}

TEST_CASE("strong decomposition: pieces carry the CNF types and survive trims") {
    ordgen::Gen g(25);
    const Ordinal beta = O("w^3*2");
    for (int i = 0; i < 80; ++i) {
        IntervalSet d = g.interval_set_below(beta);
        Ordinal t = order_type(d);
        auto pieces = strong_decompose_set(d, beta);
        auto types = decompose_strong(t);
        REQUIRE(pieces.size() == types.size());

        IntervalSet all;
        IntervalSet trimmed_union;
        for (std::size_t p = 0; p < pieces.size(); ++p) {
            CHECK(order_type(pieces[p]) == types[p]);
            CHECK(is_indecomposable(order_type(pieces[p])));
            if (p > 0)
                CHECK(sets_less(pieces[p - 1], pieces[p]));
            all = set_union(all, pieces[p]);

            // removing a proper initial segment must not change the type
            Ordinal sigma = types[p] == Ordinal::one() ? Ordinal::zero()
                                                       : g.ordinal_below(types[p]);
            auto [cut, kept] = take_prefix(pieces[p], sigma);
            CHECK(order_type(kept) == types[p]);
            trimmed_union = set_union(trimmed_union, kept);
        }
        CHECK(all == d);
        CHECK(order_type(trimmed_union) == t);
    }
}
