#include <doctest.h>

#include "ordcalc/coloring.hpp"
#include "ordcalc/parse.hpp"

#include "gen.hpp"

using namespace ordcalc;

namespace {

Ordinal O(const char* text) {
    return parse_ordinal(text);
}

FinOrdSet nat_range(std::size_t n) {
    std::vector<Ordinal> v;
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(Ordinal::from_natural(Nat(i)));
    return FinOrdSet::from_elements(std::move(v));
}

PairColoring constant_table(std::size_t n, int k, int color) {
    return PairColoring::table(nat_range(n), k, std::vector<int>(n * (n - 1) / 2, color));
}

// C5: color 1 iff circular distance 1 on {0..4}.
PairColoring pentagon() {
    std::vector<int> colors;
    for (std::size_t j = 1; j < 5; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            std::size_t d = j - i;
            colors.push_back(d == 1 || d == 4 ? 1 : 0);
        }
    return PairColoring::table(nat_range(5), 2, colors);
}

}  // namespace

TEST_CASE("color_of: tables and rules") {
    PairColoring zeros = constant_table(5, 2, 0);
    CHECK(color_of(zeros, O("1"), O("3")) == 0);
    CHECK(color_of(zeros, O("3"), O("1")) == 0);

    PairColoring dec = decomposable_coloring(O("w*2"));
    CHECK(color_of(dec, O("3"), O("w")) == 1);
    CHECK(color_of(dec, O("3"), O("5")) == 0);
    CHECK(color_of(dec, O("w"), O("w+4")) == 0);

    CHECK_THROWS_AS(color_of(zeros, O("2"), O("2")), precondition_error);
    CHECK_THROWS_AS(color_of(zeros, O("2"), O("9")), precondition_error);
    CHECK_THROWS_AS(color_of(dec, O("w*2"), O("1")), precondition_error);
}

TEST_CASE("color_of is symmetric") {
    ordgen::Gen g(31);
    PairColoring sier = sierpinski_coloring(O("w^3"));
    PairColoring dec = decomposable_coloring(O("w^2+w"));
    for (int i = 0; i < 200; ++i) {
        Ordinal x = g.ordinal_below(O("w^2+w")), y = g.ordinal_below(O("w^2+w"));
        if (x == y)
            continue;
        CHECK(color_of(sier, x, y) == color_of(sier, y, x));
        CHECK(color_of(dec, x, y) == color_of(dec, y, x));
    }
}

TEST_CASE("color_slice") {
    PairColoring ones = constant_table(4, 2, 1);
    FinOrdSet s = nat_range(4);
    FinOrdSet slice = color_slice(ones, O("2"), 1, s);
    CHECK(slice == FinOrdSet::from_elements({O("0"), O("1"), O("3")}));
    CHECK(color_slice(ones, O("2"), 0, s).empty());

    PairColoring dec = decomposable_coloring(O("w*2"));
    FinOrdSet sample = FinOrdSet::from_elements({O("0"), O("1"), O("w"), O("w+1")});
    CHECK(color_slice(dec, O("w"), 1, sample) == FinOrdSet::from_elements({O("0"), O("1")}));
}

TEST_CASE("find_homogeneous") {
    CHECK(find_homogeneous(constant_table(5, 2, 0), 0, 3) ==
          FinOrdSet::from_elements({O("0"), O("1"), O("2")}));
    CHECK_FALSE(find_homogeneous(pentagon(), 1, 3));
    CHECK_FALSE(find_homogeneous(pentagon(), 0, 3));
    CHECK(find_homogeneous(pentagon(), 1, 2));
    CHECK(find_homogeneous(pentagon(), 0, 0) == FinOrdSet{});
    CHECK_FALSE(find_homogeneous(constant_table(3, 2, 0), 1, 4));
    CHECK_THROWS_AS(find_homogeneous(sierpinski_coloring(O("w^2")), 0, 2), precondition_error);
}

TEST_CASE("check_arrow_finite: classical Ramsey values") {
    ArrowResult r6 = check_arrow_finite(6, {3, 3});
    CHECK(r6.verdict == ArrowVerdict::holds);

    ArrowResult r5 = check_arrow_finite(5, {3, 3});
    REQUIRE(r5.verdict == ArrowVerdict::refuted);
    REQUIRE(r5.counterexample);
    CHECK_FALSE(find_homogeneous(*r5.counterexample, 0, 3));
    CHECK_FALSE(find_homogeneous(*r5.counterexample, 1, 3));

    CHECK(check_arrow_finite(3, {1, 7}).verdict == ArrowVerdict::holds);
    CHECK(check_arrow_finite(0, {0, 9}).verdict == ArrowVerdict::holds);
    CHECK(check_arrow_finite(2, {2, 2}).verdict == ArrowVerdict::holds);
    CHECK(check_arrow_finite(1, {2, 2}).verdict == ArrowVerdict::refuted);
    CHECK_THROWS_AS(check_arrow_finite(4, {}), precondition_error);
}

TEST_CASE("check_arrow_finite: monotone in n, stable under goal permutation") {
    bool seen_true = false;
    for (std::size_t n = 2; n <= 7; ++n) {
        ArrowVerdict v = check_arrow_finite(n, {3, 3}).verdict;
        ArrowVerdict vs = check_arrow_finite(n, {3, 3}).verdict;  // deterministic
        CHECK(v == vs);
        if (seen_true)
            CHECK(v == ArrowVerdict::holds);
        if (v == ArrowVerdict::holds)
            seen_true = true;
    }
    CHECK(seen_true);

    // color swap with swapped goals
    for (std::size_t n = 2; n <= 7; ++n)
        CHECK(check_arrow_finite(n, {2, 4}).verdict == check_arrow_finite(n, {4, 2}).verdict);
}

TEST_CASE("check_arrow_finite: cap and user-supplied witness") {
    CHECK(check_arrow_finite(9, {3, 3}).verdict == ArrowVerdict::inconclusive);
    CHECK(check_arrow_finite(9, {3, 3}, {.cap = 20}).verdict == ArrowVerdict::holds);

    ArrowResult w = check_arrow_witness(5, {3, 3}, pentagon());
    CHECK(w.verdict == ArrowVerdict::refuted);
    ArrowResult bad = check_arrow_witness(5, {2, 3}, pentagon());
    CHECK(bad.verdict == ArrowVerdict::inconclusive);
    CHECK_THROWS_AS(check_arrow_witness(6, {3, 3}, pentagon()), precondition_error);
}

TEST_CASE("sierpinski coloring follows the code order") {
    CHECK_THROWS_AS(sierpinski_coloring(O("w")), precondition_error);
    PairColoring c = sierpinski_coloring(O("w^3"));
    ordgen::Gen g(32);
    for (int i = 0; i < 300; ++i) {
        Ordinal x = g.ordinal_below(O("w^3")), y = g.ordinal_below(O("w^3"));
        if (x == y)
            continue;
        if (y < x)
            std::swap(x, y);
        int expected = godel_code(x) < godel_code(y) ? 0 : 1;
        CHECK(color_of(c, x, y) == expected);
    }
    // 1-monochromatic sets listed in increasing ordinal order have strictly
    // decreasing codes: pairwise this is the rule itself; exercise it on
    // all 1-monochromatic triples of a sample.
    std::vector<Ordinal> sample = g.distinct_below(O("w^3"), 12);
    for (std::size_t a = 0; a < sample.size(); ++a)
        for (std::size_t b = a + 1; b < sample.size(); ++b)
            for (std::size_t d = b + 1; d < sample.size(); ++d)
                if (color_of(c, sample[a], sample[b]) == 1 &&
                    color_of(c, sample[b], sample[d]) == 1 &&
                    color_of(c, sample[a], sample[d]) == 1) {
                    CHECK(godel_code(sample[a]) > godel_code(sample[b]));
                    CHECK(godel_code(sample[b]) > godel_code(sample[d]));
                }
}

TEST_CASE("decomposable coloring admits no 1-monochromatic triple") {
    CHECK_THROWS_AS(decomposable_coloring(O("w^w")), precondition_error);
    CHECK_THROWS_AS(decomposable_coloring(O("1")), precondition_error);

    ordgen::Gen g(33);
    for (const char* alpha_text : {"w+1", "w*2", "w^2+w"}) {
        Ordinal alpha = O(alpha_text);
        PairColoring c = decomposable_coloring(alpha);
        for (int i = 0; i < 400; ++i) {
            Ordinal x = g.ordinal_below(alpha), y = g.ordinal_below(alpha),
                    z = g.ordinal_below(alpha);
            if (x == y || y == z || x == z)
                continue;
            bool all_one = color_of(c, x, y) == 1 && color_of(c, y, z) == 1 &&
                           color_of(c, x, z) == 1;
            CHECK_FALSE(all_one);
        }
    }
}

TEST_CASE("check_zero_homog_segment") {
    auto v = check_zero_homog_segment(O("w*2"), parse_interval_set("[0,w)"));
    CHECK(v.zero_homogeneous);
    CHECK(v.segment == 0);
    CHECK(v.type == O("w"));
    CHECK(v.type_below_alpha);

    v = check_zero_homog_segment(O("w*2"), parse_interval_set("[w,w*2)"));
    CHECK(v.zero_homogeneous);
    CHECK(v.segment == 1);
    CHECK(v.type == O("w"));
    CHECK(v.type_below_alpha);

    v = check_zero_homog_segment(O("w*2"), parse_interval_set("[5,w+5)"));
    CHECK_FALSE(v.zero_homogeneous);

    CHECK_THROWS_AS(check_zero_homog_segment(O("w"), parse_interval_set("[0,w)")),
                    precondition_error);
    CHECK_THROWS_AS(check_zero_homog_segment(O("w*2"), parse_interval_set("[0,w*3)")),
                    precondition_error);
}

TEST_CASE("repeat_enum") {
    CHECK_THROWS_AS(repeat_enum(Ordinal::zero(), 0), precondition_error);

    for (int m = 0; m < 10; ++m)
        CHECK(repeat_enum(Ordinal::one(), m, 2000) == Ordinal::zero());

    // beta = 2: both elements show up at least 3 times among the first 20
    int zeros = 0, ones = 0;
    for (int m = 0; m < 20; ++m) {
        Ordinal x = repeat_enum(O("2"), m, 2000);
        CHECK(x < O("2"));
        if (x.is_zero())
            ++zeros;
        else
            ++ones;
    }
    CHECK(zeros >= 3);
    CHECK(ones >= 3);

    // beta = w*2: w recurs; every output stays below beta
    int omegas = 0;
    for (int m = 0; m < 40; ++m) {
        Ordinal x = repeat_enum(O("w*2"), m, 5000);
        CHECK(x < O("w*2"));
        if (x == O("w"))
            ++omegas;
    }
    CHECK(omegas >= 3);
}
