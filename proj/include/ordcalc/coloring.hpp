#ifndef ORDCALC_COLORING_HPP
#define ORDCALC_COLORING_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ordcalc/interval_set.hpp"
#include "ordcalc/ordinal.hpp"

namespace ordcalc {

// A finite set of ordinals, kept strictly increasing.
class FinOrdSet {
public:
    FinOrdSet() = default;
    static FinOrdSet from_elements(std::vector<Ordinal> elements);  // sorts, dedups

    const std::vector<Ordinal>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    bool contains(const Ordinal& x) const;
    // Index of x, or nullopt.
    std::optional<std::size_t> index_of(const Ordinal& x) const;

    bool operator==(const FinOrdSet&) const = default;

private:
    std::vector<Ordinal> elements_;
};

// Explicit coloring of all pairs of a finite ground set with k colors.
// Pair (i < j) lives at index j*(j-1)/2 + i of `colors`.
struct TableColoring {
    FinOrdSet ground;
    int k = 2;
    std::vector<int> colors;

    bool operator==(const TableColoring&) const = default;
};

// Total 2-coloring of pairs below `bound`, given by a rule.
struct RuleColoring {
    enum class Kind {
        sierpinski,    // x < y gets color 0 iff godel_code(x) < godel_code(y)
        decomposable,  // color 1 iff exactly one of the pair is below split_lo
    };
    Kind kind = Kind::sierpinski;
    Ordinal bound;
    Ordinal split_lo;  // decomposable only: the beta of split_decomposable(bound)

    bool operator==(const RuleColoring&) const = default;
};

// A 2-place coloring of unordered pairs: either an explicit finite table
// or a rule-based total coloring.
class PairColoring {
public:
    static PairColoring table(FinOrdSet ground, int k, std::vector<int> pair_colors);
    static PairColoring rule(RuleColoring r);

    int color_count() const;
    bool is_table() const { return std::holds_alternative<TableColoring>(form_); }
    const TableColoring& as_table() const;
    const RuleColoring& as_rule() const;

    bool operator==(const PairColoring&) const = default;

private:
    std::variant<TableColoring, RuleColoring> form_;
};

// Color of the unordered pair {x, y}; symmetric in its arguments.
// Errors on x == y or elements outside the coloring's domain.
int color_of(const PairColoring& c, const Ordinal& x, const Ordinal& y);

// K_i(x) within the sample S: the y in S (y != x) with color_of(x, y) = i.
FinOrdSet color_slice(const PairColoring& c, const Ordinal& x, int color, const FinOrdSet& s);

// Lexicographically least i-monochromatic subset of the ground set of
// size m, if any. Table colorings only.
std::optional<FinOrdSet> find_homogeneous(const PairColoring& c, int color, std::size_t m);

enum class ArrowVerdict { holds, refuted, inconclusive };

struct ArrowResult {
    ArrowVerdict verdict = ArrowVerdict::inconclusive;
    // A counterexample coloring when refuted.
    std::optional<PairColoring> counterexample;
    std::string detail;
};

struct ArrowOptions {
    // Exhaustive search is attempted only for n up to this cap; defaults
    // follow the tractable range for the color count.
    std::optional<std::size_t> cap;
};

// Decides n -> (goals)^2 over vertex set {0, ..., n-1}: true iff every
// k-coloring of pairs admits an i-monochromatic set of size goals[i].
// Short-circuits through the degenerate rule when some goal <= 1;
// refutations carry the counterexample found.
ArrowResult check_arrow_finite(std::size_t n, const std::vector<std::size_t>& goals,
                               const ArrowOptions& options = {});

// Verifies that `candidate` colors the pairs of {0..n-1} with no
// i-monochromatic set of size goals[i]; returns refuted with that witness
// on success. Covers n beyond the exhaustive cap.
ArrowResult check_arrow_witness(std::size_t n, const std::vector<std::size_t>& goals,
                                const PairColoring& candidate);

// Rule coloring behind the negative relation for alpha > w: pairs ordered
// by the ordinal order get color 0 iff their godel codes agree with it.
PairColoring sierpinski_coloring(const Ordinal& bound);

// Rule coloring behind the negative relation at decomposable alpha:
// color 1 iff the pair straddles the canonical split point.
PairColoring decomposable_coloring(const Ordinal& alpha);

struct ZeroHomogVerdict {
    bool zero_homogeneous = false;
    int segment = -1;   // 0: below the split point, 1: at or above it
    Ordinal type;       // order type of H when confirmed
    bool type_below_alpha = false;
    std::string detail;
};

// For decomposable alpha and H inside [0, alpha): confirms H does not
// straddle the split point (so H is 0-homogeneous under
// decomposable_coloring) and that its order type stays below alpha.
ZeroHomogVerdict check_zero_homog_segment(const Ordinal& alpha, const IntervalSet& h);

inline constexpr std::size_t kRepeatEnumScanLimit = 1'000'000;

// m-th entry of an enumeration of [0, beta) that repeats every element
// infinitely often: m unpairs into (i, j) and the i-th ordinal below beta
// in godel-code order is returned. Candidates are scanned among the first
// `scan_limit` codes; past that the enumeration falls back to 0.
Ordinal repeat_enum(const Ordinal& beta, const Nat& m,
                    std::size_t scan_limit = kRepeatEnumScanLimit);

}  // namespace ordcalc

#endif
