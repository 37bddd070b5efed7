#include "ordcalc/coloring.hpp"

#include <algorithm>
#include <string>

namespace ordcalc {

FinOrdSet FinOrdSet::from_elements(std::vector<Ordinal> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    FinOrdSet s;
    s.elements_ = std::move(elements);
    return s;
}

bool FinOrdSet::contains(const Ordinal& x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::optional<std::size_t> FinOrdSet::index_of(const Ordinal& x) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
    if (it == elements_.end() || *it != x)
        return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

namespace {

std::size_t pair_index(std::size_t i, std::size_t j) {
    // requires i < j
    return j * (j - 1) / 2 + i;
}

}  // namespace

PairColoring PairColoring::table(FinOrdSet ground, int k, std::vector<int> pair_colors) {
    if (k < 1)
        throw precondition_error("a coloring needs at least one color");
    const std::size_t n = ground.size();
    if (pair_colors.size() != n * (n - 1) / 2 && n > 0)
        throw precondition_error("table coloring must assign every pair exactly once");
    for (int c : pair_colors)
        if (c < 0 || c >= k)
            throw precondition_error("pair color out of range");
    PairColoring pc;
    pc.form_ = TableColoring{std::move(ground), k, std::move(pair_colors)};
    return pc;
}

PairColoring PairColoring::rule(RuleColoring r) {
    PairColoring pc;
    pc.form_ = std::move(r);
    return pc;
}

int PairColoring::color_count() const {
    return is_table() ? as_table().k : 2;
}

const TableColoring& PairColoring::as_table() const {
    if (!is_table())
        throw precondition_error("coloring is not in table form");
    return std::get<TableColoring>(form_);
}

const RuleColoring& PairColoring::as_rule() const {
    if (is_table())
        throw precondition_error("coloring is not in rule form");
    return std::get<RuleColoring>(form_);
}

int color_of(const PairColoring& c, const Ordinal& x, const Ordinal& y) {
    if (x == y)
        throw precondition_error("pair elements must be distinct");
    if (c.is_table()) {
        const TableColoring& t = c.as_table();
        auto i = t.ground.index_of(x);
        auto j = t.ground.index_of(y);
        if (!i || !j)
            throw precondition_error("element not in the coloring's ground set");
        if (*i > *j)
            std::swap(i, j);
        return t.colors[pair_index(*i, *j)];
    }
    const RuleColoring& r = c.as_rule();
    if (x >= r.bound || y >= r.bound)
        throw precondition_error("element outside the coloring's domain");
    const Ordinal& lo = std::min(x, y);
    const Ordinal& hi = std::max(x, y);
    switch (r.kind) {
    case RuleColoring::Kind::sierpinski:
        return godel_code(lo) < godel_code(hi) ? 0 : 1;
    case RuleColoring::Kind::decomposable:
        return (lo < r.split_lo) != (hi < r.split_lo) ? 1 : 0;
    }
    throw std::logic_error("unreachable rule kind");
}

FinOrdSet color_slice(const PairColoring& c, const Ordinal& x, int color, const FinOrdSet& s) {
    std::vector<Ordinal> out;
    for (const Ordinal& y : s.elements())
        if (y != x && color_of(c, x, y) == color)
            out.push_back(y);
    return FinOrdSet::from_elements(std::move(out));
}

namespace {

constexpr std::size_t kMaskBits = 64;

// Lexicographically least clique extension: scan candidates upward.
bool find_clique(const std::vector<std::uint64_t>& adj, std::uint64_t candidates,
                 std::size_t start, std::size_t want, std::vector<std::size_t>& chosen,
                 std::size_t n) {
    if (want == 0)
        return true;
    for (std::size_t v = start; v < n; ++v) {
        if (!(candidates >> v & 1))
            continue;
        chosen.push_back(v);
        if (find_clique(adj, candidates & adj[v], v + 1, want - 1, chosen, n))
            return true;
        chosen.pop_back();
    }
    return false;
}

std::vector<std::uint64_t> color_adjacency(const TableColoring& t, int color) {
    const std::size_t n = t.ground.size();
    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (t.colors[pair_index(i, j)] == color) {
                adj[i] |= std::uint64_t(1) << j;
                adj[j] |= std::uint64_t(1) << i;
            }
    return adj;
}

}  // namespace

std::optional<FinOrdSet> find_homogeneous(const PairColoring& c, int color, std::size_t m) {
    const TableColoring& t = c.as_table();
    if (color < 0 || color >= t.k)
        throw precondition_error("color index out of range");
    const std::size_t n = t.ground.size();
    if (n > kMaskBits)
        throw error("ground set too large for homogeneous search (max 64 elements)");
    if (m == 0)
        return FinOrdSet{};
    if (m > n)
        return std::nullopt;

    std::vector<std::uint64_t> adj = color_adjacency(t, color);
    std::uint64_t all = n == kMaskBits ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    std::vector<std::size_t> chosen;
    if (!find_clique(adj, all, 0, m, chosen, n))
        return std::nullopt;
    std::vector<Ordinal> elems;
    for (std::size_t v : chosen)
        elems.push_back(t.ground.elements()[v]);
    return FinOrdSet::from_elements(std::move(elems));
}

namespace {

struct ArrowSearch {
    std::size_t n;
    std::vector<std::size_t> goals;
    int k;
    std::vector<int> assignment;               // pair_index -> color, -1 unassigned
    std::vector<std::vector<std::uint64_t>> adj;  // per color adjacency masks

    // Does assigning color c to (i, j) complete a c-monochromatic set of
    // size goals[c]? Any new such set contains both i and j.
    bool completes_mono(std::size_t i, std::size_t j, int c) {
        std::size_t want = goals[static_cast<std::size_t>(c)];
        // want >= 2 here; the degenerate rule handled smaller goals.
        std::uint64_t cand = adj[static_cast<std::size_t>(c)][i] &
                             adj[static_cast<std::size_t>(c)][j];
        std::vector<std::size_t> chosen;
        return find_clique(adj[static_cast<std::size_t>(c)], cand, 0, want - 2, chosen, n);
    }

    void set_color(std::size_t i, std::size_t j, int c) {
        assignment[pair_index(i, j)] = c;
        adj[static_cast<std::size_t>(c)][i] |= std::uint64_t(1) << j;
        adj[static_cast<std::size_t>(c)][j] |= std::uint64_t(1) << i;
    }

    void clear_color(std::size_t i, std::size_t j, int c) {
        assignment[pair_index(i, j)] = -1;
        adj[static_cast<std::size_t>(c)][i] &= ~(std::uint64_t(1) << j);
        adj[static_cast<std::size_t>(c)][j] &= ~(std::uint64_t(1) << i);
    }

    // DFS over pairs in (j, i) order; true iff a counterexample coloring
    // (no monochromatic target set in any color) exists from here on.
    bool search(std::size_t pair_pos) {
        if (pair_pos == assignment.size())
            return true;
        // invert pair_pos -> (i, j)
        std::size_t j = 1;
        while (pair_index(0, j + 1) <= pair_pos)
            ++j;
        std::size_t i = pair_pos - pair_index(0, j);
        for (int c = 0; c < k; ++c) {
            if (completes_mono(i, j, c))
                continue;
            set_color(i, j, c);
            if (search(pair_pos + 1))
                return true;
            clear_color(i, j, c);
        }
        return false;
    }
};

PairColoring table_from_assignment(std::size_t n, int k, const std::vector<int>& assignment) {
    std::vector<Ordinal> ground;
    for (std::size_t v = 0; v < n; ++v)
        ground.push_back(Ordinal::from_natural(Nat(v)));
    return PairColoring::table(FinOrdSet::from_elements(std::move(ground)), k, assignment);
}

std::optional<ArrowResult> degenerate_shortcut(std::size_t n, const std::vector<std::size_t>& goals) {
    for (std::size_t g : goals) {
        if (g == 0 || (g == 1 && n >= 1))
            return ArrowResult{ArrowVerdict::holds, std::nullopt,
                               "degenerate goal " + std::to_string(g)};
    }
    return std::nullopt;
}

}  // namespace

ArrowResult check_arrow_finite(std::size_t n, const std::vector<std::size_t>& goals,
                               const ArrowOptions& options) {
    if (goals.empty())
        throw precondition_error("at least one goal is required");
    if (auto shortcut = degenerate_shortcut(n, goals))
        return *shortcut;

    const int k = static_cast<int>(goals.size());
    const std::size_t cap = options.cap.value_or(k == 2 ? 8 : 6);
    if (n > cap)
        return ArrowResult{ArrowVerdict::inconclusive, std::nullopt,
                           "n exceeds the exhaustive-search cap; supply a witness to refute"};
    if (n > kMaskBits)
        throw error("vertex count too large for exhaustive search");

    ArrowSearch s;
    s.n = n;
    s.goals = goals;
    s.k = k;
    s.assignment.assign(n < 2 ? 0 : n * (n - 1) / 2, -1);
    s.adj.assign(static_cast<std::size_t>(k), std::vector<std::uint64_t>(n, 0));
    if (s.search(0))
        return ArrowResult{ArrowVerdict::refuted, table_from_assignment(n, k, s.assignment),
                           "counterexample coloring found"};
    return ArrowResult{ArrowVerdict::holds, std::nullopt, "exhaustive search"};
}

ArrowResult check_arrow_witness(std::size_t n, const std::vector<std::size_t>& goals,
                                const PairColoring& candidate) {
    if (goals.empty())
        throw precondition_error("at least one goal is required");
    const TableColoring& t = candidate.as_table();
    if (t.ground.size() != n)
        throw precondition_error("witness ground set size differs from n");
    if (t.k != static_cast<int>(goals.size()))
        throw precondition_error("witness color count differs from the goal list");
    for (std::size_t v = 0; v < n; ++v)
        if (t.ground.elements()[v] != Ordinal::from_natural(Nat(v)))
            throw precondition_error("witness ground set must be {0..n-1}");
    for (int c = 0; c < t.k; ++c)
        if (find_homogeneous(candidate, c, goals[static_cast<std::size_t>(c)]))
            return ArrowResult{ArrowVerdict::inconclusive, std::nullopt,
                               "witness admits a monochromatic set of color " + std::to_string(c)};
    return ArrowResult{ArrowVerdict::refuted, candidate, "witness verified"};
}

PairColoring sierpinski_coloring(const Ordinal& bound) {
    if (bound <= Ordinal::omega())
        throw precondition_error("bound must exceed omega");
    return PairColoring::rule({RuleColoring::Kind::sierpinski, bound, Ordinal{}});
}

PairColoring decomposable_coloring(const Ordinal& alpha) {
    auto split = split_decomposable(alpha);
    if (!split)
        throw precondition_error("alpha is indecomposable (or below 2)");
    return PairColoring::rule({RuleColoring::Kind::decomposable, alpha, split->first});
}

ZeroHomogVerdict check_zero_homog_segment(const Ordinal& alpha, const IntervalSet& h) {
    auto split = split_decomposable(alpha);
    if (!split)
        throw precondition_error("alpha is indecomposable (or below 2)");
    if (!is_subset(h, IntervalSet::below(alpha)))
        throw precondition_error("H is not contained in [0, alpha)");

    const Ordinal& beta = split->first;
    ZeroHomogVerdict v;
    if (is_subset(h, IntervalSet::below(beta)))
        v.segment = 0;
    else if (is_subset(h, IntervalSet::interval(beta, alpha)))
        v.segment = 1;
    else {
        v.detail = "H straddles the split point; not 0-homogeneous";
        return v;
    }
    v.zero_homogeneous = true;
    v.type = order_type(h);
    v.type_below_alpha = v.type < alpha;
    v.detail = "confirmed: H lies in segment " + std::to_string(v.segment);
    return v;
}

Ordinal repeat_enum(const Ordinal& beta, const Nat& m, std::size_t scan_limit) {
    if (beta.is_zero())
        throw precondition_error("beta must be positive");
    if (m < 0)
        throw precondition_error("index must be non-negative");
    auto [i, j] = cantor_unpair(m);
    (void)j;  // j only spreads each i over infinitely many indices
    Nat seen = 0;
    for (std::size_t code = 0; code < scan_limit; ++code) {
        auto decoded = godel_decode(Nat(code));
        if (!decoded || *decoded >= beta)
            continue;
        if (seen == i)
            return *decoded;
        ++seen;
    }
    return Ordinal::zero();  // scan bound exceeded
}

}  // namespace ordcalc
