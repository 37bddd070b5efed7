#ifndef ORDCALC_DERIVATION_HPP
#define ORDCALC_DERIVATION_HPP

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ordcalc/ordinal.hpp"

namespace ordcalc {

// The claim source -> (goals[0], goals[1])^2: every 2-coloring of pairs
// from `source` admits an i-monochromatic subset of order type goals[i].
// Where a rule fixes an order, goals[0] is the finite goal.
struct PartitionStatement {
    Ordinal source;
    std::array<Ordinal, 2> goals;

    bool operator==(const PartitionStatement&) const = default;
};

enum class Rule { degenerate, trivial_pair, swap_goals, monotone, em_step };

const char* rule_name(Rule r);

// One checked side condition: its name and the concrete values involved,
// so verification replays without re-deriving.
struct Evidence {
    std::string condition;
    std::vector<std::pair<std::string, Ordinal>> values;
    bool ok = true;

    bool operator==(const Evidence&) const = default;
};

// A tree of rule applications. Every constructor function below validates
// its side conditions, so freshly built trees pass verify_derivation.
struct Derivation {
    PartitionStatement conclusion;
    Rule rule = Rule::degenerate;
    std::vector<Evidence> evidence;
    std::vector<Derivation> premises;

    bool operator==(const Derivation&) const = default;
};

// alpha -> (goals) via a goal that at most one element realises
// (some goals[i] <= 1 with alpha >= goals[i]).
Derivation rule_degenerate(const Ordinal& alpha, const std::array<Ordinal, 2>& goals);

// alpha -> (2, alpha) for alpha >= 2: either some pair is 0-colored or
// everything is 1-colored.
Derivation rule_trivial_pair(const Ordinal& alpha);

// Color renaming: goals reversed.
Derivation rule_swap(Derivation premise);

// Weakening: enlarge the source, shrink goals pointwise.
Derivation rule_monotone(Derivation premise, const Ordinal& source,
                         const std::array<Ordinal, 2>& goals);

// The Erdos-Milner theorem as a trusted rule: from alpha -> (k, gamma)
// with finite k >= 2, indecomposable alpha and beta > 0, conclude
// alpha*beta -> (2k, min(gamma, w*beta)). The countability of beta is
// automatic below epsilon_0 and recorded in the evidence, not checked.
Derivation rule_em_step(Derivation premise, const Ordinal& beta);

// The headline induction: w^{1+nu*n} -> (2^n, w^{1+nu}), built from the
// degenerate base (n = 0), the trivial pair relation (n = 1) and the
// em step with beta = w^nu.
Derivation em_headline(const Ordinal& nu, std::size_t n);

// The instance w^{n*k} -> (w^n, k): degenerate when n or k is 0,
// otherwise the headline at nu = n-1 with k-1 steps, weakened from
// 2^{k-1} to k and color-swapped.
Derivation larson_instance(std::size_t n, std::size_t k);

struct VerifyResult {
    bool ok = false;
    std::string node_path;  // offending node when !ok, e.g. "root.premises[0]"
    std::string message;
};

// Re-checks every node of the tree (rule shape, side conditions,
// arithmetic) from ordinal arithmetic alone.
VerifyResult verify_derivation(const Derivation& d);

}  // namespace ordcalc

#endif
