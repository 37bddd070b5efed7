#include "ordcalc/derivation.hpp"

namespace ordcalc {

const char* rule_name(Rule r) {
    switch (r) {
    case Rule::degenerate:
        return "degenerate";
    case Rule::trivial_pair:
        return "trivial_pair";
    case Rule::swap_goals:
        return "swap";
    case Rule::monotone:
        return "monotone";
    case Rule::em_step:
        return "em_step";
    }
    return "unknown";
}

namespace {

Evidence checked(std::string condition, std::vector<std::pair<std::string, Ordinal>> values) {
    return Evidence{std::move(condition), std::move(values), true};
}

const Ordinal* find_value(const Derivation& d, const std::string& name) {
    for (const Evidence& e : d.evidence)
        for (const auto& [n, v] : e.values)
            if (n == name)
                return &v;
    return nullptr;
}

}  // namespace

Derivation rule_degenerate(const Ordinal& alpha, const std::array<Ordinal, 2>& goals) {
    const Ordinal one = Ordinal::one();
    int which = -1;
    for (int i = 0; i < 2; ++i)
        if (goals[static_cast<std::size_t>(i)] <= one &&
            goals[static_cast<std::size_t>(i)] <= alpha) {
            which = i;
            break;
        }
    if (which < 0)
        throw precondition_error("no degenerate goal: some goal must be <= 1 and <= alpha");
    const Ordinal& g = goals[static_cast<std::size_t>(which)];
    Derivation d;
    d.rule = Rule::degenerate;
    d.conclusion = {alpha, goals};
    d.evidence.push_back(checked("some goal <= 1 and <= alpha",
                                 {{"goal", g}, {"index", Ordinal::from_natural(which)}, {"alpha", alpha}}));
    return d;
}

Derivation rule_trivial_pair(const Ordinal& alpha) {
    if (alpha < Ordinal::from_natural(2))
        throw precondition_error("alpha must be at least 2");
    Derivation d;
    d.rule = Rule::trivial_pair;
    d.conclusion = {alpha, {Ordinal::from_natural(2), alpha}};
    d.evidence.push_back(checked("alpha >= 2", {{"alpha", alpha}}));
    return d;
}

Derivation rule_swap(Derivation premise) {
    Derivation d;
    d.rule = Rule::swap_goals;
    d.conclusion = {premise.conclusion.source,
                    {premise.conclusion.goals[1], premise.conclusion.goals[0]}};
    d.premises.push_back(std::move(premise));
    return d;
}

Derivation rule_monotone(Derivation premise, const Ordinal& source,
                         const std::array<Ordinal, 2>& goals) {
    const PartitionStatement& p = premise.conclusion;
    if (source < p.source)
        throw precondition_error("monotone step cannot shrink the source");
    for (std::size_t i = 0; i < 2; ++i)
        if (goals[i] > p.goals[i])
            throw precondition_error("monotone step cannot grow a goal");
    Derivation d;
    d.rule = Rule::monotone;
    d.conclusion = {source, goals};
    d.evidence.push_back(checked("source' >= source", {{"source'", source}, {"source", p.source}}));
    d.evidence.push_back(checked("goals' <= goals pointwise",
                                 {{"goal0'", goals[0]}, {"goal1'", goals[1]}}));
    d.premises.push_back(std::move(premise));
    return d;
}

Derivation rule_em_step(Derivation premise, const Ordinal& beta) {
    const PartitionStatement& p = premise.conclusion;
    const Ordinal& alpha = p.source;
    const Ordinal& gamma = p.goals[1];
    auto k = to_natural(p.goals[0]);
    if (!k)
        throw precondition_error("em step: premise goal k must be finite");
    if (*k < 2)
        throw precondition_error("em step: k must be at least 2");
    if (!is_indecomposable(alpha))
        throw precondition_error("em step: alpha is not indecomposable");
    if (beta.is_zero())
        throw precondition_error("em step: beta must be positive");

    Derivation d;
    d.rule = Rule::em_step;
    d.conclusion = {mul(alpha, beta),
                    {Ordinal::from_natural(2 * *k), min_ord(gamma, mul(Ordinal::omega(), beta))}};
    d.evidence.push_back(checked("k finite and >= 2", {{"k", p.goals[0]}}));
    d.evidence.push_back(checked("alpha indecomposable", {{"alpha", alpha}}));
    d.evidence.push_back(checked("beta > 0", {{"beta", beta}}));
    d.evidence.push_back(
        checked("beta countable (automatic below epsilon_0, recorded only)", {{"beta", beta}}));
    d.premises.push_back(std::move(premise));
    return d;
}

Derivation em_headline(const Ordinal& nu, std::size_t n) {
    const Ordinal one = Ordinal::one();
    const Ordinal w = Ordinal::omega();
    if (n == 0) {
        Ordinal target = pow(w, add(one, mul(nu, Ordinal::zero())));  // = w
        return rule_degenerate(target, {one, pow(w, add(one, nu))});
    }
    if (n == 1)
        return rule_trivial_pair(pow(w, add(one, nu)));
    return rule_em_step(em_headline(nu, n - 1), pow(w, nu));
}

Derivation larson_instance(std::size_t n, std::size_t k) {
    const Ordinal w = Ordinal::omega();
    const Ordinal ord_n = Ordinal::from_natural(Nat(n));
    const Ordinal ord_k = Ordinal::from_natural(Nat(k));
    const Ordinal source = pow(w, Ordinal::from_natural(Nat(n) * Nat(k)));
    const Ordinal w_n = pow(w, ord_n);
    if (k == 0 || n == 0)
        return rule_degenerate(source, {w_n, ord_k});

    Derivation d = em_headline(Ordinal::from_natural(Nat(n) - 1), k - 1);
    d = rule_monotone(std::move(d), source, {ord_k, w_n});
    return rule_swap(std::move(d));
}

namespace {

struct Verifier {
    VerifyResult fail(const std::string& path, const std::string& message) {
        return VerifyResult{false, path, message};
    }

    VerifyResult check(const Derivation& d, const std::string& path) {
        for (std::size_t i = 0; i < d.premises.size(); ++i) {
            VerifyResult r = check(d.premises[i], path + ".premises[" + std::to_string(i) + "]");
            if (!r.ok)
                return r;
        }
        for (const Evidence& e : d.evidence)
            if (!e.ok)
                return fail(path, "side condition recorded as failed: " + e.condition);
        switch (d.rule) {
        case Rule::degenerate:
            return check_degenerate(d, path);
        case Rule::trivial_pair:
            return check_trivial_pair(d, path);
        case Rule::swap_goals:
            return check_swap(d, path);
        case Rule::monotone:
            return check_monotone(d, path);
        case Rule::em_step:
            return check_em_step(d, path);
        }
        return fail(path, "unknown rule");
    }

    VerifyResult check_arity(const Derivation& d, const std::string& path, std::size_t want,
                             VerifyResult* out) {
        if (d.premises.size() != want) {
            *out = fail(path, std::string(rule_name(d.rule)) + " expects " +
                                  std::to_string(want) + " premise(s)");
            return *out;
        }
        out->ok = true;
        return *out;
    }

    VerifyResult check_degenerate(const Derivation& d, const std::string& path) {
        VerifyResult r;
        if (!check_arity(d, path, 0, &r).ok)
            return r;
        const Ordinal one = Ordinal::one();
        for (const Ordinal& g : d.conclusion.goals)
            if (g <= one && g <= d.conclusion.source)
                return VerifyResult{true, "", ""};
        return fail(path, "degenerate: no goal is <= 1 and <= the source");
    }

    VerifyResult check_trivial_pair(const Derivation& d, const std::string& path) {
        VerifyResult r;
        if (!check_arity(d, path, 0, &r).ok)
            return r;
        if (d.conclusion.source < Ordinal::from_natural(2))
            return fail(path, "trivial pair: source must be at least 2");
        if (d.conclusion.goals[0] != Ordinal::from_natural(2) ||
            d.conclusion.goals[1] != d.conclusion.source)
            return fail(path, "trivial pair: conclusion must be source -> (2, source)");
        return VerifyResult{true, "", ""};
    }

    VerifyResult check_swap(const Derivation& d, const std::string& path) {
        VerifyResult r;
        if (!check_arity(d, path, 1, &r).ok)
            return r;
        const PartitionStatement& p = d.premises[0].conclusion;
        if (d.conclusion.source != p.source)
            return fail(path, "swap: source changed");
        if (d.conclusion.goals[0] != p.goals[1] || d.conclusion.goals[1] != p.goals[0])
            return fail(path, "swap: goals are not the premise goals reversed");
        return VerifyResult{true, "", ""};
    }

    VerifyResult check_monotone(const Derivation& d, const std::string& path) {
        VerifyResult r;
        if (!check_arity(d, path, 1, &r).ok)
            return r;
        const PartitionStatement& p = d.premises[0].conclusion;
        if (d.conclusion.source < p.source)
            return fail(path, "monotone: source shrank");
        for (std::size_t i = 0; i < 2; ++i)
            if (d.conclusion.goals[i] > p.goals[i])
                return fail(path, "monotone: goal " + std::to_string(i) + " grew");
        return VerifyResult{true, "", ""};
    }

    VerifyResult check_em_step(const Derivation& d, const std::string& path) {
        VerifyResult r;
        if (!check_arity(d, path, 1, &r).ok)
            return r;
        const PartitionStatement& p = d.premises[0].conclusion;
        const Ordinal& alpha = p.source;
        auto k = to_natural(p.goals[0]);
        if (!k)
            return fail(path, "em step: premise goal k is infinite");
        if (*k < 2)
            return fail(path, "em step: k < 2");
        if (!is_indecomposable(alpha))
            return fail(path, "em step: alpha is not indecomposable");
        const Ordinal* beta = find_value(d, "beta");
        if (!beta)
            return fail(path, "em step: no beta recorded in the evidence");
        if (beta->is_zero())
            return fail(path, "em step: beta = 0");
        if (d.conclusion.source != mul(alpha, *beta))
            return fail(path, "em step: conclusion source differs from alpha*beta");
        if (d.conclusion.goals[0] != Ordinal::from_natural(2 * *k))
            return fail(path, "em step: first goal differs from 2k");
        if (d.conclusion.goals[1] != min_ord(p.goals[1], mul(Ordinal::omega(), *beta)))
            return fail(path, "em step: second goal differs from min(gamma, w*beta)");
        return VerifyResult{true, "", ""};
    }
};

}  // namespace

VerifyResult verify_derivation(const Derivation& d) {
    Verifier v;
    VerifyResult r = v.check(d, "root");
    if (r.ok)
        r.message = "all nodes verified";
    return r;
}

}  // namespace ordcalc
