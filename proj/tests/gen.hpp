#ifndef ORDCALC_TESTS_GEN_HPP
#define ORDCALC_TESTS_GEN_HPP

// Deterministic random generators for property tests.

#include <algorithm>
#include <random>
#include <vector>

#include "ordcalc/coloring.hpp"
#include "ordcalc/interval_set.hpp"
#include "ordcalc/ordinal.hpp"

namespace ordgen {

using ordcalc::CnfTerm;
using ordcalc::FinOrdSet;
using ordcalc::IntervalSet;
using ordcalc::Nat;
using ordcalc::OrdInterval;
using ordcalc::Ordinal;

class Gen {
public:
    explicit Gen(std::uint64_t seed = 20260811u) : rng_(seed) {}

    std::size_t uniform(std::size_t lo, std::size_t hi) {  // inclusive
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }

    // Random CNF ordinal with exponents nested up to `depth` levels.
    Ordinal ordinal(int depth, std::size_t max_terms = 3, std::size_t max_coeff = 4) {
        if (depth <= 0)
            return Ordinal::from_natural(Nat(uniform(0, max_coeff)));
        std::size_t nterms = uniform(0, max_terms);
        std::vector<Ordinal> exps;
        for (std::size_t i = 0; i < nterms; ++i)
            exps.push_back(ordinal(depth - 1, max_terms, max_coeff));
        std::sort(exps.begin(), exps.end(), [](const Ordinal& a, const Ordinal& b) { return b < a; });
        exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
        std::vector<CnfTerm> terms;
        for (Ordinal& e : exps)
            terms.push_back({std::move(e), Nat(uniform(1, max_coeff))});
        return Ordinal::from_terms(std::move(terms));
    }

    // Random ordinal strictly below a positive bound. Not uniform; spreads
    // over small finite values, smaller leading exponents and smaller
    // leading coefficients.
    Ordinal ordinal_below(const Ordinal& bound) {
        if (bound.is_zero())
            throw std::logic_error("ordinal_below: bound must be positive");
        if (auto n = ordcalc::to_natural(bound)) {
            unsigned long limit = std::min<unsigned long>(n->convert_to<unsigned long>(), 1000);
            return Ordinal::from_natural(Nat(uniform(0, limit - 1)));
        }
        const CnfTerm& lead = bound.terms().front();
        for (;;) {
            switch (uniform(0, 2)) {
            case 0:
                return Ordinal::from_natural(Nat(uniform(0, 4)));
            case 1: {
                // drop below the leading w-power (exponent >= 1 here, so
                // anything with a smaller leading exponent qualifies)
                Ordinal e = ordinal_below(lead.exponent);
                std::vector<CnfTerm> terms;
                terms.push_back({e, Nat(uniform(1, 3))});
                Ordinal value = Ordinal::from_terms(std::move(terms));
                if (uniform(0, 1))
                    value = add(value, Ordinal::from_natural(Nat(uniform(0, 3))));
                return value;
            }
            default:
                if (lead.coefficient >= 2) {
                    std::vector<CnfTerm> terms;
                    unsigned long c = std::min<unsigned long>(
                        (lead.coefficient - 1).convert_to<unsigned long>(), 5);
                    terms.push_back({lead.exponent, Nat(uniform(1, c))});
                    Ordinal value = Ordinal::from_terms(std::move(terms));
                    std::vector<CnfTerm> pw;
                    pw.push_back({lead.exponent, 1});
                    return add(value, ordinal_below(Ordinal::from_terms(std::move(pw))));
                }
                break;
            }
        }
    }

    // Up to `count` distinct ordinals below bound, strictly increasing.
    std::vector<Ordinal> distinct_below(const Ordinal& bound, std::size_t count) {
        std::vector<Ordinal> out;
        for (std::size_t attempt = 0; attempt < count * 8 && out.size() < count; ++attempt)
            out.push_back(ordinal_below(bound));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        if (out.size() > count)
            out.resize(count);
        return out;
    }

    IntervalSet interval_set_below(const Ordinal& bound, std::size_t max_ranges = 3) {
        std::size_t k = uniform(0, max_ranges);
        std::vector<Ordinal> points = distinct_below(bound, 2 * k);
        std::vector<OrdInterval> ranges;
        for (std::size_t i = 0; i + 1 < points.size(); i += 2)
            ranges.push_back({points[i], points[i + 1]});
        return IntervalSet::from_intervals(std::move(ranges));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace ordgen

#endif
