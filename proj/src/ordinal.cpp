#include "ordcalc/ordinal.hpp"

#include <algorithm>
#include <limits>

namespace ordcalc {

namespace {

// Guard against asking for results whose explicit CNF would not fit in
// memory (e.g. decompose_strong with an astronomical coefficient).
constexpr unsigned long kMaxExpansion = 10'000'000;

unsigned long to_expansion_count(const Nat& n, const char* what) {
    if (n > kMaxExpansion)
        throw error(std::string(what) + " too large to expand explicitly");
    return n.convert_to<unsigned long>();
}

}  // namespace

Ordinal::Ordinal(unchecked_t, std::vector<CnfTerm> terms) : terms_(std::move(terms)) {}

Ordinal Ordinal::one() {
    return from_natural(1);
}

Ordinal Ordinal::omega() {
    std::vector<CnfTerm> t;
    t.push_back({one(), 1});
    return Ordinal(unchecked_t{}, std::move(t));
}

Ordinal Ordinal::from_natural(const Nat& n) {
    if (n < 0)
        throw precondition_error("natural number must be non-negative");
    if (n == 0)
        return Ordinal{};
    std::vector<CnfTerm> t;
    t.push_back({Ordinal{}, n});
    return Ordinal(unchecked_t{}, std::move(t));
}

Ordinal Ordinal::from_terms(std::vector<CnfTerm> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coefficient < 1)
            throw precondition_error("CNF coefficient must be at least 1");
        if (i > 0 && cmp(terms[i - 1].exponent, terms[i].exponent) != std::strong_ordering::greater)
            throw precondition_error("CNF exponents must be strictly decreasing");
    }
    return Ordinal(unchecked_t{}, std::move(terms));
}

const Ordinal& Ordinal::lead_exponent() const {
    if (terms_.empty())
        throw precondition_error("zero has no leading exponent");
    return terms_.front().exponent;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    const auto& ta = a.terms_;
    const auto& tb = b.terms_;
    const std::size_t n = std::min(ta.size(), tb.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto e = ta[i].exponent <=> tb[i].exponent;
        if (e != std::strong_ordering::equal)
            return e;
        if (ta[i].coefficient != tb[i].coefficient)
            return ta[i].coefficient < tb[i].coefficient ? std::strong_ordering::less
                                                         : std::strong_ordering::greater;
    }
    // Equal prefix: the one with extra (smaller) trailing terms is larger.
    if (ta.size() != tb.size())
        return ta.size() < tb.size() ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool operator==(const Ordinal& a, const Ordinal& b) {
    return a.terms_ == b.terms_;
}

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b) {
    return a <=> b;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    const Ordinal& e = b.terms_.front().exponent;
    std::vector<CnfTerm> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0;
    while (i < a.terms_.size() && cmp(a.terms_[i].exponent, e) == std::strong_ordering::greater)
        out.push_back(a.terms_[i++]);
    if (i < a.terms_.size() && a.terms_[i].exponent == e) {
        out.push_back({e, a.terms_[i].coefficient + b.terms_.front().coefficient});
        out.insert(out.end(), b.terms_.begin() + 1, b.terms_.end());
    } else {
        out.insert(out.end(), b.terms_.begin(), b.terms_.end());
    }
    return Ordinal(Ordinal::unchecked_t{}, std::move(out));
}

Ordinal sub_left(const Ordinal& a, const Ordinal& b) {
    const auto& ta = a.terms_;
    const auto& tb = b.terms_;
    std::size_t i = 0;
    while (i < ta.size() && i < tb.size() && ta[i] == tb[i])
        ++i;
    if (i == ta.size() && i == tb.size())
        return Ordinal{};
    if (i == ta.size())  // a is a strict prefix of b
        return Ordinal(Ordinal::unchecked_t{},
                       std::vector<CnfTerm>(tb.begin() + static_cast<std::ptrdiff_t>(i), tb.end()));
    if (i == tb.size())
        throw precondition_error("sub_left requires a <= b");

    auto e = ta[i].exponent <=> tb[i].exponent;
    if (e == std::strong_ordering::greater)
        throw precondition_error("sub_left requires a <= b");
    if (e == std::strong_ordering::less)
        return Ordinal(Ordinal::unchecked_t{},
                       std::vector<CnfTerm>(tb.begin() + static_cast<std::ptrdiff_t>(i), tb.end()));
    if (ta[i].coefficient > tb[i].coefficient)
        throw precondition_error("sub_left requires a <= b");
    std::vector<CnfTerm> out;
    out.push_back({tb[i].exponent, tb[i].coefficient - ta[i].coefficient});
    out.insert(out.end(), tb.begin() + static_cast<std::ptrdiff_t>(i) + 1, tb.end());
    return Ordinal(Ordinal::unchecked_t{}, std::move(out));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
    if (a.is_zero() || b.is_zero())
        return Ordinal{};
    const Ordinal& e1 = a.terms_.front().exponent;
    std::vector<CnfTerm> out;
    for (const CnfTerm& t : b.terms_) {
        if (!t.exponent.is_zero()) {
            out.push_back({add(e1, t.exponent), t.coefficient});
        } else {
            // Finite right factor: scale the leading term, keep a's tail.
            out.push_back({e1, a.terms_.front().coefficient * t.coefficient});
            out.insert(out.end(), a.terms_.begin() + 1, a.terms_.end());
        }
    }
    return Ordinal(Ordinal::unchecked_t{}, std::move(out));
}

namespace {

Ordinal pow_finite_exponent(const Ordinal& a, const Nat& m);

// a^lambda for a >= 2 and lambda a nonzero limit ordinal (every exponent
// of lambda is >= 1).
Ordinal pow_limit_exponent(const Ordinal& a, const Ordinal& lambda) {
    const Ordinal one = Ordinal::one();
    if (to_natural(a)) {
        // n^{w^{b_1}*c_1 + ...} = w^{w^{b_1 - 1}*c_1 + ...} for finite n >= 2,
        // where b - 1 is left subtraction by 1 (so b - 1 = b for infinite b).
        std::vector<CnfTerm> exps;
        for (const CnfTerm& t : lambda.terms())
            exps.push_back({sub_left(one, t.exponent), t.coefficient});
        std::vector<CnfTerm> out;
        out.push_back({Ordinal::from_terms(std::move(exps)), 1});
        return Ordinal::from_terms(std::move(out));
    }
    std::vector<CnfTerm> out;
    out.push_back({mul(a.lead_exponent(), lambda), 1});
    return Ordinal::from_terms(std::move(out));
}

Ordinal pow_finite_exponent(const Ordinal& a, const Nat& m) {
    if (m == 0)
        return Ordinal::one();
    if (auto n = to_natural(a)) {
        if (m > 1'000'000)
            throw error("finite power too large to compute explicitly");
        return Ordinal::from_natural(boost::multiprecision::pow(*n, m.convert_to<unsigned>()));
    }
    if (is_indecomposable(a)) {
        std::vector<CnfTerm> out;
        out.push_back({mul(a.lead_exponent(), Ordinal::from_natural(m)), 1});
        return Ordinal::from_terms(std::move(out));
    }
    // Decomposable infinite base: square-and-multiply. Term counts grow
    // linearly with m, so keep the exponent within expansion bounds.
    unsigned long e = to_expansion_count(m, "finite exponent");
    Ordinal acc = Ordinal::one();
    Ordinal base = a;
    while (e > 0) {
        if (e & 1UL)
            acc = mul(acc, base);
        e >>= 1;
        if (e > 0)
            base = mul(base, base);
    }
    return acc;
}

}  // namespace

Ordinal pow(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero())
        return Ordinal::one();
    if (a.is_zero())
        return Ordinal{};
    if (a == Ordinal::one())
        return Ordinal::one();

    // Split b = lambda + m with lambda the limit part and m finite.
    std::vector<CnfTerm> limit_terms;
    Nat m = 0;
    for (const CnfTerm& t : b.terms()) {
        if (t.exponent.is_zero())
            m = t.coefficient;
        else
            limit_terms.push_back(t);
    }
    Ordinal result = Ordinal::one();
    if (!limit_terms.empty())
        result = pow_limit_exponent(a, Ordinal::from_terms(std::move(limit_terms)));
    if (m != 0)
        result = mul(result, pow_finite_exponent(a, m));
    return result;
}

Ordinal min_ord(const Ordinal& a, const Ordinal& b) {
    return cmp(a, b) == std::strong_ordering::greater ? b : a;
}

bool is_indecomposable(const Ordinal& a) {
    return a.terms().size() == 1 && a.terms().front().coefficient == 1;
}

std::optional<std::pair<Ordinal, Ordinal>> split_decomposable(const Ordinal& a) {
    if (a.is_zero() || is_indecomposable(a))
        return std::nullopt;
    std::vector<CnfTerm> head(a.terms_.begin(), a.terms_.end());
    std::vector<CnfTerm> last;
    last.push_back({head.back().exponent, 1});
    if (head.back().coefficient == 1)
        head.pop_back();
    else
        head.back().coefficient -= 1;
    return std::make_pair(Ordinal(Ordinal::unchecked_t{}, std::move(head)),
                          Ordinal(Ordinal::unchecked_t{}, std::move(last)));
}

std::vector<Ordinal> decompose_strong(const Ordinal& t) {
    std::vector<Ordinal> out;
    for (const CnfTerm& term : t.terms()) {
        unsigned long reps = to_expansion_count(term.coefficient, "CNF coefficient");
        std::vector<CnfTerm> single;
        single.push_back({term.exponent, 1});
        Ordinal summand = Ordinal::from_terms(std::move(single));
        for (unsigned long i = 0; i < reps; ++i)
            out.push_back(summand);
    }
    return out;
}

Nat cantor_pair(const Nat& x, const Nat& y) {
    Nat s = x + y;
    return s * (s + 1) / 2 + y;
}

std::pair<Nat, Nat> cantor_unpair(const Nat& z) {
    Nat discriminant = 8 * z + 1;
    Nat s = (boost::multiprecision::sqrt(discriminant) - 1) / 2;
    while (s * (s + 1) / 2 > z)
        --s;
    while ((s + 1) * (s + 2) / 2 <= z)
        ++s;
    Nat y = z - s * (s + 1) / 2;
    return {s - y, y};
}

Nat godel_code(const Ordinal& a) {
    // List code over term codes, folded from the right; 0 is the empty list,
    // cons(h, t) = pair(h, t) + 1. A term codes as pair(code(exp), coeff - 1).
    Nat acc = 0;
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        Nat term_code = cantor_pair(godel_code(it->exponent), it->coefficient - 1);
        acc = cantor_pair(term_code, acc) + 1;
    }
    return acc;
}

std::optional<Ordinal> godel_decode(const Nat& n) {
    if (n < 0)
        return std::nullopt;
    std::vector<CnfTerm> terms;
    Nat rest = n;
    while (rest > 0) {
        auto [term_code, tail] = cantor_unpair(rest - 1);
        auto [exp_code, coeff_minus_1] = cantor_unpair(term_code);
        auto exp = godel_decode(exp_code);
        if (!exp)
            return std::nullopt;
        if (!terms.empty() &&
            cmp(terms.back().exponent, *exp) != std::strong_ordering::greater)
            return std::nullopt;  // not in CNF, so not in the image
        terms.push_back({std::move(*exp), coeff_minus_1 + 1});
        rest = tail;
    }
    return Ordinal(Ordinal::unchecked_t{}, std::move(terms));
}

Ordinal from_natural(const Nat& n) {
    return Ordinal::from_natural(n);
}

std::optional<Nat> to_natural(const Ordinal& a) {
    if (a.is_zero())
        return Nat(0);
    if (a.terms().size() == 1 && a.terms().front().exponent.is_zero())
        return a.terms().front().coefficient;
    return std::nullopt;
}

}  // namespace ordcalc
