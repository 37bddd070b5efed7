#ifndef ORDCALC_ORDINAL_HPP
#define ORDCALC_ORDINAL_HPP

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordcalc {

// Unbounded natural number. Negative values never appear in valid data;
// factory functions reject them.
using Nat = boost::multiprecision::cpp_int;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A stated precondition of an operation does not hold. The message names
// the violated condition.
class precondition_error : public error {
public:
    using error::error;
};

struct CnfTerm;

// An ordinal below epsilon_0 in Cantor normal form:
//
//     w^{e_1}*c_1 + ... + w^{e_n}*c_n,   e_1 > ... > e_n,  c_i >= 1,
//
// stored as the term list (empty list = 0). The representation is
// canonical: two Ordinals are equal iff their term lists are identical.
// Values are immutable once constructed and safe to share across threads.
class Ordinal {
public:
    Ordinal() = default;  // zero

    static Ordinal zero() { return Ordinal{}; }
    static Ordinal one();
    static Ordinal omega();
    static Ordinal from_natural(const Nat& n);

    // Validates the CNF invariants (strictly decreasing exponents,
    // coefficients >= 1) and throws precondition_error on violation.
    static Ordinal from_terms(std::vector<CnfTerm> terms);

    const std::vector<CnfTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Leading exponent; requires a nonzero value.
    const Ordinal& lead_exponent() const;

    friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
    friend bool operator==(const Ordinal& a, const Ordinal& b);

private:
    struct unchecked_t {};
    Ordinal(unchecked_t, std::vector<CnfTerm> terms);

    std::vector<CnfTerm> terms_;

    friend Ordinal add(const Ordinal&, const Ordinal&);
    friend Ordinal sub_left(const Ordinal&, const Ordinal&);
    friend Ordinal mul(const Ordinal&, const Ordinal&);
    friend Ordinal pow(const Ordinal&, const Ordinal&);
    friend std::optional<std::pair<Ordinal, Ordinal>> split_decomposable(const Ordinal&);
    friend std::optional<Ordinal> godel_decode(const Nat&);
};

struct CnfTerm {
    Ordinal exponent;
    Nat coefficient;

    bool operator==(const CnfTerm&) const = default;
};

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b);

// Ordinal sum a + b: terms of a below b's leading exponent are absorbed.
Ordinal add(const Ordinal& a, const Ordinal& b);

// The unique g with a + g = b; requires a <= b.
Ordinal sub_left(const Ordinal& a, const Ordinal& b);

// Ordinal product a * b (left-distributive over the right argument).
Ordinal mul(const Ordinal& a, const Ordinal& b);

// Ordinal exponentiation, closed below epsilon_0. Convention: 0^0 = 1,
// 0^b = 0 for b > 0. Throws error when the exact result is too large to
// write out term by term.
Ordinal pow(const Ordinal& a, const Ordinal& b);

Ordinal min_ord(const Ordinal& a, const Ordinal& b);

// True iff a is additively indecomposable, i.e. a = w^e (single term,
// coefficient 1). 1 = w^0 counts; 0 does not.
bool is_indecomposable(const Ordinal& a);

// For decomposable a (a >= 2, not a power of w): the canonical split
// (b, c) with add(b, c) = a and b, c < a, where c is the last
// indecomposable summand and b the rest. nullopt for 0, 1 and w-powers.
std::optional<std::pair<Ordinal, Ordinal>> split_decomposable(const Ordinal& a);

// The indecomposable summands of t in non-increasing order: w^{e_1}
// repeated c_1 times, and so on. Folding add over the result gives t back.
std::vector<Ordinal> decompose_strong(const Ordinal& t);

// Injective coding of ordinals into naturals via Cantor pairing folded
// over the term list. godel_decode inverts it and returns nullopt for
// naturals outside the image.
Nat godel_code(const Ordinal& a);
std::optional<Ordinal> godel_decode(const Nat& n);

Ordinal from_natural(const Nat& n);
std::optional<Nat> to_natural(const Ordinal& a);

// Cantor pairing on naturals, shared by godel coding and enumeration.
Nat cantor_pair(const Nat& x, const Nat& y);
std::pair<Nat, Nat> cantor_unpair(const Nat& z);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return mul(a, b); }

}  // namespace ordcalc

#endif
