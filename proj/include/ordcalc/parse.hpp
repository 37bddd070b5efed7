#ifndef ORDCALC_PARSE_HPP
#define ORDCALC_PARSE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ordcalc/interval_set.hpp"
#include "ordcalc/ordinal.hpp"

namespace ordcalc {

// Syntax error with the byte offset it occurred at and what was expected.
class parse_error : public error {
public:
    parse_error(std::size_t offset, const std::string& expected)
        : error("syntax error at offset " + std::to_string(offset) + ": expected " + expected),
          offset_(offset),
          expected_(expected) {}

    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

// Abstract syntax for ordinal expressions:
//
//     expr   := term ("+" term)*
//     term   := factor ("*" factor)*
//     factor := atom ("^" factor)?
//     atom   := "w" | NAT | "(" expr ")"
//
// "^" is right-associative; "w" (or the Unicode omega) denotes w.
struct OrdExpr {
    enum class Kind { nat, omega, add, mul, pow };

    Kind kind = Kind::nat;
    Nat value;                       // Kind::nat
    std::vector<OrdExpr> children;   // add/mul/pow: exactly two
};

OrdExpr parse_expr(std::string_view text);
Ordinal eval(const OrdExpr& e);

// parse + eval in one step.
Ordinal parse_ordinal(std::string_view text);

// Canonical CNF rendering, e.g. "w^(w+1)*3+w". parse_ordinal(render(x)) == x.
std::string render(const Ordinal& a, bool unicode = false);

// Interval sets: "[a,b)" ranges joined by "+", or "empty".
IntervalSet parse_interval_set(std::string_view text);
std::string render_interval_set(const IntervalSet& s, bool unicode = false);

// Unbounded decimal natural.
Nat parse_natural(std::string_view text);

// Comma-separated ordinal expressions (used by CLI list flags); empty
// input yields the empty list.
std::vector<Ordinal> parse_ordinal_list(std::string_view text);

}  // namespace ordcalc

#endif
