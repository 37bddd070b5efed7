#include "ordcalc/parse.hpp"

#include <cctype>

namespace ordcalc {

namespace {

constexpr std::string_view kOmegaUtf8 = "\xcf\x89";  // lowercase omega

constexpr int kMaxParseDepth = 500;

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }

    void enter() {
        if (++depth_ > kMaxParseDepth)
            throw parse_error(pos_, "a less deeply nested expression");
    }
    void leave() { --depth_; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what) {
        if (!accept(c))
            throw parse_error(pos_, what);
    }

    bool accept_omega() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == 'w') {
            ++pos_;
            return true;
        }
        if (text_.substr(pos_).starts_with(kOmegaUtf8)) {
            pos_ += kOmegaUtf8.size();
            return true;
        }
        return false;
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    Nat read_natural() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw parse_error(pos_, "a natural number");
        // literals are decimal; drop leading zeros so cpp_int does not
        // read them as an octal prefix
        std::string_view digits = text_.substr(start, pos_ - start);
        while (digits.size() > 1 && digits.front() == '0')
            digits.remove_prefix(1);
        return Nat(std::string(digits));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

OrdExpr binary(OrdExpr::Kind kind, OrdExpr lhs, OrdExpr rhs) {
    OrdExpr e;
    e.kind = kind;
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
}

OrdExpr parse_expr_nt(Scanner& sc);

OrdExpr parse_atom(Scanner& sc) {
    if (sc.accept('(')) {
        sc.enter();
        OrdExpr inner = parse_expr_nt(sc);
        sc.expect(')', "')'");
        sc.leave();
        return inner;
    }
    if (sc.accept_omega()) {
        OrdExpr e;
        e.kind = OrdExpr::Kind::omega;
        return e;
    }
    if (sc.peek_digit()) {
        OrdExpr e;
        e.kind = OrdExpr::Kind::nat;
        e.value = sc.read_natural();
        return e;
    }
    throw parse_error(sc.pos(), "'w', a natural number, or '('");
}

OrdExpr parse_factor(Scanner& sc) {
    OrdExpr base = parse_atom(sc);
    if (sc.accept('^')) {
        sc.enter();
        OrdExpr rhs = parse_factor(sc);
        sc.leave();
        return binary(OrdExpr::Kind::pow, std::move(base), std::move(rhs));
    }
    return base;
}

OrdExpr parse_term(Scanner& sc) {
    OrdExpr e = parse_factor(sc);
    while (sc.accept('*'))
        e = binary(OrdExpr::Kind::mul, std::move(e), parse_factor(sc));
    return e;
}

OrdExpr parse_expr_nt(Scanner& sc) {
    OrdExpr e = parse_term(sc);
    while (sc.accept('+'))
        e = binary(OrdExpr::Kind::add, std::move(e), parse_term(sc));
    return e;
}

// True when render(a) is already a valid `factor`, so it may appear as a
// "^" right operand without parentheses (naturals and w-power towers).
bool renders_as_factor(const Ordinal& a) {
    if (to_natural(a))
        return true;
    return a.terms().size() == 1 && a.terms().front().coefficient == 1 &&
           renders_as_factor(a.terms().front().exponent);
}

}  // namespace

OrdExpr parse_expr(std::string_view text) {
    Scanner sc(text);
    OrdExpr e = parse_expr_nt(sc);
    if (!sc.eof())
        throw parse_error(sc.pos(), "end of input, '+', '*', or '^'");
    return e;
}

Ordinal eval(const OrdExpr& e) {
    switch (e.kind) {
    case OrdExpr::Kind::nat:
        return Ordinal::from_natural(e.value);
    case OrdExpr::Kind::omega:
        return Ordinal::omega();
    case OrdExpr::Kind::add:
        return add(eval(e.children[0]), eval(e.children[1]));
    case OrdExpr::Kind::mul:
        return mul(eval(e.children[0]), eval(e.children[1]));
    case OrdExpr::Kind::pow:
        return pow(eval(e.children[0]), eval(e.children[1]));
    }
    throw std::logic_error("unreachable expression kind");
}

Ordinal parse_ordinal(std::string_view text) {
    return eval(parse_expr(text));
}

std::string render(const Ordinal& a, bool unicode) {
    if (a.is_zero())
        return "0";
    const std::string w = unicode ? std::string(kOmegaUtf8) : "w";
    std::string out;
    for (const CnfTerm& t : a.terms()) {
        if (!out.empty())
            out += "+";
        if (t.exponent.is_zero()) {
            out += t.coefficient.str();
            continue;
        }
        if (t.exponent == Ordinal::one())
            out += w;
        else if (renders_as_factor(t.exponent))
            out += w + "^" + render(t.exponent, unicode);
        else
            out += w + "^(" + render(t.exponent, unicode) + ")";
        if (t.coefficient != 1)
            out += "*" + t.coefficient.str();
    }
    return out;
}

IntervalSet parse_interval_set(std::string_view text) {
    Scanner sc(text);
    sc.skip_ws();
    if (std::string_view rest = text.substr(sc.pos()); rest.starts_with("empty")) {
        Scanner tail(rest.substr(5));
        if (!tail.eof())
            throw parse_error(sc.pos() + 5 + tail.pos(), "end of input");
        return IntervalSet{};
    }
    std::vector<OrdInterval> ranges;
    do {
        sc.expect('[', "'['");
        OrdExpr lo = parse_expr_nt(sc);
        sc.expect(',', "','");
        OrdExpr hi = parse_expr_nt(sc);
        sc.expect(')', "')'");
        ranges.push_back({eval(lo), eval(hi)});
    } while (sc.accept('+'));
    if (!sc.eof())
        throw parse_error(sc.pos(), "end of input or '+'");
    return IntervalSet::from_intervals(std::move(ranges));
}

std::string render_interval_set(const IntervalSet& s, bool unicode) {
    if (s.empty())
        return "empty";
    std::string out;
    for (const OrdInterval& r : s.intervals()) {
        if (!out.empty())
            out += "+";
        out += "[" + render(r.lo, unicode) + "," + render(r.hi, unicode) + ")";
    }
    return out;
}

Nat parse_natural(std::string_view text) {
    Scanner sc(text);
    Nat n = sc.read_natural();
    if (!sc.eof())
        throw parse_error(sc.pos(), "end of input");
    return n;
}

std::vector<Ordinal> parse_ordinal_list(std::string_view text) {
    std::vector<Ordinal> out;
    std::size_t start = 0;
    Scanner probe(text);
    if (probe.eof())
        return out;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view piece =
            comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
        out.push_back(parse_ordinal(piece));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

}  // namespace ordcalc
