#include "ordinals/parser.hpp"

#include <cctype>
#include <sstream>

#include "ordinals/natural_arith.hpp"

namespace ordinals {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    int peek() {
        skip_ws();
        return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1;
    }

    bool take(char ch) {
        if (peek() == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char ch, const char* what) {
        if (!take(ch)) fail(std::string("expected '") + ch + "' (" + what + ")");
    }

    [[noreturn]] void fail(const std::string& message) { throw ParseError(pos_, message); }

    std::size_t pos() const { return pos_; }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    Natural numeral() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected a numeral");
        return Natural::from_string(text_.substr(start, pos_ - start));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

Ordinal parse_sum(Cursor& cur);

Ordinal parse_atom(Cursor& cur) {
    int ch = cur.peek();
    if (ch == 'w') {
        cur.take('w');
        return Ordinal::omega();
    }
    if (ch == '(') {
        cur.take('(');
        Ordinal inner = parse_sum(cur);
        cur.expect(')', "closing parenthesis");
        return inner;
    }
    if (ch >= '0' && ch <= '9') return Ordinal(cur.numeral());
    cur.fail("expected 'w', a numeral, or '('");
}

Ordinal parse_power(Cursor& cur) {
    Ordinal base = parse_atom(cur);
    // Unsupported exponentiation propagates as the domain error it is,
    // distinct from syntax errors.
    if (cur.take('^')) return ord_pow(base, parse_power(cur));
    return base;
}

Ordinal parse_product(Cursor& cur) {
    Ordinal acc = parse_power(cur);
    for (;;) {
        if (cur.take('*')) acc = ord_mul(acc, parse_power(cur));
        else if (cur.take('@')) acc = nat_prod(acc, parse_power(cur));
        else return acc;
    }
}

Ordinal parse_sum(Cursor& cur) {
    Ordinal acc = parse_product(cur);
    for (;;) {
        if (cur.take('+')) acc = ord_add(acc, parse_product(cur));
        else if (cur.take('#')) acc = nat_sum(acc, parse_product(cur));
        else return acc;
    }
}

void expect_end(Cursor& cur) {
    if (!cur.at_end()) cur.fail("trailing input");
}

std::vector<Ordinal> parse_expr_list(Cursor& cur, int terminator) {
    std::vector<Ordinal> out;
    if (cur.peek() == terminator) return out;
    out.push_back(parse_sum(cur));
    while (cur.take(',')) out.push_back(parse_sum(cur));
    return out;
}

} // namespace

Ordinal parse_ordinal(std::string_view text) {
    Cursor cur(text);
    Ordinal value = parse_sum(cur);
    expect_end(cur);
    return value;
}

OmegaSequence parse_sequence(std::string_view text) {
    Cursor cur(text);
    cur.expect('[', "sequence literal");
    std::vector<Ordinal> prefix = parse_expr_list(cur, ';');
    cur.expect(';', "prefix/cycle separator");
    std::vector<Ordinal> cycle = parse_expr_list(cur, ']');
    if (cycle.empty()) cur.fail("cycle must be nonempty");
    cur.expect(']', "sequence literal");
    expect_end(cur);
    return OmegaSequence(std::move(prefix), std::move(cycle));
}

std::map<std::size_t, Ordinal> parse_vector(std::string_view text) {
    Cursor cur(text);
    cur.expect('{', "vector literal");
    std::map<std::size_t, Ordinal> entries;
    if (cur.peek() != '}') {
        do {
            std::size_t at = cur.pos();
            Natural idx = cur.numeral();
            if (!idx.fits_u64()) cur.fail("index too large");
            std::size_t i = static_cast<std::size_t>(idx.to_u64());
            cur.expect(':', "index/value separator");
            Ordinal v = parse_sum(cur);
            if (entries.count(i)) throw ParseError(at, "duplicate index");
            if (!v.is_zero()) entries.emplace(i, std::move(v));
        } while (cur.take(','));
    }
    cur.expect('}', "vector literal");
    expect_end(cur);
    return entries;
}

std::vector<Ordinal> parse_ordinal_list(std::string_view text) {
    Cursor cur(text);
    if (cur.at_end()) return {};
    std::vector<Ordinal> out;
    out.push_back(parse_sum(cur));
    while (cur.take(',')) out.push_back(parse_sum(cur));
    expect_end(cur);
    return out;
}

std::size_t parse_index(std::string_view text) {
    Cursor cur(text);
    Natural n = cur.numeral();
    expect_end(cur);
    if (!n.fits_u64()) throw ParseError(0, "number too large");
    return static_cast<std::size_t>(n.to_u64());
}

std::string format_vector(const std::map<std::size_t, Ordinal>& entries) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [i, v] : entries) {
        if (!first) out << ", ";
        first = false;
        out << i << ":" << v.str();
    }
    out << "}";
    return out.str();
}

} // namespace ordinals
