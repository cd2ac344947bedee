#ifndef ORDINALS_PARSER_HPP
#define ORDINALS_PARSER_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ordinals/omega_seq.hpp"
#include "ordinals/ordinal.hpp"

namespace ordinals {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("parse error at position " + std::to_string(position)
                             + ": " + message),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Evaluates an ordinal expression:
//   expr := sum ; sum := prod (('+'|'#') prod)* ; prod := pw (('*'|'@') pw)*
//   pw := atom ['^' pw] ; atom := 'w' | NAT | '(' expr ')'
// '+' and '*' are the classical operations, '#' and '@' the natural ones,
// '^' is right-associative. Whitespace is ignored.
Ordinal parse_ordinal(std::string_view text);

// `[e0, e1, ... ; c0, c1, ...]` with ordinal expressions as entries;
// the prefix may be empty, the cycle may not.
OmegaSequence parse_sequence(std::string_view text);

// `{i:EXPR, j:EXPR, ...}`; omitted indices are 0. Zero values are dropped.
std::map<std::size_t, Ordinal> parse_vector(std::string_view text);

// Comma-separated ordinal expressions; empty input is an empty list.
std::vector<Ordinal> parse_ordinal_list(std::string_view text);

// Decimal numeral -> size_t (for CLI arguments such as cuts and seeds).
std::size_t parse_index(std::string_view text);

std::string format_vector(const std::map<std::size_t, Ordinal>& entries);

} // namespace ordinals

#endif
