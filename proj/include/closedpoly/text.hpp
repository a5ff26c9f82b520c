#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "multipoly.hpp"
#include "order.hpp"

namespace closedpoly {

struct ParsedInput {
    MultiPoly poly;
    std::size_t nvars; // largest variable index seen (at least 1)
    std::string source;
};

/// Grammar (whitespace-insensitive):
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := coeff ['*' mono] | mono
///   coeff  := int | int '/' posint
///   mono   := factor ('*' factor)*
///   factor := 'x' posint ['^' int]
/// min_nvars widens the ambient space beyond the largest index seen.
/// Throws ParseError with line and column.
ParsedInput parse_poly(std::string_view text, std::size_t min_nvars = 1);

/// Descending rendering under order, re-parseable by parse_poly.
std::string render_poly(const MultiPoly& f, const OrderSpec& order = OrderSpec::grlex());

} // namespace closedpoly
