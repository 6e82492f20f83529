#ifndef ADJMIN_IO_HPP
#define ADJMIN_IO_HPP

#include <string>

#include "adjmin/fiber.hpp"
#include "adjmin/grid.hpp"
#include "adjmin/groebner.hpp"

namespace adjmin {

// Accepts either the ASCII grid format ('#' box, '.' or ' ' absent, one line
// per anchor row, leading blank lines/columns significant) or a JSON document
// {"boxes": [[row, col], ...]}.  Throws ParseError.
Configuration parse_configuration(const std::string& text);

// Canonical JSON document; parse(serialize(c)) == c.
std::string serialize_configuration(const Configuration& c);

// '#'/'.' rendering of the anchor grid.
std::string ascii_grid(const Configuration& c);

// JSON document {"entries": [[row, col, value], ...]}.  Throws ParseError.
Table parse_table(const std::string& text);
std::string serialize_table(const Table& t);

// Structured binomial document {"lead": [[row, col, exp], ...],
// "tail": [[row, col, exp], ...] | null}.  Throws ParseError.
BinomialElement parse_structured_binomial(const std::string& text);
std::string serialize_binomial(const BinomialElement& f);

// Values aligned on the configuration's vertex grid, with a middle dot
// outside the support.
std::string pretty_table(const Table& t, const Configuration& c);

} // namespace adjmin

#endif
