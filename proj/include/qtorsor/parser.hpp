#pragma once

#include <stdexcept>
#include <string>

#include "qtorsor/pol.hpp"
#include "qtorsor/uq.hpp"

namespace qtorsor {

/// Syntax or type error with the byte offset where parsing stopped.
struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at offset " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

/// Grammar:
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := '-' unary | power
///   power := atom ('^' ['-'] integer)?
///   atom  := integer | identifier | '(' expr ')'
/// Scalar identifiers: s (= q^{1/2}), q, i.  Division only by scalars.
ExactScalar parse_scalar(const std::string& text);
/// Identifiers K, Kinv, E, F.
UqElement parse_uq(const std::string& text, SignPair tag);
/// Identifiers a, astar, b, bstar.
PolElement parse_pol(const std::string& text, Sign mu);

}  // namespace qtorsor
