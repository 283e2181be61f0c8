// Inline diagram notation.
//
//   diagram := branch
//   branch  := node | chain
//   chain   := '*' ( edge '*' )*
//   edge    := '-' | '=' | '#'                      (undirected)
//   dedge   := edge | '=>' | '<=' | '#>' | '<#'     (directed mode)
//   node    := '(' branch ',' branch ')' '>' '*' ( edge chain )?
//
// '#' is the triple line; '≡' is accepted on input as an alias.  Vertices
// are numbered in reading order.  The node vertex is joined by single
// lines to the rightmost vertex of each parenthesized branch.  In directed
// mode "u=>v" puts the -m entry in row u (A_uv = -m, A_vu = -1), and every
// multiple line must carry an arrow.
#pragma once

#include "cartan/diagram.hpp"

#include <stdexcept>
#include <string>

namespace cartan {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
  size_t position() const { return pos_; }

 private:
  size_t pos_;
};

CoxeterDiagram parse_coxeter(const std::string& text);
DynkinDiagram parse_dynkin(const std::string& text);

// True if the text contains directed line tokens.
bool has_directed_tokens(const std::string& text);

class NotExpressibleError : public std::domain_error {
 public:
  explicit NotExpressibleError(const std::string& why)
      : std::domain_error("diagram not expressible in the inline notation: " + why) {}
};

// Canonical inline text.  Chains read with the lexicographically largest
// multiplicity sequence; node diagrams trail their longest chain with the
// shorter parenthesized branch second.  Throws NotExpressibleError for
// diagrams outside the grammar (cycles, degree > 3, disconnected);
// callers fall back to DOT export.
std::string print_diagram(const CoxeterDiagram& d);
std::string print_diagram(const DynkinDiagram& d);

std::string to_dot(const CoxeterDiagram& d);
std::string to_dot(const DynkinDiagram& d);

}  // namespace cartan
