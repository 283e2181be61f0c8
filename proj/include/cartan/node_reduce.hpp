// Node reductions: exact block-orthogonal congruences B -> B' = T B T^T
// that turn the three node patterns into (generalised) chain diagrams.
// Positive definiteness is preserved because T is invertible.
//
// Expected input layouts (0-based rows of B):
//   y_node:  (*,*)>*-Z         rows: branch vertex, branch vertex, node, Z...
//   e_node:  (*-*,*)>*-Z       rows: far, near (of the 2-branch), branch
//                              vertex, node, Z...
//   h_node:  (*-*,*-*)>*-Z     rows: far1, far2, near1, near2, node, Z...
// In every case the node connects to the first Z row by a single line and
// Z is arbitrary.
#pragma once

#include "cartan/matrix.hpp"
#include "cartan/qf.hpp"
#include "cartan/symmetrise.hpp"

#include <stdexcept>

namespace cartan {

enum class NodeCase { y_node, e_node, h_node };

class PatternMismatchError : public std::domain_error {
 public:
  explicit PatternMismatchError(const std::string& why)
      : std::domain_error("node reduction pattern mismatch: " + why) {}
};

// Size of the X block of a case (3, 4, or 5 rows).
int node_case_block(NodeCase c);

// The paper's S block as an exact QF matrix.
Mat<QF> node_case_s(NodeCase c);

// Applies the reduction; validates that the leading block of B matches the
// case's X pattern and that the node row is the only one meeting Z.
// Throws PatternMismatchError otherwise.
Mat<QF> node_reduce(const Mat<QF>& b, NodeCase c);

inline Mat<QF> node_reduce(const SymCartanMatrix& b, NodeCase c) { return node_reduce(b.b, c); }

}  // namespace cartan
