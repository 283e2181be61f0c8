// Positive-definiteness decision for connected Coxeter diagrams by the
// structural checks and reductions of the minor-recurrence method:
//   * fewer than l lines (no cycles),
//   * vertex degree at most 3 counting multiplicity,
//   * a triple line only as the whole G2 diagram,
//   * at most one double line, at most one double line or node,
//   * chains decided by the tridiagonal minor recurrence,
//   * node diagrams decided by node reduction followed by the recurrence.
// The Sylvester oracle (minors.hpp) is never consulted here; tests compare
// both routes.
#pragma once

#include "cartan/diagram.hpp"
#include "cartan/minors.hpp"
#include "cartan/node_reduce.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cartan {

enum class Family { A, BC, D, E, F, G };

// "A", "B/C", "D", "E6".."E8", "F4", "G2".
std::string family_name(Family f, int rank);

struct ClassifyWitness {
  std::optional<int> proposition;  // paper proposition number, when one applies
  std::string description;
  std::vector<int> vertices;                  // offending subdiagram (0-based)
  std::optional<MinorSequence> minors;        // failing minors on the witness chain
  std::vector<int> null_vector;               // v with v B v^T <= 0, when used
};

struct ClassificationResult {
  bool positive_definite = false;
  std::optional<Family> family;  // with `rank`, set when positive definite
  int rank = 0;
  // Minor sequence of the decisive (possibly reduced) chain, when the
  // decision ran through the recurrence.
  std::optional<MinorSequence> minors;
  std::optional<ClassifyWitness> witness;

  std::string family_label() const;  // "" when not positive definite
};

// Decision procedure; throws std::invalid_argument on disconnected input.
ClassificationResult classify_connected(const CoxeterDiagram& d);

}  // namespace cartan
