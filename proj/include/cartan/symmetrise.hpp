// Symmetrised Cartan matrices.  A Cartan matrix A is symmetrisable when
// positive c_i exist with B_ij = c_i A_ij / c_j symmetric; equivalently the
// ratio products A_{i0 i1}...A_{i_{n-1} i_n} / A_{i1 i0}...A_{i_n i_{n-1}}
// along chains are path-independent.  The weights are kept squared (the
// ratios are rational, the c_i themselves need not be).
#pragma once

#include "cartan/cartan_matrix.hpp"
#include "cartan/qf.hpp"

#include <stdexcept>
#include <vector>

namespace cartan {

struct SymCartanMatrix {
  Mat<QF> b;                     // symmetric, diagonal 2, off-diagonal -sqrt(m_ij)
  std::vector<Rational> weight2; // c_i^2, first index of each component normalised to 1

  int rank() const { return b.size(); }
};

class NotSymmetrisableError : public std::domain_error {
 public:
  NotSymmetrisableError(std::vector<int> cycle, const Rational& ratio);
  // Closed index cycle (0-based, first == last) whose ratio product != 1.
  const std::vector<int>& cycle() const { return cycle_; }
  const Rational& ratio() const { return ratio_; }

 private:
  std::vector<int> cycle_;
  Rational ratio_;
};

// Builds B and the squared weights, or throws NotSymmetrisableError with a
// witness cycle.  Weights propagate along a spanning tree per component
// (c2_j = c2_i * A_ij / A_ji) and every non-tree connection is checked.
SymCartanMatrix symmetrise(const CartanMatrix& a);

// Entrywise check of B_ij = c_i A_ij c_j^{-1} with c_i = sqrt(weight2_i),
// in exact field arithmetic.  Used by tests and the verification surface.
bool satisfies_weight_relation(const CartanMatrix& a, const SymCartanMatrix& s);

}  // namespace cartan
