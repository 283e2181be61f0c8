// Cartan matrices: integer square matrices with
//   (i)   integer entries,
//   (ii)  diagonal entries equal to 2,
//   (iii) non-positive off-diagonal entries,
//   (iv)  A_ij * A_ji in {0,1,2,3}, with A_ji = 0 whenever A_ij = 0.
// Validation, connectivity structure, and permutation isomorphism live
// here; symmetrisation is in symmetrise.hpp.
#pragma once

#include "cartan/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cartan {

struct AxiomViolation {
  enum class Axiom { not_square, diagonal, off_diagonal_sign, product_range, zero_pairing };
  Axiom axiom;
  int i = -1, j = -1;  // offending indices, 0-based; -1 when not applicable

  const char* axiom_name() const;
  std::string message() const;
};

class CartanAxiomError : public std::domain_error {
 public:
  explicit CartanAxiomError(const AxiomViolation& v)
      : std::domain_error(v.message()), violation_(v) {}
  const AxiomViolation& violation() const { return violation_; }

 private:
  AxiomViolation violation_;
};

// Returns the first axiom violation of the raw matrix, or nullopt if it is
// a valid Cartan matrix.  Rows are the inner vectors.
std::optional<AxiomViolation> check_cartan(const std::vector<std::vector<int>>& raw);

class CartanMatrix {
 public:
  // Validates and constructs; throws CartanAxiomError with the violation.
  static CartanMatrix validated(const std::vector<std::vector<int>>& raw);

  // For matrices valid by construction (orient, enumeration); asserts in
  // debug builds only.
  static CartanMatrix unchecked(Mat<int> entries);

  int rank() const { return entries_.size(); }
  int at(int i, int j) const { return entries_(i, j); }
  const Mat<int>& entries() const { return entries_; }

  // Line multiplicity m_ij = A_ij * A_ji.
  int mult(int i, int j) const { return entries_(i, j) * entries_(j, i); }

  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const CartanMatrix& x, const CartanMatrix& y) {
    return x.entries_ == y.entries_;
  }

 private:
  explicit CartanMatrix(Mat<int> e) : entries_(std::move(e)) {}
  Mat<int> entries_;
};

// Maximal index sets connected by chains of nonzero entries; blocks are
// sorted internally and by first element, covering 0..l-1.
using ComponentPartition = std::vector<std::vector<int>>;
ComponentPartition components(const CartanMatrix& a);

// Witnessing permutation p with b = P a P^T (i.e. b(p[i],p[j]) == a(i,j))
// if the matrices are isomorphic, nullopt otherwise.  Backtracking over
// row assignments with row-multiset pruning; exact at any rank.
std::optional<std::vector<int>> is_isomorphic(const CartanMatrix& a, const CartanMatrix& b);

}  // namespace cartan
