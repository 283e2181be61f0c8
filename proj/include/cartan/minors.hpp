// Leading-principal-minor machinery: the tridiagonal recurrence
//
//   p_0 = 1,  p_1 = 2,  p_i = 2 p_{i-1} - t_i p_{i-2}
//
// (t_i the squared subdiagonal entry, read off a chain diagram as its line
// multiplicities), and a general exact Sylvester check on symmetric QF
// matrices used as the independent oracle.
#pragma once

#include "cartan/matrix.hpp"
#include "cartan/qf.hpp"

#include <optional>
#include <vector>

namespace cartan {

struct MinorSequence {
  std::vector<Rational> p;               // p_0 .. p_l
  std::optional<int> first_nonpositive;  // smallest i with p_i <= 0

  bool all_positive() const { return !first_nonpositive.has_value(); }
};

// t holds the squared subdiagonal entries t_2 .. t_l (so a chain of l
// vertices passes l-1 values); each must be positive.
MinorSequence minor_sequence(const std::vector<Rational>& t);

struct SylvesterResult {
  bool positive_definite;
  std::optional<int> first_failing_order;  // 1-based order of the first minor <= 0
  std::vector<QF> minors;                  // leading minors up to the failure point
};

// Exact Sylvester criterion via Gaussian elimination over the field (the
// k-th pivot is the ratio of consecutive leading minors).  Throws
// std::invalid_argument on non-symmetric input.
SylvesterResult sylvester_pd(const Mat<QF>& m);

// Exact determinant of a symmetric QF matrix (last leading minor even when
// an intermediate pivot vanishes; falls back to cofactor expansion then).
QF sym_determinant(const Mat<QF>& m);

}  // namespace cartan
