// Reduced root system generation by Weyl-reflection closure.
//
// The coefficient-space closure repeatedly applies the simple reflections
//   w_i : k  ->  k - (sum_j A_ij k_j) e_i
// to the unit vectors until no new vector appears; for positive definite
// input this terminates with the full (finite) root system.  An
// independently coded closure in Gram coordinates (reflecting in *every*
// root, exact rational arithmetic) serves as the cross-check.  The main
// closure and the verification sweep have OpenMP kernels; the *_serial
// variants are the reference implementations kept for testing and
// benchmarks.
#pragma once

#include "cartan/cartan_matrix.hpp"
#include "cartan/symmetrise.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cartan {

using RootVector = std::vector<int>;

class NotFiniteWithinGuardError : public std::domain_error {
 public:
  enum class Trigger { coefficient_bound, set_size };

  NotFiniteWithinGuardError(Trigger t, RootVector witness, int guard)
      : std::domain_error(t == Trigger::coefficient_bound
                              ? "closure exceeded the coefficient bound " + std::to_string(guard) +
                                    " (non-positive-definite Cartan matrix or guard too small)"
                              : "closure exceeded the root set size bound"),
        trigger_(t),
        witness_(std::move(witness)),
        guard_(guard) {}

  Trigger trigger() const { return trigger_; }
  const RootVector& witness() const { return witness_; }
  int guard() const { return guard_; }

 private:
  Trigger trigger_;
  RootVector witness_;
  int guard_;
};

struct RootGenOptions {
  int guard = 30;                 // abort when any |k_i| exceeds this
  std::size_t max_roots = 1'000'000;
};

struct RootSystem {
  CartanMatrix cartan;
  SymCartanMatrix sym;        // symmetrise(cartan)
  Mat<Rational> gram;         // (alpha_i, alpha_j) = A_ij * c2_i / 2
  std::vector<RootVector> roots;  // lexicographically sorted

  int rank() const { return cartan.rank(); }
};

// w_i applied to k; pure integer arithmetic, an involution.
RootVector simple_reflection(const CartanMatrix& a, int i, const RootVector& k);

// Worklist closure of the basis under all simple reflections.  Requires a
// symmetrisable matrix (the Gram form is attached for verification);
// throws NotFiniteWithinGuardError when a guard trips.
RootSystem generate_roots(const CartanMatrix& a, const RootGenOptions& opts = {});
RootSystem generate_roots_serial(const CartanMatrix& a, const RootGenOptions& opts = {});

// Independent Gram-coordinate closure: reflects every vector in every
// other until fixpoint.  Returns the sorted root set.
std::vector<RootVector> gram_closure(const CartanMatrix& a, const RootGenOptions& opts = {});

struct VerifyCheck {
  bool pass = true;
  std::string witness;  // offending vectors, empty when passing
};

struct VerifyReport {
  VerifyCheck closure;           // (a) w_alpha(beta) stays in R
  VerifyCheck integrality;       // (b) 2(beta,alpha)/(alpha,alpha) integral
  VerifyCheck reduced;           // (c) proportional roots only +-alpha
  VerifyCheck norm_bound;        // (d) (alpha,alpha) <= max_i (alpha_i,alpha_i)
  VerifyCheck sign_consistency;  // (e) coefficients all >= 0 or all <= 0

  bool all_pass() const {
    return closure.pass && integrality.pass && reduced.pass && norm_bound.pass &&
           sign_consistency.pass;
  }
};

VerifyReport verify_root_system(const RootSystem& rs);
VerifyReport verify_root_system_serial(const RootSystem& rs);

// Squared norms (alpha, alpha), aligned with rs.roots; rational relative to
// the c2 normalisation.
std::vector<Rational> root_norms(const RootSystem& rs);

// Gram matrix of the simple roots for a symmetrised Cartan matrix.
Mat<Rational> gram_matrix(const CartanMatrix& a, const SymCartanMatrix& s);

}  // namespace cartan
