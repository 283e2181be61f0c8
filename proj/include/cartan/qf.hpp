// Elements of the real quadratic field Q(sqrt2, sqrt3), represented on the
// basis (1, sqrt2, sqrt3, sqrt6) with rational coordinates:
//
//     x = a + b*sqrt2 + c*sqrt3 + d*sqrt6 .
//
// The representation is unique (the four coordinates form a Q-basis), so
// x == 0 iff a = b = c = d = 0.  All symmetrised Cartan matrix entries
// (-1, -sqrt2, -sqrt3, -sqrt(1/2), ...) live here, and every operation is
// exact.  No square-root operation is exposed; radicals enter as literals
// or through sqrt_of_rational for values of the form q^2 * 2^s * 3^t.
#pragma once

#include "cartan/rational.hpp"

#include <array>
#include <iosfwd>
#include <string>

namespace cartan {

enum class Sign { negative = -1, zero = 0, positive = 1 };

class QF {
 public:
  QF() = default;
  QF(int v) : a_(v) {}                     // NOLINT: implicit by design
  QF(const Rational& v) : a_(v) {}         // NOLINT
  QF(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static QF sqrt2() { return QF(0, 1, 0, 0); }
  static QF sqrt3() { return QF(0, 0, 1, 0); }
  static QF sqrt6() { return QF(0, 0, 0, 1); }
  static QF sqrt_half() { return QF(0, Rational(1, 2), 0, 0); }

  // Exact square root of a positive rational of the form q^2 * 2^s * 3^t
  // (s, t in {0,1} after extracting square factors).  Throws
  // std::domain_error if r is negative or the root lies outside the field.
  static QF sqrt_of_rational(const Rational& r);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }

  // The rational part when is_rational(); throws otherwise.
  const Rational& as_rational() const;

  QF operator-() const { return QF(-a_, -b_, -c_, -d_); }
  QF& operator+=(const QF& o);
  QF& operator-=(const QF& o);
  QF& operator*=(const QF& o);
  QF& operator/=(const QF& o);  // throws std::domain_error on x/0

  friend QF operator+(QF x, const QF& y) { return x += y; }
  friend QF operator-(QF x, const QF& y) { return x -= y; }
  friend QF operator*(QF x, const QF& y) { return x *= y; }
  friend QF operator/(QF x, const QF& y) { return x /= y; }
  friend bool operator==(const QF& x, const QF& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  // Exact sign.  Zero is decided coordinatewise; otherwise the value is
  // enclosed in a rational interval using enclosures of sqrt2, sqrt3,
  // sqrt6 that are refined (Heron steps, quadratic convergence) until the
  // interval excludes zero.  Terminates for every nonzero element.
  Sign sign() const;

  QF conj_sqrt2() const { return QF(a_, -b_, c_, -d_); }  // sqrt2 -> -sqrt2
  QF conj_sqrt3() const { return QF(a_, b_, -c_, -d_); }  // sqrt3 -> -sqrt3

  double to_double() const;

  // Human-readable form, e.g. "-1/2*sqrt2"; JSON uses the 4-tuple instead.
  std::string str() const;

  std::array<std::string, 4> to_tuple() const;
  static QF from_tuple(const std::array<std::string, 4>& t);

 private:
  Rational a_, b_, c_, d_;
};

inline bool operator!=(const QF& x, const QF& y) { return !(x == y); }
inline bool operator<(const QF& x, const QF& y) { return (x - y).sign() == Sign::negative; }
inline bool operator>(const QF& x, const QF& y) { return (x - y).sign() == Sign::positive; }
inline bool operator<=(const QF& x, const QF& y) { return !(x > y); }
inline bool operator>=(const QF& x, const QF& y) { return !(x < y); }

std::ostream& operator<<(std::ostream& os, const QF& x);

}  // namespace cartan
