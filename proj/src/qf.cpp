#include "cartan/qf.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace cartan {

const Rational& QF::as_rational() const {
  if (!is_rational()) throw std::domain_error("QF value is irrational: " + str());
  return a_;
}

QF& QF::operator+=(const QF& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

QF& QF::operator-=(const QF& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

// Basis products: sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3,
// sqrt3*sqrt6 = 3*sqrt2.
QF& QF::operator*=(const QF& o) {
  Rational a = a_ * o.a_ + 2 * b_ * o.b_ + 3 * c_ * o.c_ + 6 * d_ * o.d_;
  Rational b = a_ * o.b_ + b_ * o.a_ + 3 * (c_ * o.d_ + d_ * o.c_);
  Rational c = a_ * o.c_ + c_ * o.a_ + 2 * (b_ * o.d_ + d_ * o.b_);
  Rational d = a_ * o.d_ + d_ * o.a_ + b_ * o.c_ + c_ * o.b_;
  a_ = std::move(a);
  b_ = std::move(b);
  c_ = std::move(c);
  d_ = std::move(d);
  return *this;
}

// 1/x = conj2(x) * conj3(x * conj2(x)) / N(x) where N(x) is the rational
// norm; x * conj2(x) lies in Q(sqrt3), and multiplying by its sqrt3
// conjugate lands in Q.
QF& QF::operator/=(const QF& o) {
  if (o.is_zero()) throw std::domain_error("QF division by zero");
  QF c2 = o.conj_sqrt2();
  QF fix2 = o * c2;             // in Q(sqrt3)
  QF c3 = fix2.conj_sqrt3();
  QF norm = fix2 * c3;          // rational
  QF inv = c2 * c3;
  const Rational& n = norm.as_rational();
  inv.a_ /= n;
  inv.b_ /= n;
  inv.c_ /= n;
  inv.d_ /= n;
  return *this *= inv;
}

namespace {

struct Interval {
  Rational lo, hi;
};

Interval scale(const Rational& k, const Interval& iv) {
  if (k >= 0) return {k * iv.lo, k * iv.hi};
  return {k * iv.hi, k * iv.lo};
}

// One Heron step: from an upper bound h > sqrt(n), h' = (h + n/h)/2 is a
// tighter upper bound and n/h' a lower bound.
void refine(Interval& iv, int n) {
  iv.hi = (iv.hi + Rational(n) / iv.hi) / 2;
  iv.lo = Rational(n) / iv.hi;
}

}  // namespace

Sign QF::sign() const {
  if (is_zero()) return Sign::zero;
  if (is_rational()) return static_cast<Sign>(a_.sign());
  Interval r2{Rational(1), Rational(2)};
  Interval r3{Rational(3, 2), Rational(2)};
  Interval r6{Rational(2), Rational(3)};
  for (int iter = 0; iter < 200; ++iter) {
    Interval v{a_, a_};
    for (const auto& [k, iv] : {std::pair<const Rational&, const Interval&>{b_, r2},
                                {c_, r3},
                                {d_, r6}}) {
      Interval s = scale(k, iv);
      v.lo += s.lo;
      v.hi += s.hi;
    }
    if (v.lo > 0) return Sign::positive;
    if (v.hi < 0) return Sign::negative;
    refine(r2, 2);
    refine(r3, 3);
    refine(r6, 6);
  }
  // Unreachable for nonzero field elements of any realistic size: 200
  // quadratically convergent refinements give astronomically more
  // precision than the algebraic separation bound requires.
  throw std::logic_error("QF::sign failed to separate nonzero value from 0");
}

QF QF::sqrt_of_rational(const Rational& r) {
  if (r.sign() < 0) throw std::domain_error("sqrt of negative rational");
  if (r == 0) return QF();
  auto split = [](BigInt v, int p) {
    int count = 0;
    while (v % p == 0) {
      v /= p;
      ++count;
    }
    return std::pair<BigInt, int>{v, count};
  };
  auto [num, n2] = split(numerator(r), 2);
  auto [num3, n3] = split(num, 3);
  auto [den, d2] = split(denominator(r), 2);
  auto [den3, d3] = split(den, 3);
  BigInt sq_num = boost::multiprecision::sqrt(num3);
  BigInt sq_den = boost::multiprecision::sqrt(den3);
  if (sq_num * sq_num != num3 || sq_den * sq_den != den3)
    throw std::domain_error("sqrt(" + cartan::to_string(r) + ") lies outside Q(sqrt2,sqrt3)");
  // r = (sq_num/sq_den)^2 * 2^(n2-d2) * 3^(n3'-d3') with residues in {0,1}.
  int e2 = n2 - d2, e3 = n3 - d3;
  // Shift exponents to be >= 0 by multiplying both square and residue parts.
  Rational q(sq_num, sq_den);
  while (e2 < 0) {
    q /= 2;
    e2 += 2;
  }
  while (e3 < 0) {
    q /= 3;
    e3 += 2;
  }
  q *= [&] {
    Rational pow = 1;
    for (int i = 0; i + 1 < e2; i += 2) pow *= 2;
    for (int i = 0; i + 1 < e3; i += 2) pow *= 3;
    return pow;
  }();
  bool r2 = e2 % 2, r3 = e3 % 2;
  if (r2 && r3) return QF(0, 0, 0, q);
  if (r2) return QF(0, q, 0, 0);
  if (r3) return QF(0, 0, q, 0);
  return QF(q);
}

double QF::to_double() const {
  return static_cast<double>(a_) + static_cast<double>(b_) * 1.41421356237309504880168872420969808 +
         static_cast<double>(c_) * 1.73205080756887729352744634150587237 +
         static_cast<double>(d_) * 2.44948974278317809819728407470589139;
}

std::string QF::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& k, const char* radical) {
    if (k == 0) return;
    if (!first && k.sign() > 0) os << "+";
    if (radical == nullptr) {
      os << cartan::to_string(k);
    } else if (k == 1) {
      os << radical;
    } else if (k == -1) {
      os << "-" << radical;
    } else {
      os << cartan::to_string(k) << "*" << radical;
    }
    first = false;
  };
  term(a_, nullptr);
  term(b_, "sqrt2");
  term(c_, "sqrt3");
  term(d_, "sqrt6");
  return os.str();
}

std::array<std::string, 4> QF::to_tuple() const {
  return {cartan::to_string(a_), cartan::to_string(b_), cartan::to_string(c_),
          cartan::to_string(d_)};
}

QF QF::from_tuple(const std::array<std::string, 4>& t) {
  return QF(rational_from_string(t[0]), rational_from_string(t[1]), rational_from_string(t[2]),
            rational_from_string(t[3]));
}

std::ostream& operator<<(std::ostream& os, const QF& x) { return os << x.str(); }

}  // namespace cartan
