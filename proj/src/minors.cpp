#include "cartan/minors.hpp"

#include <stdexcept>

namespace cartan {

MinorSequence minor_sequence(const std::vector<Rational>& t) {
  for (const auto& ti : t)
    if (ti.sign() <= 0) throw std::invalid_argument("squared subdiagonal entries must be positive");
  MinorSequence seq;
  seq.p.reserve(t.size() + 2);
  seq.p.emplace_back(1);
  seq.p.emplace_back(2);
  for (const auto& ti : t) {
    const auto n = seq.p.size();
    seq.p.push_back(2 * seq.p[n - 1] - ti * seq.p[n - 2]);
  }
  for (size_t i = 0; i < seq.p.size(); ++i)
    if (seq.p[i].sign() <= 0) {
      seq.first_nonpositive = static_cast<int>(i);
      break;
    }
  return seq;
}

namespace {

// Field elements with integer coordinates; the working type of the
// fraction-free elimination.  No normalisation happens on these, which is
// what makes the sweep over six-figure diagram counts affordable.
struct RingQF {
  BigInt a, b, c, d;

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  RingQF conj2() const { return {a, -b, c, -d}; }
  RingQF conj3() const { return {a, b, -c, -d}; }
};

RingQF mul(const RingQF& x, const RingQF& y) {
  return {x.a * y.a + 2 * x.b * y.b + 3 * x.c * y.c + 6 * x.d * y.d,
          x.a * y.b + x.b * y.a + 3 * (x.c * y.d + x.d * y.c),
          x.a * y.c + x.c * y.a + 2 * (x.b * y.d + x.d * y.b),
          x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b};
}

RingQF sub_mul(const RingQF& p, const RingQF& x, const RingQF& y, const RingQF& z) {
  // p*x - y*z
  RingQF px = mul(p, x), yz = mul(y, z);
  return {px.a - yz.a, px.b - yz.b, px.c - yz.c, px.d - yz.d};
}

// Exact division in the ring (the Bareiss quotients are guaranteed to be
// ring elements): x/y = x * conj(y).. / N(y) with the integer norm.  The
// rational-pivot case (the usual one for diagram matrices, whose minors
// are integers) short-circuits to coordinate division.
RingQF exact_div(const RingQF& x, const RingQF& y) {
  if (y.b == 0 && y.c == 0 && y.d == 0)
    return {x.a / y.a, x.b / y.a, x.c / y.a, x.d / y.a};
  RingQF s1 = y.conj2();
  RingQF t = mul(y, s1);  // in Z[sqrt3]
  RingQF s2 = t.conj3();
  RingQF num = mul(mul(x, s1), s2);
  BigInt n = mul(t, s2).a;  // rational norm
  return {num.a / n, num.b / n, num.c / n, num.d / n};
}

QF unscale(const RingQF& x, const BigInt& scale) {
  return QF(Rational(x.a, scale), Rational(x.b, scale), Rational(x.c, scale),
            Rational(x.d, scale));
}

}  // namespace

SylvesterResult sylvester_pd(const Mat<QF>& m) {
  const int n = m.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i)) throw std::invalid_argument("matrix is not symmetric");

  // Clear denominators symmetrically (row and column i scaled by D_i > 0);
  // a positive diagonal congruence preserves the minor signs, and the true
  // minors are recovered by dividing the accumulated scale back out.
  std::vector<BigInt> d(n, BigInt(1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const QF& x = m(i, j);
      for (const Rational* r : {&x.a(), &x.b(), &x.c(), &x.d()})
        d[i] = lcm(d[i], rational_den(*r));
    }
  std::vector<std::vector<RingQF>> w(n, std::vector<RingQF>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const QF& x = m(i, j);
      BigInt f = d[i] * d[j];
      auto coord = [&](const Rational& r) { return rational_num(r) * (f / rational_den(r)); };
      w[i][j] = RingQF{coord(x.a()), coord(x.b()), coord(x.c()), coord(x.d())};
    }

  SylvesterResult res{true, std::nullopt, {}};
  RingQF prev{1, 0, 0, 0};
  BigInt scale(1);
  for (int k = 0; k < n; ++k) {
    scale *= d[k] * d[k];
    const RingQF pivot = w[k][k];
    QF minor = unscale(pivot, scale);
    res.minors.push_back(minor);
    if (minor.sign() != Sign::positive) {
      res.positive_definite = false;
      res.first_failing_order = k + 1;
      return res;
    }
    const bool first = k == 0;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        RingQF t = sub_mul(pivot, w[i][j], w[i][k], w[k][j]);
        w[i][j] = (first || t.is_zero()) ? std::move(t) : exact_div(t, prev);
      }
    prev = pivot;
  }
  return res;
}

QF sym_determinant(const Mat<QF>& m) {
  const int n = m.size();
  Mat<QF> w = m;
  QF det(1);
  for (int k = 0; k < n; ++k) {
    int pivot_row = -1;
    for (int i = k; i < n; ++i)
      if (!w(i, k).is_zero()) {
        pivot_row = i;
        break;
      }
    if (pivot_row < 0) return QF(0);
    if (pivot_row != k) {
      for (int j = k; j < n; ++j) {
        QF tmp = w(k, j);
        w(k, j) = w(pivot_row, j);
        w(pivot_row, j) = tmp;
      }
      det = -det;
    }
    det = det * w(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (w(i, k).is_zero()) continue;
      QF factor = w(i, k) / w(k, k);
      for (int j = k; j < n; ++j) w(i, j) -= factor * w(k, j);
    }
  }
  return det;
}

}  // namespace cartan
