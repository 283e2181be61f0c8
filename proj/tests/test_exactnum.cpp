#include "cartan/qf.hpp"
#include "cartan/rational.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace cartan;

namespace {

Rational rand_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 20);
  return Rational(num(rng), den(rng));
}

QF rand_qf(std::mt19937& rng) {
  return QF(rand_rational(rng), rand_rational(rng), rand_rational(rng), rand_rational(rng));
}

long double eval(const QF& x) {
  return static_cast<long double>(static_cast<double>(x.a())) +
         static_cast<long double>(static_cast<double>(x.b())) * 1.4142135623730950488L +
         static_cast<long double>(static_cast<double>(x.c())) * 1.7320508075688772935L +
         static_cast<long double>(static_cast<double>(x.d())) * 2.4494897427831780982L;
}

}  // namespace

TEST_CASE("rational string round trip") {
  CHECK(to_string(Rational(3, 6)) == "1/2");
  CHECK(to_string(Rational(-4)) == "-4");
  CHECK(rational_from_string("7/3") == Rational(7, 3));
  CHECK(rational_from_string("-2") == Rational(-2));
  CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
}

TEST_CASE("field arithmetic identities") {
  QF one_plus = QF(1) + QF::sqrt2();
  QF one_minus = QF(1) - QF::sqrt2();
  CHECK(one_plus * one_minus == QF(-1));
  CHECK(QF::sqrt2() * QF::sqrt3() == QF::sqrt6());
  CHECK((-QF::sqrt2()) * (-QF::sqrt2()) == QF(2));
  CHECK(QF::sqrt_half() * QF::sqrt_half() == QF(Rational(1, 2)));
}

TEST_CASE("division and inverses") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    QF x = rand_qf(rng);
    if (x.is_zero()) continue;
    CHECK(x / x == QF(1));
    QF y = rand_qf(rng);
    CHECK((y / x) * x == y);
  }
  CHECK_THROWS_AS(QF(1) / QF(0), std::domain_error);
}

TEST_CASE("exact sign") {
  CHECK(QF().sign() == Sign::zero);
  CHECK((QF(1) + QF::sqrt2() - QF::sqrt3()).sign() == Sign::positive);
  // 7 - 5*sqrt2 < 0 since 49 < 50.
  CHECK((QF(7) - QF(5) * QF::sqrt2()).sign() == Sign::negative);
  CHECK((QF::sqrt6() - QF::sqrt2() * QF::sqrt3()).sign() == Sign::zero);
  // A deliberately tiny nonzero value: sqrt6 - 2.449489742783178 (rational).
  QF tiny = QF::sqrt6() - QF(Rational(2449489742783178LL, 1000000000000000LL));
  CHECK(tiny.sign() == (eval(tiny) > 0 ? Sign::positive : Sign::negative));
}

TEST_CASE("rational embedding is the identity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Rational q = rand_rational(rng);
    QF x(q);
    CHECK(x.is_rational());
    CHECK(x.as_rational() == q);
    CHECK(x.sign() == static_cast<Sign>(sign_of(q)));
  }
}

TEST_CASE("squares of nonzero elements are positive") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    QF x = rand_qf(rng);
    if (x.is_zero()) continue;
    CHECK((x * x).sign() == Sign::positive);
  }
}

TEST_CASE("sign agrees with floating evaluation away from zero") {
  std::mt19937 rng(17);
  int checked = 0;
  while (checked < 10000) {
    QF x = rand_qf(rng);
    long double v = eval(x);
    if (std::fabs(static_cast<double>(v)) < 1e-6) continue;
    ++checked;
    Sign expected = v > 0 ? Sign::positive : Sign::negative;
    CHECK(x.sign() == expected);
  }
}

TEST_CASE("square roots of admissible rationals") {
  CHECK(QF::sqrt_of_rational(Rational(2)) == QF::sqrt2());
  CHECK(QF::sqrt_of_rational(Rational(1, 2)) == QF::sqrt_half());
  CHECK(QF::sqrt_of_rational(Rational(12)) == QF(2) * QF::sqrt3());
  CHECK(QF::sqrt_of_rational(Rational(4, 9)) == QF(Rational(2, 3)));
  CHECK(QF::sqrt_of_rational(Rational(9, 2)) == QF(Rational(3, 2)) * QF::sqrt2());
  CHECK(QF::sqrt_of_rational(Rational(6)) == QF::sqrt6());
  CHECK(QF::sqrt_of_rational(Rational(0)) == QF(0));
  CHECK_THROWS_AS(QF::sqrt_of_rational(Rational(5)), std::domain_error);
  CHECK_THROWS_AS(QF::sqrt_of_rational(Rational(-1)), std::domain_error);
  std::mt19937 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    Rational q = rand_rational(rng);
    if (q == 0) continue;
    Rational sq = q * q;
    std::uniform_int_distribution<int> pick(0, 3);
    int extra[] = {1, 2, 3, 6};
    Rational r = sq * extra[pick(rng)];
    QF root = QF::sqrt_of_rational(r);
    CHECK(root * root == QF(r));
    CHECK(root.sign() != Sign::negative);
  }
}

TEST_CASE("tuple serialization round trip") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    QF x = rand_qf(rng);
    CHECK(QF::from_tuple(x.to_tuple()) == x);
  }
}
