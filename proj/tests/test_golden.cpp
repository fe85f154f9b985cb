#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "faberkit/faber.hpp"
#include "faberkit/golden.hpp"
#include "support.hpp"

using namespace faberkit;
using faberkit::testing::random_rational;

namespace {

using QS = TruncatedSeries<QSqrt5>;
using CS = TruncatedSeries<ComplexQ5>;

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

CS to_cs(const QS& s) { return to_complex_q5(s); }

// Schwarz-type series c_1 z + ... + c_N z^N with |c_1| <= 1/2.
CS random_omega(std::mt19937_64& rng, std::size_t N) {
  CS w(N);
  std::uniform_int_distribution<long> num(-50, 50);
  w[1] = ComplexQ5(QSqrt5(Rational(Integer(num(rng)), Integer(100))));
  for (std::size_t k = 2; k <= N; ++k) w[k] = ComplexQ5(QSqrt5(random_rational(rng, 9)));
  return w;
}

}  // namespace

TEST_CASE("fibonacci") {
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(7) == 13);
  const auto table = fibonacci_table(40);
  CHECK(table.size() == 41);
  for (unsigned n = 0; n + 2 <= 40; ++n) CHECK(table[n + 2] == table[n] + table[n + 1]);
  for (unsigned n = 0; n <= 30; ++n) CHECK(fibonacci_closed_form(n) == QSqrt5(Rational(fibonacci(n))));
}

TEST_CASE("ptilde leading coefficients") {
  const QSqrt5 tau = golden().tau;
  CHECK(ptilde_coeff_recursive(1) == tau);
  CHECK(ptilde_coeff_recursive(2) == QSqrt5(3) * tau.pow(2));
  CHECK(ptilde_coeff_recursive(3) == QSqrt5(4) * tau.pow(3));
  CHECK(ptilde_coeff_recursive(4) == QSqrt5(7) * tau.pow(4));
  CHECK(ptilde_coeff_fibonacci(1) == tau);
  CHECK(ptilde_coeff_fibonacci(2) == QSqrt5(3) * tau.pow(2));
  CHECK(ptilde_coeff_fibonacci(3) == QSqrt5(4) * tau.pow(3));
  CHECK_THROWS_AS(ptilde_coeff_fibonacci(0), DomainError);
  const QS direct = ptilde_series_direct(3);
  CHECK(direct[0] == QSqrt5(1));
  CHECK(direct[1] == tau);
  CHECK(direct[3] == QSqrt5(4) * tau.pow(3));
}

TEST_CASE("three routes agree through n = 50") {
  const QS direct = ptilde_series_direct(50);
  const QS rec = ptilde_series(50);
  for (unsigned n = 1; n <= 50; ++n) {
    const QSqrt5 r = ptilde_coeff_recursive(n);
    CHECK(r == ptilde_coeff_fibonacci(n));
    CHECK(r == direct[n]);
    CHECK(r == rec[n]);
  }
}

TEST_CASE("defining relation") {
  const QSqrt5 tau = golden().tau;
  QS den = QS::constant(QSqrt5(1), 30);
  den[1] = -tau;
  den[2] = -tau * tau;
  QS expected = QS::constant(QSqrt5(1), 30);
  expected[2] = tau * tau;
  CHECK(series_mul(den, ptilde_series(30)) == expected);
}

TEST_CASE("second coefficient dominates the first") {
  const QSqrt5 p1 = ptilde_coeff_recursive(1), p2 = ptilde_coeff_recursive(2);
  CHECK((p2.abs() - p1.abs()).sign() == 1);
}

TEST_CASE("special values") {
  const QSqrt5 tau = golden().tau;
  CHECK(ptilde_eval_exact(ComplexQ5(0)) == ComplexQ5(1));
  CHECK(ptilde_eval_exact(ComplexQ5(QSqrt5(-1) / (QSqrt5(2) * tau))) == ComplexQ5(1));

  // Pole: w = tau z solves 1 - w - w^2 = 0.
  const QSqrt5 w = (QSqrt5(-1) + QSqrt5::sqrt5()) / QSqrt5(2);
  CHECK_THROWS_AS(ptilde_eval_exact(ComplexQ5(w / tau)), DomainError);
  CHECK_THROWS_AS(ptilde_eval(ComplexInterval(ComplexQ5(w / tau), 128), 128), DomainError);

  // e^{i arccos(1/4)} = 1/4 + i sqrt15/4
  const unsigned bits = 128;
  const Interval re(q(1, 4), bits);
  const Interval im = Interval(q(15), bits).sqrt() / Interval(q(4), bits);
  const Interval modulus = ptilde_eval(ComplexInterval(re, im), bits).abs();
  const double expected = std::sqrt(5.0) / 5.0;
  CHECK(std::abs(modulus.midpoint().to_double() - expected) < 1e-12);
  // And the enclosure contains sqrt5/5 itself.
  CHECK(modulus.contains(Interval(QSqrt5::sqrt5() / QSqrt5(5), bits)));
  CHECK(modulus.radius().to_double() < 1e-30);
}

TEST_CASE("sampled injectivity inside the radius") {
  // Polar grid of 1000 points with |z| <= 0.379.
  std::vector<std::complex<double>> z;
  for (int k = 1; k <= 10; ++k) {
    for (int j = 0; j < 100; ++j) {
      z.push_back(std::polar(0.379 * k / 10.0, 2 * std::numbers::pi * j / 100.0));
    }
  }
  std::vector<std::complex<double>> v;
  for (const auto& p : z) {
    const ComplexInterval pi(Interval::from_double(p.real(), 128), Interval::from_double(p.imag(), 128));
    const ComplexInterval val = ptilde_eval(pi, 128);
    v.emplace_back(val.re.midpoint().to_double(), val.im.midpoint().to_double());
  }
  double min_gap = 1e300;
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a + 1; b < v.size(); ++b) min_gap = std::min(min_gap, std::abs(v[a] - v[b]));
  }
  CHECK(min_gap > 1e-6);
}

TEST_CASE("solve_schwarz examples") {
  const CS P = to_cs(ptilde_series(6));
  const SchwarzCandidate id = solve_schwarz(P);
  REQUIRE(id.coeffs.size() == 6);
  CHECK(id.coeffs[0] == ComplexQ5(1));
  for (std::size_t k = 1; k < 6; ++k) CHECK(id.coeffs[k].is_zero());
  CHECK(*id.c1_within);
  CHECK(*id.c1_on_boundary);
  CHECK(*id.c2_within);
  CHECK(*id.c2_on_boundary);

  const SchwarzCandidate zero = solve_schwarz(CS::constant(ComplexQ5(1), 5));
  for (const auto& c : zero.coeffs) CHECK(c.is_zero());
  CHECK(zero.feasible());
  CHECK_FALSE(*zero.c1_on_boundary);

  const ComplexQ5 t(QSqrt5(q(3, 7)));
  CS tz(6);
  tz[1] = t;
  const SchwarzCandidate scaled = solve_schwarz(series_compose(P, tz));
  CHECK(scaled.coeffs[0] == t);
  for (std::size_t k = 1; k < 6; ++k) CHECK(scaled.coeffs[k].is_zero());

  CHECK_THROWS_AS(solve_schwarz(CS::constant(ComplexQ5(2), 3)), DomainError);
}

TEST_CASE("Schwarz conditions") {
  SchwarzCandidate c;
  c.coeffs = {ComplexQ5(QSqrt5(q(3, 5)), QSqrt5(q(4, 5))), ComplexQ5(0)};
  evaluate_schwarz_conditions(c);
  CHECK(*c.c1_on_boundary);
  CHECK(*c.c2_on_boundary);
  CHECK(c.feasible());

  c.coeffs = {ComplexQ5(QSqrt5(q(1, 2))), ComplexQ5(QSqrt5(q(4, 5)))};
  evaluate_schwarz_conditions(c);
  CHECK(*c.c1_within);
  CHECK_FALSE(*c.c2_within);
  CHECK_FALSE(c.feasible());

  c.coeffs = {ComplexQ5(golden().tau)};
  evaluate_schwarz_conditions(c);
  CHECK(*c.c1_within);
  CHECK_FALSE(c.c2_within.has_value());

  c.coeffs = {ComplexQ5(QSqrt5(q(1)), QSqrt5(q(1, 100))), ComplexQ5(0)};
  evaluate_schwarz_conditions(c);
  CHECK_FALSE(*c.c1_within);
  CHECK_FALSE(*c.c2_within);
}

TEST_CASE("Schwarz round trip") {
  std::mt19937_64 rng(71);
  const CS P = to_cs(ptilde_series(8));
  for (int trial = 0; trial < 20; ++trial) {
    const CS w = random_omega(rng, 8);
    const SchwarzCandidate c = solve_schwarz(series_compose(P, w));
    for (std::size_t k = 1; k <= 8; ++k) CHECK(c.coeffs[k - 1] == w[k]);
  }
}

TEST_CASE("subordination against a general generator") {
  // gen = 1 + 2z + 5z^2 + ...; round trip through compose.
  CS gen(5);
  gen[0] = ComplexQ5(1);
  gen[1] = ComplexQ5(2);
  gen[2] = ComplexQ5(5);
  gen[3] = ComplexQ5(QSqrt5(q(1), q(1)));
  CS w(5);
  w[1] = ComplexQ5(QSqrt5(q(1, 3)), QSqrt5(q(1, 4)));
  w[3] = ComplexQ5(QSqrt5(q(-2)));
  const SchwarzCandidate c = solve_subordination(series_compose(gen, w), gen);
  for (std::size_t k = 1; k <= 5; ++k) CHECK(c.coeffs[k - 1] == w[k]);
  gen[1] = ComplexQ5(0);
  CHECK_THROWS_AS(solve_subordination(series_compose(gen, w), gen), DomainError);
}
