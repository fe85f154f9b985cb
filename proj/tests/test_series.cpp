#include <doctest.h>

#include <random>

#include "faberkit/golden.hpp"
#include "faberkit/series.hpp"
#include "support.hpp"

using namespace faberkit;
using faberkit::testing::naive_mul;
using faberkit::testing::random_normalized_coeffs;
using faberkit::testing::random_rational;

namespace {

using RS = TruncatedSeries<Rational>;
using QS = TruncatedSeries<QSqrt5>;

RS rs(std::vector<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RS(v);
}

RS random_series(std::mt19937_64& rng, std::size_t N, bool zero_constant) {
  std::vector<Rational> c;
  for (std::size_t n = 0; n <= N; ++n) c.push_back(n == 0 && zero_constant ? Rational(0) : random_rational(rng, 20));
  return RS(c);
}

}  // namespace

TEST_CASE("series_mul") {
  CHECK(series_mul(rs({1, 1, 0}), rs({1, -1, 0})) == rs({1, 0, -1}));
  CHECK(series_mul(rs({0, 1, 0, 0}), rs({0, 1, 0, 0})) == rs({0, 0, 1, 0}));
  CHECK_THROWS_AS(series_mul(rs({1, 1}), rs({1, 1, 1})), DomainError);

  // (1 - tau z - tau^2 z^2) * ptilde = 1 + tau^2 z^2, higher terms vanish.
  const QSqrt5 tau = golden().tau;
  QS den = QS::constant(QSqrt5(1), 4);
  den[1] = -tau;
  den[2] = -tau * tau;
  const QS prod = series_mul(den, ptilde_series(4));
  QS expected = QS::constant(QSqrt5(1), 4);
  expected[2] = tau * tau;
  CHECK(prod == expected);
}

TEST_CASE("series_mul matches the naive product") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const RS a = random_series(rng, 7, false), b = random_series(rng, 7, false);
    CHECK(series_mul(a, b).coeffs() == naive_mul(a.coeffs(), b.coeffs(), 7));
  }
}

TEST_CASE("series_compose") {
  const RS f = rs({2, 3, 5, 7});
  CHECK(series_compose(f, RS::identity(3)) == f);
  CHECK(series_compose(rs({0, 1, 1, 0}), rs({0, 1, 1, 0})) == rs({0, 1, 2, 2}));
  CHECK_THROWS_AS(series_compose(f, rs({1, 1, 0, 0})), DomainError);

  // ptilde(t z) = 1 + tau t z + 3 tau^2 t^2 z^2
  const QSqrt5 tau = golden().tau;
  const QSqrt5 t(Rational(Integer(2), Integer(7)));
  QS tz(2);
  tz[1] = t;
  const QS got = series_compose(ptilde_series(2), tz);
  CHECK(got[0] == QSqrt5(1));
  CHECK(got[1] == tau * t);
  CHECK(got[2] == QSqrt5(3) * tau * tau * t * t);
}

TEST_CASE("series_compose is associative") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const RS f = random_series(rng, 6, false), g = random_series(rng, 6, true), h = random_series(rng, 6, true);
    CHECK(series_compose(series_compose(f, g), h) == series_compose(f, series_compose(g, h)));
  }
}

TEST_CASE("series_revert") {
  // z + z^2 + z^3 + z^4 = z/(1-z) up to order 4; the inverse is w/(1+w).
  const NormalizedSeries<Rational> geo(rs({0, 1, 1, 1, 1}));
  CHECK(series_revert(geo) == rs({0, 1, -1, 1, -1}));
  CHECK(series_revert(NormalizedSeries<Rational>(RS::identity(5))) == RS::identity(5));

  // Inverse-map coefficients through a_4.
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = random_normalized_coeffs(rng, 4);
    const RS g = series_revert(NormalizedSeries<Rational>(RS(c)));
    const Rational &a2 = c[2], &a3 = c[3], &a4 = c[4];
    CHECK(g[2] == -a2);
    CHECK(g[3] == Rational(2) * a2 * a2 - a3);
    CHECK(g[4] == -(Rational(5) * a2 * a2 * a2 - Rational(5) * a2 * a3 + a4));
  }
}

TEST_CASE("reversion is a two-sided inverse up to N = 10") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    const RS f(random_normalized_coeffs(rng, 10));
    const RS g = series_revert(NormalizedSeries<Rational>(f));
    CHECK(series_compose(f, g) == RS::identity(10));
    CHECK(series_compose(g, f) == RS::identity(10));
  }
}

TEST_CASE("normalized series validation") {
  CHECK_THROWS_AS(NormalizedSeries<Rational>(rs({1, 1, 0})), DomainError);
  CHECK_THROWS_AS(NormalizedSeries<Rational>(rs({0, 2, 0})), DomainError);
  CHECK_THROWS_AS(NormalizedSeries<Rational>(rs({0})), DomainError);
  CHECK(NormalizedSeries<Rational>::from_tail({Rational(3)}).series() == rs({0, 1, 3}));
}

TEST_CASE("derivative and reciprocal") {
  const Rational a2(Integer(5), Integer(3));
  const RS f(std::vector<Rational>{Rational(0), Rational(1), a2});
  const RS df = series_derivative(f);
  CHECK(df.order() == 1);
  CHECK(df == RS(std::vector<Rational>{Rational(1), Rational(2) * a2}));
  CHECK_THROWS_AS(series_derivative(rs({4})), DomainError);

  CHECK(series_reciprocal(rs({1, -1, 0, 0})) == rs({1, 1, 1, 1}));
  CHECK_THROWS_AS(series_reciprocal(rs({0, 1})), DomainError);

  // 1/(1 - tau z - tau^2 z^2) = 1 + tau z + 2 tau^2 z^2 + ...
  const QSqrt5 tau = golden().tau;
  QS den = QS::constant(QSqrt5(1), 2);
  den[1] = -tau;
  den[2] = -tau * tau;
  const QS r = series_reciprocal(den);
  CHECK(r[1] == tau);
  CHECK(r[2] == QSqrt5(2) * tau * tau);
  CHECK(series_mul(den, r) == QS::constant(QSqrt5(1), 2));
}

TEST_CASE("derivative is linear and obeys the product rule") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const RS f = random_series(rng, 8, false), g = random_series(rng, 8, false);
    const Rational k = random_rational(rng);
    CHECK(series_derivative(series_add(f, series_scale(g, k))) ==
          series_add(series_derivative(f), series_scale(series_derivative(g), k)));
    // (fg)' = f'g + fg' on the common order N-1.
    const RS lhs = series_derivative(series_mul(f, g));
    const RS rhs = series_add(series_mul(series_derivative(f), g.truncated(7)),
                              series_mul(f.truncated(7), series_derivative(g)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("reciprocal round trip") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    RS f = random_series(rng, 9, false);
    if (f[0].is_zero()) f[0] = Rational(1);
    CHECK(series_mul(f, series_reciprocal(f)) == RS::constant(Rational(1), 9));
  }
}

TEST_CASE("truncation never extends") {
  const RS f = rs({1, 2, 3});
  CHECK(f.truncated(1) == rs({1, 2}));
  CHECK_THROWS_AS(f.truncated(3), DomainError);
}
