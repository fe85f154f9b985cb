#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "faberkit/bounds.hpp"
#include "faberkit/golden.hpp"
#include "support.hpp"

using namespace faberkit;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

const double kTau = (std::sqrt(5.0) - 1.0) / 2.0;  // |tau|

double to_d(const Rational& r) { return r.raw().get_d(); }
std::complex<double> to_d(const ComplexRational& z) { return {to_d(z.re()), to_d(z.im())}; }

double value(const BoundValue& v) { return v.enclosure().midpoint().to_double(); }

// Double-precision evaluation of the two-branch formulas, written out directly.
struct Pair {
  double first, second;
};

Pair a2_oracle(std::complex<double> g, double mu, double rho) {
  const double A = (mu + 1) * (mu + 2) / ((rho + 1) * (rho + 2));
  const double B = (mu + 1) * (mu + 1) / ((rho + 1) * (rho + 1));
  const double X = std::abs(3.0 * g * A - 12.0 * B) * kTau + 4 * B;
  return {std::abs(g) * kTau / std::sqrt(X), kTau * std::sqrt(std::abs(g) / A)};
}

Pair a3_oracle(std::complex<double> g, double mu, double rho) {
  const double A = (mu + 1) * (mu + 2) / ((rho + 1) * (rho + 2));
  const double B = (mu + 1) * (mu + 1) / ((rho + 1) * (rho + 1));
  const double X = std::abs(3.0 * g * A - 12.0 * B) * kTau + 4 * B;
  const double ag = std::abs(g);
  return {ag * kTau * kTau / A, kTau * ag / (3 * A) * (1 + (3 * A * ag * kTau - 4 * B) / X)};
}

}  // namespace

TEST_CASE("theorem 1 examples") {
  const OperatorParams unit(q(1), q(1));
  const BoundReport r = bound_theorem1(3, ComplexRational(1), unit);
  REQUIRE(r.chosen_branch().value.exact_value());
  CHECK(*r.chosen_branch().value.exact_value() == QSqrt5(q(-1, 6), q(1, 6)));
  CHECK(value(r.chosen_branch().value) == doctest::Approx(0.2060113295832983).epsilon(1e-15));
  CHECK(r.flags == std::vector<std::string>{"operator-params-outside-fractional-window"});
  CHECK_THROWS_AS(bound_theorem1(2, ComplexRational(1), unit), DomainError);
  CHECK_THROWS_AS(bound_theorem1(3, ComplexRational(0), unit), DomainError);
  CHECK(bound_theorem1(4, ComplexRational(1), OperatorParams(q(3, 4), q(1, 4))).flags.empty());
}

TEST_CASE("collapse to the unit-parameter form for rational modulus") {
  const OperatorParams unit(q(1), q(1));
  const std::vector<ComplexRational> gammas{ComplexRational(q(1)), ComplexRational(q(2)), ComplexRational(q(-7, 3)),
                                            ComplexRational(q(3), q(4)), ComplexRational(q(0), q(5, 2)),
                                            ComplexRational(q(-5, 13), q(12, 13))};
  for (const auto& g : gammas) {
    Rational abs_g;
    REQUIRE(rational_sqrt(g.norm(), abs_g));
    for (unsigned n = 3; n <= 20; ++n) {
      const auto v = bound_theorem1(n, g, unit).chosen_branch().value.exact_value();
      REQUIRE(v);
      CHECK(*v == QSqrt5(abs_g / Rational(static_cast<long>(n))) * golden().abs_tau);
    }
  }
}

TEST_CASE("collapse on a complex grid") {
  const OperatorParams unit(q(1), q(1));
  int count = 0;
  for (long re = -2; re <= 2; ++re) {
    for (long im = 1; im <= 2; ++im) {
      const ComplexRational g(q(re), q(im));
      for (unsigned n = 3; n <= 7; ++n) {
        const double got = value(bound_theorem1(n, g, unit).chosen_branch().value);
        CHECK(std::abs(got - std::abs(to_d(g)) * kTau / n) < 1e-12);
        ++count;
      }
    }
  }
  CHECK(count == 50);
}

TEST_CASE("unit-parameter a2 and a3 values") {
  const OperatorParams unit(q(1), q(1));
  const BoundReport a2 = bound_a2(ComplexRational(1), unit);
  CHECK(a2.chosen_branch().id == "first");
  CHECK(value(a2.chosen_branch().value) == doctest::Approx(kTau / std::sqrt(9 * kTau + 4)).epsilon(1e-14));
  CHECK(value(a2.branches[1].value) == doctest::Approx(kTau).epsilon(1e-14));

  const BoundReport a3 = bound_a3(ComplexRational(1), unit);
  REQUIRE(a3.branches[0].value.exact_value());
  CHECK(*a3.branches[0].value.exact_value() == QSqrt5(q(3, 2), q(-1, 2)));
  CHECK(a3.chosen_branch().id == "second");
  // (|tau|/3)(1 + (3|tau| - 4)/(9|tau| + 4)) simplifies to 4 tau^2 / (9|tau| + 4).
  const QSqrt5 t = golden().abs_tau;
  const QSqrt5 lhs = t / QSqrt5(3) * (QSqrt5(1) + (QSqrt5(3) * t - QSqrt5(4)) / (QSqrt5(9) * t + QSqrt5(4)));
  const QSqrt5 rhs = QSqrt5(4) * t * t / (QSqrt5(9) * t + QSqrt5(4));
  CHECK(lhs == rhs);
  REQUIRE(a3.chosen_branch().value.exact_value());
  CHECK(*a3.chosen_branch().value.exact_value() == rhs);
  CHECK(value(a3.chosen_branch().value) == doctest::Approx(0.1597798753959855).epsilon(1e-14));

  CHECK(std::abs(value(a2.chosen_branch().value) - value(corollary4_a2())) < 1e-12);
  CHECK(compare(a3.chosen_branch().value, corollary4_a3()) == 0);
}

TEST_CASE("branches match a direct double evaluation") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<long> d(1, 8);
  for (int trial = 0; trial < 40; ++trial) {
    const ComplexRational g(faberkit::testing::random_rational(rng, 9) + q(1, 7),
                            faberkit::testing::random_rational(rng, 9));
    const OperatorParams op(q(d(rng), 8), q(d(rng), 8));
    const auto gd = to_d(g);
    const Pair e2 = a2_oracle(gd, to_d(op.mu()), to_d(op.rho()));
    const Pair e3 = a3_oracle(gd, to_d(op.mu()), to_d(op.rho()));
    const BoundReport a2 = bound_a2(g, op), a3 = bound_a3(g, op);
    CHECK(value(a2.branches[0].value) == doctest::Approx(e2.first).epsilon(1e-12));
    CHECK(value(a2.branches[1].value) == doctest::Approx(e2.second).epsilon(1e-12));
    CHECK(value(a3.branches[0].value) == doctest::Approx(e3.first).epsilon(1e-12));
    CHECK(value(a3.branches[1].value) == doctest::Approx(e3.second).epsilon(1e-12));
    for (const BoundReport* r : {&a2, &a3}) {
      const double chosen = value(r->chosen_branch().value);
      for (const auto& b : r->branches) CHECK(chosen <= value(b.value) + 1e-30);
    }
  }
}

TEST_CASE("negative second-branch numerator is flagged, not clamped") {
  // Small |gamma| makes 3A|gamma||tau| - 4B negative.
  const BoundReport r = bound_a3(ComplexRational(q(1, 100)), OperatorParams(q(1), q(1)));
  bool flagged = false;
  for (const auto& f : r.flags) flagged |= f == "second-branch-numerator-negative";
  CHECK(flagged);
  const Pair e = a3_oracle({0.01, 0}, 1, 1);
  CHECK(value(r.branches[1].value) == doctest::Approx(e.second).epsilon(1e-12));
}

TEST_CASE("theorem 1 decreases in n when mu >= rho") {
  for (long m = 1; m <= 4; ++m) {
    for (long r = 1; r <= m; ++r) {
      const OperatorParams op(q(m, 4), q(r, 4));
      const ComplexRational g(q(2), q(1));
      for (unsigned n = 3; n < 15; ++n) {
        const auto c = compare(bound_theorem1(n + 1, g, op).chosen_branch().value,
                               bound_theorem1(n, g, op).chosen_branch().value);
        REQUIRE(c);
        CHECK(*c < 0);
      }
    }
  }
}

TEST_CASE("exact comparison and modulus") {
  CHECK(modulus(ComplexRational(q(3), q(4)), 128).exact == QSqrt5(5));
  CHECK(modulus(ComplexRational(q(1), q(2)), 128).exact == QSqrt5(q(0), q(1)));
  CHECK_FALSE(modulus(ComplexRational(q(1), q(1)), 128).exact.has_value());

  const BoundValue half(Real(QSqrt5(q(1, 2)), 128), Real(QSqrt5(1), 128));
  const BoundValue root_quarter(Real(QSqrt5(1), 128), Real(QSqrt5(q(1, 4)), 128));
  CHECK(compare(half, root_quarter) == 0);
  REQUIRE(root_quarter.exact_value());
  CHECK(*root_quarter.exact_value() == QSqrt5(q(1, 2)));
  CHECK_THROWS_AS(BoundValue(Real(QSqrt5(1), 128), Real(QSqrt5(-1), 128)), DomainError);

  const std::vector<Branch> tie{{"x", half}, {"y", root_quarter}};
  bool decided = false;
  CHECK(select_min(tie, &decided) == 0);
  CHECK(decided);
}

TEST_CASE("corollary specialization checks pass") {
  std::vector<GridPoint> grid;
  for (const auto& g : {ComplexRational(q(1)), ComplexRational(q(2), q(1)), ComplexRational(q(-3), q(4)),
                        ComplexRational(q(1, 2)), ComplexRational(q(0), q(1))}) {
    for (unsigned n = 3; n <= 10; ++n) grid.push_back({g, n});
  }
  for (int which = 1; which <= 4; ++which) {
    const auto rows = corollary_specialization_check(which, grid);
    CHECK_FALSE(rows.empty());
    for (const auto& row : rows) CHECK(row.pass);
  }
  CHECK_THROWS_AS(corollary_specialization_check(5, grid), DomainError);

  // Corollary 2 against Corollary 1 at gamma = 1 is exact.
  for (unsigned n = 3; n <= 10; ++n) CHECK(compare(corollary1(n, ComplexRational(1)), corollary2(n)) == 0);
  // Corollary 3 at gamma = 1 reproduces Corollary 4 exactly.
  const auto c2 = corollary3_a2(ComplexRational(1));
  CHECK(compare(c2[select_min(c2)].value, corollary4_a2()) == 0);
  const auto c3 = corollary3_a3(ComplexRational(1));
  CHECK(compare(c3[select_min(c3)].value, corollary4_a3()) == 0);
}
