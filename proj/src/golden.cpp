#include "faberkit/golden.hpp"

#include "faberkit/faber.hpp"

namespace faberkit {

const GoldenConstants& golden() {
  static const GoldenConstants c{
      QSqrt5(Rational(Integer(1), Integer(2)), Rational(Integer(-1), Integer(2))),
      QSqrt5(Rational(Integer(-1), Integer(2)), Rational(Integer(1), Integer(2))),
      QSqrt5::sqrt5(),
  };
  return c;
}

Integer fibonacci(unsigned n) {
  Integer a = 0, b = 1;
  for (unsigned k = 0; k < n; ++k) {
    Integer next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

std::vector<Integer> fibonacci_table(unsigned n_max) {
  std::vector<Integer> out{0};
  if (n_max >= 1) out.emplace_back(1);
  for (unsigned n = 2; n <= n_max; ++n) out.push_back(out[n - 2] + out[n - 1]);
  return out;
}

QSqrt5 fibonacci_closed_form(unsigned n) {
  const QSqrt5& tau = golden().tau;
  return ((QSqrt5(1) - tau).pow(n) - tau.pow(n)) / golden().sqrt5;
}

QSqrt5 ptilde_coeff_recursive(unsigned n) {
  if (n < 1) throw DomainError("ptilde coefficients are indexed from 1");
  const QSqrt5& tau = golden().tau;
  const QSqrt5 tau2 = tau * tau;
  QSqrt5 prev = tau;             // p_1
  if (n == 1) return prev;
  QSqrt5 cur = QSqrt5(3) * tau2;  // p_2
  for (unsigned k = 3; k <= n; ++k) {
    QSqrt5 next = tau * cur + tau2 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

QSqrt5 ptilde_coeff_fibonacci(unsigned n) {
  if (n < 1) throw DomainError("ptilde coefficients are indexed from 1");
  const QSqrt5 tau_n = golden().tau.pow(n);
  Integer weight;
  if (n == 1) {
    weight = fibonacci(0) + fibonacci(2);
  } else if (n == 2) {
    weight = fibonacci(1) + fibonacci(3);
  } else {
    weight = fibonacci(n - 3) + fibonacci(n - 2) + fibonacci(n - 1) + fibonacci(n);
  }
  return QSqrt5(Rational(weight)) * tau_n;
}

TruncatedSeries<QSqrt5> ptilde_series_direct(std::size_t order) {
  if (order < 1) throw DomainError("ptilde series needs order >= 1");
  const QSqrt5& tau = golden().tau;
  const QSqrt5 tau2 = tau * tau;
  TruncatedSeries<QSqrt5> num = TruncatedSeries<QSqrt5>::constant(QSqrt5(1), order);
  TruncatedSeries<QSqrt5> den = TruncatedSeries<QSqrt5>::constant(QSqrt5(1), order);
  den[1] = -tau;
  if (order >= 2) {
    num[2] = tau2;
    den[2] = -tau2;
  }
  return series_mul(num, series_reciprocal(den));
}

TruncatedSeries<QSqrt5> ptilde_series(std::size_t order) {
  if (order < 1) throw DomainError("ptilde series needs order >= 1");
  const QSqrt5& tau = golden().tau;
  const QSqrt5 tau2 = tau * tau;
  TruncatedSeries<QSqrt5> s = TruncatedSeries<QSqrt5>::constant(QSqrt5(1), order);
  s[1] = tau;
  if (order >= 2) s[2] = QSqrt5(3) * tau2;
  for (std::size_t n = 3; n <= order; ++n) s[n] = tau * s[n - 1] + tau2 * s[n - 2];
  return s;
}

ComplexQ5 ptilde_eval_exact(const ComplexQ5& z) {
  const ComplexQ5 tau(golden().tau);
  const ComplexQ5 tz = tau * z;
  const ComplexQ5 den = ComplexQ5(1) - tz - tz * tz;
  if (den.is_zero()) throw DomainError("ptilde has a pole at " + z.str());
  return (ComplexQ5(1) + tz * tz) / den;
}

ComplexInterval ptilde_eval(const ComplexInterval& z, unsigned bits) {
  if (bits < 53) throw DomainError("precision must be at least 53 bits");
  const Interval tau(golden().tau, bits);
  const ComplexInterval tz{tau * z.re, tau * z.im};
  const ComplexInterval tz2 = tz * tz;
  const ComplexInterval one{Interval(Rational(1), bits), Interval(Rational(0), bits)};
  const ComplexInterval den = one - tz - tz2;
  // Pole proximity: |den| must clear 2^-(bits/2).
  BigFloat threshold(bits);
  mpfr_set_ui_2exp(threshold.get(), 1, -static_cast<mpfr_exp_t>(bits / 2), MPFR_RNDU);
  const Interval den_abs = den.abs();
  if (mpfr_lessequal_p(den_abs.lo().get(), threshold.get())) {
    throw DomainError("ptilde evaluation point is too close to a pole at this precision");
  }
  return (one + tz2) / den;
}

void evaluate_schwarz_conditions(SchwarzCandidate& cand) {
  cand.c1_within.reset();
  cand.c1_on_boundary.reset();
  cand.c2_within.reset();
  cand.c2_on_boundary.reset();
  if (cand.coeffs.empty()) return;
  const QSqrt5 n1 = cand.coeffs[0].norm();
  const int s1 = (QSqrt5(1) - n1).sign();
  cand.c1_within = s1 >= 0;
  cand.c1_on_boundary = s1 == 0;
  if (cand.coeffs.size() < 2) return;
  const QSqrt5 rhs = QSqrt5(1) - n1;
  if (rhs.sign() < 0) {
    cand.c2_within = false;
    cand.c2_on_boundary = false;
    return;
  }
  // |c_2| <= rhs  <=>  |c_2|^2 <= rhs^2 since both sides are nonnegative.
  const int s2 = (rhs * rhs - cand.coeffs[1].norm()).sign();
  cand.c2_within = s2 >= 0;
  cand.c2_on_boundary = s2 == 0;
}

SchwarzCandidate solve_subordination(const TruncatedSeries<ComplexQ5>& P, const TruncatedSeries<ComplexQ5>& gen) {
  if (P.order() != gen.order()) throw DomainError("solve_subordination: mismatched truncation orders");
  if (!(P[0] == ComplexQ5(1))) throw DomainError("subordinate series must have constant term 1");
  if (!(gen[0] == ComplexQ5(1))) throw DomainError("generating series must have constant term 1");
  if (P.order() >= 1 && gen[1].is_zero()) throw DomainError("generating series must have a nonzero linear term");
  const std::size_t N = P.order();
  SchwarzCandidate cand;
  cand.coeffs.assign(N, ComplexQ5(0));
  const ComplexQ5 inv_gen1 = N >= 1 ? ComplexQ5(1) / gen[1] : ComplexQ5(0);
  for (std::size_t n = 1; n <= N; ++n) {
    // G_n^k for k >= 2 only involves c_1..c_{n-1}; c_n is still zero here.
    ComplexQ5 known(0);
    const std::span<const ComplexQ5> c(cand.coeffs.data(), n);
    for (std::size_t k = 2; k <= n; ++k) {
      if (gen[k].is_zero()) continue;
      known += gen[k] * bell_G<ComplexQ5>(static_cast<unsigned>(n), static_cast<unsigned>(k), c);
    }
    cand.coeffs[n - 1] = (P[n] - known) * inv_gen1;
  }
  evaluate_schwarz_conditions(cand);
  return cand;
}

SchwarzCandidate solve_schwarz(const TruncatedSeries<ComplexQ5>& P) {
  return solve_subordination(P, to_complex_q5(ptilde_series(P.order() == 0 ? 1 : P.order()).truncated(P.order())));
}

}  // namespace faberkit
