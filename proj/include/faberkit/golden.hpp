#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "faberkit/complex.hpp"
#include "faberkit/interval.hpp"
#include "faberkit/qsqrt5.hpp"
#include "faberkit/series.hpp"

namespace faberkit {

// tau = (1 - sqrt5)/2, the negative root of x^2 = x + 1.
struct GoldenConstants {
  QSqrt5 tau;
  QSqrt5 abs_tau;
  QSqrt5 sqrt5;
};

const GoldenConstants& golden();

// Fibonacci numbers F_0 = 0, F_1 = 1, F_{n+2} = F_n + F_{n+1}.
Integer fibonacci(unsigned n);
std::vector<Integer> fibonacci_table(unsigned n_max);
// ((1 - tau)^n - tau^n) / sqrt5, evaluated in Q(sqrt5).
QSqrt5 fibonacci_closed_form(unsigned n);

// Taylor coefficients of ptilde(z) = (1 + tau^2 z^2) / (1 - tau z - tau^2 z^2),
// three independent routes.
QSqrt5 ptilde_coeff_recursive(unsigned n);
QSqrt5 ptilde_coeff_fibonacci(unsigned n);
TruncatedSeries<QSqrt5> ptilde_series_direct(std::size_t order);
// Coefficients 1, p_1, ..., p_N from the recursion.
TruncatedSeries<QSqrt5> ptilde_series(std::size_t order);

// Exact value at a point of Q(sqrt5, i).
ComplexQ5 ptilde_eval_exact(const ComplexQ5& z);
// Enclosure of ptilde(z) for a point given as an enclosure. Throws
// DomainError when the denominator enclosure is within 2^-(bits/2) of zero.
ComplexInterval ptilde_eval(const ComplexInterval& z, unsigned bits);

// Formal Schwarz candidate c_1..c_N with P = ptilde(c_1 z + c_2 z^2 + ...).
struct SchwarzCandidate {
  std::vector<ComplexQ5> coeffs;  // coeffs[k-1] = c_k

  // |c_1| <= 1 and |c_2| <= 1 - |c_1|^2; absent when the order is too small.
  std::optional<bool> c1_within;
  std::optional<bool> c1_on_boundary;  // |c_1| = 1
  std::optional<bool> c2_within;
  std::optional<bool> c2_on_boundary;  // |c_2| = 1 - |c_1|^2

  bool feasible() const { return c1_within.value_or(true) && c2_within.value_or(true); }
};

// Fills the two necessary-condition flags from the coefficients.
void evaluate_schwarz_conditions(SchwarzCandidate& candidate);

// Solves P_n = sum_{k=1}^{n} gen_k G_n^k(c_1..c_n) for c, order by order.
// `gen` is the generating series (gen_0 = 1, gen_1 != 0).
SchwarzCandidate solve_subordination(const TruncatedSeries<ComplexQ5>& P, const TruncatedSeries<ComplexQ5>& gen);

// solve_subordination against ptilde.
SchwarzCandidate solve_schwarz(const TruncatedSeries<ComplexQ5>& P);

}  // namespace faberkit
