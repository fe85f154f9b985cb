#pragma once

#include <cstddef>
#include <string>

#include "faberkit/complex.hpp"
#include "faberkit/golden.hpp"
#include "faberkit/rational.hpp"
#include "faberkit/series.hpp"

namespace faberkit {

// (mu, rho) of the Tremblay operator, each in (0, 1].
class OperatorParams {
 public:
  OperatorParams(Rational mu, Rational rho);

  const Rational& mu() const { return mu_; }
  const Rational& rho() const { return rho_; }

  // mu >= rho and 0 < mu - rho < 1. Parameters outside this window are
  // accepted (mu = rho = 1 is used by the specialized classes) but flagged.
  bool in_fractional_window() const;

 private:
  Rational mu_;
  Rational rho_;
};

class ClassParams {
 public:
  ClassParams(ComplexRational gamma, OperatorParams op);

  const ComplexRational& gamma() const { return gamma_; }
  const OperatorParams& op() const { return op_; }

 private:
  ComplexRational gamma_;
  OperatorParams op_;
};

// Gamma(rho) Gamma(n+mu) / (Gamma(mu) Gamma(n+rho)) = (mu)_n / (rho)_n.
Rational tremblay_multiplier(unsigned n, const OperatorParams& op);

// Gamma(rho+1) Gamma(n+mu) / (Gamma(mu+1) Gamma(n+rho)) = (mu+1)_{n-1} / (rho+1)_{n-1}.
Rational shifted_ratio(unsigned n, const OperatorParams& op);

// Termwise a_n -> multiplier(n) a_n, including the linear term.
template <Field F>
TruncatedSeries<F> apply_tremblay(const NormalizedSeries<F>& f, const OperatorParams& op) {
  TruncatedSeries<F> out(f.order());
  for (std::size_t n = 1; n <= f.order(); ++n) {
    out[n] = F(tremblay_multiplier(static_cast<unsigned>(n), op)) * f[n];
  }
  return out;
}

// 1 + (1/gamma) (rho (I h)'/mu - 1), computed through the operator route
// (apply, differentiate, rescale). Order is that of h minus one.
TruncatedSeries<ComplexQ5> class_lhs(const NormalizedSeries<ComplexQ5>& h, const ClassParams& params);

// Coefficient of z^{n-1} in class_lhs from the closed form
// shifted_ratio(n) * (n / gamma) * a_n.
ComplexQ5 class_lhs_coefficient(unsigned n, const ComplexQ5& a_n, const ClassParams& params);

enum class Verdict { consistent, necessary_condition_violated };

// "consistent-to-order-<order>" or "necessary-condition-violated".
std::string to_string(Verdict v, std::size_t order);

struct MembershipReport {
  SchwarzCandidate f_side;  // u in the subordination for f
  SchwarzCandidate g_side;  // v in the subordination for g = f^{-1}
  std::size_t order = 0;
  Verdict verdict = Verdict::consistent;
  TruncatedSeries<ComplexQ5> inverse{std::size_t{1}};
};

// Builds both left-hand sides to order N, solves the Schwarz candidates and
// evaluates the necessary coefficient conditions on each.
MembershipReport membership_witness(const NormalizedSeries<ComplexQ5>& f, const ClassParams& params,
                                    std::size_t order);

}  // namespace faberkit
