#include "faberkit/tremblay.hpp"

#include "faberkit/faber.hpp"

namespace faberkit {

OperatorParams::OperatorParams(Rational mu, Rational rho) : mu_(std::move(mu)), rho_(std::move(rho)) {
  if (mu_.sign() <= 0 || mu_ > Rational(1)) throw DomainError("mu must lie in (0, 1], got " + mu_.str());
  if (rho_.sign() <= 0 || rho_ > Rational(1)) throw DomainError("rho must lie in (0, 1], got " + rho_.str());
}

bool OperatorParams::in_fractional_window() const {
  const Rational d = mu_ - rho_;
  return d.sign() > 0 && d < Rational(1);
}

ClassParams::ClassParams(ComplexRational gamma, OperatorParams op) : gamma_(std::move(gamma)), op_(std::move(op)) {
  if (gamma_.is_zero()) throw DomainError("gamma must be nonzero");
}

Rational tremblay_multiplier(unsigned n, const OperatorParams& op) {
  return pochhammer(op.mu(), n) / pochhammer(op.rho(), n);
}

Rational shifted_ratio(unsigned n, const OperatorParams& op) {
  if (n < 1) throw DomainError("shifted_ratio requires n >= 1");
  return pochhammer(op.mu() + Rational(1), n - 1) / pochhammer(op.rho() + Rational(1), n - 1);
}

TruncatedSeries<ComplexQ5> class_lhs(const NormalizedSeries<ComplexQ5>& h, const ClassParams& params) {
  const OperatorParams& op = params.op();
  const TruncatedSeries<ComplexQ5> applied = apply_tremblay(h, op);
  TruncatedSeries<ComplexQ5> lhs = series_scale(series_derivative(applied), ComplexQ5(QSqrt5(op.rho() / op.mu())));
  lhs[0] -= ComplexQ5(1);
  lhs = series_scale(lhs, ComplexQ5(1) / ComplexQ5(params.gamma()));
  lhs[0] += ComplexQ5(1);
  return lhs;
}

ComplexQ5 class_lhs_coefficient(unsigned n, const ComplexQ5& a_n, const ClassParams& params) {
  const Rational scale = shifted_ratio(n, params.op()) * Rational(static_cast<long>(n));
  return ComplexQ5(QSqrt5(scale)) * a_n / ComplexQ5(params.gamma());
}

std::string to_string(Verdict v, std::size_t order) {
  return v == Verdict::consistent ? "consistent-to-order-" + std::to_string(order) : "necessary-condition-violated";
}

MembershipReport membership_witness(const NormalizedSeries<ComplexQ5>& f, const ClassParams& params,
                                    std::size_t order) {
  if (order < 3) throw DomainError("membership_witness requires order >= 3");
  if (f.order() < order) throw DomainError("series order is below the requested witness order");
  const NormalizedSeries<ComplexQ5> fN(f.series().truncated(order));
  const NormalizedSeries<ComplexQ5> gN(inverse_coeffs_faber(fN));

  MembershipReport report;
  report.order = order;
  report.inverse = gN.series();
  report.f_side = solve_schwarz(class_lhs(fN, params));
  report.g_side = solve_schwarz(class_lhs(gN, params));
  report.verdict = report.f_side.feasible() && report.g_side.feasible() ? Verdict::consistent
                                                                        : Verdict::necessary_condition_violated;
  return report;
}

}  // namespace faberkit
