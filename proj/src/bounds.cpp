#include "faberkit/bounds.hpp"

#include <algorithm>

#include "faberkit/golden.hpp"

namespace faberkit {

Real operator+(const Real& a, const Real& b) {
  Real out(a.enclosure + b.enclosure);
  if (a.exact && b.exact) out.exact = *a.exact + *b.exact;
  return out;
}

Real operator-(const Real& a, const Real& b) {
  Real out(a.enclosure - b.enclosure);
  if (a.exact && b.exact) out.exact = *a.exact - *b.exact;
  return out;
}

Real operator*(const Real& a, const Real& b) {
  Real out(a.enclosure * b.enclosure);
  if (a.exact && b.exact) out.exact = *a.exact * *b.exact;
  return out;
}

Real operator/(const Real& a, const Real& b) {
  if (b.exact && b.exact->is_zero()) throw DomainError("division by zero in bound evaluation");
  Real out(a.enclosure / b.enclosure);
  if (a.exact && b.exact) out.exact = *a.exact / *b.exact;
  return out;
}

namespace {

// sqrt(r) in Q(sqrt5) for rational r >= 0 when r = s^2 or r = 5 s^2.
std::optional<QSqrt5> exact_sqrt(const Rational& r) {
  Rational root;
  if (rational_sqrt(r, root)) return QSqrt5(root);
  if (rational_sqrt(r / Rational(5), root)) return QSqrt5(Rational(0), root);
  return std::nullopt;
}

Real exact_real(const Rational& x, unsigned bits) { return Real(QSqrt5(x), bits); }
Real exact_real(const QSqrt5& x, unsigned bits) { return Real(x, bits); }

}  // namespace

Real modulus(const ComplexRational& z, unsigned bits) {
  const Rational n = z.norm();
  if (auto root = exact_sqrt(n)) return Real(*root, bits);
  return Real(Interval(n, bits).sqrt());
}

BoundValue::BoundValue(Real coeff, Real rad) : coefficient(std::move(coeff)), radicand(std::move(rad)) {
  if (radicand.exact) {
    if (radicand.exact->sign() < 0) throw DomainError("negative radicand in bound evaluation");
    if (radicand.exact->is_rational()) {
      if (auto root = exact_sqrt(radicand.exact->rational_part())) {
        coefficient = coefficient * Real(*root, coefficient.precision());
        radicand = Real(QSqrt5(1), radicand.precision());
      }
    }
  }
}

std::optional<QSqrt5> BoundValue::exact_value() const {
  if (!is_exact() || !(*radicand.exact == QSqrt5(1))) return std::nullopt;
  return coefficient.exact;
}

Interval BoundValue::enclosure() const { return coefficient.enclosure * radicand.enclosure.sqrt(); }

std::optional<int> compare(const BoundValue& a, const BoundValue& b) {
  if (a.is_exact() && b.is_exact()) {
    const int sa = a.radicand.exact->is_zero() ? 0 : a.coefficient.exact->sign();
    const int sb = b.radicand.exact->is_zero() ? 0 : b.coefficient.exact->sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    const QSqrt5 sq_a = *a.coefficient.exact * *a.coefficient.exact * *a.radicand.exact;
    const QSqrt5 sq_b = *b.coefficient.exact * *b.coefficient.exact * *b.radicand.exact;
    const int c = compare(sq_a, sq_b);
    return sa > 0 ? c : -c;
  }
  const Interval ea = a.enclosure();
  const Interval eb = b.enclosure();
  if (ea.certainly_less(eb)) return -1;
  if (eb.certainly_less(ea)) return 1;
  return std::nullopt;
}

std::size_t select_min(const std::vector<Branch>& branches, bool* decided) {
  if (branches.empty()) throw DomainError("no branches to select from");
  std::size_t chosen = 0;
  bool ok = true;
  for (std::size_t i = 1; i < branches.size(); ++i) {
    const auto c = compare(branches[i].value, branches[chosen].value);
    if (!c) {
      ok = false;
    } else if (*c < 0) {
      chosen = i;
    }
  }
  if (decided) *decided = ok;
  return chosen;
}

namespace {

struct SharedTerms {
  Real abs_tau;
  Real tau_sq;
  Real A;  // (mu+1)(mu+2) / ((rho+1)(rho+2))
  Real B;  // (mu+1)^2 / (rho+1)^2
  Real abs_gamma;
  Real X;  // |3 gamma A - 12 B| |tau| + 4 B
};

SharedTerms shared_terms(const ComplexRational& gamma, const OperatorParams& op, unsigned bits) {
  const Rational mu1 = op.mu() + Rational(1);
  const Rational rho1 = op.rho() + Rational(1);
  const Rational A = mu1 * (mu1 + Rational(1)) / (rho1 * (rho1 + Rational(1)));
  const Rational B = mu1 * mu1 / (rho1 * rho1);
  const ComplexRational W(Rational(3) * A * gamma.re() - Rational(12) * B, Rational(3) * A * gamma.im());
  const QSqrt5& abs_tau = golden().abs_tau;
  Real abs_tau_r = exact_real(abs_tau, bits);
  Real X = modulus(W, bits) * abs_tau_r + exact_real(Rational(4) * B, bits);
  return {abs_tau_r, exact_real(abs_tau * abs_tau, bits), exact_real(A, bits), exact_real(B, bits),
          modulus(gamma, bits), std::move(X)};
}

BoundReport make_report(std::string kind, const ComplexRational& gamma, const OperatorParams& op) {
  BoundReport r;
  r.kind = std::move(kind);
  r.gamma = gamma;
  r.mu = op.mu();
  r.rho = op.rho();
  if (!op.in_fractional_window()) r.flags.emplace_back("operator-params-outside-fractional-window");
  return r;
}

void require_gamma(const ComplexRational& gamma) {
  if (gamma.is_zero()) throw DomainError("gamma must be nonzero");
}

template <typename BuildBranches>
BoundReport min_bound(BoundReport report, unsigned bits, BuildBranches build) {
  if (bits < 53) throw DomainError("precision must be at least 53 bits");
  for (;;) {
    std::vector<std::string> extra;
    std::vector<Branch> branches = build(bits, extra);
    bool decided = false;
    const std::size_t chosen = select_min(branches, &decided);
    if (decided || bits >= kMaxPrecisionBits) {
      report.branches = std::move(branches);
      report.chosen = chosen;
      report.precision_bits = bits;
      report.flags.insert(report.flags.end(), extra.begin(), extra.end());
      if (!decided) report.flags.emplace_back("branch-undecided-at-max-precision");
      return report;
    }
    bits = std::min(bits * 2, kMaxPrecisionBits);
  }
}

}  // namespace

BoundReport bound_theorem1(unsigned n, const ComplexRational& gamma, const OperatorParams& op, unsigned bits) {
  if (n < 3) throw DomainError("the general coefficient bound holds for n >= 3");
  require_gamma(gamma);
  if (bits < 53) throw DomainError("precision must be at least 53 bits");
  BoundReport report = make_report("theorem1", gamma, op);
  report.n = n;
  report.precision_bits = bits;
  const Rational ratio = pochhammer(op.rho() + Rational(1), n - 1) /
                         (Rational(static_cast<long>(n)) * pochhammer(op.mu() + Rational(1), n - 1));
  // |gamma| |tau| ratio, carried as (|tau| ratio) * sqrt(|gamma|^2).
  BoundValue v(exact_real(golden().abs_tau * QSqrt5(ratio), bits), exact_real(gamma.norm(), bits));
  report.branches.push_back({"theorem1", std::move(v)});
  return report;
}

BoundReport bound_a2(const ComplexRational& gamma, const OperatorParams& op, unsigned bits) {
  require_gamma(gamma);
  return min_bound(make_report("a2", gamma, op), bits, [&](unsigned b, std::vector<std::string>&) {
    const SharedTerms t = shared_terms(gamma, op, b);
    std::vector<Branch> out;
    out.push_back({"first", BoundValue(t.abs_gamma * t.abs_tau, exact_real(Rational(1), b) / t.X)});
    out.push_back({"second", BoundValue(t.abs_tau, t.abs_gamma / t.A)});
    return out;
  });
}

BoundReport bound_a3(const ComplexRational& gamma, const OperatorParams& op, unsigned bits) {
  require_gamma(gamma);
  return min_bound(make_report("a3", gamma, op), bits, [&](unsigned b, std::vector<std::string>& flags) {
    const SharedTerms t = shared_terms(gamma, op, b);
    const Real three(QSqrt5(3), b);
    const Real four_B = Real(QSqrt5(4), b) * t.B;
    std::vector<Branch> out;
    out.push_back({"first", BoundValue(t.tau_sq / t.A, exact_real(gamma.norm(), b))});
    const Real numerator = three * t.A * t.abs_gamma * t.abs_tau - four_B;
    const Real second = t.abs_tau * t.abs_gamma / (three * t.A) * (Real(QSqrt5(1), b) + numerator / t.X);
    const bool numerator_negative =
        numerator.exact ? numerator.exact->sign() < 0 : numerator.enclosure.certainly_negative();
    if (numerator_negative) flags.emplace_back("second-branch-numerator-negative");
    const bool value_negative = second.exact ? second.exact->sign() < 0 : second.enclosure.certainly_negative();
    if (value_negative) flags.emplace_back("second-branch-value-negative");
    out.push_back({"second", BoundValue(second, Real(QSqrt5(1), b))});
    return out;
  });
}

BoundValue corollary1(unsigned n, const ComplexRational& gamma, unsigned bits) {
  require_gamma(gamma);
  const Real abs_tau(golden().abs_tau, bits);
  return BoundValue(modulus(gamma, bits) * abs_tau / Real(QSqrt5(static_cast<long>(n)), bits),
                    Real(QSqrt5(1), bits));
}

BoundValue corollary2(unsigned n, unsigned bits) {
  return BoundValue(Real(golden().abs_tau / QSqrt5(static_cast<long>(n)), bits), Real(QSqrt5(1), bits));
}

namespace {

// 3 |gamma - 4| |tau| + 4
Real corollary3_denominator(const ComplexRational& gamma, unsigned bits) {
  const Real abs_tau(golden().abs_tau, bits);
  const Real g4 = modulus(gamma - ComplexRational(4), bits);
  return Real(QSqrt5(3), bits) * g4 * abs_tau + Real(QSqrt5(4), bits);
}

}  // namespace

std::vector<Branch> corollary3_a2(const ComplexRational& gamma, unsigned bits) {
  require_gamma(gamma);
  const Real abs_tau(golden().abs_tau, bits);
  const Real g = modulus(gamma, bits);
  std::vector<Branch> out;
  out.push_back({"first", BoundValue(g * abs_tau, Real(QSqrt5(1), bits) / corollary3_denominator(gamma, bits))});
  out.push_back({"second", BoundValue(abs_tau, g)});
  return out;
}

std::vector<Branch> corollary3_a3(const ComplexRational& gamma, unsigned bits) {
  require_gamma(gamma);
  const Real abs_tau(golden().abs_tau, bits);
  const Real g = modulus(gamma, bits);
  const Real g4 = modulus(gamma - ComplexRational(4), bits);
  const Real tau_sq = abs_tau * abs_tau;
  const Real one(QSqrt5(1), bits);
  std::vector<Branch> out;
  out.push_back({"first", BoundValue(g * tau_sq, one)});
  out.push_back({"second", BoundValue((g4 + g) * tau_sq * g / corollary3_denominator(gamma, bits), one)});
  return out;
}

BoundValue corollary4_a2(unsigned bits) {
  const QSqrt5& t = golden().abs_tau;
  return BoundValue(Real(t, bits), Real(QSqrt5(1) / (QSqrt5(9) * t + QSqrt5(4)), bits));
}

BoundValue corollary4_a3(unsigned bits) {
  const QSqrt5& t = golden().abs_tau;
  return BoundValue(Real(QSqrt5(4) * t * t / (QSqrt5(9) * t + QSqrt5(4)), bits), Real(QSqrt5(1), bits));
}

namespace {

CheckRow compare_row(int corollary, std::string quantity, const ComplexRational& gamma, std::optional<unsigned> n,
                     const BoundValue& lhs, const BoundValue& rhs) {
  CheckRow row;
  row.corollary = corollary;
  row.quantity = std::move(quantity);
  row.gamma = gamma;
  row.n = n;
  const Interval el = lhs.enclosure();
  const Interval er = rhs.enclosure();
  row.lhs = el.midpoint().to_double();
  row.rhs = er.midpoint().to_double();
  const Interval diff = (el - er).abs();
  row.abs_diff = diff.hi().to_double();
  if (lhs.is_exact() && rhs.is_exact()) {
    row.mode = "exact";
    const auto c = compare(lhs, rhs);
    row.pass = c && *c == 0;
  } else {
    row.mode = "float";
    row.pass = row.abs_diff <= kCorollaryTolerance;
  }
  return row;
}

const BoundValue& min_of(const std::vector<Branch>& branches) { return branches.at(select_min(branches)).value; }

}  // namespace

std::vector<CheckRow> corollary_specialization_check(int which, const std::vector<GridPoint>& grid, unsigned bits) {
  const OperatorParams unit(Rational(1), Rational(1));
  const ComplexRational one(1);
  std::vector<CheckRow> rows;
  switch (which) {
    case 1:
      for (const auto& p : grid) {
        rows.push_back(compare_row(1, "a_n", p.gamma, p.n, bound_theorem1(p.n, p.gamma, unit, bits).chosen_branch().value,
                                   corollary1(p.n, p.gamma, bits)));
      }
      break;
    case 2:
      for (const auto& p : grid) {
        rows.push_back(compare_row(2, "a_n", one, p.n, bound_theorem1(p.n, one, unit, bits).chosen_branch().value,
                                   corollary2(p.n, bits)));
        rows.push_back(compare_row(2, "a_n(corollary1@gamma=1)", one, p.n, corollary1(p.n, one, bits),
                                   corollary2(p.n, bits)));
      }
      break;
    case 3:
      for (const auto& p : grid) {
        const BoundReport a2 = bound_a2(p.gamma, unit, bits);
        const BoundReport a3 = bound_a3(p.gamma, unit, bits);
        const auto c2 = corollary3_a2(p.gamma, a2.precision_bits);
        const auto c3 = corollary3_a3(p.gamma, a3.precision_bits);
        for (std::size_t k = 0; k < 2; ++k) {
          rows.push_back(compare_row(3, "a_2." + c2[k].id, p.gamma, std::nullopt, a2.branches[k].value, c2[k].value));
          rows.push_back(compare_row(3, "a_3." + c3[k].id, p.gamma, std::nullopt, a3.branches[k].value, c3[k].value));
        }
        rows.push_back(compare_row(3, "a_2", p.gamma, std::nullopt, a2.chosen_branch().value, min_of(c2)));
        rows.push_back(compare_row(3, "a_3", p.gamma, std::nullopt, a3.chosen_branch().value, min_of(c3)));
      }
      break;
    case 4: {
      const BoundReport a2 = bound_a2(one, unit, bits);
      const BoundReport a3 = bound_a3(one, unit, bits);
      rows.push_back(compare_row(4, "a_2", one, std::nullopt, a2.chosen_branch().value, corollary4_a2(bits)));
      rows.push_back(compare_row(4, "a_3", one, std::nullopt, a3.chosen_branch().value, corollary4_a3(bits)));
      rows.push_back(compare_row(4, "a_2(corollary3@gamma=1)", one, std::nullopt, min_of(corollary3_a2(one, bits)),
                                 corollary4_a2(bits)));
      rows.push_back(compare_row(4, "a_3(corollary3@gamma=1)", one, std::nullopt, min_of(corollary3_a3(one, bits)),
                                 corollary4_a3(bits)));
      break;
    }
    default:
      throw DomainError("corollary index must be 1, 2, 3 or 4");
  }
  return rows;
}

}  // namespace faberkit
