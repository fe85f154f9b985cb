#pragma once

#include <optional>
#include <string>
#include <vector>

#include "faberkit/complex.hpp"
#include "faberkit/interval.hpp"
#include "faberkit/qsqrt5.hpp"
#include "faberkit/tremblay.hpp"

namespace faberkit {

// A real number known exactly in Q(sqrt5) when possible, always enclosed.
struct Real {
  std::optional<QSqrt5> exact;
  Interval enclosure;

  Real(const QSqrt5& x, unsigned bits) : exact(x), enclosure(x, bits) {}
  explicit Real(Interval enc) : enclosure(std::move(enc)) {}

  bool is_exact() const { return exact.has_value(); }
  unsigned precision() const { return enclosure.precision(); }

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
};

// |z| for complex rational z: exact when |z|^2 is a rational square or five
// times one, otherwise an enclosure.
Real modulus(const ComplexRational& z, unsigned bits);

// coefficient * sqrt(radicand), radicand >= 0.
struct BoundValue {
  Real coefficient;
  Real radicand;

  BoundValue(Real coeff, Real rad);

  bool is_exact() const { return coefficient.is_exact() && radicand.is_exact(); }
  // The value itself when it lies in Q(sqrt5).
  std::optional<QSqrt5> exact_value() const;
  Interval enclosure() const;
};

// Exact comparison when both operands are exact, otherwise by enclosure.
// Returns -1, 0, +1, or nullopt when the enclosures overlap.
std::optional<int> compare(const BoundValue& a, const BoundValue& b);

struct Branch {
  std::string id;
  BoundValue value;
};

struct BoundReport {
  std::string kind;  // "theorem1", "a2", "a3"
  std::optional<unsigned> n;
  ComplexRational gamma;
  Rational mu;
  Rational rho;
  std::vector<Branch> branches;
  std::size_t chosen = 0;
  unsigned precision_bits = kDefaultPrecisionBits;
  std::vector<std::string> flags;

  const Branch& chosen_branch() const { return branches.at(chosen); }
};

// |a_n| <= |gamma||tau| (rho+1)_{n-1} / (n (mu+1)_{n-1}) for gap series, n >= 3.
BoundReport bound_theorem1(unsigned n, const ComplexRational& gamma, const OperatorParams& op,
                           unsigned bits = kDefaultPrecisionBits);

// Two-branch minimum bounds on |a_2| and |a_3|. Branch comparison escalates
// the precision (doubling, up to 1024 bits) while enclosures overlap.
BoundReport bound_a2(const ComplexRational& gamma, const OperatorParams& op, unsigned bits = kDefaultPrecisionBits);
BoundReport bound_a3(const ComplexRational& gamma, const OperatorParams& op, unsigned bits = kDefaultPrecisionBits);

// Closed forms of the specialized classes (mu = rho = 1, and gamma = 1).
BoundValue corollary1(unsigned n, const ComplexRational& gamma, unsigned bits = kDefaultPrecisionBits);
BoundValue corollary2(unsigned n, unsigned bits = kDefaultPrecisionBits);
// Branch pairs {first, second}; the bound is their minimum.
std::vector<Branch> corollary3_a2(const ComplexRational& gamma, unsigned bits = kDefaultPrecisionBits);
std::vector<Branch> corollary3_a3(const ComplexRational& gamma, unsigned bits = kDefaultPrecisionBits);
BoundValue corollary4_a2(unsigned bits = kDefaultPrecisionBits);
BoundValue corollary4_a3(unsigned bits = kDefaultPrecisionBits);

// Minimum of branch values (with escalation); returns the chosen index.
std::size_t select_min(const std::vector<Branch>& branches, bool* decided = nullptr);

struct GridPoint {
  ComplexRational gamma;
  unsigned n = 3;
};

struct CheckRow {
  int corollary = 0;
  std::string quantity;  // e.g. "a_n", "a_2", "a_3"
  ComplexRational gamma;
  std::optional<unsigned> n;
  std::string mode;  // "exact" or "float"
  double lhs = 0;    // theorem-side value
  double rhs = 0;    // corollary-side value
  double abs_diff = 0;
  bool pass = false;
};

inline constexpr double kCorollaryTolerance = 1e-12;

// Evaluates the theorem at the corollary's specialization and compares with
// the corollary closed form: exactly when both are exact, else within 1e-12.
std::vector<CheckRow> corollary_specialization_check(int which, const std::vector<GridPoint>& grid,
                                                     unsigned bits = kDefaultPrecisionBits);

}  // namespace faberkit
