#include "faberkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "faberkit/bounds.hpp"
#include "faberkit/faber.hpp"
#include "faberkit/golden.hpp"
#include "faberkit/scalar_text.hpp"
#include "faberkit/series.hpp"
#include "faberkit/tremblay.hpp"

namespace faberkit::cli {

namespace {

using nlohmann::json;

enum class Format { exact, floating };
enum class Output { json, csv };

// Options every subcommand understands.
struct Common {
  std::optional<std::size_t> order;
  std::string format = "exact";
  unsigned precision = kDefaultPrecisionBits;
  std::string output = "json";

  Format fmt() const { return format == "float" ? Format::floating : Format::exact; }
  Output out() const { return output == "csv" ? Output::csv : Output::json; }
};

// Usage-level failure detected after CLI11 parsing (bad flag combinations,
// malformed literals).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Default --precision; a malformed environment value is a usage error.
std::optional<unsigned> default_precision() {
  const char* env = std::getenv(kPrecisionEnv);
  if (!env) return kDefaultPrecisionBits;
  try {
    std::size_t used = 0;
    const long v = std::stol(env, &used);
    if (used == std::string(env).size() && v >= 53 && v <= static_cast<long>(1U << 20)) {
      return static_cast<unsigned>(v);
    }
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--order", c.order, "Truncation order N")->check(CLI::Range(0, 100000));
  sub->add_option("--format", c.format, "Value rendering")->check(CLI::IsMember({"exact", "float"}));
  sub->add_option("--precision", c.precision, "Float precision in bits")
      ->check(CLI::Range(53U, 1U << 20));
  sub->add_option("--output", c.output, "Output encoding")->check(CLI::IsMember({"json", "csv"}));
}

json approx_json(const Approximation& a, unsigned bits) {
  return json{{"value", a.value.to_double()},
              {"digits", a.value.str(decimal_digits(bits))},
              {"error_bound", mpfr_get_d(a.error_bound.get(), MPFR_RNDU)}};
}

json interval_json(const Interval& enc, unsigned bits) { return approx_json(Approximation(enc), bits); }

json scalar_json(const ComplexQ5& x, const Common& c) {
  if (c.fmt() == Format::exact) return x.str();
  if (x.is_real()) return approx_json(to_float(x.re(), c.precision), c.precision);
  const ComplexApproximation a = to_float(x, c.precision);
  return json{{"re", approx_json(a.re, c.precision)}, {"im", approx_json(a.im, c.precision)}};
}

json series_json(const TruncatedSeries<ComplexQ5>& s, const Common& c, std::size_t from = 0) {
  json arr = json::array();
  for (std::size_t n = from; n <= s.order(); ++n) arr.push_back(scalar_json(s[n], c));
  return arr;
}

ComplexQ5 scalar_arg(const std::string& text, const char* name) {
  try {
    return parse_scalar(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

Rational rational_arg(const std::string& text, const char* name) {
  return narrow_to_rational(scalar_arg(text, name));
}

ComplexRational complex_rational_arg(const std::string& text, const char* name) {
  return narrow_to_complex_rational(scalar_arg(text, name));
}

std::vector<ComplexQ5> json_coefficients(const json& j) {
  if (!j.is_array()) throw UsageError("series JSON must be an array of coefficients");
  std::vector<ComplexQ5> out;
  for (const auto& item : j) {
    if (item.is_string()) {
      out.push_back(scalar_arg(item.get<std::string>(), "json"));
    } else if (item.is_number_integer()) {
      out.push_back(ComplexQ5(QSqrt5(Rational(Integer(item.dump())))));
    } else {
      throw UsageError("series JSON coefficients must be exact strings or integers");
    }
  }
  if (out.empty()) throw UsageError("series JSON must not be empty");
  return out;
}

// Series input from exactly one of --coeffs, --json, --json-file.
struct SeriesInput {
  std::string coeffs;
  std::string json_text;
  std::string json_file;

  void attach(CLI::App* sub) {
    auto* a = sub->add_option("--coeffs", coeffs, "Comma-separated coefficients c_0,c_1,...");
    auto* b = sub->add_option("--json", json_text, "JSON array of coefficient strings, from c_0");
    auto* f = sub->add_option("--json-file", json_file, "File holding the JSON coefficient array");
    a->excludes(b)->excludes(f);
    b->excludes(f);
  }

  TruncatedSeries<ComplexQ5> read(const Common& c) const {
    std::vector<ComplexQ5> v;
    if (!coeffs.empty()) {
      try {
        v = parse_coefficient_list(coeffs);
      } catch (const ParseError& e) {
        throw UsageError(std::string("--coeffs: ") + e.what());
      }
    } else if (!json_text.empty()) {
      v = json_coefficients(parse_json(json_text));
    } else if (!json_file.empty()) {
      std::ifstream in(json_file);
      if (!in) throw UsageError("cannot open " + json_file);
      std::stringstream ss;
      ss << in.rdbuf();
      v = json_coefficients(parse_json(ss.str()));
    } else {
      throw UsageError("a series is required (--coeffs, --json or --json-file)");
    }
    TruncatedSeries<ComplexQ5> s(std::move(v));
    if (c.order) s = s.truncated(*c.order);
    return s;
  }

  static json parse_json(const std::string& text) {
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("invalid JSON: ") + e.what());
    }
  }
};

// "3" or "3..10".
std::vector<unsigned> parse_index_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) return {static_cast<unsigned>(std::stoul(text))};
    const unsigned lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
    const unsigned hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
    if (hi < lo || hi - lo > 10000) throw UsageError("bad index range " + text);
    std::vector<unsigned> out;
    for (unsigned k = lo; k <= hi; ++k) out.push_back(k);
    return out;
  } catch (const std::logic_error&) {
    throw UsageError("bad index or range '" + text + "'");
  }
}

std::optional<std::string> exact_string(const BoundValue& v) {
  if (auto x = v.exact_value()) return x->str();
  if (v.is_exact()) return "(" + v.coefficient.exact->str() + ")*sqrt(" + v.radicand.exact->str() + ")";
  return std::nullopt;
}

json bound_value_json(const BoundValue& v, unsigned bits) {
  json j = json::object();
  const Approximation a(v.enclosure());
  if (auto x = v.exact_value()) {
    j["exact"] = x->str();
  } else {
    j["exact"] = nullptr;
    if (v.is_exact()) {
      j["exact_radical"] = {{"coefficient", v.coefficient.exact->str()}, {"radicand", v.radicand.exact->str()}};
    }
  }
  j["bound_float"] = a.value.to_double();
  j["digits"] = a.value.str(decimal_digits(bits));
  j["error_bound"] = mpfr_get_d(a.error_bound.get(), MPFR_RNDU);
  return j;
}

json report_json(const BoundReport& r) {
  json j = bound_value_json(r.chosen_branch().value, r.precision_bits);
  j["kind"] = r.kind;
  j["n"] = r.n ? json(*r.n) : json(nullptr);
  j["gamma"] = r.gamma.str();
  j["mu"] = r.mu.str();
  j["rho"] = r.rho.str();
  j["branch"] = r.chosen_branch().id;
  j["precision_bits"] = r.precision_bits;
  j["flags"] = r.flags;
  json branches = json::array();
  for (const auto& b : r.branches) {
    json bj = bound_value_json(b.value, r.precision_bits);
    bj["id"] = b.id;
    branches.push_back(std::move(bj));
  }
  j["branches"] = std::move(branches);
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out.push_back(ch);
  }
  return out + "\"";
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void csv_report_rows(const BoundReport& r, std::ostream& out) {
  auto row = [&](const std::string& branch, const BoundValue& v) {
    const Approximation a(v.enclosure());
    out << (r.n ? std::to_string(*r.n) : std::string()) << ',' << csv_escape(r.gamma.str()) << ','
        << csv_escape(r.mu.str()) << ',' << csv_escape(r.rho.str()) << ',' << csv_escape(branch) << ','
        << csv_escape(exact_string(v).value_or("")) << ',' << a.value.str(decimal_digits(r.precision_bits)) << ','
        << format_double(mpfr_get_d(a.error_bound.get(), MPFR_RNDU)) << '\n';
  };
  for (const auto& b : r.branches) row(r.kind + "." + b.id, b.value);
  if (r.branches.size() > 1) row(r.kind + ".min(" + r.chosen_branch().id + ")", r.chosen_branch().value);
}

constexpr const char* kBoundCsvHeader = "n,gamma,mu,rho,branch,exact,float,error_bound\n";

json candidate_json(const SchwarzCandidate& cand, const Common& c) {
  json coeffs = json::array();
  for (const auto& x : cand.coeffs) coeffs.push_back(scalar_json(x, c));
  auto flag = [](const std::optional<bool>& f) { return f ? json(*f) : json(nullptr); };
  return json{{"coefficients", std::move(coeffs)},
              {"c1_within", flag(cand.c1_within)},
              {"c1_on_boundary", flag(cand.c1_on_boundary)},
              {"c2_within", flag(cand.c2_within)},
              {"c2_on_boundary", flag(cand.c2_on_boundary)},
              {"feasible", cand.feasible()}};
}

struct Mu {
  std::string mu = "1";
  std::string rho = "1";
  void attach(CLI::App* sub) {
    sub->add_option("--mu", mu, "Operator parameter mu in (0,1]");
    sub->add_option("--rho", rho, "Operator parameter rho in (0,1]");
  }
  OperatorParams params() const { return OperatorParams(rational_arg(mu, "mu"), rational_arg(rho, "rho")); }
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void require_json(const Common& c, const char* cmd) {
  if (c.out() == Output::csv) throw UsageError(std::string(cmd) + " supports --output json only");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Faber-polynomial, golden-subordination and coefficient-bound toolkit", "faberkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Common common;
  const auto env_precision = default_precision();
  if (!env_precision) {
    err << json{{"error", "usage"},
                {"message", std::string(kPrecisionEnv) + " must be an integer between 53 and 1048576"}}
               .dump()
        << '\n';
    return kExitUsage;
  }
  common.precision = *env_precision;
  SeriesInput series_in;
  Mu mu;
  std::string gamma_text = "1";
  unsigned n_arg = 0, m_arg = 0;
  long p_arg = 0;
  std::string a_list;
  std::string route = "recursive";
  std::string z_text, unit_cos_text;
  int theorem = 1;
  std::string quantity = "a2";
  std::vector<std::string> gamma_list;
  std::string n_range = "3";
  std::string which = "all";

  auto* revert = app.add_subcommand("revert", "Compositional inverse of a normalized series (order-by-order)");
  auto* bell = app.add_subcommand("bell", "Partition sum G_n^m(a_1..a_n)");
  auto* faber_k = app.add_subcommand("faber-k", "Faber coefficient K_n^p of a normalized series");
  auto* inverse = app.add_subcommand("inverse", "Inverse-map coefficients b_n = K_{n-1}^{-n}/n");
  auto* fib = app.add_subcommand("fib", "Fibonacci table F_0..F_N");
  auto* ptilde = app.add_subcommand("ptilde", "Taylor coefficients of ptilde");
  auto* ptilde_eval_cmd = app.add_subcommand("ptilde-eval", "Evaluate ptilde at a point");
  auto* schwarz = app.add_subcommand("schwarz-solve", "Formal Schwarz coefficients of P = ptilde(w)");
  auto* tremblay = app.add_subcommand("tremblay", "Apply the Tremblay multiplier to a normalized series");
  auto* lhs = app.add_subcommand("class-lhs", "Left-hand side of the class subordination");
  auto* witness = app.add_subcommand("witness", "Membership witness for f and its inverse");
  auto* bound = app.add_subcommand("bound", "Coefficient bound evaluators");
  auto* check = app.add_subcommand("check-corollaries", "Theorem-to-corollary specialization checks");

  for (auto* sub : {revert, bell, faber_k, inverse, fib, ptilde, ptilde_eval_cmd, schwarz, tremblay, lhs, witness,
                    bound, check}) {
    add_common(sub, common);
  }
  for (auto* sub : {revert, faber_k, inverse, schwarz, tremblay, lhs, witness}) series_in.attach(sub);
  for (auto* sub : {tremblay, lhs, witness, bound}) mu.attach(sub);
  for (auto* sub : {lhs, witness}) sub->add_option("--gamma", gamma_text, "Complex order gamma != 0");

  bell->add_option("--n", n_arg, "Index n")->required();
  bell->add_option("--m", m_arg, "Number of parts m")->required();
  bell->add_option("--coeffs", a_list, "a_1,...,a_n")->required();
  faber_k->add_option("--n", n_arg, "Index n")->required();
  faber_k->add_option("--p", p_arg, "Integer exponent p")->required();
  ptilde->add_option("--route", route, "Coefficient route")
      ->check(CLI::IsMember({"recursive", "fibonacci", "direct"}));
  auto* z_opt = ptilde_eval_cmd->add_option("--z", z_text, "Exact point in Q(sqrt5, i)");
  auto* c_opt = ptilde_eval_cmd->add_option("--unit-cos", unit_cos_text,
                                            "Point on the unit circle with the given rational real part");
  z_opt->excludes(c_opt);
  bound->add_option("--theorem", theorem, "1 (general a_n) or 2 (a_2, a_3)")->check(CLI::IsMember({1, 2}));
  bound->add_option("--quantity", quantity, "For theorem 2: a2 or a3")->check(CLI::IsMember({"a2", "a3"}));
  bound->add_option("--n", n_range, "Index or range lo..hi (theorem 1)");
  bound->add_option("--gamma", gamma_list, "Complex order gamma (repeatable)");
  check->add_option("--which", which, "1, 2, 3, 4 or all")->check(CLI::IsMember({"1", "2", "3", "4", "all"}));
  check->add_option("--gamma", gamma_list, "Grid of gamma values (repeatable)");
  check->add_option("--n", n_range, "Index or range lo..hi");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    std::ostringstream discard;
    app.exit(e, discard, err);
    err << app.help();
    return kExitUsage;
  }

  // Payload is buffered so nothing reaches `out` on failure.
  std::ostringstream payload;
  try {
    const Common& c = common;
    if (revert->parsed()) {
      require_json(c, "revert");
      const NormalizedSeries<ComplexQ5> f(series_in.read(c));
      emit(payload, json{{"order", f.order()}, {"coefficients", series_json(series_revert(f), c)}});
    } else if (bell->parsed()) {
      require_json(c, "bell");
      std::vector<ComplexQ5> a;
      try {
        a = parse_coefficient_list(a_list);
      } catch (const ParseError& e) {
        throw UsageError(std::string("--coeffs: ") + e.what());
      }
      const ComplexQ5 v = bell_G<ComplexQ5>(n_arg, m_arg, a);
      emit(payload, json{{"n", n_arg}, {"m", m_arg}, {"value", scalar_json(v, c)}});
    } else if (faber_k->parsed()) {
      require_json(c, "faber-k");
      const NormalizedSeries<ComplexQ5> f(series_in.read(c));
      const ComplexQ5 v = faber_K<ComplexQ5>(n_arg, p_arg, f);
      emit(payload, json{{"n", n_arg}, {"p", p_arg}, {"value", scalar_json(v, c)}});
    } else if (inverse->parsed()) {
      require_json(c, "inverse");
      const NormalizedSeries<ComplexQ5> f(series_in.read(c));
      const TruncatedSeries<ComplexQ5> g = inverse_coeffs_faber(f);
      emit(payload, json{{"order", f.order()}, {"b_first_index", 2}, {"b", series_json(g, c, 2)},
                         {"coefficients", series_json(g, c)}});
    } else if (fib->parsed()) {
      const std::size_t N = c.order.value_or(20);
      const auto table = fibonacci_table(static_cast<unsigned>(N));
      if (c.out() == Output::csv) {
        payload << "n,fibonacci\n";
        for (std::size_t n = 0; n < table.size(); ++n) payload << n << ',' << table[n].get_str() << '\n';
      } else {
        json arr = json::array();
        for (const auto& v : table) arr.push_back(v.get_str());
        emit(payload, json{{"order", N}, {"fibonacci", std::move(arr)}});
      }
    } else if (ptilde->parsed()) {
      const std::size_t N = c.order.value_or(10);
      TruncatedSeries<QSqrt5> s(N);
      if (route == "direct") {
        s = ptilde_series_direct(N);
      } else {
        s = ptilde_series(N);
        if (route == "fibonacci") {
          for (std::size_t n = 1; n <= N; ++n) s[n] = ptilde_coeff_fibonacci(static_cast<unsigned>(n));
        }
      }
      const auto sc = to_complex_q5(s);
      if (c.out() == Output::csv) {
        payload << "n,exact,float,error_bound\n";
        for (std::size_t n = 0; n <= N; ++n) {
          const Approximation a = to_float(s[n], c.precision);
          payload << n << ',' << csv_escape(s[n].str()) << ',' << a.value.str(decimal_digits(c.precision)) << ','
                  << format_double(mpfr_get_d(a.error_bound.get(), MPFR_RNDU)) << '\n';
        }
      } else {
        emit(payload, json{{"order", N}, {"route", route}, {"coefficients", series_json(sc, c)}});
      }
    } else if (ptilde_eval_cmd->parsed()) {
      require_json(c, "ptilde-eval");
      const unsigned bits = c.precision;
      json j;
      if (!unit_cos_text.empty()) {
        const Rational cs = rational_arg(unit_cos_text, "unit-cos");
        if (cs.abs() > Rational(1)) throw DomainError("--unit-cos must lie in [-1, 1]");
        const Interval re(cs, bits);
        const Interval im = (Interval(Rational(1), bits) - re.square()).sqrt();
        const ComplexInterval v = ptilde_eval(ComplexInterval{re, im}, bits);
        j = json{{"z", {{"unit_cos", cs.str()}}},
                 {"re", interval_json(v.re, bits)},
                 {"im", interval_json(v.im, bits)},
                 {"abs", interval_json(v.abs(), bits)}};
      } else {
        if (z_text.empty()) throw UsageError("ptilde-eval needs --z or --unit-cos");
        const ComplexQ5 z = scalar_arg(z_text, "z");
        const ComplexQ5 v = ptilde_eval_exact(z);
        const ComplexInterval e(v, bits);
        j = json{{"z", z.str()},
                 {"exact", v.str()},
                 {"re", interval_json(e.re, bits)},
                 {"im", interval_json(e.im, bits)},
                 {"abs", interval_json(e.abs(), bits)}};
      }
      emit(payload, j);
    } else if (schwarz->parsed()) {
      require_json(c, "schwarz-solve");
      const TruncatedSeries<ComplexQ5> P = series_in.read(c);
      emit(payload, candidate_json(solve_schwarz(P), c));
    } else if (tremblay->parsed()) {
      require_json(c, "tremblay");
      const NormalizedSeries<ComplexQ5> f(series_in.read(c));
      const OperatorParams op = mu.params();
      emit(payload, json{{"mu", op.mu().str()},
                         {"rho", op.rho().str()},
                         {"in_fractional_window", op.in_fractional_window()},
                         {"coefficients", series_json(apply_tremblay(f, op), c)}});
    } else if (lhs->parsed()) {
      require_json(c, "class-lhs");
      const NormalizedSeries<ComplexQ5> f(series_in.read(c));
      const ClassParams params(complex_rational_arg(gamma_text, "gamma"), mu.params());
      const auto s = class_lhs(f, params);
      emit(payload, json{{"order", s.order()}, {"coefficients", series_json(s, c)}});
    } else if (witness->parsed()) {
      require_json(c, "witness");
      const TruncatedSeries<ComplexQ5> s = series_in.read(c);
      const NormalizedSeries<ComplexQ5> f(s);
      const ClassParams params(complex_rational_arg(gamma_text, "gamma"), mu.params());
      const MembershipReport r = membership_witness(f, params, s.order());
      emit(payload, json{{"order", r.order},
                         {"verdict", to_string(r.verdict, r.order)},
                         {"inverse", series_json(r.inverse, c)},
                         {"f_side", candidate_json(r.f_side, c)},
                         {"g_side", candidate_json(r.g_side, c)},
                         {"in_fractional_window", params.op().in_fractional_window()}});
    } else if (bound->parsed()) {
      const OperatorParams op = mu.params();
      if (gamma_list.empty()) gamma_list.push_back("1");
      std::vector<BoundReport> reports;
      for (const auto& gt : gamma_list) {
        const ComplexRational g = complex_rational_arg(gt, "gamma");
        if (theorem == 1) {
          for (unsigned n : parse_index_range(n_range)) reports.push_back(bound_theorem1(n, g, op, c.precision));
        } else {
          reports.push_back(quantity == "a2" ? bound_a2(g, op, c.precision) : bound_a3(g, op, c.precision));
        }
      }
      if (c.out() == Output::csv) {
        payload << kBoundCsvHeader;
        for (const auto& r : reports) csv_report_rows(r, payload);
      } else if (reports.size() == 1) {
        emit(payload, report_json(reports.front()));
      } else {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        emit(payload, json{{"bounds", std::move(arr)}});
      }
    } else if (check->parsed()) {
      if (gamma_list.empty()) gamma_list = {"1", "2", "1/2", "2+i", "-3+4i", "1+i", "i"};
      if (n_range == "3") n_range = "3..10";
      std::vector<GridPoint> grid;
      for (const auto& gt : gamma_list) {
        const ComplexRational g = complex_rational_arg(gt, "gamma");
        if (g.is_zero()) throw DomainError("gamma must be nonzero");
        for (unsigned n : parse_index_range(n_range)) grid.push_back({g, n});
      }
      std::vector<int> which_list = which == "all" ? std::vector<int>{1, 2, 3, 4} : std::vector<int>{std::stoi(which)};
      std::vector<CheckRow> rows;
      for (int w : which_list) {
        std::vector<GridPoint> g = grid;
        if (w == 3) {
          // a_2/a_3 bounds do not depend on n: one point per gamma.
          g.clear();
          for (const auto& p : grid) {
            if (std::none_of(g.begin(), g.end(), [&](const GridPoint& q) { return q.gamma == p.gamma; })) {
              g.push_back(p);
            }
          }
        }
        auto r = corollary_specialization_check(w, g, c.precision);
        rows.insert(rows.end(), r.begin(), r.end());
      }
      const bool all_pass = std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
      if (c.out() == Output::csv) {
        payload << "corollary,quantity,gamma,n,mode,theorem_value,corollary_value,abs_diff,pass\n";
        for (const auto& r : rows) {
          payload << r.corollary << ',' << csv_escape(r.quantity) << ',' << csv_escape(r.gamma.str()) << ','
                  << (r.n ? std::to_string(*r.n) : std::string()) << ',' << r.mode << ',' << format_double(r.lhs)
                  << ',' << format_double(r.rhs) << ',' << format_double(r.abs_diff) << ','
                  << (r.pass ? "true" : "false") << '\n';
        }
      } else {
        json arr = json::array();
        for (const auto& r : rows) {
          arr.push_back(json{{"corollary", r.corollary},
                             {"quantity", r.quantity},
                             {"gamma", r.gamma.str()},
                             {"n", r.n ? json(*r.n) : json(nullptr)},
                             {"mode", r.mode},
                             {"theorem_value", r.lhs},
                             {"corollary_value", r.rhs},
                             {"abs_diff", r.abs_diff},
                             {"pass", r.pass}});
        }
        emit(payload, json{{"all_pass", all_pass}, {"tolerance", kCorollaryTolerance}, {"rows", std::move(arr)}});
      }
    }
  } catch (const UsageError& e) {
    err << json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << json{{"error", "domain"}, {"message", e.what()}}.dump() << '\n';
    return kExitDomain;
  }
  out << payload.str();
  return kExitOk;
}

}  // namespace faberkit::cli
