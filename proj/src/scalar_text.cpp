#include "faberkit/scalar_text.hpp"

#include <cctype>

#include "faberkit/error.hpp"

namespace faberkit {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ComplexQ5 parse() {
    ComplexQ5 v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  ComplexQ5 expr() {
    ComplexQ5 v = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  ComplexQ5 term() {
    ComplexQ5 v = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const ComplexQ5 d = unary();
        if (d.is_zero()) throw DomainError("division by zero in scalar literal");
        v /= d;
      } else if (starts_atom()) {
        v *= unary();
      } else {
        return v;
      }
    }
  }

  ComplexQ5 unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return atom();
  }

  ComplexQ5 atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      ComplexQ5 v = expr();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (text_.substr(pos_, 7) == "sqrt(5)") {
      pos_ += 7;
      return ComplexQ5(QSqrt5::sqrt5());
    }
    if (text_.substr(pos_, 5) == "sqrt5") {
      pos_ += 5;
      return ComplexQ5(QSqrt5::sqrt5());
    }
    if (text_[pos_] == 'i') {
      ++pos_;
      return ComplexQ5::i();
    }
    if (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.') return number();
    fail("unexpected character");
  }

  // Integer or terminating decimal, both exact.
  ComplexQ5 number() {
    std::string digits;
    std::size_t frac_digits = 0;
    bool seen_point = false;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits.push_back(c);
        if (seen_point) ++frac_digits;
      } else if (c == '.' && !seen_point) {
        seen_point = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty()) fail("malformed number");
    Integer den = 1;
    for (std::size_t k = 0; k < frac_digits; ++k) den *= 10;
    return ComplexQ5(QSqrt5(Rational(Integer(digits, 10), den)));
  }

  bool starts_atom() const {
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || c == 'i' || c == 's' || c == '.' || std::isdigit(static_cast<unsigned char>(c));
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse scalar '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// U+2212 MINUS SIGN is accepted as '-'.
std::string normalize_minus(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text.substr(k, 3) == "\xE2\x88\x92") {
      out.push_back('-');
      k += 2;
    } else {
      out.push_back(text[k]);
    }
  }
  return out;
}

}  // namespace

ComplexQ5 parse_scalar(std::string_view text) {
  const std::string normalized = normalize_minus(text);
  return Parser(normalized).parse();
}

Rational narrow_to_rational(const ComplexQ5& x) {
  if (!x.is_real() || !x.re().is_rational()) throw DomainError("value " + x.str() + " is not rational");
  return x.re().rational_part();
}

QSqrt5 narrow_to_qsqrt5(const ComplexQ5& x) {
  if (!x.is_real()) throw DomainError("value " + x.str() + " is not real");
  return x.re();
}

ComplexRational narrow_to_complex_rational(const ComplexQ5& x) {
  if (!x.re().is_rational() || !x.im().is_rational()) {
    throw DomainError("value " + x.str() + " has irrational components");
  }
  return ComplexRational(x.re().rational_part(), x.im().rational_part());
}

Rational parse_rational(std::string_view text) { return narrow_to_rational(parse_scalar(text)); }
QSqrt5 parse_qsqrt5(std::string_view text) { return narrow_to_qsqrt5(parse_scalar(text)); }
ComplexRational parse_complex_rational(std::string_view text) {
  return narrow_to_complex_rational(parse_scalar(text));
}

std::vector<ComplexQ5> parse_coefficient_list(std::string_view text) {
  std::vector<ComplexQ5> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out.push_back(parse_scalar(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace faberkit
