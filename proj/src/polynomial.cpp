#include "hlab/polynomial.hpp"

#include <cctype>

namespace hlab {

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (is_zero(c[i])) continue;
    const bool negative = sgn(c[i]) < 0;
    const Rational mag = abs(c[i]);
    std::string body;
    if (i == 0) {
      body = to_string(mag);
    } else {
      if (mag != 1) body = to_string(mag) + "*";
      body += p.var();
      if (i > 1) body += "^" + std::to_string(i);
    }
    if (first) {
      out = (negative ? "-" : "") + body;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, char default_var) : text_(text), var_(default_var) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    std::vector<std::pair<Rational, std::size_t>> terms;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-' between terms", pos_);
      }
      auto [coeff, degree] = term();
      terms.emplace_back(negative ? Rational(-coeff) : coeff, degree);
      first = false;
    }
    const char v = saw_var_ ? var_ : default_var();
    Polynomial result(v);
    for (auto& [c, d] : terms) result = result + Polynomial::monomial(c, d, v);
    return result;
  }

 private:
  char default_var() const { return var_; }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool is_digit(char ch) const { return std::isdigit(static_cast<unsigned char>(ch)) != 0; }

  std::size_t integer_token() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return start;
  }

  std::pair<Rational, std::size_t> term() {
    Rational coeff(1);
    bool has_coeff = false;
    if (is_digit(peek())) {
      const std::size_t start = integer_token();
      if (peek() == '/') {
        ++pos_;
        integer_token();
      }
      coeff = parse_rational(text_.substr(start, pos_ - start));
      has_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      } else {
        return {coeff, 0};
      }
    }
    if (!std::isalpha(static_cast<unsigned char>(peek()))) {
      throw ParseError(has_coeff ? "expected variable after '*'" : "expected a term", pos_);
    }
    const char v = peek();
    if (saw_var_ && v != var_) {
      throw ParseError(std::string("second variable '") + v + "'", pos_);
    }
    saw_var_ = true;
    var_ = v;
    ++pos_;
    std::size_t degree = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = integer_token();
      degree = std::stoul(std::string(text_.substr(start, pos_ - start)));
    }
    return {coeff, degree};
  }

  std::string_view text_;
  char var_;
  bool saw_var_ = false;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, char default_var) {
  return PolyParser(text, default_var).parse();
}

bool has_integer_coeffs(const Polynomial& p) {
  for (const auto& c : p.coeffs()) {
    if (!is_integral(c)) return false;
  }
  return true;
}

}  // namespace hlab
