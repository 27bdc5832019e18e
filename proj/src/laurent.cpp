#include "qlh/laurent.hpp"

#include <cctype>
#include <cstdlib>

#include "qlh/error.hpp"

namespace qlh {

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (sgn(constant) != 0) {
    auto& c = terms_.emplace(0, constant).first->second;
    c.canonicalize();
  }
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, int exponent) {
  LaurentPoly f;
  if (sgn(coeff) != 0) {
    auto& c = f.terms_.emplace(exponent, coeff).first->second;
    c.canonicalize();  // callers may pass an unreduced a/b
  }
  return f;
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> LaurentPoly::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> LaurentPoly::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

void LaurentPoly::add_term(int exponent, const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
  Rational t;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      t = ca * cb;
      add_term(ea + eb, t);
    }
  }
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  out.add_product(a, b);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly quantum_integer(long n) {
  const long m = std::labs(n);
  LaurentPoly out;
  for (long g = 0; g < m; ++g) out += LaurentPoly::q(static_cast<int>(m - 1 - 2 * g));
  return out;
}

LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw ArithmeticError("division by the zero Laurent polynomial");
  if (f.is_zero()) return {};
  const int g_top = *g.max_exponent();
  const Rational g_lead = g.coeff(g_top);
  // Any exact quotient has exponents in [min f - min g, max f - max g].
  const int lowest = *f.min_exponent() - *g.min_exponent();
  LaurentPoly remainder = f;
  LaurentPoly quotient;
  while (!remainder.is_zero()) {
    const int top = *remainder.max_exponent();
    const int shift = top - g_top;
    if (shift < lowest) throw ArithmeticError("Laurent division leaves a nonzero remainder");
    LaurentPoly term = LaurentPoly::monomial(remainder.coeff(top) / g_lead, shift);
    remainder -= term * g;
    quotient += term;
  }
  return quotient;
}

Rational eval_at_one(const LaurentPoly& f) {
  Rational sum(0);
  for (const auto& [e, c] : f.terms()) sum += c;
  return sum;
}

bool is_integral(const Rational& r) { return r.get_den() == 1; }

bool is_integral(const LaurentPoly& f) {
  for (const auto& [e, c] : f.terms()) {
    if (!is_integral(c)) return false;
  }
  return true;
}

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

std::string monomial_body(const Rational& magnitude, int exponent) {
  std::string q_part;
  if (exponent == 1) {
    q_part = "q";
  } else if (exponent != 0) {
    q_part = "q^" + std::to_string(exponent);
  }
  if (q_part.empty()) return to_string(magnitude);
  if (magnitude == 1) return q_part;
  return to_string(magnitude) + "*" + q_part;
}

}  // namespace

std::string to_string(const LaurentPoly& f, LaurentStyle style) {
  if (f.is_zero()) return "0";
  const bool spaced = style == LaurentStyle::Spaced;
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool negative = sgn(c) < 0;
    const std::string body = monomial_body(negative ? Rational(-c) : c, e);
    if (first) {
      out += negative ? "-" + body : body;
      first = false;
    } else if (spaced) {
      out += negative ? " - " : " + ";
      out += body;
    } else {
      out += negative ? "-" : "+";
      out += body;
    }
  }
  return out;
}

namespace {

class LaurentParser {
 public:
  explicit LaurentParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    LaurentPoly out;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    out += signed_term(negative);
    for (skip_ws(); pos_ < text_.size(); skip_ws()) {
      const char op = peek();
      if (op != '+' && op != '-') throw ParseError(pos_, "expected '+' or '-'");
      ++pos_;
      out += signed_term(op == '-');
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  LaurentPoly signed_term(bool negative) {
    skip_ws();
    Rational coeff(1);
    int exponent = 0;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        exponent = q_power();
      }
    } else if (peek() == 'q') {
      exponent = q_power();
    } else {
      throw ParseError(pos_, "expected a coefficient or q-power");
    }
    if (negative) coeff = -coeff;
    return LaurentPoly::monomial(coeff, exponent);
  }

  Integer natural() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Rational rational() {
    Integer num = natural();
    Integer den(1);
    if (peek() == '/') {
      ++pos_;
      const std::size_t at = pos_;
      den = natural();
      if (den == 0) throw ParseError(at, "zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  int q_power() {
    if (peek() != 'q') throw ParseError(pos_, "expected 'q'");
    ++pos_;
    if (peek() != '^') return 1;
    ++pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t at = pos_;
    Integer e = natural();
    if (!e.fits_sint_p()) throw ParseError(at, "exponent out of range");
    return negative ? -static_cast<int>(e.get_si()) : static_cast<int>(e.get_si());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) { return LaurentParser(text).parse(); }

}  // namespace qlh

namespace qlh {

void append_scaled_term(std::string& out, const LaurentPoly& coeff, std::string_view key) {
  if (coeff.is_zero()) return;
  const bool negative = sgn(coeff.terms().begin()->second) < 0;
  const LaurentPoly magnitude = negative ? -coeff : coeff;
  std::string body;
  const bool single = magnitude.size() == 1;
  const std::string c = to_string(magnitude, LaurentStyle::Compact);
  if (key.empty()) {
    body = single ? c : "(" + c + ")";
  } else if (magnitude == LaurentPoly(1)) {
    body = key;
  } else {
    body = (single ? c : "(" + c + ")") + "*" + std::string(key);
  }
  if (out.empty()) {
    out += negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

}  // namespace qlh
