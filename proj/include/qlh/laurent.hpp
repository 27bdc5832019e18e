#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace qlh {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact element of Q[q, q^-1], stored sparsely as exponent -> nonzero coefficient.
class LaurentPoly {
 public:
  using TermMap = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT: integers promote to constants
  LaurentPoly(const Rational& constant);  // NOLINT

  static LaurentPoly monomial(const Rational& coeff, int exponent);
  static LaurentPoly q(int exponent = 1) { return monomial(Rational(1), exponent); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coeff(int exponent) const;
  std::optional<int> min_exponent() const;
  std::optional<int> max_exponent() const;

  /// Substitutes q -> q^-1.
  LaurentPoly bar() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Rational& scalar);

  /// this += a * b, without materializing the product.
  void add_product(const LaurentPoly& a, const LaurentPoly& b);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(int exponent, const Rational& coeff);

  TermMap terms_;
};

/// [n] = q^{-n+1} + q^{-n+3} + ... + q^{n-1}, with [-n] = [n] and [0] = 0.
LaurentPoly quantum_integer(long n);

/// Quotient f / g; throws ArithmeticError unless g divides f exactly.
LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g);

Rational eval_at_one(const LaurentPoly& f);
bool is_integral(const LaurentPoly& f);
bool is_integral(const Rational& r);

enum class LaurentStyle {
  Spaced,   // q^-2 + 1 + q^2
  Compact,  // q^-2+1+q^2
};

std::string to_string(const Rational& r);
std::string to_string(const LaurentPoly& f, LaurentStyle style = LaurentStyle::Spaced);

/// Parses the textual form written by to_string (either style); accepts `q`, `q^e`,
/// `c*q^e`, bare rationals, and arbitrary whitespace.
LaurentPoly parse_laurent(std::string_view text);

}  // namespace qlh

namespace qlh {

/// Appends `coeff*key` to a running sum, choosing ` + ` / ` - ` separators and
/// parenthesizing multi-term coefficients. An empty key denotes the unit.
void append_scaled_term(std::string& out, const LaurentPoly& coeff, std::string_view key);

}  // namespace qlh
