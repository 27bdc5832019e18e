#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qlh/heisenberg_double.hpp"
#include "qlh/laurent.hpp"
#include "qlh/symfunc.hpp"

namespace qlh {

struct Expr;

/// `q^e` literal.
struct QPower {
  int exponent = 1;
  friend bool operator==(const QPower&, const QPower&) = default;
};

/// Parenthesized subexpression; owns its child and compares deeply.
class Group {
 public:
  explicit Group(Expr inner);
  Group(const Group& other);
  Group& operator=(const Group& other);
  Group(Group&&) noexcept = default;
  Group& operator=(Group&&) noexcept = default;
  ~Group();

  const Expr& inner() const { return *inner_; }
  friend bool operator==(const Group& a, const Group& b);

 private:
  std::unique_ptr<Expr> inner_;
};

using Factor = std::variant<Rational, QPower, Generator, Group>;

struct Term {
  bool negative = false;
  std::vector<Factor> factors;
  friend bool operator==(const Term&, const Term&) = default;
};

/// expr := [+|-] term ((+|-) term)*
/// term := factor (('*'|'#') factor)*
/// factor := rational | q[^e] | letter sign '(' degree ',' color ')' | '(' expr ')'
struct Expr {
  std::vector<Term> terms;
  friend bool operator==(const Expr&, const Expr&) = default;
};

struct ParseOptions {
  /// When set, generator colors must lie in 1..colors.
  std::optional<int> colors;
  int degree_bound = kDefaultDegreeBound;
};

Expr parse_expr(std::string_view text, const ParseOptions& options = {});
std::string to_string(const Expr& e);

/// Evaluates in the Heisenberg double, multiplying factors left to right.
DoubleElement eval_double(const Expr& e, const std::shared_ptr<const PairingSpec>& spec);
/// Evaluates in Sym^{(x)I} (P basis); all generators must carry the same sign.
SymElement eval_sym(const Expr& e, int colors);

}  // namespace qlh
