#include "qlh/expr.hpp"

#include <cctype>

namespace qlh {

Group::Group(Expr inner) : inner_(std::make_unique<Expr>(std::move(inner))) {}
Group::Group(const Group& other) : inner_(std::make_unique<Expr>(*other.inner_)) {}
Group& Group::operator=(const Group& other) {
  if (this != &other) inner_ = std::make_unique<Expr>(*other.inner_);
  return *this;
}
Group::~Group() = default;

bool operator==(const Group& a, const Group& b) { return *a.inner_ == *b.inner_; }

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (peek() != c) throw ParseError(pos_, std::string("expected ") + what);
    ++pos_;
  }

  Expr expr() {
    Expr e;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    e.terms.push_back(term(negative));
    while (true) {
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      negative = peek() == '-';
      ++pos_;
      e.terms.push_back(term(negative));
    }
    return e;
  }

  Term term(bool negative) {
    Term t{negative, {}};
    t.factors.push_back(factor());
    while (true) {
      skip_ws();
      if (peek() != '*' && peek() != '#') break;
      ++pos_;
      t.factors.push_back(factor());
    }
    return t;
  }

  long natural(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000'000L) throw ParseError(start, std::string(what) + " overflow");
      ++pos_;
    }
    if (start == pos_) throw ParseError(pos_, std::string("expected ") + what);
    return value;
  }

  Factor factor() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      expect(')', "')'");
      return Group(std::move(inner));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Integer num(natural("number"));
      Integer den(1);
      if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        den = natural("denominator");
        if (den == 0) throw ParseError(at, "zero denominator");
      }
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    if (c == 'q') {
      ++pos_;
      if (peek() != '^') return QPower{1};
      ++pos_;
      bool negative = false;
      if (peek() == '-') {
        negative = true;
        ++pos_;
      }
      const long e = natural("exponent");
      if (e > 100000) throw ParseError(pos_, "exponent overflow");
      return QPower{static_cast<int>(negative ? -e : e)};
    }
    if (c == 'p' || c == 'h' || c == 'e') {
      ++pos_;
      const Basis letter = parse_basis(std::string_view(&c, 1));
      if (peek() != '+' && peek() != '-') throw ParseError(pos_, "expected '+' or '-' after generator letter");
      const Side side = peek() == '+' ? Side::Plus : Side::Minus;
      ++pos_;
      expect('(', "'('");
      const std::size_t degree_at = pos_;
      const long degree = natural("degree");
      if (degree > options_.degree_bound) {
        throw ParseError(degree_at, "degree " + std::to_string(degree) + " exceeds the degree bound " +
                                        std::to_string(options_.degree_bound));
      }
      expect(',', "','");
      skip_ws();
      const std::size_t color_at = pos_;
      const long color = natural("color");
      if (color < 1 || (options_.colors && color > *options_.colors)) {
        throw ParseError(color_at, "unknown color " + std::to_string(color));
      }
      expect(')', "')'");
      return Generator{letter, side, static_cast<int>(degree), static_cast<int>(color)};
    }
    if (at_end()) throw ParseError(pos_, "unexpected end of input");
    throw ParseError(pos_, "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  ParseOptions options_;
  std::size_t pos_ = 0;
};

std::string factor_text(const Factor& f) {
  struct Visitor {
    std::string operator()(const Rational& r) const { return to_string(r); }
    std::string operator()(const QPower& p) const {
      return p.exponent == 1 ? "q" : "q^" + std::to_string(p.exponent);
    }
    std::string operator()(const Generator& g) const { return to_string(g); }
    std::string operator()(const Group& g) const { return "(" + to_string(g.inner()) + ")"; }
  };
  return std::visit(Visitor{}, f);
}

}  // namespace

Expr parse_expr(std::string_view text, const ParseOptions& options) { return ExprParser(text, options).parse(); }

std::string to_string(const Expr& e) {
  std::string out;
  for (std::size_t k = 0; k < e.terms.size(); ++k) {
    const Term& t = e.terms[k];
    if (k == 0) {
      if (t.negative) out += "-";
    } else {
      out += t.negative ? " - " : " + ";
    }
    for (std::size_t f = 0; f < t.factors.size(); ++f) {
      if (f) out += "*";
      out += factor_text(t.factors[f]);
    }
  }
  return out;
}

DoubleElement eval_double(const Expr& e, const std::shared_ptr<const PairingSpec>& spec) {
  DoubleElement sum(spec);
  for (const Term& t : e.terms) {
    DoubleElement product = DoubleElement::one(spec);
    for (const Factor& f : t.factors) {
      if (const auto* r = std::get_if<Rational>(&f)) {
        product *= LaurentPoly(*r);
      } else if (const auto* qp = std::get_if<QPower>(&f)) {
        product *= LaurentPoly::q(qp->exponent);
      } else if (const auto* g = std::get_if<Generator>(&f)) {
        if (g->color > spec->colors()) throw ColorMismatchError("unknown color " + std::to_string(g->color));
        product = double_mul(product, embed(*g, spec));
      } else {
        product = double_mul(product, eval_double(std::get<Group>(f).inner(), spec));
      }
    }
    if (t.negative) {
      sum -= product;
    } else {
      sum += product;
    }
  }
  return sum;
}

namespace {

SymElement eval_sym_impl(const Expr& e, int colors, std::optional<Side>& side) {
  SymElement sum(colors);
  for (const Term& t : e.terms) {
    SymElement product = SymElement::one(colors);
    for (const Factor& f : t.factors) {
      if (const auto* r = std::get_if<Rational>(&f)) {
        product *= LaurentPoly(*r);
      } else if (const auto* qp = std::get_if<QPower>(&f)) {
        product *= LaurentPoly::q(qp->exponent);
      } else if (const auto* g = std::get_if<Generator>(&f)) {
        if (side && *side != g->side) throw Error("expression mixes H+ and H- generators");
        side = g->side;
        if (g->color > colors) throw ColorMismatchError("unknown color " + std::to_string(g->color));
        product = mul(product, generator(g->letter, g->degree, g->color, colors));
      } else {
        product = mul(product, eval_sym_impl(std::get<Group>(f).inner(), colors, side));
      }
    }
    if (t.negative) {
      sum -= product;
    } else {
      sum += product;
    }
  }
  return sum;
}

}  // namespace

SymElement eval_sym(const Expr& e, int colors) {
  std::optional<Side> side;
  return eval_sym_impl(e, colors, side);
}

}  // namespace qlh
