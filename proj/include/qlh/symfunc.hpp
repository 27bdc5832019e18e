#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlh/error.hpp"
#include "qlh/laurent.hpp"
#include "qlh/partitions.hpp"

namespace qlh {

/// Multiplicative bases of Sym^{(x)I}: power sums, complete and elementary
/// symmetric functions. A label lambda stands for the product over colors i
/// and parts k of the generator of degree k in color i.
enum class Basis { P, H, E };

char basis_letter(Basis b);
/// Accepts "p", "h", "e" (case-insensitive).
Basis parse_basis(std::string_view text);

/// Element of Sym_Q^{(x)I} over Q[q, q^-1], sparse in one of the three bases.
class SymElement {
 public:
  using TermMap = std::map<MultiPartition, LaurentPoly>;

  explicit SymElement(int colors, Basis basis = Basis::P);

  static SymElement one(int colors, Basis basis = Basis::P);
  static SymElement basis_element(Basis basis, const MultiPartition& label, const LaurentPoly& coeff = 1);

  int colors() const noexcept { return colors_; }
  Basis basis() const noexcept { return basis_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  LaurentPoly coeff(const MultiPartition& label) const;

  /// Degree of the unique homogeneous component, or nullopt when x is zero or mixed.
  std::optional<int> homogeneous_degree() const;
  int max_degree() const;

  void add_term(const MultiPartition& label, const LaurentPoly& coeff);

  SymElement& operator+=(const SymElement& rhs);
  SymElement& operator-=(const SymElement& rhs);
  SymElement& operator*=(const LaurentPoly& scalar);
  friend SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
  friend SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }
  friend SymElement operator*(SymElement a, const LaurentPoly& s) { return a *= s; }
  friend SymElement operator*(const LaurentPoly& s, SymElement a) { return a *= s; }

  /// Equality as elements; the right operand is converted when bases differ.
  friend bool operator==(const SymElement& a, const SymElement& b);

 private:
  int colors_;
  Basis basis_;
  TermMap terms_;
};

/// `1/2*p[1,1] + 1/2*p[2]`; multi-color labels print as `p[2,1;1]`, the unit as `1`.
std::string to_string(const SymElement& x);

SymElement p_gen(int n, int color, int colors);
/// h_n in color i, expanded in the P basis: sum over |lambda| = n of p_lambda / z_lambda.
SymElement h_gen(int n, int color, int colors, int bound = kDefaultDegreeBound);
/// e_n in color i: sum over |lambda| = n of (-1)^{|lambda|-l(lambda)} p_lambda / z_lambda.
SymElement e_gen(int n, int color, int colors, int bound = kDefaultDegreeBound);
SymElement generator(Basis letter, int n, int color, int colors, int bound = kDefaultDegreeBound);

/// Product, returned in the P basis.
SymElement mul(const SymElement& x, const SymElement& y);
SymElement operator*(const SymElement& x, const SymElement& y);

SymElement convert(const SymElement& x, Basis target, int bound = kDefaultDegreeBound);

/// The involution p_n -> (-1)^{n-1} p_n, returned in the basis of x.
SymElement omega(const SymElement& x);

/// Coefficient of the unit.
LaurentPoly counit(const SymElement& x);

/// Element of Sym^{(x)I} (x) Sym^{(x)I}, keyed by pairs of labels in a pair of bases.
class SymTensor {
 public:
  using Key = std::pair<MultiPartition, MultiPartition>;
  using TermMap = std::map<Key, LaurentPoly>;

  explicit SymTensor(int colors, Basis left = Basis::P, Basis right = Basis::P);

  int colors() const noexcept { return colors_; }
  Basis left_basis() const noexcept { return left_; }
  Basis right_basis() const noexcept { return right_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  LaurentPoly coeff(const MultiPartition& left, const MultiPartition& right) const;

  void add_term(const MultiPartition& left, const MultiPartition& right, const LaurentPoly& coeff);
  SymTensor& operator+=(const SymTensor& rhs);
  SymTensor& operator-=(const SymTensor& rhs);

  friend bool operator==(const SymTensor& a, const SymTensor& b);

 private:
  int colors_;
  Basis left_;
  Basis right_;
  TermMap terms_;
};

/// `p[2] (x) 1 + 1 (x) p[2]`
std::string to_string(const SymTensor& t);

SymTensor tensor(const SymElement& a, const SymElement& b);
/// Componentwise product in the P basis: (a (x) b)(c (x) d) = ac (x) bd.
SymTensor mul(const SymTensor& x, const SymTensor& y);
SymTensor convert(const SymTensor& t, Basis left, Basis right, int bound = kDefaultDegreeBound);
SymTensor omega(const SymTensor& t);

/// One summand of the coproduct of a power-sum label: coefficient * p_left (x) p_right.
struct CoproductTerm {
  MultiPartition left;
  MultiPartition right;
  Integer coeff;
};

/// Delta(p_lambda) = sum over alpha (+) beta = lambda of prod binom(m_k(lambda^i), m_k(alpha^i)) p_alpha (x) p_beta.
const std::vector<CoproductTerm>& coproduct_terms(const MultiPartition& lambda);

SymTensor coproduct(const SymElement& x);

/// Outcome of a degree-by-degree identity check.
struct SeriesCheckResult {
  bool ok = true;
  std::optional<int> failing_degree;
  explicit operator bool() const noexcept { return ok; }
};

using GeneratorSource = std::function<SymElement(int n)>;

/// Checks sum_n h_n t^n = exp(sum_r p_r t^r / r) up to t^bound (single color).
/// `h_source` defaults to h_gen.
SeriesCheckResult series_check_H(int bound, const GeneratorSource& h_source = {});
/// Checks E(-t) H(t) = 1 up to t^bound (single color).
SeriesCheckResult series_check_EH(int bound, const GeneratorSource& h_source = {},
                                  const GeneratorSource& e_source = {});

}  // namespace qlh
