#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qlh/laurent.hpp"
#include "qlh/pairing.hpp"
#include "qlh/partitions.hpp"
#include "qlh/symfunc.hpp"

namespace qlh {

enum class Side { Plus, Minus };

/// One generator b^{+/-}_{n,i} of the double, with b one of p, h, e.
struct Generator {
  Basis letter = Basis::P;
  Side side = Side::Plus;
  int degree = 0;
  int color = 1;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// `h+(2,1)`
std::string to_string(const Generator& g);

/// Element of the Heisenberg double H+ (x) H-, stored as sum c * p_lambda # p_mu.
/// Every stored word is normal ordered (plus label left of minus label). An
/// element is bound to one PairingSpec instance; mixing specs is an error.
class DoubleElement {
 public:
  using Key = std::pair<MultiPartition, MultiPartition>;
  using TermMap = std::map<Key, LaurentPoly>;

  explicit DoubleElement(std::shared_ptr<const PairingSpec> spec);

  static DoubleElement one(std::shared_ptr<const PairingSpec> spec);

  const std::shared_ptr<const PairingSpec>& spec() const noexcept { return spec_; }
  int colors() const noexcept { return spec_->colors(); }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  LaurentPoly coeff(const MultiPartition& plus, const MultiPartition& minus) const;

  void add_term(const MultiPartition& plus, const MultiPartition& minus, const LaurentPoly& coeff);

  DoubleElement& operator+=(const DoubleElement& rhs);
  DoubleElement& operator-=(const DoubleElement& rhs);
  DoubleElement& operator*=(const LaurentPoly& scalar);
  friend DoubleElement operator+(DoubleElement a, const DoubleElement& b) { return a += b; }
  friend DoubleElement operator-(DoubleElement a, const DoubleElement& b) { return a -= b; }
  friend DoubleElement operator*(DoubleElement a, const LaurentPoly& s) { return a *= s; }
  friend DoubleElement operator*(const LaurentPoly& s, DoubleElement a) { return a *= s; }

  /// Same spec instance and identical coefficients.
  friend bool operator==(const DoubleElement& a, const DoubleElement& b);

 private:
  std::shared_ptr<const PairingSpec> spec_;
  TermMap terms_;
};

DoubleElement embed_plus(const SymElement& x, std::shared_ptr<const PairingSpec> spec);
DoubleElement embed_minus(const SymElement& x, std::shared_ptr<const PairingSpec> spec);
DoubleElement embed(const Generator& g, std::shared_ptr<const PairingSpec> spec);

/// (a # x)(b # y) = sum <x_1, b_2> a b_1 # x_2 y.
DoubleElement double_mul(const DoubleElement& u, const DoubleElement& v);
DoubleElement operator*(const DoubleElement& u, const DoubleElement& v);

DoubleElement commutator(const DoubleElement& u, const DoubleElement& v);

/// Omega on both tensor factors: sign (-1)^{|lambda|-l(lambda)+|mu|-l(mu)} on p_lambda # p_mu.
DoubleElement omega_double(const DoubleElement& u);

/// Left-to-right product of the embedded generators; the empty word is 1#1.
DoubleElement normal_order(std::span<const Generator> word, std::shared_ptr<const PairingSpec> spec,
                           std::size_t max_length = kDefaultWordLimit);

/// Coefficientwise q = 1 specialization.
DoubleElement specialize_q1(const DoubleElement& u);

/// A double element re-expressed with plus labels in one basis and minus
/// labels in another, e.g. (h+, e-) for integrality checks.
struct DoubleReadout {
  Basis plus = Basis::P;
  Basis minus = Basis::P;
  int colors = 1;
  std::map<DoubleElement::Key, LaurentPoly> terms;
};

DoubleReadout readout(const DoubleElement& u, Basis plus, Basis minus);
DoubleReadout specialize_q1(const DoubleReadout& r);

/// `h+(1,1)#h-(1,1) + (q^-1+q)*1#1`: keys ordered by descending total degree,
/// then by plus label and minus label.
std::string to_string(const DoubleReadout& r);
std::string to_string(const DoubleElement& u);

}  // namespace qlh
