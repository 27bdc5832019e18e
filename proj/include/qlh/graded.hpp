#pragma once

#include <map>

#include "qlh/laurent.hpp"

namespace qlh {

/// Finite-dimensional Z-graded vector space, recorded by its dimension vector.
class GradedVS {
 public:
  GradedVS() = default;
  /// Zero entries are dropped; negative dimensions throw.
  explicit GradedVS(const std::map<int, int>& dims);

  const std::map<int, int>& dims() const noexcept { return dims_; }
  int dim(int degree) const;
  int total_dimension() const;
  bool is_zero() const noexcept { return dims_.empty(); }

  friend bool operator==(const GradedVS&, const GradedVS&) = default;

 private:
  std::map<int, int> dims_;
};

/// Finitely supported m: Z -> N, with |m| = sum m(n) and ||m|| = sum n m(n).
class DegreeMultiset {
 public:
  DegreeMultiset() = default;
  explicit DegreeMultiset(const std::map<int, int>& counts);

  const std::map<int, int>& counts() const noexcept { return counts_; }
  int count(int degree) const;
  int cardinality() const;
  int weight() const;

 private:
  std::map<int, int> counts_;
};

/// sum_n dim(V_n) q^n
LaurentPoly qdim(const GradedVS& v);

/// One dimension in each degree |chi|-1-2g, g = 0..|chi|-1, so qdim = [chi].
GradedVS from_quantum_int(long chi);

/// prod_n binom(dim V_n + m(n) - 1, m(n))
Integer sym_count(const GradedVS& v, const DegreeMultiset& m);
/// prod_n binom(dim V_n, m(n))
Integer ext_count(const GradedVS& v, const DegreeMultiset& m);

/// qdim S^k(V) = sum over |m| = k supported on supp(V) of q^{||m||} sym_count(V, m).
LaurentPoly qdim_sym_power(const GradedVS& v, int k);
/// qdim Lambda^k(V) = sum over |m| = k of q^{||m||} ext_count(V, m).
LaurentPoly qdim_ext_power(const GradedVS& v, int k);

}  // namespace qlh
