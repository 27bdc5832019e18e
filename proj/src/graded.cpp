#include "qlh/graded.hpp"

#include <cstdlib>
#include <vector>

#include "qlh/error.hpp"

namespace qlh {

GradedVS::GradedVS(const std::map<int, int>& dims) {
  for (const auto& [n, d] : dims) {
    if (d < 0) throw Error("graded dimensions must be nonnegative");
    if (d > 0) dims_.emplace(n, d);
  }
}

int GradedVS::dim(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

int GradedVS::total_dimension() const {
  int total = 0;
  for (const auto& [n, d] : dims_) total += d;
  return total;
}

DegreeMultiset::DegreeMultiset(const std::map<int, int>& counts) {
  for (const auto& [n, c] : counts) {
    if (c < 0) throw Error("multiset counts must be nonnegative");
    if (c > 0) counts_.emplace(n, c);
  }
}

int DegreeMultiset::count(int degree) const {
  auto it = counts_.find(degree);
  return it == counts_.end() ? 0 : it->second;
}

int DegreeMultiset::cardinality() const {
  int total = 0;
  for (const auto& [n, c] : counts_) total += c;
  return total;
}

int DegreeMultiset::weight() const {
  int total = 0;
  for (const auto& [n, c] : counts_) total += n * c;
  return total;
}

LaurentPoly qdim(const GradedVS& v) {
  LaurentPoly out;
  for (const auto& [n, d] : v.dims()) out += LaurentPoly::monomial(Rational(d), n);
  return out;
}

GradedVS from_quantum_int(long chi) {
  const long m = std::labs(chi);
  std::map<int, int> dims;
  for (long g = 0; g < m; ++g) dims[static_cast<int>(m - 1 - 2 * g)] = 1;
  return GradedVS(dims);
}

namespace {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

template <typename Count>
LaurentPoly multiset_sum(const GradedVS& v, int k, Count&& count) {
  if (k < 0) throw Error("power must be nonnegative");
  std::vector<int> degrees;
  for (const auto& [n, d] : v.dims()) degrees.push_back(n);
  LaurentPoly out;
  std::map<int, int> counts;
  // Degrees in increasing order, each count bounded by what remains of k.
  auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
    if (idx == degrees.size()) {
      if (remaining != 0) return;
      const DegreeMultiset m(counts);
      const Integer c = count(v, m);
      if (c != 0) out += LaurentPoly::monomial(Rational(c), m.weight());
      return;
    }
    for (int take = 0; take <= remaining; ++take) {
      counts[degrees[idx]] = take;
      self(self, idx + 1, remaining - take);
    }
    counts.erase(degrees[idx]);
  };
  rec(rec, 0, k);
  return out;
}

}  // namespace

Integer sym_count(const GradedVS& v, const DegreeMultiset& m) {
  Integer out(1);
  for (const auto& [n, c] : m.counts()) out *= binomial(v.dim(n) + c - 1, c);
  return out;
}

Integer ext_count(const GradedVS& v, const DegreeMultiset& m) {
  Integer out(1);
  for (const auto& [n, c] : m.counts()) out *= binomial(v.dim(n), c);
  return out;
}

LaurentPoly qdim_sym_power(const GradedVS& v, int k) { return multiset_sum(v, k, sym_count); }

LaurentPoly qdim_ext_power(const GradedVS& v, int k) { return multiset_sum(v, k, ext_count); }

}  // namespace qlh
