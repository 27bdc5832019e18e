#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "qlh/error.hpp"
#include "qlh/laurent.hpp"
#include "qlh/partitions.hpp"
#include "qlh/symfunc.hpp"

namespace qlh {

/// Constants C^n_{j,i} = <p_{n,j}, p_{n,i}> determining a Hopf pairing on
/// Sym^{(x)I} x Sym^{(x)I}. The first color index belongs to the left
/// (H+) argument. Values are produced on demand by a generator and
/// memoized up to the degree bound.
class PairingSpec {
 public:
  using Generator = std::function<LaurentPoly(int n, int left_color, int right_color)>;

  PairingSpec(int colors, Generator generator, int degree_bound = kDefaultDegreeBound);

  int colors() const noexcept { return colors_; }
  int degree_bound() const noexcept { return degree_bound_; }

  /// C^n_{left,right}; throws SizeLimitError for n above the degree bound.
  const LaurentPoly& constant(int n, int left_color, int right_color) const;

  bool is_symmetric() const;

 private:
  using Table = std::vector<LaurentPoly>;  // (left-1) * colors + (right-1)

  const Table& level(int n) const;

  int colors_;
  int degree_bound_;
  Generator generator_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<std::unique_ptr<Table>> levels_;
};

/// Symmetric integer Gram matrix <i, j>_L of a lattice with basis v_1..v_|I|.
class LatticeSpec {
 public:
  explicit LatticeSpec(std::vector<std::vector<long>> gram);

  static LatticeSpec rank_one(long self_pairing);

  int rank() const noexcept { return static_cast<int>(gram_.size()); }
  /// <i, j>_L for 1-based colors.
  long form(int i, int j) const { return gram_.at(i - 1).at(j - 1); }
  const std::vector<std::vector<long>>& gram() const noexcept { return gram_; }

  /// The lattice file format: rank on the first line, then one row per line.
  std::string to_string() const;

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;

 private:
  std::vector<std::vector<long>> gram_;
};

/// Parses the lattice file format; rejects asymmetric or malformed matrices.
LatticeSpec parse_lattice(std::istream& in);
LatticeSpec load_lattice(const std::string& path);

/// [n chi] * n / [n], by exact Laurent division.
LaurentPoly lattice_pairing_constant(int n, long chi);

std::shared_ptr<const PairingSpec> lattice_to_pairing(const LatticeSpec& lattice, int bound = kDefaultDegreeBound);

/// Closed form for <p_lambda, p_mu>: a sum over bijections of the underline
/// sequences matching part sizes. Evaluated as a product of permanents, one
/// per part value.
LaurentPoly pair_pp(const MultiPartition& lambda, const MultiPartition& mu, const PairingSpec& spec);

/// Bilinear extension of pair_pp.
LaurentPoly pair(const SymElement& x, const SymElement& y, const PairingSpec& spec);

/// <x1 (x) x2, a1 (x) a2> = <x1, a1><x2, a2>, extended bilinearly.
LaurentPoly pair(const SymTensor& x, const SymTensor& y, const PairingSpec& spec);

/// Evaluates <p_lambda, p_mu> from the Hopf-pairing axioms alone:
/// <xy, a> = <x (x) y, Delta(a)>, <x, ab> = <Delta(x), a (x) b>, the
/// counit rules, and the values C^n on single power sums. Memoizes per
/// instance.
class RecursivePairing {
 public:
  explicit RecursivePairing(const PairingSpec& spec) : spec_(spec) {}

  LaurentPoly operator()(const MultiPartition& lambda, const MultiPartition& mu);

 private:
  const PairingSpec& spec_;
  std::map<std::pair<MultiPartition, MultiPartition>, LaurentPoly> memo_;
};

LaurentPoly pair_recursive(const SymElement& x, const SymElement& y, const PairingSpec& spec);

}  // namespace qlh
