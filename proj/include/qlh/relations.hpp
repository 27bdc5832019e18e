#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qlh/heisenberg_double.hpp"
#include "qlh/pairing.hpp"

namespace qlh {

/// A lattice together with its quantum pairing, the setting for the presentation relations.
struct LatticeHeisenberg {
  LatticeSpec lattice;
  std::shared_ptr<const PairingSpec> pairing;

  explicit LatticeHeisenberg(LatticeSpec l, int bound = kDefaultDegreeBound)
      : lattice(std::move(l)), pairing(lattice_to_pairing(lattice, bound)) {}

  int colors() const noexcept { return lattice.rank(); }
};

/// Which relation a case checks.
///   HH: h-_{n,j} h+_{m,i};  EH: e-_{n,j} h+_{m,i};
///   EE: e-_{n,j} e+_{m,i};  HE: h-_{n,j} e+_{m,i}  (the last two via Omega);
///   IntegralHH / IntegralEH: integrality of the (h+,h-) / (h+,e-) readouts.
enum class Check { HH, EH, EE, HE, IntegralHH, IntegralEH };

std::string to_string(Check c);
/// "hh", "eh", "ee", "he"; "all" expands to all four.
std::vector<Check> parse_checks(std::string_view text);

/// sum_{r=0}^{min(m,n)} qdim(S^r V or Lambda^r V) h+_{m-r,i} # h-_{n-r,j}, with
/// qdim V = [<i,j>]; symmetric powers when <i,j> >= 0, exterior otherwise.
DoubleElement rhs_hh(int m, int n, int i, int j, const LatticeHeisenberg& algebra);
/// Same shape with e-_{n-r,j}; exterior powers when <i,j> >= 0, symmetric otherwise.
DoubleElement rhs_eh(int m, int n, int i, int j, const LatticeHeisenberg& algebra);

/// The structure constant qdim(S^r V) or qdim(Lambda^r V) used by rhs_hh / rhs_eh.
LaurentPoly relation_coefficient(Check which, long chi, int r);

/// Product of the embedded generators on the left-hand side of a relation.
DoubleElement relation_lhs(Check which, int m, int n, int i, int j, const LatticeHeisenberg& algebra);
/// Closed-form right-hand side; EE and HE are Omega images of HH and EH.
DoubleElement relation_rhs(Check which, int m, int n, int i, int j, const LatticeHeisenberg& algebra);

struct VerificationCase {
  int m = 0;
  int n = 0;
  int i = 1;
  int j = 1;
  long chi = 0;
  Check check = Check::HH;
  bool passed = false;
  /// LHS - RHS (or the offending readout) when the case fails.
  std::optional<DoubleElement> witness;
};

struct VerificationReport {
  std::vector<VerificationCase> cases;

  bool passed() const;
  std::size_t failures() const;
  /// Fixed-width table, one row per case, followed by a summary line.
  std::string table() const;
};

/// Compares `lhs` with `rhs` exactly (or after q = 1 when `at_q1`).
VerificationCase compare_relation(Check which, int m, int n, int i, int j, long chi, const DoubleElement& lhs,
                                  const DoubleElement& rhs, bool at_q1 = false);

struct VerifyOptions {
  int max_mn = 5;
  std::vector<Check> checks{Check::HH, Check::EH, Check::EE, Check::HE};
  bool at_q1 = false;
  /// Evaluate cases on this many threads (1 = sequential).
  unsigned threads = 1;
};

/// Every (m, n <= max_mn, i, j, check); cases are independent and merged in key order.
VerificationReport verify(const LatticeHeisenberg& algebra, const VerifyOptions& options);

/// Normal-orders h-_{n,j} h+_{m,i} and e-_{n,j} h+_{m,i} for m, n <= max_deg and
/// checks that the (h+,h-) resp. (h+,e-) readouts have coefficients in Z[q,q^-1].
VerificationReport integrality_scan(const LatticeHeisenberg& algebra, int max_deg, unsigned threads = 1);

}  // namespace qlh
