#include "qlh/relations.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <thread>

#include "qlh/graded.hpp"

namespace qlh {

std::string to_string(Check c) {
  switch (c) {
    case Check::HH: return "hh";
    case Check::EH: return "eh";
    case Check::EE: return "ee";
    case Check::HE: return "he";
    case Check::IntegralHH: return "int-hh";
    case Check::IntegralEH: return "int-eh";
  }
  return "?";
}

std::vector<Check> parse_checks(std::string_view text) {
  if (text == "all") return {Check::HH, Check::EH, Check::EE, Check::HE};
  if (text == "hh") return {Check::HH};
  if (text == "eh") return {Check::EH};
  if (text == "ee") return {Check::EE};
  if (text == "he") return {Check::HE};
  throw Error("unknown relation family '" + std::string(text) + "' (expected hh, eh, ee, he or all)");
}

namespace {

void check_bounds(int m, int n, int i, int j, const LatticeHeisenberg& algebra) {
  if (m < 0 || n < 0) throw Error("relation degrees must be nonnegative");
  const int bound = algebra.pairing->degree_bound();
  if (m > bound || n > bound) throw SizeLimitError("relation degree exceeds the degree bound");
  if (i < 1 || i > algebra.colors() || j < 1 || j > algebra.colors()) {
    throw ColorMismatchError("relation color out of range");
  }
}

DoubleElement closed_form(Check which, int m, int n, int i, int j, const LatticeHeisenberg& algebra) {
  check_bounds(m, n, i, j, algebra);
  const long chi = algebra.lattice.form(i, j);
  const int colors = algebra.colors();
  const Basis minus_letter = which == Check::HH ? Basis::H : Basis::E;
  DoubleElement out(algebra.pairing);
  for (int r = 0; r <= std::min(m, n); ++r) {
    const LaurentPoly c = relation_coefficient(which, chi, r);
    if (c.is_zero()) continue;
    const DoubleElement word = double_mul(embed_plus(h_gen(m - r, i, colors), algebra.pairing),
                                          embed_minus(generator(minus_letter, n - r, j, colors), algebra.pairing));
    out += word * c;
  }
  return out;
}

}  // namespace

LaurentPoly relation_coefficient(Check which, long chi, int r) {
  const GradedVS v = from_quantum_int(chi);
  const bool nonnegative = chi >= 0;
  bool symmetric = false;
  switch (which) {
    case Check::HH:
    case Check::EE: symmetric = nonnegative; break;
    case Check::EH:
    case Check::HE: symmetric = !nonnegative; break;
    default: throw Error("relation_coefficient: not a relation family");
  }
  return symmetric ? qdim_sym_power(v, r) : qdim_ext_power(v, r);
}

DoubleElement rhs_hh(int m, int n, int i, int j, const LatticeHeisenberg& algebra) {
  return closed_form(Check::HH, m, n, i, j, algebra);
}

DoubleElement rhs_eh(int m, int n, int i, int j, const LatticeHeisenberg& algebra) {
  return closed_form(Check::EH, m, n, i, j, algebra);
}

DoubleElement relation_lhs(Check which, int m, int n, int i, int j, const LatticeHeisenberg& algebra) {
  check_bounds(m, n, i, j, algebra);
  Basis minus_letter = Basis::H, plus_letter = Basis::H;
  switch (which) {
    case Check::HH: break;
    case Check::EH: minus_letter = Basis::E; break;
    case Check::EE: minus_letter = Basis::E; plus_letter = Basis::E; break;
    case Check::HE: plus_letter = Basis::E; break;
    default: throw Error("relation_lhs: not a relation family");
  }
  const Generator minus{minus_letter, Side::Minus, n, j};
  const Generator plus{plus_letter, Side::Plus, m, i};
  return double_mul(embed(minus, algebra.pairing), embed(plus, algebra.pairing));
}

DoubleElement relation_rhs(Check which, int m, int n, int i, int j, const LatticeHeisenberg& algebra) {
  switch (which) {
    case Check::HH: return rhs_hh(m, n, i, j, algebra);
    case Check::EH: return rhs_eh(m, n, i, j, algebra);
    case Check::EE: return omega_double(rhs_hh(m, n, i, j, algebra));
    case Check::HE: return omega_double(rhs_eh(m, n, i, j, algebra));
    default: throw Error("relation_rhs: not a relation family");
  }
}

bool VerificationReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const VerificationCase& c) { return c.passed; });
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const VerificationCase& c) { return !c.passed; }));
}

std::string VerificationReport::table() const {
  std::string out = "check     m   n   i   j  chi  result\n";
  char row[96];
  for (const auto& c : cases) {
    std::snprintf(row, sizeof row, "%-7s %3d %3d %3d %3d %4ld  %s\n", to_string(c.check).c_str(), c.m, c.n, c.i,
                  c.j, c.chi, c.passed ? "pass" : "FAIL");
    out += row;
  }
  out += std::to_string(cases.size() - failures()) + "/" + std::to_string(cases.size()) + " cases passed\n";
  return out;
}

VerificationCase compare_relation(Check which, int m, int n, int i, int j, long chi, const DoubleElement& lhs,
                                  const DoubleElement& rhs, bool at_q1) {
  DoubleElement diff = lhs - rhs;
  if (at_q1) diff = specialize_q1(diff);
  VerificationCase c{m, n, i, j, chi, which, diff.is_zero(), std::nullopt};
  if (!c.passed) c.witness = std::move(diff);
  return c;
}

namespace {

struct CaseKey {
  Check check;
  int m, n, i, j;
};

template <typename Eval>
VerificationReport run_cases(const std::vector<CaseKey>& keys, unsigned threads, Eval&& eval) {
  std::vector<std::optional<VerificationCase>> results(keys.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < keys.size(); k = next++) results[k] = eval(keys[k]);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(keys.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  VerificationReport report;
  report.cases.reserve(keys.size());
  for (auto& r : results) report.cases.push_back(std::move(*r));
  return report;
}

}  // namespace

VerificationReport verify(const LatticeHeisenberg& algebra, const VerifyOptions& options) {
  if (options.max_mn < 0) throw Error("verify: max must be nonnegative");
  if (options.max_mn > algebra.pairing->degree_bound()) throw SizeLimitError("verify: max exceeds the degree bound");
  std::vector<CaseKey> keys;
  for (Check check : options.checks) {
    for (int m = 0; m <= options.max_mn; ++m) {
      for (int n = 0; n <= options.max_mn; ++n) {
        for (int i = 1; i <= algebra.colors(); ++i) {
          for (int j = 1; j <= algebra.colors(); ++j) keys.push_back({check, m, n, i, j});
        }
      }
    }
  }
  return run_cases(keys, options.threads, [&](const CaseKey& k) {
    return compare_relation(k.check, k.m, k.n, k.i, k.j, algebra.lattice.form(k.i, k.j),
                            relation_lhs(k.check, k.m, k.n, k.i, k.j, algebra),
                            relation_rhs(k.check, k.m, k.n, k.i, k.j, algebra), options.at_q1);
  });
}

VerificationReport integrality_scan(const LatticeHeisenberg& algebra, int max_deg, unsigned threads) {
  if (max_deg < 0) throw Error("integrality_scan: max must be nonnegative");
  if (max_deg > algebra.pairing->degree_bound()) throw SizeLimitError("integrality_scan: max exceeds the degree bound");
  std::vector<CaseKey> keys;
  for (Check check : {Check::IntegralHH, Check::IntegralEH}) {
    for (int m = 0; m <= max_deg; ++m) {
      for (int n = 0; n <= max_deg; ++n) {
        for (int i = 1; i <= algebra.colors(); ++i) {
          for (int j = 1; j <= algebra.colors(); ++j) keys.push_back({check, m, n, i, j});
        }
      }
    }
  }
  return run_cases(keys, threads, [&](const CaseKey& k) {
    const bool hh = k.check == Check::IntegralHH;
    const DoubleElement product = relation_lhs(hh ? Check::HH : Check::EH, k.m, k.n, k.i, k.j, algebra);
    const DoubleReadout r = readout(product, Basis::H, hh ? Basis::H : Basis::E);
    const bool integral = std::all_of(r.terms.begin(), r.terms.end(),
                                      [](const auto& entry) { return is_integral(entry.second); });
    VerificationCase c{k.m, k.n, k.i, k.j, algebra.lattice.form(k.i, k.j), k.check, integral, std::nullopt};
    if (!integral) c.witness = product;
    return c;
  });
}

}  // namespace qlh
