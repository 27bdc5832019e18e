#include "qlh/pairing.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <sstream>

namespace qlh {

PairingSpec::PairingSpec(int colors, Generator generator, int degree_bound)
    : colors_(colors), degree_bound_(degree_bound), generator_(std::move(generator)) {
  if (colors < 1) throw Error("a pairing needs at least one color");
  if (degree_bound < 1) throw Error("pairing degree bound must be at least 1");
  if (!generator_) throw Error("pairing generator is empty");
  levels_.resize(static_cast<std::size_t>(degree_bound) + 1);
}

const PairingSpec::Table& PairingSpec::level(int n) const {
  if (n < 1) throw Error("pairing constants are indexed by n >= 1");
  if (n > degree_bound_) {
    throw SizeLimitError("pairing constant C^" + std::to_string(n) + " exceeds the degree bound " +
                         std::to_string(degree_bound_));
  }
  {
    std::shared_lock lock(mutex_);
    if (levels_[n]) return *levels_[n];
  }
  std::unique_lock lock(mutex_);
  if (!levels_[n]) {
    auto table = std::make_unique<Table>();
    table->reserve(static_cast<std::size_t>(colors_ * colors_));
    for (int j = 1; j <= colors_; ++j) {
      for (int i = 1; i <= colors_; ++i) table->push_back(generator_(n, j, i));
    }
    levels_[n] = std::move(table);
  }
  return *levels_[n];
}

const LaurentPoly& PairingSpec::constant(int n, int left_color, int right_color) const {
  if (left_color < 1 || left_color > colors_ || right_color < 1 || right_color > colors_) {
    throw ColorMismatchError("pairing color out of range");
  }
  return level(n)[static_cast<std::size_t>((left_color - 1) * colors_ + (right_color - 1))];
}

bool PairingSpec::is_symmetric() const {
  for (int n = 1; n <= degree_bound_; ++n) {
    for (int j = 1; j <= colors_; ++j) {
      for (int i = j + 1; i <= colors_; ++i) {
        if (!(constant(n, j, i) == constant(n, i, j))) return false;
      }
    }
  }
  return true;
}

LatticeSpec::LatticeSpec(std::vector<std::vector<long>> gram) : gram_(std::move(gram)) {
  if (gram_.empty()) throw Error("lattice must have rank at least 1");
  for (const auto& row : gram_) {
    if (row.size() != gram_.size()) throw Error("lattice Gram matrix must be square");
  }
  for (std::size_t i = 0; i < gram_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gram_[i][j] != gram_[j][i]) {
        throw Error("lattice Gram matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + ")");
      }
    }
  }
}

LatticeSpec LatticeSpec::rank_one(long self_pairing) {
  return LatticeSpec(std::vector<std::vector<long>>{{self_pairing}});
}

std::string LatticeSpec::to_string() const {
  std::string out = std::to_string(rank()) + "\n";
  for (const auto& row : gram_) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += " ";
      out += std::to_string(row[j]);
    }
    out += "\n";
  }
  return out;
}

LatticeSpec parse_lattice(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  if (lines.empty()) throw Error("lattice file is empty");
  long rank = 0;
  {
    std::istringstream head(lines[0]);
    std::string extra;
    if (!(head >> rank) || (head >> extra)) throw Error("lattice file: first line must be the rank");
  }
  if (rank < 1) throw Error("lattice file: rank must be positive");
  if (static_cast<long>(lines.size()) != rank + 1) {
    throw Error("lattice file: expected " + std::to_string(rank) + " matrix rows, found " +
                std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<long>> gram;
  for (long r = 1; r <= rank; ++r) {
    std::istringstream row_in(lines[static_cast<std::size_t>(r)]);
    std::vector<long> row;
    for (long v; row_in >> v;) row.push_back(v);
    if (!row_in.eof()) throw Error("lattice file: non-integer entry in row " + std::to_string(r));
    if (static_cast<long>(row.size()) != rank) {
      throw Error("lattice file: row " + std::to_string(r) + " has " + std::to_string(row.size()) + " entries");
    }
    gram.push_back(std::move(row));
  }
  return LatticeSpec(std::move(gram));
}

LatticeSpec load_lattice(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lattice file '" + path + "'");
  return parse_lattice(in);
}

LaurentPoly lattice_pairing_constant(int n, long chi) {
  if (n < 1) throw Error("pairing constants are indexed by n >= 1");
  return divide_exact(quantum_integer(static_cast<long>(n) * chi) * LaurentPoly(static_cast<long>(n)),
                      quantum_integer(n));
}

std::shared_ptr<const PairingSpec> lattice_to_pairing(const LatticeSpec& lattice, int bound) {
  if (bound < 1) throw Error("lattice_to_pairing: bound must be at least 1");
  return std::make_shared<const PairingSpec>(
      lattice.rank(), [lattice](int n, int j, int i) { return lattice_pairing_constant(n, lattice.form(j, i)); },
      bound);
}

namespace {

/// Permanent of M[r][s] = C^part_{rows[r], cols[s]} by dynamic programming over column subsets.
LaurentPoly block_permanent(int part, const std::vector<int>& rows, const std::vector<int>& cols,
                            const PairingSpec& spec) {
  const std::size_t m = rows.size();
  if (m > 20) throw SizeLimitError("pairing block too large");
  std::vector<LaurentPoly> dp(std::size_t{1} << m);
  dp[0] = 1;
  for (std::size_t mask = 0; mask + 1 < dp.size(); ++mask) {
    if (dp[mask].is_zero()) continue;
    const auto r = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t s = 0; s < m; ++s) {
      if (mask & (std::size_t{1} << s)) continue;
      const LaurentPoly& c = spec.constant(part, rows[r], cols[s]);
      if (!c.is_zero()) dp[mask | (std::size_t{1} << s)].add_product(dp[mask], c);
    }
  }
  return dp.back();
}

}  // namespace

LaurentPoly pair_pp(const MultiPartition& lambda, const MultiPartition& mu, const PairingSpec& spec) {
  if (lambda.colors() != spec.colors() || mu.colors() != spec.colors()) {
    throw ColorMismatchError("pair_pp: labels do not match the pairing's colors");
  }
  if (lambda.size() != mu.size() || lambda.length() != mu.length()) return {};
  const auto left = underline(lambda);
  const auto right = underline(mu);
  LaurentPoly value = 1;
  std::size_t a = 0, b = 0;
  while (a < left.size() || b < right.size()) {
    if (a == left.size() || b == right.size() || left[a].part != right[b].part) return {};
    const int part = left[a].part;
    std::vector<int> rows, cols;
    for (; a < left.size() && left[a].part == part; ++a) rows.push_back(left[a].color);
    for (; b < right.size() && right[b].part == part; ++b) cols.push_back(right[b].color);
    if (rows.size() != cols.size()) return {};
    value *= block_permanent(part, rows, cols, spec);
    if (value.is_zero()) return {};
  }
  return value;
}

namespace {

SymElement in_p(const SymElement& x) { return convert(x, Basis::P); }

void check_pair_colors(int a, int b, const PairingSpec& spec) {
  if (a != b || a != spec.colors()) throw ColorMismatchError("pair: color counts differ");
}

}  // namespace

LaurentPoly pair(const SymElement& x, const SymElement& y, const PairingSpec& spec) {
  check_pair_colors(x.colors(), y.colors(), spec);
  const SymElement a = in_p(x), b = in_p(y);
  LaurentPoly out;
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) {
      if (la.size() != lb.size()) continue;
      const LaurentPoly v = pair_pp(la, lb, spec);
      if (!v.is_zero()) out += ca * cb * v;
    }
  }
  return out;
}

LaurentPoly pair(const SymTensor& x, const SymTensor& y, const PairingSpec& spec) {
  check_pair_colors(x.colors(), y.colors(), spec);
  const SymTensor a = convert(x, Basis::P, Basis::P);
  const SymTensor b = convert(y, Basis::P, Basis::P);
  LaurentPoly out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.first.size() != kb.first.size() || ka.second.size() != kb.second.size()) continue;
      const LaurentPoly v = pair_pp(ka.first, kb.first, spec) * pair_pp(ka.second, kb.second, spec);
      if (!v.is_zero()) out += ca * cb * v;
    }
  }
  return out;
}

namespace {

/// Splits off the first colored part: lambda = head (+) rest.
std::pair<MultiPartition, MultiPartition> split_first(const MultiPartition& lambda) {
  const ColoredPart first = underline(lambda).front();
  std::vector<Partition> rest = lambda.components();
  rest[first.color - 1] = ominus(rest[first.color - 1], first.part);
  return {MultiPartition::single(lambda.colors(), first.color, Partition{first.part}),
          MultiPartition(std::move(rest))};
}

}  // namespace

LaurentPoly RecursivePairing::operator()(const MultiPartition& lambda, const MultiPartition& mu) {
  if (lambda.colors() != spec_.colors() || mu.colors() != spec_.colors()) {
    throw ColorMismatchError("pair_recursive: labels do not match the pairing's colors");
  }
  // Graded: components of different degree pair to zero.
  if (lambda.size() != mu.size()) return {};
  // <1, a> = eps(a) and <x, 1> = eps(x).
  if (lambda.empty() || mu.empty()) return lambda.empty() && mu.empty() ? LaurentPoly(1) : LaurentPoly();

  const auto key = std::make_pair(lambda, mu);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  LaurentPoly value;
  if (lambda.length() == 1 && mu.length() == 1) {
    const ColoredPart l = underline(lambda).front();
    const ColoredPart r = underline(mu).front();
    if (l.part == r.part) value = spec_.constant(l.part, l.color, r.color);
  } else if (lambda.length() >= 2) {
    // <x y, p_mu> = sum <x, a1><y, a2> over Delta(p_mu).
    const auto [x, y] = split_first(lambda);
    for (const auto& term : coproduct_terms(mu)) {
      if (term.left.size() != x.size()) continue;
      LaurentPoly left = (*this)(x, term.left);
      if (left.is_zero()) continue;
      LaurentPoly right = (*this)(y, term.right);
      if (right.is_zero()) continue;
      value += left * right * LaurentPoly(Rational(term.coeff));
    }
  } else {
    // <p_lambda, a b> = sum <x1, a><x2, b> over Delta(p_lambda).
    const auto [a, b] = split_first(mu);
    for (const auto& term : coproduct_terms(lambda)) {
      if (term.left.size() != a.size()) continue;
      LaurentPoly left = (*this)(term.left, a);
      if (left.is_zero()) continue;
      LaurentPoly right = (*this)(term.right, b);
      if (right.is_zero()) continue;
      value += left * right * LaurentPoly(Rational(term.coeff));
    }
  }
  memo_.emplace(key, value);
  return value;
}

LaurentPoly pair_recursive(const SymElement& x, const SymElement& y, const PairingSpec& spec) {
  check_pair_colors(x.colors(), y.colors(), spec);
  const SymElement a = in_p(x), b = in_p(y);
  RecursivePairing eval(spec);
  LaurentPoly out;
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) {
      const LaurentPoly v = eval(la, lb);
      if (!v.is_zero()) out += ca * cb * v;
    }
  }
  return out;
}

}  // namespace qlh
