#include "qlh/symfunc.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

namespace qlh {

char basis_letter(Basis b) {
  switch (b) {
    case Basis::P: return 'p';
    case Basis::H: return 'h';
    case Basis::E: return 'e';
  }
  return '?';
}

Basis parse_basis(std::string_view text) {
  if (text.size() == 1) {
    switch (std::tolower(static_cast<unsigned char>(text[0]))) {
      case 'p': return Basis::P;
      case 'h': return Basis::H;
      case 'e': return Basis::E;
      default: break;
    }
  }
  throw Error("unknown basis '" + std::string(text) + "' (expected p, h or e)");
}

namespace {

using RationalExpansion = std::map<Partition, Rational>;

void check_colors(int a, int b, const char* what) {
  if (a != b) {
    throw ColorMismatchError(std::string(what) + ": color counts differ (" + std::to_string(a) + " vs " +
                             std::to_string(b) + ")");
  }
}

void check_degree(int degree, int bound) {
  if (degree > bound) {
    throw SizeLimitError("degree " + std::to_string(degree) + " exceeds the degree bound " + std::to_string(bound));
  }
}

int sign_of(const Partition& lambda) { return (lambda.size() - lambda.length()) % 2 == 0 ? 1 : -1; }

/// Expansion of the degree-n generator of basis b in power sums (single color).
RationalExpansion generator_in_p(Basis b, int n) {
  RationalExpansion out;
  if (n == 0) {
    out.emplace(Partition{}, Rational(1));
    return out;
  }
  if (b == Basis::P) {
    out.emplace(Partition{n}, Rational(1));
    return out;
  }
  for (const auto& lambda : partitions_of(n, kDefaultPartitionBound)) {
    Rational c(Integer(1), z_of(lambda));
    c.canonicalize();
    if (b == Basis::E && sign_of(lambda) < 0) c = -c;
    out.emplace(lambda, c);
  }
  return out;
}

RationalExpansion multiply(const RationalExpansion& a, const RationalExpansion& b) {
  RationalExpansion out;
  for (const auto& [la, ca] : a) {
    for (const auto& [lb, cb] : b) {
      Rational c = ca * cb;
      auto [it, inserted] = out.try_emplace(oplus(la, lb), c);
      if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) out.erase(it);
      }
    }
  }
  return out;
}

/// Single-color transition data between P and the H/E bases, built once per
/// (basis, label) or (basis, degree) and never invalidated.
class TransitionCache {
 public:
  static TransitionCache& instance() {
    static TransitionCache cache;
    return cache;
  }

  /// b_lambda expressed in power sums.
  const RationalExpansion& to_p(Basis b, const Partition& lambda) {
    std::lock_guard lock(mutex_);
    return to_p_locked(b, lambda);
  }

  /// p_lambda expressed in basis b.
  const RationalExpansion& from_p(Basis b, const Partition& lambda) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(b, lambda.size());
    auto it = from_p_.find(key);
    if (it == from_p_.end()) it = from_p_.emplace(key, invert_degree(b, lambda.size())).first;
    return it->second.at(lambda);
  }

 private:
  const RationalExpansion& to_p_locked(Basis b, const Partition& lambda) {
    auto key = std::make_pair(b, lambda);
    auto it = to_p_.find(key);
    if (it != to_p_.end()) return it->second;
    RationalExpansion acc{{Partition{}, Rational(1)}};
    for (int part : lambda.parts()) acc = multiply(acc, generator_in_p(b, part));
    return to_p_.emplace(key, std::move(acc)).first->second;
  }

  // b_lambda = c_lambda p_lambda + (terms p_mu with l(mu) > l(lambda)), so the
  // system is triangular once labels are processed from longest to shortest.
  std::map<Partition, RationalExpansion> invert_degree(Basis b, int n) {
    std::vector<Partition> labels = partitions_of(n, kDefaultPartitionBound);
    std::stable_sort(labels.begin(), labels.end(),
                     [](const Partition& x, const Partition& y) { return x.length() > y.length(); });
    std::map<Partition, RationalExpansion> p_in_b;
    for (const auto& lambda : labels) {
      const RationalExpansion& b_in_p = to_p_locked(b, lambda);
      const Rational diagonal = b_in_p.at(lambda);
      RationalExpansion acc{{lambda, Rational(1)}};
      for (const auto& [mu, a] : b_in_p) {
        if (mu == lambda) continue;
        for (const auto& [nu, d] : p_in_b.at(mu)) {
          Rational c = -a * d;
          auto [it, inserted] = acc.try_emplace(nu, c);
          if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) acc.erase(it);
          }
        }
      }
      for (auto& [nu, c] : acc) c /= diagonal;
      p_in_b.emplace(lambda, std::move(acc));
    }
    return p_in_b;
  }

  std::mutex mutex_;
  std::map<std::pair<Basis, Partition>, RationalExpansion> to_p_;
  std::map<std::pair<Basis, int>, std::map<Partition, RationalExpansion>> from_p_;
};

/// Expands a multi-color label through a per-color single-color expansion.
template <typename Lookup>
std::vector<std::pair<MultiPartition, Rational>> expand_label(const MultiPartition& label, Lookup&& lookup) {
  std::vector<std::pair<std::vector<Partition>, Rational>> acc{{{}, Rational(1)}};
  for (int i = 1; i <= label.colors(); ++i) {
    const RationalExpansion& piece = lookup(label[i]);
    std::vector<std::pair<std::vector<Partition>, Rational>> next;
    next.reserve(acc.size() * piece.size());
    for (const auto& [prefix, c] : acc) {
      for (const auto& [lambda, d] : piece) {
        auto components = prefix;
        components.push_back(lambda);
        next.emplace_back(std::move(components), c * d);
      }
    }
    acc = std::move(next);
  }
  std::vector<std::pair<MultiPartition, Rational>> out;
  out.reserve(acc.size());
  for (auto& [components, c] : acc) out.emplace_back(MultiPartition(std::move(components)), c);
  return out;
}

SymElement to_p_basis(const SymElement& x, int bound) {
  if (x.basis() == Basis::P) return x;
  auto& cache = TransitionCache::instance();
  SymElement out(x.colors(), Basis::P);
  for (const auto& [label, coeff] : x.terms()) {
    check_degree(label.size(), bound);
    for (const auto& [mu, c] : expand_label(label, [&](const Partition& l) -> const RationalExpansion& {
           return cache.to_p(x.basis(), l);
         })) {
      out.add_term(mu, coeff * c);
    }
  }
  return out;
}

SymElement from_p_basis(const SymElement& x, Basis target, int bound) {
  if (target == Basis::P) return x;
  auto& cache = TransitionCache::instance();
  SymElement out(x.colors(), target);
  for (const auto& [label, coeff] : x.terms()) {
    check_degree(label.size(), bound);
    for (const auto& [mu, c] : expand_label(label, [&](const Partition& l) -> const RationalExpansion& {
           return cache.from_p(target, l);
         })) {
      out.add_term(mu, coeff * c);
    }
  }
  return out;
}

}  // namespace

SymElement::SymElement(int colors, Basis basis) : colors_(colors), basis_(basis) {
  if (colors < 1) throw Error("SymElement needs at least one color");
}

SymElement SymElement::one(int colors, Basis basis) {
  SymElement x(colors, basis);
  x.add_term(MultiPartition(colors), 1);
  return x;
}

SymElement SymElement::basis_element(Basis basis, const MultiPartition& label, const LaurentPoly& coeff) {
  SymElement x(label.colors(), basis);
  x.add_term(label, coeff);
  return x;
}

LaurentPoly SymElement::coeff(const MultiPartition& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

std::optional<int> SymElement::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.size();
  // Keys are ordered by degree first.
  if (terms_.rbegin()->first.size() != d) return std::nullopt;
  return d;
}

int SymElement::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

void SymElement::add_term(const MultiPartition& label, const LaurentPoly& coeff) {
  check_colors(colors_, label.colors(), "SymElement::add_term");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(label, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymElement& SymElement::operator+=(const SymElement& rhs) {
  check_colors(colors_, rhs.colors_, "SymElement +");
  const SymElement& r = rhs.basis_ == basis_ ? rhs : convert(rhs, basis_);
  for (const auto& [label, c] : r.terms_) add_term(label, c);
  return *this;
}

SymElement& SymElement::operator-=(const SymElement& rhs) {
  check_colors(colors_, rhs.colors_, "SymElement -");
  const SymElement r = rhs.basis_ == basis_ ? rhs : convert(rhs, basis_);
  for (const auto& [label, c] : r.terms_) add_term(label, -c);
  return *this;
}

SymElement& SymElement::operator*=(const LaurentPoly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [label, c] : terms_) c *= scalar;
  return *this;
}

bool operator==(const SymElement& a, const SymElement& b) {
  if (a.colors_ != b.colors_) return false;
  if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
  return a.terms_ == convert(b, a.basis_).terms_;
}

std::string to_string(const SymElement& x) {
  std::string out;
  const std::string letter(1, basis_letter(x.basis()));
  for (const auto& [label, c] : x.terms()) {
    append_scaled_term(out, c, label.empty() ? std::string() : letter + label.label());
  }
  return out.empty() ? "0" : out;
}

SymElement p_gen(int n, int color, int colors) {
  if (n < 0) throw Error("generator degree must be nonnegative");
  if (n == 0) return SymElement::one(colors);
  return SymElement::basis_element(Basis::P, MultiPartition::single(colors, color, Partition{n}));
}

SymElement h_gen(int n, int color, int colors, int bound) {
  return generator(Basis::H, n, color, colors, bound);
}

SymElement e_gen(int n, int color, int colors, int bound) {
  return generator(Basis::E, n, color, colors, bound);
}

SymElement generator(Basis letter, int n, int color, int colors, int bound) {
  if (n < 0) throw Error("generator degree must be nonnegative");
  check_degree(n, bound);
  if (color < 1 || color > colors) throw ColorMismatchError("color " + std::to_string(color) + " out of range");
  SymElement out(colors, Basis::P);
  for (const auto& [lambda, c] : TransitionCache::instance().to_p(letter, n == 0 ? Partition{} : Partition{n})) {
    out.add_term(MultiPartition::single(colors, color, lambda), c);
  }
  return out;
}

SymElement mul(const SymElement& x, const SymElement& y) {
  check_colors(x.colors(), y.colors(), "mul");
  const SymElement a = to_p_basis(x, kDefaultDegreeBound);
  const SymElement b = to_p_basis(y, kDefaultDegreeBound);
  SymElement out(x.colors(), Basis::P);
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) out.add_term(oplus(la, lb), ca * cb);
  }
  return out;
}

SymElement operator*(const SymElement& x, const SymElement& y) { return mul(x, y); }

SymElement convert(const SymElement& x, Basis target, int bound) {
  if (x.basis() == target) return x;
  return from_p_basis(to_p_basis(x, bound), target, bound);
}

SymElement omega(const SymElement& x) {
  SymElement p = to_p_basis(x, kDefaultDegreeBound);
  SymElement out(x.colors(), Basis::P);
  for (const auto& [label, c] : p.terms()) {
    out.add_term(label, (label.size() - label.length()) % 2 == 0 ? c : -c);
  }
  return convert(out, x.basis());
}

LaurentPoly counit(const SymElement& x) { return x.coeff(MultiPartition(x.colors())); }

SymTensor::SymTensor(int colors, Basis left, Basis right) : colors_(colors), left_(left), right_(right) {
  if (colors < 1) throw Error("SymTensor needs at least one color");
}

LaurentPoly SymTensor::coeff(const MultiPartition& left, const MultiPartition& right) const {
  auto it = terms_.find({left, right});
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void SymTensor::add_term(const MultiPartition& left, const MultiPartition& right, const LaurentPoly& coeff) {
  check_colors(colors_, left.colors(), "SymTensor::add_term");
  check_colors(colors_, right.colors(), "SymTensor::add_term");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({left, right}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymTensor& SymTensor::operator+=(const SymTensor& rhs) {
  const SymTensor r = convert(rhs, left_, right_);
  for (const auto& [key, c] : r.terms_) add_term(key.first, key.second, c);
  return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& rhs) {
  const SymTensor r = convert(rhs, left_, right_);
  for (const auto& [key, c] : r.terms_) add_term(key.first, key.second, -c);
  return *this;
}

bool operator==(const SymTensor& a, const SymTensor& b) {
  if (a.colors_ != b.colors_) return false;
  if (a.left_ == b.left_ && a.right_ == b.right_) return a.terms_ == b.terms_;
  return a.terms_ == convert(b, a.left_, a.right_).terms_;
}

SymTensor tensor(const SymElement& a, const SymElement& b) {
  check_colors(a.colors(), b.colors(), "tensor");
  SymTensor out(a.colors(), a.basis(), b.basis());
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) out.add_term(la, lb, ca * cb);
  }
  return out;
}

SymTensor mul(const SymTensor& x, const SymTensor& y) {
  check_colors(x.colors(), y.colors(), "tensor mul");
  const SymTensor a = convert(x, Basis::P, Basis::P);
  const SymTensor b = convert(y, Basis::P, Basis::P);
  SymTensor out(x.colors());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      out.add_term(oplus(ka.first, kb.first), oplus(ka.second, kb.second), ca * cb);
    }
  }
  return out;
}

SymTensor convert(const SymTensor& t, Basis left, Basis right, int bound) {
  if (t.left_basis() == left && t.right_basis() == right) return t;
  SymTensor out(t.colors(), left, right);
  for (const auto& [key, c] : t.terms()) {
    const SymElement l = convert(SymElement::basis_element(t.left_basis(), key.first), left, bound);
    const SymElement r = convert(SymElement::basis_element(t.right_basis(), key.second), right, bound);
    for (const auto& [ll, lc] : l.terms()) {
      for (const auto& [rl, rc] : r.terms()) out.add_term(ll, rl, c * lc * rc);
    }
  }
  return out;
}

SymTensor omega(const SymTensor& t) {
  const SymTensor p = convert(t, Basis::P, Basis::P);
  SymTensor out(t.colors());
  for (const auto& [key, c] : p.terms()) {
    const int parity = key.first.size() - key.first.length() + key.second.size() - key.second.length();
    out.add_term(key.first, key.second, parity % 2 == 0 ? c : -c);
  }
  return convert(out, t.left_basis(), t.right_basis());
}

namespace {

struct PartBlock {
  int color;
  int part;
  int multiplicity;
};

std::vector<CoproductTerm> compute_coproduct_terms(const MultiPartition& lambda) {
  std::vector<PartBlock> blocks;
  for (int i = 1; i <= lambda.colors(); ++i) {
    const auto& parts = lambda[i].parts();
    for (std::size_t k = 0; k < parts.size();) {
      std::size_t run = k;
      while (run < parts.size() && parts[run] == parts[k]) ++run;
      blocks.push_back({i, parts[k], static_cast<int>(run - k)});
      k = run;
    }
  }
  std::vector<CoproductTerm> out;
  const int colors = lambda.colors();
  std::vector<std::vector<int>> left(colors), right(colors);
  auto rec = [&](auto&& self, std::size_t b, const Integer& coeff) -> void {
    if (b == blocks.size()) {
      std::vector<Partition> lc, rc;
      for (int i = 0; i < colors; ++i) {
        lc.emplace_back(left[i]);
        rc.emplace_back(right[i]);
      }
      out.push_back({MultiPartition(std::move(lc)), MultiPartition(std::move(rc)), coeff});
      return;
    }
    const PartBlock& blk = blocks[b];
    auto& l = left[blk.color - 1];
    auto& r = right[blk.color - 1];
    for (int a = 0; a <= blk.multiplicity; ++a) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(blk.multiplicity), static_cast<unsigned long>(a));
      l.insert(l.end(), a, blk.part);
      r.insert(r.end(), blk.multiplicity - a, blk.part);
      self(self, b + 1, coeff * binom);
      l.resize(l.size() - a);
      r.resize(r.size() - (blk.multiplicity - a));
    }
  };
  rec(rec, 0, Integer(1));
  return out;
}

}  // namespace

const std::vector<CoproductTerm>& coproduct_terms(const MultiPartition& lambda) {
  static std::mutex mutex;
  static std::map<MultiPartition, std::vector<CoproductTerm>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(lambda);
  if (it == cache.end()) it = cache.emplace(lambda, compute_coproduct_terms(lambda)).first;
  return it->second;
}

SymTensor coproduct(const SymElement& x) {
  const SymElement p = to_p_basis(x, kDefaultDegreeBound);
  SymTensor out(x.colors());
  for (const auto& [label, c] : p.terms()) {
    for (const auto& term : coproduct_terms(label)) out.add_term(term.left, term.right, c * Rational(term.coeff));
  }
  return out;
}

namespace {

using Series = std::vector<SymElement>;

Series truncated_product(const Series& a, const Series& b, int bound) {
  Series out(static_cast<std::size_t>(bound) + 1, SymElement(1));
  for (int i = 0; i <= bound; ++i) {
    for (int j = 0; i + j <= bound; ++j) {
      if (a[i].is_zero() || b[j].is_zero()) continue;
      out[i + j] += mul(a[i], b[j]);
    }
  }
  return out;
}

GeneratorSource default_source(Basis b) {
  return [b](int n) { return generator(b, n, 1, 1); };
}

}  // namespace

SeriesCheckResult series_check_H(int bound, const GeneratorSource& h_source) {
  if (bound < 0) throw Error("series check bound must be nonnegative");
  check_degree(bound, kDefaultDegreeBound);
  const GeneratorSource h = h_source ? h_source : default_source(Basis::H);

  // exp(A) = sum_j A^j / j!, truncated; A has no constant term so j <= bound suffices.
  Series a(static_cast<std::size_t>(bound) + 1, SymElement(1));
  for (int r = 1; r <= bound; ++r) a[r] = p_gen(r, 1, 1) * LaurentPoly(Rational(1, r));
  Series power(static_cast<std::size_t>(bound) + 1, SymElement(1));
  power[0] = SymElement::one(1);
  Series exp_a = power;
  Integer factorial(1);
  for (int j = 1; j <= bound; ++j) {
    power = truncated_product(power, a, bound);
    factorial *= j;
    Rational inv(Integer(1), factorial);
    for (int n = 0; n <= bound; ++n) exp_a[n] += power[n] * LaurentPoly(inv);
  }
  for (int n = 0; n <= bound; ++n) {
    if (!(exp_a[n] == h(n))) return {false, n};
  }
  return {};
}

SeriesCheckResult series_check_EH(int bound, const GeneratorSource& h_source, const GeneratorSource& e_source) {
  if (bound < 0) throw Error("series check bound must be nonnegative");
  check_degree(bound, kDefaultDegreeBound);
  const GeneratorSource h = h_source ? h_source : default_source(Basis::H);
  const GeneratorSource e = e_source ? e_source : default_source(Basis::E);
  for (int n = 0; n <= bound; ++n) {
    SymElement acc(1);
    for (int r = 0; r <= n; ++r) {
      SymElement term = mul(e(r), h(n - r));
      if (r % 2) {
        acc -= term;
      } else {
        acc += term;
      }
    }
    const SymElement expected = n == 0 ? SymElement::one(1) : SymElement(1);
    if (!(acc == expected)) return {false, n};
  }
  return {};
}

}  // namespace qlh

namespace qlh {

std::string to_string(const SymTensor& t) {
  std::string out;
  const std::string l(1, basis_letter(t.left_basis()));
  const std::string r(1, basis_letter(t.right_basis()));
  for (const auto& [key, c] : t.terms()) {
    const std::string left = key.first.empty() ? "1" : l + key.first.label();
    const std::string right = key.second.empty() ? "1" : r + key.second.label();
    append_scaled_term(out, c, left + " (x) " + right);
  }
  return out.empty() ? "0" : out;
}

}  // namespace qlh
