#include "qlh/heisenberg_double.hpp"

#include <algorithm>

namespace qlh {

std::string to_string(const Generator& g) {
  return std::string(1, basis_letter(g.letter)) + (g.side == Side::Plus ? "+" : "-") + "(" +
         std::to_string(g.degree) + "," + std::to_string(g.color) + ")";
}

DoubleElement::DoubleElement(std::shared_ptr<const PairingSpec> spec) : spec_(std::move(spec)) {
  if (!spec_) throw Error("DoubleElement requires a pairing");
}

DoubleElement DoubleElement::one(std::shared_ptr<const PairingSpec> spec) {
  DoubleElement u(std::move(spec));
  u.add_term(MultiPartition(u.colors()), MultiPartition(u.colors()), 1);
  return u;
}

LaurentPoly DoubleElement::coeff(const MultiPartition& plus, const MultiPartition& minus) const {
  auto it = terms_.find({plus, minus});
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void DoubleElement::add_term(const MultiPartition& plus, const MultiPartition& minus, const LaurentPoly& coeff) {
  if (plus.colors() != colors() || minus.colors() != colors()) {
    throw ColorMismatchError("DoubleElement: label colors do not match the pairing");
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({plus, minus}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

void check_spec(const DoubleElement& a, const DoubleElement& b) {
  if (a.spec() != b.spec()) throw SpecMismatchError("double elements carry different pairings");
}

}  // namespace

DoubleElement& DoubleElement::operator+=(const DoubleElement& rhs) {
  check_spec(*this, rhs);
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
  return *this;
}

DoubleElement& DoubleElement::operator-=(const DoubleElement& rhs) {
  check_spec(*this, rhs);
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, -c);
  return *this;
}

DoubleElement& DoubleElement::operator*=(const LaurentPoly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

bool operator==(const DoubleElement& a, const DoubleElement& b) {
  return a.spec_ == b.spec_ && a.terms_ == b.terms_;
}

DoubleElement embed_plus(const SymElement& x, std::shared_ptr<const PairingSpec> spec) {
  DoubleElement u(std::move(spec));
  if (x.colors() != u.colors()) throw ColorMismatchError("embed_plus: color count differs from the pairing");
  const MultiPartition unit(u.colors());
  const SymElement p = convert(x, Basis::P);
  for (const auto& [label, c] : p.terms()) u.add_term(label, unit, c);
  return u;
}

DoubleElement embed_minus(const SymElement& x, std::shared_ptr<const PairingSpec> spec) {
  DoubleElement u(std::move(spec));
  if (x.colors() != u.colors()) throw ColorMismatchError("embed_minus: color count differs from the pairing");
  const MultiPartition unit(u.colors());
  const SymElement p = convert(x, Basis::P);
  for (const auto& [label, c] : p.terms()) u.add_term(unit, label, c);
  return u;
}

DoubleElement embed(const Generator& g, std::shared_ptr<const PairingSpec> spec) {
  const SymElement x = generator(g.letter, g.degree, g.color, spec->colors(), spec->degree_bound());
  return g.side == Side::Plus ? embed_plus(x, std::move(spec)) : embed_minus(x, std::move(spec));
}

DoubleElement double_mul(const DoubleElement& u, const DoubleElement& v) {
  check_spec(u, v);
  const PairingSpec& spec = *u.spec();
  DoubleElement out(u.spec());
  std::map<std::pair<MultiPartition, MultiPartition>, LaurentPoly> pairing_memo;
  auto pairing = [&](const MultiPartition& x1, const MultiPartition& b2) -> const LaurentPoly& {
    auto key = std::make_pair(x1, b2);
    auto it = pairing_memo.find(key);
    if (it == pairing_memo.end()) it = pairing_memo.emplace(key, pair_pp(x1, b2, spec)).first;
    return it->second;
  };

  for (const auto& [ukey, ucoeff] : u.terms()) {
    const auto& [a, x] = ukey;
    const auto& x_split = coproduct_terms(x);
    for (const auto& [vkey, vcoeff] : v.terms()) {
      const auto& [b, y] = vkey;
      const LaurentPoly uv = ucoeff * vcoeff;
      const auto& b_split = coproduct_terms(b);
      for (const auto& xs : x_split) {
        for (const auto& bs : b_split) {
          if (xs.left.size() != bs.right.size()) continue;
          const LaurentPoly& value = pairing(xs.left, bs.right);
          if (value.is_zero()) continue;
          out.add_term(oplus(a, bs.left), oplus(xs.right, y), uv * value * LaurentPoly(Rational(xs.coeff * bs.coeff)));
        }
      }
    }
  }
  return out;
}

DoubleElement operator*(const DoubleElement& u, const DoubleElement& v) { return double_mul(u, v); }

DoubleElement commutator(const DoubleElement& u, const DoubleElement& v) {
  return double_mul(u, v) - double_mul(v, u);
}

namespace {

bool odd_parity(const MultiPartition& lambda) { return (lambda.size() - lambda.length()) % 2 != 0; }

}  // namespace

DoubleElement omega_double(const DoubleElement& u) {
  DoubleElement out(u.spec());
  for (const auto& [key, c] : u.terms()) {
    const bool flip = odd_parity(key.first) != odd_parity(key.second);
    out.add_term(key.first, key.second, flip ? -c : c);
  }
  return out;
}

DoubleElement normal_order(std::span<const Generator> word, std::shared_ptr<const PairingSpec> spec,
                           std::size_t max_length) {
  if (word.size() > max_length) {
    throw SizeLimitError("word length " + std::to_string(word.size()) + " exceeds the limit " +
                         std::to_string(max_length));
  }
  DoubleElement acc = DoubleElement::one(spec);
  for (const auto& g : word) acc = double_mul(acc, embed(g, spec));
  return acc;
}

DoubleElement specialize_q1(const DoubleElement& u) {
  DoubleElement out(u.spec());
  for (const auto& [key, c] : u.terms()) out.add_term(key.first, key.second, LaurentPoly(eval_at_one(c)));
  return out;
}

DoubleReadout readout(const DoubleElement& u, Basis plus, Basis minus) {
  DoubleReadout r{plus, minus, u.colors(), {}};
  auto add = [&r](const MultiPartition& a, const MultiPartition& b, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = r.terms.try_emplace({a, b}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) r.terms.erase(it);
    }
  };
  // Group by plus label so each plus conversion happens once.
  std::map<MultiPartition, SymElement> minus_parts;
  for (const auto& [key, c] : u.terms()) {
    auto [it, inserted] = minus_parts.try_emplace(key.first, u.colors());
    it->second.add_term(key.second, c);
  }
  for (const auto& [plus_label, minus_elem] : minus_parts) {
    const SymElement plus_expansion = convert(SymElement::basis_element(Basis::P, plus_label), plus);
    const SymElement minus_expansion = convert(minus_elem, minus);
    for (const auto& [pl, pc] : plus_expansion.terms()) {
      for (const auto& [ml, mc] : minus_expansion.terms()) add(pl, ml, pc * mc);
    }
  }
  return r;
}

DoubleReadout specialize_q1(const DoubleReadout& r) {
  DoubleReadout out{r.plus, r.minus, r.colors, {}};
  for (const auto& [key, c] : r.terms) {
    LaurentPoly v(eval_at_one(c));
    if (!v.is_zero()) out.terms.emplace(key, std::move(v));
  }
  return out;
}

namespace {

std::string word_text(const MultiPartition& label, Basis letter, Side side) {
  if (label.empty()) return "1";
  std::string out;
  for (int i = 1; i <= label.colors(); ++i) {
    for (int part : label[i].parts()) {
      if (!out.empty()) out += "*";
      out += to_string(Generator{letter, side, part, i});
    }
  }
  return out;
}

}  // namespace

std::string to_string(const DoubleReadout& r) {
  std::vector<const std::pair<const DoubleElement::Key, LaurentPoly>*> entries;
  for (const auto& entry : r.terms) entries.push_back(&entry);
  std::stable_sort(entries.begin(), entries.end(), [](const auto* x, const auto* y) {
    const int dx = x->first.first.size() + x->first.second.size();
    const int dy = y->first.first.size() + y->first.second.size();
    return dx > dy;
  });
  std::string out;
  for (const auto* entry : entries) {
    const auto& [key, c] = *entry;
    append_scaled_term(out, c, word_text(key.first, r.plus, Side::Plus) + "#" + word_text(key.second, r.minus, Side::Minus));
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const DoubleElement& u) { return to_string(readout(u, Basis::P, Basis::P)); }

}  // namespace qlh
