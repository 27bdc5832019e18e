#include "qlh/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace qlh {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw Error("partition parts must be nonnegative");
    if (p > 0) parts_.push_back(p);
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  for (int p : parts_) size_ += p;
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(parts_[k]);
  }
  return out + "]";
}

Integer z_of(const Partition& lambda) {
  Integer z(1);
  const auto& parts = lambda.parts();
  for (std::size_t k = 0; k < parts.size();) {
    std::size_t run = k;
    while (run < parts.size() && parts[run] == parts[k]) ++run;
    const unsigned long m = run - k;
    Integer power, factorial;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[k]), m);
    mpz_fac_ui(factorial.get_mpz_t(), m);
    z *= power * factorial;
    k = run;
  }
  return z;
}

Partition oplus(const Partition& mu, const Partition& lambda) {
  std::vector<int> parts = mu.parts();
  parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
  return Partition(std::move(parts));
}

Partition oplus(const Partition& mu, int k) { return oplus(mu, Partition{k}); }

Partition ominus(const Partition& mu, int k) {
  std::vector<int> parts = mu.parts();
  auto it = std::find(parts.begin(), parts.end(), k);
  if (it == parts.end()) return {};
  parts.erase(it);
  return Partition(std::move(parts));
}

namespace {

void enumerate_partitions(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int bound) {
  if (n < 0) throw Error("partitions_of: negative size");
  if (n > bound) {
    throw SizeLimitError("partitions_of: size " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_partitions(n, n, prefix, out);
  return out;
}

Partition parse_partition(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos >= text.size() || text[pos] != '[') throw ParseError(pos, "expected '['");
  ++pos;
  std::vector<int> parts;
  skip();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      skip();
      const std::size_t start = pos;
      long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) throw ParseError(start, "part too large");
        ++pos;
      }
      if (start == pos) throw ParseError(pos, "expected a part");
      if (value == 0) throw ParseError(start, "parts must be positive");
      parts.push_back(static_cast<int>(value));
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      throw ParseError(pos, "expected ',' or ']'");
    }
  }
  skip();
  if (pos != text.size()) throw ParseError(pos, "trailing characters");
  return Partition(std::move(parts));
}

MultiPartition::MultiPartition(int colors) : components_(static_cast<std::size_t>(colors)) {
  if (colors < 1) throw Error("a multipartition needs at least one color");
}

MultiPartition::MultiPartition(std::vector<Partition> components) : components_(std::move(components)) {
  if (components_.empty()) throw Error("a multipartition needs at least one color");
  for (const auto& p : components_) size_ += p.size();
}

MultiPartition MultiPartition::single(int colors, int color, Partition lambda) {
  if (color < 1 || color > colors) throw ColorMismatchError("color " + std::to_string(color) + " out of range");
  std::vector<Partition> components(static_cast<std::size_t>(colors));
  components[color - 1] = std::move(lambda);
  return MultiPartition(std::move(components));
}

int MultiPartition::length() const noexcept {
  int len = 0;
  for (const auto& p : components_) len += p.length();
  return len;
}

std::string MultiPartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ";";
    out += components_[i].to_string();
  }
  return out;
}

std::string MultiPartition::label() const {
  std::string out = "[";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ";";
    const auto& parts = components_[i].parts();
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(parts[k]);
    }
  }
  return out + "]";
}

MultiPartition oplus(const MultiPartition& a, const MultiPartition& b) {
  if (a.colors() != b.colors()) throw ColorMismatchError("oplus: color counts differ");
  std::vector<Partition> components;
  components.reserve(static_cast<std::size_t>(a.colors()));
  for (int i = 1; i <= a.colors(); ++i) components.push_back(oplus(a[i], b[i]));
  return MultiPartition(std::move(components));
}

MultiPartition oplus(const MultiPartition& a, int part, int color) {
  if (color < 1 || color > a.colors()) throw ColorMismatchError("oplus: color out of range");
  std::vector<Partition> components = a.components();
  components[color - 1] = oplus(components[color - 1], part);
  return MultiPartition(std::move(components));
}

std::vector<ColoredPart> underline(const MultiPartition& lambda) {
  std::vector<ColoredPart> out;
  out.reserve(static_cast<std::size_t>(lambda.length()));
  for (int i = 1; i <= lambda.colors(); ++i) {
    for (int part : lambda[i].parts()) out.push_back({part, i});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiPartition> multipartitions_of(int n, int colors, int bound) {
  if (colors < 1) throw Error("multipartitions_of: need at least one color");
  if (n > bound) {
    throw SizeLimitError("multipartitions_of: size " + std::to_string(n) + " exceeds bound " +
                         std::to_string(bound));
  }
  std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) by_size[k] = partitions_of(k, bound);

  std::vector<MultiPartition> out;
  std::vector<Partition> prefix;
  std::function<void(int, int)> rec = [&](int color, int remaining) {
    if (color == colors) {
      for (const auto& p : by_size[remaining]) {
        prefix.push_back(p);
        out.emplace_back(prefix);
        prefix.pop_back();
      }
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      for (const auto& p : by_size[k]) {
        prefix.push_back(p);
        rec(color + 1, remaining - k);
        prefix.pop_back();
      }
    }
  };
  rec(1, n);
  std::sort(out.begin(), out.end());
  return out;
}

MultiPartition parse_multipartition(std::string_view text) {
  std::vector<Partition> components;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = text.find(';', start);
    const std::string_view piece = text.substr(start, semi == std::string_view::npos ? text.npos : semi - start);
    try {
      components.push_back(parse_partition(piece));
    } catch (const ParseError& e) {
      throw ParseError(start + e.offset(), "malformed multipartition component");
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return MultiPartition(std::move(components));
}

}  // namespace qlh
