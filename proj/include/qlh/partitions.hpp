#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "qlh/error.hpp"
#include "qlh/laurent.hpp"

namespace qlh {

/// Integer partition, stored as weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Sorts into weakly decreasing order and drops zero parts; negative parts throw.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int multiplicity(int k) const;

  /// `[3,1,1]`, empty partition `[]`.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Centralizer order prod_i i^{m_i} m_i!.
Integer z_of(const Partition& lambda);

Partition oplus(const Partition& mu, const Partition& lambda);
Partition oplus(const Partition& mu, int k);
/// Removes one part equal to k. When mu has no such part the result is the
/// empty partition (note this loses information: (5) minus 3 is ()).
Partition ominus(const Partition& mu, int k);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n, int bound = kDefaultPartitionBound);

Partition parse_partition(std::string_view text);

/// A part of a multipartition tagged by its color.
struct ColoredPart {
  int part;
  int color;
  friend auto operator<=>(const ColoredPart&, const ColoredPart&) = default;
};

/// Tuple of partitions indexed by colors 1..colors().
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(int colors);
  explicit MultiPartition(std::vector<Partition> components);

  /// The multipartition with `lambda` in `color` and empty elsewhere.
  static MultiPartition single(int colors, int color, Partition lambda);

  int colors() const noexcept { return static_cast<int>(components_.size()); }
  const Partition& operator[](int color) const { return components_.at(color - 1); }
  const std::vector<Partition>& components() const noexcept { return components_; }
  int size() const noexcept { return size_; }
  int length() const noexcept;
  bool empty() const noexcept { return size_ == 0; }

  /// `[2,1];[1]`
  std::string to_string() const;
  /// `[2,1;1]`, the bracket used in basis-element text.
  std::string label() const;

  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
  /// Graded order: total size first, then componentwise lexicographic.
  friend std::strong_ordering operator<=>(const MultiPartition& a, const MultiPartition& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.components_ <=> b.components_;
  }

 private:
  std::vector<Partition> components_;
  int size_ = 0;
};

MultiPartition oplus(const MultiPartition& a, const MultiPartition& b);
MultiPartition oplus(const MultiPartition& a, int part, int color);

/// Parts of every color as (part, color) pairs in lexicographic order.
std::vector<ColoredPart> underline(const MultiPartition& lambda);

/// All multipartitions of total size n over `colors` colors, in ascending graded order.
std::vector<MultiPartition> multipartitions_of(int n, int colors, int bound = kDefaultPartitionBound);

/// Parses `[2,1];[1]` (one bracket per color).
MultiPartition parse_multipartition(std::string_view text);

}  // namespace qlh
