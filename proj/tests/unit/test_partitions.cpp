#include "doctest.h"

#include "oracles.hpp"
#include "qlh/partitions.hpp"

using qlh::ColoredPart;
using qlh::MultiPartition;
using qlh::Partition;

TEST_CASE("partition_normalizes_parts") {
  CHECK(Partition({1, 3, 0, 1}).parts() == std::vector<int>{3, 1, 1});
  CHECK(Partition{}.size() == 0);
  CHECK(Partition({2, 2, 1}).multiplicity(2) == 2);
  CHECK(Partition({3, 1, 1}).to_string() == "[3,1,1]");
  CHECK(Partition{}.to_string() == "[]");
  CHECK_THROWS_AS(Partition(std::vector<int>{2, -1}), qlh::Error);
}

TEST_CASE("z_values") {
  CHECK(qlh::z_of(Partition{}) == 1);
  CHECK(qlh::z_of(Partition{2, 1, 1}) == 4);
  CHECK(qlh::z_of(Partition{3, 3}) == 18);
}

TEST_CASE("z_matches_centralizer_enumeration") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : qlh::partitions_of(n)) {
      CAPTURE(lambda.to_string());
      CHECK(qlh::z_of(lambda) == oracle::centralizer_order(lambda));
    }
}

TEST_CASE("oplus_and_ominus") {
  CHECK(qlh::oplus(Partition{2, 1}, Partition{2}) == Partition{2, 2, 1});
  CHECK(qlh::oplus(Partition{4, 2}, Partition{}) == Partition{4, 2});
  CHECK(qlh::oplus(Partition{3}, Partition{3, 1}) == Partition{3, 3, 1});
  CHECK(qlh::ominus(Partition{2, 2, 1}, 2) == Partition{2, 1});
  CHECK(qlh::ominus(Partition{2, 1}, 3) == Partition{});
  CHECK(qlh::ominus(Partition{}, 1) == Partition{});
}

TEST_CASE("oplus_laws") {
  oracle::Random rnd(11);
  for (int t = 0; t < 50; ++t) {
    auto a = rnd.partition(rnd.uniform(0, 6));
    auto b = rnd.partition(rnd.uniform(0, 6));
    auto c = rnd.partition(rnd.uniform(0, 6));
    CHECK(qlh::oplus(a, b) == qlh::oplus(b, a));
    CHECK(qlh::oplus(qlh::oplus(a, b), c) == qlh::oplus(a, qlh::oplus(b, c)));
    const int k = rnd.uniform(1, 5);
    CHECK(qlh::ominus(qlh::oplus(a, k), k) == a);
  }
}

TEST_CASE("partition_counts") {
  CHECK(qlh::partitions_of(0) == std::vector<Partition>{Partition{}});
  CHECK(qlh::partitions_of(4).size() == 5);
  CHECK(qlh::partitions_of(6).size() == 11);
  const auto p = oracle::partition_counts(20);
  for (int n = 0; n <= 20; ++n) CHECK(qlh::Integer(qlh::partitions_of(n).size()) == p[static_cast<std::size_t>(n)]);
}

TEST_CASE("partitions_are_reverse_lexicographic_and_distinct") {
  const auto all = qlh::partitions_of(7);
  CHECK(all.front() == Partition{7});
  CHECK(all.back() == Partition{1, 1, 1, 1, 1, 1, 1});
  for (std::size_t k = 1; k < all.size(); ++k) CHECK(all[k] < all[k - 1]);
  CHECK_THROWS_AS(qlh::partitions_of(31), qlh::SizeLimitError);
}

TEST_CASE("underline_examples") {
  MultiPartition a({Partition{2, 1}, Partition{1}});
  CHECK(qlh::underline(a) == std::vector<ColoredPart>{{1, 1}, {1, 2}, {2, 1}});
  CHECK(qlh::underline(MultiPartition(2)).empty());
  MultiPartition b({Partition{3, 3}, Partition{}});
  CHECK(qlh::underline(b) == std::vector<ColoredPart>{{3, 1}, {3, 1}});
}

TEST_CASE("underline_of_union_is_sorted_merge") {
  oracle::Random rnd(5);
  for (int t = 0; t < 40; ++t) {
    auto a = rnd.multipartition(rnd.uniform(0, 5), 2);
    auto b = rnd.multipartition(rnd.uniform(0, 5), 2);
    auto ua = qlh::underline(a);
    auto ub = qlh::underline(b);
    std::vector<ColoredPart> merged;
    std::merge(ua.begin(), ua.end(), ub.begin(), ub.end(), std::back_inserter(merged));
    CHECK(qlh::underline(qlh::oplus(a, b)) == merged);
    CHECK(static_cast<int>(ua.size()) == a.length());
  }
}

TEST_CASE("multipartition_text") {
  MultiPartition a({Partition{2, 1}, Partition{1}});
  CHECK(a.to_string() == "[2,1];[1]");
  CHECK(a.label() == "[2,1;1]");
  CHECK(qlh::parse_multipartition("[2,1];[1]") == a);
  CHECK(qlh::parse_partition("[3, 1,1]") == Partition{3, 1, 1});
  CHECK(a[2] == Partition{1});
  CHECK(a.size() == 4);
}

TEST_CASE("multipartitions_of_counts") {
  // Two colors: sum_k p(k) p(n-k).
  const auto p = oracle::partition_counts(6);
  for (int n = 0; n <= 6; ++n) {
    qlh::Integer expect = 0;
    for (int k = 0; k <= n; ++k) expect += p[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(n - k)];
    CHECK(qlh::Integer(qlh::multipartitions_of(n, 2).size()) == expect);
  }
}
