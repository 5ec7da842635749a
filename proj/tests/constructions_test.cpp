#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "tracekit/constructions.hpp"
#include "tracekit/errors.hpp"
#include "tracekit/piles.hpp"

using namespace tracekit;
namespace ts = testing_support;

namespace {

// 𝓕₀(n,d) written out from its definition with 1-based element lists.
ts::SetList oracle_b(int n, int d) {
  ts::SetList out;
  const int blocks = n / d;
  for (int i = 0; i < blocks; ++i) {
    const int lo = i * d + 1;
    for (std::uint32_t m = 0; m < (1U << d); ++m) {
      std::vector<int> s;
      for (int j = 0; j < d; ++j) {
        if (m >> j & 1U) s.push_back(lo + j);
      }
      if (static_cast<int>(s.size()) <= d - 2) out.insert(s);
    }
    std::vector<int> top;
    for (int j = 0; j < d - 1; ++j) top.push_back(lo + j);
    out.insert(top);
  }
  for (int i = 1; i <= blocks; i += 2) out.insert({d * i, d * (i + 1)});
  return out;
}

}  // namespace

TEST(ConstructionA, SizesAndDegrees) {
  EXPECT_EQ(build_construction_a(10, 5, 3).size(), 59u);
  EXPECT_EQ(min_degree(build_construction_a(10, 5, 3)), 14u);
  EXPECT_EQ(build_construction_a(5, 5, 1), power_set(5));
  const Family f = build_construction_a(10, 5, 4);
  EXPECT_EQ(f.size(), 57u);
  EXPECT_GE(min_degree(f), 13u);
  EXPECT_TRUE(is_hereditary(f));
  for (int d = 5; d <= 10; ++d) {
    for (int c = 1; c <= d - 1; ++c) {
      for (int n = d; n <= 20; n += d) {
        const Family a = build_construction_a(n, d, c);
        EXPECT_TRUE(ts::naive_hereditary(ts::as_lists(a)));
        EXPECT_EQ(a.size(), static_cast<std::size_t>(n / d) * ((std::size_t{1} << d) - c) + 1);
        EXPECT_GE(min_degree(a), (std::size_t{1} << (d - 1)) - c + 1);
      }
    }
  }
}

TEST(ConstructionA, Errors) {
  EXPECT_THROW(build_construction_a(8, 4, 1), Error);
  EXPECT_THROW(build_construction_a(10, 5, 5), Error);
  EXPECT_THROW(build_construction_a(11, 5, 2), Error);
}

TEST(ConstructionA, ExplicitExclusions) {
  // Dropping a singleton breaks heredity; the builder reports nothing and
  // leaves the check to the caller.
  const SubsetMask one = SubsetMask::singleton(0);
  const Family f = build_construction_a(5, 5, 2, std::vector<std::vector<SubsetMask>>{{one}});
  EXPECT_EQ(f.size(), 31u);
  EXPECT_FALSE(is_hereditary(f));
  EXPECT_THROW(build_construction_a(5, 5, 3, std::vector<std::vector<SubsetMask>>{{one}}), Error);
}

TEST(ConstructionB, MatchesDefinition) {
  for (auto [n, d] : {std::pair{10, 5}, {20, 5}, {12, 6}, {14, 7}, {16, 8}, {24, 6}}) {
    const Family f = build_construction_b(n, d);
    EXPECT_EQ(ts::as_lists(f), oracle_b(n, d)) << n << ' ' << d;
    EXPECT_TRUE(is_hereditary(f));
    const Rat expect = piles::frak_b(d, d) * n + 1;
    EXPECT_EQ(Rat(static_cast<unsigned long>(f.size())), expect);
    for (int x = 0; x < n; ++x) EXPECT_EQ(degree(f, x), (std::size_t{1} << (d - 1)) - d + 1);
  }
  EXPECT_EQ(build_construction_b(10, 5).size(), 54u);
  EXPECT_EQ(build_construction_b(20, 5).size(), 107u);
  EXPECT_EQ(build_construction_b(12, 6).size(), 116u);
  EXPECT_EQ(min_degree(build_construction_b(12, 6)), 27u);
  EXPECT_THROW(build_construction_b(15, 5), Error);
  EXPECT_THROW(build_construction_b(8, 4), Error);
}

TEST(ConstructionB, PartsAreDisjointAndSized) {
  for (auto [n, d] : {std::pair{10, 5}, {20, 5}, {12, 6}, {16, 8}}) {
    const ConstructionBParts p = construction_b_parts(n, d);
    const Rat small_expect = Rat((1L << d) - d - 2, d) * n + 1;
    EXPECT_EQ(Rat(static_cast<unsigned long>(p.small.size())), small_expect);
    EXPECT_EQ(p.tops.size(), static_cast<std::size_t>(n / d));
    EXPECT_EQ(p.pairs.size(), static_cast<std::size_t>(n / (2 * d)));
    EXPECT_EQ(p.small.size() + p.tops.size() + p.pairs.size(), build_construction_b(n, d).size());
    for (SubsetMask m : p.tops) EXPECT_FALSE(p.small.contains(m));
    for (SubsetMask m : p.pairs) {
      EXPECT_FALSE(p.small.contains(m));
      EXPECT_FALSE(p.tops.contains(m));
    }
  }
}

TEST(ConstructionB, GoodVerticesAreBlockTops) {
  for (auto [n, d] : {std::pair{10, 5}, {12, 6}, {14, 7}}) {
    const auto kinds = piles::classify_vertices(build_construction_b(n, d), d);
    for (int x = 0; x < n; ++x) {
      EXPECT_EQ(kinds[static_cast<std::size_t>(x)] == piles::VertexKind::Good, x % d == d - 1);
    }
  }
}

TEST(Extremal, Reports) {
  EXPECT_TRUE(is_extremal(appendix_b_s0(6), 0, rat(1)).matches_formula);
  EXPECT_TRUE(is_extremal(appendix_b_s1(8), 1, rat(3, 2)).matches_formula);
  for (int n : {10, 20}) EXPECT_TRUE(is_extremal(build_construction_b(n, 5), 11, rat(53, 10)).matches_formula);
  for (int d = 5; d <= 8; ++d) {
    EXPECT_TRUE(is_extremal(build_construction_b(2 * d, d), (1L << (d - 1)) - d, piles::frak_b(d, d)).matches_formula);
  }
  const ExtremalReport off = is_extremal(build_construction_b(10, 5), 11, rat(54, 10));
  EXPECT_FALSE(off.size_matches);
  EXPECT_TRUE(off.degree_ok);
  EXPECT_FALSE(off.matches_formula);
  EXPECT_FALSE(is_extremal(build_construction_b(10, 5), 12, rat(53, 10)).degree_ok);
  EXPECT_THROW(appendix_b_s1(7), Error);
}

TEST(Fact62, Examples) {
  const Fact62Report r0 = fact62_report(appendix_b_s0(6));
  EXPECT_TRUE(r0.all());
  EXPECT_EQ(r0.dual_size, 57u);
  EXPECT_EQ(r0.dual_min_degree, 26u);
  const Fact62Report r1 = fact62_report(appendix_b_s1(8));
  EXPECT_TRUE(r1.all());
  EXPECT_EQ(r1.dual_size, 243u);
  EXPECT_EQ(r1.dual_min_degree, 117u);
  const Fact62Report full = fact62_report(power_set(6));
  EXPECT_TRUE(full.all());
  EXPECT_EQ(full.dual_size, 0u);
  EXPECT_THROW(fact62_report(make_family(3, {{1, 2}})), Error);
  std::mt19937 rng(62);
  for (int i = 0; i < 50; ++i) {
    EXPECT_TRUE(fact62_check(ts::random_hereditary(rng, 1 + static_cast<int>(rng() % 12))));
  }
}

TEST(DualCandidate, Preconditions) {
  const DualCandidate c0 = dual_candidate(6, 0, rat(1));
  EXPECT_EQ(c0.s_star, 25);
  EXPECT_EQ(c0.ms_star, rat(28, 3));
  const DualCandidate c1 = dual_candidate(8, 1, rat(3, 2));
  EXPECT_EQ(c1.s_star, 116);
  EXPECT_TRUE(c1.size_precondition);
  EXPECT_TRUE(c1.degree_precondition);
  EXPECT_EQ(Rat(243), c1.ms_star * 8 + 1);
}
