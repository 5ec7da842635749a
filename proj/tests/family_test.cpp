#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "support.hpp"
#include "tracekit/constructions.hpp"
#include "tracekit/errors.hpp"

using namespace tracekit;
namespace ts = testing_support;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(MakeFamily, CanonicalizesAndDeduplicates) {
  const Family f = make_family(3, {{2}, {}, {1}});
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], SubsetMask{0});
  EXPECT_EQ(f[1], SubsetMask{1});
  EXPECT_EQ(f[2], SubsetMask{2});
  EXPECT_EQ(make_family(3, {{1}, {1}}).size(), 1u);
  EXPECT_EQ(make_family(3, {{2, 1}}), make_family(3, {{1, 2}}));
}

TEST(MakeFamily, RejectsBadInput) {
  EXPECT_EQ(code_of([] { make_family(3, {{4}}); }), ErrorCode::InvalidElement);
  EXPECT_EQ(code_of([] { make_family(3, {{0}}); }), ErrorCode::InvalidElement);
  EXPECT_EQ(code_of([] { make_family(31, {}); }), ErrorCode::UnsupportedUniverse);
  EXPECT_EQ(code_of([] { make_family(0, {}); }), ErrorCode::UnsupportedUniverse);
}

TEST(Heredity, SmallCases) {
  EXPECT_TRUE(is_hereditary(make_family(2, {{}, {1}, {2}, {1, 2}})));
  EXPECT_FALSE(is_hereditary(make_family(2, {{1, 2}})));
  EXPECT_FALSE(is_hereditary(make_family(2, {{1}})));  // ∅ missing
  EXPECT_TRUE(is_hereditary(make_family(2, {})));
  EXPECT_TRUE(is_hereditary(build_construction_b(10, 5)));
}

TEST(Heredity, DownwardClosure) {
  EXPECT_EQ(downward_closure(make_family(3, {{1, 2}})), make_family(3, {{}, {1}, {2}, {1, 2}}));
  EXPECT_EQ(downward_closure(make_family(3, {{1, 2}, {2, 3}})),
            make_family(3, {{}, {1}, {2}, {3}, {1, 2}, {2, 3}}));
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<SubsetMask> raw;
    for (int k = 0; k < 4; ++k) raw.push_back(SubsetMask{static_cast<std::uint32_t>(rng() % (1U << n))});
    const Family f = Family::from_masks(n, raw);
    const Family c = downward_closure(f);
    EXPECT_TRUE(ts::naive_hereditary(ts::as_lists(c)));
    EXPECT_EQ(downward_closure(c), c);
    for (SubsetMask m : f) EXPECT_TRUE(c.contains(m));
  }
}

TEST(Links, Examples) {
  EXPECT_EQ(link(make_family(2, {{}, {1}, {1, 2}}), 0), make_family(2, {{}, {2}}));
  EXPECT_EQ(link(power_set(3), 1), make_family(3, {{}, {1}, {3}, {1, 3}}));
  const Family f0 = build_construction_b(10, 5);
  for (int x : {0, 1, 2, 3}) EXPECT_EQ(link(f0, x).size(), 12u);
}

TEST(Degrees, Examples) {
  for (int d = 1; d <= 6; ++d) {
    for (int x = 0; x < d; ++x) EXPECT_EQ(degree(power_set(d), x), std::size_t{1} << (d - 1));
  }
  const Family f0 = build_construction_b(10, 5);
  EXPECT_EQ(set_degree(f0, SubsetMask{}), f0.size());
  EXPECT_EQ(min_degree(f0), 12u);
  EXPECT_EQ(min_degree(make_family(3, {{}})), 0u);
  const Family a = build_construction_a(10, 5, 3);
  EXPECT_EQ(min_degree(a), 14u);
  EXPECT_THROW(degree(f0, 10), Error);
}

TEST(Neighborhoods, ConstructionB) {
  const Family f = build_construction_b(12, 6);
  EXPECT_EQ(neighborhood(make_family(3, {{}, {1}}), 2), SubsetMask{});
  for (int x = 0; x < 12; ++x) {
    const SubsetMask nb = neighborhood(f, x);
    const bool top = x % 6 == 5;
    EXPECT_EQ(nb.size(), top ? 7 : 6) << x;
    EXPECT_TRUE(SubsetMask{0x3FU << (x / 6 * 6)}.subset_of(nb));
  }
}

TEST(Trace, Examples) {
  const Family p2 = make_family(2, {{}, {1}, {2}, {1, 2}});
  EXPECT_EQ(trace(p2, SubsetMask::full(2)), p2);
  EXPECT_EQ(trace(p2, SubsetMask{1}), make_family(2, {{}, {1}}));
}

TEST(Properties, RandomHereditaryFamilies) {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Family f = ts::random_hereditary(rng, n);
    const auto lists = ts::as_lists(f);
    ASSERT_TRUE(is_hereditary(f));
    std::size_t handshake = 0;
    for (SubsetMask m : f) handshake += static_cast<std::size_t>(m.size());
    std::size_t deg_sum = 0;
    for (int x = 0; x < n; ++x) {
      const std::size_t d = degree(f, x);
      EXPECT_EQ(d, ts::naive_degree(lists, x + 1));
      EXPECT_EQ(link(f, x).size(), d);
      EXPECT_EQ(set_degree(f, SubsetMask::singleton(x)), d);
      EXPECT_EQ(trace(f, SubsetMask::full(n).without(x)).size(), f.size() - d);
      EXPECT_TRUE(is_hereditary(link(f, x)));
      EXPECT_EQ(degree_profile(f, x).total(), d);
      deg_sum += d;
    }
    EXPECT_EQ(deg_sum, handshake);
    EXPECT_EQ(min_degree(f), ts::naive_min_degree(lists, n));
  }
}

TEST(MaximalSets, Minimality) {
  EXPECT_EQ(maximal_sets(power_set(3)), make_family(3, {{1, 2, 3}}));
  EXPECT_TRUE(is_minimal_hereditary(build_construction_b(10, 5), 12));
  EXPECT_FALSE(is_minimal_hereditary(power_set(5), 12));
  EXPECT_THROW(is_minimal_hereditary(make_family(2, {{1, 2}}), 1), Error);
}

TEST(DegreeProfile, ConstructionB) {
  const Family f = build_construction_b(10, 5);
  for (int x = 0; x < 10; ++x) {
    const DegreeProfile p = degree_profile(f, x);
    if (x % 5 == 4) {
      EXPECT_EQ(std::vector<std::size_t>({p.at(0), p.at(1), p.at(2), p.at(3)}),
                std::vector<std::size_t>({1, 5, 6, 0}));
    } else {
      EXPECT_EQ(std::vector<std::size_t>({p.at(0), p.at(1), p.at(2), p.at(3)}),
                std::vector<std::size_t>({1, 4, 6, 1}));
    }
  }
}

TEST(ComplementDual, Facts) {
  const Family b0 = appendix_b_s0(6);
  EXPECT_EQ(b0.size(), 7u);
  EXPECT_EQ(complement_dual(b0).size(), 57u);
  EXPECT_EQ(min_degree(complement_dual(b0)), 26u);
  EXPECT_TRUE(complement_dual(power_set(5)).empty());
  const Family b1 = appendix_b_s1(8);
  EXPECT_EQ(complement_dual(b1).size(), 243u);
  EXPECT_EQ(min_degree(complement_dual(b1)), 117u);
  EXPECT_THROW(complement_dual(make_family(26, {{}})), Error);

  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Family f = ts::random_hereditary(rng, n);
    const Family dual = complement_dual(f);
    EXPECT_EQ(complement_dual(dual), f);
    EXPECT_TRUE(is_hereditary(dual));
    EXPECT_EQ(dual.size(), (std::size_t{1} << n) - f.size());
    for (int x = 0; x < n; ++x) {
      EXPECT_EQ(degree(dual, x) + f.size(), (std::size_t{1} << (n - 1)) + degree(f, x));
    }
  }
}

TEST(Isomorphism, RelabeledCopies) {
  const Family f0 = build_construction_b(10, 5);
  ASSERT_TRUE(are_isomorphic(f0, f0).has_value());
  EXPECT_FALSE(are_isomorphic(f0, build_construction_a(10, 5, 4)).has_value());
  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    const Family g = apply_permutation(f0, ts::random_permutation(rng, 10));
    const auto pi = are_isomorphic(f0, g);
    ASSERT_TRUE(pi.has_value());
    EXPECT_EQ(apply_permutation(f0, *pi), g);
  }
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Family f = ts::random_hereditary(rng, n);
    const Family g = apply_permutation(f, ts::random_permutation(rng, n));
    const auto pi = are_isomorphic(f, g);
    ASSERT_TRUE(pi.has_value());
    EXPECT_EQ(apply_permutation(f, *pi), g);
  }
}

TEST(Isomorphism, NonIsomorphicPairs) {
  // Two 2-regular graphs on six vertices: a hexagon and two triangles.
  std::vector<std::vector<int>> hex = {{}, {1}, {2}, {3}, {4}, {5}, {6}};
  std::vector<std::vector<int>> tri = hex;
  for (int i = 1; i <= 6; ++i) hex.push_back({i, i % 6 + 1});
  for (auto e : std::vector<std::vector<int>>{{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}}) tri.push_back(e);
  EXPECT_FALSE(are_isomorphic(make_family(6, hex), make_family(6, tri)).has_value());
  EXPECT_THROW(are_isomorphic(make_family(3, {{}}), make_family(4, {{}})), Error);
}
