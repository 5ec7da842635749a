#pragma once

// Shared generators and naive oracles. Oracles here work on plain std::set
// of sorted element vectors and never call into the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "tracekit/family.hpp"

namespace testing_support {

using tracekit::Family;
using tracekit::SubsetMask;
using SetList = std::set<std::vector<int>>;  // 1-based, sorted elements

inline SetList as_lists(const Family& f) {
  SetList out;
  for (SubsetMask m : f) {
    std::vector<int> el;
    for (int v = 0; v < 32; ++v) {
      if (m.bits >> v & 1U) el.push_back(v + 1);
    }
    out.insert(el);
  }
  return out;
}

inline bool naive_hereditary(const SetList& sets) {
  for (const auto& s : sets) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto smaller = s;
      smaller.erase(smaller.begin() + static_cast<long>(i));
      if (!sets.count(smaller)) return false;
    }
  }
  return true;
}

inline std::size_t naive_degree(const SetList& sets, int v) {
  return static_cast<std::size_t>(std::count_if(sets.begin(), sets.end(), [v](const auto& s) {
    return std::find(s.begin(), s.end(), v) != s.end();
  }));
}

inline std::size_t naive_min_degree(const SetList& sets, int n) {
  std::size_t md = SIZE_MAX;
  for (int v = 1; v <= n; ++v) md = std::min(md, naive_degree(sets, v));
  return md;
}

// Down-closure of random generator masks, built by scanning every mask.
inline Family random_hereditary(std::mt19937& rng, int n, int max_generators = 6) {
  std::vector<std::uint32_t> gens;
  const int count = static_cast<int>(rng() % static_cast<unsigned>(max_generators + 1));
  for (int i = 0; i < count; ++i) {
    std::uint32_t g = 0;
    for (int v = 0; v < n; ++v) {
      if (rng() % 3 == 0) g |= 1U << v;
    }
    gens.push_back(g);
  }
  std::vector<SubsetMask> masks;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    if (std::any_of(gens.begin(), gens.end(), [m](std::uint32_t g) { return (m & g) == m; })) {
      masks.push_back(SubsetMask{m});
    }
  }
  return Family::from_masks(n, masks);
}

inline tracekit::Permutation random_permutation(std::mt19937& rng, int n) {
  tracekit::Permutation p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// best[delta] = least size of a hereditary family on [n] with every degree
// >= delta, taken over down-closures of every collection of masks; 0 when no
// family qualifies.
inline std::vector<std::uint64_t> brute_force_mu(int n, std::uint64_t max_delta) {
  const std::uint32_t total = 1U << n;
  std::vector<std::uint64_t> best(max_delta + 1, 0);
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << total); ++pick) {
    std::vector<bool> in(total, false);
    for (std::uint32_t g = 0; g < total; ++g) {
      if (!(pick >> g & 1U)) continue;
      for (std::uint32_t m = 0; m < total; ++m) {
        if ((m & g) == m) in[m] = true;
      }
    }
    std::uint64_t size = 0;
    std::vector<std::uint64_t> deg(static_cast<std::size_t>(n), 0);
    for (std::uint32_t m = 0; m < total; ++m) {
      if (!in[m]) continue;
      ++size;
      for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] += m >> v & 1U;
    }
    const std::uint64_t md = *std::min_element(deg.begin(), deg.end());
    for (std::uint64_t d = 1; d <= std::min(md, max_delta); ++d) {
      if (best[d] == 0 || size < best[d]) best[d] = size;
    }
  }
  return best;
}

}  // namespace testing_support
