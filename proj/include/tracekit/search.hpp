#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tracekit/family.hpp"

namespace tracekit {

inline constexpr int kMaxSearchUniverse = 14;
inline constexpr int kMaxArrowsUniverse = 6;

struct SearchConfig {
  // 60 s unless TRACEKIT_BUDGET_SECS says otherwise.
  std::chrono::duration<double> time_budget = default_budget();
  // Witnesses are reproducible at one thread; values at any count.
  int threads = 1;
  bool symmetry_breaking = true;
  bool katona_pruning = true;
  // Seed the incumbent with the best block construction that qualifies.
  bool warm_start = true;

  static std::chrono::duration<double> default_budget();
};

enum class SearchStatus { Proved, Timeout };

struct SearchResult {
  // Empty when no family meets the constraint (delta > 2^{n-1}).
  std::optional<std::uint64_t> value;
  std::optional<Family> witness;
  std::uint64_t nodes = 0;
  std::chrono::duration<double> wallclock{0};
  SearchStatus status = SearchStatus::Proved;
  std::uint64_t root_bound = 0;  // Katona bound at the empty family
};

/// μ(n, δ): the least |F| over hereditary F on [n] with every degree >= delta.
SearchResult min_family_size(int n, std::uint64_t delta, const SearchConfig& config = {});

/// m(n, s) = μ(n, s+1) - 1; value and witness refer to m.
SearchResult m_exact(int n, std::uint64_t s, const SearchConfig& config = {});

// Smallest qualifying block family: consecutive blocks each carrying a colex
// prefix, or 𝓕₀(n,d) when 2d | n. Empty when delta > 2^{n-1}.
std::optional<Family> block_seed(int n, std::uint64_t delta);

// Katona root bound ⌈n·W(delta)⌉ + 1.
std::uint64_t katona_root_bound(int n, std::uint64_t delta);

/// (n, m) → (a, b) decided over every hereditary family on [n] of size >= m.
bool arrows(int n, std::uint64_t m, int a, std::uint64_t b);

// Visits every hereditary family on [n] (n <= 6) as a bitset over the 2^n masks.
void for_each_hereditary(int n, const std::function<void(std::uint64_t)>& fn);

struct Prop22Report {
  bool arrow = false;        // (n, m) → (n-1, m-s)
  bool below_m = false;      // m <= m(n, s)
  bool low_degree = false;   // |F| <= m forces a vertex of degree <= s
  bool large_family = false; // δ(F) >= s+1 forces |F| >= m+1
  bool exhaustive = false;
  std::uint64_t families = 0;
  bool agree() const {
    return arrow == below_m && below_m == low_degree && low_degree == large_family;
  }
};

/// Exhaustive for n <= 5; for n = 6 the last two bullets run over
/// `sample_count` random hereditary families.
Prop22Report verify_prop22_equivalences(int n, std::uint64_t m, std::uint64_t s,
                                        std::uint64_t sample_count = 2000,
                                        std::uint64_t seed = 1);

}  // namespace tracekit
