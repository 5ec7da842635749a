#pragma once

#include <cstdint>
#include <vector>

#include "tracekit/family.hpp"
#include "tracekit/rational.hpp"

namespace tracekit {

inline constexpr std::uint64_t kMaxColexPrefix = std::uint64_t{1} << 25;

// Smallest universe holding the first m colex sets (at least 1).
int colex_universe(std::uint64_t m);

/// The first m finite subsets of ℕ⁺ in colex order, i.e. the masks 0..m-1.
/// `n` = 0 selects colex_universe(m).
Family colex_prefix(std::uint64_t m, int n = 0);

/// r[i] = number of i-element sets among the first m colex sets. Computed
/// from the binary expansion of m, so m is not limited by materialization.
std::vector<std::uint64_t> colex_size_histogram(std::uint64_t m);

/// W(m) = Σ_{R ∈ R(m)} 1/(|R|+1).
Rat colex_weight(std::uint64_t m);

// Set-for-set check of 2^[d-1] \ R(2^{d-1}-c) = {[d-1] \ H : H ∈ R(c)}.
bool complement_identity_holds(int d, std::uint64_t c);

struct KatonaResult {
  Rat sum;
  Rat bound;
  bool holds = false;
};

/// Σ_{F ∈ f} weight[|F|] against the same sum over R(|f|). `weight` must be
/// nonincreasing and cover sizes 0..n.
KatonaResult katona_sum(const Family& f, const std::vector<Rat>& weight);

struct Lemma25Result {
  Rat w;            // W(2^{d-1} - c), exact
  Rat bound_upper;  // rational upper enclosure of (2^d-1)/d - c/(d - log2 c)
  bool holds = false;
};

Lemma25Result lemma25_check(int d, std::uint64_t c);

struct Lemma26Result {
  Rat sum;
  Rat floor;
  int non_isolated = 0;
  bool holds = false;
};

Lemma26Result lemma26_surplus(const Family& h, int d, std::uint64_t c);

}  // namespace tracekit
