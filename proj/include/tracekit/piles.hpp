#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tracekit/family.hpp"
#include "tracekit/rational.hpp"

namespace tracekit::piles {

// Bounds that only hold for d >= 50 are asserted in that range and
// merely reported below it.
inline constexpr int kProvedRange = 50;

/// 𝔅_c: (2^d - c)/d for c < d and (2^d - d - 1/2)/d for c = d.
Rat frak_b(int d, int c);

/// ω_F(x) = Σ_{x ∈ F} 1/|F|.
Rat omega_weight(const Family& f, int x);

enum class VertexKind { Good, Bad };

/// Good iff |N(x)| >= d+1, bad iff |N(x)| = d. Throws DegreeTooLow if some
/// neighbourhood is smaller than d.
std::vector<VertexKind> classify_vertices(const Family& f, int d);

enum class PileTag { Isolated, Intersecting };

struct Pile {
  SubsetMask set;
  PileTag tag = PileTag::Isolated;
  int theta = 0;  // members of the pile lying in no other pile
};

struct PileDecomposition {
  int d = 0;
  std::vector<Pile> piles;
  SubsetMask j;  // vertices in no pile
  SubsetMask k;  // vertices in intersecting piles
  std::vector<VertexKind> kinds;
  // Every bad vertex lies in exactly one pile, namely N(x). Proved for d >= 6.
  bool bad_vertices_in_own_pile = true;
  bool j_all_good = true;
  SubsetMask isolated_union() const;
};

PileDecomposition find_piles(const Family& f, int d);

struct WeightBound {
  int vertex = 0;
  Rat omega;
  Rat bound;
  bool holds = false;
};

struct Lemma43Report {
  bool proved_range = false;  // d >= 50: failures are assertion failures
  bool degree_precondition = false;
  std::vector<WeightBound> vertices;
  bool all_hold() const;
};

/// ω(x) > 𝔅_c - 1/18, plus (|N(x)| - d)/6 for good vertices.
Lemma43Report lemma43_check(const Family& f, int d, int c);

/// f_u: the unique integer with 2^{f} - f <= u < 2^{f+1} - (f+1).
int f_u(std::uint64_t u);

struct ProjectionReport {
  SubsetMask pile;
  int d = 0;
  int c = 0;
  Family g;  // members inside the pile
  Family m;  // subsets of the pile missing from g
  Family nn; // pile-complements of the missing sets
  std::size_t t = 0;
  std::map<int, std::pair<Rat, Rat>> in_out;  // vertex -> (ω_in, ω_out)
  int good_count = 0;
  std::optional<int> fu;

  // Identities, asserted at every d.
  bool hereditary_equivalence = false;  // 𝒩 hereditary iff 𝒢 hereditary
  bool degree_identity = false;         // d_𝒢(x) = 2^{d-1} - t + d_𝒩(x)
  bool weight_split = false;            // ω = ω_in + ω_out
  bool inner_sum = false;               // Σ ω_in = |𝒢| - 1

  // Facts with proofs that need d >= 50.
  bool fact_a = false;  // t >= c
  bool fact_b = false;  // t <= 2c - 2
  bool fact_c = false;  // d_𝒢(x) >= 2^{d-1} - 2c + 2
  bool fact_d = false;  // bad x implies {x} ∈ 𝒩
  bool fact_e = false;  // at most d/2 - 1 good vertices
  bool external_weight = false;  // ω_out(x) >= (δ - d_𝒢(x)) / (3 + log2 c)
  std::optional<bool> size_bound;  // |N_i| <= f_u (needs a good vertex)
  bool few_good_hypothesis = false;  // Σ_{x ∈ P} ω(x) < 2^d - c
  bool few_good_at_most_7 = false;
  bool few_good_t = false;           // t <= d + 4
  bool few_good_small_n = false;     // |N_i| <= 3
  bool few_good_bad_singletons = false;

  Rat pile_weight;  // Σ_{x ∈ P} ω(x)
  bool proved_range = false;

  bool identities_hold() const {
    return hereditary_equivalence && degree_identity && weight_split && inner_sum;
  }
};

ProjectionReport analyze_isolated_pile(const Family& f, SubsetMask pile, int d, int c);

}  // namespace tracekit::piles
