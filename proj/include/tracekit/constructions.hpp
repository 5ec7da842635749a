#pragma once

#include <optional>
#include <vector>

#include "tracekit/family.hpp"
#include "tracekit/rational.hpp"

namespace tracekit {

struct BlockPartition {
  int d = 0;
  std::vector<SubsetMask> blocks;  // U_i = {1+d(i-1), ..., di}
};

BlockPartition canonical_blocks(int n, int d);

/// Construction A, 𝓕(n,d,c): the union over blocks U_i of 2^{U_i} \ 𝒢_i.
/// By default 𝒢_i holds the c-1 colex-largest subsets of U_i (an up-set),
/// which keeps the family hereditary. `excluded`, when given, overrides 𝒢_i
/// block by block and heredity is then only reported by the caller.
Family build_construction_a(int n, int d, int c,
                            const std::optional<std::vector<std::vector<SubsetMask>>>& excluded =
                                std::nullopt);

struct ConstructionBParts {
  Family small;   // subsets of a block with at most d-2 elements (𝒢)
  Family tops;    // U_i \ {di} (𝓗)
  Family pairs;   // {di, d(i+1)} for odd i (𝓘)
};

/// Construction B, 𝓕₀(n,d) = 𝒢 ∪ 𝓗 ∪ 𝓘.
Family build_construction_b(int n, int d);
ConstructionBParts construction_b_parts(int n, int d);

// {∅} ∪ singletons on [d].
Family appendix_b_s0(int d);
// {∅} ∪ singletons ∪ {x, x+1} for odd x, on [d] with d even.
Family appendix_b_s1(int d);

struct ExtremalReport {
  std::size_t size = 0;
  std::size_t min_degree = 0;
  bool hereditary = false;
  bool size_matches = false;    // |F| == ms·n + 1
  bool degree_ok = false;       // δ(F) >= s + 1
  bool matches_formula = false; // all three conditions
};

ExtremalReport is_extremal(const Family& f, long s, const Rat& ms);

struct Fact62Report {
  bool hereditary = false;
  bool size_identity = false;
  bool degree_identity = false;
  std::size_t dual_size = 0;
  std::size_t dual_min_degree = 0;
  bool all() const { return hereditary && size_identity && degree_identity; }
};

Fact62Report fact62_report(const Family& f);
bool fact62_check(const Family& f);

/// The parameters the dual of an (n,s)-extremal family would have if the
/// open question about F* had a positive answer, plus its preconditions.
struct DualCandidate {
  long s_star = 0;
  Rat ms_star;
  bool size_precondition = false;    // ms·n + 1 <= 2^{n-3}
  bool degree_precondition = false;  // s <= 2^{n/2 - 1} - 1
};

DualCandidate dual_candidate(int n, long s, const Rat& ms);

}  // namespace tracekit
