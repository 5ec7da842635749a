#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tracekit/family.hpp"
#include "tracekit/rational.hpp"

namespace tracekit::d5 {

inline constexpr std::size_t kThreshold = 12;  // δ(F) >= 12, i.e. s = 11

/// 53/10.
Rat base_weight();

struct MemberWeights {
  SubsetMask set;
  std::vector<std::pair<int, Rat>> share;  // ω(x, set) for x in set
};

/// Incidence weights ω(x, F): 1/|F| unless |F| = 3, where the split depends on
/// 4-set containment and on how many of the three pairs have degree above 4.
/// Members with five or more elements are rejected.
std::vector<MemberWeights> assign_incidence_weights(const Family& f);

struct WeightCertificate {
  Family family;
  std::vector<MemberWeights> incidence;
  std::vector<Rat> u;
  std::vector<Rat> eps;
  std::vector<bool> mini_weight;
  std::vector<DegreeProfile> profile;
  Family q;                     // all 4-element members
  std::vector<int> c_q;         // mini-weight count per member of q
};

WeightCertificate vertex_weights(const Family& f);

struct VertexCheck {
  int vertex = 0;
  bool item1 = false;  // u >= 5.3 + ε
  bool item2 = false;  // u < 5.3 iff mini-weight
  bool item3 = false;  // u > 5.3 implies u > 5.3 + ε
  bool item4 = false;  // u = 5.3 implies (f1,f2,f3) ∈ {(5,6,0), (4,6,1)}
  bool ok() const { return item1 && item2 && item3 && item4; }
};

struct KeyLemmaReport {
  WeightCertificate certificate;
  std::vector<VertexCheck> vertices;
  // Row sums, Σu = |F|-1, Σε = 0, mini-weight structure, the c(Q) <= 3 cap
  // and the f3 = 1, f1 = 4 link shape. Each entry names the failing vertex
  // and prints its link.
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks every item of the key lemma at every vertex of a minimal hereditary
/// family with δ >= 12. Violations here mean a bug in this code.
KeyLemmaReport key_lemma_check(const Family& f);

/// Deletes the colex-smallest maximal set whose removal keeps δ >= 12 until
/// none is removable.
Family minimal_reduction(const Family& f);

enum class Classification { NotApplicable, ExtremalIsomorphicToF0, ViolatesBound };

const char* classification_name(Classification c);

struct Theorem31Result {
  Classification kind = Classification::NotApplicable;
  std::size_t size = 0;
  Rat bound;  // 5.3 n + 1
  std::size_t minimal_size = 0;
  std::optional<Permutation> isomorphism;  // F -> 𝓕₀(n,5)
  bool key_lemma_ok = true;
};

/// F hereditary with δ(F) >= 12. If |F| <= 5.3n + 1 the family must be
/// 𝓕₀(n,5) up to relabeling; anything else is reported as ViolatesBound.
Theorem31Result theorem31_classify(const Family& f);

}  // namespace tracekit::d5
