#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tracekit/subset.hpp"

namespace tracekit {

// Duplicate-free family of subsets of [n], kept sorted by colex rank.
// Immutable once built.
class Family {
 public:
  Family() = default;

  // Sorts, deduplicates and validates the masks against the universe.
  static Family from_masks(int n, std::vector<SubsetMask> masks);

  int universe() const { return n_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  std::span<const SubsetMask> sets() const { return sets_; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }
  const SubsetMask& operator[](std::size_t i) const { return sets_[i]; }

  bool contains(SubsetMask m) const;

  bool operator==(const Family&) const = default;

 private:
  Family(int n, std::vector<SubsetMask> sorted) : n_(n), sets_(std::move(sorted)) {}

  int n_ = 0;
  std::vector<SubsetMask> sets_;
};

/// Number of i-element sets in a link family, indexed by i in [0, n].
struct DegreeProfile {
  std::vector<std::size_t> f;

  std::size_t at(std::size_t i) const { return i < f.size() ? f[i] : 0; }
  std::size_t total() const;
  bool operator==(const DegreeProfile&) const = default;
};

/// Vertex relabeling: perm[v] is the image of vertex v (0-based).
using Permutation = std::vector<int>;

// Element lists are 1-based.
Family make_family(int n, const std::vector<std::vector<int>>& sets);

bool is_hereditary(const Family& f);
Family downward_closure(const Family& f);

Family link(const Family& f, int x);
std::size_t degree(const Family& f, int x);
std::size_t set_degree(const Family& f, SubsetMask a);
std::vector<std::size_t> degrees(const Family& f);
// Vertices lying in no member count with degree 0.
std::size_t min_degree(const Family& f);
SubsetMask neighborhood(const Family& f, int x);
Family trace(const Family& f, SubsetMask t);

Family maximal_sets(const Family& f);
// True iff δ(f) >= threshold and removing any single maximal set drops some
// degree below threshold. Throws NotHereditary.
bool is_minimal_hereditary(const Family& f, std::size_t threshold);
// f minus one member; the result stays hereditary when `m` is maximal.
Family remove_set(const Family& f, SubsetMask m);

DegreeProfile degree_profile(const Family& f, int x);

// 2^[n] minus the complements of members. Throws UniverseTooLarge for n > 25.
Family complement_dual(const Family& f);

Family power_set(int n);
Family apply_permutation(const Family& f, const Permutation& perm);
std::optional<Permutation> are_isomorphic(const Family& a, const Family& b);

void check_vertex(const Family& f, int x);

}  // namespace tracekit
