#include "tracekit/family.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tracekit/errors.hpp"

namespace tracekit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::UnsupportedUniverse: return "UnsupportedUniverse";
    case ErrorCode::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorCode::NotHereditary: return "NotHereditary";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::MemberTooLarge: return "MemberTooLarge";
    case ErrorCode::DegreeTooLow: return "DegreeTooLow";
    case ErrorCode::NotAnIsolatedPile: return "NotAnIsolatedPile";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Error";
}

namespace {

void check_universe(int n) {
  if (n < 1 || n > kMaxUniverse) {
    throw Error(ErrorCode::UnsupportedUniverse,
                "universe size " + std::to_string(n) + " outside [1, 30]");
  }
}

}  // namespace

Family Family::from_masks(int n, std::vector<SubsetMask> masks) {
  check_universe(n);
  const SubsetMask full = SubsetMask::full(n);
  for (SubsetMask m : masks) {
    if (!m.subset_of(full)) {
      throw Error(ErrorCode::InvalidElement,
                  "element " + std::to_string(m.max_element() + 1) + " not in [" +
                      std::to_string(n) + "]");
    }
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return Family(n, std::move(masks));
}

bool Family::contains(SubsetMask m) const {
  return std::binary_search(sets_.begin(), sets_.end(), m);
}

std::size_t DegreeProfile::total() const {
  return std::accumulate(f.begin(), f.end(), std::size_t{0});
}

void check_vertex(const Family& f, int x) {
  if (x < 0 || x >= f.universe()) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(x + 1) + " not in [" +
                    std::to_string(f.universe()) + "]");
  }
}

Family make_family(int n, const std::vector<std::vector<int>>& sets) {
  check_universe(n);
  std::vector<SubsetMask> masks;
  masks.reserve(sets.size());
  for (const auto& s : sets) {
    SubsetMask m;
    for (int e : s) {
      if (e < 1 || e > n) {
        throw Error(ErrorCode::InvalidElement,
                    "element " + std::to_string(e) + " not in [" + std::to_string(n) + "]");
      }
      m = m.with(e - 1);
    }
    masks.push_back(m);
  }
  return Family::from_masks(n, std::move(masks));
}

bool is_hereditary(const Family& f) {
  // Closure under removing one element implies closure under all subsets.
  for (SubsetMask m : f) {
    for (int v : m.elements()) {
      if (!f.contains(m.without(v))) return false;
    }
  }
  return true;
}

Family downward_closure(const Family& f) {
  std::vector<SubsetMask> out;
  for (SubsetMask m : f) {
    for_each_subset(m, [&](SubsetMask s) { out.push_back(s); });
  }
  return Family::from_masks(f.universe(), std::move(out));
}

Family link(const Family& f, int x) {
  check_vertex(f, x);
  std::vector<SubsetMask> out;
  for (SubsetMask m : f) {
    if (m.contains(x)) out.push_back(m.without(x));
  }
  return Family::from_masks(f.universe(), std::move(out));
}

std::size_t degree(const Family& f, int x) {
  check_vertex(f, x);
  return static_cast<std::size_t>(
      std::count_if(f.begin(), f.end(), [x](SubsetMask m) { return m.contains(x); }));
}

std::size_t set_degree(const Family& f, SubsetMask a) {
  return static_cast<std::size_t>(
      std::count_if(f.begin(), f.end(), [a](SubsetMask m) { return a.subset_of(m); }));
}

std::vector<std::size_t> degrees(const Family& f) {
  std::vector<std::size_t> d(static_cast<std::size_t>(f.universe()), 0);
  for (SubsetMask m : f) {
    for (int v : m.elements()) ++d[static_cast<std::size_t>(v)];
  }
  return d;
}

std::size_t min_degree(const Family& f) {
  const auto d = degrees(f);
  return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
}

SubsetMask neighborhood(const Family& f, int x) {
  check_vertex(f, x);
  SubsetMask out;
  for (SubsetMask m : f) {
    if (m.contains(x)) out = out | m;
  }
  return out;
}

Family trace(const Family& f, SubsetMask t) {
  if (!t.subset_of(SubsetMask::full(f.universe()))) {
    throw Error(ErrorCode::InvalidElement, "trace set outside the universe");
  }
  std::vector<SubsetMask> out;
  out.reserve(f.size());
  for (SubsetMask m : f) out.push_back(m & t);
  return Family::from_masks(f.universe(), std::move(out));
}

Family maximal_sets(const Family& f) {
  std::vector<SubsetMask> out;
  const auto sets = f.sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    // A proper superset has a strictly larger colex rank.
    bool maximal = true;
    for (std::size_t j = i + 1; j < sets.size() && maximal; ++j) {
      if (sets[i].subset_of(sets[j])) maximal = false;
    }
    if (maximal) out.push_back(sets[i]);
  }
  return Family::from_masks(f.universe(), std::move(out));
}

Family remove_set(const Family& f, SubsetMask m) {
  std::vector<SubsetMask> out;
  out.reserve(f.size());
  for (SubsetMask s : f) {
    if (s != m) out.push_back(s);
  }
  return Family::from_masks(f.universe(), std::move(out));
}

bool is_minimal_hereditary(const Family& f, std::size_t threshold) {
  if (!is_hereditary(f)) {
    throw Error(ErrorCode::NotHereditary, "minimality is defined for hereditary families");
  }
  const auto d = degrees(f);
  if (*std::min_element(d.begin(), d.end()) < threshold) return false;
  for (SubsetMask m : maximal_sets(f)) {
    // Removing m lowers exactly the degrees of its elements by one.
    bool drops = false;
    for (int v : m.elements()) {
      if (d[static_cast<std::size_t>(v)] - 1 < threshold) drops = true;
    }
    // ∅ as the only maximal set: removing it empties the family.
    if (m.empty()) drops = threshold > 0;
    if (!drops) return false;
  }
  return true;
}

DegreeProfile degree_profile(const Family& f, int x) {
  check_vertex(f, x);
  DegreeProfile p;
  p.f.assign(static_cast<std::size_t>(f.universe()) + 1, 0);
  for (SubsetMask m : f) {
    if (m.contains(x)) ++p.f[static_cast<std::size_t>(m.size() - 1)];
  }
  return p;
}

Family complement_dual(const Family& f) {
  const int n = f.universe();
  if (n > kMaxMaterialized) {
    throw Error(ErrorCode::UniverseTooLarge,
                "power set of [" + std::to_string(n) + "] is too large to materialize");
  }
  const std::uint32_t full = SubsetMask::full(n).bits;
  std::vector<bool> removed(std::size_t{1} << n, false);
  for (SubsetMask m : f) removed[full & ~m.bits] = true;
  std::vector<SubsetMask> out;
  out.reserve((std::size_t{1} << n) - f.size());
  for (std::uint32_t b = 0; b <= full; ++b) {
    if (!removed[b]) out.push_back(SubsetMask(b));
    if (b == full) break;
  }
  return Family::from_masks(n, std::move(out));
}

Family power_set(int n) {
  if (n > kMaxMaterialized) {
    throw Error(ErrorCode::UniverseTooLarge,
                "power set of [" + std::to_string(n) + "] is too large to materialize");
  }
  check_universe(n);
  std::vector<SubsetMask> out(std::size_t{1} << n);
  for (std::uint32_t b = 0; b < out.size(); ++b) out[b] = SubsetMask(b);
  return Family::from_masks(n, std::move(out));
}

Family apply_permutation(const Family& f, const Permutation& perm) {
  if (perm.size() != static_cast<std::size_t>(f.universe())) {
    throw Error(ErrorCode::InvalidParams, "permutation length differs from universe size");
  }
  std::vector<SubsetMask> out;
  out.reserve(f.size());
  for (SubsetMask m : f) {
    SubsetMask img;
    for (int v : m.elements()) img = img.with(perm[static_cast<std::size_t>(v)]);
    out.push_back(img);
  }
  return Family::from_masks(f.universe(), std::move(out));
}

}  // namespace tracekit
