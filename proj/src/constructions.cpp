#include "tracekit/constructions.hpp"

#include <string>

#include "tracekit/colex.hpp"
#include "tracekit/errors.hpp"

namespace tracekit {

namespace {

void invalid(const std::string& what) { throw Error(ErrorCode::InvalidParams, what); }

// Maps a mask over [d] onto block U (elements in increasing order).
SubsetMask place_in_block(SubsetMask local, int offset) {
  return SubsetMask(local.bits << offset);
}

}  // namespace

BlockPartition canonical_blocks(int n, int d) {
  if (d < 1 || n < d || n % d != 0 || n > kMaxUniverse) {
    invalid("need d | n with n <= 30");
  }
  BlockPartition p;
  p.d = d;
  for (int i = 0; i < n / d; ++i) p.blocks.push_back(place_in_block(SubsetMask::full(d), i * d));
  return p;
}

Family build_construction_a(int n, int d, int c,
                            const std::optional<std::vector<std::vector<SubsetMask>>>& excluded) {
  if (d < 5) invalid("construction A needs d >= 5");
  if (c < 1 || c > d - 1) invalid("construction A needs 1 <= c <= d-1");
  if (n % d != 0 || n < d || n > kMaxUniverse) invalid("construction A needs d | n, n <= 30");
  const int k = n / d;
  if (excluded && excluded->size() != static_cast<std::size_t>(k)) {
    invalid("need one excluded family per block");
  }
  const std::uint32_t top = SubsetMask::full(d).bits;
  std::vector<SubsetMask> sets;
  for (int i = 0; i < k; ++i) {
    std::vector<SubsetMask> drop;
    if (excluded) {
      drop = (*excluded)[static_cast<std::size_t>(i)];
      if (drop.size() != static_cast<std::size_t>(c - 1)) invalid("|G_i| must equal c-1");
      for (SubsetMask g : drop) {
        if (!g.subset_of(place_in_block(SubsetMask::full(d), i * d))) {
          invalid("excluded set leaves its block");
        }
      }
    } else {
      // Complements of R(c-1) inside the block are its c-1 colex-largest sets.
      for (std::uint32_t h = 0; h < static_cast<std::uint32_t>(c - 1); ++h) {
        drop.push_back(place_in_block(SubsetMask(top & ~h), i * d));
      }
    }
    for (std::uint32_t local = 0; local <= top; ++local) {
      const SubsetMask s = place_in_block(SubsetMask(local), i * d);
      if (std::find(drop.begin(), drop.end(), s) == drop.end()) sets.push_back(s);
    }
  }
  return Family::from_masks(n, std::move(sets));
}

ConstructionBParts construction_b_parts(int n, int d) {
  if (d < 5) invalid("construction B needs d >= 5");
  if (n % (2 * d) != 0 || n < 2 * d || n > kMaxUniverse) {
    invalid("construction B needs 2d | n, n <= 30");
  }
  const int blocks = n / d;
  std::vector<SubsetMask> small, tops, pairs;
  const std::uint32_t top = SubsetMask::full(d).bits;
  for (int i = 0; i < blocks; ++i) {
    for (std::uint32_t local = 0; local <= top; ++local) {
      const SubsetMask s = place_in_block(SubsetMask(local), i * d);
      if (s.size() <= d - 2) small.push_back(s);
    }
    // U_i \ {di}: the block's last element is bit i*d + d - 1.
    tops.push_back(place_in_block(SubsetMask::full(d), i * d).without(i * d + d - 1));
    if (i % 2 == 0) {
      pairs.push_back(SubsetMask::singleton(i * d + d - 1).with((i + 1) * d + d - 1));
    }
  }
  return {Family::from_masks(n, std::move(small)), Family::from_masks(n, std::move(tops)),
          Family::from_masks(n, std::move(pairs))};
}

Family build_construction_b(int n, int d) {
  const auto parts = construction_b_parts(n, d);
  std::vector<SubsetMask> all(parts.small.begin(), parts.small.end());
  all.insert(all.end(), parts.tops.begin(), parts.tops.end());
  all.insert(all.end(), parts.pairs.begin(), parts.pairs.end());
  return Family::from_masks(n, std::move(all));
}

Family appendix_b_s0(int d) {
  std::vector<SubsetMask> sets{SubsetMask()};
  for (int v = 0; v < d; ++v) sets.push_back(SubsetMask::singleton(v));
  return Family::from_masks(d, std::move(sets));
}

Family appendix_b_s1(int d) {
  if (d % 2 != 0) invalid("the s = 1 family needs an even universe");
  std::vector<SubsetMask> sets{SubsetMask()};
  for (int v = 0; v < d; ++v) sets.push_back(SubsetMask::singleton(v));
  for (int v = 0; v < d; v += 2) sets.push_back(SubsetMask::singleton(v).with(v + 1));
  return Family::from_masks(d, std::move(sets));
}

ExtremalReport is_extremal(const Family& f, long s, const Rat& ms) {
  ExtremalReport r;
  r.size = f.size();
  r.min_degree = min_degree(f);
  r.hereditary = is_hereditary(f);
  const Rat target = ms * f.universe() + 1;
  r.size_matches = target == Rat(mpz_class(static_cast<unsigned long>(f.size())));
  r.degree_ok = static_cast<long>(r.min_degree) >= s + 1;
  r.matches_formula = r.hereditary && r.size_matches && r.degree_ok;
  return r;
}

Fact62Report fact62_report(const Family& f) {
  if (!is_hereditary(f)) throw Error(ErrorCode::NotHereditary, "the dual fact assumes heredity");
  const Family dual = complement_dual(f);
  const int n = f.universe();
  Fact62Report r;
  r.hereditary = is_hereditary(dual);
  r.dual_size = dual.size();
  r.size_identity = dual.size() == (std::size_t{1} << n) - f.size();
  const auto df = degrees(f);
  const auto dd = degrees(dual);
  r.degree_identity = true;
  const long half = 1L << (n - 1);
  for (std::size_t x = 0; x < df.size(); ++x) {
    if (static_cast<long>(dd[x]) != half - static_cast<long>(f.size()) + static_cast<long>(df[x])) {
      r.degree_identity = false;
    }
  }
  r.dual_min_degree = min_degree(dual);
  return r;
}

bool fact62_check(const Family& f) { return fact62_report(f).all(); }

DualCandidate dual_candidate(int n, long s, const Rat& ms) {
  DualCandidate c;
  const Rat size = ms * n + 1;
  const Rat s_star = pow2(static_cast<unsigned>(n - 1)) + s - ms * n - 1;
  if (s_star.get_den() != 1) invalid("ms·n must be an integer");
  c.s_star = s_star.get_num().get_si();
  c.ms_star = (pow2(static_cast<unsigned>(n)) - ms * n - 2) / n;
  c.ms_star.canonicalize();
  c.size_precondition = n >= 3 && size <= pow2(static_cast<unsigned>(n - 3));
  // s <= 2^{n/2-1} - 1, with n/2 possibly fractional: compare squares.
  // (s+1)^2 <= 2^{n-2}.
  c.degree_precondition = n >= 2 && Rat((s + 1) * (s + 1)) <= pow2(static_cast<unsigned>(n - 2));
  return c;
}

}  // namespace tracekit
