#include "tracekit/piles.hpp"

#include <algorithm>
#include <string>

#include "tracekit/errors.hpp"

namespace tracekit::piles {

namespace {

std::vector<SubsetMask> neighborhoods(const Family& f) {
  std::vector<SubsetMask> nb(static_cast<std::size_t>(f.universe()));
  for (SubsetMask m : f) {
    for (int v : m.elements()) nb[static_cast<std::size_t>(v)] = nb[static_cast<std::size_t>(v)] | m;
  }
  return nb;
}

// Piles are d-sets P = N(z) with P ⊆ N(y) for all y ∈ P; z is then bad, so
// scanning neighbourhoods of size d finds all of them.
std::vector<SubsetMask> all_piles(const std::vector<SubsetMask>& nb, int d) {
  std::vector<SubsetMask> out;
  for (SubsetMask p : nb) {
    if (p.size() != d) continue;
    const auto el = p.elements();
    const bool pile = std::all_of(el.begin(), el.end(), [&](int y) {
      return p.subset_of(nb[static_cast<std::size_t>(y)]);
    });
    if (pile && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rat inverse(int k) { return rat(1, k); }

}  // namespace

Rat frak_b(int d, int c) {
  if (d < 1 || d > 62 || c < 1 || c > d) {
    throw Error(ErrorCode::InvalidParams, "need 1 <= c <= d");
  }
  Rat top = pow2(static_cast<unsigned>(d)) - c;
  if (c == d) top -= rat(1, 2);
  Rat out = top / d;
  out.canonicalize();
  return out;
}

Rat omega_weight(const Family& f, int x) {
  check_vertex(f, x);
  Rat w = 0;
  for (SubsetMask m : f) {
    if (m.contains(x)) w += inverse(m.size());
  }
  w.canonicalize();
  return w;
}

std::vector<VertexKind> classify_vertices(const Family& f, int d) {
  const auto nb = neighborhoods(f);
  std::vector<VertexKind> out;
  for (std::size_t x = 0; x < nb.size(); ++x) {
    const int size = nb[x].size();
    if (size < d) {
      throw Error(ErrorCode::DegreeTooLow, "vertex " + std::to_string(x + 1) +
                                               " has a neighbourhood of size " +
                                               std::to_string(size) + " < d");
    }
    out.push_back(size == d ? VertexKind::Bad : VertexKind::Good);
  }
  return out;
}

SubsetMask PileDecomposition::isolated_union() const {
  SubsetMask u;
  for (const auto& p : piles) {
    if (p.tag == PileTag::Isolated) u = u | p.set;
  }
  return u;
}

PileDecomposition find_piles(const Family& f, int d) {
  PileDecomposition out;
  out.d = d;
  out.kinds = classify_vertices(f, d);
  const auto nb = neighborhoods(f);
  const auto sets = all_piles(nb, d);
  const int n = f.universe();
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (SubsetMask p : sets) {
    for (int v : p.elements()) ++count[static_cast<std::size_t>(v)];
  }
  SubsetMask covered;
  for (SubsetMask p : sets) {
    Pile pile{p, PileTag::Isolated, 0};
    for (SubsetMask q : sets) {
      if (q != p && !(p & q).empty()) pile.tag = PileTag::Intersecting;
    }
    for (int v : p.elements()) pile.theta += count[static_cast<std::size_t>(v)] == 1 ? 1 : 0;
    if (pile.tag == PileTag::Intersecting) out.k = out.k | p;
    covered = covered | p;
    out.piles.push_back(pile);
  }
  out.j = SubsetMask::full(n).minus(covered);
  for (int x = 0; x < n; ++x) {
    const auto ux = static_cast<std::size_t>(x);
    if (out.kinds[ux] != VertexKind::Bad) continue;
    if (out.j.contains(x)) out.j_all_good = false;
    const bool own = count[ux] == 1 &&
                     std::find(sets.begin(), sets.end(), nb[ux]) != sets.end();
    if (!own) out.bad_vertices_in_own_pile = false;
  }
  return out;
}

bool Lemma43Report::all_hold() const {
  return std::all_of(vertices.begin(), vertices.end(), [](const WeightBound& w) { return w.holds; });
}

Lemma43Report lemma43_check(const Family& f, int d, int c) {
  Lemma43Report r;
  r.proved_range = d >= kProvedRange;
  const Rat base = frak_b(d, c) - rat(1, 18);
  const long need = (1L << (d - 1)) - c + 1;
  const auto deg = degrees(f);
  r.degree_precondition = std::all_of(deg.begin(), deg.end(),
                                      [need](std::size_t v) { return static_cast<long>(v) >= need; });
  const auto nb = neighborhoods(f);
  for (int x = 0; x < f.universe(); ++x) {
    WeightBound w;
    w.vertex = x;
    w.omega = omega_weight(f, x);
    w.bound = base;
    const int extra = nb[static_cast<std::size_t>(x)].size() - d;
    if (extra > 0) w.bound += rat(extra, 6);
    w.bound.canonicalize();
    w.holds = w.omega > w.bound;
    r.vertices.push_back(w);
  }
  return r;
}

int f_u(std::uint64_t u) {
  if (u < 1) throw Error(ErrorCode::InvalidParams, "f_u needs u >= 1");
  for (int f = 1; f < 63; ++f) {
    const std::uint64_t lo = (std::uint64_t{1} << f) - static_cast<std::uint64_t>(f);
    const std::uint64_t hi = (std::uint64_t{1} << (f + 1)) - static_cast<std::uint64_t>(f + 1);
    if (lo <= u && u < hi) return f;
  }
  throw Error(ErrorCode::InvalidParams, "u out of range");
}

ProjectionReport analyze_isolated_pile(const Family& f, SubsetMask pile, int d, int c) {
  const auto nb = neighborhoods(f);
  const auto sets = all_piles(nb, d);
  const bool known = pile.size() == d && std::find(sets.begin(), sets.end(), pile) != sets.end();
  const bool isolated = known && std::none_of(sets.begin(), sets.end(), [pile](SubsetMask q) {
                          return q != pile && !(q & pile).empty();
                        });
  if (!isolated) throw Error(ErrorCode::NotAnIsolatedPile, "the given set is not an isolated pile");
  if (c < 1 || c > d) throw Error(ErrorCode::InvalidParams, "need 1 <= c <= d");

  ProjectionReport r;
  r.pile = pile;
  r.d = d;
  r.c = c;
  r.proved_range = d >= kProvedRange;
  const int n = f.universe();

  std::vector<SubsetMask> g, missing, comp;
  for_each_subset(pile, [&](SubsetMask s) {
    if (f.contains(s)) {
      g.push_back(s);
    } else {
      missing.push_back(s);
      comp.push_back(pile.minus(s));
    }
  });
  r.g = Family::from_masks(n, g);
  r.m = Family::from_masks(n, missing);
  r.nn = Family::from_masks(n, comp);
  r.t = r.m.size();
  r.hereditary_equivalence = is_hereditary(r.nn) == is_hereditary(r.g);

  const long half = 1L << (d - 1);
  const long delta = half - c + 1;
  const auto el = pile.elements();
  r.degree_identity = true;
  r.weight_split = true;
  r.fact_c = true;
  r.fact_d = true;
  r.external_weight = true;
  Rat inner_total = 0;
  const Enclosure lg = log2_enclosure(static_cast<std::uint64_t>(c));
  std::vector<bool> good(static_cast<std::size_t>(n), false);
  for (int x : el) {
    const auto ux = static_cast<std::size_t>(x);
    good[ux] = nb[ux].size() > d;
    r.good_count += good[ux] ? 1 : 0;
    Rat in = 0, out = 0;
    for (SubsetMask s : f) {
      if (!s.contains(x)) continue;
      (s.subset_of(pile) ? in : out) += inverse(s.size());
    }
    in.canonicalize();
    out.canonicalize();
    inner_total += in;
    r.pile_weight += omega_weight(f, x);
    if (omega_weight(f, x) != in + out) r.weight_split = false;
    const long dg = static_cast<long>(degree(r.g, x));
    const long dn = static_cast<long>(degree(r.nn, x));
    if (dg != half - static_cast<long>(r.t) + dn) r.degree_identity = false;
    if (dg < half - 2L * c + 2) r.fact_c = false;
    if (!good[ux] && !r.nn.contains(SubsetMask::singleton(x))) r.fact_d = false;
    // ω_out(x) >= (δ - d_𝒢(x)) / (3 + log2 c); the right side shrinks as the
    // logarithm grows, so testing against its lower end is sound.
    if (delta > dg && out < Rat(delta - dg) / (Rat(3) + lg.lo)) r.external_weight = false;
    r.in_out.emplace(x, std::make_pair(in, out));
  }
  r.inner_sum = inner_total == Rat(mpz_class(static_cast<unsigned long>(r.g.size() - 1)));

  const long t = static_cast<long>(r.t);
  r.fact_a = t >= c;
  r.fact_b = t <= 2L * c - 2;
  r.fact_e = 2 * r.good_count <= d - 2;
  int max_n = 0;
  for (SubsetMask s : r.nn) max_n = std::max(max_n, s.size());
  if (r.good_count >= 1) {
    r.fu = f_u(static_cast<std::uint64_t>(r.good_count));
    r.size_bound = max_n <= *r.fu;
  }
  r.pile_weight.canonicalize();
  r.few_good_hypothesis = r.pile_weight < pow2(static_cast<unsigned>(d)) - c;
  r.few_good_at_most_7 = r.good_count <= 7;
  r.few_good_t = t <= d + 4;
  r.few_good_small_n = max_n <= 3;
  r.few_good_bad_singletons = r.fact_d;
  return r;
}

}  // namespace tracekit::piles
