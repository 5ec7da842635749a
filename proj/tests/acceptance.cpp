// One line per acceptance criterion. Tolerances and budgets are fixed here;
// the only knob is TRACEKIT_STRETCH_SECS for the optional long search.

#include <chrono>
#include <cstdio>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>

#include "support.hpp"
#include "tracekit/colex.hpp"
#include "tracekit/constructions.hpp"
#include "tracekit/numerics.hpp"
#include "tracekit/piles.hpp"
#include "tracekit/search.hpp"
#include "tracekit/weights_d5.hpp"

using namespace tracekit;
namespace ts = testing_support;

namespace {

constexpr double kSpotTolerance = 0.001;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

bool run(const char* id, const char* title, double limit_secs, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out = body();
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs > limit_secs) {
    out.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_secs) + " s");
  }
  std::printf("%s criterion %s: %s (%.2f s)%s%s\n", out.pass ? "PASS" : "FAIL", id, title, secs,
              out.detail.empty() ? "" : " -- ", out.detail.c_str());
  std::fflush(stdout);
  return out.pass;
}

Rat naive_w(std::uint64_t m) {
  Rat w = 0;
  for (std::uint64_t r = 0; r < m; ++r) w += rat(1, std::popcount(r) + 1);
  return w;
}

Outcome constructions() {
  Outcome o;
  auto all_degrees = [](const Family& f, std::size_t want) {
    const auto lists = ts::as_lists(f);
    for (int x = 1; x <= f.universe(); ++x) {
      if (ts::naive_degree(lists, x) != want) return false;
    }
    return true;
  };
  const Family b10 = build_construction_b(10, 5);
  o.require(b10.size() == 54 && all_degrees(b10, 12), "F0(10,5)");
  o.require(build_construction_b(20, 5).size() == 107, "F0(20,5)");
  const Family b12 = build_construction_b(12, 6);
  o.require(b12.size() == 116 && all_degrees(b12, 27), "F0(12,6)");
  for (int d = 5; d <= 8; ++d) {
    for (int c = 1; c <= d - 1; ++c) {
      for (int n : {d, 2 * d}) {
        const Family a = build_construction_a(n, d, c);
        const auto lists = ts::as_lists(a);
        const std::size_t size = static_cast<std::size_t>(n / d) * ((std::size_t{1} << d) - c) + 1;
        o.require(a.size() == size, "size of A(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(c) + ")");
        o.require(ts::naive_min_degree(lists, n) >= (std::size_t{1} << (d - 1)) - c + 1,
                  "degree of A(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(c) + ")");
        o.require(ts::naive_hereditary(lists), "heredity of A");
      }
    }
  }
  return o;
}

Outcome colex_identities() {
  Outcome o;
  for (int d = 1; d <= 20; ++d) {
    o.require(colex_weight(std::uint64_t{1} << (d - 1)) == rat((1L << d) - 1, d), "W(2^(d-1)) at d=" + std::to_string(d));
  }
  for (int d = 1; d <= 12; ++d) {
    for (std::uint64_t c = 1; c <= (std::uint64_t{1} << (d - 1)); ++c) {
      o.require(complement_identity_holds(d, c), "complement identity d=" + std::to_string(d));
    }
  }
  for (int d = 4; d <= 14; ++d) {
    for (std::uint64_t c = 1; c <= (std::uint64_t{1} << (d - 2)); ++c) {
      o.require(lemma25_check(d, c).holds, "lemma25 d=" + std::to_string(d) + " c=" + std::to_string(c));
    }
  }
  std::mt19937 rng(2024);
  std::vector<Rat> w_cache(1025, Rat(-1));
  for (int i = 0; i < 10000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Family f = ts::random_hereditary(rng, n);
    std::vector<Rat> table;
    for (int k = 0; k <= n; ++k) table.push_back(rat(1, k + 1));
    const KatonaResult r = katona_sum(f, table);
    Rat& w = w_cache[f.size()];
    if (w < 0) w = naive_w(f.size());
    o.require(r.holds && r.bound == w && r.sum >= w, "Katona on a random family");
  }
  return o;
}

Outcome exact_m() {
  Outcome o;
  auto want = [&](int n, std::uint64_t s, std::uint64_t m) {
    const SearchResult r = m_exact(n, s);
    const bool ok = r.status == SearchStatus::Proved && r.value == m && r.witness &&
                    is_hereditary(*r.witness) && min_degree(*r.witness) >= s + 1 &&
                    r.witness->size() == m + 1;
    o.require(ok, "m(" + std::to_string(n) + "," + std::to_string(s) + ")");
  };
  for (int n = 1; n <= 10; ++n) want(n, 0, static_cast<std::uint64_t>(n));
  want(4, 1, 6);
  want(6, 1, 9);
  want(3, 2, 6);
  want(6, 2, 12);
  want(6, 3, 14);
  want(8, 7, 30);
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    const auto brute = ts::brute_force_mu(n, 8);
    for (std::uint64_t delta = 1; delta <= 8; ++delta) {
      SearchConfig cfg;
      cfg.warm_start = false;
      const SearchResult r = min_family_size(n, delta, cfg);
      const std::uint64_t got = r.value ? *r.value : 0;
      o.require(r.status == SearchStatus::Proved && got == brute[delta],
                "n=" + std::to_string(n) + " delta=" + std::to_string(delta));
    }
  }
  return o;
}

Outcome weight_certificates() {
  Outcome o;
  for (int n : {10, 20}) {
    const Family f = build_construction_b(n, 5);
    const auto report = d5::key_lemma_check(f);
    const auto& c = report.certificate;
    for (const auto& m : c.incidence) {
      if (m.set.empty()) continue;
      Rat row = 0;
      for (const auto& [v, w] : m.share) row += w;
      o.require(row == 1, "row sum");
    }
    Rat su = 0, se = 0;
    for (int x = 0; x < n; ++x) {
      const auto ux = static_cast<std::size_t>(x);
      su += c.u[ux];
      se += c.eps[ux];
      o.require(c.u[ux] == rat(53, 10), "u(x) = 53/10");
      o.require(!c.mini_weight[ux], "no mini-weight vertex");
      o.require(report.vertices[ux].ok(), "key lemma items at vertex " + std::to_string(x + 1));
    }
    o.require(su == Rat(static_cast<unsigned long>(f.size() - 1)), "sum of u");
    o.require(se == 0, "sum of eps");
    o.require(report.ok(), "key lemma report");
  }
  std::mt19937 rng(100);
  const Family f0 = build_construction_b(10, 5);
  for (int i = 0; i < 100; ++i) {
    const Family g = apply_permutation(f0, ts::random_permutation(rng, 10));
    const auto r = d5::theorem31_classify(g);
    o.require(r.kind == d5::Classification::ExtremalIsomorphicToF0 && r.isomorphism &&
                  apply_permutation(g, *r.isomorphism) == f0,
              "classification of a relabeled copy");
  }
  return o;
}

Outcome pile_analysis() {
  Outcome o;
  for (int d = 6; d <= 8; ++d) {
    const Family f = build_construction_b(2 * d, d);
    const auto dec = piles::find_piles(f, d);
    const SubsetMask u1{(1U << d) - 1}, u2{((1U << d) - 1) << d};
    o.require(dec.piles.size() == 2 && dec.piles[0].set == u1 && dec.piles[1].set == u2, "piles are the blocks");
    for (const auto& p : dec.piles) o.require(p.tag == piles::PileTag::Isolated, "isolated");
    o.require(dec.j.empty() && dec.k.empty(), "J and K empty");
    o.require(dec.bad_vertices_in_own_pile && dec.j_all_good, "pile membership assertions");
    for (const auto& p : dec.piles) {
      const auto r = piles::analyze_isolated_pile(f, p.set, d, d);
      o.require(r.degree_identity && r.weight_split && r.inner_sum && r.hereditary_equivalence,
                "projection identities at d=" + std::to_string(d));
      o.require(r.g.size() - 1 == (std::size_t{1} << d) - r.t - 1, "inner sum value");
      o.require(r.pile_weight == piles::frak_b(d, d) * d, "pile weight equality");
    }
  }
  return o;
}

Outcome appendix_a() {
  Outcome o;
  const auto a = numerics::verify_appendix_a(50, 1024);
  for (const auto& r : a.reports) o.require(r.holds, "h(" + std::to_string(r.d) + ")");
  const std::pair<int, double> printed[] = {{65, 0.048},  {66, 0.047},  {67, 0.046}, {129, 0.028},
                                            {130, 0.027}, {131, 0.027}, {132, 0.027}};
  for (auto [d, value] : printed) {
    const Rat h = numerics::h(d);
    o.require(std::abs(h.get_d() - value) <= kSpotTolerance && h < rat(1, 18), "spot value h(" + std::to_string(d) + ")");
  }
  o.require(numerics::h2(Rat(50)) < rat(1, 18), "h2(50)");
  o.require(numerics::h3(Rat(68)) < rat(1, 18), "h3(68)");
  return o;
}

Outcome dual_facts() {
  Outcome o;
  o.require(fact62_check(appendix_b_s0(6)), "appendix B, s=0");
  o.require(fact62_check(appendix_b_s1(8)), "appendix B, s=1");
  std::mt19937 rng(62);
  for (int i = 0; i < 50; ++i) {
    const Family f = ts::random_hereditary(rng, 1 + static_cast<int>(rng() % 12));
    o.require(fact62_check(f), "random family");
    o.require(complement_dual(complement_dual(f)) == f, "involution");
  }
  return o;
}

double stretch_budget() {
  if (const char* env = std::getenv("TRACEKIT_STRETCH_SECS")) {
    const double v = std::atof(env);
    if (v > 0) return v;
  }
  return 60.0;
}

Outcome stretch() {
  Outcome o;
  SearchConfig cfg;
  cfg.time_budget = std::chrono::duration<double>(stretch_budget());
  const SearchResult r = m_exact(10, 11, cfg);
  const bool witness_ok = r.witness && are_isomorphic(*r.witness, build_construction_b(10, 5)).has_value();
  if (r.status == SearchStatus::Proved) {
    o.require(r.value == 53u && witness_ok, "proved value");
    o.detail = "proved m(10,11) = 53";
    return o;
  }
  // Timed out: the incumbent must be 𝓕₀(10,5) and the root bound must give
  // the family-size bound |F| >= 53.
  o.require(r.value == 53u, "incumbent m");
  o.require(witness_ok, "incumbent witness is F0(10,5)");
  o.require(r.root_bound == 53 && katona_root_bound(10, 12) == 53, "root bound");
  if (o.pass) {
    // The root bound is on |F|, so it only gives m >= 52. That is one short of
    // the degraded target, so a timeout stays a failure.
    o.pass = false;
    o.detail = "unproven: timeout after " + std::to_string(static_cast<int>(stretch_budget())) +
               " s; incumbent m = 53 (|F| = 54, F0(10,5)) ok; root bound 53 is on |F|, "
               "so only m >= 52 is proved";
  }
  return o;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run("1", "construction sizes and degrees", 1, constructions);
  ok &= run("2", "colex identities, W lower-bound sweep, Katona on 10000 families", 10, colex_identities);
  ok &= run("3", "exact m(n,s) values", 300, exact_m);
  ok &= run("4", "branch and bound equals brute force for n <= 4, delta <= 8", 60, oracle_equivalence);
  ok &= run("5", "weight-certificate identities", 1, weight_certificates);
  ok &= run("6", "pile analysis on F0(2d,d), d = 6..8", 10, pile_analysis);
  ok &= run("7", "h(d) < 1/18 on [50,1024], spot values, anchors", 30, appendix_a);
  ok &= run("8", "dual facts and involution", 1, dual_facts);
  // Flagged stretch target; reported but not part of the exit status.
  run("stretch", "m(10,11) = 53", stretch_budget() + 5, stretch);
  return ok ? 0 : 1;
}
