#include "reports.hpp"

#include <cstdio>

#include "tracekit/io.hpp"

namespace tracekit::cli {

json rat_json(const Rat& r) { return to_string(r); }

json mask_json(SubsetMask m) {
  json out = json::array();
  for (int v : m.elements()) out.push_back(v + 1);
  return out;
}

json to_json(const ExtremalReport& r) {
  return {{"size", r.size},
          {"min_degree", r.min_degree},
          {"hereditary", r.hereditary},
          {"size_matches", r.size_matches},
          {"degree_ok", r.degree_ok},
          {"matches_formula", r.matches_formula}};
}

json to_json(const Fact62Report& r) {
  return {{"hereditary", r.hereditary},
          {"size_identity", r.size_identity},
          {"degree_identity", r.degree_identity},
          {"dual_size", r.dual_size},
          {"dual_min_degree", r.dual_min_degree},
          {"holds", r.all()}};
}

json to_json(const DualCandidate& r) {
  return {{"s_star", r.s_star},
          {"ms_star", rat_json(r.ms_star)},
          {"size_precondition", r.size_precondition},
          {"degree_precondition", r.degree_precondition}};
}

json to_json(const KatonaResult& r) {
  return {{"sum", rat_json(r.sum)}, {"bound", rat_json(r.bound)}, {"holds", r.holds}};
}

json to_json(const Lemma25Result& r) {
  return {{"w", rat_json(r.w)}, {"bound_upper", rat_json(r.bound_upper)}, {"holds", r.holds}};
}

json to_json(const SearchResult& r, bool as_m) {
  json out;
  const char* key = as_m ? "m" : "mu";
  out[key] = r.value ? json(*r.value) : json(nullptr);
  out["status"] = r.status == SearchStatus::Proved ? "proved" : "timeout";
  out["root_bound"] = as_m ? r.root_bound - 1 : r.root_bound;
  out["nodes_explored"] = r.nodes;
  out["witness"] = r.witness ? io::family_to_json(*r.witness) : json(nullptr);
  return out;
}

json to_json(const d5::KeyLemmaReport& r) {
  const auto& c = r.certificate;
  json vertices = json::array();
  for (std::size_t x = 0; x < c.u.size(); ++x) {
    const auto& check = r.vertices[x];
    vertices.push_back({{"vertex", x + 1},
                        {"u", rat_json(c.u[x])},
                        {"eps", rat_json(c.eps[x])},
                        {"mini_weight", static_cast<bool>(c.mini_weight[x])},
                        {"profile", c.profile[x].f},
                        {"items", {check.item1, check.item2, check.item3, check.item4}}});
  }
  json incidence = json::array();
  for (const auto& m : c.incidence) {
    json share = json::array();
    for (const auto& [v, w] : m.share) share.push_back({{"vertex", v + 1}, {"weight", rat_json(w)}});
    incidence.push_back({{"set", mask_json(m.set)}, {"share", share}});
  }
  json q = json::array();
  for (std::size_t i = 0; i < c.q.size(); ++i) q.push_back({{"set", mask_json(c.q[i])}, {"c", c.c_q[i]}});
  return {{"vertices", vertices},
          {"incidence", incidence},
          {"four_sets", q},
          {"violations", r.violations},
          {"ok", r.ok()}};
}

json to_json(const d5::Theorem31Result& r) {
  json out = {{"classification", d5::classification_name(r.kind)},
              {"size", r.size},
              {"bound", rat_json(r.bound)},
              {"minimal_size", r.minimal_size},
              {"key_lemma_ok", r.key_lemma_ok}};
  if (r.isomorphism) {
    json perm = json::array();
    for (int v : *r.isomorphism) perm.push_back(v + 1);
    out["isomorphism"] = perm;
  } else {
    out["isomorphism"] = nullptr;
  }
  return out;
}

json to_json(const piles::PileDecomposition& r) {
  json ps = json::array();
  for (const auto& p : r.piles) {
    ps.push_back({{"set", mask_json(p.set)},
                  {"tag", p.tag == piles::PileTag::Isolated ? "isolated" : "intersecting"},
                  {"theta", p.theta}});
  }
  json bad = json::array();
  for (std::size_t x = 0; x < r.kinds.size(); ++x) {
    if (r.kinds[x] == piles::VertexKind::Bad) bad.push_back(x + 1);
  }
  return {{"d", r.d},
          {"piles", ps},
          {"J", mask_json(r.j)},
          {"K", mask_json(r.k)},
          {"bad_vertices", bad},
          {"bad_vertices_in_own_pile", r.bad_vertices_in_own_pile},
          {"J_all_good", r.j_all_good}};
}

json to_json(const piles::Lemma43Report& r) {
  json vs = json::array();
  for (const auto& w : r.vertices) {
    vs.push_back({{"vertex", w.vertex + 1},
                  {"omega", rat_json(w.omega)},
                  {"bound", rat_json(w.bound)},
                  {"holds", w.holds}});
  }
  return {{"proved_range", r.proved_range},
          {"degree_precondition", r.degree_precondition},
          {"vertices", vs},
          {"all_hold", r.all_hold()}};
}

json to_json(const piles::ProjectionReport& r) {
  json io_w = json::array();
  for (const auto& [x, w] : r.in_out) {
    io_w.push_back({{"vertex", x + 1}, {"omega_in", rat_json(w.first)}, {"omega_out", rat_json(w.second)}});
  }
  json missing_complements = json::array();
  for (SubsetMask m : r.nn) missing_complements.push_back(mask_json(m));
  json out = {{"pile", mask_json(r.pile)},
              {"t", r.t},
              {"inside_size", r.g.size()},
              {"N", missing_complements},
              {"weights", io_w},
              {"good_count", r.good_count},
              {"pile_weight", rat_json(r.pile_weight)},
              {"identities",
               {{"hereditary_equivalence", r.hereditary_equivalence},
                {"degree_identity", r.degree_identity},
                {"weight_split", r.weight_split},
                {"inner_sum", r.inner_sum}}},
              {"facts",
               {{"a", r.fact_a},
                {"b", r.fact_b},
                {"c", r.fact_c},
                {"d", r.fact_d},
                {"e", r.fact_e},
                {"external_weight", r.external_weight}}},
              {"few_good",
               {{"hypothesis", r.few_good_hypothesis},
                {"at_most_7", r.few_good_at_most_7},
                {"t_at_most_d_plus_4", r.few_good_t},
                {"small_N", r.few_good_small_n},
                {"bad_singletons", r.few_good_bad_singletons}}},
              {"proved_range", r.proved_range}};
  out["f_u"] = r.fu ? json(*r.fu) : json(nullptr);
  out["size_bound"] = r.size_bound ? json(*r.size_bound) : json(nullptr);
  return out;
}

std::string digest(const json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : j.dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace tracekit::cli
