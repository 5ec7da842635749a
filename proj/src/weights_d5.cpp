#include "tracekit/weights_d5.hpp"

#include <algorithm>
#include <sstream>

#include "tracekit/constructions.hpp"
#include "tracekit/errors.hpp"

namespace tracekit::d5 {

namespace {

std::string describe_link(const Family& f, int x) {
  std::ostringstream os;
  os << "link(" << x + 1 << ") = {";
  bool first = true;
  for (SubsetMask m : link(f, x)) {
    os << (first ? "" : ", ") << "{";
    bool inner = true;
    for (int v : m.elements()) {
      os << (inner ? "" : " ") << v + 1;
      inner = false;
    }
    os << "}";
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

Rat base_weight() { return rat(53, 10); }

std::vector<MemberWeights> assign_incidence_weights(const Family& f) {
  if (!is_hereditary(f)) throw Error(ErrorCode::NotHereditary, "weights need a hereditary family");
  std::vector<SubsetMask> fours;
  for (SubsetMask m : f) {
    if (m.size() >= 5) {
      throw Error(ErrorCode::MemberTooLarge, "member with " + std::to_string(m.size()) +
                                                 " elements; minimal families have at most 4");
    }
    if (m.size() == 4) fours.push_back(m);
  }
  const Rat seven = rat(7, 20), six = rat(6, 20), third = rat(1, 3);
  std::vector<MemberWeights> out;
  out.reserve(f.size());
  for (SubsetMask m : f) {
    MemberWeights w{m, {}};
    const auto el = m.elements();
    if (m.size() != 3) {
      for (int v : el) w.share.emplace_back(v, rat(1, m.size()));
    } else {
      const bool inside_four = std::any_of(fours.begin(), fours.end(),
                                           [m](SubsetMask q) { return m.subset_of(q); });
      // heavy[k]: the pair opposite el[k] has degree above 4.
      bool heavy[3] = {false, false, false};
      int count = 0;
      if (!inside_four) {
        for (int k = 0; k < 3; ++k) {
          heavy[k] = set_degree(f, m.without(el[static_cast<std::size_t>(k)])) > 4;
          count += heavy[k] ? 1 : 0;
        }
      }
      for (int k = 0; k < 3; ++k) {
        Rat share = third;
        if (count == 1) {
          // Endpoints of the heavy pair get 7/20, the opposite vertex 6/20.
          share = heavy[k] ? six : seven;
        } else if (count == 2) {
          // The vertex shared by both heavy pairs is opposite the light one.
          share = heavy[k] ? seven : six;
        }
        w.share.emplace_back(el[static_cast<std::size_t>(k)], share);
      }
    }
    out.push_back(std::move(w));
  }
  return out;
}

WeightCertificate vertex_weights(const Family& f) {
  WeightCertificate c;
  c.family = f;
  c.incidence = assign_incidence_weights(f);
  const auto n = static_cast<std::size_t>(f.universe());
  c.u.assign(n, Rat(0));
  c.eps.assign(n, Rat(0));
  c.mini_weight.assign(n, false);
  for (const auto& mw : c.incidence) {
    for (const auto& [v, w] : mw.share) c.u[static_cast<std::size_t>(v)] += w;
  }
  for (std::size_t x = 0; x < n; ++x) {
    c.profile.push_back(degree_profile(f, static_cast<int>(x)));
    const auto& p = c.profile.back();
    c.mini_weight[x] = p.at(1) == 4 && p.at(2) == 5 && p.at(3) == 2;
  }
  std::vector<SubsetMask> q;
  for (SubsetMask m : f) {
    if (m.size() == 4) q.push_back(m);
  }
  c.q = Family::from_masks(f.universe(), q);
  for (SubsetMask m : c.q) {
    int count = 0;
    for (int v : m.elements()) count += c.mini_weight[static_cast<std::size_t>(v)] ? 1 : 0;
    c.c_q.push_back(count);
    for (int v : m.elements()) {
      const auto x = static_cast<std::size_t>(v);
      // A non-mini-weight vertex only occurs when count <= 3.
      c.eps[x] += c.mini_weight[x] ? rat(-1, 15) : Rat(count, 15 * (4 - count));
    }
  }
  for (auto& r : c.eps) r.canonicalize();
  return c;
}

KeyLemmaReport key_lemma_check(const Family& f) {
  if (!is_minimal_hereditary(f, kThreshold)) {
    throw Error(ErrorCode::PreconditionViolated,
                "the key lemma needs a minimal hereditary family with min degree >= 12");
  }
  KeyLemmaReport r;
  r.certificate = vertex_weights(f);
  const auto& c = r.certificate;
  const Rat base = base_weight();
  auto flag = [&](int x, const std::string& what) {
    r.violations.push_back("vertex " + std::to_string(x + 1) + ": " + what + "; " +
                           describe_link(f, x));
  };

  for (const auto& mw : c.incidence) {
    if (mw.set.empty()) continue;
    Rat s = 0;
    for (const auto& sh : mw.share) s += sh.second;
    if (s != 1) flag(mw.set.elements().front(), "incidence weights of a member do not sum to 1");
  }
  Rat su = 0, se = 0;
  for (const auto& v : c.u) su += v;
  for (const auto& v : c.eps) se += v;
  if (su != Rat(mpz_class(static_cast<unsigned long>(f.size() - 1)))) {
    r.violations.push_back("sum of u differs from |F| - 1");
  }
  if (se != 0) r.violations.push_back("sum of eps is not zero");
  for (std::size_t i = 0; i < c.q.size(); ++i) {
    if (c.c_q[i] > 3) {
      flag(c.q[i].elements().front(), "a 4-set holds four mini-weight vertices");
    }
  }

  for (int x = 0; x < f.universe(); ++x) {
    const auto ux = static_cast<std::size_t>(x);
    const Rat& u = c.u[ux];
    const Rat& e = c.eps[ux];
    const auto& p = c.profile[ux];
    VertexCheck v;
    v.vertex = x;
    v.item1 = u >= base + e;
    v.item2 = (u < base) == c.mini_weight[ux];
    v.item3 = !(u > base) || u > base + e;
    const bool profile_a = p.at(1) == 5 && p.at(2) == 6 && p.at(3) == 0;
    const bool profile_b = p.at(1) == 4 && p.at(2) == 6 && p.at(3) == 1;
    v.item4 = u != base || profile_a || profile_b;
    if (!v.item1) flag(x, "u(x) < 5.3 + eps(x)");
    if (!v.item2) flag(x, "u(x) < 5.3 disagrees with mini-weight status");
    if (!v.item3) flag(x, "u(x) > 5.3 but not above 5.3 + eps(x)");
    if (!v.item4) flag(x, "u(x) = 5.3 with an unexpected link profile");
    r.vertices.push_back(v);

    std::vector<SubsetMask> qx;
    for (SubsetMask m : c.q) {
      if (m.contains(x)) qx.push_back(m);
    }
    if (c.mini_weight[ux]) {
      if (qx.size() != 2) {
        flag(x, "mini-weight vertex without exactly two 4-sets");
      } else if ((qx[0] & qx[1]).size() != 3) {
        flag(x, "the two 4-sets of a mini-weight vertex do not share three elements");
      }
      if (u != base - rat(2, 15)) flag(x, "mini-weight vertex with u(x) != 5.3 - 2/15");
    }
    if (p.at(3) == 1 && p.at(1) == 4) {
      // Link must be 2^{y1,y2,y3} ∪ {{z}, {y_i, z}}.
      const SubsetMask ys = qx.front().without(x);
      const SubsetMask z = neighborhood(f, x).without(x).minus(ys);
      std::vector<SubsetMask> expect;
      for_each_subset(ys, [&](SubsetMask s) { expect.push_back(s); });
      expect.push_back(z);
      for (int y : ys.elements()) expect.push_back(z.with(y));
      const bool shape = z.size() == 1 &&
                         link(f, x) == Family::from_masks(f.universe(), expect);
      if (!shape) flag(x, "f3 = 1 and f1 = 4 but the link has the wrong shape");
      const auto qi = static_cast<std::size_t>(
          std::find(c.q.begin(), c.q.end(), qx.front()) - c.q.begin());
      if (c.c_q[qi] != 0) flag(x, "f3 = 1 and f1 = 4 but c(Q) != 0");
      if (u != base) flag(x, "f3 = 1 and f1 = 4 but u(x) != 5.3");
    }
  }
  return r;
}

Family minimal_reduction(const Family& f) {
  Family cur = f;
  while (true) {
    const auto d = degrees(cur);
    bool removed = false;
    for (SubsetMask m : maximal_sets(cur)) {
      if (m.empty()) continue;
      bool keeps = true;
      for (int v : m.elements()) {
        if (d[static_cast<std::size_t>(v)] - 1 < kThreshold) keeps = false;
      }
      if (keeps) {
        cur = remove_set(cur, m);
        removed = true;
        break;
      }
    }
    if (!removed) return cur;
  }
}

const char* classification_name(Classification c) {
  switch (c) {
    case Classification::NotApplicable: return "not_applicable";
    case Classification::ExtremalIsomorphicToF0: return "extremal_isomorphic_to_F0";
    case Classification::ViolatesBound: return "violates_bound";
  }
  return "unknown";
}

Theorem31Result theorem31_classify(const Family& f) {
  if (!is_hereditary(f)) throw Error(ErrorCode::NotHereditary, "classification needs heredity");
  if (min_degree(f) < kThreshold) {
    throw Error(ErrorCode::PreconditionViolated, "classification needs min degree >= 12");
  }
  const int n = f.universe();
  Theorem31Result r;
  r.size = f.size();
  r.bound = base_weight() * n + 1;
  if (Rat(mpz_class(static_cast<unsigned long>(f.size()))) > r.bound) {
    r.kind = Classification::NotApplicable;
    r.minimal_size = f.size();
    return r;
  }
  const Family minimal = minimal_reduction(f);
  r.minimal_size = minimal.size();
  try {
    r.key_lemma_ok = key_lemma_check(minimal).ok();
  } catch (const Error&) {
    r.key_lemma_ok = false;
  }
  r.kind = Classification::ViolatesBound;
  if (n % 10 != 0 || minimal.size() != f.size() ||
      Rat(mpz_class(static_cast<unsigned long>(f.size()))) != r.bound) {
    return r;
  }
  r.isomorphism = are_isomorphic(f, build_construction_b(n, 5));
  if (r.isomorphism) r.kind = Classification::ExtremalIsomorphicToF0;
  return r;
}

}  // namespace tracekit::d5
