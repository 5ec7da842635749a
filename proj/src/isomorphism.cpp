#include <algorithm>
#include <map>
#include <vector>

#include "tracekit/errors.hpp"
#include "tracekit/family.hpp"

namespace tracekit {

namespace {

using Matrix = std::vector<std::vector<std::size_t>>;

Matrix pair_degrees(const Family& f) {
  const auto n = static_cast<std::size_t>(f.universe());
  Matrix m(n, std::vector<std::size_t>(n, 0));
  for (SubsetMask s : f) {
    const auto el = s.elements();
    for (int a : el) {
      for (int b : el) ++m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
  }
  return m;
}

// Colour refinement run on both families against one shared palette, so that
// equal colours are comparable across the two.
class Refiner {
 public:
  Refiner(const Family& a, const Family& b)
      : fams_{&a, &b}, pd_{pair_degrees(a), pair_degrees(b)} {}

  std::vector<std::vector<int>> run() {
    const auto n = static_cast<std::size_t>(fams_[0]->universe());
    std::vector<std::vector<int>> color(2, std::vector<int>(n, 0));
    {
      std::map<std::vector<std::size_t>, int> palette;
      std::vector<std::vector<std::vector<std::size_t>>> keys(2);
      for (int side = 0; side < 2; ++side) {
        for (std::size_t v = 0; v < n; ++v) {
          auto key = degree_profile(*fams_[side], static_cast<int>(v)).f;
          key.push_back(static_cast<std::size_t>(
              neighborhood(*fams_[side], static_cast<int>(v)).size()));
          palette.emplace(key, 0);
          keys[side].push_back(std::move(key));
        }
      }
      int next = 0;
      for (auto& [k, c] : palette) c = next++;
      for (int side = 0; side < 2; ++side) {
        for (std::size_t v = 0; v < n; ++v) color[side][v] = palette[keys[side][v]];
      }
    }
    std::size_t classes = count_classes(color);
    while (true) {
      std::map<std::pair<int, std::vector<std::pair<int, std::size_t>>>, int> palette;
      std::vector<std::vector<std::pair<int, std::vector<std::pair<int, std::size_t>>>>> keys(2);
      for (int side = 0; side < 2; ++side) {
        for (std::size_t v = 0; v < n; ++v) {
          std::vector<std::pair<int, std::size_t>> sig;
          for (std::size_t y = 0; y < n; ++y) {
            if (y != v && pd_[side][v][y] > 0) sig.emplace_back(color[side][y], pd_[side][v][y]);
          }
          std::sort(sig.begin(), sig.end());
          auto key = std::make_pair(color[side][v], std::move(sig));
          palette.emplace(key, 0);
          keys[side].push_back(std::move(key));
        }
      }
      int next = 0;
      for (auto& [k, c] : palette) c = next++;
      for (int side = 0; side < 2; ++side) {
        for (std::size_t v = 0; v < n; ++v) color[side][v] = palette[keys[side][v]];
      }
      const std::size_t now = count_classes(color);
      if (now == classes) break;
      classes = now;
    }
    return color;
  }

  const Matrix& pairs(int side) const { return pd_[side]; }

 private:
  static std::size_t count_classes(const std::vector<std::vector<int>>& color) {
    std::vector<int> all(color[0]);
    all.insert(all.end(), color[1].begin(), color[1].end());
    std::sort(all.begin(), all.end());
    return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
  }

  const Family* fams_[2];
  Matrix pd_[2];
};

class Matcher {
 public:
  Matcher(const Family& a, const Family& b, std::vector<std::vector<int>> color,
          const Matrix& pa, const Matrix& pb)
      : a_(a), b_(b), color_(std::move(color)), pa_(pa), pb_(pb),
        n_(static_cast<std::size_t>(a.universe())) {
    order_vertices();
    members_b_.resize(n_);
    for (SubsetMask m : b_) {
      for (int v : m.elements()) members_b_[static_cast<std::size_t>(v)].push_back(m);
    }
  }

  std::optional<Permutation> solve() {
    perm_.assign(n_, -1);
    used_.assign(n_, false);
    if (extend(0)) return perm_;
    return std::nullopt;
  }

 private:
  // Most constrained first, then grow along co-occurrence so that member
  // checks fire as early as possible.
  void order_vertices() {
    std::map<int, std::size_t> class_size;
    for (int c : color_[0]) ++class_size[c];
    std::vector<bool> placed(n_, false);
    for (std::size_t step = 0; step < n_; ++step) {
      std::size_t best = n_;
      std::pair<std::size_t, std::size_t> best_key{0, 0};
      for (std::size_t v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        std::size_t links = 0;
        for (std::size_t u : order_) links += pa_[u][v];
        // Prefer more links, then smaller class.
        const std::pair<std::size_t, std::size_t> key{links, n_ + 1 - class_size[color_[0][v]]};
        if (best == n_ || key > best_key) {
          best = v;
          best_key = key;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
    position_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) position_[order_[i]] = i;
    closing_.assign(n_, {});
    inside_count_.assign(n_, 0);
    for (SubsetMask m : a_) {
      std::size_t last = 0;
      for (int v : m.elements()) last = std::max(last, position_[static_cast<std::size_t>(v)]);
      if (!m.empty()) closing_[last].push_back(m);
    }
    for (std::size_t i = 0; i < n_; ++i) {
      inside_count_[i] = closing_[i].size();
    }
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const std::size_t v = order_[depth];
    for (std::size_t w = 0; w < n_; ++w) {
      if (used_[w] || color_[1][w] != color_[0][v]) continue;
      if (!consistent(depth, v, w)) continue;
      perm_[v] = static_cast<int>(w);
      used_[w] = true;
      image_ = image_.with(static_cast<int>(w));
      if (members_close(depth, w) && extend(depth + 1)) return true;
      image_ = image_.without(static_cast<int>(w));
      used_[w] = false;
      perm_[v] = -1;
    }
    return false;
  }

  bool consistent(std::size_t depth, std::size_t v, std::size_t w) const {
    if (pa_[v][v] != pb_[w][w]) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      const std::size_t u = order_[i];
      if (pa_[u][v] != pb_[static_cast<std::size_t>(perm_[u])][w]) return false;
    }
    return true;
  }

  // Members of A closed at this depth map into B, and B has no extra members
  // inside the current image that contain w.
  bool members_close(std::size_t depth, std::size_t w) const {
    for (SubsetMask m : closing_[depth]) {
      SubsetMask img;
      for (int x : m.elements()) img = img.with(perm_[static_cast<std::size_t>(x)]);
      if (!b_.contains(img)) return false;
    }
    std::size_t inside = 0;
    for (SubsetMask m : members_b_[w]) {
      if (m.subset_of(image_)) ++inside;
    }
    return inside == inside_count_[depth];
  }

  const Family& a_;
  const Family& b_;
  std::vector<std::vector<int>> color_;
  const Matrix& pa_;
  const Matrix& pb_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;
  std::vector<std::vector<SubsetMask>> closing_;
  std::vector<std::size_t> inside_count_;
  std::vector<std::vector<SubsetMask>> members_b_;
  Permutation perm_;
  std::vector<bool> used_;
  SubsetMask image_;
};

}  // namespace

std::optional<Permutation> are_isomorphic(const Family& a, const Family& b) {
  if (a.universe() != b.universe()) {
    throw Error(ErrorCode::InvalidParams, "isomorphism test needs equal universe sizes");
  }
  if (a.size() != b.size()) return std::nullopt;
  auto size_hist = [](const Family& f) {
    std::vector<std::size_t> h(static_cast<std::size_t>(f.universe()) + 1, 0);
    for (SubsetMask m : f) ++h[static_cast<std::size_t>(m.size())];
    return h;
  };
  if (size_hist(a) != size_hist(b)) return std::nullopt;

  Refiner refiner(a, b);
  auto color = refiner.run();
  auto ca = color[0], cb = color[1];
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) return std::nullopt;

  Matcher matcher(a, b, std::move(color), refiner.pairs(0), refiner.pairs(1));
  return matcher.solve();
}

}  // namespace tracekit
