#include "tracekit/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "tracekit/colex.hpp"
#include "tracekit/constructions.hpp"
#include "tracekit/errors.hpp"
#include "tracekit/rational.hpp"

namespace tracekit {

std::chrono::duration<double> SearchConfig::default_budget() {
  if (const char* env = std::getenv("TRACEKIT_BUDGET_SECS")) {
    char* end = nullptr;
    const double secs = std::strtod(env, &end);
    if (end != env && secs > 0) return std::chrono::duration<double>(secs);
  }
  return std::chrono::duration<double>(60.0);
}

std::uint64_t katona_root_bound(int n, std::uint64_t delta) {
  const Rat total = Rat(n) * colex_weight(delta);
  return ceil(total).get_ui() + 1;
}

std::optional<Family> block_seed(int n, std::uint64_t delta) {
  if (n < 1 || n > kMaxSearchUniverse || delta > (std::uint64_t{1} << (n - 1))) return std::nullopt;
  // prefix[k]: least M with every vertex of [k] in >= delta of R(M).
  std::vector<std::uint32_t> prefix(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 1; k <= n; ++k) {
    if (delta > (std::uint64_t{1} << (k - 1))) continue;
    std::vector<std::uint64_t> deg(static_cast<std::size_t>(k), 0);
    std::uint32_t m = 0;
    while (*std::min_element(deg.begin(), deg.end()) < delta) {
      for (int v : SubsetMask{m}.elements()) ++deg[static_cast<std::size_t>(v)];
      ++m;
    }
    prefix[static_cast<std::size_t>(k)] = m;
  }
  std::optional<Family> best;
  auto offer = [&](const Family& f) {
    if (!is_hereditary(f) || min_degree(f) < delta) return;
    if (!best || f.size() < best->size()) best = f;
  };
  for (int b = 1; b <= n; ++b) {
    const int blocks = n / b;
    const int last = b + n % b;
    if (prefix[static_cast<std::size_t>(b)] == 0 || prefix[static_cast<std::size_t>(last)] == 0) continue;
    std::vector<SubsetMask> sets;
    for (int i = 0; i < blocks; ++i) {
      const int size = i + 1 == blocks ? last : b;
      for (std::uint32_t m = 0; m < prefix[static_cast<std::size_t>(size)]; ++m) {
        sets.push_back(SubsetMask{m << (i * b)});
      }
    }
    offer(Family::from_masks(n, std::move(sets)));
  }
  for (int d = 5; 2 * d <= n; ++d) {
    if (n % (2 * d) == 0) offer(build_construction_b(n, d));
  }
  return best;
}

namespace {

using Clock = std::chrono::steady_clock;
constexpr std::uint64_t kInfeasible = std::numeric_limits<std::uint64_t>::max();

// Tables shared by every worker.
struct Problem {
  int n = 0;
  std::uint64_t delta = 0;
  std::uint64_t half = 0;
  SearchConfig config;
  std::int64_t scale = 1;               // lcm(1..n)
  std::vector<std::int64_t> weight;     // weight[k] = scale / k
  std::vector<std::vector<std::uint32_t>> rhist;  // size histogram of R(k)

  Problem(int n_, std::uint64_t delta_, const SearchConfig& cfg)
      : n(n_), delta(delta_), half(std::uint64_t{1} << (n_ - 1)), config(cfg) {
    for (int k = 1; k <= n; ++k) scale = std::lcm(scale, static_cast<std::int64_t>(k));
    weight.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k <= n; ++k) weight[static_cast<std::size_t>(k)] = scale / k;
    rhist.assign(half + 1, std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0));
    for (std::uint64_t k = 1; k <= half; ++k) {
      rhist[k] = rhist[k - 1];
      ++rhist[k][static_cast<std::size_t>(std::popcount(k - 1))];
    }
  }
};

// Shared between workers: the incumbent and the cancellation flag.
struct Shared {
  std::atomic<std::uint64_t> best{kInfeasible};
  std::atomic<bool> cancelled{false};
  std::atomic<std::uint64_t> nodes{0};
  std::mutex mu;
  std::vector<std::uint32_t> witness;
  Clock::time_point deadline;
};

struct Task {
  std::vector<std::uint32_t> adds;
  std::vector<std::uint32_t> forbids;
};

class Worker {
 public:
  Worker(const Problem& p, Shared& shared)
      : p_(p),
        sh_(shared),
        in_(std::size_t{1} << p.n, 0),
        deg_(static_cast<std::size_t>(p.n), 0),
        lhist_(static_cast<std::size_t>(p.n), std::vector<std::uint32_t>(static_cast<std::size_t>(p.n), 0)) {}

  void replay(const Task& t) {
    forbids_ = t.forbids;
    for (std::uint32_t s : t.adds) add(s);
    adds_ = t.adds;
  }

  // Depth-first search below the current state. With `frontier` set, nodes
  // at branching depth `limit` are handed out as tasks instead of explored.
  void dfs(int depth, int limit, std::vector<Task>* frontier) {
    if (sh_.cancelled.load(std::memory_order_relaxed)) return;
    if ((++local_nodes_ & 255) == 0) flush_nodes();

    const std::uint64_t lb = bound();
    if (lb >= sh_.best.load(std::memory_order_relaxed)) return;

    const int x = pick_vertex();
    if (x < 0) {
      record();
      return;
    }
    if (frontier != nullptr && depth == limit) {
      frontier->push_back(Task{adds_, forbids_});
      return;
    }
    const auto cands = candidates(x);
    const std::size_t base_forbids = forbids_.size();
    for (std::uint32_t s : cands) {
      const std::size_t mark = trail_.size();
      add(s);
      adds_.push_back(s);
      dfs(depth + 1, limit, frontier);
      adds_.pop_back();
      undo(mark);
      forbids_.push_back(s);
      if (sh_.cancelled.load(std::memory_order_relaxed)) break;
    }
    forbids_.resize(base_forbids);
  }

  void flush_nodes() {
    sh_.nodes.fetch_add(local_nodes_ & 255 ? local_nodes_ % 256 : 256, std::memory_order_relaxed);
    local_nodes_ = 0;
    if (Clock::now() > sh_.deadline) sh_.cancelled.store(true);
  }

  void finish() {
    sh_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed);
    local_nodes_ = 0;
  }

 private:
  void add(std::uint32_t s) {
    for_each_subset(SubsetMask{s}, [&](SubsetMask sub) {
      if (in_[sub.bits]) return;
      in_[sub.bits] = 1;
      trail_.push_back(sub.bits);
      const auto k = static_cast<std::size_t>(sub.size() - 1);
      for (int v : sub.elements()) {
        ++deg_[static_cast<std::size_t>(v)];
        ++lhist_[static_cast<std::size_t>(v)][k];
      }
    });
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::uint32_t m = trail_.back();
      trail_.pop_back();
      in_[m] = 0;
      const SubsetMask sub{m};
      const auto k = static_cast<std::size_t>(sub.size() - 1);
      for (int v : sub.elements()) {
        --deg_[static_cast<std::size_t>(v)];
        --lhist_[static_cast<std::size_t>(v)][k];
      }
    }
  }

  // Every link ends up hereditary, contains the current link and has at
  // least max(delta, current) members. Its j-th smallest member is then no
  // larger than the j-th smallest of R(k) nor of the current link, which
  // bounds ω(x) = Σ 1/(|L|+1) from below; Σ ω = |F| - 1 does the rest.
  std::uint64_t bound() const {
    const std::uint64_t size = trail_.size();
    bool deficient = false;
    for (std::uint64_t d : deg_) deficient = deficient || d < p_.delta;
    const std::uint64_t trivial = size + (deficient ? 1 : 0);
    if (!p_.config.katona_pruning) return trivial;

    const auto n = static_cast<std::size_t>(p_.n);
    std::int64_t total = 0;
    for (std::size_t x = 0; x < n; ++x) {
      const std::uint64_t k = std::max<std::uint64_t>(p_.delta, deg_[x]);
      if (k > p_.half) return kInfeasible;
      const auto& a = lhist_[x];
      const auto& b = p_.rhist[k];
      std::size_t ia = 0, ib = 0;
      std::uint64_t ca = n ? a[0] : 0, cb = b[0];
      std::uint64_t rem_a = deg_[x], remaining = k;
      while (remaining > 0) {
        while (rem_a > 0 && ca == 0) ca = a[++ia];
        while (cb == 0) cb = b[++ib];
        std::uint64_t step = std::min(cb, remaining);
        std::size_t sz = ib;
        if (rem_a > 0) {
          step = std::min(step, ca);
          sz = std::min(ia, ib);
        }
        total += static_cast<std::int64_t>(step) * p_.weight[sz + 1];
        cb -= step;
        remaining -= step;
        if (rem_a > 0) {
          ca -= step;
          rem_a -= step;
        }
      }
    }
    const auto lb = static_cast<std::uint64_t>((total + p_.scale - 1) / p_.scale) + 1;
    return std::max(lb, trivial);
  }

  std::uint32_t touched() const {
    std::uint32_t t = 0;
    for (std::size_t v = 0; v < deg_.size(); ++v) {
      if (deg_[v] > 0) t |= std::uint32_t{1} << v;
    }
    for (std::uint32_t f : forbids_) t |= f;
    return t;
  }

  // The touched deficient vertex with the largest deficit, else the smallest
  // untouched one; -1 once every degree reaches delta.
  int pick_vertex() const {
    const std::uint32_t t = touched();
    int best = -1, untouched = -1;
    std::uint64_t best_deficit = 0;
    for (int v = 0; v < p_.n; ++v) {
      const std::uint64_t d = deg_[static_cast<std::size_t>(v)];
      if (d >= p_.delta) continue;
      if (!(t >> v & 1U)) {
        if (untouched < 0) untouched = v;
        continue;
      }
      if (p_.delta - d > best_deficit) {
        best_deficit = p_.delta - d;
        best = v;
      }
    }
    return best >= 0 ? best : untouched;
  }

  // Some new set through x is inclusion-minimal among the new sets through
  // x in any completion; such an S has S - {y} present for every y != x.
  std::vector<std::uint32_t> candidates(int x) const {
    const std::uint32_t bx = std::uint32_t{1} << x;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;  // (cost, set)
    auto consider = [&](std::uint32_t s) {
      if (in_[s]) return;
      for (std::uint32_t f : forbids_) {
        if ((s & f) == f) return;
      }
      for (std::uint32_t rest = s & ~bx; rest != 0; rest &= rest - 1) {
        const std::uint32_t y = rest & (~rest + 1);
        if (!in_[s & ~y]) return;
      }
      std::uint64_t cost = 0;
      for_each_subset(SubsetMask{s}, [&](SubsetMask sub) { cost += in_[sub.bits] ? 0 : 1; });
      out.emplace_back(cost, s);
    };
    if (!in_[bx]) {
      consider(bx);
    } else {
      std::uint32_t nb = 0;
      for (std::uint32_t m = 0; m < in_.size(); ++m) {
        if (in_[m] && (m & bx)) nb |= m;
      }
      nb &= ~bx;
      const std::uint32_t all = (std::uint32_t{1} << p_.n) - 1;
      for (std::uint32_t y = 1; y <= all; y <<= 1) {
        if (y != bx) consider(bx | y);
      }
      // Sets with two or more other points lie inside N(x) ∪ {x}.
      for (std::uint32_t t = nb; t != 0; t = (t - 1) & nb) {
        if (std::popcount(t) >= 2) consider(bx | t);
      }
    }
    if (p_.config.symmetry_breaking) {
      // Untouched vertices are interchangeable: only the smallest ones may be used.
      const std::uint32_t free_v = ~touched() & ((std::uint32_t{1} << p_.n) - 1) & ~bx;
      std::erase_if(out, [free_v](const auto& c) {
        const std::uint32_t used = c.second & free_v;
        const std::uint32_t lowest = used == 0 ? 0 : prefix_of(free_v, std::popcount(used));
        return used != lowest;
      });
    }
    // Cheap additions first; among equals, bigger sets help more vertices.
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
      if (l.first != r.first) return l.first < r.first;
      const int sl = std::popcount(l.second), sr = std::popcount(r.second);
      if (sl != sr) return sl > sr;
      return l.second < r.second;
    });
    std::vector<std::uint32_t> sets;
    sets.reserve(out.size());
    for (const auto& c : out) sets.push_back(c.second);
    return sets;
  }

  static std::uint32_t prefix_of(std::uint32_t bits, int count) {
    std::uint32_t out = 0;
    for (; count > 0; --count) {
      const std::uint32_t low = bits & (~bits + 1);
      out |= low;
      bits &= ~low;
    }
    return out;
  }

  void record() {
    const std::uint64_t size = trail_.size();
    std::lock_guard lock(sh_.mu);
    if (size >= sh_.best.load()) return;
    sh_.best.store(size);
    sh_.witness = trail_;
  }

  const Problem& p_;
  Shared& sh_;
  std::vector<std::uint8_t> in_;
  std::vector<std::uint64_t> deg_;
  std::vector<std::vector<std::uint32_t>> lhist_;
  std::vector<std::uint32_t> trail_;
  std::vector<std::uint32_t> forbids_;
  std::vector<std::uint32_t> adds_;
  std::uint64_t local_nodes_ = 0;
};

}  // namespace

SearchResult min_family_size(int n, std::uint64_t delta, const SearchConfig& config) {
  if (n < 1 || n > kMaxSearchUniverse) {
    throw Error(ErrorCode::UniverseTooLarge,
                "search supports 1 <= n <= " + std::to_string(kMaxSearchUniverse));
  }
  if (delta < 1) throw Error(ErrorCode::InvalidParams, "delta must be at least 1");
  if (config.threads < 1) throw Error(ErrorCode::InvalidParams, "threads must be positive");

  const auto start = Clock::now();
  SearchResult result;
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  if (delta > half) {
    result.wallclock = Clock::now() - start;
    return result;  // no family reaches this degree
  }
  result.root_bound = katona_root_bound(n, delta);

  const Problem problem(n, delta, config);
  Shared shared;
  shared.deadline = start + std::chrono::duration_cast<Clock::duration>(config.time_budget);
  // The power set always qualifies.
  shared.best.store((std::uint64_t{1} << n) + 1);
  if (config.warm_start) {
    if (auto seed = block_seed(n, delta)) {
      shared.best.store(seed->size());
      for (SubsetMask m : *seed) shared.witness.push_back(m.bits);
    }
  }
  bool have_witness = false;

  std::vector<Task> tasks;
  if (config.threads == 1) {
    tasks.push_back(Task{});
  } else {
    // Grow a frontier deep enough to keep every thread busy.
    for (int limit = 1; limit <= 8; ++limit) {
      tasks.clear();
      Worker w(problem, shared);
      w.dfs(0, limit, &tasks);
      w.finish();
      if (tasks.size() >= static_cast<std::size_t>(8 * config.threads)) break;
    }
  }

  std::atomic<std::size_t> next{0};
  auto run = [&] {
    while (!shared.cancelled.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      Worker w(problem, shared);
      w.replay(tasks[i]);
      w.dfs(0, -1, nullptr);
      w.finish();
    }
  };
  if (config.threads == 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < config.threads; ++t) pool.emplace_back(run);
  }

  result.nodes = shared.nodes.load();
  result.status = shared.cancelled.load() ? SearchStatus::Timeout : SearchStatus::Proved;
  have_witness = !shared.witness.empty();
  std::vector<SubsetMask> masks;
  if (have_witness) {
    for (std::uint32_t m : shared.witness) masks.push_back(SubsetMask{m});
  } else {
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) masks.push_back(SubsetMask{m});
  }
  result.witness = Family::from_masks(n, std::move(masks));
  result.value = result.witness->size();
  result.wallclock = Clock::now() - start;
  return result;
}

SearchResult m_exact(int n, std::uint64_t s, const SearchConfig& config) {
  SearchResult r = min_family_size(n, s + 1, config);
  if (r.value) *r.value -= 1;
  return r;
}

void for_each_hereditary(int n, const std::function<void(std::uint64_t)>& fn) {
  if (n < 0 || n > kMaxArrowsUniverse) {
    throw Error(ErrorCode::UniverseTooLarge,
                "full enumeration supports n <= " + std::to_string(kMaxArrowsUniverse));
  }
  const std::uint32_t total = std::uint32_t{1} << n;
  // Masks are decided in increasing order, so every proper subset of the
  // current mask has already been decided.
  auto rec = [&](auto&& self, std::uint32_t m, std::uint64_t bits) -> void {
    if (m == total) {
      fn(bits);
      return;
    }
    self(self, m + 1, bits);
    for (std::uint32_t rest = m; rest != 0; rest &= rest - 1) {
      const std::uint32_t y = rest & (~rest + 1);
      if (!(bits >> (m & ~y) & 1U)) return;
    }
    if (m != 0 && !(bits & 1U)) return;
    self(self, m + 1, bits | std::uint64_t{1} << m);
  };
  rec(rec, 0, 0);
}

namespace {

// masks_in[T]: bitset of masks lying inside T.
std::vector<std::uint64_t> inside_tables(int n) {
  const std::uint32_t total = std::uint32_t{1} << n;
  std::vector<std::uint64_t> out(total, 0);
  for (std::uint32_t t = 0; t < total; ++t) {
    for (std::uint32_t m = 0; m < total; ++m) {
      if ((m & t) == m) out[t] |= std::uint64_t{1} << m;
    }
  }
  return out;
}

std::vector<std::uint64_t> through_tables(int n) {
  const std::uint32_t total = std::uint32_t{1} << n;
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    for (std::uint32_t m = 0; m < total; ++m) {
      if (m >> x & 1U) out[static_cast<std::size_t>(x)] |= std::uint64_t{1} << m;
    }
  }
  return out;
}

std::uint64_t min_degree_bits(std::uint64_t bits, const std::vector<std::uint64_t>& through) {
  std::uint64_t md = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t t : through) md = std::min<std::uint64_t>(md, std::popcount(bits & t));
  return md;
}

}  // namespace

bool arrows(int n, std::uint64_t m, int a, std::uint64_t b) {
  if (n < 0 || n > kMaxArrowsUniverse) {
    throw Error(ErrorCode::UniverseTooLarge,
                "arrows enumerates hereditary families only for n <= 6");
  }
  if (a < 0 || a > n) throw Error(ErrorCode::InvalidParams, "need 0 <= a <= n");
  if (m > (std::uint64_t{1} << n)) throw Error(ErrorCode::InvalidParams, "need m <= 2^n");
  const auto inside = inside_tables(n);
  std::vector<std::uint64_t> windows;
  for (std::uint32_t t = 0; t < inside.size(); ++t) {
    if (std::popcount(t) == a) windows.push_back(inside[t]);
  }
  bool holds = true;
  for_each_hereditary(n, [&](std::uint64_t bits) {
    if (!holds || static_cast<std::uint64_t>(std::popcount(bits)) < m) return;
    // For hereditary F the trace on T is exactly the members inside T.
    const bool hit = std::any_of(windows.begin(), windows.end(), [&](std::uint64_t w) {
      return static_cast<std::uint64_t>(std::popcount(bits & w)) >= b;
    });
    if (!hit) holds = false;
  });
  return holds;
}

Prop22Report verify_prop22_equivalences(int n, std::uint64_t m, std::uint64_t s,
                                        std::uint64_t sample_count, std::uint64_t seed) {
  if (n < 1 || n > kMaxArrowsUniverse) {
    throw Error(ErrorCode::UniverseTooLarge, "the equivalence check supports 1 <= n <= 6");
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  if (m < 1 || m > total) throw Error(ErrorCode::InvalidParams, "need 1 <= m <= 2^n");

  Prop22Report r;
  r.exhaustive = n <= 5;
  r.arrow = m <= s || arrows(n, m, n - 1, m - s);

  const auto through = through_tables(n);
  r.low_degree = true;
  r.large_family = true;
  std::uint64_t mu = total + 1;  // no family reaches degree s+1
  auto judge = [&](std::uint64_t bits) {
    ++r.families;
    const auto size = static_cast<std::uint64_t>(std::popcount(bits));
    const std::uint64_t md = n == 0 ? 0 : min_degree_bits(bits, through);
    if (size <= m && md > s) r.low_degree = false;
    if (md >= s + 1) {
      if (size < m + 1) r.large_family = false;
      mu = std::min(mu, size);
    }
  };

  if (r.exhaustive) {
    for_each_hereditary(n, judge);
  } else {
    std::mt19937_64 rng(seed);
    const auto inside = inside_tables(n);
    for (std::uint64_t i = 0; i < sample_count; ++i) {
      // Down-closure of a random collection of generators.
      std::uint64_t bits = 0;
      const int gens = static_cast<int>(rng() % 6);
      for (int g = 0; g < gens; ++g) bits |= inside[rng() % total];
      judge(bits);
    }
    SearchConfig cfg;
    const SearchResult exact = min_family_size(n, s + 1, cfg);
    mu = exact.value ? *exact.value : total + 1;
  }
  // m(n, s) = μ(n, s+1) - 1, or 2^n when no family has that degree.
  const std::uint64_t mns = mu > total ? total : mu - 1;
  r.below_m = m <= mns;
  return r;
}

}  // namespace tracekit
