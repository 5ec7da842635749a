#include "tracekit/colex.hpp"

#include <bit>
#include <string>

#include "tracekit/errors.hpp"

namespace tracekit {

namespace {

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_prefix(std::uint64_t m) {
  if (m > kMaxColexPrefix) {
    throw Error(ErrorCode::UniverseTooLarge,
                "colex prefix of length " + std::to_string(m) + " exceeds 2^25");
  }
}

}  // namespace

int colex_universe(std::uint64_t m) {
  return m <= 1 ? 1 : std::max(1, static_cast<int>(std::bit_width(m - 1)));
}

Family colex_prefix(std::uint64_t m, int n) {
  check_prefix(m);
  if (n == 0) n = colex_universe(m);
  if (n < colex_universe(m)) {
    throw Error(ErrorCode::InvalidParams, "universe too small for the colex prefix");
  }
  std::vector<SubsetMask> sets(m);
  for (std::uint64_t i = 0; i < m; ++i) sets[i] = SubsetMask(static_cast<std::uint32_t>(i));
  return Family::from_masks(n, std::move(sets));
}

std::vector<std::uint64_t> colex_size_histogram(std::uint64_t m) {
  // Masks below m: for each set bit b of m, fixing the higher bits of m and
  // clearing b leaves 2^b free choices below it.
  std::vector<std::uint64_t> hist(65, 0);
  unsigned higher = 0;
  for (int b = 63; b >= 0; --b) {
    if (((m >> b) & 1u) == 0) continue;
    for (unsigned j = 0; j <= static_cast<unsigned>(b); ++j) {
      hist[higher + j] += binomial(static_cast<unsigned>(b), j);
    }
    ++higher;
  }
  while (hist.size() > 1 && hist.back() == 0) hist.pop_back();
  return hist;
}

Rat colex_weight(std::uint64_t m) {
  const auto hist = colex_size_histogram(m);
  Rat w = 0;
  for (std::size_t i = 0; i < hist.size(); ++i) {
    if (hist[i] != 0) w += Rat(mpz_class(static_cast<unsigned long>(hist[i])), i + 1);
  }
  w.canonicalize();
  return w;
}

bool complement_identity_holds(int d, std::uint64_t c) {
  if (d < 1 || d > 26) throw Error(ErrorCode::InvalidParams, "d outside [1, 26]");
  const std::uint64_t half = std::uint64_t{1} << (d - 1);
  if (c < 1 || c > half) throw Error(ErrorCode::InvalidParams, "c outside [1, 2^{d-1}]");
  const std::uint32_t top = static_cast<std::uint32_t>(half - 1);  // mask of [d-1]
  // Left side: masks of [d-1] at or after index 2^{d-1}-c, in colex order.
  // Right side: complements of the first c masks, taken in reverse.
  std::vector<std::uint32_t> left, right;
  for (std::uint64_t v = half - c; v < half; ++v) left.push_back(static_cast<std::uint32_t>(v));
  for (std::uint64_t h = 0; h < c; ++h) right.push_back(top & ~static_cast<std::uint32_t>(h));
  std::sort(right.begin(), right.end());
  return left == right;
}

KatonaResult katona_sum(const Family& f, const std::vector<Rat>& weight) {
  if (!is_hereditary(f)) {
    throw Error(ErrorCode::NotHereditary, "Katona's bound needs a hereditary family");
  }
  if (weight.size() < static_cast<std::size_t>(f.universe()) + 1) {
    throw Error(ErrorCode::InvalidParams, "weight table must cover sizes 0..n");
  }
  for (std::size_t i = 1; i < weight.size(); ++i) {
    if (weight[i] > weight[i - 1]) {
      throw Error(ErrorCode::NotMonotone,
                  "weight table increases at size " + std::to_string(i));
    }
  }
  KatonaResult out;
  for (SubsetMask m : f) out.sum += weight[static_cast<std::size_t>(m.size())];
  const auto hist = colex_size_histogram(f.size());
  for (std::size_t i = 0; i < hist.size(); ++i) {
    out.bound += Rat(mpz_class(static_cast<unsigned long>(hist[i]))) * weight[i];
  }
  out.holds = out.sum >= out.bound;
  return out;
}

Lemma25Result lemma25_check(int d, std::uint64_t c) {
  if (d < 2 || d > 62) throw Error(ErrorCode::InvalidParams, "d outside [2, 62]");
  const std::uint64_t quarter = std::uint64_t{1} << (d - 2);
  if (c < 1 || c > quarter) throw Error(ErrorCode::InvalidParams, "c outside [1, 2^{d-2}]");
  Lemma25Result out;
  out.w = colex_weight((std::uint64_t{1} << (d - 1)) - c);
  // The bound decreases in log2 c, so the lower end of the enclosure gives an
  // upper bound on it.
  const Enclosure lg = log2_enclosure(c);
  const Rat head = (pow2(static_cast<unsigned>(d)) - 1) / Rat(d);
  out.bound_upper = head - Rat(mpz_class(static_cast<unsigned long>(c))) / (Rat(d) - lg.lo);
  out.bound_upper.canonicalize();
  out.holds = out.w >= out.bound_upper;
  return out;
}

Lemma26Result lemma26_surplus(const Family& h, int d, std::uint64_t c) {
  if (d < 4 || d > 25) throw Error(ErrorCode::InvalidParams, "d outside [4, 25]");
  const std::uint64_t full = std::uint64_t{1} << d;
  if (c > full) throw Error(ErrorCode::InvalidParams, "c exceeds 2^d");
  if (!is_hereditary(h)) throw Error(ErrorCode::NotHereditary, "H must be hereditary");
  if (h.size() < full - c) {
    throw Error(ErrorCode::PreconditionViolated,
                "|H| = " + std::to_string(h.size()) + " < 2^d - c = " + std::to_string(full - c));
  }
  Lemma26Result out;
  for (SubsetMask m : h) out.sum += Rat(1, static_cast<unsigned long>(m.size() + 1));
  out.sum.canonicalize();
  SubsetMask support;
  for (SubsetMask m : h) support = support | m;
  out.non_isolated = support.size();
  out.floor = colex_weight(full - c);
  if (out.non_isolated > d) out.floor += Rat(out.non_isolated - d, 6);
  out.floor.canonicalize();
  out.holds = out.sum >= out.floor;
  return out;
}

}  // namespace tracekit
