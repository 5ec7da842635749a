#include "tracekit/numerics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "tracekit/colex.hpp"
#include "tracekit/errors.hpp"

namespace tracekit::numerics {

namespace {

void check_d(int d) {
  if (d < 2 || d > kMaxD) {
    throw Error(ErrorCode::InvalidParams, "h(d) needs 2 <= d <= 4096, got " + std::to_string(d));
  }
}

Rat term(long num, const Rat& den) { return Rat(num) / den; }

}  // namespace

Rat h(int d) {
  check_d(d);
  const auto hist = colex_size_histogram(static_cast<std::uint64_t>(d - 1));
  Rat sum = 0;
  for (std::size_t i = 0; i < hist.size(); ++i) {
    if (hist[i] == 0) continue;
    const Rat each = rat(1, d - static_cast<long>(i)) - rat(1, d);
    sum += Rat(mpz_class(static_cast<unsigned long>(hist[i]))) * each;
  }
  sum.canonicalize();
  return sum;
}

Rat h_direct(int d) {
  check_d(d);
  Rat sum = 0;
  for (std::uint32_t m = 0; m < static_cast<std::uint32_t>(d - 1); ++m) {
    sum += rat(1, d - std::popcount(m)) - rat(1, d);
  }
  sum.canonicalize();
  return sum;
}

Rat h2(const Rat& d) {
  Rat r = term(2, d) + term(6, d - 1) + term(15, d - 2) + term(16, d - 3) + term(9, d - 4) -
          term(43, d - 5);
  r.canonicalize();
  return r;
}

Rat h3(const Rat& d) {
  Rat r = term(2, d) + term(6, d - 1) + term(15, d - 2) + term(20, d - 3) + term(15, d - 4) +
          term(6, d - 5) - term(58, d - 6);
  r.canonicalize();
  return r;
}

Rat threshold() { return rat(1, 18); }

HReport h_report(int d) {
  HReport r;
  r.d = d;
  r.h = h(d);
  r.threshold = threshold();
  r.holds = r.h < r.threshold;
  return r;
}

std::vector<SpotValue> spot_values() {
  const std::pair<int, double> printed[] = {{65, 0.048},  {66, 0.047},  {67, 0.046}, {129, 0.028},
                                            {130, 0.027}, {131, 0.027}, {132, 0.027}};
  std::vector<SpotValue> out;
  for (auto [d, p] : printed) {
    SpotValue s{d, h(d), p, false};
    // The printed values are rounded to three places; 0.001 covers that.
    s.matches = std::abs(s.h.get_d() - p) <= 0.001 && s.h < threshold();
    out.push_back(s);
  }
  return out;
}

bool AppendixA::all_hold() const {
  return h2_anchor && h3_anchor &&
         std::all_of(reports.begin(), reports.end(), [](const HReport& r) { return r.holds; }) &&
         std::all_of(spots.begin(), spots.end(), [](const SpotValue& s) { return s.matches; });
}

AppendixA verify_appendix_a(int from, int to) {
  if (from < 2 || to > kMaxD || from > to) {
    throw Error(ErrorCode::InvalidParams, "range must satisfy 2 <= from <= to <= 4096");
  }
  AppendixA a;
  for (int d = from; d <= to; ++d) a.reports.push_back(h_report(d));
  a.spots = spot_values();
  a.h2_anchor = h2(Rat(50)) < threshold();
  a.h3_anchor = h3(Rat(68)) < threshold();
  return a;
}

}  // namespace tracekit::numerics
