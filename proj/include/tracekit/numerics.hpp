#pragma once

#include <vector>

#include "tracekit/rational.hpp"

namespace tracekit::numerics {

inline constexpr int kMaxD = 4096;

/// h(d) = Σ_{H ∈ R(d-1)} (1/(d-|H|) - 1/d), from the size histogram of R(d-1).
Rat h(int d);

// Same sum over explicitly materialized R(d-1); only for cross-checking.
Rat h_direct(int d);

Rat h2(const Rat& d);
Rat h3(const Rat& d);

Rat threshold();  // 1/18

struct HReport {
  int d = 0;
  Rat h;
  Rat threshold;
  bool holds = false;
};

HReport h_report(int d);

struct SpotValue {
  int d = 0;
  Rat h;
  double printed = 0;  // the published three-place decimal
  bool matches = false;
};

// Published decimals of h at 65, 66, 67, 129, 130, 131, 132.
std::vector<SpotValue> spot_values();

struct AppendixA {
  std::vector<HReport> reports;
  std::vector<SpotValue> spots;
  bool h2_anchor = false;  // h2(50) < 1/18
  bool h3_anchor = false;  // h3(68) < 1/18
  bool all_hold() const;
};

AppendixA verify_appendix_a(int from, int to);

}  // namespace tracekit::numerics
