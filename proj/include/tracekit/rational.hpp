#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tracekit {

// Exact rational; every weight, bound and certificate value uses this type.
using Rat = mpq_class;

Rat rat(long num, long den = 1);

// Always "p/q", with q = 1 written out.
std::string to_string(const Rat& r);
// Accepts "p/q", "p", or a terminating decimal such as "5.3".
Rat parse_rat(const std::string& text);
// Decimal rendering rounded half away from zero; display only.
std::string to_decimal(const Rat& r, int places);

Rat pow2(unsigned k);

// ⌈r⌉ for rationals.
mpz_class ceil(const Rat& r);

struct Enclosure {
  Rat lo;
  Rat hi;
};

// Rational interval [lo, hi] containing log2(c), exact (lo == hi) when c is a
// power of two and otherwise of width 2^-bits.
Enclosure log2_enclosure(std::uint64_t c, unsigned bits = 40);

}  // namespace tracekit
