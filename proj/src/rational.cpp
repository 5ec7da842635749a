#include "tracekit/rational.hpp"

#include <bit>

#include "tracekit/errors.hpp"

namespace tracekit {

Rat rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  const auto dot = text.find('.');
  Rat r;
  try {
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      const auto frac = text.size() - dot - 1;
      mpz_class num(digits, 10);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
      r = Rat(num, den);
    } else {
      r = Rat(text, 10);
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
  }
  if (r.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_decimal(const Rat& r, int places) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  const mpz_class num = abs(r.get_num()) * scale * 2 + r.get_den();
  mpz_class q = num / (r.get_den() * 2);
  std::string digits = q.get_str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out = digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  if (places > 0) out += "." + digits.substr(digits.size() - static_cast<std::size_t>(places));
  if (sgn(r) < 0 && q != 0) out.insert(0, "-");
  return out;
}

Rat pow2(unsigned k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, k);
  return Rat(p);
}

mpz_class ceil(const Rat& r) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Enclosure log2_enclosure(std::uint64_t c, unsigned bits) {
  if (c == 0) throw Error(ErrorCode::InvalidParams, "log2 of zero");
  const unsigned k = static_cast<unsigned>(std::bit_width(c)) - 1;
  if (std::has_single_bit(c)) return {Rat(k), Rat(k)};

  // y = c / 2^k in (1, 2), carried as fixed-point integers scaled by 2^prec
  // with outward rounding. Squaring y yields the next binary digit of log2 y.
  const unsigned prec = 2 * bits + 64;
  mpz_class one;
  mpz_ui_pow_ui(one.get_mpz_t(), 2, prec);
  const mpz_class two = one * 2;
  mpz_class lo = (mpz_class(static_cast<unsigned long>(c)) << prec) >> k;
  mpz_class hi = lo;
  if ((lo << k) != (mpz_class(static_cast<unsigned long>(c)) << prec)) hi += 1;

  mpz_class frac = 0;
  unsigned known = 0;
  for (; known < bits; ++known) {
    mpz_class lo2 = lo * lo;
    mpz_fdiv_q_2exp(lo.get_mpz_t(), lo2.get_mpz_t(), prec);
    mpz_class hi2 = hi * hi;
    mpz_cdiv_q_2exp(hi.get_mpz_t(), hi2.get_mpz_t(), prec);
    int bit;
    if (lo >= two) {
      bit = 1;
    } else if (hi < two) {
      bit = 0;
    } else {
      break;  // digit undecided at this precision
    }
    frac = frac * 2 + bit;
    if (bit == 1) {
      mpz_fdiv_q_2exp(lo.get_mpz_t(), lo.get_mpz_t(), 1);
      mpz_cdiv_q_2exp(hi.get_mpz_t(), hi.get_mpz_t(), 1);
    }
  }
  Rat lo_r = Rat(k) + Rat(frac, mpz_class(1) << known);
  lo_r.canonicalize();
  Rat width = Rat(mpz_class(1), mpz_class(1) << known);
  width.canonicalize();
  return {lo_r, lo_r + width};
}

}  // namespace tracekit
