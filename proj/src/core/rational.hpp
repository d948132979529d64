#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace kinvor {

using Rat = mpq_class;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal-consistency guard; failures indicate a bug, not bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

#define KV_CHECK(cond, msg)                       \
  do {                                            \
    if (!(cond)) throw ::kinvor::internal_error(  \
        std::string("invariant failed: ") + msg); \
  } while (0)

inline int sgn(const Rat& x) { return sgn(x.get_num()); }

// Parses "num", "num/den" or a plain decimal like "-1.25".
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational");
  auto dot = s.find('.');
  try {
    if (dot != std::string::npos && s.find('/') == std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      size_t frac_len = s.size() - dot - 1;
      mpz_class num(digits, 10);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
      Rat r(num, den);
      r.canonicalize();
      return r;
    }
    Rat r(s, 10);
    if (r.get_den() == 0) throw parse_error("zero denominator: " + s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw parse_error("malformed rational: " + s);
  }
}

inline std::string rat_str(const Rat& x) { return x.get_str(); }

inline double rat_dbl(const Rat& x) { return x.get_d(); }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

}  // namespace kinvor
