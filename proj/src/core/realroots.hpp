#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "core/polynomial.hpp"

namespace kinvor {

enum class Side { Before, At, After };

// A real algebraic number: either an exact rational or the unique root of a
// square-free polynomial inside an open isolating interval with rational
// endpoints. The isolating interval refines monotonically (cached); all
// comparisons are exact.
class AlgebraicTime {
 public:
  AlgebraicTime() : AlgebraicTime(Rat(0)) {}
  explicit AlgebraicTime(Rat exact);
  // `f` square-free, f(lo) != 0, f(hi) != 0, exactly one root in (lo, hi).
  AlgebraicTime(RatPoly f, Rat lo, Rat hi);

  bool is_exact() const;
  // Exact value when known (isolation may collapse to a rational).
  const Rat& exact_value() const;
  const RatPoly& defining_poly() const;  // (t - r) for exact values
  std::pair<Rat, Rat> interval() const;  // degenerate [r, r] when exact
  double approx() const;                 // refined to width <= 1e-12 first
  void refine() const;                   // halve the isolating interval
  void refine_below(const Rat& width) const;

  std::string str() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  friend int compare(const AlgebraicTime& a, const AlgebraicTime& b);
  friend int compare(const AlgebraicTime& a, const Rat& r);
  friend int sign_at(const RatPoly& p, const AlgebraicTime& t, Side side);
};

// Exact three-way comparisons (never epsilon-based).
int compare(const AlgebraicTime& a, const AlgebraicTime& b);
int compare(const AlgebraicTime& a, const Rat& r);

inline bool operator<(const AlgebraicTime& a, const AlgebraicTime& b) { return compare(a, b) < 0; }
inline bool operator==(const AlgebraicTime& a, const AlgebraicTime& b) { return compare(a, b) == 0; }
inline bool operator<=(const AlgebraicTime& a, const AlgebraicTime& b) { return compare(a, b) <= 0; }

struct IsolatedRoot {
  AlgebraicTime time;
  bool multiple = false;  // root of gcd(p, p'): a tangency, i.e. a general-position violation
};

// All distinct real roots of p in the closed window [lo, hi], ascending.
// Throws ZeroPolynomial when p == 0.
std::vector<IsolatedRoot> isolate_roots(const RatPoly& p, const Rat& lo, const Rat& hi);

// All distinct real roots of p in (lo, +inf).
std::vector<IsolatedRoot> isolate_roots_after(const RatPoly& p, const Rat& lo);

// Exact sign of p at t, or the one-sided limit sign just before/after t.
int sign_at(const RatPoly& p, const AlgebraicTime& t, Side side);

}  // namespace kinvor
