#pragma once

#include <string>
#include <vector>

#include "core/rational.hpp"

namespace kinvor {

struct ZeroPolynomial : std::runtime_error {
  ZeroPolynomial() : std::runtime_error("ZeroPolynomial") {}
};

// Rational-coefficient univariate polynomial, coefficients low-to-high.
// Canonical form: no trailing zero leading coefficient (zero poly = empty).
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(std::initializer_list<Rat> cs) : c_(cs) { trim(); }
  explicit RatPoly(std::vector<Rat> cs) : c_(std::move(cs)) { trim(); }
  static RatPoly constant(Rat v) { return RatPoly{std::move(v)}; }
  static RatPoly linear(Rat c0, Rat c1) { return RatPoly{std::move(c0), std::move(c1)}; }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& operator[](size_t i) const { return c_[i]; }
  Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const Rat& leading() const { return c_.back(); }

  Rat eval(const Rat& t) const;
  int sign_at(const Rat& t) const { return sgn(eval(t)); }

  RatPoly derivative() const;
  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator-() const;
  RatPoly scaled(const Rat& s) const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

  // Exact euclidean division: *this = q*d + r with deg r < deg d.
  static void divmod(const RatPoly& n, const RatPoly& d, RatPoly& q, RatPoly& r);

  // Monic gcd (gcd of zero polys is zero).
  static RatPoly gcd(RatPoly a, RatPoly b);

  // p / gcd(p, p'), normalized monic. Throws ZeroPolynomial on zero input.
  RatPoly square_free_part() const;

  // Cauchy-style bound: all real roots lie in [-B, B].
  Rat root_bound() const;

  std::string str() const;

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

}  // namespace kinvor
