#include "core/polynomial.hpp"

#include <sstream>

namespace kinvor {

Rat RatPoly::eval(const Rat& t) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return RatPoly(std::move(d));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-() const {
  std::vector<Rat> r(c_);
  for (auto& v : r) v = -v;
  return RatPoly(std::move(r));
}

RatPoly RatPoly::scaled(const Rat& s) const {
  std::vector<Rat> r(c_);
  for (auto& v : r) v *= s;
  return RatPoly(std::move(r));
}

void RatPoly::divmod(const RatPoly& n, const RatPoly& d, RatPoly& q, RatPoly& r) {
  KV_CHECK(!d.is_zero(), "division by zero polynomial");
  std::vector<Rat> rem = n.c_;
  std::vector<Rat> quot;
  int dn = static_cast<int>(rem.size()) - 1;
  int dd = d.degree();
  if (dn < dd) {
    q = RatPoly();
    r = n;
    return;
  }
  quot.assign(dn - dd + 1, Rat(0));
  for (int k = dn - dd; k >= 0; --k) {
    Rat f = rem[k + dd] / d.c_[dd];
    quot[k] = f;
    for (int i = 0; i <= dd; ++i) rem[k + i] -= f * d.c_[i];
  }
  q = RatPoly(std::move(quot));
  r = RatPoly(std::move(rem));
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rat(1) / a.leading());
}

RatPoly RatPoly::square_free_part() const {
  if (is_zero()) throw ZeroPolynomial();
  if (degree() == 0) return RatPoly{Rat(1)};
  RatPoly g = gcd(*this, derivative());
  if (g.degree() == 0) {
    return scaled(Rat(1) / leading());
  }
  RatPoly q, r;
  divmod(*this, g, q, r);
  KV_CHECK(r.is_zero(), "square-free division must be exact");
  return q.scaled(Rat(1) / q.leading());
}

Rat RatPoly::root_bound() const {
  if (degree() <= 0) return Rat(1);
  Rat m(0);
  for (size_t i = 0; i + 1 < c_.size(); ++i) {
    Rat a = rat_abs(c_[i] / c_.back());
    if (a > m) m = a;
  }
  return Rat(m + 1);
}

std::string RatPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& a = c_[i];
    if (sgn(a) == 0) continue;
    if (!first) os << (sgn(a) > 0 ? " + " : " - ");
    else if (sgn(a) < 0) os << "-";
    first = false;
    Rat mag = rat_abs(a);
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace kinvor
