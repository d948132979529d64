#pragma once

#include "core/rational.hpp"

namespace kinvor {

struct Vec2 {
  Rat x, y;

  Vec2() : x(0), y(0) {}
  Vec2(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}

  Vec2 operator+(const Vec2& o) const { return {Rat(x + o.x), Rat(y + o.y)}; }
  Vec2 operator-(const Vec2& o) const { return {Rat(x - o.x), Rat(y - o.y)}; }
  Vec2 operator-() const { return {Rat(-x), Rat(-y)}; }
  Vec2 operator*(const Rat& s) const { return {Rat(x * s), Rat(y * s)}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Vec2& o) const { return !(*this == o); }
};

inline Rat dot(const Vec2& a, const Vec2& b) { return Rat(a.x * b.x + a.y * b.y); }
inline Rat cross(const Vec2& a, const Vec2& b) { return Rat(a.x * b.y - a.y * b.x); }

// Counterclockwise quarter turn.
inline Vec2 perp(const Vec2& a) { return {Rat(-a.y), a.x}; }

inline bool is_zero(const Vec2& a) { return sgn(a.x) == 0 && sgn(a.y) == 0; }

// True iff b is a strictly positive multiple of a (both nonzero, parallel, same sense).
inline bool same_direction(const Vec2& a, const Vec2& b) {
  return sgn(cross(a, b)) == 0 && sgn(dot(a, b)) > 0;
}

// Exact circular comparison of nonzero direction vectors, counterclockwise
// from the positive x-axis. Returns -1/0/+1 like a three-way compare; 0 means
// same direction (positive multiples).
inline int direction_compare(const Vec2& a, const Vec2& b) {
  auto half = [](const Vec2& v) {  // 0 for upper half-plane incl. +x axis, 1 below
    int sy = sgn(v.y);
    if (sy != 0) return sy > 0 ? 0 : 1;
    return sgn(v.x) > 0 ? 0 : 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb ? -1 : 1;
  int c = sgn(cross(a, b));
  return c > 0 ? -1 : (c < 0 ? 1 : 0);
}

// Strictly-inside test for the open CCW arc from `from` to `to` (arc assumed < full turn).
inline bool direction_in_open_arc(const Vec2& d, const Vec2& from, const Vec2& to) {
  int cf = sgn(cross(from, d));
  int ct = sgn(cross(d, to));
  int ft = sgn(cross(from, to));
  if (ft > 0) return cf > 0 && ct > 0;               // arc shorter than pi
  if (ft < 0) return !(cf < 0 && ct < 0) && cf != 0 && ct != 0;  // longer than pi
  // from/to parallel: arc is either a half turn (opposite sense) or degenerate
  if (sgn(dot(from, to)) < 0) return cf > 0;
  return false;
}

}  // namespace kinvor
