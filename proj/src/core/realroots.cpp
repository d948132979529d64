#include "core/realroots.hpp"

#include <sstream>

namespace kinvor {

namespace {

std::vector<RatPoly> sturm_chain(const RatPoly& f) {
  std::vector<RatPoly> s;
  s.push_back(f);
  RatPoly d = f.derivative();
  if (d.is_zero()) return s;
  s.push_back(d);
  for (;;) {
    RatPoly q, r;
    RatPoly::divmod(s[s.size() - 2], s[s.size() - 1], q, r);
    if (r.is_zero()) break;
    s.push_back(-r);
  }
  return s;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rat& x) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// Number of roots in the half-open interval (a, b].
int roots_in(const std::vector<RatPoly>& chain, const Rat& a, const Rat& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

}  // namespace

struct AlgebraicTime::Impl {
  bool exact = false;
  Rat value;    // when exact
  RatPoly f;    // square-free defining polynomial
  mutable Rat lo, hi;  // open isolating interval, f(lo) != 0 != f(hi)
  mutable std::vector<RatPoly> chain;  // lazily built when needed

  void make_exact(Rat v) {
    exact = true;
    value = std::move(v);
    lo = value;
    hi = value;
  }

  void refine_once() const {
    if (exact) return;
    Rat mid = (lo + hi) / 2;
    int sm = f.sign_at(mid);
    if (sm == 0) {
      const_cast<Impl*>(this)->make_exact(std::move(mid));
      return;
    }
    if (sm == f.sign_at(lo)) lo = mid; else hi = mid;
  }
};

AlgebraicTime::AlgebraicTime(Rat r) : impl_(std::make_shared<Impl>()) {
  impl_->make_exact(std::move(r));
  impl_->f = RatPoly{Rat(-impl_->value), Rat(1)};
}

AlgebraicTime::AlgebraicTime(RatPoly f, Rat lo, Rat hi) : impl_(std::make_shared<Impl>()) {
  KV_CHECK(f.sign_at(lo) != 0 && f.sign_at(hi) != 0 && lo < hi, "bad isolating interval");
  impl_->f = std::move(f);
  impl_->lo = std::move(lo);
  impl_->hi = std::move(hi);
  KV_CHECK(impl_->f.sign_at(impl_->lo) * impl_->f.sign_at(impl_->hi) < 0,
           "isolating interval must straddle a simple root");
}

bool AlgebraicTime::is_exact() const { return impl_->exact; }

const Rat& AlgebraicTime::exact_value() const {
  KV_CHECK(impl_->exact, "exact_value on interval-represented time");
  return impl_->value;
}

const RatPoly& AlgebraicTime::defining_poly() const { return impl_->f; }

std::pair<Rat, Rat> AlgebraicTime::interval() const { return {impl_->lo, impl_->hi}; }

void AlgebraicTime::refine() const { impl_->refine_once(); }

void AlgebraicTime::refine_below(const Rat& width) const {
  while (!impl_->exact && impl_->hi - impl_->lo >= width) impl_->refine_once();
}

double AlgebraicTime::approx() const {
  refine_below(Rat(1, 1000000000000L));
  if (impl_->exact) return rat_dbl(impl_->value);
  return rat_dbl(Rat((impl_->lo + impl_->hi) / 2));
}

std::string AlgebraicTime::str() const {
  std::ostringstream os;
  if (impl_->exact) {
    os << rat_str(impl_->value);
  } else {
    os << "root of " << impl_->f.str() << " in (" << rat_str(impl_->lo) << ", "
       << rat_str(impl_->hi) << ")";
  }
  return os.str();
}

int compare(const AlgebraicTime& a, const Rat& r) {
  const auto& ia = *a.impl_;
  if (ia.exact) return ia.value < r ? -1 : (ia.value > r ? 1 : 0);
  if (r <= ia.lo) return 1;
  if (r >= ia.hi) return -1;
  int sr = ia.f.sign_at(r);
  if (sr == 0) {
    const_cast<AlgebraicTime&>(a).impl_->make_exact(r);
    return 0;
  }
  // single simple root in (lo, hi): the root is left of r iff the sign flips on (lo, r)
  return ia.f.sign_at(ia.lo) * sr < 0 ? -1 : 1;
}

int compare(const AlgebraicTime& a, const AlgebraicTime& b) {
  if (a.impl_ == b.impl_) return 0;
  for (;;) {
    const auto& ia = *a.impl_;
    const auto& ib = *b.impl_;
    if (ia.exact) return -compare(b, ia.value);
    if (ib.exact) return compare(a, ib.value);
    if (ia.hi <= ib.lo) return -1;
    if (ib.hi <= ia.lo) return 1;
    // overlapping intervals: equal iff they share a root of gcd(fa, fb)
    RatPoly g = RatPoly::gcd(ia.f, ib.f);
    if (g.degree() >= 1) {
      bool a_root_of_g = g.sign_at(ia.lo) * g.sign_at(ia.hi) < 0;
      bool b_root_of_g = g.sign_at(ib.lo) * g.sign_at(ib.hi) < 0;
      if (a_root_of_g && b_root_of_g) {
        Rat l = std::max(ia.lo, ib.lo), h = std::min(ia.hi, ib.hi);
        if (compare(a, l) > 0 && compare(a, h) < 0 && compare(b, l) > 0 && compare(b, h) < 0 &&
            g.sign_at(l) * g.sign_at(h) < 0) {
          return 0;
        }
      } else if (!a_root_of_g && !b_root_of_g) {
        // no common root possible; fall through and separate by refinement
      }
    }
    a.refine();
    b.refine();
  }
}

int sign_at(const RatPoly& p, const AlgebraicTime& t, Side side) {
  if (p.is_zero()) return 0;
  auto& it = *t.impl_;
  if (it.exact) {
    const Rat& r = it.value;
    int s = p.sign_at(r);
    if (side == Side::At || s != 0) return s;
    RatPoly d = p;
    for (int m = 1; m <= p.degree(); ++m) {
      d = d.derivative();
      int sm = d.sign_at(r);
      if (sm != 0) return side == Side::After ? sm : (m % 2 == 0 ? sm : -sm);
    }
    return 0;
  }
  RatPoly psf = p.square_free_part();
  RatPoly g = RatPoly::gcd(psf, it.f);
  bool vanishes = g.degree() >= 1 && g.sign_at(it.lo) * g.sign_at(it.hi) < 0;
  if (side == Side::At && vanishes) return 0;
  auto chain = sturm_chain(psf);
  if (!vanishes) {
    // refine until the interval is free of roots of p, then read the constant sign
    while (roots_in(chain, it.lo, it.hi) > 0 || psf.sign_at(it.hi) == 0) t.refine();
    if (t.is_exact()) return sign_at(p, t, side);
    return p.sign_at(Rat((it.lo + it.hi) / 2));
  }
  // p vanishes at t: isolate t against p's other roots, then read endpoint signs
  while (roots_in(chain, it.lo, it.hi) != 1 || psf.sign_at(it.hi) == 0 ||
         psf.sign_at(it.lo) == 0) {
    t.refine();
    if (t.is_exact()) return sign_at(p, t, side);
  }
  return side == Side::After ? p.sign_at(it.hi) : p.sign_at(it.lo);
}

namespace {

void isolate_rec(const std::vector<RatPoly>& chain, const RatPoly& f, const Rat& lo,
                 const Rat& hi, std::vector<AlgebraicTime>& out) {
  int n = roots_in(chain, lo, hi);
  if (f.sign_at(hi) == 0) --n;  // defer: hi handled by caller as an exact endpoint
  if (n <= 0) return;
  Rat mid = (lo + hi) / 2;
  if (f.sign_at(mid) == 0) {
    isolate_rec(chain, f, lo, mid, out);
    out.emplace_back(mid);
    isolate_rec(chain, f, mid, hi, out);
    return;
  }
  if (n == 1 && roots_in(chain, lo, mid) + (f.sign_at(mid) == 0 ? 0 : 0) >= 0) {
    int left = roots_in(chain, lo, mid);
    if (left == 1) {
      out.emplace_back(f, lo, mid);
    } else if (left == 0) {
      out.emplace_back(f, mid, hi);
    } else {
      KV_CHECK(false, "root count mismatch");
    }
    return;
  }
  isolate_rec(chain, f, lo, mid, out);
  isolate_rec(chain, f, mid, hi, out);
}

std::vector<IsolatedRoot> isolate_impl(const RatPoly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) throw ZeroPolynomial();
  std::vector<IsolatedRoot> result;
  if (p.degree() == 0 || lo > hi) return result;
  RatPoly f = p.square_free_part();
  RatPoly mult = RatPoly::gcd(p, p.derivative());  // nonconstant iff p has repeated roots
  auto chain = sturm_chain(f);
  std::vector<AlgebraicTime> roots;
  if (f.sign_at(lo) == 0) roots.emplace_back(lo);
  isolate_rec(chain, f, lo, hi, roots);
  if (f.sign_at(hi) == 0) roots.emplace_back(hi);
  for (auto& r : roots) {
    bool multiple = mult.degree() >= 1 && sign_at(mult, r, Side::At) == 0;
    result.push_back({std::move(r), multiple});
  }
  return result;
}

}  // namespace

std::vector<IsolatedRoot> isolate_roots(const RatPoly& p, const Rat& lo, const Rat& hi) {
  return isolate_impl(p, lo, hi);
}

std::vector<IsolatedRoot> isolate_roots_after(const RatPoly& p, const Rat& lo) {
  if (p.is_zero()) throw ZeroPolynomial();
  Rat bound = p.root_bound();
  if (bound <= lo) return {};
  auto all = isolate_impl(p, lo, bound);
  std::vector<IsolatedRoot> out;
  for (auto& r : all) {
    if (compare(r.time, lo) > 0) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace kinvor
