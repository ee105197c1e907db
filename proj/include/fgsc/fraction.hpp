#ifndef FGSC_FRACTION_HPP
#define FGSC_FRACTION_HPP

#include <algorithm>
#include <vector>

#include "fgsc/errors.hpp"
#include "fgsc/rootsystem.hpp"

namespace fgsc {

// Scalar with a symbolic denominator: num / prod_{gamma in den} x_gamma.
// Denominators only ever contain roots of the ambient system, kept as a
// sorted index multiset and never expanded, so valuations stay exact.
template <class M> struct Frac {
  typename M::S num;
  std::vector<int> den; // sorted root indices, with multiplicity
};

template <class M> Frac<M> frac_scalar(const M &m, typename M::S s) {
  return Frac<M>{std::move(s), {}};
}
template <class M> Frac<M> frac_zero(const M &m) { return frac_scalar(m, m.zero()); }
template <class M> Frac<M> frac_one(const M &m) { return frac_scalar(m, m.one()); }

// 1 / x_gamma
template <class M> Frac<M> frac_inv_root(const M &m, int root_idx) {
  return Frac<M>{m.one(), {root_idx}};
}

template <class M>
typename M::S den_product(const M &m, const std::vector<int> &den) {
  auto p = m.one();
  for (int g : den) p = p * m.root_class(g);
  return p;
}

template <class M> bool frac_is_zero(const M &m, const Frac<M> &f) {
  return m.is_zero(f.num);
}

template <class M> Frac<M> frac_neg(const M &, Frac<M> f) {
  f.num = -f.num;
  return f;
}

template <class M> Frac<M> frac_mul(const M &m, const Frac<M> &a, const Frac<M> &b) {
  Frac<M> r;
  r.num = a.num * b.num;
  r.den.reserve(a.den.size() + b.den.size());
  std::merge(a.den.begin(), a.den.end(), b.den.begin(), b.den.end(),
             std::back_inserter(r.den));
  return r;
}

template <class M>
Frac<M> frac_mul_scalar(const M &m, const typename M::S &s, Frac<M> f) {
  f.num = s * f.num;
  return f;
}

template <class M> Frac<M> frac_add(const M &m, const Frac<M> &a, const Frac<M> &b) {
  // common denominator: per-root maximum multiplicity
  Frac<M> r;
  std::vector<int> only_a, only_b;
  {
    auto ia = a.den.begin(), ib = b.den.begin();
    while (ia != a.den.end() || ib != b.den.end()) {
      if (ib == b.den.end() || (ia != a.den.end() && *ia < *ib)) {
        r.den.push_back(*ia);
        only_a.push_back(*ia++);
      } else if (ia == a.den.end() || *ib < *ia) {
        r.den.push_back(*ib);
        only_b.push_back(*ib++);
      } else {
        r.den.push_back(*ia);
        ++ia;
        ++ib;
      }
    }
  }
  // numerators scale by the complementary factors
  r.num = a.num * den_product(m, only_b) + b.num * den_product(m, only_a);
  return r;
}

template <class M> Frac<M> frac_sub(const M &m, const Frac<M> &a, const Frac<M> &b) {
  return frac_add(m, a, frac_neg(m, b));
}

// Remove denominator factors dividing the numerator exactly.
template <class M> Frac<M> frac_simplify(const M &m, Frac<M> f) {
  if (m.is_zero(f.num)) {
    f.den.clear();
    return f;
  }
  bool progress = true;
  while (progress && !f.den.empty()) {
    progress = false;
    for (size_t k = 0; k < f.den.size(); ++k) {
      if (auto q = m.try_divide_by_root(f.num, f.den[k])) {
        f.num = std::move(*q);
        f.den.erase(f.den.begin() + long(k));
        progress = true;
        break;
      }
    }
  }
  return f;
}

// Fully reduce and require an S element; throws otherwise.
template <class M> typename M::S frac_to_scalar(const M &m, const Frac<M> &f) {
  Frac<M> s = frac_simplify(m, f);
  if (!s.den.empty())
    throw not_divisible("fraction does not simplify to the base ring");
  return s.num;
}

// Equality by cross-multiplication (no division, no trust loss).
template <class M> bool frac_eq(const M &m, const Frac<M> &a, const Frac<M> &b) {
  return frac_is_zero(m, frac_sub(m, a, b));
}

template <class M> Frac<M> frac_weyl_act(const M &m, RootSystem::Elt w, const Frac<M> &f) {
  Frac<M> r;
  r.num = m.weyl_act(w, f.num);
  r.den.reserve(f.den.size());
  for (int g : f.den) r.den.push_back(m.rs().act_on_root(w, g));
  std::sort(r.den.begin(), r.den.end());
  return r;
}

template <class M> Frac<M> frac_star(const M &m, const Frac<M> &f) {
  Frac<M> r;
  r.num = m.star(f.num);
  r.den.reserve(f.den.size());
  for (int g : f.den) r.den.push_back(m.rs().negate_root(g));
  std::sort(r.den.begin(), r.den.end());
  return r;
}

// Inverse of a fraction whose (simplified) numerator is a unit of S.
template <class M> Frac<M> frac_invert(const M &m, const Frac<M> &f) {
  Frac<M> s = frac_simplify(m, f);
  Frac<M> r;
  r.num = m.invert_unit_scalar(s.num) * den_product(m, s.den);
  return r;
}

} // namespace fgsc

#endif
