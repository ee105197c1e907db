#include "fgsc/charmodel.hpp"

#include <algorithm>

#include "fgsc/errors.hpp"

namespace fgsc {

// ---- UPoly ----

UPoly operator+(const UPoly &a, const UPoly &b) {
  UPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.strip();
  return r;
}

UPoly operator-(const UPoly &a, const UPoly &b) { return a + (-b); }

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto &c : r.c_) c = -c;
  return r;
}

UPoly operator*(const UPoly &a, const UPoly &b) {
  UPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.strip();
  return r;
}

UPoly UPoly::scaled(const Rat &s) const {
  UPoly r;
  if (s == 0) return r;
  r.c_ = c_;
  for (auto &c : r.c_) c *= s;
  return r;
}

void UPoly::divmod(const UPoly &a, const UPoly &b, UPoly &q, UPoly &r) {
  if (b.is_zero()) throw ring_mismatch("UPoly division by zero");
  q = UPoly();
  r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int d = r.degree() - b.degree();
    Rat c = r.lead() / b.lead();
    UPoly term;
    term.c_.assign(size_t(d) + 1, Rat(0));
    term.c_.back() = c;
    q = q + term;
    r = r - term * b;
  }
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = a.scaled(Rat(1) / a.lead()); // monic
  return a;
}

std::string UPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k] == 0) continue;
    if (!s.empty()) s += "+";
    s += c_[k].str();
    if (k >= 1) s += "*t";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

// ---- RatFn ----

RatFn::RatFn(UPoly n, UPoly d) {
  if (d.is_zero()) throw ring_mismatch("RatFn with zero denominator");
  if (n.is_zero()) {
    num_ = UPoly();
    den_ = UPoly(Rat(1));
    return;
  }
  UPoly g = UPoly::gcd(n, d);
  UPoly q, r;
  UPoly::divmod(n, g, q, r);
  n = q;
  UPoly::divmod(d, g, q, r);
  d = q;
  Rat lc = d.lead();
  num_ = n.scaled(Rat(1) / lc);
  den_ = d.scaled(Rat(1) / lc);
}

RatFn operator+(const RatFn &a, const RatFn &b) {
  return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFn operator-(const RatFn &a, const RatFn &b) {
  return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFn operator*(const RatFn &a, const RatFn &b) {
  return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}
RatFn operator/(const RatFn &a, const RatFn &b) {
  if (b.is_zero()) throw ring_mismatch("RatFn division by zero");
  return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}
RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RatFn::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---- CharElem ----

CharElem operator+(const CharElem &a, const CharElem &b) {
  CharElem r = a;
  for (auto &[k, c] : b.terms_) r.add_term(k, c);
  return r;
}
CharElem operator-(const CharElem &a, const CharElem &b) {
  CharElem r = a;
  for (auto &[k, c] : b.terms_) r.add_term(k, -c);
  return r;
}
CharElem CharElem::operator-() const {
  CharElem r;
  for (auto &[k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}
CharElem operator*(const CharElem &a, const CharElem &b) {
  CharElem r;
  for (auto &[ka, ca] : a.terms_)
    for (auto &[kb, cb] : b.terms_) r.add_term(wv_add(ka, kb), ca * cb);
  return r;
}
CharElem CharElem::scaled(const RatFn &c) const {
  CharElem r;
  if (c.is_zero()) return r;
  for (auto &[k, v] : terms_) r.add_term(k, v * c);
  return r;
}

// ---- CharModel ----

CharElem CharModel::from_param(const ParamPoly &p) const {
  CharElem r;
  for (auto &[key, c] : p.terms()) {
    if (key.second > 0) continue; // mu2 = 0 in the multiplicative family
    RatFn v = RatFn(c);
    for (int k = 0; k < key.first; ++k) v = v * t();
    r.add_term(wv_zero(), v);
  }
  return r;
}

CharElem CharModel::weight_class(const WeightVec &lam, int block) const {
  if (block != 0)
    throw ring_mismatch("character model has a single variable copy");
  if (wv_is_zero(lam)) return zero();
  // (1 - E^{-lambda}) / t
  CharElem r;
  RatFn inv_t = RatFn(Rat(1)) / t();
  r.add_term(wv_zero(), inv_t);
  r.add_term(wv_neg(lam), -inv_t);
  return r;
}

CharElem CharModel::weyl_act(Elt w, const S &f) const {
  CharElem r;
  for (auto &[k, c] : f.terms()) r.add_term(rs_.act(w, k), c);
  return r;
}

CharElem CharModel::star(const S &f) const {
  CharElem r;
  for (auto &[k, c] : f.terms()) r.add_term(wv_neg(k), c);
  return r;
}

namespace {

long dot(const WeightVec &a, const WeightVec &b) {
  return long(a[0]) * b[0] + long(a[1]) * b[1] + long(a[2]) * b[2] +
         long(a[3]) * b[3];
}

// floor division for possibly negative numerators
long fdiv(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

} // namespace

CharElem CharModel::divide_by_one_minus_char(const S &f,
                                             const WeightVec &beta) const {
  if (wv_is_zero(beta))
    throw ring_mismatch("divide_by_one_minus_char: zero exponent");
  if (f.is_zero()) return f;

  // Divisibility in Q(t)[Z^n] by (1 - E^beta): the image in the group
  // algebra of Z^n / Z beta must vanish, i.e. every fiber sum is zero.
  const long bb = dot(beta, beta);
  std::map<WeightVec, RatFn> fibers;
  for (auto &[k, c] : f.terms()) {
    long s = fdiv(dot(k, beta), bb);
    WeightVec rep = k;
    for (int i = 0; i < 4; ++i) rep[i] -= int(s) * beta[i];
    auto it = fibers.find(rep);
    if (it == fibers.end()) {
      fibers.emplace(rep, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) fibers.erase(it);
    }
  }
  if (!fibers.empty())
    throw not_divisible("character element not divisible by 1 - E^beta");

  // Greedy reduction from the phi-leading term; terminates because the
  // quotient has finite support.
  CharElem r = f, q;
  long guard = 0;
  const long max_steps = 16L * long(f.terms().size() + 4) * 64;
  while (!r.is_zero()) {
    if (++guard > max_steps)
      throw not_divisible("divide_by_one_minus_char: reduction did not settle");
    auto lead = r.terms().begin();
    long best = dot(lead->first, beta);
    for (auto it = r.terms().begin(); it != r.terms().end(); ++it) {
      long v = dot(it->first, beta);
      if (v > best || (v == best && it->first > lead->first)) {
        best = v;
        lead = it;
      }
    }
    // r's lead c*E^{mu} is cancelled by the quotient term -c*E^{mu-beta}
    WeightVec mu = lead->first;
    RatFn c = lead->second;
    WeightVec shifted = wv_sub(mu, beta);
    q.add_term(shifted, -c);
    // r -= (-c E^{shifted})(1 - E^beta) = -c E^{shifted} + c E^{mu}
    r.add_term(shifted, c);
    r.add_term(mu, -c);
  }
  return q;
}

CharElem CharModel::divide_by_root(const S &f, int root_idx) const {
  // y_gamma = (1 - E^{-gamma})/t, so f / y_gamma = t * f / (1 - E^{-gamma})
  CharElem tf = f.scaled(t());
  return divide_by_one_minus_char(tf, wv_neg(rs_.root(root_idx)));
}

std::optional<CharElem> CharModel::try_divide_by_root(const S &f,
                                                      int root_idx) const {
  try {
    return divide_by_root(f, root_idx);
  } catch (const not_divisible &) {
    return std::nullopt;
  }
}

CharElem CharModel::kappa_root(int root_idx) const {
  int neg = rs_.negate_root(root_idx);
  CharElem num = root_class(root_idx) + root_class(neg);
  return divide_by_root(divide_by_root(num, root_idx), neg);
}

CharElem CharModel::theta_root(int root_idx) const {
  int neg = rs_.negate_root(root_idx);
  return divide_by_root(-root_class(neg), root_idx);
}

CharElem CharModel::invert_unit_scalar(const S &f) const {
  if (f.terms().size() != 1)
    throw ring_mismatch("character inverse: only monomial units supported");
  auto &[k, c] = *f.terms().begin();
  return CharElem::monomial(wv_neg(k), RatFn(Rat(1)) / c);
}

} // namespace fgsc
