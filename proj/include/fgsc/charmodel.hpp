#ifndef FGSC_CHARMODEL_HPP
#define FGSC_CHARMODEL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgsc/param.hpp"
#include "fgsc/rootsystem.hpp"

namespace fgsc {

// Univariate polynomial in t over the rationals, dense and normalized.
class UPoly {
public:
  UPoly() = default;
  UPoly(Rat c) { // NOLINT: intentional implicit
    if (c != 0) c_.push_back(std::move(c));
  }
  static UPoly t(int k = 1) {
    UPoly p;
    p.c_.assign(size_t(k) + 1, Rat(0));
    p.c_.back() = 1;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; } // -1 for zero
  const Rat &lead() const { return c_.back(); }
  Rat coeff(int k) const { return k < int(c_.size()) ? c_[k] : Rat(0); }

  friend UPoly operator+(const UPoly &a, const UPoly &b);
  friend UPoly operator-(const UPoly &a, const UPoly &b);
  friend UPoly operator*(const UPoly &a, const UPoly &b);
  UPoly operator-() const;
  bool operator==(const UPoly &o) const { return c_ == o.c_; }

  UPoly scaled(const Rat &s) const;
  // quotient and remainder; exact division available via rem check
  static void divmod(const UPoly &a, const UPoly &b, UPoly &q, UPoly &r);
  static UPoly gcd(UPoly a, UPoly b); // monic

  std::string str() const;

private:
  void strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// Rational function in t: num/den with den monic and gcd(num, den) = 1.
class RatFn {
public:
  RatFn() : num_(), den_(Rat(1)) {}
  RatFn(Rat c) : num_(std::move(c)), den_(Rat(1)) {} // NOLINT
  RatFn(UPoly n, UPoly d);
  static RatFn t(int k = 1) { return RatFn(UPoly::t(k), UPoly(Rat(1))); }

  const UPoly &num() const { return num_; }
  const UPoly &den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == UPoly(Rat(1)); }

  friend RatFn operator+(const RatFn &a, const RatFn &b);
  friend RatFn operator-(const RatFn &a, const RatFn &b);
  friend RatFn operator*(const RatFn &a, const RatFn &b);
  friend RatFn operator/(const RatFn &a, const RatFn &b);
  RatFn operator-() const;
  bool operator==(const RatFn &o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  std::string str() const;

private:
  UPoly num_, den_;
};

// Finite map lambda -> RatFn representing sum c_lambda E^lambda in the
// group algebra of the root lattice over Q(t).
class CharElem {
public:
  CharElem() = default;
  static CharElem monomial(const WeightVec &lam, RatFn c) {
    CharElem e;
    if (!c.is_zero()) e.terms_[lam] = std::move(c);
    return e;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<WeightVec, RatFn> &terms() const { return terms_; }
  RatFn coeff(const WeightVec &lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? RatFn() : it->second;
  }
  void add_term(const WeightVec &lam, const RatFn &c) {
    if (c.is_zero()) return;
    auto it = terms_.find(lam);
    if (it == terms_.end()) {
      terms_.emplace(lam, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend CharElem operator+(const CharElem &a, const CharElem &b);
  friend CharElem operator-(const CharElem &a, const CharElem &b);
  friend CharElem operator*(const CharElem &a, const CharElem &b);
  CharElem operator-() const;
  bool operator==(const CharElem &o) const { return terms_ == o.terms_; }

  CharElem scaled(const RatFn &c) const;
  bool all_polynomial() const {
    for (auto &[k, c] : terms_)
      if (!c.is_polynomial()) return false;
    return true;
  }

private:
  std::map<WeightVec, RatFn> terms_;
};

// Exact multiplicative-law backend: y_lambda = (1 - E^{-lambda}) / t, with t
// symbolic or specialized.  Satisfies (1 - t y_lambda)(1 - t y_nu) =
// 1 - t y_{lambda+nu} exactly, with no truncation anywhere.
class CharModel {
public:
  using S = CharElem;
  using Elt = RootSystem::Elt;

  CharModel(const RootSystem &rs, std::optional<Rat> t_value = std::nullopt)
      : rs_(rs), t_value_(std::move(t_value)) {}

  const RootSystem &rs() const { return rs_; }
  const std::optional<Rat> &t_value() const { return t_value_; }
  RatFn t() const { return t_value_ ? RatFn(*t_value_) : RatFn::t(); }

  S zero() const { return CharElem(); }
  S one() const { return CharElem::monomial(wv_zero(), RatFn(Rat(1))); }
  S from_param(const ParamPoly &c) const;
  bool is_zero(const S &s) const { return s.is_zero(); }
  bool equal(const S &a, const S &b) const { return a == b; }

  S law_mu1() const { return CharElem::monomial(wv_zero(), t()); }
  S law_mu2() const { return zero(); }

  S character(const WeightVec &lam) const { // E^lambda
    return CharElem::monomial(lam, RatFn(Rat(1)));
  }
  S weight_class(const WeightVec &lam, int block = 0) const;
  S root_class(int root_idx, int block = 0) const {
    return weight_class(rs_.root(root_idx), block);
  }

  S weyl_act(Elt w, const S &f) const;
  S star(const S &f) const;

  S divide_by_root(const S &f, int root_idx) const;
  std::optional<S> try_divide_by_root(const S &f, int root_idx) const;

  S kappa_root(int root_idx) const;
  S theta_root(int root_idx) const; // = E^beta

  S invert_unit_scalar(const S &f) const; // monomial units only

  // Exact division by 1 - E^{beta}; throws not_divisible.
  S divide_by_one_minus_char(const S &f, const WeightVec &beta) const;

private:
  const RootSystem &rs_;
  std::optional<Rat> t_value_;
};

} // namespace fgsc

#endif
