#ifndef FGSC_PARAM_HPP
#define FGSC_PARAM_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "fgsc/errors.hpp"

namespace fgsc {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Polynomial in the two law parameters mu1, mu2 with exact rational
// coefficients.  This is the coefficient ring for all truncated series:
// the base ring Z[mu1,mu2] extended to rational coefficients so that
// logarithms and exponentials of group laws exist.
class ParamPoly {
public:
  using Key = std::pair<uint8_t, uint8_t>; // (mu1 exponent, mu2 exponent)

  ParamPoly() = default;
  ParamPoly(int v) { // NOLINT: intentional implicit
    if (v != 0) terms_[{0, 0}] = v;
  }
  explicit ParamPoly(const Rat &v) {
    if (v != 0) terms_[{0, 0}] = v;
  }

  static ParamPoly monomial(int e1, int e2, Rat c = Rat(1)) {
    ParamPoly p;
    if (c != 0) p.terms_[{uint8_t(e1), uint8_t(e2)}] = std::move(c);
    return p;
  }
  static ParamPoly mu1() { return monomial(1, 0); }
  static ParamPoly mu2() { return monomial(0, 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return is_rational() && rational_value() == 1; }

  // True when the polynomial is a plain constant (no mu dependence).
  bool is_rational() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
  }
  Rat rational_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_rational()) throw ring_mismatch("ParamPoly: not a constant");
    return terms_.begin()->second;
  }

  bool has_integer_coeffs() const {
    for (auto &[k, c] : terms_)
      if (denominator(c) != 1) return false;
    return true;
  }

  const std::map<Key, Rat> &terms() const { return terms_; }

  ParamPoly &operator+=(const ParamPoly &o) {
    for (auto &[k, c] : o.terms_) {
      auto it = terms_.find(k);
      if (it == terms_.end()) {
        terms_.emplace(k, c);
      } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }
  ParamPoly &operator-=(const ParamPoly &o) {
    for (auto &[k, c] : o.terms_) {
      auto it = terms_.find(k);
      if (it == terms_.end()) {
        terms_.emplace(k, -c);
      } else {
        it->second -= c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }

  friend ParamPoly operator+(ParamPoly a, const ParamPoly &b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly &b) { return a -= b; }
  friend ParamPoly operator-(const ParamPoly &a) {
    ParamPoly r;
    for (auto &[k, c] : a.terms_) r.terms_[k] = -c;
    return r;
  }
  friend ParamPoly operator*(const ParamPoly &a, const ParamPoly &b) {
    ParamPoly r;
    for (auto &[ka, ca] : a.terms_)
      for (auto &[kb, cb] : b.terms_) {
        Key k{uint8_t(ka.first + kb.first), uint8_t(ka.second + kb.second)};
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
          r.terms_.emplace(k, ca * cb);
        } else {
          it->second += ca * cb;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
    return r;
  }
  ParamPoly &operator*=(const ParamPoly &o) { return *this = *this * o; }

  ParamPoly scaled(const Rat &c) const {
    ParamPoly r;
    if (c == 0) return r;
    for (auto &[k, v] : terms_) r.terms_[k] = v * c;
    return r;
  }

  // Exact division by mu1^e1 * mu2^e2; throws if any term lacks the factor.
  ParamPoly divided_by_monomial(int e1, int e2) const {
    ParamPoly r;
    for (auto &[k, c] : terms_) {
      if (k.first < e1 || k.second < e2)
        throw not_divisible("ParamPoly: monomial division fails");
      r.terms_[{uint8_t(k.first - e1), uint8_t(k.second - e2)}] = c;
    }
    return r;
  }

  // True when every term is divisible by mu2 (membership in mu2-ideal).
  bool divisible_by_mu2() const {
    for (auto &[k, c] : terms_)
      if (k.second == 0) return false;
    return true;
  }

  bool operator==(const ParamPoly &o) const { return terms_ == o.terms_; }
  bool operator!=(const ParamPoly &o) const { return terms_ != o.terms_; }
  bool operator<(const ParamPoly &o) const { return terms_ < o.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto &[k, c] : terms_) {
      std::string t = c.str();
      if (!first && t[0] != '-') s += "+";
      s += t;
      if (k.first) s += "*mu1" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
      if (k.second) s += "*mu2" + (k.second > 1 ? "^" + std::to_string(k.second) : "");
      first = false;
    }
    return s;
  }

private:
  std::map<Key, Rat> terms_; // no zero coefficients stored
};

} // namespace fgsc

#endif
