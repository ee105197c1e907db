#ifndef FGSC_SERIES_HPP
#define FGSC_SERIES_HPP

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fgsc/param.hpp"

namespace fgsc {

// Exponent vector of a monomial in up to kMaxVars variables, compared in
// graded lexicographic order so homogeneous components are contiguous.
struct Mono {
  static constexpr int kMaxVars = 8;
  std::array<uint8_t, kMaxVars> e{};
  uint8_t deg = 0;

  static Mono unit() { return Mono{}; }
  static Mono var(int i, int exp = 1) {
    Mono m;
    m.e[i] = uint8_t(exp);
    m.deg = uint8_t(exp);
    return m;
  }
  Mono times(const Mono &o) const {
    Mono m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = uint8_t(e[i] + o.e[i]);
    m.deg = uint8_t(deg + o.deg);
    return m;
  }
  bool operator==(const Mono &o) const { return deg == o.deg && e == o.e; }
  bool operator<(const Mono &o) const {
    if (deg != o.deg) return deg < o.deg;
    return e > o.e; // within a degree: lex descending in exponents
  }
};

// Exact truncated multivariate power series over ParamPoly.
//
// `trust` records up to which total degree the coefficients are guaranteed
// correct; terms above `trust` are never stored.  Every operation propagates
// trust as the min of its inputs; exact division by a valuation-1 series
// costs one degree.
class TruncSeries {
public:
  TruncSeries() = default;
  TruncSeries(int rank, int cutoff, int trust)
      : rank_(rank), cutoff_(cutoff), trust_(trust < cutoff ? trust : cutoff) {}

  static TruncSeries zero(int rank, int cutoff, int trust) {
    return TruncSeries(rank, cutoff, trust);
  }
  static TruncSeries constant(int rank, int cutoff, int trust, ParamPoly c) {
    TruncSeries s(rank, cutoff, trust);
    if (!c.is_zero()) s.terms_[Mono::unit()] = std::move(c);
    return s;
  }
  static TruncSeries variable(int rank, int cutoff, int trust, int i) {
    TruncSeries s(rank, cutoff, trust);
    if (trust >= 1) s.terms_[Mono::var(i)] = ParamPoly(1);
    return s;
  }

  int rank() const { return rank_; }
  int cutoff() const { return cutoff_; }
  int trust() const { return trust_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mono, ParamPoly> &terms() const { return terms_; }

  // Minimum total degree of a stored term; trust+1 for the zero series.
  int valuation() const {
    return terms_.empty() ? trust_ + 1 : terms_.begin()->first.deg;
  }

  ParamPoly coeff(const Mono &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ParamPoly() : it->second;
  }
  ParamPoly constant_term() const { return coeff(Mono::unit()); }

  bool has_integer_coeffs() const {
    for (auto &[m, c] : terms_)
      if (!c.has_integer_coeffs()) return false;
    return true;
  }

  void add_term(const Mono &m, const ParamPoly &c) {
    if (c.is_zero() || m.deg > trust_) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // Lowers trust and drops now-untrusted terms.
  TruncSeries with_trust(int t) const;

  TruncSeries operator-() const;
  friend TruncSeries operator+(const TruncSeries &a, const TruncSeries &b);
  friend TruncSeries operator-(const TruncSeries &a, const TruncSeries &b);
  friend TruncSeries operator*(const TruncSeries &a, const TruncSeries &b);

  TruncSeries scaled(const ParamPoly &c) const;

  bool operator==(const TruncSeries &o) const; // up to min trust

  std::string str(std::span<const std::string> var_names = {}) const;

private:
  friend TruncSeries series_compose(const TruncSeries &,
                                    std::span<const TruncSeries>);
  void check_compat(const TruncSeries &o) const;

  int rank_ = 0;
  int cutoff_ = 0;
  int trust_ = 0;
  std::map<Mono, ParamPoly> terms_; // graded lex; no zeros; deg <= trust
};

// Substitution f(z_1,...,z_k) -> f(args_1,...,args_k); every argument must
// have zero constant term.  Arguments beyond f's rank are permitted (the
// result lives in the arguments' ring).
TruncSeries series_compose(const TruncSeries &f,
                           std::span<const TruncSeries> args);

// Multiplicative inverse; the constant term must be a nonzero rational.
TruncSeries invert_unit(const TruncSeries &f);

// Exact division of f (valuation >= 1) by a valuation-1 series whose lowest
// homogeneous form is the integer linear form `linear`.  Solved degree by
// degree; throws not_divisible when some homogeneous division fails.
// The quotient's trust is one less than f's.
TruncSeries divide_by_val1(const TruncSeries &f, const TruncSeries &divisor);

// Substitute variable i -> subs[i] simultaneously (all valuation >= 1,
// same ring).  Used for Weyl actions, the star involution and evaluation.
TruncSeries substitute_all(const TruncSeries &f,
                           std::span<const TruncSeries> subs);

// f^k with truncation.
TruncSeries series_pow(const TruncSeries &f, int k);

} // namespace fgsc

#endif
