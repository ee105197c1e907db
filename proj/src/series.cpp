#include "fgsc/series.hpp"

#include <algorithm>

#include "fgsc/errors.hpp"

namespace fgsc {

void TruncSeries::check_compat(const TruncSeries &o) const {
  if (rank_ != o.rank_ || cutoff_ != o.cutoff_)
    throw ring_mismatch("series rank/cutoff mismatch");
}

TruncSeries TruncSeries::with_trust(int t) const {
  if (t >= trust_) return *this;
  TruncSeries r(rank_, cutoff_, t);
  for (auto &[m, c] : terms_) {
    if (m.deg > t) break;
    r.terms_.emplace(m, c);
  }
  return r;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r(rank_, cutoff_, trust_);
  for (auto &[m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

TruncSeries operator+(const TruncSeries &a, const TruncSeries &b) {
  a.check_compat(b);
  TruncSeries r = a.with_trust(std::min(a.trust_, b.trust_));
  for (auto &[m, c] : b.terms_) r.add_term(m, c);
  return r;
}

TruncSeries operator-(const TruncSeries &a, const TruncSeries &b) {
  a.check_compat(b);
  TruncSeries r = a.with_trust(std::min(a.trust_, b.trust_));
  for (auto &[m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

TruncSeries operator*(const TruncSeries &a, const TruncSeries &b) {
  a.check_compat(b);
  TruncSeries r(a.rank_, a.cutoff_, std::min(a.trust_, b.trust_));
  for (auto &[ma, ca] : a.terms_) {
    if (ma.deg > r.trust_) break;
    for (auto &[mb, cb] : b.terms_) {
      if (ma.deg + mb.deg > r.trust_) break;
      r.add_term(ma.times(mb), ca * cb);
    }
  }
  return r;
}

TruncSeries TruncSeries::scaled(const ParamPoly &c) const {
  TruncSeries r(rank_, cutoff_, trust_);
  if (c.is_zero()) return r;
  for (auto &[m, v] : terms_) {
    ParamPoly p = v * c;
    if (!p.is_zero()) r.terms_.emplace(m, std::move(p));
  }
  return r;
}

bool TruncSeries::operator==(const TruncSeries &o) const {
  check_compat(o);
  int t = std::min(trust_, o.trust_);
  auto ia = terms_.begin(), ib = o.terms_.begin();
  while (ia != terms_.end() && ia->first.deg <= t && ib != o.terms_.end() &&
         ib->first.deg <= t) {
    if (ia->first != ib->first || ia->second != ib->second) return false;
    ++ia;
    ++ib;
  }
  if (ia != terms_.end() && ia->first.deg <= t) return false;
  if (ib != o.terms_.end() && ib->first.deg <= t) return false;
  return true;
}

std::string TruncSeries::str(std::span<const std::string> var_names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto &[m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    for (int i = 0; i < rank_; ++i) {
      if (!m.e[i]) continue;
      s += "*";
      s += (size_t(i) < var_names.size()) ? var_names[i]
                                          : "z" + std::to_string(i + 1);
      if (m.e[i] > 1) s += "^" + std::to_string(int(m.e[i]));
    }
  }
  return s;
}

TruncSeries series_pow(const TruncSeries &f, int k) {
  TruncSeries r = TruncSeries::constant(f.rank(), f.cutoff(), f.trust(), 1);
  for (int i = 0; i < k; ++i) r = r * f;
  return r;
}

TruncSeries series_compose(const TruncSeries &f,
                           std::span<const TruncSeries> args) {
  if (args.empty()) throw ring_mismatch("compose: no arguments");
  int trust = f.trust();
  for (auto &a : args) {
    if (!a.constant_term().is_zero())
      throw ring_mismatch("compose: argument has nonzero constant term");
    trust = std::min(trust, a.trust());
  }
  const TruncSeries &model = args[0];
  TruncSeries r(model.rank(), model.cutoff(), trust);

  // Cache argument powers as needed; arguments have valuation >= 1 so the
  // exponent of arg i is bounded by trust.
  std::vector<std::vector<TruncSeries>> pows(args.size());
  auto arg_pow = [&](size_t i, int k) -> const TruncSeries & {
    auto &v = pows[i];
    if (v.empty())
      v.push_back(TruncSeries::constant(model.rank(), model.cutoff(), trust, 1));
    while (int(v.size()) <= k) v.push_back(v.back() * args[i]);
    return v[k];
  };

  for (auto &[m, c] : f.terms_) {
    if (int(m.deg) > trust) break;
    for (size_t i = args.size(); i < Mono::kMaxVars; ++i)
      if (m.e[i])
        throw ring_mismatch("compose: series uses variable without argument");
    TruncSeries term = TruncSeries::constant(model.rank(), model.cutoff(), trust, c);
    for (size_t i = 0; i < args.size(); ++i)
      if (m.e[i]) term = term * arg_pow(i, m.e[i]);
    r = r + term;
  }
  return r;
}

TruncSeries substitute_all(const TruncSeries &f,
                           std::span<const TruncSeries> subs) {
  if (int(subs.size()) != f.rank())
    throw ring_mismatch("substitute_all: wrong number of substitutions");
  return series_compose(f, subs);
}

TruncSeries invert_unit(const TruncSeries &f) {
  ParamPoly c0 = f.constant_term();
  if (!c0.is_rational() || c0.rational_value() == 0)
    throw ring_mismatch("invert_unit: constant term is not a nonzero rational");
  Rat inv = Rat(1) / c0.rational_value();

  // g solves f*g = 1 degree by degree: g_m = -inv * sum_{d<m} g_d f_{m-d}.
  TruncSeries g(f.rank(), f.cutoff(), f.trust());
  g.add_term(Mono::unit(), ParamPoly(inv));
  // h = f - c0 has valuation >= 1.
  TruncSeries h = f;
  h.add_term(Mono::unit(), -c0);
  for (int m = 1; m <= f.trust(); ++m) {
    // contributions to degree m of g*h using g components < m
    TruncSeries part(f.rank(), f.cutoff(), f.trust());
    for (auto &[mg, cg] : g.terms()) {
      if (mg.deg >= m) break;
      for (auto &[mh, ch] : h.terms()) {
        if (mg.deg + mh.deg > m) break;
        if (mg.deg + mh.deg == m) part.add_term(mg.times(mh), cg * ch);
      }
    }
    for (auto &[mm, cc] : part.terms())
      g.add_term(mm, cc.scaled(-inv));
  }
  return g;
}

namespace {

// Exact division of homogeneous component `num` (degree d+1, passed as term
// list) by the integer linear form `lin`; quotient terms (degree d) are
// appended to `out`.  Returns false when the division leaves a remainder.
bool divide_homogeneous_by_linear(std::map<Mono, ParamPoly> num,
                                  const std::array<int, Mono::kMaxVars> &lin,
                                  int pivot,
                                  std::map<Mono, ParamPoly> &out) {
  const Rat pc(lin[pivot]);
  // Order monomials by pivot exponent descending, then map order; reduce the
  // highest pivot power first so each step strictly lowers the leader.
  while (!num.empty()) {
    auto lead = num.begin();
    for (auto it = num.begin(); it != num.end(); ++it)
      if (it->first.e[pivot] > lead->first.e[pivot]) lead = it;
    if (lead->first.e[pivot] == 0) return false; // remainder
    Mono q = lead->first;
    q.e[pivot]--;
    q.deg--;
    ParamPoly qc = lead->second.scaled(Rat(1) / pc);
    out[q] += qc;
    // subtract qc * q * lin from num
    for (int i = 0; i < Mono::kMaxVars; ++i) {
      if (!lin[i]) continue;
      Mono m = q;
      m.e[i]++;
      m.deg++;
      auto it = num.find(m);
      ParamPoly delta = qc.scaled(Rat(lin[i]));
      if (it == num.end()) {
        delta = -delta;
        if (!delta.is_zero()) num.emplace(m, std::move(delta));
      } else {
        it->second -= delta;
        if (it->second.is_zero()) num.erase(it);
      }
    }
  }
  return true;
}

} // namespace

TruncSeries divide_by_val1(const TruncSeries &f, const TruncSeries &divisor) {
  if (f.rank() != divisor.rank() || f.cutoff() != divisor.cutoff())
    throw ring_mismatch("divide_by_val1: ring mismatch");
  if (!f.constant_term().is_zero())
    throw not_divisible("divide_by_val1: dividend has nonzero constant term");
  if (divisor.valuation() != 1)
    throw not_divisible("divide_by_val1: divisor valuation is not 1");

  // Linear form of the divisor; coefficients must be rational integers only
  // in spirit (roots), but rationals are handled via ParamPoly scaling, so we
  // require plain rational linear coefficients here.
  std::array<int, Mono::kMaxVars> lin{};
  int pivot = -1;
  for (auto &[m, c] : divisor.terms()) {
    if (m.deg > 1) break;
    if (m.deg != 1) continue;
    for (int i = 0; i < Mono::kMaxVars; ++i)
      if (m.e[i]) {
        if (!c.is_rational() || denominator(c.rational_value()) != 1)
          throw not_divisible("divide_by_val1: non-integer linear form");
        lin[i] = int(numerator(c.rational_value()));
        if (pivot < 0) pivot = i;
      }
  }
  if (pivot < 0) throw not_divisible("divide_by_val1: zero linear form");

  const int qt = std::min(f.trust(), divisor.trust()) - 1; // quotient trust
  TruncSeries q(f.rank(), f.cutoff(), qt);
  if (qt < 0) return q;

  // residual = f - q * divisor, maintained degree by degree
  std::map<Mono, ParamPoly> residual(f.terms().begin(), f.terms().end());
  for (int d = 0; d <= qt; ++d) {
    // homogeneous component of the residual at degree d+1
    std::map<Mono, ParamPoly> comp;
    for (auto &[m, c] : residual)
      if (m.deg == d + 1) comp.emplace(m, c);
    std::map<Mono, ParamPoly> qcomp;
    if (!divide_homogeneous_by_linear(std::move(comp), lin, pivot, qcomp))
      throw not_divisible("divide_by_val1: homogeneous division failed at degree " +
                          std::to_string(d + 1));
    for (auto &[m, c] : qcomp) {
      if (c.is_zero()) continue;
      q.add_term(m, c);
      // subtract c*m*divisor from the residual (only degrees <= qt+1 matter)
      for (auto &[md, cd] : divisor.terms()) {
        Mono mm = m.times(md);
        if (mm.deg > qt + 1) break;
        auto it = residual.find(mm);
        ParamPoly delta = c * cd;
        if (it == residual.end()) {
          delta = -delta;
          if (!delta.is_zero()) residual.emplace(mm, std::move(delta));
        } else {
          it->second -= delta;
          if (it->second.is_zero()) residual.erase(it);
        }
      }
    }
  }
  return q;
}

} // namespace fgsc
