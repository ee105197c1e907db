#include "fgsc/fgl.hpp"

#include "fgsc/errors.hpp"

namespace fgsc {

namespace {

TruncSeries bivar(int cutoff) { return TruncSeries(2, cutoff, cutoff); }

Mono mono2(int i, int j) { return Mono::var(0, i).times(Mono::var(1, j)); }

} // namespace

TruncSeries FormalGroupLaw::series(int cutoff) const {
  TruncSeries x = TruncSeries::variable(2, cutoff, cutoff, 0);
  TruncSeries y = TruncSeries::variable(2, cutoff, cutoff, 1);
  switch (kind_) {
  case Kind::Additive:
    return x + y;
  case Kind::Multiplicative:
    return x + y - (x * y).scaled(mu1_);
  case Kind::Hyperbolic: {
    TruncSeries num = x + y - (x * y).scaled(mu1_);
    TruncSeries den = TruncSeries::constant(2, cutoff, cutoff, 1) +
                      (x * y).scaled(mu2_);
    return num * invert_unit(den);
  }
  case Kind::Generic: {
    if (cutoff > table_degree_)
      throw config_error("generic law table only reaches degree " +
                         std::to_string(table_degree_));
    TruncSeries f = x + y;
    for (auto &[ij, c] : table_) {
      auto [i, j] = ij;
      if (i + j > cutoff) continue;
      TruncSeries t = bivar(cutoff);
      t.add_term(mono2(i, j), c);
      f = f + t;
    }
    return f;
  }
  }
  throw config_error("bad law kind");
}

TruncSeries FormalGroupLaw::inverse_series(int cutoff) const {
  TruncSeries f = series(cutoff);
  TruncSeries x = TruncSeries::variable(1, cutoff, cutoff, 0);
  TruncSeries iota = -x;
  // After each step F(x, iota) vanishes through degree m: the degree-(m+1)
  // defect is cancelled by the y-linear coefficient of F, which is 1.
  for (int m = 2; m <= cutoff; ++m) {
    TruncSeries args[2] = {x, iota};
    TruncSeries defect = series_compose(f, args);
    TruncSeries corr(1, cutoff, cutoff);
    for (auto &[mm, c] : defect.terms()) {
      if (mm.deg == m) corr.add_term(mm, c);
      if (mm.deg > m) break;
    }
    iota = iota - corr;
  }
  return iota;
}

std::pair<TruncSeries, TruncSeries> FormalGroupLaw::log_exp(int cutoff) const {
  TruncSeries f = series(cutoff + 1);
  // w(x) = dF/dy (x, 0) = sum_i a_{i1} x^i  (a_{01} = 1)
  TruncSeries w(1, cutoff, cutoff);
  for (auto &[m, c] : f.terms())
    if (m.e[1] == 1 && m.deg <= cutoff + 1)
      w.add_term(Mono::var(0, m.e[0]), c);
  TruncSeries winv = invert_unit(w);
  // log'(x) = 1/w(x); integrate termwise.
  TruncSeries lg(1, cutoff, cutoff);
  for (auto &[m, c] : winv.terms()) {
    int k = m.e[0];
    if (k + 1 > cutoff) continue;
    lg.add_term(Mono::var(0, k + 1), c.scaled(Rat(1) / Rat(k + 1)));
  }
  // exp = compositional inverse of log, solved degree by degree.
  TruncSeries x = TruncSeries::variable(1, cutoff, cutoff, 0);
  TruncSeries ex = x;
  for (int m = 2; m <= cutoff; ++m) {
    TruncSeries args[1] = {ex};
    TruncSeries defect = series_compose(lg, args) - x;
    TruncSeries corr(1, cutoff, cutoff);
    for (auto &[mm, c] : defect.terms()) {
      if (mm.deg == m) corr.add_term(mm, c);
      if (mm.deg > m) break;
    }
    ex = ex - corr;
  }
  return {lg, ex};
}

FormalGroupLaw FormalGroupLaw::generic(Table table, int degree) {
  FormalGroupLaw law(Kind::Generic, ParamPoly(), ParamPoly());
  // mirror one-sided entries and check consistency of two-sided ones
  Table full;
  for (auto &[ij, c] : table) {
    auto [i, j] = ij;
    if (i < 1 || j < 1 || i + j > degree)
      throw config_error("generic law entry out of range");
    auto it = full.find({i, j});
    if (it != full.end() && it->second != c)
      throw config_error("generic law table inconsistent at (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");
    full[{i, j}] = c;
    auto jt = full.find({j, i});
    if (jt != full.end() && jt->second != c)
      throw config_error("generic law table not symmetric at (" +
                         std::to_string(j) + "," + std::to_string(i) + ")");
    full[{j, i}] = c;
  }
  for (auto it = full.begin(); it != full.end();) {
    if (it->second.is_zero())
      it = full.erase(it);
    else
      ++it;
  }
  law.table_ = std::move(full);
  law.table_degree_ = degree;

  // F(x,0) = x and commutativity hold by construction; associativity is a
  // real constraint and is asserted up to the table degree.
  TruncSeries f = law.series(degree);
  TruncSeries x = TruncSeries::variable(3, degree, degree, 0);
  TruncSeries y = TruncSeries::variable(3, degree, degree, 1);
  TruncSeries z = TruncSeries::variable(3, degree, degree, 2);
  TruncSeries xy, yz;
  {
    TruncSeries args[2] = {x, y};
    xy = series_compose(f, args);
  }
  {
    TruncSeries args[2] = {y, z};
    yz = series_compose(f, args);
  }
  TruncSeries lhs, rhs;
  {
    TruncSeries args[2] = {xy, z};
    lhs = series_compose(f, args);
  }
  {
    TruncSeries args[2] = {x, yz};
    rhs = series_compose(f, args);
  }
  if (!(lhs == rhs))
    throw config_error("generic law table violates associativity");
  return law;
}

FormalGroupLaw FormalGroupLaw::from_log(const TruncSeries &log_series,
                                        int degree) {
  if (log_series.rank() != 1)
    throw config_error("from_log: logarithm must be univariate");
  ParamPoly lin = log_series.coeff(Mono::var(0));
  if (!lin.is_one())
    throw config_error("from_log: logarithm must start with x");
  // exp = compositional inverse
  TruncSeries x = TruncSeries::variable(1, degree, degree, 0);
  TruncSeries lg = log_series.with_trust(degree);
  TruncSeries ex = x;
  for (int m = 2; m <= degree; ++m) {
    TruncSeries args[1] = {ex};
    TruncSeries defect = series_compose(lg, args) - x;
    TruncSeries corr(1, degree, degree);
    for (auto &[mm, c] : defect.terms()) {
      if (mm.deg == m) corr.add_term(mm, c);
      if (mm.deg > m) break;
    }
    ex = ex - corr;
  }
  // F = exp(log x + log y)
  TruncSeries xb = TruncSeries::variable(2, degree, degree, 0);
  TruncSeries yb = TruncSeries::variable(2, degree, degree, 1);
  TruncSeries lx, ly;
  {
    TruncSeries args[1] = {xb};
    lx = series_compose(lg, args);
  }
  {
    TruncSeries args[1] = {yb};
    ly = series_compose(lg, args);
  }
  TruncSeries sum = lx + ly;
  TruncSeries args[1] = {sum};
  TruncSeries f = series_compose(ex, args);
  Table table;
  for (auto &[m, c] : f.terms()) {
    int i = m.e[0], j = m.e[1];
    if (i >= 1 && j >= 1) table[{i, j}] = c;
  }
  return generic(std::move(table), degree);
}

std::string FormalGroupLaw::name() const {
  switch (kind_) {
  case Kind::Additive: return "additive";
  case Kind::Multiplicative: return "multiplicative";
  case Kind::Hyperbolic: return "hyperbolic";
  case Kind::Generic: return "generic";
  }
  return "?";
}

} // namespace fgsc
