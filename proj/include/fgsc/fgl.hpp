#ifndef FGSC_FGL_HPP
#define FGSC_FGL_HPP

#include <map>
#include <string>
#include <utility>

#include "fgsc/series.hpp"

namespace fgsc {

// One-dimensional commutative formal group law descriptor.
//
// The hyperbolic law F(x,y) = (x+y-mu1*xy)/(1+mu2*xy) is the central case;
// Additive, Multiplicative and Lorentz are its specializations.  Generic
// laws carry an explicit coefficient table a_{ij} (i+j <= degree) and are
// validated against the group-law axioms at construction.
class FormalGroupLaw {
public:
  enum class Kind { Additive, Multiplicative, Hyperbolic, Generic };
  using Table = std::map<std::pair<int, int>, ParamPoly>;

  static FormalGroupLaw additive() {
    return FormalGroupLaw(Kind::Additive, ParamPoly(), ParamPoly());
  }
  static FormalGroupLaw multiplicative(ParamPoly mu1 = ParamPoly::mu1()) {
    return FormalGroupLaw(Kind::Multiplicative, std::move(mu1), ParamPoly());
  }
  static FormalGroupLaw hyperbolic(ParamPoly mu1 = ParamPoly::mu1(),
                                   ParamPoly mu2 = ParamPoly::mu2()) {
    return FormalGroupLaw(Kind::Hyperbolic, std::move(mu1), std::move(mu2));
  }
  static FormalGroupLaw lorentz() {
    return hyperbolic(ParamPoly(), ParamPoly::mu2());
  }
  // Table entries may be given one-sided; symmetry is mirrored.  Axioms are
  // checked up to `degree`.
  static FormalGroupLaw generic(Table table, int degree);

  // Law determined by its logarithm (a univariate series with unit linear
  // coefficient), tabulated to `degree`.  Test/fixture helper.
  static FormalGroupLaw from_log(const TruncSeries &log_series, int degree);

  Kind kind() const { return kind_; }
  bool is_hyperbolic_family() const { return kind_ != Kind::Generic; }
  // mu1/mu2 of the hyperbolic presentation (zero for specializations).
  const ParamPoly &mu1() const { return mu1_; }
  const ParamPoly &mu2() const { return mu2_; }
  int table_degree() const { return table_degree_; }

  // F(x,y) as a rank-2 series in x=z1, y=z2.
  TruncSeries series(int cutoff) const;
  // Formal inverse iota with F(x, iota(x)) = 0, solved degree by degree.
  TruncSeries inverse_series(int cutoff) const;
  // Logarithm (termwise integral of 1/F_y(x,0)) and its compositional
  // inverse; exp(log(x)) = x up to the cutoff.
  std::pair<TruncSeries, TruncSeries> log_exp(int cutoff) const;

  std::string name() const;

private:
  FormalGroupLaw(Kind k, ParamPoly m1, ParamPoly m2)
      : kind_(k), mu1_(std::move(m1)), mu2_(std::move(m2)) {}

  Kind kind_;
  ParamPoly mu1_, mu2_;
  Table table_;
  int table_degree_ = 0;
};

} // namespace fgsc

#endif
