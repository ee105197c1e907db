#ifndef FGSC_MODEL_HPP
#define FGSC_MODEL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "fgsc/fgl.hpp"
#include "fgsc/rootsystem.hpp"
#include "fgsc/series.hpp"

namespace fgsc {

// Scalar model realizing the formal group algebra S by truncated series.
//
// Variables come in `blocks` disjoint copies of z_1..z_n; block 0 carries the
// Q_W scalars (Weyl action, star, root divisions act there), block 1 the
// left tensor factor used by root polynomials.  y_lambda for a root-lattice
// weight folds lambda through F deterministically (ascending index,
// sign-split), so its lowest form is the linear form of lambda.
//
// All values are immutable; the internal memo tables are pure caches guarded
// by a mutex.
class SeriesModel {
public:
  using S = TruncSeries;
  using Elt = RootSystem::Elt;

  SeriesModel(const RootSystem &rs, FormalGroupLaw law, int cutoff,
              int blocks = 1);

  const RootSystem &rs() const { return rs_; }
  const FormalGroupLaw &law() const { return law_; }
  int cutoff() const { return cutoff_; }
  int blocks() const { return blocks_; }
  int nvars() const { return rs_.rank() * blocks_; }

  S zero() const { return TruncSeries::zero(nvars(), cutoff_, cutoff_); }
  S one() const { return from_param(ParamPoly(1)); }
  S from_param(const ParamPoly &c) const {
    return TruncSeries::constant(nvars(), cutoff_, cutoff_, c);
  }
  bool is_zero(const S &s) const { return s.is_zero(); }
  bool equal(const S &a, const S &b) const { return a == b; }

  // mu1 of the law, as a scalar (kappa_i for the hyperbolic family).
  S law_mu1() const { return from_param(law_.mu1()); }
  S law_mu2() const { return from_param(law_.mu2()); }

  S weight_class(const WeightVec &lam, int block = 0) const;
  S root_class(int root_idx, int block = 0) const {
    return weight_class(rs_.root(root_idx), block);
  }

  // Weyl action on block-0 variables: z_i -> y_{w alpha_i}.
  S weyl_act(Elt w, const S &f) const;
  // Sign-change involution on block-0 variables: z_i -> iota(z_i).
  S star(const S &f) const;

  // Exact division by the block-0 root series x_gamma; one degree of trust.
  S divide_by_root(const S &f, int root_idx) const;
  std::optional<S> try_divide_by_root(const S &f, int root_idx) const;

  // kappa(beta) = (x_beta + x_{-beta}) / (x_beta x_{-beta}), as an element
  // of S (exact divisions succeed for every law in scope).
  S kappa_root(int root_idx) const;

  // theta(beta) = -x_{-beta}/x_beta, a unit of S.
  S theta_root(int root_idx) const;

  S invert_unit_scalar(const S &f) const { return invert_unit(f); }

  const TruncSeries &fgl_series() const;   // F at the working cutoff
  const TruncSeries &iota_series() const;  // formal inverse, univariate

private:
  int var_index(int block, int i) const { return block * rs_.rank() + i; }

  const RootSystem &rs_;
  FormalGroupLaw law_;
  int cutoff_;
  int blocks_;

  mutable std::mutex mu_;
  mutable std::optional<TruncSeries> fgl_cache_;
  mutable std::optional<TruncSeries> iota_cache_;
  mutable std::map<std::pair<int, WeightVec>, TruncSeries> weight_cache_;
  mutable std::map<int, TruncSeries> kappa_cache_;
  mutable std::map<int, TruncSeries> theta_cache_;
  mutable std::map<Elt, std::vector<TruncSeries>> weyl_subs_cache_;
  mutable std::optional<std::vector<TruncSeries>> star_subs_cache_;
};

// Embed a series into a larger ring, shifting variables by `offset`.
TruncSeries embed_vars(const TruncSeries &f, int new_rank, int offset);

} // namespace fgsc

#endif
