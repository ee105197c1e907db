#include "fgsc/model.hpp"

#include "fgsc/errors.hpp"

namespace fgsc {

SeriesModel::SeriesModel(const RootSystem &rs, FormalGroupLaw law, int cutoff,
                         int blocks)
    : rs_(rs), law_(std::move(law)), cutoff_(cutoff), blocks_(blocks) {
  if (rs.rank() * blocks > Mono::kMaxVars)
    throw ring_mismatch("too many variables for this rank/block combination");
}

const TruncSeries &SeriesModel::fgl_series() const {
  std::scoped_lock lk(mu_);
  if (!fgl_cache_) fgl_cache_ = law_.series(cutoff_);
  return *fgl_cache_;
}

const TruncSeries &SeriesModel::iota_series() const {
  std::scoped_lock lk(mu_);
  if (!iota_cache_) iota_cache_ = law_.inverse_series(cutoff_);
  return *iota_cache_;
}

TruncSeries SeriesModel::weight_class(const WeightVec &lam, int block) const {
  {
    std::scoped_lock lk(mu_);
    auto it = weight_cache_.find({block, lam});
    if (it != weight_cache_.end()) return it->second;
  }
  const TruncSeries &F = fgl_series();
  const TruncSeries &iota = iota_series();
  TruncSeries acc = zero();
  for (int i = 0; i < rs_.rank(); ++i) {
    if (lam[i] == 0) continue;
    TruncSeries zi = TruncSeries::variable(nvars(), cutoff_, cutoff_,
                                           var_index(block, i));
    TruncSeries step = zi;
    if (lam[i] < 0) {
      TruncSeries args[1] = {zi};
      step = series_compose(iota, args);
    }
    for (int k = 0; k < std::abs(lam[i]); ++k) {
      if (acc.is_zero()) {
        acc = step;
      } else {
        TruncSeries args[2] = {acc, step};
        acc = series_compose(F, args);
      }
    }
  }
  std::scoped_lock lk(mu_);
  weight_cache_.emplace(std::make_pair(block, lam), acc);
  return acc;
}

TruncSeries SeriesModel::weyl_act(Elt w, const S &f) const {
  if (w == rs_.identity()) return f;
  std::vector<TruncSeries> subs;
  {
    std::scoped_lock lk(mu_);
    auto it = weyl_subs_cache_.find(w);
    if (it != weyl_subs_cache_.end()) subs = it->second;
  }
  if (subs.empty()) {
    subs.reserve(nvars());
    for (int b = 0; b < blocks_; ++b)
      for (int i = 0; i < rs_.rank(); ++i) {
        WeightVec a = wv_zero();
        a[i] = 1;
        if (b == 0) {
          subs.push_back(weight_class(rs_.act(w, a), 0));
        } else {
          subs.push_back(TruncSeries::variable(nvars(), cutoff_, cutoff_,
                                               var_index(b, i)));
        }
      }
    std::scoped_lock lk(mu_);
    weyl_subs_cache_.emplace(w, subs);
  }
  return substitute_all(f, subs);
}

TruncSeries SeriesModel::star(const S &f) const {
  std::vector<TruncSeries> subs;
  {
    std::scoped_lock lk(mu_);
    if (star_subs_cache_) subs = *star_subs_cache_;
  }
  if (subs.empty()) {
    const TruncSeries &iota = iota_series();
    for (int b = 0; b < blocks_; ++b)
      for (int i = 0; i < rs_.rank(); ++i) {
        TruncSeries zi = TruncSeries::variable(nvars(), cutoff_, cutoff_,
                                               var_index(b, i));
        if (b == 0) {
          TruncSeries args[1] = {zi};
          subs.push_back(series_compose(iota, args));
        } else {
          subs.push_back(zi);
        }
      }
    std::scoped_lock lk(mu_);
    star_subs_cache_ = subs;
  }
  return substitute_all(f, subs);
}

TruncSeries SeriesModel::divide_by_root(const S &f, int root_idx) const {
  return divide_by_val1(f, root_class(root_idx, 0));
}

std::optional<TruncSeries> SeriesModel::try_divide_by_root(const S &f,
                                                           int root_idx) const {
  try {
    return divide_by_root(f, root_idx);
  } catch (const not_divisible &) {
    return std::nullopt;
  }
}

TruncSeries SeriesModel::kappa_root(int root_idx) const {
  {
    std::scoped_lock lk(mu_);
    auto it = kappa_cache_.find(root_idx);
    if (it != kappa_cache_.end()) return it->second;
  }
  int neg = rs_.negate_root(root_idx);
  TruncSeries num = root_class(root_idx, 0) + root_class(neg, 0);
  TruncSeries k = divide_by_root(divide_by_root(num, root_idx), neg);
  std::scoped_lock lk(mu_);
  kappa_cache_.emplace(root_idx, k);
  return k;
}

TruncSeries SeriesModel::theta_root(int root_idx) const {
  {
    std::scoped_lock lk(mu_);
    auto it = theta_cache_.find(root_idx);
    if (it != theta_cache_.end()) return it->second;
  }
  int neg = rs_.negate_root(root_idx);
  TruncSeries t = divide_by_root(-root_class(neg, 0), root_idx);
  std::scoped_lock lk(mu_);
  theta_cache_.emplace(root_idx, t);
  return t;
}

TruncSeries embed_vars(const TruncSeries &f, int new_rank, int offset) {
  if (offset + f.rank() > new_rank || new_rank > Mono::kMaxVars)
    throw ring_mismatch("embed_vars: target ring too small");
  TruncSeries r(new_rank, f.cutoff(), f.trust());
  for (auto &[m, c] : f.terms()) {
    Mono mm;
    mm.deg = m.deg;
    for (int i = 0; i < f.rank(); ++i) mm.e[offset + i] = m.e[i];
    r.add_term(mm, c);
  }
  return r;
}

} // namespace fgsc
