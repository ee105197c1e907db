#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgsc/charmodel.hpp"
#include "fgsc/errors.hpp"
#include "fgsc/fraction.hpp"
#include "fgsc/model.hpp"

using namespace fgsc;

namespace {
constexpr int D = 9;

// kappa_{lam,nu} = 1/x_{-lam-nu} (1/x_{-nu} - 1/x_lam) - 1/(x_{-lam} x_{-nu})
// with every subscript required to be a root.
template <class M>
Frac<M> kappa_pair(const M &m, const WeightVec &lam, const WeightVec &nu) {
  const RootSystem &rs = m.rs();
  auto idx = [&](const WeightVec &v) {
    int r = rs.root_index(v);
    if (r < 0) throw config_error("kappa_pair: subscript is not a root");
    return r;
  };
  int neg_sum = idx(wv_neg(wv_add(lam, nu)));
  int neg_nu = idx(wv_neg(nu));
  int pos_lam = idx(lam);
  int neg_lam = idx(wv_neg(lam));
  auto diff = frac_sub(m, frac_inv_root(m, neg_nu), frac_inv_root(m, pos_lam));
  auto first = frac_mul(m, frac_inv_root(m, neg_sum), diff);
  Frac<M> second{m.one(), {neg_lam, neg_nu}};
  return frac_sub(m, first, second);
}

} // namespace

TEST_CASE("fraction basics") {
  auto rs = RootSystem::build("A2");
  SeriesModel m(rs, FormalGroupLaw::hyperbolic(), D);
  int a1 = 0, a2 = 1, a12 = rs.root_index(WeightVec{1, 1, 0, 0});

  // (1/x_a) * x_a = 1
  auto f = frac_mul(m, frac_inv_root(m, a1), frac_scalar(m, m.root_class(a1)));
  CHECK(frac_eq(m, f, frac_one(m)));
  CHECK(frac_simplify(m, f).den.empty());

  // 1/x_a + 1/x_b == (x_a + x_b)/(x_a x_b)
  auto lhs = frac_add(m, frac_inv_root(m, a1), frac_inv_root(m, a12));
  Frac<SeriesModel> rhs{m.root_class(a1) + m.root_class(a12), {a1, a12}};
  CHECK(frac_eq(m, lhs, rhs));

  // equivalence under scaling num and den by the same root
  auto scaled = rhs;
  scaled.num = scaled.num * m.root_class(a2);
  scaled.den.push_back(a2);
  std::sort(scaled.den.begin(), scaled.den.end());
  CHECK(frac_eq(m, rhs, scaled));
  CHECK(frac_eq(m, scaled, rhs));
  CHECK_FALSE(frac_eq(m, rhs, frac_one(m)));
}

TEST_CASE("kappa_i as a fraction") {
  auto rs = RootSystem::build("A2");
  SeriesModel m(rs, FormalGroupLaw::hyperbolic(), D);
  int a1 = 0, na1 = rs.negate_root(0);
  // 1/x_{-1} + 1/x_1 simplifies to mu1
  auto k = frac_add(m, frac_inv_root(m, na1), frac_inv_root(m, a1));
  auto s = frac_simplify(m, k);
  CHECK(s.den.empty());
  CHECK(s.num == m.from_param(ParamPoly::mu1()).with_trust(s.num.trust()));
}

TEST_CASE("kappa_{i,j} values per law") {
  for (auto label : {"A2", "B2"}) {
    auto rs = RootSystem::build(label);
    WeightVec l1{1, 0, 0, 0}, l2{0, 1, 0, 0};
    {
      SeriesModel m(rs, FormalGroupLaw::hyperbolic(), D);
      for (auto [lam, nu] : {std::pair{l1, l2}, std::pair{l2, l1}}) {
        auto k = frac_simplify(m, kappa_pair(m, lam, nu));
        CHECK(k.den.empty());
        CHECK(k.num == m.from_param(ParamPoly::mu2()).with_trust(k.num.trust()));
      }
    }
    {
      SeriesModel m(rs, FormalGroupLaw::multiplicative(), D);
      auto k = frac_simplify(m, kappa_pair(m, l1, l2));
      CHECK(frac_is_zero(m, k));
    }
    {
      SeriesModel m(rs, FormalGroupLaw::additive(), D);
      auto k = frac_simplify(m, kappa_pair(m, l1, l2));
      CHECK(frac_is_zero(m, k));
    }
  }
  // B2 braid-relation kappas: kappa_{i+2j,-j} and kappa_{i+j,j} are mu2 too
  auto b2 = RootSystem::build("B2");
  SeriesModel m(b2, FormalGroupLaw::hyperbolic(), D);
  auto mu2 = m.from_param(ParamPoly::mu2());
  for (auto [lam, nu] :
       {std::pair{WeightVec{1, 2, 0, 0}, WeightVec{0, -1, 0, 0}},
        std::pair{WeightVec{1, 1, 0, 0}, WeightVec{0, 1, 0, 0}}}) {
    auto k = frac_simplify(m, kappa_pair(m, lam, nu));
    CHECK(k.den.empty());
    CHECK(k.num == mu2.with_trust(k.num.trust()));
  }
}

TEST_CASE("frac_invert") {
  auto rs = RootSystem::build("A2");
  SeriesModel m(rs, FormalGroupLaw::hyperbolic(), D);
  Frac<SeriesModel> f{m.one(), {0, 1}};
  auto inv = frac_invert(m, f);
  CHECK(inv.den.empty());
  CHECK(frac_eq(m, frac_mul(m, f, inv), frac_one(m)));
}

TEST_CASE("character model ring identities") {
  auto rs = RootSystem::build("A2");
  CharModel m(rs);
  WeightVec l1{1, 0, 0, 0}, l2{0, 1, 0, 0}, l3{2, -1, 0, 0};

  // (1 - t y_lam)(1 - t y_nu) = 1 - t y_{lam+nu}
  for (auto lam : {l1, l3})
    for (auto nu : {l2, l1}) {
      auto lhs = (m.one() - m.weight_class(lam).scaled(m.t())) *
                 (m.one() - m.weight_class(nu).scaled(m.t()));
      auto rhs = m.one() - m.weight_class(wv_add(lam, nu)).scaled(m.t());
      CHECK(lhs == rhs);
    }

  // star and weyl act
  for (auto lam : {l1, l2, l3}) {
    CHECK(m.star(m.weight_class(lam)) == m.weight_class(wv_neg(lam)));
    CHECK(m.star(m.star(m.weight_class(lam))) == m.weight_class(lam));
  }
  for (int w = 0; w < rs.order(); ++w)
    CHECK(m.weyl_act(w, m.weight_class(l3)) == m.weight_class(rs.act(w, l3)));

  // kappa_i = t, theta(beta) = E^beta
  for (int r = 0; r < rs.num_roots(); ++r) {
    CHECK(m.kappa_root(r) == CharElem::monomial(wv_zero(), m.t()));
    CHECK(m.theta_root(r) == m.character(rs.root(r)));
  }

  // divisions round trip and fail loudly
  auto q = m.weight_class(l3) + m.one();
  for (int r = 0; r < rs.num_roots(); ++r)
    CHECK(m.divide_by_root(q * m.root_class(r), r) == q);
  CHECK_THROWS_AS(m.divide_by_root(m.one(), 0), not_divisible);
  CHECK_THROWS_AS(m.divide_by_root(m.root_class(1), 0), not_divisible);
}

TEST_CASE("character model at t = 1") {
  auto rs = RootSystem::build("A2");
  CharModel m(rs, Rat(1));
  // y_lam = 1 - E^{-lam}
  WeightVec lam{1, 1, 0, 0};
  CharElem expect;
  expect.add_term(wv_zero(), RatFn(Rat(1)));
  expect.add_term(wv_neg(lam), RatFn(Rat(-1)));
  CHECK(m.weight_class(lam) == expect);
  CHECK(m.kappa_root(0) == m.one());
}

TEST_CASE("character model agrees with the series model") {
  auto rs = RootSystem::build("A2");
  CharModel mc(rs);
  SeriesModel ms(rs, FormalGroupLaw::multiplicative(), D);

  // E^{-alpha_i} expands to 1 - mu1 z_i; characters multiply out of that.
  auto char_series = [&](const WeightVec &lam) {
    auto s = ms.one();
    for (int i = 0; i < rs.rank(); ++i) {
      if (!lam[i]) continue;
      auto e_neg = ms.one() - ms.weight_class(rs.root(i)).scaled(ParamPoly::mu1());
      auto f = (lam[i] < 0) ? e_neg : invert_unit(e_neg);
      for (int k = 0; k < std::abs(lam[i]); ++k) s = s * f;
    }
    return s;
  };
  auto to_series = [&](const CharElem &f) {
    // clear t-denominators, convert, divide the series back by mu1^K
    int K = 0;
    for (auto &[k, c] : f.terms()) K = std::max(K, c.den().degree());
    CharElem tf = f;
    for (int i = 0; i < K; ++i) tf = tf.scaled(RatFn::t());
    auto s = ms.zero();
    for (auto &[k, c] : tf.terms()) {
      REQUIRE(c.is_polynomial());
      ParamPoly p;
      for (int d = 0; d <= c.num().degree(); ++d)
        p += ParamPoly::monomial(d, 0, c.num().coeff(d));
      s = s + char_series(k).scaled(p);
    }
    TruncSeries out(s.rank(), s.cutoff(), s.trust());
    for (auto &[mono, c] : s.terms()) out.add_term(mono, c.divided_by_monomial(K, 0));
    return out;
  };

  for (auto lam : {WeightVec{1, 0, 0, 0}, WeightVec{0, 1, 0, 0},
                   WeightVec{1, 1, 0, 0}, WeightVec{-1, 2, 0, 0},
                   WeightVec{2, 2, 0, 0}}) {
    CHECK(to_series(mc.weight_class(lam)) == ms.weight_class(lam));
  }
}
