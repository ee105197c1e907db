#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgsc/errors.hpp"
#include "fgsc/fgl.hpp"
#include "fgsc/model.hpp"

using namespace fgsc;

namespace {
constexpr int D = 8;

TruncSeries var2(int i) { return TruncSeries::variable(2, D, D, i); }
}

TEST_CASE("law series") {
  auto x = var2(0), y = var2(1);
  CHECK(FormalGroupLaw::additive().series(D) == x + y);
  CHECK(FormalGroupLaw::multiplicative().series(D) ==
        x + y - (x * y).scaled(ParamPoly::mu1()));

  // hyperbolic through degree 4: x+y - mu1 xy - mu2 x^2y - mu2 xy^2
  //                              + mu1 mu2 x^2y^2 + ...
  auto F = FormalGroupLaw::hyperbolic().series(4);
  TruncSeries expect(2, 4, 4);
  auto m = [](int a, int b) { return Mono::var(0, a).times(Mono::var(1, b)); };
  expect.add_term(m(1, 0), ParamPoly(1));
  expect.add_term(m(0, 1), ParamPoly(1));
  expect.add_term(m(1, 1), -ParamPoly::mu1());
  expect.add_term(m(2, 1), -ParamPoly::mu2());
  expect.add_term(m(1, 2), -ParamPoly::mu2());
  expect.add_term(m(2, 2), ParamPoly::mu1() * ParamPoly::mu2());
  CHECK(F == expect);
}

TEST_CASE("formal inverse") {
  auto x1 = TruncSeries::variable(1, D, D, 0);
  CHECK(FormalGroupLaw::additive().inverse_series(D) == -x1);

  // multiplicative / hyperbolic: iota(x) = x/(mu1 x - 1) = -x - mu1 x^2 - ...
  TruncSeries expect(1, D, D);
  for (int k = 1; k <= D; ++k)
    expect.add_term(Mono::var(0, k), ParamPoly::monomial(k - 1, 0, Rat(-1)));
  CHECK(FormalGroupLaw::multiplicative().inverse_series(D) == expect);
  CHECK(FormalGroupLaw::hyperbolic().inverse_series(D) == expect);

  // defining property F(x, iota(x)) = 0 for every law
  for (auto law : {FormalGroupLaw::additive(), FormalGroupLaw::multiplicative(),
                   FormalGroupLaw::hyperbolic(), FormalGroupLaw::lorentz()}) {
    auto F = law.series(D);
    auto iota = law.inverse_series(D);
    TruncSeries args[2] = {x1, iota};
    CHECK(series_compose(F, args).is_zero());
  }
}

TEST_CASE("logarithm and exponential") {
  auto x1 = TruncSeries::variable(1, D, D, 0);
  {
    auto [lg, ex] = FormalGroupLaw::additive().log_exp(D);
    CHECK(lg == x1);
    CHECK(ex == x1);
  }
  {
    // mu1 = 1: log(x) = -ln(1-x) = x + x^2/2 + x^3/3 + ...
    auto law = FormalGroupLaw::multiplicative(ParamPoly(1));
    auto [lg, ex] = law.log_exp(D);
    TruncSeries expect(1, D, D);
    for (int k = 1; k <= D; ++k)
      expect.add_term(Mono::var(0, k), ParamPoly(Rat(1, k)));
    CHECK(lg == expect);
    TruncSeries args[1] = {lg};
    CHECK(series_compose(ex, args) == x1);
  }
  {
    // F(x,y) = exp(log x + log y) for the hyperbolic law
    auto law = FormalGroupLaw::hyperbolic();
    auto [lg, ex] = law.log_exp(D);
    auto x = var2(0), y = var2(1);
    TruncSeries ax[1] = {x}, ay[1] = {y};
    auto s = series_compose(lg, ax) + series_compose(lg, ay);
    TruncSeries as[1] = {s};
    CHECK(series_compose(ex, as) == law.series(D));
  }
}

TEST_CASE("weight classes") {
  auto rs = RootSystem::build("A2");
  SeriesModel m(rs, FormalGroupLaw::hyperbolic(), D);

  WeightVec a1{1, 0, 0, 0}, a2{0, 1, 0, 0};
  CHECK(m.weight_class(a1) == TruncSeries::variable(2, D, D, 0));
  CHECK(m.weight_class(wv_zero()).is_zero());

  // y_{a1+a2} = F(z1, z2), and the two folding orders agree (associativity)
  TruncSeries args[2] = {m.weight_class(a1), m.weight_class(a2)};
  auto direct = series_compose(m.fgl_series(), args);
  CHECK(m.weight_class(wv_add(a1, a2)) == direct);
  TruncSeries args2[2] = {m.weight_class(a2), m.weight_class(a1)};
  CHECK(m.weight_class(wv_add(a1, a2)) == series_compose(m.fgl_series(), args2));

  // y_{lam+nu} = F(y_lam, y_nu) on sampled root-lattice weights
  for (auto lam : {WeightVec{1, -1, 0, 0}, WeightVec{2, 1, 0, 0}, WeightVec{-1, -1, 0, 0}})
    for (auto nu : {WeightVec{0, 1, 0, 0}, WeightVec{1, 1, 0, 0}}) {
      TruncSeries a[2] = {m.weight_class(lam), m.weight_class(nu)};
      CHECK(m.weight_class(wv_add(lam, nu)) == series_compose(m.fgl_series(), a));
    }
}

TEST_CASE("weyl action") {
  auto rs = RootSystem::build("A2");
  SeriesModel m(rs, FormalGroupLaw::hyperbolic(), D);
  auto z1 = m.weight_class(WeightVec{1, 0, 0, 0});
  auto z2 = m.weight_class(WeightVec{0, 1, 0, 0});
  int s1 = rs.simple(0);

  auto f = z1 * z2 + z2.scaled(ParamPoly::mu2());
  CHECK(m.weyl_act(rs.identity(), f) == f);

  // s1(z1) = y_{-a1} = iota(z1)
  TruncSeries args[1] = {z1};
  CHECK(m.weyl_act(s1, z1) == series_compose(m.iota_series(), args));
  // s1(z2) = y_{a1+a2}
  CHECK(m.weyl_act(s1, z2) == m.weight_class(WeightVec{1, 1, 0, 0}));

  // ring morphism and composition over all pairs
  for (int w = 0; w < rs.order(); ++w) {
    CHECK(m.weyl_act(w, f * z1) == m.weyl_act(w, f) * m.weyl_act(w, z1));
    for (int v = 0; v < rs.order(); ++v)
      CHECK(m.weyl_act(rs.mul(w, v), f) == m.weyl_act(w, m.weyl_act(v, f)));
  }
}

TEST_CASE("star involution") {
  for (auto law : {FormalGroupLaw::additive(), FormalGroupLaw::hyperbolic()}) {
    auto rs = RootSystem::build("A2");
    SeriesModel m(rs, law, D);
    for (auto lam : {WeightVec{1, 0, 0, 0}, WeightVec{1, 1, 0, 0}, WeightVec{2, -1, 0, 0}}) {
      auto y = m.weight_class(lam);
      CHECK(m.star(y) == m.weight_class(wv_neg(lam)));
      CHECK(m.star(m.star(y)) == y);
    }
    if (law.kind() == FormalGroupLaw::Kind::Additive) {
      auto y = m.weight_class(WeightVec{1, 1, 0, 0});
      CHECK(m.star(y) == -y);
    }
  }
}

TEST_CASE("division by roots") {
  auto rs = RootSystem::build("A2");
  SeriesModel m(rs, FormalGroupLaw::hyperbolic(), D);
  int r1 = 0, r2 = 1; // simple roots lead the positive list
  REQUIRE(rs.root(r1) == WeightVec{1, 0, 0, 0});
  REQUIRE(rs.root(r2) == WeightVec{0, 1, 0, 0});

  CHECK(m.divide_by_root(m.root_class(r1), r1) ==
        m.one().with_trust(D - 1));
  CHECK(m.divide_by_root(m.root_class(r1) * m.root_class(r2), r1) ==
        m.root_class(r2).with_trust(D - 1));

  // theta(a1) = 1 + mu1 z1 + mu1^2 z1^2 + ... (geometric series) and the
  // round trip theta * x_{a1} = -x_{-a1}
  auto th = m.theta_root(r1);
  TruncSeries expect(2, D, D - 1);
  for (int k = 0; k <= D - 1; ++k)
    expect.add_term(Mono::var(0, k), ParamPoly::monomial(k, 0));
  CHECK(th == expect);
  int nr1 = rs.negate_root(r1);
  CHECK(th * m.root_class(r1) == -m.root_class(nr1));

  // round trip on products for every root
  for (int r = 0; r < rs.num_roots(); ++r) {
    auto q = m.weight_class(WeightVec{1, 1, 0, 0}) + m.one();
    CHECK(m.divide_by_root(q * m.root_class(r), r) == q.with_trust(D - 1));
  }
}

TEST_CASE("kappa of a root") {
  auto rs = RootSystem::build("A2");
  {
    SeriesModel m(rs, FormalGroupLaw::additive(), D);
    CHECK(m.kappa_root(0).is_zero());
  }
  {
    SeriesModel m(rs, FormalGroupLaw::multiplicative(), D);
    CHECK(m.kappa_root(0) == m.from_param(ParamPoly::mu1()).with_trust(D - 2));
  }
  {
    SeriesModel m(rs, FormalGroupLaw::hyperbolic(), D);
    for (int r = 0; r < rs.num_roots(); ++r)
      CHECK(m.kappa_root(r) == m.from_param(ParamPoly::mu1()).with_trust(D - 2));
  }
}

TEST_CASE("generic law validation and from_log") {
  // log(x) = x + mu2 x^3 gives an odd law with a11 = 0, a12 = a21 = -3 mu2
  TruncSeries lg(1, D, D);
  lg.add_term(Mono::var(0), ParamPoly(1));
  lg.add_term(Mono::var(0, 3), ParamPoly::mu2());
  auto law = FormalGroupLaw::from_log(lg, D);
  auto F = law.series(D);
  CHECK(F.coeff(Mono::var(0, 1).times(Mono::var(1, 1))).is_zero());
  CHECK(F.coeff(Mono::var(0, 2).times(Mono::var(1, 1))) ==
        ParamPoly::monomial(0, 1, Rat(-3)));
  CHECK(law.inverse_series(D) == -TruncSeries::variable(1, D, D, 0));

  // tampering with a coefficient breaks associativity
  FormalGroupLaw::Table bad;
  for (auto &[m, c] : F.terms()) {
    int i = m.e[0], j = m.e[1];
    if (i >= 1 && j >= 1 && i <= j) bad[{i, j}] = c;
  }
  bad[{2, 2}] = ParamPoly(7);
  CHECK_THROWS_AS(FormalGroupLaw::generic(bad, D), config_error);
}
