#include <cstdlib>

#include "doctest.h"
#include "hlverify/densities.hpp"
#include "hlverify/errors.hpp"
#include "oracles.hpp"

using namespace hlv;

namespace {

const KParam kZ = KParam::none(), kP1 = KParam::unit(1), kM1 = KParam::unit(-1);
const KParam kPs = KParam::mono(1, 1), kMs = KParam::mono(-1, 1);
const KParam kPt = KParam::mono(1, 2), kMt = KParam::mono(-1, 2);

ParamSeries one(int D) { return ParamSeries::constant(D, 1); }

LaurentPoly xmono(const std::vector<std::string>& vars, int D, std::vector<int> e, const ParamSeries& c) {
  XMono x{};
  for (std::size_t i = 0; i < e.size(); ++i) x[i] = static_cast<std::int16_t>(e[i]);
  return LaurentPoly::monomial(vars, x, c.with_order(D));
}

// (1 - c x^m) as a Laurent polynomial
LaurentPoly one_minus(const std::vector<std::string>& vars, int D, const mpq_class& coef, const PMono& c,
                      const XMono& m) {
  LaurentPoly p = LaurentPoly::constant(vars, one(D));
  p.add_term(m, ParamSeries::monomial(D, -coef, c.s, c.a, c.b));
  return p;
}

// The uncancelled density numerator prod(1 - x^{+-2}) prod(1 - x_i^{+-} x_j^{+-}) and
// denominator prod over parameters p of (1 - p x^{+-1}) and over pairs of (1 - t x_i^{+-} x_j^{+-}).
std::pair<LaurentPoly, LaurentPoly> koornwinder_full(int n, const std::array<KParam, 4>& prm, int D) {
  const auto vars = var_names("x", n);
  LaurentPoly num = LaurentPoly::constant(vars, one(D)), den = num;
  auto unit = [&](int i, int p) {
    XMono e{};
    e[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(p);
    return e;
  };
  for (int i = 0; i < n; ++i) {
    num = num * one_minus(vars, D, 1, PMono{}, unit(i, 2)) * one_minus(vars, D, 1, PMono{}, unit(i, -2));
    for (const KParam& k : prm) {
      if (k.zero) continue;
      for (int p : {1, -1}) den = den * one_minus(vars, D, k.sign, PMono{k.s_exp, 0, 0}, unit(i, p));
    }
    for (int j = i + 1; j < n; ++j)
      for (int a : {1, -1})
        for (int b : {1, -1}) {
          const XMono e = xmono_add(unit(i, a), unit(j, b));
          num = num * one_minus(vars, D, 1, PMono{}, e);
          den = den * one_minus(vars, D, 1, PMono{2, 0, 0}, e);
        }
  }
  return {num, den};
}

ParamSeries series_of(const Factored& f, int D) { return f.series(D); }

}  // namespace

TEST_SUITE("densities") {
  TEST_CASE("Selberg density structure") {
    const DensityProduct d1 = selberg_density(1, 8);
    CHECK(d1.numerator == LaurentPoly::constant(d1.vars, one(8)));
    CHECK(d1.geo.empty());
    const DensityProduct d2 = selberg_density(2, 8);
    const LaurentPoly expect = (LaurentPoly::constant(d2.vars, one(8)) - xmono(d2.vars, 8, {1, -1}, one(8))) *
                               (LaurentPoly::constant(d2.vars, one(8)) - xmono(d2.vars, 8, {-1, 1}, one(8)));
    CHECK(d2.numerator == expect);
    REQUIRE(d2.geo.size() == 2);
    for (const GeoFactor& g : d2.geo) {
      CHECK(g.c == PMono{2, 0, 0});
      CHECK(g.coef == 1);
      CHECK(xmono_l1(g.m) == 2);
    }
  }

  TEST_CASE("Selberg total mass for two variables is 2/(1+t)") {
    const DensityProduct d = selberg_density(2, 8);
    const ParamSeries expect = oracle::s_series(8, [](int k) { return k % 2 ? 0 : (k / 2 % 2 ? -2 : 2); });
    CHECK(oracle::ct_brute(d) == expect);
    CHECK(ct_integrate(d) == expect);
  }

  TEST_CASE("single geometric term") {
    for (int D = 2; D <= 6; ++D) {
      DensityProduct d;
      d.vars = {"x1", "x2"};
      d.numerator = xmono(d.vars, D, {-1, -1}, one(D));
      XMono m{};
      m[0] = 1;
      m[1] = 1;
      d.geo.push_back(GeoFactor{1, PMono{2, 0, 0}, m});
      CHECK(ct_integrate(d) == ParamSeries::monomial(D, 1, 2));
    }
  }

  TEST_CASE("rank one Koornwinder examples") {
    const int D = 8;
    const DensityProduct d = koornwinder_density(1, {kPs, kMs, kZ, kZ}, D);
    CHECK(d.geo.size() == 4);
    for (const GeoFactor& g : d.geo) CHECK(g.c == PMono{1, 0, 0});
    const LaurentPoly num = (LaurentPoly::constant(d.vars, one(D)) - xmono(d.vars, D, {2}, one(D))) *
                            (LaurentPoly::constant(d.vars, one(D)) - xmono(d.vars, D, {-2}, one(D)));
    CHECK(d.numerator * ParamSeries::constant(D, d.prefactor * 2) == num);

    const DensityProduct e = koornwinder_density(1, {kP1, kM1, kPs, kMs}, D);
    CHECK(e.numerator * ParamSeries::constant(D, e.prefactor * 2) == LaurentPoly::constant(e.vars, one(D)));
    CHECK(e.geo.size() == 4);

    const DensityProduct f = koornwinder_density(1, {kPt, kM1, kPs, kMs}, D);
    const LaurentPoly numf = (LaurentPoly::constant(f.vars, one(D)) - xmono(f.vars, D, {1}, one(D))) *
                             (LaurentPoly::constant(f.vars, one(D)) - xmono(f.vars, D, {-1}, one(D)));
    CHECK(f.numerator * ParamSeries::constant(D, f.prefactor * 2) == numf);
    CHECK(f.geo.size() == 6);
  }

  TEST_CASE("rank one Koornwinder integrals") {
    const int D = 8;
    // (1-t)/(1-t^2)
    const ParamSeries i1 = ct_integrate(koornwinder_density(1, {kPs, kMs, kZ, kZ}, D));
    CHECK(i1 == (Factored::one_minus_s(2) / Factored::one_minus_s(4)).series(D));
    CHECK(i1 == oracle::s_series(D, [](int k) { return k % 2 ? 0 : (k / 2 % 2 ? -1 : 1); }));
    // (1-t)/(sqrt t; sqrt t)_2
    const ParamSeries i2 = ct_integrate(koornwinder_density(1, {kP1, kPs, kZ, kZ}, D));
    CHECK(i2 == (Factored::one_minus_s(2) / (Factored::one_minus_s(1) * Factored::one_minus_s(2))).series(D));
  }

  TEST_CASE("cancellation reproduces the full density") {
    const int D = 6;
    const std::vector<std::array<KParam, 4>> cases{
        {kPs, kMs, kZ, kZ},   {kP1, kPs, kZ, kZ},   {kP1, kM1, kPs, kMs}, {kPt, kMt, kPs, kMs},
        {kPt, kM1, kPs, kMs}, {kP1, kMt, kPs, kMs}, {kP1, kM1, kZ, kZ},  {kM1, kPt, kZ, kZ}};
    for (int n = 1; n <= 2; ++n)
      for (const auto& prm : cases) {
        const DensityProduct d = koornwinder_density(n, prm, D);
        auto [num, den] = koornwinder_full(n, prm, D);
        LaurentPoly geo = LaurentPoly::constant(d.vars, one(D));
        for (const GeoFactor& g : d.geo) geo = geo * one_minus(d.vars, D, g.coef, g.c, g.m);
        // num_c / geo == num / den  <=>  num_c * den == num * geo
        CHECK(d.numerator * den == num * geo);
        CHECK(d.prefactor == mpq_class(1, n == 1 ? 2 : 8));
        for (const GeoFactor& g : d.geo) CHECK(g.c.degree() >= 1);
      }
  }

  TEST_CASE("pruned integration agrees with full expansion") {
    const int D = 6;
    for (const auto& prm : std::vector<std::array<KParam, 4>>{{kP1, kM1, kPs, kMs}, {kPt, kM1, kPs, kMs}, {kP1, kPs, kZ, kZ}}) {
      const DensityProduct d = koornwinder_density(2, prm, D);
      CHECK(ct_integrate(d) == oracle::ct_brute(d));
    }
    CHECK(ct_integrate(paired_density(1, D)) == oracle::ct_brute(paired_density(1, D)));
    CHECK(ct_integrate(block_selberg_density(1, 2, D)) == oracle::ct_brute(block_selberg_density(1, 2, D)));
  }

  TEST_CASE("Gustafson normalizations") {
    const int D = 12;
    for (int item = 1; item <= 6; ++item) {
      const int max_n = item == 1 ? 3 : 2;
      for (int n = 1; n <= max_n; ++n) {
        const Gustafson g = gustafson_item(item);
        const ParamSeries I = ct_integrate(gustafson_density(g, n, D));
        const Factored F = gustafson_rhs(g, n);
        CHECK_MESSAGE(I * F.denominator().expand(D) == F.numerator().expand(D), "item " << item << " n " << n);
      }
    }
  }

  TEST_CASE("Gustafson closed forms") {
    const TComb t(0, 2);
    CHECK(gustafson_rhs(Gustafson::Symplectic, 2) ==
          t.one_minus_t(1).pow(2) / (Factored::one_minus_s(4) * Factored::one_minus_s(8)));
    CHECK(gustafson_rhs(Gustafson::OMinusEven, 2) ==
          t.one_minus_t(1) / (Factored::one_minus_s(6) * Factored::one_minus_s(8)));
    CHECK(gustafson_rhs(Gustafson::OPlusOdd, 1) == t.one_minus_t(1).pow(2) / t.phi(3));
    CHECK_THROWS_AS(gustafson_item(7), ConfigError);
  }

  TEST_CASE("parameters of modulus above one are rejected") {
    CHECK_THROWS_AS(koornwinder_density(1, {KParam::mono(1, -1), kZ, kZ, kZ}, 4), DomainError);
    CHECK_THROWS_AS(koornwinder_density(1, {kP1, kP1, kZ, kZ}, 4), DomainError);
  }

  TEST_CASE("expandability certificate") {
    DensityProduct d;
    d.vars = {"x1"};
    d.numerator = LaurentPoly::constant(d.vars, one(4));
    XMono m{};
    m[0] = 1;
    d.geo.push_back(GeoFactor{1, PMono{}, m});
    CHECK_THROWS_AS(ct_integrate(d), DomainError);
  }

  TEST_CASE("memory ceiling raises a resource error") {
    ::setenv("HLV_MEM_LIMIT_MIB", "1", 1);
    CHECK(memory_limit_bytes() == 1u << 20);
    bool thrown = false;
    try {
      ct_integrate(koornwinder_density(3, {kP1, kM1, kPs, kMs}, 30));
    } catch (const ResourceError& e) {
      thrown = true;
      CHECK(e.factors_total > 0);
      CHECK(e.factors_done <= e.factors_total);
    }
    ::unsetenv("HLV_MEM_LIMIT_MIB");
    CHECK(thrown);
    CHECK(memory_limit_bytes() == std::size_t(4096) << 20);
  }
}
