#include <random>

#include "doctest.h"
#include "hlverify/errors.hpp"
#include "hlverify/laurent.hpp"
#include "oracles.hpp"

using namespace hlv;

namespace {

ParamSeries S(int D) { return ParamSeries::variable(D, Param::S); }
ParamSeries A(int D) { return ParamSeries::variable(D, Param::Alpha); }
ParamSeries B(int D) { return ParamSeries::variable(D, Param::Beta); }
ParamSeries one(int D) { return ParamSeries::constant(D, 1); }

const std::vector<std::string> kXY{"x1", "x2"};

LaurentPoly mono(int D, int e1, int e2, const ParamSeries& c) {
  XMono e{};
  e[0] = static_cast<std::int16_t>(e1);
  e[1] = static_cast<std::int16_t>(e2);
  return LaurentPoly::monomial(kXY, e, c.with_order(D));
}

}  // namespace

TEST_SUITE("param_series") {
  TEST_CASE("difference of squares at order 4") {
    const ParamSeries p = (one(4) + S(4)) * (one(4) - S(4));
    CHECK(p == one(4) - S(4) * S(4));
  }

  TEST_CASE("products beyond the order vanish") {
    for (int D = 1; D <= 6; ++D) CHECK((S(D).pow(D) * S(D)).is_zero());
  }

  TEST_CASE("binomial in alpha and beta") {
    const ParamSeries p = (one(4) + A(4)) * (one(4) + B(4));
    CHECK(p == one(4) + A(4) + B(4) + A(4) * B(4));
    CHECK(p.coeff(0, 1, 1) == 1);
  }

  TEST_CASE("mismatched orders are a configuration error") {
    CHECK_THROWS_AS(S(3) * S(4), ConfigError);
    CHECK_THROWS_AS(S(3) + S(4), ConfigError);
  }

  TEST_CASE("no zero coefficients and nothing above the order is stored") {
    const ParamSeries p = (one(5) + S(5)).pow(7) - (one(5) + S(5)).pow(7);
    CHECK(p.is_zero());
    const ParamSeries q = (one(5) + A(5) + S(5)).pow(9);
    for (const auto& t : q.terms()) {
      CHECK(t.c != 0);
      CHECK(t.degree() <= 5);
    }
  }

  TEST_CASE("ring laws on random elements") {
    std::mt19937 rng(20241015);
    for (int D = 0; D <= 8; ++D)
      for (int rep = 0; rep < 12; ++rep) {
        const ParamSeries a = oracle::random_series(rng, D), b = oracle::random_series(rng, D),
                          c = oracle::random_series(rng, D);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
      }
  }

  TEST_CASE("truncation is a ring homomorphism") {
    std::mt19937 rng(7);
    for (int D = 2; D <= 8; ++D)
      for (int cap = 0; cap <= D; ++cap) {
        const ParamSeries a = oracle::random_series(rng, D, 8), b = oracle::random_series(rng, D, 8);
        const ParamSeries lhs = (a.truncated(cap) * b.truncated(cap)).truncated(cap);
        CHECK(lhs == (a * b).truncated(cap));
        CHECK(mul_trunc(a, b, cap) == (a * b).truncated(cap));
        CHECK(a.truncated(cap) + b.truncated(cap) == (a + b).truncated(cap));
      }
  }

  TEST_CASE("inverse of a unit") {
    std::mt19937 rng(11);
    for (int D = 0; D <= 8; ++D) {
      ParamSeries a = oracle::random_series(rng, D);
      a = a - ParamSeries::constant(D, a.constant_coeff()) + ParamSeries::constant(D, 3);
      CHECK(a * a.inverse() == one(D));
    }
    CHECK_THROWS(S(4).inverse());
  }

  TEST_CASE("substitution into a polynomial") {
    const int D = 6;
    const ParamSeries p = A(D) * A(D) + B(D);
    CHECK(p.substitute(Param::Alpha, -one(D)) == one(D) + B(D));
    CHECK(p.substitute(Param::Beta, -A(D)) == A(D) * A(D) - A(D));
  }

  TEST_CASE("first difference and valuation") {
    const ParamSeries a = one(6) + S(6).pow(3), b = one(6) + S(6).pow(4);
    CHECK(a.first_difference(b) == 3);
    CHECK(!a.first_difference(a));
    CHECK((a - one(6)).valuation() == 3);
    CHECK(!ParamSeries(6).valuation());
  }
}

TEST_SUITE("laurent") {
  TEST_CASE("inverse monomials multiply to one") {
    CHECK(mono(4, 1, 0, one(4)) * mono(4, -1, 0, one(4)) == LaurentPoly::constant(kXY, one(4)));
  }

  TEST_CASE("square of a sum") {
    const LaurentPoly x = mono(4, 1, 0, one(4)), y = mono(4, 0, 1, one(4));
    const LaurentPoly expect = mono(4, 2, 0, one(4)) + mono(4, 1, 1, ParamSeries::constant(4, 2)) + mono(4, 0, 2, one(4));
    CHECK((x + y) * (x + y) == expect);
  }

  TEST_CASE("truncation applies coefficient-wise") {
    const LaurentPoly p = LaurentPoly::constant(kXY, one(4)) - mono(4, 1, 1, S(4) * S(4));
    const LaurentPoly q = p * mono(4, -1, -1, one(4));
    CHECK(q == mono(4, -1, -1, one(4)) - LaurentPoly::constant(kXY, S(4) * S(4)));
    const LaurentPoly r = mono(2, 1, 0, S(2) * S(2)) * mono(2, 0, 1, S(2));
    CHECK(r.is_zero());
  }

  TEST_CASE("variable-list mismatch is a configuration error") {
    const LaurentPoly a = LaurentPoly::constant({"x1"}, one(3)), b = LaurentPoly::constant({"y1"}, one(3));
    CHECK_THROWS_AS(a * b, ConfigError);
    CHECK_THROWS_AS(a + b, ConfigError);
  }

  TEST_CASE("constant term examples") {
    const LaurentPoly p = mono(4, -1, -1, one(4)) + LaurentPoly::constant(kXY, S(4) * S(4));
    CHECK(p.constant_term(kXY) == LaurentPoly::constant(kXY, S(4) * S(4)));
    CHECK(mono(4, 2, 0, one(4)).constant_term({"x1"}).is_zero());
    const LaurentPoly q = LaurentPoly::constant(kXY, ParamSeries::constant(4, 3)) + mono(4, 1, -1, one(4));
    CHECK(q.constant_term({"x1"}) == LaurentPoly::constant(kXY, ParamSeries::constant(4, 3)));
    CHECK_THROWS_AS(q.constant_term({"z9"}), ConfigError);
  }

  TEST_CASE("constant term over all variables is the zero-exponent coefficient") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> ex(-2, 2);
    for (int rep = 0; rep < 30; ++rep) {
      LaurentPoly p(kXY, 5);
      for (int k = 0; k < 6; ++k) p += mono(5, ex(rng), ex(rng), oracle::random_series(rng, 5, 2));
      const LaurentPoly ct = p.constant_term(kXY);
      CHECK(ct.terms().size() <= 1);
      CHECK(ct.coeff(XMono{}) == p.coeff(XMono{}));
    }
  }

  TEST_CASE("specialize to signs and monomials") {
    const LaurentPoly p = mono(4, 1, 0, one(4)) + mono(4, -1, 0, one(4));
    const LaurentPoly a = p.specialize({{"x1", parse_substitution("-1")}});
    CHECK(a == LaurentPoly::constant(kXY, ParamSeries::constant(4, -2)));
    const LaurentPoly b = mono(4, 1, 1, one(4)).specialize({{"x2", parse_substitution("x1^-1")}});
    CHECK(b == LaurentPoly::constant(kXY, one(4)));
    CHECK(mono(4, 3, 0, one(4)).specialize({{"x1", parse_substitution("-1")}}) ==
          LaurentPoly::constant(kXY, ParamSeries::constant(4, -1)));
  }

  TEST_CASE("specialize rejects non-monomial targets") {
    CHECK_THROWS_AS(parse_substitution("s^2*x2"), DomainError);
    CHECK_THROWS_AS(parse_substitution("x1+x2"), DomainError);
    CHECK(parse_substitution("1/x2").power == -1);
  }
}
