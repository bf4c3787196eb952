#include "doctest.h"
#include "hlverify/errors.hpp"
#include "hlverify/hall_littlewood.hpp"
#include "oracles.hpp"

using namespace hlv;

namespace {

constexpr int D = 12;

std::vector<std::string> names(int n) {
  std::vector<std::string> r;
  for (int i = 1; i <= n; ++i) r.push_back("x" + std::to_string(i));
  return r;
}

ParamSeries c(const mpq_class& v, int s_exp = 0) { return ParamSeries::monomial(D, v, s_exp); }

LaurentPoly mono(int n, const std::vector<int>& e, const ParamSeries& coef) {
  XMono x{};
  for (std::size_t i = 0; i < e.size(); ++i) x[i] = static_cast<std::int16_t>(e[i]);
  return LaurentPoly::monomial(names(n), x, coef);
}

LaurentPoly P(const Weight& w) { return hl_full(w, slots_vars(static_cast<int>(w.size())), names(static_cast<int>(w.size())), D).poly; }

// Apply a permutation of the variables to every exponent vector.
LaurentPoly permute(const LaurentPoly& p, const std::vector<int>& perm) {
  LaurentPoly r(p.names(), p.order());
  for (const auto& [e, coef] : p.terms()) {
    XMono f{};
    for (std::size_t i = 0; i < perm.size(); ++i) f[static_cast<std::size_t>(perm[i])] = e[i];
    r.add_term(f, coef);
  }
  return r;
}

std::vector<Weight> small_weights(int n) {
  std::vector<Weight> r = partitions_in_box(n, 4, 4);
  for (const Weight& w : weights_in_box(n, 4, 2))
    if (!is_partition(w)) r.push_back(w);
  return r;
}

const std::vector<mpq_class> kPoints{mpq_class(2), mpq_class(-3, 5), mpq_class(7, 2)};

}  // namespace

TEST_SUITE("hall_littlewood") {
  TEST_CASE("two-variable examples") {
    CHECK(P({1, 0}) == mono(2, {1, 0}, c(1)) + mono(2, {0, 1}, c(1)));
    CHECK(P({1, 1}) == mono(2, {1, 1}, c(1)));
    // frozen from the S_2 symmetrization below
    const LaurentPoly p2 = mono(2, {2, 0}, c(1)) + mono(2, {0, 2}, c(1)) + mono(2, {1, 1}, c(1) - c(1, 2));
    CHECK(P({2, 0}) == p2);
  }

  TEST_CASE("P_(2) by S_2 symmetrization") {
    // x1^2 (x1 - t x2)/(x1 - x2) + x2^2 (x2 - t x1)/(x2 - x1), over v_(2,0) = 1
    for (const mpq_class t : {mpq_class(1, 3), mpq_class(-2), mpq_class(5, 7)}) {
      const mpq_class x1 = 3, x2 = mpq_class(-1, 2);
      const mpq_class direct = x1 * x1 * (x1 - t * x2) / (x1 - x2) + x2 * x2 * (x2 - t * x1) / (x2 - x1);
      CHECK(direct == x1 * x1 + x2 * x2 + (1 - t) * x1 * x2);
      CHECK(direct == oracle::hl_value({2, 0}, {x1, x2}, t));
    }
  }

  TEST_CASE("generic polynomial agrees with brute-force symmetrization") {
    for (int n = 1; n <= 3; ++n)
      for (const Weight& w : small_weights(n))
        for (const mpq_class t : {mpq_class(1, 3), mpq_class(-5, 2)}) {
          const std::vector<mpq_class> x(kPoints.begin(), kPoints.begin() + n);
          CHECK_MESSAGE(oracle::eval_exact(hl_generic(w), t, x) == oracle::hl_value(w, x, t), format_weight(w));
        }
  }

  TEST_CASE("symmetric under permuting the variables") {
    for (int n = 2; n <= 3; ++n)
      for (const Weight& w : small_weights(n)) {
        const LaurentPoly p = P(w);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        while (std::next_permutation(perm.begin(), perm.end())) CHECK(permute(p, perm) == p);
      }
  }

  TEST_CASE("leading coefficient is one") {
    for (int n = 1; n <= 3; ++n)
      for (const Weight& w : small_weights(n)) {
        XMono e{};
        for (std::size_t i = 0; i < w.size(); ++i) e[i] = static_cast<std::int16_t>(w[i]);
        CHECK(P(w).coeff(e) == c(1));
      }
  }

  TEST_CASE("shift law") {
    for (int n = 1; n <= 3; ++n)
      for (const Weight& w : small_weights(n)) {
        Weight up = w;
        for (int& p : up) ++p;
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        CHECK(P(up) == P(w) * mono(n, ones, c(1)));
      }
  }

  TEST_CASE("degenerations at t = 0 and t = 1") {
    for (int n = 1; n <= 3; ++n)
      for (const Weight& w : partitions_in_box(n, 4, 4)) {
        const DegenerationReport r = degenerate_check(w, n);
        CHECK_MESSAGE(r.schur_ok, format_weight(w));
        CHECK_MESSAGE(r.monomial_ok, format_weight(w));
        const std::vector<mpq_class> x(kPoints.begin(), kPoints.begin() + n);
        CHECK(oracle::eval_exact(hl_generic(w), 0, x) == oracle::schur_value(w, x));
        CHECK(oracle::eval_exact(hl_generic(w), 1, x) == oracle::monomial_value(w, x));
        CHECK(oracle::eval_exact(schur_by_tableaux(w, n), 0, x) == oracle::schur_value(w, x));
      }
  }

  TEST_CASE("degeneration examples") {
    ExactPoly s21;
    XMono a{}, b{};
    a[1] = 2;
    a[2] = 1;
    b[1] = 1;
    b[2] = 2;
    s21.add(a, 1);
    s21.add(b, 1);
    CHECK(schur_by_tableaux({2, 1}, 2) == s21);
    CHECK(hl_generic({2, 1}).evaluate_slot0(0) == s21);
    ExactPoly m1;
    for (int i = 1; i <= 3; ++i) {
      XMono e{};
      e[static_cast<std::size_t>(i)] = 1;
      m1.add(e, 1);
    }
    CHECK(hl_generic({1, 0, 0}).evaluate_slot0(1) == m1);
    CHECK(P({0, 0}) == mono(2, {0, 0}, c(1)));
  }

  TEST_CASE("Q examples") {
    CHECK(hl_Q({1}, slots_vars(1), names(1), D).poly == mono(1, {1}, c(1) - c(1, 2)));
    CHECK(hl_Q({0}, slots_vars(1), names(1), D).poly == mono(1, {0}, c(1)));
    const ParamSeries phi2 = (c(1) - c(1, 2)) * (c(1) - c(1, 4));
    CHECK(hl_Q({1, 1}, slots_vars(2), names(2), D).poly == mono(2, {1, 1}, phi2));
  }

  TEST_CASE("single permutation terms") {
    // (x1 - t x2)/(x1 - x2) alone has a pole
    CHECK_THROWS_AS(hl_term({0, 0}, {0, 1}, slots_vars(2), names(2), D), DomainError);
    CHECK_THROWS_AS(hl_term({1, 0}, {0, 1}, slots_vars(2), names(2), D), DomainError);
    // sqrt t z to the left of z / sqrt t kills the term
    const std::vector<Slot> args{slot_var(0, 1, 1), slot_var(0, 1, -1)};
    CHECK(hl_term({1, -1}, {0, 1}, args, names(1), D).poly.is_zero());
    CHECK(hl_term({0, 0}, {0, 1}, args, names(1), D).poly.is_zero());
    // the other order survives and is the whole of R
    const HLValue other = hl_term({0, 0}, {1, 0}, args, names(1), D);
    const HLValue full = hl_R({0, 0}, args, names(1), D);
    CHECK(other.s_shift == full.s_shift);
    CHECK(other.poly == full.poly);
  }

  TEST_CASE("arguments with negative s-powers report a shift") {
    const std::vector<Slot> args{slot_var(0, 1, 1), slot_var(0, 1, -1)};
    const HLValue v = hl_full({1, -1}, args, names(1), D);
    // P_(1,-1)(s z, z/s) = s^2 + s^-2 + (1-t) - ... ; check the reconstruction numerically at s = 1/2, z = 3
    const mpq_class sv(1, 2), z(3);
    mpq_class value = 0;
    for (const auto& [e, coef] : v.poly.terms())
      for (const auto& t : coef.terms()) value += t.c * oracle::qpow(sv, t.s) * oracle::qpow(z, e[0]);
    value *= oracle::qpow(sv, -v.s_shift);
    CHECK(value == oracle::hl_value({1, -1}, {sv * z, z / sv}, sv * sv));
  }
}
