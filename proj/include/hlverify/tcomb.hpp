#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "hlverify/param_series.hpp"
#include "hlverify/partitions.hpp"

namespace hlv {

// sign * s^exp
struct SMono {
  int sign = 1;
  int s_exp = 0;
};

// Coefficients of the integer polynomial Phi~_d(s): Phi_d(s) for d >= 2 and
// 1 - s for d = 1, so that 1 - s^k is the product of Phi~_d over d | k.
const std::vector<long>& cyclotomic_factor(int d);

// scalar * s^s_power * prod_d Phi~_d(s)^e_d with signed exponents. Every
// rational function of s built from t-integers lives here, so division is
// exponent bookkeeping.
class Factored {
 public:
  Factored(const mpq_class& scalar = 1) : scalar_(scalar) {}  // NOLINT: implicit from scalar

  static Factored one_minus_s(int k);            // 1 - s^k, k >= 1
  static Factored one_plus_s(int k);             // 1 + s^k, k >= 1
  static Factored one_minus(const SMono& m);     // 1 - m
  static Factored s_pow(int k);

  const mpq_class& scalar() const { return scalar_; }
  int s_power() const { return s_power_; }
  const std::map<int, int>& cyclo() const { return cyclo_; }

  bool is_zero() const { return scalar_ == 0; }
  bool is_polynomial() const;
  Factored numerator() const;
  Factored denominator() const;

  Factored& operator*=(const Factored& o);
  Factored& operator/=(const Factored& o);
  friend Factored operator*(Factored a, const Factored& b) { return a *= b; }
  friend Factored operator/(Factored a, const Factored& b) { return a /= b; }
  Factored pow(int k) const;
  bool operator==(const Factored& o) const;

  // Polynomial expansion; DomainError when a negative exponent remains.
  ParamSeries expand(int order) const;
  // numerator * denominator^{-1} as a truncated series.
  ParamSeries series(int order) const;
  std::string str() const;

 private:
  mpq_class scalar_;
  int s_power_ = 0;
  std::map<int, int> cyclo_;
};

// t-analogue combinatorics with t = s^base (base 1: sqrt t, 2: t, 4: t^2).
class TComb {
 public:
  explicit TComb(int order, int base = 2);
  int order() const { return order_; }
  int base() const { return base_; }

  Factored one_minus_t(int k) const;  // 1 - t^k
  Factored t_integer(int i) const;    // [i]
  Factored t_factorial(int m) const;  // [m]!
  Factored phi(int r) const;          // (1-t)...(1-t^r)
  Factored v_lambda(const Weight& w, bool include_zeros = true) const;
  Factored b_lambda(const Weight& w) const;
  Factored t_binomial_factored(int m, int i) const;
  ParamSeries t_binomial(int m, int i) const;

  // H_m(z;t) = sum_i z^i [m choose i]
  ParamSeries rogers_szego(int m, const ParamSeries& z) const;
  // sum_i a^(m-i) b^i [m choose i]; equals a^m H_m(b/a) without dividing.
  ParamSeries rogers_szego_hom(int m, const ParamSeries& a, const ParamSeries& b) const;

  // (a;q)_n for finite n; (a;q)_inf truncated at the order.
  Factored q_pochhammer(const SMono& a, const SMono& q, int n) const;
  ParamSeries q_pochhammer_inf(const SMono& a, const SMono& q) const;

  // q = 0 C-symbols. Arguments are absolute s-monomials.
  Factored c_zero(const Weight& mu, const std::vector<SMono>& args) const;
  Factored c_minus(const Weight& mu, const SMono& x) const;
  Factored c_plus(const Weight& mu, const SMono& x) const;

 private:
  int order_;
  int base_;
};

}  // namespace hlv
