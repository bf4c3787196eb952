#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hlv {

// Exponent triple of s, alpha, beta. t is s^2.
struct PMono {
  int s = 0, a = 0, b = 0;
  int degree() const { return s + a + b; }
  bool operator==(const PMono&) const = default;
};

enum class Param { S, Alpha, Beta };

// Position of a monomial in the graded order: by total degree, then by a+b,
// then by b. Pure s-powers come first in each degree.
inline std::uint32_t pmono_index(int s, int a, int b) {
  const std::uint32_t d = s + a + b, k = a + b;
  return d * (d + 1) * (d + 2) / 6 + k * (k + 1) / 2 + b;
}

// Truncated series in (s, alpha, beta) with exact rational coefficients.
// Terms of total degree above order() are never stored.
class ParamSeries {
 public:
  struct Term {
    std::uint32_t idx;
    std::uint8_t s, a, b;
    mpq_class c;
    int degree() const { return s + a + b; }
  };

  static constexpr int kMaxOrder = 120;

  explicit ParamSeries(int order = 0);

  static ParamSeries constant(int order, const mpq_class& c);
  static ParamSeries monomial(int order, const mpq_class& c, int s, int a = 0, int b = 0);
  static ParamSeries variable(int order, Param p);
  // sum_k coeffs[k] s^k
  static ParamSeries s_poly(int order, const std::vector<mpq_class>& coeffs);

  int order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  mpq_class coeff(int s, int a = 0, int b = 0) const;
  mpq_class constant_coeff() const { return coeff(0, 0, 0); }

  // Lowest total degree present; nullopt for zero.
  std::optional<int> valuation() const;
  // Highest total degree present; -1 for zero.
  int max_degree() const;
  // Lowest degree where the two differ; nullopt when equal.
  std::optional<int> first_difference(const ParamSeries& o) const;

  ParamSeries operator-() const;
  ParamSeries& operator+=(const ParamSeries& o);
  ParamSeries& operator-=(const ParamSeries& o);
  ParamSeries& operator*=(const ParamSeries& o);
  ParamSeries& operator*=(const mpq_class& c);
  friend ParamSeries operator+(ParamSeries a, const ParamSeries& b) { return a += b; }
  friend ParamSeries operator-(ParamSeries a, const ParamSeries& b) { return a -= b; }
  friend ParamSeries operator*(const ParamSeries& a, const ParamSeries& b) { return mul_trunc(a, b, a.order_); }
  friend ParamSeries mul_trunc(const ParamSeries& a, const ParamSeries& b, int cap);
  friend ParamSeries operator*(ParamSeries a, const mpq_class& c) { return a *= c; }
  friend ParamSeries operator*(const mpq_class& c, ParamSeries a) { return a *= c; }
  bool operator==(const ParamSeries& o) const;

  ParamSeries pow(int k) const;
  // Multiply by c * s^ds alpha^da beta^db, dropping what exceeds the order.
  ParamSeries shifted(const mpq_class& c, int ds, int da = 0, int db = 0) const;
  // this += c * m * src, keeping only terms of degree <= cap (cap <= order).
  void add_shifted(const ParamSeries& src, const mpq_class& c, const PMono& m, int cap);
  // Drop every term of degree > cap.
  void truncate(int cap);
  ParamSeries truncated(int cap) const {
    ParamSeries r = *this;
    r.truncate(cap);
    return r;
  }
  // Same coefficients viewed in a ring of another order.
  ParamSeries with_order(int order) const;
  // Multiplicative inverse; needs a nonzero constant coefficient.
  ParamSeries inverse() const;
  // Replace the variable p by the series image (same order). Exact only when
  // this series is an untruncated polynomial.
  ParamSeries substitute(Param p, const ParamSeries& image) const;

  std::string str() const;

 private:
  void check_ring(const ParamSeries& o) const;
  int order_;
  std::vector<Term> terms_;
};

// Product truncated at degree cap (cap <= order).
ParamSeries mul_trunc(const ParamSeries& a, const ParamSeries& b, int cap);

std::ostream& operator<<(std::ostream& os, const ParamSeries& p);

}  // namespace hlv
