#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hlverify/param_series.hpp"

namespace hlv {

constexpr int kMaxVars = 8;
using XMono = std::array<std::int16_t, kMaxVars>;

inline XMono xmono_add(const XMono& a, const XMono& b, int scale = 1) {
  XMono r{};
  for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::int16_t>(a[i] + scale * b[i]);
  return r;
}
inline bool xmono_is_zero(const XMono& a) {
  for (auto e : a)
    if (e != 0) return false;
  return true;
}
inline int xmono_l1(const XMono& a) {
  int r = 0;
  for (auto e : a) r += e < 0 ? -e : e;
  return r;
}

// Image of a variable under specialize(): sign * var^power, or sign alone.
struct Substitution {
  int sign = 1;
  std::optional<std::string> var;
  int power = 1;
};

// Reads "1", "-1", "x2", "-x2", "x2^-1" or "1/x2". Anything else (for example
// "s^2*x2") is a DomainError.
Substitution parse_substitution(const std::string& text);

// Laurent polynomial in named torus variables over ParamSeries.
class LaurentPoly {
 public:
  LaurentPoly(std::vector<std::string> names, int order);

  static LaurentPoly constant(std::vector<std::string> names, const ParamSeries& c);
  static LaurentPoly monomial(std::vector<std::string> names, const XMono& e, const ParamSeries& c);

  const std::vector<std::string>& names() const { return names_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  int order() const { return order_; }
  const std::map<XMono, ParamSeries>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int index_of(const std::string& name) const;
  XMono unit(const std::string& name, int power = 1) const;

  ParamSeries coeff(const XMono& e) const;
  void add_term(const XMono& e, const ParamSeries& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const ParamSeries& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const ParamSeries& c) { return a *= c; }
  bool operator==(const LaurentPoly& o) const;

  // Terms whose exponents vanish on every listed variable.
  LaurentPoly constant_term(const std::vector<std::string>& vars) const;
  LaurentPoly specialize(const std::map<std::string, Substitution>& assignment) const;

  std::string str() const;

 private:
  void check_compatible(const LaurentPoly& o) const;
  std::vector<std::string> names_;
  int order_;
  std::map<XMono, ParamSeries> terms_;
};

}  // namespace hlv
