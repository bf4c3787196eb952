#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "hlverify/laurent.hpp"

namespace hlv {

// Sparse Laurent polynomial with integer coefficients. Used for the generic
// Hall-Littlewood polynomial (slot 0 = t, slots 1.. = abstract variables) and
// for single permutation terms after substitution (slot 0 = s).
class ExactPoly {
 public:
  std::map<XMono, mpz_class> terms;

  static ExactPoly monomial(const XMono& e, const mpz_class& c = 1);
  static ExactPoly binomial(const XMono& e1, const mpz_class& c1, const XMono& e2, const mpz_class& c2);

  bool is_zero() const { return terms.empty(); }
  void add(const XMono& e, const mpz_class& c);
  ExactPoly& operator+=(const ExactPoly& o);
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
  ExactPoly times_monomial(const XMono& e, const mpz_class& c = 1) const;
  bool operator==(const ExactPoly& o) const { return terms == o.terms; }

  // Quotient by (1 - sign*x^m). Returns false when the division leaves a
  // remainder; the quotient is then unspecified.
  bool divide_one_minus(int sign, const XMono& m, ExactPoly& quotient) const;
  // Quotient by (x^a - x^b); false on remainder.
  bool divide_binomial(const XMono& a, const XMono& b, ExactPoly& quotient) const;

  // Fix slot 0 to an integer value (only non-negative slot-0 exponents).
  ExactPoly evaluate_slot0(long value) const;

  std::string str(const std::string& slot0 = "t") const;
};

}  // namespace hlv
