#include "hlverify/exact_poly.hpp"

#include <sstream>

#include "hlverify/errors.hpp"

namespace hlv {

namespace {

long dot(const XMono& a, const XMono& b) {
  long r = 0;
  for (int i = 0; i < kMaxVars; ++i) r += static_cast<long>(a[i]) * b[i];
  return r;
}

}  // namespace

ExactPoly ExactPoly::monomial(const XMono& e, const mpz_class& c) {
  ExactPoly p;
  p.add(e, c);
  return p;
}

ExactPoly ExactPoly::binomial(const XMono& e1, const mpz_class& c1, const XMono& e2, const mpz_class& c2) {
  ExactPoly p;
  p.add(e1, c1);
  p.add(e2, c2);
  return p;
}

void ExactPoly::add(const XMono& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
  for (const auto& [e, c] : o.terms) add(e, c);
  return *this;
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
  ExactPoly r;
  mpz_class tmp;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      tmp = ca * cb;
      r.add(xmono_add(ea, eb), tmp);
    }
  return r;
}

ExactPoly ExactPoly::times_monomial(const XMono& e, const mpz_class& c) const {
  ExactPoly r;
  if (c == 0) return r;
  for (const auto& [ea, ca] : terms) r.terms.emplace_hint(r.terms.end(), xmono_add(ea, e), ca * c);
  return r;
}

bool ExactPoly::divide_one_minus(int sign, const XMono& m, ExactPoly& quotient) const {
  quotient.terms.clear();
  const long mm = dot(m, m);
  if (mm == 0) throw DomainError("division by a constant binomial");
  // q[e] = p[e] + sign*q[e-m], processed in increasing <e,m>.
  std::map<std::pair<long, XMono>, mpz_class> work;
  long maxdot = 0;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const long d = dot(e, m);
    if (first || d > maxdot) maxdot = d;
    first = false;
    work.emplace(std::make_pair(d, e), c);
  }
  for (auto it = work.begin(); it != work.end(); it = work.erase(it)) {
    if (it->second == 0) continue;
    const auto& [d, e] = it->first;
    quotient.terms.emplace(e, it->second);
    if (d + mm > maxdot) return false;
    auto [jt, inserted] = work.try_emplace(std::make_pair(d + mm, xmono_add(e, m)), it->second);
    if (!inserted)
      jt->second += sign > 0 ? it->second : mpz_class(-it->second);
    else if (sign < 0)
      jt->second = -jt->second;
  }
  return true;
}

bool ExactPoly::divide_binomial(const XMono& a, const XMono& b, ExactPoly& quotient) const {
  // x^a - x^b = x^a (1 - x^(b-a))
  XMono neg_a{};
  for (int i = 0; i < kMaxVars; ++i) neg_a[i] = static_cast<std::int16_t>(-a[i]);
  return times_monomial(neg_a).divide_one_minus(1, xmono_add(b, a, -1), quotient);
}

ExactPoly ExactPoly::evaluate_slot0(long value) const {
  ExactPoly r;
  for (const auto& [e, c] : terms) {
    if (e[0] < 0) throw DomainError("negative power of slot 0 in evaluation");
    XMono f = e;
    f[0] = 0;
    mpz_class v;
    mpz_pow_ui(v.get_mpz_t(), mpz_class(value).get_mpz_t(), static_cast<unsigned long>(e[0]));
    r.add(f, c * v);
  }
  return r;
}

std::string ExactPoly::str(const std::string& slot0) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    os << (first ? "" : " + ") << c.get_str();
    first = false;
    for (int i = 0; i < kMaxVars; ++i) {
      if (e[i] == 0) continue;
      os << "*" << (i == 0 ? slot0 : "u" + std::to_string(i));
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace hlv
