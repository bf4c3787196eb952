#include "hlverify/tcomb.hpp"

#include <functional>
#include <mutex>
#include <sstream>

#include "hlverify/errors.hpp"

namespace hlv {

namespace {

// Exact quotient of integer polynomials (low-to-high coefficients) by a monic divisor.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long c = num[k];
    q[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j)
    if (num[j] != 0) throw ConsistencyError("cyclotomic division left a remainder");
  return q;
}

}  // namespace

const std::vector<long>& cyclotomic_factor(int d) {
  static std::mutex mu;
  static std::map<int, std::vector<long>> monic;  // true Phi_d
  static std::map<int, std::vector<long>> tilde;
  if (d < 1) throw DomainError("cyclotomic index must be positive");
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = tilde.find(d); it != tilde.end()) return it->second;
  std::function<const std::vector<long>&(int)> phi = [&](int k) -> const std::vector<long>& {
    if (auto it = monic.find(k); it != monic.end()) return it->second;
    std::vector<long> p(static_cast<std::size_t>(k) + 1, 0);
    p[0] = -1;
    p[k] = 1;
    for (int e = 1; e < k; ++e)
      if (k % e == 0) p = divide_monic(p, phi(e));
    return monic.emplace(k, std::move(p)).first->second;
  };
  std::vector<long> r = phi(d);
  if (d == 1)
    for (auto& c : r) c = -c;
  return tilde.emplace(d, std::move(r)).first->second;
}

Factored Factored::one_minus_s(int k) {
  if (k < 1) throw DomainError("one_minus_s needs a positive exponent");
  Factored f;
  for (int d = 1; d <= k; ++d)
    if (k % d == 0) f.cyclo_[d] += 1;
  return f;
}

Factored Factored::one_plus_s(int k) { return one_minus_s(2 * k) / one_minus_s(k); }

Factored Factored::one_minus(const SMono& m) {
  if (m.sign != 1 && m.sign != -1) throw DomainError("sign must be +1 or -1");
  if (m.s_exp == 0) return Factored(m.sign > 0 ? 0 : 2);
  if (m.s_exp > 0) return m.sign > 0 ? one_minus_s(m.s_exp) : one_plus_s(m.s_exp);
  // 1 - sign s^-j = -sign s^-j (1 - sign s^j)
  Factored f = one_minus(SMono{m.sign, -m.s_exp}) * s_pow(m.s_exp);
  f.scalar_ *= -m.sign;
  return f;
}

Factored Factored::s_pow(int k) {
  Factored f;
  f.s_power_ = k;
  return f;
}

bool Factored::is_polynomial() const {
  if (is_zero()) return true;
  if (s_power_ < 0) return false;
  for (const auto& [d, e] : cyclo_)
    if (e < 0) return false;
  return true;
}

Factored Factored::numerator() const {
  Factored f(scalar_);
  if (is_zero()) return f;
  f.s_power_ = std::max(s_power_, 0);
  for (const auto& [d, e] : cyclo_)
    if (e > 0) f.cyclo_[d] = e;
  return f;
}

Factored Factored::denominator() const {
  Factored f;
  if (is_zero()) return f;
  f.s_power_ = std::max(-s_power_, 0);
  for (const auto& [d, e] : cyclo_)
    if (e < 0) f.cyclo_[d] = -e;
  return f;
}

Factored& Factored::operator*=(const Factored& o) {
  scalar_ *= o.scalar_;
  if (is_zero()) {
    s_power_ = 0;
    cyclo_.clear();
    return *this;
  }
  s_power_ += o.s_power_;
  for (const auto& [d, e] : o.cyclo_) {
    int& x = cyclo_[d];
    x += e;
    if (x == 0) cyclo_.erase(d);
  }
  return *this;
}

Factored& Factored::operator/=(const Factored& o) {
  if (o.is_zero()) throw DomainError("division by zero in factored arithmetic");
  return *this *= o.pow(-1);
}

Factored Factored::pow(int k) const {
  if (is_zero()) {
    if (k <= 0) throw DomainError("non-positive power of zero");
    return *this;
  }
  Factored f;
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), scalar_.get_num_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  mpz_pow_ui(den.get_mpz_t(), scalar_.get_den_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  f.scalar_ = k < 0 ? mpq_class(den, num) : mpq_class(num, den);
  f.scalar_.canonicalize();
  f.s_power_ = s_power_ * k;
  if (k != 0)
    for (const auto& [d, e] : cyclo_) f.cyclo_[d] = e * k;
  return f;
}

bool Factored::operator==(const Factored& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  return scalar_ == o.scalar_ && s_power_ == o.s_power_ && cyclo_ == o.cyclo_;
}

ParamSeries Factored::expand(int order) const {
  if (!is_polynomial()) throw DomainError("factored expression is not a polynomial: " + str());
  ParamSeries r = ParamSeries::monomial(order, scalar_, std::max(s_power_, 0));
  for (const auto& [d, e] : cyclo_) {
    const auto& c = cyclotomic_factor(d);
    std::vector<mpq_class> q(c.begin(), c.end());
    const ParamSeries f = ParamSeries::s_poly(order, q);
    for (int k = 0; k < e; ++k) r *= f;
  }
  return r;
}

ParamSeries Factored::series(int order) const {
  if (is_zero()) return ParamSeries(order);
  return numerator().expand(order) * denominator().expand(order).inverse();
}

std::string Factored::str() const {
  std::ostringstream os;
  os << scalar_.get_str();
  if (is_zero()) return os.str();
  if (s_power_ != 0) os << "*s^" << s_power_;
  for (const auto& [d, e] : cyclo_) {
    os << "*" << (d == 1 ? std::string("(1-s)") : "Phi" + std::to_string(d));
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

TComb::TComb(int order, int base) : order_(order), base_(base) {
  if (base < 1) throw ConfigError("t must be a positive power of s");
}

Factored TComb::one_minus_t(int k) const {
  if (k < 0) throw DomainError("negative t-power in 1 - t^k");
  return k == 0 ? Factored(0) : Factored::one_minus_s(base_ * k);
}

Factored TComb::t_integer(int i) const {
  if (i < 0) throw DomainError("negative t-integer");
  if (i == 0) return Factored(0);
  return one_minus_t(i) / one_minus_t(1);
}

Factored TComb::t_factorial(int m) const {
  if (m < 0) throw DomainError("negative t-factorial");
  Factored f;
  for (int i = 2; i <= m; ++i) f *= t_integer(i);
  return f;
}

Factored TComb::phi(int r) const {
  if (r < 0) throw DomainError("phi_r needs r >= 0");
  Factored f;
  for (int j = 1; j <= r; ++j) f *= one_minus_t(j);
  return f;
}

Factored TComb::v_lambda(const Weight& w, bool include_zeros) const {
  Factored f;
  for (auto [v, m] : multiplicities(w))
    if (include_zeros || v != 0) f *= t_factorial(m);
  return f;
}

Factored TComb::b_lambda(const Weight& w) const {
  Factored f;
  for (auto [v, m] : multiplicities(w))
    if (v != 0) f *= phi(m);
  return f;
}

Factored TComb::t_binomial_factored(int m, int i) const {
  if (i < 0 || m < i) return Factored(0);
  return t_factorial(m) / (t_factorial(m - i) * t_factorial(i));
}

ParamSeries TComb::t_binomial(int m, int i) const { return t_binomial_factored(m, i).expand(order_); }

ParamSeries TComb::rogers_szego(int m, const ParamSeries& z) const {
  if (m < 0) throw DomainError("Rogers-Szego index must be non-negative");
  ParamSeries r(order_), zp = ParamSeries::constant(order_, 1);
  for (int i = 0; i <= m; ++i) {
    r += zp * t_binomial(m, i);
    if (i < m) zp *= z;
  }
  return r;
}

ParamSeries TComb::rogers_szego_hom(int m, const ParamSeries& a, const ParamSeries& b) const {
  if (m < 0) throw DomainError("Rogers-Szego index must be non-negative");
  std::vector<ParamSeries> ap{ParamSeries::constant(order_, 1)};
  for (int i = 1; i <= m; ++i) ap.push_back(ap.back() * a);
  ParamSeries r(order_), bp = ParamSeries::constant(order_, 1);
  for (int i = 0; i <= m; ++i) {
    r += ap[static_cast<std::size_t>(m - i)] * bp * t_binomial(m, i);
    if (i < m) bp *= b;
  }
  return r;
}

Factored TComb::q_pochhammer(const SMono& a, const SMono& q, int n) const {
  if (n < 0) throw DomainError("q-Pochhammer length must be non-negative");
  Factored f;
  int sign = a.sign;
  for (int j = 0; j < n; ++j) {
    f *= Factored::one_minus(SMono{sign, a.s_exp + j * q.s_exp});
    sign *= q.sign;
  }
  return f;
}

ParamSeries TComb::q_pochhammer_inf(const SMono& a, const SMono& q) const {
  if (q.s_exp < 1) throw DomainError("infinite q-Pochhammer needs a ratio of positive degree");
  if (a.s_exp < 0) throw DomainError("infinite q-Pochhammer needs a start of non-negative degree");
  ParamSeries r = ParamSeries::constant(order_, 1);
  int sign = a.sign;
  for (int e = a.s_exp; e <= order_; e += q.s_exp) {
    r *= Factored::one_minus(SMono{sign, e}).expand(order_);
    sign *= q.sign;
  }
  return r;
}

Factored TComb::c_zero(const Weight& mu, const std::vector<SMono>& args) const {
  const int l = weight_length(mu);
  Factored f;
  for (const SMono& x : args)
    for (int i = 1; i <= l; ++i) {
      const int e = x.s_exp + base_ * (1 - i);
      if (e < 0) throw DomainError("C-symbol factor 1 - t^(1-i) x is not a polynomial in s");
      f *= Factored::one_minus(SMono{x.sign, e});
    }
  return f;
}

Factored TComb::c_minus(const Weight& mu, const SMono& x) const {
  const Weight m = strip_zeros(mu);
  const int l = static_cast<int>(m.size());
  Factored f = Factored::one_minus(x).pow(l);
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      if (m[static_cast<std::size_t>(i)] != m[static_cast<std::size_t>(j)]) continue;
      const Factored den = Factored::one_minus(SMono{x.sign, x.s_exp + base_ * (j - i - 1)});
      if (den.is_zero()) throw DomainError("C-symbol denominator vanishes");
      f *= Factored::one_minus(SMono{x.sign, x.s_exp + base_ * (j - i)}) / den;
    }
  return f;
}

Factored TComb::c_plus(const Weight&, const SMono&) const { return Factored(1); }

}  // namespace hlv
