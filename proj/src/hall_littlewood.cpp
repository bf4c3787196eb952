#include "hlverify/hall_littlewood.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>

#include "hlverify/errors.hpp"
#include "hlverify/tcomb.hpp"

namespace hlv {

namespace {

XMono u_unit(int slot, int power = 1) {
  XMono e{};
  e[slot] = static_cast<std::int16_t>(power);
  return e;
}

int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

ExactPoly compute_R(const Weight& w) {
  const int N = static_cast<int>(w.size());
  if (N + 1 > kMaxVars) throw ConfigError("too many variables for a Hall-Littlewood polynomial");
  const int shift = w.empty() ? 0 : std::max(0, -w.back());
  XMono lead{};
  for (int k = 0; k < N; ++k) lead[k + 1] = static_cast<std::int16_t>(w[static_cast<std::size_t>(k)] + shift);

  ExactPoly F = ExactPoly::monomial(lead);
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      F = F * ExactPoly::binomial(u_unit(i), 1, xmono_add(u_unit(0), u_unit(j)), -1);

  std::vector<int> perm(static_cast<std::size_t>(N));
  for (int k = 0; k < N; ++k) perm[static_cast<std::size_t>(k)] = k;
  ExactPoly A;
  do {
    const int sg = permutation_sign(perm);
    for (const auto& [e, c] : F.terms) {
      XMono f{};
      f[0] = e[0];
      for (int k = 0; k < N; ++k) f[perm[static_cast<std::size_t>(k)] + 1] = e[k + 1];
      A.add(f, sg > 0 ? c : mpz_class(-c));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  ExactPoly q;
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      if (!A.divide_binomial(u_unit(i), u_unit(j), q))
        throw ConsistencyError("antisymmetrized numerator not divisible by the Vandermonde product");
      std::swap(A, q);
    }
  XMono back{};
  for (int k = 1; k <= N; ++k) back[k] = static_cast<std::int16_t>(-shift);
  return A.times_monomial(back);
}

ExactPoly divide_by_v(const ExactPoly& R, const Weight& w) {
  ExactPoly P = R, q;
  const ExactPoly one_minus_t = ExactPoly::binomial(XMono{}, 1, u_unit(0), -1);
  for (auto [v, m] : multiplicities(w))
    for (int k = 2; k <= m; ++k) {
      P = P * one_minus_t;
      if (!P.divide_one_minus(1, u_unit(0, k), q))
        throw ConsistencyError("symmetrization not divisible by v_lambda(t)");
      std::swap(P, q);
    }
  return P;
}

struct HLCache {
  std::mutex mu;
  std::map<Weight, std::unique_ptr<ExactPoly>> R, P;
};

HLCache& cache() {
  static HLCache c;
  return c;
}

// Move an integer polynomial in (s; x) into the series ring, factoring out the
// most negative power of s.
HLValue to_hl_value(const ExactPoly& p, const std::vector<std::string>& names, int order) {
  int min_s = 0;
  for (const auto& [e, c] : p.terms) min_s = std::min<int>(min_s, e[0]);
  const int shift = -min_s;
  std::map<XMono, std::vector<mpq_class>> by_x;
  for (const auto& [e, c] : p.terms) {
    const int se = e[0] + shift;
    if (se > order) continue;
    XMono x{};
    for (int i = 1; i < kMaxVars; ++i) x[i - 1] = e[i];
    auto& v = by_x[x];
    if (static_cast<int>(v.size()) <= se) v.resize(static_cast<std::size_t>(se) + 1);
    v[static_cast<std::size_t>(se)] += c;
  }
  HLValue out{shift, LaurentPoly(names, order)};
  for (const auto& [x, v] : by_x) out.poly.add_term(x, ParamSeries::s_poly(order, v));
  return out;
}

// sign * s^s_exp * x as a term of an ExactPoly with s in slot 0.
std::pair<XMono, int> slot_mono(const Slot& a) {
  XMono e{};
  e[0] = static_cast<std::int16_t>(a.s_exp);
  for (int i = 0; i + 1 < kMaxVars; ++i) e[i + 1] = a.x[i];
  if (a.x[kMaxVars - 1] != 0) throw ConfigError("argument uses too many torus variables");
  return {e, a.sign};
}

}  // namespace

Slot slot_var(int var, int power, int s_exp, int sign) {
  Slot s;
  s.sign = sign;
  s.s_exp = s_exp;
  s.x[var] = static_cast<std::int16_t>(power);
  return s;
}

Slot slot_const(int sign) {
  Slot s;
  s.sign = sign;
  return s;
}

std::vector<Slot> slots_plus_minus(int n, int first) {
  std::vector<Slot> r;
  for (int i = 0; i < n; ++i) r.push_back(slot_var(first + i, 1));
  for (int i = 0; i < n; ++i) r.push_back(slot_var(first + i, -1));
  return r;
}

std::vector<Slot> slots_vars(int n, int first, int power) {
  std::vector<Slot> r;
  for (int i = 0; i < n; ++i) r.push_back(slot_var(first + i, power));
  return r;
}

const ExactPoly& hl_generic_R(const Weight& w) {
  require_weight(w, true);
  HLCache& c = cache();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    if (auto it = c.R.find(w); it != c.R.end()) return *it->second;
  }
  auto R = std::make_unique<ExactPoly>(compute_R(w));
  std::lock_guard<std::mutex> lock(c.mu);
  auto [it, inserted] = c.R.try_emplace(w, std::move(R));
  return *it->second;
}

const ExactPoly& hl_generic(const Weight& w) {
  require_weight(w, true);
  HLCache& c = cache();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    if (auto it = c.P.find(w); it != c.P.end()) return *it->second;
  }
  auto P = std::make_unique<ExactPoly>(divide_by_v(hl_generic_R(w), w));
  std::lock_guard<std::mutex> lock(c.mu);
  auto [it, inserted] = c.P.try_emplace(w, std::move(P));
  return *it->second;
}

HLValue substitute_slots(const ExactPoly& generic, const std::vector<Slot>& args,
                         const std::vector<std::string>& names, int order, int t_exp) {
  const int N = static_cast<int>(args.size());
  std::vector<std::pair<XMono, int>> img;
  for (const auto& a : args) img.push_back(slot_mono(a));
  ExactPoly sub;
  for (const auto& [e, c] : generic.terms) {
    XMono out{};
    out[0] = static_cast<std::int16_t>(e[0] * t_exp);
    int sign = 1;
    for (int k = 1; k < kMaxVars; ++k) {
      if (e[k] == 0) continue;
      if (k > N) throw ConfigError("fewer arguments than polynomial variables");
      const auto& [m, sg] = img[static_cast<std::size_t>(k - 1)];
      out = xmono_add(out, m, e[k]);
      if (sg < 0 && (e[k] & 1)) sign = -sign;
    }
    sub.add(out, sign > 0 ? c : mpz_class(-c));
  }
  return to_hl_value(sub, names, order);
}

HLValue hl_full(const Weight& w, const std::vector<Slot>& args, const std::vector<std::string>& names, int order,
                int t_exp) {
  if (args.size() != w.size()) throw ConfigError("argument count must equal the number of parts");
  return substitute_slots(hl_generic(w), args, names, order, t_exp);
}

HLValue hl_R(const Weight& w, const std::vector<Slot>& args, const std::vector<std::string>& names, int order,
             int t_exp) {
  if (args.size() != w.size()) throw ConfigError("argument count must equal the number of parts");
  return substitute_slots(hl_generic_R(w), args, names, order, t_exp);
}

HLValue hl_Q(const Weight& w, const std::vector<Slot>& args, const std::vector<std::string>& names, int order,
             int t_exp) {
  require_weight(w, false);
  HLValue v = hl_full(w, args, names, order, t_exp);
  v.poly *= TComb(order, t_exp).b_lambda(w).expand(order);
  return v;
}

HLValue hl_term(const Weight& w, const std::vector<int>& perm, const std::vector<Slot>& args,
                const std::vector<std::string>& names, int order, int t_exp) {
  const std::size_t N = w.size();
  if (args.size() != N || perm.size() != N) throw ConfigError("permutation, weight and arguments differ in length");
  {
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < N; ++k)
      if (sorted[k] != static_cast<int>(k)) throw ConfigError("not a permutation");
  }
  std::vector<std::pair<XMono, int>> at;
  for (std::size_t k = 0; k < N; ++k) at.push_back(slot_mono(args[static_cast<std::size_t>(perm[k])]));

  XMono lead{};
  int sign = 1;
  for (std::size_t k = 0; k < N; ++k) {
    lead = xmono_add(lead, at[k].first, w[k]);
    if (at[k].second < 0 && (w[k] & 1)) sign = -sign;
  }
  ExactPoly num = ExactPoly::monomial(lead, sign);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      const auto& [a, sa] = at[i];
      XMono tb = at[j].first;
      tb[0] = static_cast<std::int16_t>(tb[0] + t_exp);
      const int sb = at[j].second;
      if (a == tb && sa == sb) return HLValue{0, LaurentPoly(names, order)};
      num = num * ExactPoly::binomial(a, sa, tb, -sb);
    }
  ExactPoly q;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      const auto& [a, sa] = at[i];
      const auto& [b, sb] = at[j];
      if (a == b && sa == sb) throw DomainError("permutation term has a pole on the diagonal");
      // sa x^a - sb x^b = sa x^a (1 - sa sb x^(b-a))
      XMono neg_a{};
      for (int k = 0; k < kMaxVars; ++k) neg_a[k] = static_cast<std::int16_t>(-a[k]);
      if (!num.times_monomial(neg_a, sa).divide_one_minus(sa * sb, xmono_add(b, a, -1), q))
        throw DomainError("permutation term is not a Laurent polynomial at these arguments");
      std::swap(num, q);
    }
  return to_hl_value(num, names, order);
}

ExactPoly schur_by_tableaux(const Weight& partition, int nvars) {
  require_weight(partition, false);
  const Weight shape = strip_zeros(partition);
  ExactPoly out;
  if (static_cast<int>(shape.size()) > nvars) return out;
  std::vector<std::vector<int>> tab;
  for (int len : shape) tab.emplace_back(static_cast<std::size_t>(len), 0);
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == tab.size()) {
      XMono e{};
      for (const auto& row : tab)
        for (int v : row) ++e[v];
      out.add(e, 1);
      return;
    }
    if (c == tab[r].size()) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, tab[r][c - 1]);
    if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
    for (int v = lo; v <= nvars; ++v) {
      tab[r][c] = v;
      fill(r, c + 1);
    }
  };
  fill(0, 0);
  return out;
}

ExactPoly monomial_symmetric(const Weight& partition, int nvars) {
  Weight w = pad(partition, nvars);
  std::sort(w.begin(), w.end());
  ExactPoly out;
  do {
    XMono e{};
    for (int k = 0; k < nvars; ++k) e[k + 1] = static_cast<std::int16_t>(w[static_cast<std::size_t>(k)]);
    out.add(e, 1);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

DegenerationReport degenerate_check(const Weight& partition, int nvars) {
  const ExactPoly& P = hl_generic(pad(partition, nvars));
  DegenerationReport r;
  r.schur_ok = P.evaluate_slot0(0) == schur_by_tableaux(partition, nvars);
  r.monomial_ok = P.evaluate_slot0(1) == monomial_symmetric(partition, nvars);
  return r;
}

}  // namespace hlv
