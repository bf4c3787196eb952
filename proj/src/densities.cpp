#include "hlverify/densities.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>

#include "hlverify/errors.hpp"

namespace hlv {

namespace {

mpq_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return mpq_class(r);
}

ParamSeries one(int order) { return ParamSeries::constant(order, 1); }

// 1 - c * x^e as a Laurent polynomial.
LaurentPoly one_minus(const std::vector<std::string>& names, int order, int c, const XMono& e) {
  LaurentPoly p = LaurentPoly::constant(names, one(order));
  p.add_term(e, ParamSeries::constant(order, -c));
  return p;
}

XMono unit(int i, int p = 1) {
  XMono e{};
  e[i] = static_cast<std::int16_t>(p);
  return e;
}

XMono pair_mono(int i, int pi, int j, int pj) { return xmono_add(unit(i, pi), unit(j, pj)); }

// Ratio |m|_1 / (parameter degree) bounding how far one more unit of degree
// can move an exponent. nullopt means unbounded (a parameter-free x term).
struct Reach {
  std::optional<mpq_class> r;  // nullopt = infinite
  bool operator<(const Reach& o) const {
    if (!r) return false;
    if (!o.r) return true;
    return *r < *o.r;
  }
};

Reach reach_of(const LaurentPoly& p) {
  Reach best{mpq_class(0)};
  for (const auto& [e, c] : p.terms()) {
    const int l1 = xmono_l1(e);
    if (l1 == 0) continue;
    const int v = *c.valuation();
    if (v == 0) return Reach{std::nullopt};
    const mpq_class q(l1, v);
    if (*best.r < q) best.r = q;
  }
  best.r->canonicalize();
  return best;
}

Reach reach_of(const GeoFactor& g) {
  mpq_class q(xmono_l1(g.m), g.c.degree());
  q.canonicalize();
  return Reach{q};
}

long dot(const XMono& a, const XMono& b) {
  long r = 0;
  for (int i = 0; i < kMaxVars; ++i) r += static_cast<long>(a[i]) * b[i];
  return r;
}

using TermMap = std::map<XMono, ParamSeries>;

// Highest parameter degree a term at e may carry and still reach the constant
// term, given the reach of everything still to be multiplied in.
int degree_cap(const XMono& e, int D, const Reach& reach) {
  const int l1 = xmono_l1(e);
  if (l1 == 0) return D;
  if (!reach.r) return D;
  if (*reach.r == 0) return -1;
  // ceil(l1 / r)
  mpq_class need = mpq_class(l1) / *reach.r;
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), need.get_num_mpz_t(), need.get_den_mpz_t());
  return D - static_cast<int>(c.get_si());
}

void prune(TermMap& acc, int D, const Reach& reach) {
  for (auto it = acc.begin(); it != acc.end();) {
    const int cap = degree_cap(it->first, D, reach);
    if (cap < 0) {
      it = acc.erase(it);
      continue;
    }
    it->second.truncate(cap);
    if (it->second.is_zero())
      it = acc.erase(it);
    else
      ++it;
  }
}

std::size_t estimate_bytes(const TermMap& acc) {
  std::size_t n = 0;
  for (const auto& [e, c] : acc) n += 96 + c.terms().size() * (sizeof(ParamSeries::Term) + 16);
  return n;
}

struct Step {
  const LaurentPoly* poly = nullptr;
  const GeoFactor* geo = nullptr;
  Reach reach;
};

}  // namespace

std::vector<std::string> var_names(const std::string& stem, int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

DensityProduct selberg_density(int n, int order, int t_exp, const std::string& stem) {
  if (n < 0) throw ConfigError("negative rank");
  DensityProduct d{var_names(stem, n), LaurentPoly(var_names(stem, n), order), {}, 1};
  d.numerator = LaurentPoly::constant(d.vars, one(order));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const XMono e = pair_mono(i, 1, j, -1);
      d.numerator = d.numerator * one_minus(d.vars, order, 1, e);
      d.geo.push_back(GeoFactor{1, PMono{t_exp, 0, 0}, e});
    }
  return d;
}

DensityProduct koornwinder_density(int n, const std::array<KParam, 4>& params, int order, const std::string& stem) {
  if (n < 0) throw ConfigError("negative rank");
  DensityProduct d{var_names(stem, n), LaurentPoly(var_names(stem, n), order), {}, 1};
  d.prefactor = 1 / (mpq_class(mpz_class(1) << static_cast<unsigned>(n)) * factorial(n));
  d.numerator = LaurentPoly::constant(d.vars, one(order));
  bool plus_one = false, minus_one = false;
  for (const KParam& p : params) {
    if (p.zero) continue;
    if (p.sign != 1 && p.sign != -1) throw DomainError("Koornwinder parameter sign must be +-1");
    if (p.s_exp < 0) throw DomainError("Koornwinder parameter of modulus > 1 has no cancellation recipe");
    if (p.s_exp == 0) {
      bool& seen = p.sign > 0 ? plus_one : minus_one;
      if (seen) throw DomainError("repeated unit Koornwinder parameter cannot be cancelled");
      seen = true;
    }
  }
  for (int i = 0; i < n; ++i) {
    // (1 - x^2)(1 - x^-2) = (1 - x)(1 + x)(1 - 1/x)(1 + 1/x); a unit parameter
    // c removes (1 - c x)(1 - c/x).
    if (!plus_one)
      d.numerator = d.numerator * one_minus(d.vars, order, 1, unit(i)) * one_minus(d.vars, order, 1, unit(i, -1));
    if (!minus_one)
      d.numerator = d.numerator * one_minus(d.vars, order, -1, unit(i)) * one_minus(d.vars, order, -1, unit(i, -1));
    for (const KParam& p : params) {
      if (p.zero || p.s_exp == 0) continue;
      d.geo.push_back(GeoFactor{p.sign, PMono{p.s_exp, 0, 0}, unit(i)});
      d.geo.push_back(GeoFactor{p.sign, PMono{p.s_exp, 0, 0}, unit(i, -1)});
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int pi : {1, -1})
        for (int pj : {1, -1}) {
          const XMono e = pair_mono(i, pi, j, pj);
          d.numerator = d.numerator * one_minus(d.vars, order, 1, e);
          d.geo.push_back(GeoFactor{1, PMono{2, 0, 0}, e});
        }
  return d;
}

DensityProduct block_selberg_density(int m, int n, int order) {
  std::vector<std::string> vars = var_names("x", m);
  for (const auto& y : var_names("y", n)) vars.push_back(y);
  DensityProduct d{vars, LaurentPoly::constant(vars, one(order)), {}, 1};
  d.prefactor = 1 / (factorial(m) * factorial(n));
  for (auto [lo, len] : {std::pair{0, m}, std::pair{m, n}})
    for (int i = lo; i < lo + len; ++i)
      for (int j = lo; j < lo + len; ++j) {
        if (i == j) continue;
        const XMono e = pair_mono(i, 1, j, -1);
        d.numerator = d.numerator * one_minus(vars, order, 1, e);
        d.geo.push_back(GeoFactor{1, PMono{2, 0, 0}, e});
      }
  return d;
}

DensityProduct paired_density(int n, int order) {
  std::vector<std::string> vars = var_names("x", n);
  for (const auto& y : var_names("y", n)) vars.push_back(y);
  DensityProduct d{vars, LaurentPoly::constant(vars, one(order)), {}, 1};
  d.prefactor = 1 / (factorial(n) * factorial(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      d.geo.push_back(GeoFactor{1, PMono{2, 0, 0}, pair_mono(i, 1, n + j, -1)});
      d.geo.push_back(GeoFactor{1, PMono{2, 0, 0}, pair_mono(n + i, 1, j, -1)});
      if (i == j) continue;
      d.numerator = d.numerator * one_minus(vars, order, 1, pair_mono(i, 1, j, -1));
      d.numerator = d.numerator * one_minus(vars, order, 1, pair_mono(n + i, 1, n + j, -1));
    }
  return d;
}

std::size_t memory_limit_bytes() {
  std::size_t mib = 4096;
  if (const char* v = std::getenv("HLV_MEM_LIMIT_MIB")) {
    char* end = nullptr;
    const unsigned long x = std::strtoul(v, &end, 10);
    if (end != v && *end == '\0' && x > 0) mib = x;
  }
  return mib << 20;
}

ParamSeries ct_integrate(const DensityProduct& density, const std::vector<LaurentPoly>& multipliers) {
  const int D = density.numerator.order();
  for (const auto& g : density.geo)
    if (g.c.degree() < 1)
      throw DomainError("geometric factor without a small parameter cannot be expanded");
  for (const auto& m : multipliers)
    if (m.names() != density.vars || m.order() != D)
      throw ConfigError("multiplier lives in a different variable list or order");

  std::vector<Step> steps;
  steps.push_back(Step{&density.numerator, nullptr, reach_of(density.numerator)});
  for (const auto& m : multipliers) steps.push_back(Step{&m, nullptr, reach_of(m)});
  for (const auto& g : density.geo) steps.push_back(Step{nullptr, &g, reach_of(g)});
  // Far-reaching factors first so the bound tightens early; polynomials
  // before geometric factors of equal reach.
  std::stable_sort(steps.begin(), steps.end(), [](const Step& a, const Step& b) {
    if (b.reach < a.reach) return true;
    if (a.reach < b.reach) return false;
    return a.poly && !b.poly;
  });
  std::vector<Reach> after(steps.size() + 1, Reach{mpq_class(0)});
  for (std::size_t k = steps.size(); k-- > 0;) after[k] = std::max(after[k + 1], steps[k].reach);

  const std::size_t limit = memory_limit_bytes();
  TermMap acc;
  acc.emplace(XMono{}, one(D));
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const Step& st = steps[k];
    const Reach& rest = after[k + 1];
    if (st.poly) {
      TermMap next;
      for (const auto& [ea, ca] : acc)
        for (const auto& [eb, cb] : st.poly->terms()) {
          const XMono e = xmono_add(ea, eb);
          const int cap = degree_cap(e, D, rest);
          if (cap < 0) continue;
          ParamSeries prod = mul_trunc(ca, cb, cap);
          if (prod.is_zero()) continue;
          auto [it, inserted] = next.try_emplace(e, std::move(prod));
          if (!inserted) {
            it->second += prod;
            if (it->second.is_zero()) next.erase(it);
          }
        }
      acc = std::move(next);
    } else if (xmono_is_zero(st.geo->m)) {
      const ParamSeries inv =
          (one(D) - ParamSeries::monomial(D, st.geo->coef, st.geo->c.s, st.geo->c.a, st.geo->c.b)).inverse();
      for (auto& [e, c] : acc) c *= inv;
    } else {
      // g = f / (1 - c x^m): g[e] = f[e] + c g[e - m], in increasing <e, m>.
      const GeoFactor& g = *st.geo;
      const long mm = dot(g.m, g.m);
      const Reach& incl = after[k];
      std::map<std::pair<long, XMono>, ParamSeries> work;
      for (auto& [e, c] : acc) work.emplace(std::make_pair(dot(e, g.m), e), std::move(c));
      acc.clear();
      for (auto it = work.begin(); it != work.end(); it = work.erase(it)) {
        const XMono& e = it->first.second;
        const XMono next = xmono_add(e, g.m);
        const int cap = degree_cap(next, D, incl);
        if (cap >= 0) {
          ParamSeries pushed(D);
          pushed.add_shifted(it->second, g.coef, g.c, cap);
          if (!pushed.is_zero()) {
            auto [jt, inserted] = work.try_emplace(std::make_pair(it->first.first + mm, next), std::move(pushed));
            if (!inserted) jt->second += pushed;
          }
        }
        acc.emplace(e, std::move(it->second));
      }
    }
    prune(acc, D, rest);
    if (acc.empty()) break;
    if (estimate_bytes(acc) > limit)
      throw ResourceError("constant-term expansion exceeded the memory ceiling after " + std::to_string(k + 1) +
                              " of " + std::to_string(steps.size()) + " factors",
                          k + 1, steps.size());
  }
  auto it = acc.find(XMono{});
  ParamSeries r = it == acc.end() ? ParamSeries(D) : it->second;
  return r * density.prefactor;
}

Gustafson gustafson_item(int roman) {
  if (roman < 1 || roman > 6) throw ConfigError("normalization item must be 1..6");
  return static_cast<Gustafson>(roman);
}

DensityProduct gustafson_density(Gustafson item, int n, int order) {
  const KParam z = KParam::none(), p1 = KParam::unit(1), m1 = KParam::unit(-1);
  const KParam ps = KParam::mono(1, 1), ms = KParam::mono(-1, 1);
  const KParam pt = KParam::mono(1, 2), mt = KParam::mono(-1, 2);
  switch (item) {
    case Gustafson::Symplectic: return koornwinder_density(n, {ps, ms, z, z}, order);
    case Gustafson::Kawanaka: return koornwinder_density(n, {p1, ps, z, z}, order);
    case Gustafson::OPlusEven: return koornwinder_density(n, {p1, m1, ps, ms}, order);
    case Gustafson::OMinusEven:
      if (n < 1) throw ConfigError("this normalization needs n >= 1");
      return koornwinder_density(n - 1, {pt, mt, ps, ms}, order);
    case Gustafson::OPlusOdd: return koornwinder_density(n, {pt, m1, ps, ms}, order);
    case Gustafson::OMinusOdd: return koornwinder_density(n, {p1, mt, ps, ms}, order);
  }
  throw ConfigError("unknown normalization item");
}

Factored gustafson_rhs(Gustafson item, int n) {
  const TComb tc(0, 2);
  const Factored omt = tc.one_minus_t(1);
  switch (item) {
    case Gustafson::Symplectic: return omt.pow(n) / tc.q_pochhammer({1, 4}, {1, 4}, n);
    case Gustafson::Kawanaka: return omt.pow(n) / tc.q_pochhammer({1, 1}, {1, 1}, 2 * n);
    case Gustafson::OPlusEven: return omt.pow(n) / (Factored(2) * tc.q_pochhammer({1, 2}, {1, 2}, 2 * n));
    case Gustafson::OMinusEven:
      if (n < 1) throw ConfigError("this normalization needs n >= 1");
      return omt.pow(n - 1) / tc.q_pochhammer({1, 6}, {1, 2}, 2 * n - 2);
    case Gustafson::OPlusOdd:
    case Gustafson::OMinusOdd: return omt.pow(n + 1) / tc.q_pochhammer({1, 2}, {1, 2}, 2 * n + 1);
  }
  throw ConfigError("unknown normalization item");
}

}  // namespace hlv
