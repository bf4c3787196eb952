#include "hlverify/identities.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>

#include "hlverify/densities.hpp"
#include "hlverify/errors.hpp"
#include "hlverify/hall_littlewood.hpp"
#include "hlverify/pfaffian.hpp"
#include "hlverify/tcomb.hpp"

namespace hlv {

namespace {

// ---------------------------------------------------------------- catalog

std::vector<IdentityInfo> make_catalog() {
  std::vector<IdentityInfo> c;
  auto add = [&c](std::string name, std::string desc, std::string sig, std::string shape, std::string params) {
    IdentityInfo i;
    i.name = std::move(name);
    i.description = std::move(desc);
    i.signature = std::move(sig);
    i.weight_shape = std::move(shape);
    i.parameters = std::move(params);
    c.push_back(std::move(i));
    return &c.back();
  };
  add("orthogonality", "CT of P_lambda(x) P_mu(1/x) against the Selberg density is delta n!/v_mu(t)",
      "n, lambda, mu", "lambda, mu: n parts", "s")
      ->uses_mu = true;
  const char* roman[] = {"i", "ii", "iii", "iv", "v", "vi"};
  const char* dens[] = {"Koornwinder (sqrt t, -sqrt t, 0, 0)",       "Koornwinder (1, sqrt t, 0, 0)",
                        "Koornwinder (1, -1, sqrt t, -sqrt t)",      "rank n-1 Koornwinder (t, -t, sqrt t, -sqrt t)",
                        "Koornwinder (t, -1, sqrt t, -sqrt t)",      "Koornwinder (1, -t, sqrt t, -sqrt t)"};
  for (int k = 0; k < 6; ++k)
    add(std::string("normalization_") + roman[k],
        std::string("total mass of the ") + dens[k] + " density as a finite t-product", "n", "none", "s")
        ->uses_weight = false;
  add("o_plus_even", "P_lambda(x^{+-1}) with prod(1 - alpha x^{+-1}) over the O+(2n) density",
      "n, lambda", "lambda: 2n parts", "s, alpha");
  add("o_minus_even", "P_lambda(x^{+-1}, 1, -1) with prod(1 - alpha x^{+-1}) over the O-(2n) density",
      "n, lambda", "lambda: 2n parts", "s, alpha");
  add("o_plus_odd", "P_lambda(x^{+-1}, 1) with prod(1 - alpha x^{+-1}) over the O+(2n+1) density",
      "n, lambda", "lambda: 2n+1 parts", "s, alpha");
  add("o_minus_odd", "P_lambda(x^{+-1}, -1) with prod(1 - alpha x^{+-1}) over the O-(2n+1) density",
      "n, lambda", "lambda: 2n+1 parts", "s, alpha");
  add("pfaffian_bridge", "unnormalized O+(2n) alpha integral times 2^n (1-t)^n is Pf[a_jk]", "n, lambda",
      "lambda: 2n parts", "s, alpha");
  add("ab_sum_even", "O+(2n) plus O-(2n) alpha-beta integrals give a Rogers-Szego product", "n, lambda",
      "lambda: 2n parts", "s, alpha, beta");
  add("ab_sum_odd", "O+(2n+1) plus O-(2n+1) alpha-beta integrals give a Rogers-Szego product", "n, lambda",
      "lambda: 2n+1 parts", "s, alpha, beta");
  add("ab_oplus_even", "O+(2n) alpha-beta component", "n, lambda", "lambda: 2n parts", "s, alpha, beta");
  add("ab_ominus_even", "O-(2n) alpha-beta component", "n, lambda", "lambda: 2n parts", "s, alpha, beta");
  add("ab_oplus_odd", "O+(2n+1) alpha-beta component", "n, lambda", "lambda: 2n+1 parts", "s, alpha, beta");
  add("ab_ominus_odd", "O-(2n+1) alpha-beta component", "n, lambda", "lambda: 2n+1 parts", "s, alpha, beta");
  add("alpha_minus_one", "O+(2n) alpha-beta component at alpha = -1: prod H_{m_i}(-beta)", "n, lambda",
      "lambda: 2n parts", "s, beta");
  add("alpha_eq_minus_beta", "O+(2n) alpha-beta component at beta = -alpha", "n, lambda", "lambda: 2n parts",
      "s, alpha");
  add("symplectic", "Koornwinder (sqrt t, -sqrt t, 0, 0) integral; nonzero only for lambda = mu^2", "n, lambda",
      "lambda: 2n parts", "s");
  add("kawanaka", "Koornwinder (1, sqrt t, 0, 0) integral; a t-product in sqrt t", "n, lambda",
      "lambda: 2n parts", "s");
  IdentityInfo* u = add("unm_vanishing", "P_{mu nu-bar}(x^(m), y^(n)) over two Selberg blocks; nonzero only for mu = nu",
                        "n, m, lambda", "lambda: m+n parts, negatives allowed", "s");
  u->uses_m = true;
  u->negative_parts = true;
  add("u2n_vanishing", "P_{mu nu-bar}(x^(n), y^(n)) over the paired density; nonzero only for mu = nu",
      "n, lambda", "lambda: 2n parts, negatives allowed", "s")
      ->negative_parts = true;
  add("double_cover", "P_lambda(t^{+-1/2} z) over the Selberg density in t^2; nonzero only for lambda = mu mu-bar",
      "n, lambda", "lambda: 2n parts, negatives allowed", "s")
      ->negative_parts = true;
  add("t2_branching", "P_lambda(x; t^2) over the Selberg density in t; nonzero only for lambda = mu mu-bar",
      "n, lambda", "lambda: n parts, negatives allowed", "s")
      ->negative_parts = true;
  return c;
}

// ---------------------------------------------------------------- helpers

using Cache = std::map<std::string, ParamSeries>;

std::mutex g_norm_mu;
Cache g_norm;

ParamSeries one(int D) { return ParamSeries::constant(D, 1); }
ParamSeries alpha(int D) { return ParamSeries::variable(D, Param::Alpha); }
ParamSeries beta(int D) { return ParamSeries::variable(D, Param::Beta); }

// (-z)^k for a series z
ParamSeries neg_pow(const ParamSeries& z, int k) {
  ParamSeries r = z.pow(k);
  if (k % 2) r = -r;
  return r;
}

// (1 - c x_i)(1 - c / x_i)
LaurentPoly pm_factor(const std::vector<std::string>& vars, int i, const ParamSeries& c, int power = 1) {
  LaurentPoly p = LaurentPoly::constant(vars, one(c.order()) + c * c);
  p.add_term(p.unit(vars[static_cast<std::size_t>(i)], power), -c);
  p.add_term(p.unit(vars[static_cast<std::size_t>(i)], -power), -c);
  return p;
}

struct Component {
  DensityProduct density;
  std::vector<Slot> args;
  int p_texp = 2;
  std::vector<LaurentPoly> extra;
  ParamSeries L;
  std::string zkey;  // empty: no normalization
};

struct Integral {
  ParamSeries value;
  int shift = 0;  // the true integral is s^-shift * value
};

Integral integrate(const Component& c, const Weight& lambda) {
  if (c.args.empty()) return {ct_integrate(c.density, c.extra), 0};
  HLValue p = hl_full(lambda, c.args, c.density.vars, c.density.numerator.order(), c.p_texp);
  std::vector<LaurentPoly> mult = c.extra;
  mult.push_back(std::move(p.poly));
  return {ct_integrate(c.density, mult), p.s_shift};
}

ParamSeries normalizer(const Component& c) {
  if (c.zkey.empty()) return one(c.density.numerator.order());
  const std::string key = c.zkey + "@" + std::to_string(c.density.numerator.order());
  {
    std::lock_guard<std::mutex> lock(g_norm_mu);
    if (auto it = g_norm.find(key); it != g_norm.end()) return it->second;
  }
  ParamSeries z = ct_integrate(c.density);
  std::lock_guard<std::mutex> lock(g_norm_mu);
  return g_norm.emplace(key, z).first->second;
}

int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

const KParam kZ = KParam::none(), kP1 = KParam::unit(1), kM1 = KParam::unit(-1);
const KParam kPs = KParam::mono(1, 1), kMs = KParam::mono(-1, 1);
const KParam kPt = KParam::mono(1, 2), kMt = KParam::mono(-1, 2);

using Comp = OrthComponent;

Component orth_component(Comp k, int n, int D, bool with_beta) {
  Component c;
  int rank = n;
  std::array<KParam, 4> prm{};
  ParamSeries L = one(D);
  const ParamSeries a = alpha(D), b = beta(D);
  switch (k) {
    case Comp::PlusEven:
      prm = {kP1, kM1, kPs, kMs};
      break;
    case Comp::MinusEven:
      rank = n - 1;
      prm = {kPt, kMt, kPs, kMs};
      L = (one(D) - a * a) * (with_beta ? one(D) - b * b : one(D));
      break;
    case Comp::PlusOdd:
      prm = {kPt, kM1, kPs, kMs};
      L = (one(D) - a) * (with_beta ? one(D) - b : one(D));
      break;
    case Comp::MinusOdd:
      prm = {kP1, kMt, kPs, kMs};
      L = (one(D) + a) * (with_beta ? one(D) + b : one(D));
      break;
  }
  if (rank < 0) throw ConfigError("rank too small for this component");
  c.density = koornwinder_density(rank, prm, D);
  c.args = slots_plus_minus(rank);
  if (k == Comp::MinusEven) {
    c.args.push_back(slot_const(1));
    c.args.push_back(slot_const(-1));
  } else if (k == Comp::PlusOdd) {
    c.args.push_back(slot_const(1));
  } else if (k == Comp::MinusOdd) {
    c.args.push_back(slot_const(-1));
  }
  for (int i = 0; i < rank; ++i) {
    c.extra.push_back(pm_factor(c.density.vars, i, a));
    if (with_beta) c.extra.push_back(pm_factor(c.density.vars, i, b));
  }
  c.L = L;
  c.zkey = "orth" + std::to_string(static_cast<int>(k)) + ":" + std::to_string(rank);
  return c;
}

bool is_plus_comp(Comp k) { return k == Comp::PlusEven || k == Comp::PlusOdd; }

// phi_N(t) / (v_lambda(t) (1-t)^N)
Factored orth_prefactor(const Weight& lambda) {
  const TComb tc(0, 2);
  const int N = static_cast<int>(lambda.size());
  return tc.phi(N) / (tc.v_lambda(lambda) * tc.one_minus_t(1).pow(N));
}

// Degree bound for exact bracket assembly before viewing at order D.
int bracket_order(const Weight& lambda, int D) {
  return std::min(ParamSeries::kMaxOrder, std::max(D, 2 * static_cast<int>(lambda.size()) + 2));
}

// Order at which a substituted bracket is still exact.
int wide_order(const Weight& lambda) {
  return std::min(ParamSeries::kMaxOrder, 4 * static_cast<int>(lambda.size()) + 2);
}

// (-alpha)^#odd +- (-alpha)^#even
ParamSeries alpha_bracket(const Weight& lambda, int sign, int D) {
  const int Db = bracket_order(lambda, D);
  const auto [odd, even] = parity_counts(lambda);
  ParamSeries r = neg_pow(alpha(Db), odd);
  if (sign > 0)
    r += neg_pow(alpha(Db), even);
  else
    r -= neg_pow(alpha(Db), even);
  return r.with_order(D);
}

// The two summands of the alpha-beta bracket with H(beta/alpha) alpha^m
// written as the homogeneous Rogers-Szego polynomial.
std::pair<ParamSeries, ParamSeries> ab_brackets(const Weight& lambda, int Db) {
  const TComb tc(Db, 2);
  const ParamSeries a = alpha(Db), b = beta(Db), ab = a * b;
  ParamSeries b1 = one(Db), b2 = one(Db);
  int odd = 0, even = 0;
  for (auto [v, mult] : multiplicities(lambda)) {
    const bool ev = v % 2 == 0;
    (ev ? even : odd) += mult;
    const ParamSeries h = tc.rogers_szego(mult, ab), hh = tc.rogers_szego_hom(mult, a, b);
    b1 *= ev ? h : hh;
    b2 *= ev ? hh : h;
  }
  if (odd % 2) b1 = -b1;
  if (even % 2) b2 = -b2;
  return {b1, b2};
}

ParamSeries ab_bracket(const Weight& lambda, int sign, int D) {
  const int Db = bracket_order(lambda, D);
  auto [b1, b2] = ab_brackets(lambda, Db);
  return (sign > 0 ? b1 + b2 : b1 - b2).with_order(D);
}

// prod_i H_{m_i}(-beta) at alpha = -1, times 2
ParamSeries alpha_minus_one_bracket(const Weight& lambda, int D) {
  const TComb tc(D, 2);
  ParamSeries B = ParamSeries::constant(D, 2);
  for (auto [v, mult] : multiplicities(lambda)) B *= tc.rogers_szego(mult, -beta(D));
  return B;
}

// prod H(-alpha^2) over even values times prod H(-1) over odd values, and the
// same with parities swapped.
ParamSeries minus_beta_bracket(const Weight& lambda, int D) {
  const TComb tc(D, 2);
  const ParamSeries ma2 = -(alpha(D) * alpha(D)), m1 = -one(D);
  ParamSeries p1 = one(D), p2 = one(D);
  for (auto [v, mult] : multiplicities(lambda)) {
    const bool ev = v % 2 == 0;
    p1 *= tc.rogers_szego(mult, ev ? ma2 : m1);
    p2 *= tc.rogers_szego(mult, ev ? m1 : ma2);
  }
  const auto [odd, even] = parity_counts(lambda);
  return p1 * neg_pow(alpha(D), odd) + p2 * neg_pow(alpha(D), even);
}

Factored symplectic_c_form(const Weight& lambda, int n) {
  const ShapeInfo sh = classify_shape(lambda);
  if (!sh.double_mult) return Factored(0);
  const TComb t2(0, 4);
  return t2.c_zero(*sh.double_mult, {SMono{1, 4 * n}}) / t2.c_minus(*sh.double_mult, SMono{1, 4});
}

Factored symplectic_product(const Weight& lambda, int n) {
  const ShapeInfo sh = classify_shape(lambda);
  if (!sh.double_mult) return Factored(0);
  const TComb t2(0, 4);
  return t2.phi(n) / (t2.one_minus_t(1).pow(n) * t2.v_lambda(pad(strip_zeros(*sh.double_mult), n)));
}

Factored kawanaka_product(const Weight& lambda, int n) {
  const TComb h(0, 1);
  const int N = 2 * n;
  return h.phi(N) / (h.one_minus_t(1).pow(N) * h.v_lambda(lambda));
}

// phi_n(t^2) / ((1-t)^n v_mu(t) (1+t)...(1+t^(n-l(mu)))) with v_mu read on
// mu padded to n parts (or unpadded).
Factored double_cover_value(const Weight& mu, int n, bool padded) {
  const TComb t1(0, 2), t2(0, 4);
  const int l = weight_length(mu);
  Factored den = t1.one_minus_t(1).pow(n) * t1.v_lambda(padded ? pad(mu, n) : mu, padded);
  for (int j = 1; j <= n - l; ++j) den *= Factored::one_plus_s(2 * j);
  return t2.phi(n) / den;
}

Factored double_cover_c_form(const Weight& mu, int n) {
  const TComb tc(0, 2);
  return tc.c_zero(mu, {SMono{1, 2 * n}, SMono{-1, 2 * n}}) / tc.c_minus(mu, SMono{1, 2});
}

ClosedForm plain(Factored f, int D) { return {std::move(f), one(D)}; }

// ---------------------------------------------------------------- plans

// Everything needed to check one instance: summands of the left side, the
// closed form, and side checks that need no integration.
struct Plan {
  std::vector<Component> parts;
  ClosedForm rhs;
  bool extra_ok = true;
  std::vector<std::string> notes;
};

Component selberg_component(int n, int D) {
  Component c;
  c.density = selberg_density(n, D);
  c.args = slots_vars(n, 0, 1);
  c.L = one(D);
  return c;
}

Plan plan_orthogonality(const Instance& in) {
  const int D = in.order;
  Component c = selberg_component(in.n, D);
  HLValue q = hl_full(in.mu, slots_vars(in.n, 0, -1), c.density.vars, D);
  if (q.s_shift != 0) throw ConsistencyError("unexpected s-shift in an inverted argument list");
  c.extra.push_back(q.poly);
  return {{c}, rhs_orthogonality(in.lambda, in.mu, in.n, D), true, {}};
}

Plan plan_normalization(const Instance& in, int item) {
  const int D = in.order;
  const Gustafson g = gustafson_item(item);
  Component c;
  c.density = gustafson_density(g, in.n, D);
  c.L = one(D);
  return {{c}, plain(gustafson_rhs(g, in.n), D), true, {}};
}

Plan plan_alpha(const Instance& in, Comp k) {
  return {{orth_component(k, in.n, in.order, false)}, rhs_orthogonal_alpha(k, in.lambda, in.order), true, {}};
}

Plan plan_ab(const Instance& in, Comp k) {
  return {{orth_component(k, in.n, in.order, true)}, rhs_ab(k, in.lambda, in.order), true, {}};
}

Plan plan_ab_sum(const Instance& in, bool even) {
  const int D = in.order;
  Plan p;
  p.parts.push_back(orth_component(even ? Comp::PlusEven : Comp::PlusOdd, in.n, D, true));
  p.parts.push_back(orth_component(even ? Comp::MinusEven : Comp::MinusOdd, in.n, D, true));
  p.rhs = {orth_prefactor(in.lambda) * Factored(2), ab_brackets(in.lambda, bracket_order(in.lambda, D)).first.with_order(D)};
  return p;
}

// Unnormalized integral scaled by v_lambda 2^n (1-t)^n against the Pfaffian.
Plan plan_pfaffian_bridge(const Instance& in) {
  const int D = in.order;
  Component c = orth_component(Comp::PlusEven, in.n, D, false);
  const TComb tc(D, 2);
  c.L = (tc.v_lambda(in.lambda) * Factored(mpq_class(mpz_class(1) << static_cast<unsigned>(in.n))) *
         tc.one_minus_t(1).pow(in.n))
            .expand(D);
  c.zkey.clear();
  Plan p{{c}, {Factored(1), pfaffian(build_a_matrix(in.lambda, D))}, true, {}};
  const PfClosedForm cf = pf_closed_form(PfKind::A, in.lambda, D);
  if (!(cf.denominator * p.rhs.bracket == cf.numerator)) {
    p.extra_ok = false;
    p.notes.push_back("Pfaffian differs from its closed form");
  }
  return p;
}

// Substitute into a bracket that was assembled without truncation.
ParamSeries substitute_exact(const ParamSeries& p, Param v, const ParamSeries& image, std::vector<std::string>& notes) {
  if (p.max_degree() >= p.order()) notes.push_back("bracket reached the ring order; substitution may be inexact");
  return p.substitute(v, image);
}

Plan plan_alpha_minus_one(const Instance& in) {
  const int D = in.order;
  Component c = orth_component(Comp::PlusEven, in.n, D, true);
  // (1 + x)(1 + 1/x) in place of the alpha factors
  c.extra.clear();
  for (int i = 0; i < in.n; ++i) {
    c.extra.push_back(pm_factor(c.density.vars, i, -one(D)));
    c.extra.push_back(pm_factor(c.density.vars, i, beta(D)));
  }
  Plan p{{c}, rhs_special(SpecialCase::AlphaMinusOne, in.lambda, in.n, D), true, {}};
  const int Db = wide_order(in.lambda);
  const ParamSeries at = substitute_exact(ab_bracket(in.lambda, 1, Db), Param::Alpha, -one(Db), p.notes);
  if (!(at == alpha_minus_one_bracket(in.lambda, Db))) {
    p.extra_ok = false;
    p.notes.push_back("general alpha-beta bracket at alpha = -1 differs from 2 prod H(-beta)");
  }
  return p;
}

Plan plan_alpha_eq_minus_beta(const Instance& in) {
  const int D = in.order;
  Component c = orth_component(Comp::PlusEven, in.n, D, false);
  // (1 - alpha x)(1 + alpha x) = 1 - alpha^2 x^2
  c.extra.clear();
  const ParamSeries a2 = alpha(D) * alpha(D);
  for (int i = 0; i < in.n; ++i) c.extra.push_back(pm_factor(c.density.vars, i, a2, 2));
  Plan p{{c}, rhs_special(SpecialCase::AlphaEqMinusBeta, in.lambda, in.n, D), true, {}};
  const int Db = wide_order(in.lambda);
  const ParamSeries at = substitute_exact(ab_bracket(in.lambda, 1, Db), Param::Beta, -alpha(Db), p.notes);
  if (!(at == minus_beta_bracket(in.lambda, Db))) {
    p.extra_ok = false;
    p.notes.push_back("general alpha-beta bracket at beta = -alpha differs from the H(-alpha^2), H(-1) form");
  }
  return p;
}

Plan plan_symplectic(const Instance& in) {
  const int D = in.order;
  Component c;
  c.density = koornwinder_density(in.n, {kPs, kMs, kZ, kZ}, D);
  c.args = slots_plus_minus(in.n);
  c.L = one(D);
  c.zkey = "symp:" + std::to_string(in.n);
  Plan p{{c}, rhs_special(SpecialCase::Symplectic, in.lambda, in.n, D), true, {}};
  if (!(symplectic_product(in.lambda, in.n) == p.rhs.factor)) {
    p.extra_ok = false;
    p.notes.push_back("C-symbol value differs from the t^2-product value");
  }
  return p;
}

Plan plan_kawanaka(const Instance& in) {
  const int D = in.order;
  Component c;
  c.density = koornwinder_density(in.n, {kP1, kPs, kZ, kZ}, D);
  c.args = slots_plus_minus(in.n);
  c.L = one(D);
  c.zkey = "kaw:" + std::to_string(in.n);
  Plan p{{c}, rhs_special(SpecialCase::Kawanaka, in.lambda, in.n, D), true, {}};
  const TComb h(0, 1);
  const Factored alt = h.c_zero(in.lambda, {SMono{1, 2 * in.n}}) / h.c_minus(in.lambda, SMono{1, 1});
  if (!(alt == p.rhs.factor)) {
    p.extra_ok = false;
    p.notes.push_back("C-symbol value differs from the sqrt t product value");
  }
  return p;
}

Plan plan_unm(const Instance& in) {
  const int D = in.order;
  Component c;
  c.density = block_selberg_density(in.m, in.n, D);
  c.args = slots_vars(in.m + in.n);
  c.L = one(D);
  c.zkey = "unm:" + std::to_string(in.m) + "," + std::to_string(in.n);
  return {{c}, rhs_section8(Section8Case::Unm, in.lambda, in.n, in.m, D), true, {}};
}

Plan plan_u2n(const Instance& in) {
  const int D = in.order;
  Component c;
  c.density = paired_density(in.n, D);
  c.args = slots_vars(2 * in.n);
  c.L = one(D);
  c.zkey = "u2n:" + std::to_string(in.n);
  return {{c}, rhs_section8(Section8Case::U2n, in.lambda, in.n, 0, D), true, {}};
}

Component double_cover_component(int n, int D) {
  Component c;
  c.density = selberg_density(n, D, 4);
  c.density.prefactor = mpq_class(1, factorial(n));
  for (int i = 0; i < n; ++i) {
    c.args.push_back(slot_var(i, 1, 1));
    c.args.push_back(slot_var(i, 1, -1));
  }
  c.L = one(D);
  c.zkey = "dc:" + std::to_string(n);
  return c;
}

Plan plan_double_cover(const Instance& in) {
  const int D = in.order;
  Plan p{{double_cover_component(in.n, D)}, rhs_section8(Section8Case::DoubleCover, in.lambda, in.n, 0, D), true, {}};
  const ShapeInfo sh = classify_shape(in.lambda);
  if (sh.palindromic) {
    const Weight& mu = *sh.palindromic;
    const Factored unpadded = double_cover_value(mu, in.n, false);
    if (!(unpadded == p.rhs.factor))
      p.notes.push_back("v_mu read on mu padded to " + std::to_string(in.n) + " parts; the unpadded reading gives " +
                        (unpadded.is_polynomial() ? unpadded.expand(D).str() : unpadded.str()));
    const Factored cform = double_cover_c_form(mu, in.n);
    if (!(cform == p.rhs.factor)) {
      p.extra_ok = false;
      p.notes.push_back("product value differs from its C-symbol form " + cform.str());
    }
  }
  return p;
}

Component t2_component(int n, int D) {
  Component c;
  c.density = selberg_density(n, D, 2);
  c.density.prefactor = mpq_class(1, factorial(n));
  c.args = slots_vars(n);
  c.p_texp = 4;
  c.L = one(D);
  c.zkey = "t2:" + std::to_string(n);
  return c;
}

Plan plan_t2_branching(const Instance& in) {
  return {{t2_component(in.n, in.order)}, rhs_section8(Section8Case::T2Branching, in.lambda, in.n, 0, in.order),
          true, {}};
}

Plan make_plan(const Instance& in) {
  const std::string& id = in.identity;
  if (id == "orthogonality") return plan_orthogonality(in);
  if (id.rfind("normalization_", 0) == 0) {
    static const std::map<std::string, int> items{{"i", 1}, {"ii", 2}, {"iii", 3}, {"iv", 4}, {"v", 5}, {"vi", 6}};
    return plan_normalization(in, items.at(id.substr(14)));
  }
  if (id == "o_plus_even") return plan_alpha(in, Comp::PlusEven);
  if (id == "o_minus_even") return plan_alpha(in, Comp::MinusEven);
  if (id == "o_plus_odd") return plan_alpha(in, Comp::PlusOdd);
  if (id == "o_minus_odd") return plan_alpha(in, Comp::MinusOdd);
  if (id == "pfaffian_bridge") return plan_pfaffian_bridge(in);
  if (id == "ab_sum_even") return plan_ab_sum(in, true);
  if (id == "ab_sum_odd") return plan_ab_sum(in, false);
  if (id == "ab_oplus_even") return plan_ab(in, Comp::PlusEven);
  if (id == "ab_ominus_even") return plan_ab(in, Comp::MinusEven);
  if (id == "ab_oplus_odd") return plan_ab(in, Comp::PlusOdd);
  if (id == "ab_ominus_odd") return plan_ab(in, Comp::MinusOdd);
  if (id == "alpha_minus_one") return plan_alpha_minus_one(in);
  if (id == "alpha_eq_minus_beta") return plan_alpha_eq_minus_beta(in);
  if (id == "symplectic") return plan_symplectic(in);
  if (id == "kawanaka") return plan_kawanaka(in);
  if (id == "unm_vanishing") return plan_unm(in);
  if (id == "u2n_vanishing") return plan_u2n(in);
  if (id == "double_cover") return plan_double_cover(in);
  if (id == "t2_branching") return plan_t2_branching(in);
  throw ConfigError("unknown identity: " + id);
}

struct Integrated {
  std::vector<Integral> I;
  std::vector<ParamSeries> Z;
  int shift = 0;
};

Integrated integrate_all(const Plan& p, const Weight& lambda) {
  Integrated r;
  for (const Component& c : p.parts) {
    r.I.push_back(integrate(c, lambda));
    r.Z.push_back(normalizer(c));
    if (r.I.back().shift != r.I.front().shift) throw ConsistencyError("summands carry different s-shifts");
  }
  r.shift = r.I.front().shift;
  return r;
}

// Both sides of a cross-multiplied comparison.
struct Eval {
  ParamSeries lhs, rhs;
  bool rhs_zero = false;
  bool extra_ok = true;
  std::vector<std::string> notes;
};

// sum_k L_k s^-h I_k / Z_k == F B  becomes
// sum_k L_k I_k prod_{j != k} Z_j den(F) == s^h num(F) B prod_j Z_j.
Eval cross_multiplied(const Plan& p, const Weight& lambda, int D) {
  const Integrated in = integrate_all(p, lambda);
  Eval e;
  e.rhs_zero = p.rhs.is_zero();
  e.extra_ok = p.extra_ok;
  e.notes = p.notes;
  const std::size_t K = p.parts.size();
  ParamSeries zall = one(D);
  for (const auto& z : in.Z) zall *= z;
  e.lhs = ParamSeries(D);
  for (std::size_t k = 0; k < K; ++k) {
    ParamSeries term = p.parts[k].L * in.I[k].value;
    for (std::size_t j = 0; j < K; ++j)
      if (j != k) term *= in.Z[j];
    e.lhs += term;
  }
  e.lhs *= p.rhs.factor.denominator().expand(D);
  e.rhs = e.rhs_zero ? ParamSeries(D)
                     : (p.rhs.factor.numerator() * Factored::s_pow(in.shift)).expand(D) * p.rhs.bracket * zall;
  return e;
}

Eval evaluate(const Instance& in) {
  const Plan p = make_plan(in);
  Eval e = cross_multiplied(p, in.lambda, in.order);
  if (in.identity == "double_cover" && !(e.lhs == e.rhs)) {
    const ShapeInfo sh = classify_shape(in.lambda);
    if (sh.palindromic) {
      const int k = weight_size(*sh.palindromic);
      if (e.lhs.shifted(1, 2 * k) == e.rhs.truncated(in.order))
        e.notes.push_back("integral equals t^-" + std::to_string(k) + " times the closed form through degree " +
                          std::to_string(in.order - 2 * k));
    }
  }
  return e;
}

int min_rank(const std::string& id) {
  if (id == "o_plus_odd" || id == "o_minus_odd" || id == "ab_sum_odd" || id == "ab_oplus_odd" ||
      id == "ab_ominus_odd")
    return 0;
  return 1;
}

}  // namespace

// ---------------------------------------------------------------- public

const std::vector<IdentityInfo>& catalog() {
  static const std::vector<IdentityInfo> c = make_catalog();
  return c;
}

const IdentityInfo& find_identity(const std::string& name) {
  for (const auto& i : catalog())
    if (i.name == name) return i;
  throw ConfigError("unknown identity: " + name);
}

std::string status_name(Status s) {
  switch (s) {
    case Status::Match: return "match";
    case Status::Mismatch: return "mismatch";
    case Status::Vanished: return "vanished-as-predicted";
  }
  return "unknown";
}

int ambient_length(const IdentityInfo& info, int n, int m) {
  const std::string& id = info.name;
  if (!info.uses_weight) return 0;
  if (id == "orthogonality" || id == "t2_branching") return n;
  if (id == "unm_vanishing") return m + n;
  if (id == "o_plus_odd" || id == "o_minus_odd" || id == "ab_sum_odd" || id == "ab_oplus_odd" ||
      id == "ab_ominus_odd")
    return 2 * n + 1;
  return 2 * n;
}

Weight normalize_weight(const Weight& w, int length, bool allow_negative) {
  require_weight(w, allow_negative);
  if (static_cast<int>(w.size()) > length) {
    // surplus zeros may be dropped
    const Weight core = strip_zeros(w);
    if (static_cast<int>(core.size()) > length)
      throw ConfigError("weight " + format_weight(w) + " has more than " + std::to_string(length) + " nonzero parts");
  }
  const auto [mu, nu] = split_weight(w);
  if (static_cast<int>(mu.size() + nu.size()) > length)
    throw ConfigError("weight " + format_weight(w) + " does not fit in " + std::to_string(length) + " parts");
  Weight out = mu;
  out.insert(out.end(), static_cast<std::size_t>(length) - mu.size() - nu.size(), 0);
  for (auto it = nu.rbegin(); it != nu.rend(); ++it) out.push_back(-*it);
  return out;
}

void prepare(Instance& inst) {
  const IdentityInfo& info = find_identity(inst.identity);
  if (inst.order < 1 || inst.order > ParamSeries::kMaxOrder)
    throw ConfigError("order must be between 1 and " + std::to_string(ParamSeries::kMaxOrder));
  if (inst.n < min_rank(inst.identity)) throw ConfigError("rank n too small for " + inst.identity);
  if (info.uses_m) {
    if (inst.m < 0 || inst.m > inst.n) throw ConfigError("need 0 <= m <= n");
  } else {
    inst.m = 0;
  }
  const int L = ambient_length(info, inst.n, inst.m);
  if (L + 1 > kMaxVars) throw ConfigError("rank too large: at most " + std::to_string(kMaxVars - 1) + " arguments");
  if (!info.uses_weight) {
    if (!strip_zeros(inst.lambda).empty()) throw ConfigError(inst.identity + " takes no weight");
    inst.lambda.clear();
  } else {
    inst.lambda = normalize_weight(inst.lambda, L, info.negative_parts);
  }
  if (info.uses_mu)
    inst.mu = normalize_weight(inst.mu, L, false);
  else if (!strip_zeros(inst.mu).empty())
    throw ConfigError(inst.identity + " takes no second weight");
  else
    inst.mu.clear();
}

ParamSeries ClosedForm::series(int order) const {
  if (is_zero()) return ParamSeries(order);
  return factor.series(order) * bracket.with_order(order);
}

ClosedForm rhs_orthogonality(const Weight& lambda, const Weight& mu, int n, int order) {
  if (lambda != mu) return plain(Factored(0), order);
  const TComb tc(0, 2);
  return plain(Factored(factorial(n)) / tc.v_lambda(mu), order);
}

ClosedForm rhs_orthogonal_alpha(OrthComponent c, const Weight& lambda, int order) {
  return {orth_prefactor(lambda), alpha_bracket(lambda, is_plus_comp(c) ? 1 : -1, order)};
}

ClosedForm rhs_ab(OrthComponent c, const Weight& lambda, int order) {
  return {orth_prefactor(lambda), ab_bracket(lambda, is_plus_comp(c) ? 1 : -1, order)};
}

ClosedForm rhs_special(SpecialCase c, const Weight& lambda, int n, int order) {
  if (static_cast<int>(lambda.size()) != 2 * n) throw ConfigError("weight must have 2n parts");
  switch (c) {
    case SpecialCase::Symplectic: return plain(symplectic_c_form(lambda, n), order);
    case SpecialCase::Kawanaka: return plain(kawanaka_product(lambda, n), order);
    case SpecialCase::AlphaMinusOne: return {orth_prefactor(lambda), alpha_minus_one_bracket(lambda, order)};
    case SpecialCase::AlphaEqMinusBeta:
      return {orth_prefactor(lambda), minus_beta_bracket(lambda, wide_order(lambda)).with_order(order)};
  }
  throw ConfigError("unknown special case");
}

ClosedForm rhs_section8(Section8Case c, const Weight& lambda, int n, int m, int order) {
  const TComb tc(0, 2);
  switch (c) {
    case Section8Case::Unm: {
      const auto [mu, nu] = split_weight(lambda);
      if (mu != nu || static_cast<int>(mu.size()) > m) return plain(Factored(0), order);
      return plain(tc.c_zero(mu, {SMono{1, 2 * n}, SMono{1, 2 * m}}) / tc.c_minus(mu, SMono{1, 2}), order);
    }
    case Section8Case::U2n: {
      const auto [mu, nu] = split_weight(lambda);
      if (mu != nu) return plain(Factored(0), order);
      return plain(double_cover_c_form(mu, n), order);
    }
    case Section8Case::DoubleCover: {
      const ShapeInfo sh = classify_shape(lambda);
      if (!sh.palindromic) return plain(Factored(0), order);
      return plain(double_cover_value(*sh.palindromic, n, true), order);
    }
    case Section8Case::T2Branching: {
      const ShapeInfo sh = classify_shape(lambda);
      if (!sh.palindromic) return plain(Factored(0), order);
      const Weight& mu = *sh.palindromic;
      const int l = weight_length(mu);
      const TComb t2(0, 4);
      Factored num = Factored::s_pow(2 * weight_size(mu));
      for (int j = n - 2 * l + 1; j <= n; ++j) num *= tc.one_minus_t(j);
      return plain(num / (t2.one_minus_t(1).pow(l) * t2.v_lambda(mu, false)), order);
    }
  }
  throw ConfigError("unknown case");
}

LhsValue lhs_build(Instance inst) {
  prepare(inst);
  const Plan p = make_plan(inst);
  const Integrated in = integrate_all(p, inst.lambda);
  LhsValue r{ParamSeries(inst.order), in.shift};
  for (std::size_t k = 0; k < p.parts.size(); ++k) r.value += p.parts[k].L * in.I[k].value * in.Z[k].inverse();
  return r;
}

Report verify(Instance inst) {
  prepare(inst);
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.instance = inst;
  for (int D = inst.order; D >= 1; D -= 2) {
    Instance at = inst;
    at.order = D;
    try {
      Eval e = evaluate(at);
      r.achieved_order = D;
      const std::optional<int> diff = e.lhs.first_difference(e.rhs);
      if (diff || !e.extra_ok) {
        r.status = Status::Mismatch;
        r.first_discrepancy = diff;
      } else if (e.rhs_zero) {
        r.status = e.lhs.is_zero() ? Status::Vanished : Status::Mismatch;
        if (!e.lhs.is_zero()) r.first_discrepancy = e.lhs.valuation();
      } else {
        r.status = Status::Match;
      }
      r.notes.insert(r.notes.end(), e.notes.begin(), e.notes.end());
      break;
    } catch (const ResourceError& err) {
      r.notes.push_back("order " + std::to_string(D) + ": " + err.what());
    }
  }
  if (r.achieved_order == 0) r.status = Status::Mismatch;
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<Instance> sweep_instances(const std::string& identity, int n, int m, int max_weight, int max_parts,
                                      int order) {
  const IdentityInfo& info = find_identity(identity);
  if (max_weight < 0 || max_parts < 0) throw ConfigError("grid bounds must be non-negative");
  std::vector<Instance> out;
  Instance base;
  base.identity = identity;
  base.n = n;
  base.m = m;
  base.order = order;
  if (!info.uses_weight) {
    out.push_back(base);
    return out;
  }
  const int L = ambient_length(info, n, info.uses_m ? m : 0);
  const std::vector<Weight> ws =
      info.negative_parts ? weights_in_box(L, max_weight, max_parts) : partitions_in_box(L, max_weight, max_parts);
  for (const Weight& w : ws) {
    if (info.uses_mu) {
      for (const Weight& v : ws) {
        Instance i = base;
        i.lambda = w;
        i.mu = v;
        out.push_back(i);
      }
    } else {
      Instance i = base;
      i.lambda = w;
      out.push_back(i);
    }
  }
  return out;
}

std::vector<Report> run_pool(const std::vector<Instance>& instances, int jobs) {
  std::vector<Report> out(instances.size());
  std::vector<std::exception_ptr> errs(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        out[i] = verify(instances[i]);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(instances.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace hlv
