// Runs the nine acceptance criteria and prints one PASS/FAIL line for each.
// Usage: acceptance [--only k] [--jobs N]

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hlverify/densities.hpp"
#include "hlverify/errors.hpp"
#include "hlverify/hall_littlewood.hpp"
#include "hlverify/identities.hpp"
#include "hlverify/pfaffian.hpp"
#include "hlverify/tcomb.hpp"
#include "oracles.hpp"

using namespace hlv;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// JSON records of every identity instance, in criterion order; criterion 9
// replays them with another worker count.
std::vector<Instance> g_all_instances;
std::vector<std::string> g_all_json;

struct Tally {
  int match = 0, vanished = 0, mismatch = 0, limited = 0;
  std::vector<std::string> failures;
  std::string str() const {
    std::ostringstream os;
    os << match << " match, " << vanished << " vanished, " << mismatch << " mismatch";
    if (limited) os << ", " << limited << " below the requested order";
    return os.str();
  }
};

Tally run_instances(const std::vector<Instance>& instances, Tally t = {}) {
  const auto reports = run_pool(instances, 1);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const Report& r = reports[i];
    g_all_instances.push_back(instances[i]);
    g_all_json.push_back(report_json(r, false));
    if (r.resource_limited()) ++t.limited;
    if (r.status == Status::Match) ++t.match;
    if (r.status == Status::Vanished) ++t.vanished;
    if (r.status == Status::Mismatch) ++t.mismatch;
    if (!r.passed() && t.failures.size() < 6) t.failures.push_back(report_text(r));
  }
  return t;
}

Outcome from_tally(const Tally& t, const std::string& extra = "") {
  Outcome o;
  o.pass = t.mismatch == 0 && t.limited == 0;
  o.detail = t.str() + extra;
  for (const auto& f : t.failures) o.detail += "\n    " + f;
  return o;
}

std::vector<Instance> grid(const std::string& id, int n, int max_weight, int max_parts, int order, int m = 0) {
  return sweep_instances(id, n, m, max_weight, max_parts, order);
}

void append(std::vector<Instance>& a, const std::vector<Instance>& b) { a.insert(a.end(), b.begin(), b.end()); }

// 1: orthogonality, n <= 3, |lambda|, |mu| <= 4, D = 12.
Outcome criterion_orthogonality() {
  std::vector<Instance> in;
  for (int n = 1; n <= 3; ++n) append(in, grid("orthogonality", n, 4, 4, 12));
  return from_tally(run_instances(in));
}

// 2: normalizations i-vi, n <= 2 (n <= 3 for i), D = 12.
Outcome criterion_normalizations() {
  std::vector<Instance> in;
  const char* items[] = {"i", "ii", "iii", "iv", "v", "vi"};
  for (const char* it : items) {
    const int max_n = std::string(it) == "i" ? 3 : 2;
    for (int n = 1; n <= max_n; ++n) append(in, grid(std::string("normalization_") + it, n, 0, 0, 12));
  }
  return from_tally(run_instances(in));
}

// 3: the four alpha components, n = 1 and n = 2, parts <= 3, D = 10.
Outcome criterion_alpha() {
  std::vector<Instance> in;
  for (const char* id : {"o_plus_even", "o_minus_even", "o_plus_odd", "o_minus_odd"})
    for (int n = 1; n <= 2; ++n) append(in, grid(id, n, 3 * (2 * n + 1), 3, 10));
  return from_tally(run_instances(in));
}

// 4: Pfaffian bridge for 2n <= 6, plus the Pfaffian against the matching sum
// and the closed form.
Outcome criterion_pfaffian() {
  std::vector<Instance> in;
  for (int n = 1; n <= 2; ++n) append(in, grid("pfaffian_bridge", n, 6 * n, 3, 10));
  append(in, grid("pfaffian_bridge", 3, 6, 3, 10));
  Tally t = run_instances(in);
  int checked = 0, bad = 0;
  for (int len : {2, 4, 6})
    for (const Weight& w : partitions_in_box(len, 3 * len, 3)) {
      const AntisymMatrix a = build_a_matrix(w, 10);
      const ParamSeries pf = pfaffian(a);
      const PfClosedForm cf = pf_closed_form(PfKind::A, w, 10);
      ++checked;
      if (!(pf == oracle::matching_pfaffian(a)) || !(pf * cf.denominator == cf.numerator)) {
        ++bad;
        t.failures.push_back("Pfaffian check failed for " + format_weight(w));
      }
    }
  Outcome o = from_tally(t, "; " + std::to_string(checked) + " Pfaffians against the matching sum and closed form");
  o.pass = o.pass && bad == 0;
  return o;
}

// 5: alpha-beta identities, n = 1 full grid (parts <= 3) and n = 2 instances
// with |lambda| <= 4, D = 10.
Outcome criterion_ab() {
  std::vector<Instance> in;
  for (const char* id : {"ab_sum_even", "ab_sum_odd", "ab_oplus_even", "ab_ominus_even", "ab_oplus_odd", "ab_ominus_odd"}) {
    append(in, grid(id, 1, 9, 3, 10));
    append(in, grid(id, 2, 4, 3, 10));
  }
  return from_tally(run_instances(in));
}

// 6: symplectic and Kawanaka values for n <= 2, the alpha = -1 and
// alpha = -beta specializations, D = 12.
Outcome criterion_special() {
  std::vector<Instance> in;
  for (const char* id : {"symplectic", "kawanaka", "alpha_minus_one", "alpha_eq_minus_beta"})
    for (int n = 1; n <= 2; ++n) append(in, grid(id, n, 6, 3, 12));
  return from_tally(run_instances(in));
}

// 7: U(n+m), U(2n), double cover and t^2 branching, D = 12.
Outcome criterion_section8() {
  std::vector<Instance> in;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}})
    append(in, grid("unm_vanishing", n, 4, 2, 12, m));
  for (int n = 1; n <= 2; ++n) append(in, grid("u2n_vanishing", n, 4, 2, 12));
  for (int n = 1; n <= 2; ++n) append(in, grid("double_cover", n, 4, 2, 12));
  for (int n = 1; n <= 3; ++n) append(in, grid("t2_branching", n, 4, 2, 12));
  return from_tally(run_instances(in));
}

// 8: property suites.
Outcome criterion_properties() {
  std::vector<std::string> fails;
  auto check = [&fails](bool ok, const std::string& what) {
    if (!ok && fails.size() < 8) fails.push_back(what);
  };
  const int D = 40;
  const TComb t(D, 2);
  const ParamSeries one = ParamSeries::constant(D, 1);
  const ParamSeries z = ParamSeries::variable(D, Param::Alpha) + ParamSeries::monomial(D, 1, 1);
  for (int m = 2; m <= 10; ++m) {
    const ParamSeries rhs = (one + z) * t.rogers_szego(m - 1, z) -
                            t.one_minus_t(m - 1).expand(D) * z * t.rogers_szego(m - 2, z);
    check(t.rogers_szego(m, z) == rhs, "Rogers-Szego recurrence m=" + std::to_string(m));
  }
  for (int m = 0; m <= 10; ++m) {
    const ParamSeries h = t.rogers_szego(m, -one);
    check(m % 2 ? h.is_zero() : h == t.q_pochhammer(SMono{1, 2}, SMono{1, 4}, m / 2).expand(D),
          "H_m(-1) m=" + std::to_string(m));
  }
  for (int m = 0; m <= 8; ++m) {
    ParamSeries prod = one;
    for (int j = 1; j <= m; ++j) prod *= one + ParamSeries::monomial(D, 1, j);
    check(t.rogers_szego(m, ParamSeries::monomial(D, 1, 1)) == prod, "H_m(sqrt t) m=" + std::to_string(m));
  }
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      const auto inv = oracle::inversion_generating(m, n);
      ParamSeries expect(D);
      for (std::size_t k = 0; k < inv.size(); ++k) expect += ParamSeries::monomial(D, inv[k], 2 * static_cast<int>(k));
      check(t.t_binomial(m + n, n) == expect, "MacMahon m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  const std::vector<mpq_class> pts{mpq_class(2), mpq_class(-3, 5), mpq_class(7, 2)};
  for (int n = 1; n <= 3; ++n)
    for (const Weight& w : partitions_in_box(n, 4, 4)) {
      const DegenerationReport r = degenerate_check(w, n);
      const std::vector<mpq_class> x(pts.begin(), pts.begin() + n);
      const mpq_class at_zero = oracle::eval_exact(hl_generic(w), 0, x);
      check(r.schur_ok && at_zero == oracle::schur_tableaux(w, x) && at_zero == oracle::schur_value(w, x),
            "t=0 degeneration " + format_weight(w));
      check(r.monomial_ok && oracle::eval_exact(hl_generic(w), 1, x) == oracle::monomial_value(w, x),
            "t=1 degeneration " + format_weight(w));
    }
  std::mt19937 rng(1234);
  for (int size = 2; size <= 8; size += 2)
    for (int rep = 0; rep < 3; ++rep) {
      AntisymMatrix a(size, 8);
      for (int j = 0; j < size; ++j)
        for (int k = j + 1; k < size; ++k) a.set(j, k, oracle::random_series(rng, 8, 2).truncated(2));
      const ParamSeries pf = pfaffian(a);
      check(pf * pf == determinant(a), "Pf^2 = det, size " + std::to_string(size));
    }
  for (int Dr = 0; Dr <= 8; ++Dr)
    for (int rep = 0; rep < 10; ++rep) {
      const ParamSeries a = oracle::random_series(rng, Dr), b = oracle::random_series(rng, Dr),
                        c = oracle::random_series(rng, Dr);
      check((a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a,
            "ring laws at order " + std::to_string(Dr));
      check((a.truncated(Dr / 2) * b.truncated(Dr / 2)).truncated(Dr / 2) == (a * b).truncated(Dr / 2),
            "truncation homomorphism at order " + std::to_string(Dr));
    }
  Outcome o;
  o.pass = fails.empty();
  o.detail = fails.empty() ? "all property checks hold" : std::to_string(fails.size()) + " failing checks";
  for (const auto& f : fails) o.detail += "\n    " + f;
  return o;
}

int g_jobs = 0;

// 9: replay every instance from criteria 1-7 with another worker count.
Outcome criterion_determinism() {
  Outcome o;
  if (g_all_instances.empty()) {
    o.pass = false;
    o.detail = "no recorded run to compare against (run criteria 1-7 first)";
    return o;
  }
  const int jobs = std::max(2, g_jobs);
  const auto reports = run_pool(g_all_instances, jobs);
  std::size_t diff = 0;
  for (std::size_t i = 0; i < reports.size(); ++i)
    if (report_json(reports[i], false) != g_all_json[i]) ++diff;
  o.pass = diff == 0;
  o.detail = std::to_string(reports.size()) + " records compared between 1 and " + std::to_string(jobs) +
             " workers, " + std::to_string(diff) + " differ";
  return o;
}

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  g_jobs = static_cast<int>(std::max(2u, std::thread::hardware_concurrency()));
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (a == "--jobs" && i + 1 < argc) {
      g_jobs = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only k] [--jobs N]\n";
      return 2;
    }
  }
  const std::vector<Criterion> criteria{
      {1, "orthogonality", 120, criterion_orthogonality},
      {2, "normalizations", 120, criterion_normalizations},
      {3, "alpha identities", 600, criterion_alpha},
      {4, "Pfaffian bridge", 120, criterion_pfaffian},
      {5, "alpha-beta identities", 900, criterion_ab},
      {6, "symplectic, Kawanaka and specializations", 300, criterion_special},
      {7, "unitary vanishing, double cover, t^2 branching", 600, criterion_section8},
      {8, "property suites", 180, criterion_properties},
      {9, "determinism across worker counts", 1800, criterion_determinism},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    if (only && c.id != only && !(only == 9 && c.id < 9 && c.id != 8)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = secs <= c.budget_s;
    const bool pass = o.pass && in_budget;
    all = all && pass;
    std::ostringstream time;
    time << std::fixed << std::setprecision(1) << secs << " s of " << c.budget_s << " s";
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << " (" << time.str()
              << (in_budget ? "" : ", over budget") << "): " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
