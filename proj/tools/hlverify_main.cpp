#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "hlverify/errors.hpp"
#include "hlverify/identities.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

int emit(const std::vector<hlv::Report>& reports, bool json, bool timing) {
  bool mismatch = false, resource = false;
  for (const auto& r : reports) {
    std::cout << (json ? hlv::report_json(r, timing) : hlv::report_text(r)) << "\n";
    if (r.resource_limited())
      resource = true;
    else if (r.status == hlv::Status::Mismatch)
      mismatch = true;
  }
  std::cout.flush();
  if (resource) return kExitResource;
  return mismatch ? kExitMismatch : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Hall-Littlewood torus-integral identities"};
  app.require_subcommand(1);

  bool list_json = false;
  auto* list = app.add_subcommand("list", "Show every registered identity");
  list->add_flag("--json", list_json, "Machine-readable catalog");

  hlv::Instance inst;
  std::string lambda_text, mu_text;
  bool json = false, timing = false;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  int max_weight = 4, max_parts = 3;

  auto common = [&](CLI::App* c) {
    c->add_option("--identity", inst.identity, "Identity name (see `list`)")->required();
    c->add_option("--n", inst.n, "Rank n")->required();
    c->add_option("--m", inst.m, "Second rank m (unm_vanishing)");
    c->add_option("--order", inst.order, "Truncation order D")->check(CLI::Range(1, 120));
    c->add_flag("--json", json, "One JSON record per instance");
    c->add_flag("--timing", timing, "Include wall time in JSON records");
  };
  auto* verify = app.add_subcommand("verify", "Check a single instance");
  common(verify);
  verify->add_option("--lambda", lambda_text, "Weight, e.g. 2,1,0 or 1,0,-1");
  verify->add_option("--mu", mu_text, "Second weight (orthogonality)");

  auto* sweep = app.add_subcommand("sweep", "Check every weight in a box");
  common(sweep);
  sweep->add_option("--max-weight", max_weight, "Bound on the sum of |parts|")->check(CLI::NonNegativeNumber);
  sweep->add_option("--max-parts", max_parts, "Bound on each |part|")->check(CLI::NonNegativeNumber);
  sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*list) {
      std::cout << (list_json ? hlv::catalog_json() + "\n" : hlv::catalog_text());
      return 0;
    }
    if (*verify) {
      const auto& info = hlv::find_identity(inst.identity);
      inst.lambda = hlv::parse_weight(lambda_text, info.negative_parts);
      inst.mu = hlv::parse_weight(mu_text, false);
      return emit({hlv::verify(inst)}, json, timing);
    }
    const auto instances = hlv::sweep_instances(inst.identity, inst.n, inst.m, max_weight, max_parts, inst.order);
    for (auto i : instances) hlv::prepare(i);  // reject bad ranks before any work starts
    return emit(hlv::run_pool(instances, jobs), json, timing);
  } catch (const hlv::ConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
}
