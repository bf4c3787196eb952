#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hlverify/param_series.hpp"
#include "hlverify/partitions.hpp"
#include "hlverify/tcomb.hpp"

namespace hlv {

struct IdentityInfo {
  std::string name;
  std::string description;
  std::string signature;     // parameters the identity reads
  std::string weight_shape;  // stored length of lambda (and mu) in terms of n, m
  std::string parameters;    // small parameters in play
  bool uses_m = false;
  bool uses_mu = false;
  bool uses_weight = true;
  bool negative_parts = false;
};

const std::vector<IdentityInfo>& catalog();
const IdentityInfo& find_identity(const std::string& name);  // ConfigError if unknown

struct Instance {
  std::string identity;
  int n = 1;
  int m = 0;
  Weight lambda;
  Weight mu;
  int order = 12;
};

enum class Status { Match, Mismatch, Vanished };
std::string status_name(Status s);

struct Report {
  Instance instance;
  int achieved_order = 0;
  Status status = Status::Mismatch;
  std::optional<int> first_discrepancy;
  std::vector<std::string> notes;
  double wall_ms = 0;
  bool passed() const { return status != Status::Mismatch && achieved_order == instance.order; }
  bool resource_limited() const { return achieved_order < instance.order; }
};

// Stored length of lambda for the identity at rank (n, m).
int ambient_length(const IdentityInfo& info, int n, int m);
// Pad a short weight to the ambient length (zeros go between the positive and
// negative parts) and validate the shape.
Weight normalize_weight(const Weight& w, int length, bool allow_negative);

// Validate and pad the instance in place; ConfigError on bad input.
void prepare(Instance& inst);

enum class OrthComponent { PlusEven, MinusEven, PlusOdd, MinusOdd };
enum class SpecialCase { Symplectic, Kawanaka, AlphaMinusOne, AlphaEqMinusBeta };
enum class Section8Case { Unm, U2n, DoubleCover, T2Branching };

// Right-hand side as a t-part times a polynomial in alpha, beta.
struct ClosedForm {
  Factored factor{0};
  ParamSeries bracket;
  bool is_zero() const { return factor.is_zero() || bracket.is_zero(); }
  ParamSeries series(int order) const;
};

// delta_{lambda mu} n! / v_mu(t)
ClosedForm rhs_orthogonality(const Weight& lambda, const Weight& mu, int n, int order);
// phi_N / (v_lambda (1-t)^N) [(-alpha)^#odd +- (-alpha)^#even], N = stored length
ClosedForm rhs_orthogonal_alpha(OrthComponent c, const Weight& lambda, int order);
// Same prefactor with the Rogers-Szego brackets in alpha, beta.
ClosedForm rhs_ab(OrthComponent c, const Weight& lambda, int order);
// lambda has 2n parts in every case.
ClosedForm rhs_special(SpecialCase c, const Weight& lambda, int n, int order);
// Weights with negative parts; m only for Unm. DoubleCover uses v_mu on mu
// padded to n parts.
ClosedForm rhs_section8(Section8Case c, const Weight& lambda, int n, int m, int order);

// Normalized left side L * I / Z of an instance, as s^-s_shift * value.
struct LhsValue {
  ParamSeries value;
  int s_shift = 0;
};
LhsValue lhs_build(Instance inst);

// Evaluate one instance. Retries at lower orders when the memory ceiling is hit.
Report verify(Instance inst);

// Every weight of the ambient length with sum |parts| <= max_weight and
// |part| <= max_parts (pairs for identities with a second weight).
std::vector<Instance> sweep_instances(const std::string& identity, int n, int m, int max_weight, int max_parts,
                                      int order);

// Run the instances on `jobs` threads; results come back in input order.
std::vector<Report> run_pool(const std::vector<Instance>& instances, int jobs);

std::string report_json(const Report& r, bool timing);
std::string report_text(const Report& r);
std::string catalog_json();
std::string catalog_text();

}  // namespace hlv
