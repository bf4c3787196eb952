#include <cstdio>
#include <sstream>

#include "hlverify/identities.hpp"
#include "json.hpp"

namespace hlv {

namespace {

using Json = nlohmann::ordered_json;

Json weight_json(const Weight& w) {
  Json a = Json::array();
  for (int p : w) a.push_back(p);
  return a;
}

}  // namespace

std::string report_json(const Report& r, bool timing) {
  const Instance& in = r.instance;
  const IdentityInfo& info = find_identity(in.identity);
  Json j;
  j["identity"] = in.identity;
  Json p;
  p["n"] = in.n;
  p["m"] = info.uses_m ? Json(in.m) : Json(nullptr);
  p["lambda"] = weight_json(in.lambda);
  p["mu"] = info.uses_mu ? weight_json(in.mu) : Json(nullptr);
  j["params"] = p;
  j["order"] = in.order;
  j["achieved_order"] = r.achieved_order;
  j["status"] = status_name(r.status);
  j["first_discrepancy"] = r.first_discrepancy ? Json(*r.first_discrepancy) : Json(nullptr);
  j["notes"] = r.notes;
  if (timing) j["wall_time_ms"] = static_cast<long long>(r.wall_ms + 0.5);
  return j.dump();
}

std::string report_text(const Report& r) {
  const Instance& in = r.instance;
  const IdentityInfo& info = find_identity(in.identity);
  std::ostringstream os;
  os << in.identity << " n=" << in.n;
  if (info.uses_m) os << " m=" << in.m;
  if (info.uses_weight) os << " lambda=" << format_weight(in.lambda);
  if (info.uses_mu) os << " mu=" << format_weight(in.mu);
  os << " order=" << r.achieved_order;
  if (r.achieved_order != in.order) os << "/" << in.order;
  os << ": " << status_name(r.status);
  if (r.first_discrepancy) os << " (first difference at degree " << *r.first_discrepancy << ")";
  for (const auto& n : r.notes) os << "\n  note: " << n;
  return os.str();
}

std::string catalog_json() {
  Json a = Json::array();
  for (const auto& i : catalog()) {
    Json j;
    j["name"] = i.name;
    j["description"] = i.description;
    j["signature"] = i.signature;
    j["weight_shape"] = i.weight_shape;
    j["parameters"] = i.parameters;
    a.push_back(j);
  }
  return a.dump(2);
}

std::string catalog_text() {
  std::ostringstream os;
  for (const auto& i : catalog()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-20s", i.name.c_str());
    os << buf << " [" << i.signature << "; " << i.weight_shape << "; " << i.parameters << "]\n"
       << std::string(21, ' ') << i.description << "\n";
  }
  return os.str();
}

}  // namespace hlv
