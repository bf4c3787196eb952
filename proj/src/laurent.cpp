#include "hlverify/laurent.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "hlverify/errors.hpp"

namespace hlv {

LaurentPoly::LaurentPoly(std::vector<std::string> names, int order) : names_(std::move(names)), order_(order) {
  if (static_cast<int>(names_.size()) > kMaxVars)
    throw ConfigError("at most " + std::to_string(kMaxVars) + " torus variables are supported");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw ConfigError("duplicate variable name " + names_[i]);
}

LaurentPoly LaurentPoly::constant(std::vector<std::string> names, const ParamSeries& c) {
  LaurentPoly r(std::move(names), c.order());
  r.add_term(XMono{}, c);
  return r;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> names, const XMono& e, const ParamSeries& c) {
  LaurentPoly r(std::move(names), c.order());
  r.add_term(e, c);
  return r;
}

int LaurentPoly::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  throw ConfigError("unknown variable " + name);
}

XMono LaurentPoly::unit(const std::string& name, int power) const {
  XMono e{};
  e[index_of(name)] = static_cast<std::int16_t>(power);
  return e;
}

ParamSeries LaurentPoly::coeff(const XMono& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ParamSeries(order_) : it->second;
}

void LaurentPoly::add_term(const XMono& e, const ParamSeries& c) {
  if (c.order() != order_) throw ConfigError("coefficient order differs from polynomial order");
  for (int i = nvars(); i < kMaxVars; ++i)
    if (e[i] != 0) throw ConfigError("exponent set on an unused variable slot");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
  if (names_ != o.names_) throw ConfigError("Laurent polynomials over different variable lists");
  if (order_ != o.order_) throw ConfigError("Laurent polynomials over different truncation orders");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const ParamSeries& c) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_compatible(b);
  LaurentPoly r(a.names_, a.order_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(xmono_add(ea, eb), ca * cb);
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  check_compatible(o);
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (it->first != e || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

LaurentPoly LaurentPoly::constant_term(const std::vector<std::string>& vars) const {
  std::vector<int> idx;
  for (const auto& v : vars) idx.push_back(index_of(v));
  LaurentPoly r(names_, order_);
  for (const auto& [e, c] : terms_)
    if (std::all_of(idx.begin(), idx.end(), [&e](int i) { return e[i] == 0; })) r.terms_.emplace(e, c);
  return r;
}

Substitution parse_substitution(const std::string& text) {
  static const std::regex unit(R"(\s*([+-]?)1\s*)");
  static const std::regex var(R"(\s*([+-]?)([A-Za-z_]\w*)(\^(-?1))?\s*)");
  static const std::regex inv(R"(\s*([+-]?)1/([A-Za-z_]\w*)\s*)");
  std::smatch m;
  Substitution s;
  if (std::regex_match(text, m, unit)) {
    s.sign = m[1] == "-" ? -1 : 1;
  } else if (std::regex_match(text, m, var)) {
    s.sign = m[1] == "-" ? -1 : 1;
    s.var = m[2].str();
    s.power = m[4].matched ? std::stoi(m[4].str()) : 1;
  } else if (std::regex_match(text, m, inv)) {
    s.sign = m[1] == "-" ? -1 : 1;
    s.var = m[2].str();
    s.power = -1;
  } else {
    throw DomainError("substitution '" + text + "' is not +-1 or a signed variable or inverse");
  }
  return s;
}

LaurentPoly LaurentPoly::specialize(const std::map<std::string, Substitution>& assignment) const {
  struct Img {
    int sign = 1;
    int var = -1;
    int power = 0;
  };
  std::vector<std::optional<Img>> img(names_.size());
  for (const auto& [name, sub] : assignment) {
    const int i = index_of(name);
    if (sub.sign != 1 && sub.sign != -1) throw DomainError("substitution sign must be +1 or -1");
    Img m;
    m.sign = sub.sign;
    if (sub.var) {
      if (sub.power != 1 && sub.power != -1)
        throw DomainError("substitution target must be a variable or its inverse");
      m.var = index_of(*sub.var);
      m.power = sub.power;
    }
    img[i] = m;
  }
  LaurentPoly r(names_, order_);
  for (const auto& [e, c] : terms_) {
    XMono out{};
    int sign = 1;
    for (int i = 0; i < nvars(); ++i) {
      if (!img[i]) {
        out[i] = static_cast<std::int16_t>(out[i] + e[i]);
        continue;
      }
      const Img& m = *img[i];
      if (m.sign < 0 && (e[i] & 1)) sign = -sign;
      if (m.var >= 0) out[m.var] = static_cast<std::int16_t>(out[m.var] + m.power * e[i]);
    }
    r.add_term(out, sign > 0 ? c : -c);
  }
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < nvars(); ++i) {
      if (e[i] == 0) continue;
      os << "*" << names_[i];
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace hlv
