#include "hlverify/param_series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "hlverify/errors.hpp"

namespace hlv {

namespace {

std::uint32_t ring_size(int order) { return pmono_index(order + 1, 0, 0); }

void check_order(int order) {
  if (order < 0 || order > ParamSeries::kMaxOrder)
    throw ConfigError("truncation order out of range: " + std::to_string(order));
}

// Dense accumulator reused across products on the same thread.
struct Scratch {
  std::vector<mpq_class> acc;
  std::vector<char> used;
  std::vector<std::uint32_t> touched;
  std::vector<PMono> exps;
  void ensure(std::uint32_t n) {
    if (acc.size() < n) {
      acc.resize(n);
      used.resize(n, 0);
      exps.resize(n);
    }
  }
};

thread_local Scratch g_scratch;

ParamSeries::Term make_term(int s, int a, int b, mpq_class c) {
  return {pmono_index(s, a, b), static_cast<std::uint8_t>(s), static_cast<std::uint8_t>(a),
          static_cast<std::uint8_t>(b), std::move(c)};
}

}  // namespace

ParamSeries::ParamSeries(int order) : order_(order) { check_order(order); }

ParamSeries ParamSeries::constant(int order, const mpq_class& c) { return monomial(order, c, 0, 0, 0); }

ParamSeries ParamSeries::monomial(int order, const mpq_class& c, int s, int a, int b) {
  ParamSeries r(order);
  if (s < 0 || a < 0 || b < 0) throw DomainError("negative exponent in parameter monomial");
  if (c != 0 && s + a + b <= order) r.terms_.push_back(make_term(s, a, b, c));
  return r;
}

ParamSeries ParamSeries::variable(int order, Param p) {
  switch (p) {
    case Param::S: return monomial(order, 1, 1, 0, 0);
    case Param::Alpha: return monomial(order, 1, 0, 1, 0);
    case Param::Beta: return monomial(order, 1, 0, 0, 1);
  }
  return ParamSeries(order);
}

ParamSeries ParamSeries::s_poly(int order, const std::vector<mpq_class>& coeffs) {
  ParamSeries r(order);
  for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= order; ++k)
    if (coeffs[k] != 0) r.terms_.push_back(make_term(static_cast<int>(k), 0, 0, coeffs[k]));
  return r;
}

void ParamSeries::check_ring(const ParamSeries& o) const {
  if (o.order_ != order_)
    throw ConfigError("series of truncation orders " + std::to_string(order_) + " and " +
                      std::to_string(o.order_) + " combined");
}

mpq_class ParamSeries::coeff(int s, int a, int b) const {
  const auto idx = pmono_index(s, a, b);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), idx,
                             [](const Term& t, std::uint32_t i) { return t.idx < i; });
  if (it != terms_.end() && it->idx == idx) return it->c;
  return 0;
}

std::optional<int> ParamSeries::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().degree();
}

int ParamSeries::max_degree() const { return terms_.empty() ? -1 : terms_.back().degree(); }

std::optional<int> ParamSeries::first_difference(const ParamSeries& o) const {
  check_ring(o);
  return (*this - o).valuation();
}

ParamSeries ParamSeries::operator-() const {
  ParamSeries r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

ParamSeries& ParamSeries::operator+=(const ParamSeries& o) {
  check_ring(o);
  add_shifted(o, 1, PMono{}, order_);
  return *this;
}

ParamSeries& ParamSeries::operator-=(const ParamSeries& o) {
  check_ring(o);
  add_shifted(o, -1, PMono{}, order_);
  return *this;
}

void ParamSeries::add_shifted(const ParamSeries& src, const mpq_class& c, const PMono& m, int cap) {
  if (c == 0 || src.terms_.empty()) return;
  cap = std::min(cap, order_);
  const int md = m.degree();
  if (md > cap) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + src.terms_.size());
  auto it = terms_.begin();
  mpq_class tmp;
  for (const Term& st : src.terms_) {
    if (st.degree() + md > cap) break;
    const int s = st.s + m.s, a = st.a + m.a, b = st.b + m.b;
    const auto idx = pmono_index(s, a, b);
    while (it != terms_.end() && it->idx < idx) out.push_back(std::move(*it++));
    mpq_mul(tmp.get_mpq_t(), st.c.get_mpq_t(), c.get_mpq_t());
    if (it != terms_.end() && it->idx == idx) {
      it->c += tmp;
      if (it->c != 0) out.push_back(std::move(*it));
      ++it;
    } else {
      out.push_back(make_term(s, a, b, tmp));
    }
  }
  while (it != terms_.end()) out.push_back(std::move(*it++));
  terms_ = std::move(out);
}

ParamSeries ParamSeries::shifted(const mpq_class& c, int ds, int da, int db) const {
  ParamSeries r(order_);
  r.add_shifted(*this, c, PMono{ds, da, db}, order_);
  return r;
}

ParamSeries mul_trunc(const ParamSeries& x, const ParamSeries& y, int cap) {
  x.check_ring(y);
  const int D = std::min(cap, x.order_);
  ParamSeries r(x.order_);
  if (D < 0) return r;
  if (x.terms_.empty() || y.terms_.empty()) return r;
  if (x.terms_.size() == 1) {
    const auto& t = x.terms_.front();
    r.add_shifted(y, t.c, PMono{t.s, t.a, t.b}, D);
    return r;
  }
  if (y.terms_.size() == 1) {
    const auto& t = y.terms_.front();
    r.add_shifted(x, t.c, PMono{t.s, t.a, t.b}, D);
    return r;
  }
  Scratch& sc = g_scratch;
  sc.ensure(ring_size(D));
  sc.touched.clear();
  mpq_class tmp;
  for (const auto& ta : x.terms_) {
    const int da = ta.degree();
    if (da > D) break;
    for (const auto& tb : y.terms_) {
      if (da + tb.degree() > D) break;
      const int s = ta.s + tb.s, a = ta.a + tb.a, b = ta.b + tb.b;
      const auto idx = pmono_index(s, a, b);
      if (!sc.used[idx]) {
        sc.used[idx] = 1;
        sc.touched.push_back(idx);
        sc.exps[idx] = PMono{s, a, b};
        mpq_mul(sc.acc[idx].get_mpq_t(), ta.c.get_mpq_t(), tb.c.get_mpq_t());
      } else {
        mpq_mul(tmp.get_mpq_t(), ta.c.get_mpq_t(), tb.c.get_mpq_t());
        sc.acc[idx] += tmp;
      }
    }
  }
  std::sort(sc.touched.begin(), sc.touched.end());
  r.terms_.reserve(sc.touched.size());
  for (auto idx : sc.touched) {
    sc.used[idx] = 0;
    if (sc.acc[idx] != 0) {
      const PMono& e = sc.exps[idx];
      r.terms_.push_back(make_term(e.s, e.a, e.b, sc.acc[idx]));
    }
  }
  return r;
}

ParamSeries& ParamSeries::operator*=(const ParamSeries& o) {
  *this = *this * o;
  return *this;
}

ParamSeries& ParamSeries::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.c *= c;
  return *this;
}

bool ParamSeries::operator==(const ParamSeries& o) const {
  check_ring(o);
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].idx != o.terms_[i].idx || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

ParamSeries ParamSeries::pow(int k) const {
  if (k < 0) throw DomainError("negative power of a series");
  ParamSeries r = constant(order_, 1), base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

void ParamSeries::truncate(int cap) {
  auto it = std::find_if(terms_.begin(), terms_.end(), [cap](const Term& t) { return t.degree() > cap; });
  terms_.erase(it, terms_.end());
}

ParamSeries ParamSeries::with_order(int order) const {
  ParamSeries r(order);
  for (const auto& t : terms_) {
    if (t.degree() > order) break;
    r.terms_.push_back(t);
  }
  return r;
}

ParamSeries ParamSeries::inverse() const {
  const mpq_class c0 = constant_coeff();
  if (c0 == 0) throw DomainError("series with zero constant term is not invertible");
  const mpq_class inv0 = 1 / c0;
  ParamSeries w = constant(order_, 1) - *this * inv0;  // valuation >= 1
  ParamSeries sum = constant(order_, 1), pw = constant(order_, 1);
  for (int k = 1; k <= order_; ++k) {
    pw *= w;
    if (pw.is_zero()) break;
    sum += pw;
  }
  return sum * inv0;
}

ParamSeries ParamSeries::substitute(Param p, const ParamSeries& image) const {
  check_ring(image);
  std::vector<ParamSeries> powers{constant(order_, 1)};
  ParamSeries r(order_);
  for (const auto& t : terms_) {
    const int e = p == Param::S ? t.s : p == Param::Alpha ? t.a : t.b;
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * image);
    PMono rest{t.s, t.a, t.b};
    (p == Param::S ? rest.s : p == Param::Alpha ? rest.a : rest.b) = 0;
    r.add_shifted(powers[e], t.c, rest, order_);
  }
  return r;
}

std::string ParamSeries::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.c;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    const bool unit = t.degree() == 0 || c != 1;
    std::string body;
    auto var = [&body](const char* name, int e) {
      if (e == 0) return;
      if (!body.empty()) body += "*";
      body += name;
      if (e > 1) body += "^" + std::to_string(e);
    };
    var("s", t.s);
    var("alpha", t.a);
    var("beta", t.b);
    if (unit) {
      os << c.get_str();
      if (!body.empty()) os << "*";
    }
    os << body;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ParamSeries& p) { return os << p.str(); }

}  // namespace hlv
