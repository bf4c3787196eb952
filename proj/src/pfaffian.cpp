#include "hlverify/pfaffian.hpp"

#include <unordered_map>

#include "hlverify/errors.hpp"

namespace hlv {

AntisymMatrix::AntisymMatrix(int size, int order) : size_(size), order_(order) {
  if (size < 0 || size > 30) throw ConfigError("matrix size out of range");
  upper_.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(size > 0 ? size - 1 : 0) / 2,
                ParamSeries(order));
}

std::size_t AntisymMatrix::slot(int j, int k) const {
  // row j holds columns j+1..size-1
  const std::size_t J = static_cast<std::size_t>(j), K = static_cast<std::size_t>(k);
  const std::size_t n = static_cast<std::size_t>(size_);
  return J * (2 * n - J - 1) / 2 + (K - J - 1);
}

ParamSeries AntisymMatrix::at(int j, int k) const {
  if (j < 0 || k < 0 || j >= size_ || k >= size_) throw ConfigError("matrix index out of range");
  if (j == k) return ParamSeries(order_);
  if (j < k) return upper_[slot(j, k)];
  return -upper_[slot(k, j)];
}

void AntisymMatrix::set(int j, int k, const ParamSeries& v) {
  if (j < 0 || k < 0 || j >= size_ || k >= size_ || j == k) throw ConfigError("matrix index out of range");
  if (v.order() != order_) throw ConfigError("entry order differs from the matrix order");
  if (j < k)
    upper_[slot(j, k)] = v;
  else
    upper_[slot(k, j)] = -v;
}

namespace {

ParamSeries pf_rec(const AntisymMatrix& a, std::uint32_t mask, std::unordered_map<std::uint32_t, ParamSeries>& memo) {
  if (mask == 0) return ParamSeries::constant(a.order(), 1);
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  const int first = __builtin_ctz(mask);
  const std::uint32_t rest = mask & ~(1u << first);
  ParamSeries r(a.order());
  int pos = 0;  // position of k among the remaining indices after `first`
  for (int k = first + 1; k < a.size(); ++k) {
    if (!(rest >> k & 1u)) continue;
    const ParamSeries e = a.at(first, k);
    if (!e.is_zero()) {
      ParamSeries term = e * pf_rec(a, rest & ~(1u << k), memo);
      if (pos % 2)
        r -= term;
      else
        r += term;
    }
    ++pos;
  }
  memo.emplace(mask, r);
  return r;
}

ParamSeries det_rec(const AntisymMatrix& a, int row, std::uint32_t cols,
                    std::unordered_map<std::uint32_t, ParamSeries>& memo) {
  if (row == a.size()) return ParamSeries::constant(a.order(), 1);
  if (auto it = memo.find(cols); it != memo.end()) return it->second;
  ParamSeries r(a.order());
  int pos = 0;
  for (int c = 0; c < a.size(); ++c) {
    if (!(cols >> c & 1u)) continue;
    const ParamSeries e = a.at(row, c);
    if (!e.is_zero()) {
      ParamSeries term = e * det_rec(a, row + 1, cols & ~(1u << c), memo);
      if (pos % 2)
        r -= term;
      else
        r += term;
    }
    ++pos;
  }
  memo.emplace(cols, r);
  return r;
}

// (l_j - j) - (l_k - k) with 0-based j, k.
bool odd_gap(const Weight& l, int j, int k) {
  const int d = l[static_cast<std::size_t>(j)] - l[static_cast<std::size_t>(k)] - j + k;
  return d % 2 != 0;
}

ParamSeries a_entry(const Weight& l, int j, int k, int order) {
  const ParamSeries alpha = ParamSeries::variable(order, Param::Alpha);
  if (odd_gap(l, j, k)) return ParamSeries::constant(order, 1) + alpha * alpha;
  return alpha * mpq_class(-2);
}

void require_parts(const Weight& l, bool odd) {
  require_weight(l, false);
  if (l.empty() || (l.size() % 2 == 1) != odd)
    throw DomainError(std::string("weight must have an ") + (odd ? "odd" : "even") + " number of stored parts");
}

ParamSeries alpha_pow(int order, int k, int sign) {
  return ParamSeries::monomial(order, (k % 2 && sign < 0) ? -1 : 1, 0, k);
}

}  // namespace

ParamSeries pfaffian(const AntisymMatrix& a) {
  if (a.size() % 2) throw DomainError("Pfaffian of an odd-size matrix");
  std::unordered_map<std::uint32_t, ParamSeries> memo;
  return pf_rec(a, a.size() == 0 ? 0u : (a.size() == 32 ? ~0u : (1u << a.size()) - 1), memo);
}

ParamSeries determinant(const AntisymMatrix& a) {
  std::unordered_map<std::uint32_t, ParamSeries> memo;
  return det_rec(a, 0, (1u << a.size()) - 1, memo);
}

AntisymMatrix build_a_matrix(const Weight& lambda, int order) {
  require_weight(lambda, false);
  const int N = static_cast<int>(lambda.size());
  AntisymMatrix m(N, order);
  for (int j = 0; j < N; ++j)
    for (int k = j + 1; k < N; ++k) m.set(j, k, a_entry(lambda, j, k, order));
  return m;
}

AntisymMatrix build_M_minus(const Weight& lambda, int order) {
  require_parts(lambda, false);
  const int N = static_cast<int>(lambda.size());
  AntisymMatrix m(N + 2, order);
  for (int k = 2; k < N + 2; ++k) {
    const int e = lambda[static_cast<std::size_t>(k - 2)] - (k - 1);
    m.set(0, k, ParamSeries::constant(order, e % 2 ? -1 : 1));
    m.set(1, k, ParamSeries::constant(order, 1));
  }
  for (int j = 2; j < N + 2; ++j)
    for (int k = j + 1; k < N + 2; ++k) m.set(j, k, a_entry(lambda, j - 2, k - 2, order));
  return m;
}

AntisymMatrix build_M_plus(const Weight& lambda, int order) {
  require_parts(lambda, true);
  const int N = static_cast<int>(lambda.size());
  AntisymMatrix m(N + 1, order);
  for (int k = 1; k < N + 1; ++k) m.set(0, k, ParamSeries::constant(order, 1));
  for (int j = 1; j < N + 1; ++j)
    for (int k = j + 1; k < N + 1; ++k) m.set(j, k, a_entry(lambda, j - 1, k - 1, order));
  return m;
}

PfClosedForm pf_closed_form(PfKind kind, const Weight& lambda, int order) {
  require_parts(lambda, kind == PfKind::MPlus);
  const auto [odd, even] = parity_counts(lambda);
  const int n = static_cast<int>(lambda.size()) / 2;
  const ParamSeries one = ParamSeries::constant(order, 1);
  const ParamSeries alpha = ParamSeries::variable(order, Param::Alpha);
  const ParamSeries po = alpha_pow(order, odd, -1), pe = alpha_pow(order, even, -1);
  const mpq_class two_n(mpz_class(1) << static_cast<unsigned>(n));
  switch (kind) {
    case PfKind::A: return {(po + pe) * (two_n / 2), one};
    case PfKind::MMinus: return {(po - pe) * two_n, one - alpha * alpha};
    case PfKind::MPlus: return {(po + pe) * two_n, one - alpha};
  }
  throw ConfigError("unknown Pfaffian kind");
}

}  // namespace hlv
