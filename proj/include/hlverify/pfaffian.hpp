#pragma once

#include <vector>

#include "hlverify/param_series.hpp"
#include "hlverify/partitions.hpp"

namespace hlv {

// Antisymmetric matrix over ParamSeries; only the strict upper triangle is stored.
class AntisymMatrix {
 public:
  AntisymMatrix(int size, int order);

  int size() const { return size_; }
  int order() const { return order_; }
  // Entry (j, k) with 0-based indices; the lower triangle is the negated upper one.
  ParamSeries at(int j, int k) const;
  void set(int j, int k, const ParamSeries& v);

 private:
  std::size_t slot(int j, int k) const;
  int size_;
  int order_;
  std::vector<ParamSeries> upper_;
};

// Expansion along the first row, memoized on the set of remaining indices.
ParamSeries pfaffian(const AntisymMatrix& a);
// Determinant of the full (antisymmetric) matrix by memoized Laplace expansion.
ParamSeries determinant(const AntisymMatrix& a);

// a_{j,k} = (1 + alpha^2) when (l_j - j) - (l_k - k) is odd, -2 alpha when even.
AntisymMatrix build_a_matrix(const Weight& lambda, int order);
// Bordered (2n+2)-matrix for the rank-2n odd-sign component; lambda has 2n parts.
AntisymMatrix build_M_minus(const Weight& lambda, int order);
// Bordered (2n+2)-matrix for the rank-(2n+1) component; lambda has 2n+1 parts.
AntisymMatrix build_M_plus(const Weight& lambda, int order);

enum class PfKind { A, MMinus, MPlus };

// Closed form value of the Pfaffian as numerator / denominator, both
// polynomials in alpha: den * Pf == num is the exact claim.
struct PfClosedForm {
  ParamSeries numerator;
  ParamSeries denominator;
  ParamSeries value() const { return numerator * denominator.inverse(); }
};
PfClosedForm pf_closed_form(PfKind kind, const Weight& lambda, int order);

}  // namespace hlv
