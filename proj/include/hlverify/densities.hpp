#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

#include "hlverify/laurent.hpp"
#include "hlverify/tcomb.hpp"

namespace hlv {

// 1 / (1 - coef * s^c.s alpha^c.a beta^c.b * x^m)
struct GeoFactor {
  mpq_class coef = 1;
  PMono c;
  XMono m{};
};

struct DensityProduct {
  std::vector<std::string> vars;
  LaurentPoly numerator{{}, 0};
  std::vector<GeoFactor> geo;
  mpq_class prefactor = 1;
};

std::vector<std::string> var_names(const std::string& stem, int n);

// Koornwinder parameter: 0, +-1, or sign * s^k with k >= 1.
struct KParam {
  bool zero = false;
  int sign = 1;
  int s_exp = 0;
  static KParam none() { return KParam{true, 1, 0}; }
  static KParam unit(int sign) { return KParam{false, sign, 0}; }
  static KParam mono(int sign, int s_exp) { return KParam{false, sign, s_exp}; }
};

// prod_{i != j} (1 - x_i/x_j) / (1 - t x_i/x_j), t = s^t_exp.
DensityProduct selberg_density(int n, int order, int t_exp = 2, const std::string& stem = "x");
DensityProduct koornwinder_density(int n, const std::array<KParam, 4>& params, int order,
                                   const std::string& stem = "x");
// (1/(n! m!)) Selberg(x_1..x_m) Selberg(y_1..y_n)
DensityProduct block_selberg_density(int m, int n, int order);
// (1/n!^2) prod_{i,j} 1/((1 - t x_i/y_j)(1 - t y_i/x_j)) prod_{i != j} (1 - x_i/x_j)(1 - y_i/y_j)
DensityProduct paired_density(int n, int order);

// Memory ceiling for ct_integrate, read from HLV_MEM_LIMIT_MIB (default 4096).
std::size_t memory_limit_bytes();

// Constant term of density * prod(multipliers), truncated at the density order.
ParamSeries ct_integrate(const DensityProduct& density, const std::vector<LaurentPoly>& multipliers = {});

enum class Gustafson { Symplectic = 1, Kawanaka, OPlusEven, OMinusEven, OPlusOdd, OMinusOdd };
Gustafson gustafson_item(int roman);
// Density whose integral the item evaluates (rank n-1 for OMinusEven).
DensityProduct gustafson_density(Gustafson item, int n, int order);
Factored gustafson_rhs(Gustafson item, int n);

}  // namespace hlv
