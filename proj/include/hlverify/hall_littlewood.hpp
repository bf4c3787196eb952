#pragma once

#include <string>
#include <vector>

#include "hlverify/exact_poly.hpp"
#include "hlverify/laurent.hpp"
#include "hlverify/partitions.hpp"

namespace hlv {

// One argument of a Hall-Littlewood polynomial: sign * s^s_exp * x^x.
struct Slot {
  int sign = 1;
  int s_exp = 0;
  XMono x{};
};

Slot slot_var(int var, int power = 1, int s_exp = 0, int sign = 1);
Slot slot_const(int sign);

// Argument list x_1..x_n, x_1^-1..x_n^-1 over variables [first, first+n).
std::vector<Slot> slots_plus_minus(int n, int first = 0);
std::vector<Slot> slots_vars(int n, int first = 0, int power = 1);

// Value s^(-s_shift) * poly. The shift is non-zero only when arguments carry
// negative powers of s.
struct HLValue {
  int s_shift = 0;
  LaurentPoly poly;
};

// Generic P_w in abstract variables u_1..u_N (slots 1..N) with t in slot 0.
// Memoized; safe to call from several threads.
const ExactPoly& hl_generic(const Weight& w);
// v_w(t) P_w, the symmetrization before normalization.
const ExactPoly& hl_generic_R(const Weight& w);

// Substitute u_k -> args[k-1] and t -> s^t_exp.
HLValue substitute_slots(const ExactPoly& generic, const std::vector<Slot>& args,
                         const std::vector<std::string>& names, int order, int t_exp = 2);

HLValue hl_full(const Weight& w, const std::vector<Slot>& args, const std::vector<std::string>& names,
                int order, int t_exp = 2);
HLValue hl_R(const Weight& w, const std::vector<Slot>& args, const std::vector<std::string>& names, int order,
             int t_exp = 2);
// b_w(t) P_w for a partition w.
HLValue hl_Q(const Weight& w, const std::vector<Slot>& args, const std::vector<std::string>& names, int order,
             int t_exp = 2);

// The summand of R_w for the permutation perm (a rearrangement of 0..N-1):
// perm(x^w prod_{i<j} (x_i - t x_j)/(x_i - x_j)) at the given arguments.
// DomainError when the term has a pole that does not cancel.
HLValue hl_term(const Weight& w, const std::vector<int>& perm, const std::vector<Slot>& args,
                const std::vector<std::string>& names, int order, int t_exp = 2);

// Independent references for the t = 0 and t = 1 degenerations, over N
// abstract variables (slot 0 unused).
ExactPoly schur_by_tableaux(const Weight& partition, int nvars);
ExactPoly monomial_symmetric(const Weight& partition, int nvars);

struct DegenerationReport {
  bool schur_ok = false;
  bool monomial_ok = false;
};
DegenerationReport degenerate_check(const Weight& partition, int nvars);

}  // namespace hlv
