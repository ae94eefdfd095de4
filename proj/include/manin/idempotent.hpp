#ifndef MANIN_IDEMPOTENT_HPP
#define MANIN_IDEMPOTENT_HPP

#include <string>
#include <tuple>
#include <vector>

#include "manin/matrix.hpp"
#include "manin/perm.hpp"

namespace manin {

// Lie structure constant C^{ij}_k, 1-based over the Lie algebra basis.
struct StructureConstant {
  int i, j, k;
  Q value;
};

struct IdempotentSpec {
  std::string family;
  int n = 0;
  Q q = 0;
  QMatrix qhat;
  Q a = 0, b = 0, c = 0, kappa = 0;
  std::vector<StructureConstant> structure;
  QMatrix custom;
};

const std::vector<std::string>& family_names();

bool is_parameter_matrix(const QMatrix& q);
// q_ij = q^{sgn(j-i)}.
QMatrix standard_params(const Q& q, int n);
// (s q s^{-1})_{ij} = q_{s^{-1}(i), s^{-1}(j)}.
QMatrix conjugate_params(const QMatrix& q, const Perm& s);

QMatrix op_P(int n);
QMatrix op_A(int n);
QMatrix op_S(int n);
QMatrix op_Pqhat(const QMatrix& qhat);
QMatrix op_Aqhat(const QMatrix& qhat);
QMatrix op_Ptilde_qhat(const QMatrix& qhat);
QMatrix op_Atilde_qhat(const QMatrix& qhat);
QMatrix op_Rhat(const Q& q, int n);
QMatrix op_R(const Q& q, int n);
QMatrix op_Rhat_plus(const Q& q, int n);
QMatrix op_Rhat_minus(const Q& q, int n);
QMatrix op_Q(int n);
QMatrix op_Qtilde(int n);
QMatrix op_B(int n);
QMatrix op_Btilde(int n);
QMatrix op_P_fourparam(const Q& a, const Q& b, const Q& c, const Q& kappa);
QMatrix op_A_fourparam(const Q& a, const Q& b, const Q& c, const Q& kappa);
QMatrix op_C_lie(const std::vector<StructureConstant>& sc, int n);
QMatrix op_A_lie(const std::vector<StructureConstant>& sc, int n);

// Throws InputError on invalid parameters.
void validate(const IdempotentSpec& spec);
QMatrix build(const IdempotentSpec& spec);

bool is_idempotent(const QMatrix& e);
QMatrix make_idempotent(const QMatrix& relations);
bool left_equivalent(const QMatrix& e1, const QMatrix& e2);
bool right_equivalent(const QMatrix& e1, const QMatrix& e2);

}  // namespace manin

#endif  // MANIN_IDEMPOTENT_HPP
