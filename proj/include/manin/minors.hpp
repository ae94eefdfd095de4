#ifndef MANIN_MINORS_HPP
#define MANIN_MINORS_HPP

#include <string>
#include <vector>

#include "manin/ideal.hpp"
#include "manin/manin.hpp"
#include "manin/ncpoly.hpp"

namespace manin {

// T M^{(1)} ... M^{(k)} T~.
NCMatrix minor_operator(const QMatrix& t, const QMatrix& tt, const NCMatrix& m, int k);

// Sum over sigma of (-1)^sigma mu(q, sigma)^{-1} M^{sigma(1)}_1 ... M^{sigma(k)}_k.
NCPoly det_qhat(const QMatrix& qhat, const NCMatrix& m);
// Sum over sigma of mu(p, sigma) M^1_{sigma(1)} ... M^k_{sigma(k)}.
NCPoly perm_qhat(const QMatrix& phat, const NCMatrix& m);

bool verify_identity(const NCPoly& lhs, const NCPoly& rhs, const IdealSlice& slice);

// Generator matrix of U_{A,B} with its relation vectors.
struct UniversalMatrix {
  Alphabet alpha;
  NCMatrix m;
  std::vector<SparseVec> relations;
  std::size_t g = 0;
};
UniversalMatrix universal_matrix(const ManinPair& pair, const std::string& sym = "M");

struct IdentityCheck {
  std::string id;
  bool pass = false;
  std::string detail;
};

// Free-algebra row law for k x k matrices.
IdentityCheck check_row_law(const QMatrix& qhat);
// Column law modulo the universal (qhat, phat)-Manin ideal; qhat and phat are k x k.
IdentityCheck check_column_law(const QMatrix& qhat, const QMatrix& phat);
// det_{q_II}(M_IJ) = 0 for repeated column indices, k = 2.
IdentityCheck check_repeated_column(const QMatrix& qhat, const QMatrix& phat);
// 2 x 2 Cauchy-Binet for det and perm with standard parameters q, p, r.
IdentityCheck check_cauchy_binet_det(const Q& q, const Q& p, const Q& r);
IdentityCheck check_cauchy_binet_perm(const Q& q, const Q& p, const Q& r);
// 2 x 2 scaled determinant and permanent laws under row and column swaps.
std::vector<IdentityCheck> check_swap_laws_2x2(const Q& q, const Q& p);
// S M1 M2 S~ = M1 M2 S~ and A M1 M2 A~ = A M1 M2 for the 2 x 2 (q, p) universal matrix.
IdentityCheck check_absorption(const Q& q, const Q& p);
// Min_{S~(2)} = (Min_{S~(1)} x Min_{S~(1)}) S~(2).
IdentityCheck check_concatenation(const Q& q, const Q& p);
// A'_(k) = G_[k] A_(k) for the closed-form q-antisymmetrizer and the Hecke A-operator.
IdentityCheck check_hecke_transport(const Q& q, int n, int k);
// Min^{A'} = G Min^{A} and the closed-form minor entries, k = 2, modulo the (q^{[n]}, p)-Manin ideal.
IdentityCheck check_minor_transport(const Q& q, const Q& p, int n);
// Sum over S_k of q^{-2 inv} = q^{-k(k-1)/2} k_q!.
IdentityCheck check_inversion_generating_function(const Q& q, int k);

}  // namespace manin

#endif  // MANIN_MINORS_HPP
