#ifndef MANIN_MANIN_HPP
#define MANIN_MANIN_HPP

#include <vector>

#include "manin/ideal.hpp"
#include "manin/ncpoly.hpp"
#include "manin/perm.hpp"

namespace manin {

struct ManinPair {
  QMatrix a;  // idempotent on n^2
  QMatrix b;  // idempotent on m^2
  int n = 0;
  int m = 0;
};

// Relation space of U_{A,B} over degree-2 words in M^i_k (generator id (i-1)*m + (k-1)).
Subspace universal_relations(const ManinPair& pair);
std::vector<NCPoly> universal_relation_polys(const ManinPair& pair);

// Entries of A M^{(1)} M^{(2)} (1 - B).
NCMatrix manin_defect(const ManinPair& pair, const NCMatrix& m);
// Entries of M must be homogeneous of one common degree; relations are degree-2 over g generators.
bool is_manin(const ManinPair& pair, const NCMatrix& m, const std::vector<SparseVec>& relations, std::size_t g);
bool is_manin(const ManinPair& pair, const NCMatrix& m, const Subspace& relations);

struct ProductCheck {
  bool commute = false;
  bool manin = false;
};
// Checks [M,N] = 0 in the ambient ideal, then that MN is (A,C)-Manin.
ProductCheck product_is_manin(const ManinPair& ab, const ManinPair& bc, const NCMatrix& m, const NCMatrix& n,
                              const std::vector<SparseVec>& relations, std::size_t g);

// Span of entries of an NCMatrix with degree-2 entries over g generators.
Subspace entry_span(const NCMatrix& m, std::size_t g);
// Entry ((i,j),(k,l)) = L^j_l L^i_k.
NCMatrix compose_chain_reversed(const NCMatrix& l);

// Entries of R L^{(1)} L^{(2)} - L^{(2)} L^{(1)} R span the same space as the entries of
// A L^{(1)} L^{(2)} (1 - A') and (1 - A) L^{(2)} L^{(1)} A', with A = A^q_n and A' = A^q_m.
bool rll_relations_equal_manin(int n, int m, const Q& q);
// Manin relations of M and of its transpose together span all commutators.
bool manin_and_transpose_span_commutators(int n, int m);
// Manin-relations-only span versus the commutator span.
bool manin_span_equals_commutators(int n, int m);
Subspace commutator_span(int n, int m);

QMatrix perm_matrix(const Perm& s);
QMatrix conjugate_op(const QMatrix& e, const Perm& s);
ManinPair transport(const ManinPair& pair, const Perm& sigma, const Perm& tau);
// sigma M tau^{-1}.
NCMatrix permute_matrix(const NCMatrix& m, const Perm& sigma, const Perm& tau);

}  // namespace manin

#endif  // MANIN_MANIN_HPP
