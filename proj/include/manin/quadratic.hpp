#ifndef MANIN_QUADRATIC_HPP
#define MANIN_QUADRATIC_HPP

#include <string>
#include <vector>

#include "manin/ideal.hpp"
#include "manin/matrix.hpp"

namespace manin {

enum class Variant { X, Xi, Xstar, Xistar };

Variant parse_variant(const std::string& s);
std::string variant_name(Variant v);

struct QuadAlgebra {
  QMatrix e;
  int n = 0;
  Variant variant = Variant::X;
};

// Idempotent whose row space presents the algebra as an X-type algebra.
QMatrix presenting_idempotent(const QuadAlgebra& alg);
Subspace relation_space(const QuadAlgebra& alg);
IdealSlice graded_slice(const QuadAlgebra& alg, int k);
std::size_t graded_dimension(const QuadAlgebra& alg, int k);
std::vector<std::size_t> dimension_table(const QuadAlgebra& alg, int max_degree);
// Canonical remainder of a degree-k element (coordinates over n^k words).
SparseVec normal_form(const SparseVec& v, const IdealSlice& slice);

struct ComponentSubspaces {
  Subspace v, vbar, w, wbar;
};

// Intersection of kernels (columns) and left kernels (rows) of the embedded operator.
Subspace joint_kernel(const QMatrix& e, int n, int k);
Subspace joint_left_kernel(const QMatrix& e, int n, int k);
ComponentSubspaces component_subspaces(const QMatrix& e, int n, int k);

}  // namespace manin

#endif  // MANIN_QUADRATIC_HPP
