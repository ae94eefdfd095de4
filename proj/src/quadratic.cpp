#include "manin/quadratic.hpp"

#include "manin/tensor.hpp"

namespace manin {

Variant parse_variant(const std::string& s) {
  if (s == "X") return Variant::X;
  if (s == "Xi") return Variant::Xi;
  if (s == "Xstar") return Variant::Xstar;
  if (s == "Xistar") return Variant::Xistar;
  throw InputError("unknown variant '" + s + "'");
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::X: return "X";
    case Variant::Xi: return "Xi";
    case Variant::Xstar: return "Xstar";
    case Variant::Xistar: return "Xistar";
  }
  return "X";
}

QMatrix presenting_idempotent(const QuadAlgebra& alg) {
  const QMatrix one = QMatrix::identity(alg.e.rows());
  switch (alg.variant) {
    case Variant::X: return alg.e;
    case Variant::Xi: return one - alg.e.transpose();
    case Variant::Xstar: return alg.e.transpose();
    case Variant::Xistar: return one - alg.e;
  }
  return alg.e;
}

Subspace relation_space(const QuadAlgebra& alg) { return row_space(presenting_idempotent(alg)); }

IdealSlice graded_slice(const QuadAlgebra& alg, int k) {
  return build_slice(relation_space(alg), static_cast<std::size_t>(alg.n), k);
}

std::size_t graded_dimension(const QuadAlgebra& alg, int k) {
  if (k < 0) throw InputError("negative degree");
  if (k == 0) return 1;
  if (k == 1) return static_cast<std::size_t>(alg.n);
  return quotient_dimension(graded_slice(alg, k));
}

std::vector<std::size_t> dimension_table(const QuadAlgebra& alg, int max_degree) {
  std::vector<std::size_t> out;
  if (max_degree < 0) throw InputError("negative degree");
  const std::vector<SparseVec> rels = relation_vectors(relation_space(alg));
  for (int k = 0; k <= max_degree; ++k) {
    if (k < 2) {
      out.push_back(k == 0 ? 1 : static_cast<std::size_t>(alg.n));
    } else {
      out.push_back(quotient_dimension(build_slice(rels, static_cast<std::size_t>(alg.n), k)));
    }
  }
  return out;
}

SparseVec normal_form(const SparseVec& v, const IdealSlice& slice) { return slice.basis.reduce(v); }

Subspace joint_kernel(const QMatrix& e, int n, int k) {
  check_budget(static_cast<std::size_t>(n), k);
  const std::size_t D = ipow(static_cast<std::size_t>(n), k);
  if (k < 2) return kernel(QMatrix(0, D));
  QMatrix stack(0, D);
  for (int a = 1; a < k; ++a) stack = vstack(stack, embed(e, n, 2, k, a));
  return kernel(stack);
}

Subspace joint_left_kernel(const QMatrix& e, int n, int k) {
  return joint_kernel(e.transpose(), n, k);
}

ComponentSubspaces component_subspaces(const QMatrix& e, int n, int k) {
  const QMatrix s = QMatrix::identity(e.rows()) - e;
  return {joint_kernel(e, n, k), joint_left_kernel(e, n, k), joint_kernel(s, n, k), joint_left_kernel(s, n, k)};
}

}  // namespace manin
