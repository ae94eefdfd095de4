#include "manin/manin.hpp"

#include "manin/idempotent.hpp"
#include "manin/tensor.hpp"

namespace manin {

namespace {

void check_pair(const ManinPair& p) {
  const auto n2 = static_cast<std::size_t>(p.n * p.n), m2 = static_cast<std::size_t>(p.m * p.m);
  if (p.a.rows() != n2 || p.a.cols() != n2 || p.b.rows() != m2 || p.b.cols() != m2)
    throw InputError("pair operators do not match matrix shape");
}

int uniform_degree(const NCMatrix& m) {
  int d = -2;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const NCPoly& p = m(i, j);
      if (p.is_zero()) continue;
      int e = p.homogeneous_degree();
      if (e < 0 || (d != -2 && e != d)) throw InputError("matrix entries must be homogeneous of one common degree");
      d = e;
    }
  return d == -2 ? 1 : d;
}

}  // namespace

Subspace universal_relations(const ManinPair& pair) {
  check_pair(pair);
  const int n = pair.n, m = pair.m;
  const std::size_t g = static_cast<std::size_t>(n * m);
  const Subspace left = row_space(pair.a);
  const Subspace right = column_space(QMatrix::identity(pair.b.rows()) - pair.b);
  QMatrix rel(0, g * g);
  for (std::size_t al = 0; al < left.dim(); ++al)
    for (std::size_t be = 0; be < right.dim(); ++be) {
      std::vector<Q> v(g * g);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Q& x = left.basis()(al, static_cast<std::size_t>(i * n + j));
          if (sgn(x) == 0) continue;
          for (int k = 0; k < m; ++k)
            for (int l = 0; l < m; ++l) {
              const Q& y = right.basis()(be, static_cast<std::size_t>(k * m + l));
              if (sgn(y) == 0) continue;
              const std::size_t w = static_cast<std::size_t>(i * m + k) * g + static_cast<std::size_t>(j * m + l);
              v[w] += x * y;
            }
        }
      rel.append_row(v);
    }
  return Subspace::span(rel);
}

std::vector<NCPoly> universal_relation_polys(const ManinPair& pair) {
  Subspace s = universal_relations(pair);
  std::vector<NCPoly> out;
  const auto g = static_cast<std::size_t>(pair.n * pair.m);
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(poly_from_vector(sparse_from_dense(s.basis().row(i)), 2, g));
  return out;
}

NCMatrix manin_defect(const ManinPair& pair, const NCMatrix& m) {
  check_pair(pair);
  if (m.rows() != static_cast<std::size_t>(pair.n) || m.cols() != static_cast<std::size_t>(pair.m))
    throw InputError("matrix shape does not match pair");
  const QMatrix s = QMatrix::identity(pair.b.rows()) - pair.b;
  return (pair.a * compose_chain(m, 2)) * s;
}

bool is_manin(const ManinPair& pair, const NCMatrix& m, const std::vector<SparseVec>& relations, std::size_t g) {
  const int d = uniform_degree(m);
  NCMatrix def = manin_defect(pair, m);
  if (def.is_zero()) return true;
  IdealSlice slice = build_slice(relations, g, 2 * d);
  for (std::size_t i = 0; i < def.rows(); ++i)
    for (std::size_t j = 0; j < def.cols(); ++j)
      if (!reduces_to_zero(def(i, j), slice)) return false;
  return true;
}

bool is_manin(const ManinPair& pair, const NCMatrix& m, const Subspace& relations) {
  std::size_t g = 0;
  while (g * g < relations.ambient()) ++g;
  if (g * g != relations.ambient()) throw InputError("relation space is not over degree-2 words");
  return is_manin(pair, m, relation_vectors(relations), g);
}

ProductCheck product_is_manin(const ManinPair& ab, const ManinPair& bc, const NCMatrix& m, const NCMatrix& n,
                              const std::vector<SparseVec>& relations, std::size_t g) {
  ProductCheck r;
  const int dm = uniform_degree(m), dn = uniform_degree(n);
  IdealSlice slice = build_slice(relations, g, dm + dn);
  r.commute = true;
  for (std::size_t i = 0; i < m.rows() && r.commute; ++i)
    for (std::size_t j = 0; j < m.cols() && r.commute; ++j)
      for (std::size_t k = 0; k < n.rows() && r.commute; ++k)
        for (std::size_t l = 0; l < n.cols() && r.commute; ++l)
          if (!reduces_to_zero(m(i, j) * n(k, l) - n(k, l) * m(i, j), slice)) r.commute = false;
  ManinPair ac{ab.a, bc.b, ab.n, bc.m};
  r.manin = r.commute && is_manin(ac, m * n, relations, g);
  return r;
}

Subspace entry_span(const NCMatrix& m, std::size_t g) {
  QMatrix rows(0, g * g);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) rows.append_row(degree_component_dense(m(i, j), 2, g));
  return Subspace::span(rows);
}

NCMatrix compose_chain_reversed(const NCMatrix& l) {
  const int n = static_cast<int>(l.rows()), m = static_cast<int>(l.cols());
  NCMatrix out(l.rows() * l.rows(), l.cols() * l.cols());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        for (int q = 0; q < m; ++q)
          out(static_cast<std::size_t>(i * n + j), static_cast<std::size_t>(k * m + q)) =
              l(static_cast<std::size_t>(j), static_cast<std::size_t>(q)) * l(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
  return out;
}

bool rll_relations_equal_manin(int n, int m, const Q& q) {
  if (sgn(q) == 0 || q == 1 || q == -1) throw InputError("q must avoid 0, 1, -1");
  Alphabet alpha = Alphabet::matrix("L", n, m);
  NCMatrix L = NCMatrix::generic(alpha, "L", n, m);
  const std::size_t g = alpha.size();
  NCMatrix l12 = compose_chain(L, 2), l21 = compose_chain_reversed(L);
  NCMatrix rll = op_R(q, n) * l12 - l21 * op_R(q, m);
  const QMatrix an = op_Aqhat(standard_params(q, n)), am = op_Aqhat(standard_params(q, m));
  const QMatrix sn = QMatrix::identity(an.rows()) - an, sm = QMatrix::identity(am.rows()) - am;
  Subspace lhs = entry_span(rll, g);
  Subspace rhs = subspace_sum(entry_span((an * l12) * sm, g), entry_span((sn * l21) * am, g));
  return subspace_equal(lhs, rhs);
}

Subspace commutator_span(int n, int m) {
  const auto g = static_cast<std::uint16_t>(n * m);
  QMatrix rows(0, static_cast<std::size_t>(g) * g);
  for (std::uint16_t a = 0; a < g; ++a)
    for (std::uint16_t b = static_cast<std::uint16_t>(a + 1); b < g; ++b) {
      NCPoly c = NCPoly::word({a, b}) - NCPoly::word({b, a});
      rows.append_row(degree_component_dense(c, 2, g));
    }
  return Subspace::span(rows);
}

namespace {

Subspace manin_span(int n, int m) { return universal_relations({op_A(n), op_A(m), n, m}); }

Subspace transposed_manin_span(int n, int m) {
  Alphabet alpha = Alphabet::matrix("M", n, m);
  NCMatrix M = NCMatrix::generic(alpha, "M", n, m);
  NCMatrix Mt(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) Mt(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = M(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return entry_span(manin_defect({op_A(m), op_A(n), m, n}, Mt), alpha.size());
}

}  // namespace

bool manin_and_transpose_span_commutators(int n, int m) {
  return subspace_equal(subspace_sum(manin_span(n, m), transposed_manin_span(n, m)), commutator_span(n, m));
}

bool manin_span_equals_commutators(int n, int m) { return subspace_equal(manin_span(n, m), commutator_span(n, m)); }

QMatrix perm_matrix(const Perm& s) {
  QMatrix p(s.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) p(static_cast<std::size_t>(s[i] - 1), i) = 1;
  return p;
}

QMatrix conjugate_op(const QMatrix& e, const Perm& s) {
  QMatrix t = tensor_power_of_perm(s, 2);
  return (t * e) * t.transpose();
}

ManinPair transport(const ManinPair& pair, const Perm& sigma, const Perm& tau) {
  check_pair(pair);
  if (static_cast<int>(sigma.size()) != pair.n || static_cast<int>(tau.size()) != pair.m || !is_perm(sigma) || !is_perm(tau))
    throw InputError("permutation sizes do not match pair");
  return {conjugate_op(pair.a, sigma), conjugate_op(pair.b, tau), pair.n, pair.m};
}

NCMatrix permute_matrix(const NCMatrix& m, const Perm& sigma, const Perm& tau) {
  return (perm_matrix(sigma) * m) * perm_matrix(tau).transpose();
}

}  // namespace manin
