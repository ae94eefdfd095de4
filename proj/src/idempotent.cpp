#include "manin/idempotent.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "manin/tensor.hpp"

namespace manin {

namespace {

std::size_t pair_index(int i, int j, int n) {
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
}

QMatrix half_one_minus(const QMatrix& p) {
  QMatrix a = QMatrix::identity(p.rows()) - p;
  a *= Q(1, 2);
  return a;
}

QMatrix half_one_plus(const QMatrix& p) {
  QMatrix a = QMatrix::identity(p.rows()) + p;
  a *= Q(1, 2);
  return a;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"A_n", "S_n", "P_n", "Aq", "Pq", "Aqhat", "Atilde_qhat",
                                                 "RhatPlus", "RhatMinus", "B_n", "Btilde_n", "FourParam", "Lie", "Custom"};
  return names;
}

bool is_parameter_matrix(const QMatrix& q) {
  if (!q.square()) return false;
  for (std::size_t i = 0; i < q.rows(); ++i) {
    if (q(i, i) != 1) return false;
    for (std::size_t j = 0; j < q.cols(); ++j)
      if (sgn(q(i, j)) == 0 || q(i, j) * q(j, i) != 1) return false;
  }
  return true;
}

QMatrix standard_params(const Q& q, int n) {
  QMatrix r(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = i < j ? q : (i > j ? 1 / q : Q(1));
  return r;
}

QMatrix conjugate_params(const QMatrix& q, const Perm& s) {
  Perm si = perm_inverse(s);
  QMatrix r(q.rows(), q.cols());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j)
      r(i, j) = q(static_cast<std::size_t>(si[i] - 1), static_cast<std::size_t>(si[j] - 1));
  return r;
}

QMatrix op_P(int n) { return swap_operator(n); }
QMatrix op_A(int n) { return half_one_minus(op_P(n)); }
QMatrix op_S(int n) { return half_one_plus(op_P(n)); }

QMatrix op_Pqhat(const QMatrix& qhat) {
  const int n = static_cast<int>(qhat.rows());
  QMatrix p(pair_index(n, 0, n), pair_index(n, 0, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p(pair_index(j, i, n), pair_index(i, j, n)) = qhat(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return p;
}

QMatrix op_Aqhat(const QMatrix& qhat) { return half_one_minus(op_Pqhat(qhat)); }

QMatrix op_Ptilde_qhat(const QMatrix& qhat) {
  QMatrix p = op_Pqhat(qhat);
  const int n = static_cast<int>(qhat.rows());
  for (int i = 0; i < n; ++i) p(pair_index(i, i, n), pair_index(i, i, n)) = -1;
  return p;
}

QMatrix op_Atilde_qhat(const QMatrix& qhat) { return half_one_minus(op_Ptilde_qhat(qhat)); }

QMatrix op_Rhat(const Q& q, int n) {
  QMatrix r(pair_index(n, 0, n), pair_index(n, 0, n));
  const Q qi = 1 / q;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        r(pair_index(i, i, n), pair_index(i, i, n)) = qi;
      } else {
        r(pair_index(i, j, n), pair_index(j, i, n)) = 1;
        if (i < j) r(pair_index(i, j, n), pair_index(i, j, n)) = qi - q;
      }
    }
  return r;
}

QMatrix op_R(const Q& q, int n) { return op_P(n) * op_Rhat(q, n); }

QMatrix op_Rhat_plus(const Q& q, int n) {
  QMatrix r = op_Rhat(q, n) + q * QMatrix::identity(pair_index(n, 0, n));
  r *= 1 / (q + 1 / q);
  return r;
}

QMatrix op_Rhat_minus(const Q& q, int n) {
  QMatrix r = (1 / q) * QMatrix::identity(pair_index(n, 0, n)) - op_Rhat(q, n);
  r *= 1 / (q + 1 / q);
  return r;
}

QMatrix op_Q(int n) {
  QMatrix m(pair_index(n, 0, n), pair_index(n, 0, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(pair_index(i, n - 1 - i, n), pair_index(j, n - 1 - j, n)) = 1;
  return m;
}

QMatrix op_Qtilde(int n) {
  require(n % 2 == 0, "Qtilde needs even n");
  const int r = n / 2;
  QMatrix m(pair_index(n, 0, n), pair_index(n, 0, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(pair_index(i, n - 1 - i, n), pair_index(j, n - 1 - j, n)) = (i < r ? 1 : -1) * (j < r ? 1 : -1);
  return m;
}

QMatrix op_B(int n) { return op_A(n) + Q(1, n) * op_Q(n); }
QMatrix op_Btilde(int n) { return op_A(n) - Q(1, n) * op_Qtilde(n); }

QMatrix op_P_fourparam(const Q& a, const Q& b, const Q& c, const Q& kappa) {
  // a_{12}=a, a_{23}=b, a_{31}=c, a_{ji}=a_{ij}^{-1}, a_{ii}=1.
  Q aa[3][3];
  for (auto& row : aa)
    for (auto& x : row) x = 1;
  aa[0][1] = a;
  aa[1][2] = b;
  aa[2][0] = c;
  aa[1][0] = 1 / a;
  aa[2][1] = 1 / b;
  aa[0][2] = 1 / c;
  auto eps = [](int i, int j, int k) -> int {
    if (i == j || j == k || i == k) return 0;
    return ((i == 0 && j == 1) || (i == 1 && j == 2) || (i == 2 && j == 0)) ? 1 : -1;
  };
  QMatrix p(9, 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      p(pair_index(i, j, 3), pair_index(j, i, 3)) += aa[j][i] * aa[j][i];
      for (int k = 0; k < 3; ++k) {
        int e = eps(i, j, k);
        if (e) p(pair_index(i, j, 3), pair_index(k, k, 3)) += kappa * aa[j][i] * e;
      }
    }
  return p;
}

QMatrix op_A_fourparam(const Q& a, const Q& b, const Q& c, const Q& kappa) {
  return half_one_minus(op_P_fourparam(a, b, c, kappa));
}

QMatrix op_C_lie(const std::vector<StructureConstant>& sc, int n) {
  // Coefficients C^{ij}_k for i,j,k < n; index n is the central generator.
  std::vector<Q> C(static_cast<std::size_t>(n * n * n));
  auto at = [&](int i, int j, int k) -> Q& { return C[static_cast<std::size_t>((i * n + j) * n + k)]; };
  for (const auto& s : sc) at(s.i - 1, s.j - 1, s.k - 1) += s.value;
  QMatrix m(pair_index(n, 0, n), pair_index(n, 0, n));
  const int last = n - 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Q v = 0;
          if (l == last) v += at(i, j, k);
          if (k == last) v += at(i, j, l);
          if (sgn(v) != 0) m(pair_index(i, j, n), pair_index(k, l, n)) = v;
        }
  return m;
}

QMatrix op_A_lie(const std::vector<StructureConstant>& sc, int n) {
  return op_A(n) - Q(1, 4) * op_C_lie(sc, n);
}

void validate(const IdempotentSpec& s) {
  const auto& names = family_names();
  require(std::find(names.begin(), names.end(), s.family) != names.end(), "unknown family '" + s.family + "'");
  require(s.n >= 1 && s.n <= 16, "n must be in 1..16");
  const std::string& f = s.family;
  if (f == "Aq" || f == "Pq") require(sgn(s.q) != 0, "q must be nonzero");
  if (f == "RhatPlus" || f == "RhatMinus")
    require(sgn(s.q) != 0 && s.q != 1 && s.q != -1, "Hecke parameter q must avoid 0, 1, -1");
  if (f == "Aqhat" || f == "Atilde_qhat") {
    require(s.qhat.rows() == static_cast<std::size_t>(s.n), "qhat must be n x n");
    require(is_parameter_matrix(s.qhat), "qhat is not a parameter matrix");
  }
  if (f == "Btilde_n") require(s.n % 2 == 0, "Btilde_n needs even n");
  if (f == "FourParam") {
    require(s.n == 3, "FourParam needs n = 3");
    require(sgn(s.a) != 0 && sgn(s.b) != 0 && sgn(s.c) != 0, "a, b, c must be nonzero");
  }
  if (f == "Lie") {
    require(s.n >= 2, "Lie needs n >= 2");
    std::map<std::tuple<int, int, int>, Q> c;
    for (const auto& t : s.structure) {
      require(t.i >= 1 && t.j >= 1 && t.k >= 1 && t.i < s.n && t.j < s.n && t.k < s.n, "structure constant index out of range");
      c[{t.i, t.j, t.k}] += t.value;
    }
    for (const auto& [key, v] : c) {
      auto [i, j, k] = key;
      auto it = c.find({j, i, k});
      Q w = it == c.end() ? Q(0) : it->second;
      require(v == -w, "structure constants are not antisymmetric");
    }
  }
  if (f == "Custom") {
    const std::size_t N = static_cast<std::size_t>(s.n) * static_cast<std::size_t>(s.n);
    require(s.custom.rows() == N && s.custom.cols() == N, "custom matrix must be n^2 x n^2");
  }
}

QMatrix build(const IdempotentSpec& s) {
  validate(s);
  const std::string& f = s.family;
  const int n = s.n;
  if (f == "A_n") return op_A(n);
  if (f == "S_n") return op_S(n);
  if (f == "P_n") return op_P(n);
  if (f == "Aq") return op_Aqhat(standard_params(s.q, n));
  if (f == "Pq") return op_Pqhat(standard_params(s.q, n));
  if (f == "Aqhat") return op_Aqhat(s.qhat);
  if (f == "Atilde_qhat") return op_Atilde_qhat(s.qhat);
  if (f == "RhatPlus") return op_Rhat_plus(s.q, n);
  if (f == "RhatMinus") return op_Rhat_minus(s.q, n);
  if (f == "B_n") return op_B(n);
  if (f == "Btilde_n") return op_Btilde(n);
  if (f == "FourParam") return op_A_fourparam(s.a, s.b, s.c, s.kappa);
  if (f == "Lie") return op_A_lie(s.structure, n);
  return s.custom;
}

bool is_idempotent(const QMatrix& e) { return e.square() && e * e == e; }

QMatrix make_idempotent(const QMatrix& relations) {
  RrefResult r = rref(relations);
  const std::size_t N = relations.cols();
  QMatrix e(N, N);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < N; ++j) e(r.pivots[i], j) = r.form(i, j);
  return e;
}

bool left_equivalent(const QMatrix& e1, const QMatrix& e2) {
  return subspace_equal(row_space(e1), row_space(e2));
}

bool right_equivalent(const QMatrix& e1, const QMatrix& e2) {
  return subspace_equal(column_space(e1), column_space(e2));
}

}  // namespace manin
