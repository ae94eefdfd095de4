#include "manin/matrix.hpp"

namespace manin {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Q>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows[0].size();
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Q> QMatrix::row(std::size_t i) const {
  return std::vector<Q>(a_.begin() + static_cast<long>(i * c_),
                        a_.begin() + static_cast<long>((i + 1) * c_));
}

void QMatrix::append_row(const std::vector<Q>& row) {
  if (row.size() != c_) throw InputError("row length mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++r_;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

Q QMatrix::trace() const {
  Q t(0);
  for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
  return t;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (r_ != o.r_ || c_ != o.c_) throw InputError("shape mismatch in addition");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (r_ != o.r_ || c_ != o.c_) throw InputError("shape mismatch in subtraction");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

QMatrix& QMatrix::operator*=(const Q& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
QMatrix operator*(const Q& s, QMatrix a) { return a *= s; }

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("shape mismatch in product");
  QMatrix c(a.rows(), b.cols());
  std::vector<std::vector<std::pair<std::size_t, const Q*>>> brows(b.rows());
  for (std::size_t k = 0; k < b.rows(); ++k)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (sgn(b(k, j)) != 0) brows[k].emplace_back(j, &b(k, j));
  Q t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Q& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (const auto& [j, y] : brows[k]) {
        mpq_mul(t.get_mpq_t(), x.get_mpq_t(), y->get_mpq_t());
        c(i, j) += t;
      }
    }
  return c;
}

QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (sgn(b(k, l)) != 0) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return c;
}

QMatrix hstack(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw InputError("row count mismatch in hstack");
  QMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

QMatrix vstack(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) throw InputError("column count mismatch in vstack");
  QMatrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

RrefResult rref(const QMatrix& m) {
  RrefResult res{m, 0, {}};
  QMatrix& a = res.form;
  const std::size_t R = a.rows(), C = a.cols();
  std::size_t r = 0;
  Q t;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && sgn(a(p, c)) == 0) ++p;
    if (p == R) continue;
    if (p != r)
      for (std::size_t j = c; j < C; ++j) swap(a(p, j), a(r, j));
    Q inv = 1 / a(r, c);
    for (std::size_t j = c; j < C; ++j)
      if (sgn(a(r, j)) != 0) a(r, j) *= inv;
    std::vector<std::size_t> nz;
    for (std::size_t j = c; j < C; ++j)
      if (sgn(a(r, j)) != 0) nz.push_back(j);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      Q f = a(i, c);
      for (std::size_t j : nz) {
        mpq_mul(t.get_mpq_t(), f.get_mpq_t(), a(r, j).get_mpq_t());
        a(i, j) -= t;
      }
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const QMatrix& m) { return rref(m).rank; }

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (!m.square()) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return QMatrix(0, 0);
  RrefResult r = rref(hstack(m, QMatrix::identity(n)));
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.form(i, n + j);
  return inv;
}

Subspace Subspace::span(const QMatrix& rows) {
  RrefResult r = rref(rows);
  Subspace s(rows.cols());
  for (std::size_t i = 0; i < r.rank; ++i) s.basis_.append_row(r.form.row(i));
  return s;
}

bool Subspace::contains(const std::vector<Q>& v) const {
  if (v.size() != ambient_) throw InputError("ambient dimension mismatch");
  QMatrix m = basis_;
  m.append_row(v);
  return rank(m) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InputError("ambient dimension mismatch");
  return rank(vstack(basis_, other.basis_)) == dim();
}

Subspace kernel(const QMatrix& m) {
  RrefResult r = rref(m);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  QMatrix k(0, C);
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Q> v(C);
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.form(i, f);
    k.append_row(v);
  }
  return Subspace::span(k);
}

Subspace left_kernel(const QMatrix& m) { return kernel(m.transpose()); }
Subspace row_space(const QMatrix& m) { return Subspace::span(m); }
Subspace column_space(const QMatrix& m) { return Subspace::span(m.transpose()); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw InputError("ambient dimension mismatch");
  return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw InputError("ambient dimension mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient());
  QMatrix neg = b.basis();
  neg *= Q(-1);
  Subspace k = kernel(hstack(a.basis().transpose(), neg.transpose()));
  QMatrix coeffs(k.dim(), a.dim());
  for (std::size_t i = 0; i < k.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) coeffs(i, j) = k.basis()(i, j);
  return Subspace::span(coeffs * a.basis());
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw InputError("ambient dimension mismatch");
  return a.basis() == b.basis();
}

}  // namespace manin
