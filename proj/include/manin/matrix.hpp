#ifndef MANIN_MATRIX_HPP
#define MANIN_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "manin/rational.hpp"

namespace manin {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<std::vector<Q>>& rows, std::size_t cols = 0);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }

  Q& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Q& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  std::vector<Q> row(std::size_t i) const;
  void append_row(const std::vector<Q>& row);

  bool is_zero() const;
  Q trace() const;
  QMatrix transpose() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(const Q& s);

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

 private:
  std::size_t r_ = 0;
  std::size_t c_ = 0;
  std::vector<Q> a_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Q& s, QMatrix a);
QMatrix kron(const QMatrix& a, const QMatrix& b);
QMatrix hstack(const QMatrix& a, const QMatrix& b);
QMatrix vstack(const QMatrix& a, const QMatrix& b);

struct RrefResult {
  QMatrix form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);
std::optional<QMatrix> inverse(const QMatrix& m);

// Row space of `basis` in reduced echelon form, zero rows dropped.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(const QMatrix& rows);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const QMatrix& basis() const { return basis_; }

  bool contains(const std::vector<Q>& v) const;
  bool contains(const Subspace& other) const;

 private:
  std::size_t ambient_ = 0;
  QMatrix basis_;
};

Subspace kernel(const QMatrix& m);
Subspace left_kernel(const QMatrix& m);
Subspace row_space(const QMatrix& m);
Subspace column_space(const QMatrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
// Throws InputError on ambient mismatch.
bool subspace_equal(const Subspace& a, const Subspace& b);

}  // namespace manin

#endif  // MANIN_MATRIX_HPP
