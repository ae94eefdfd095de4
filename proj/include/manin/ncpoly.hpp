#ifndef MANIN_NCPOLY_HPP
#define MANIN_NCPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "manin/matrix.hpp"
#include "manin/sparse.hpp"

namespace manin {

struct Generator {
  std::string sym;
  std::vector<int> idx;

  std::string str() const;
  friend bool operator<(const Generator& a, const Generator& b) {
    return a.sym != b.sym ? a.sym < b.sym : a.idx < b.idx;
  }
  friend bool operator==(const Generator& a, const Generator& b) {
    return a.sym == b.sym && a.idx == b.idx;
  }
};

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Generator> gens);

  // Generators sym[i,j] for i<=rows, j<=cols in row-major order.
  static Alphabet matrix(const std::string& sym, int rows, int cols);

  std::size_t size() const { return gens_.size(); }
  const Generator& at(std::size_t id) const { return gens_.at(id); }
  const std::vector<Generator>& generators() const { return gens_; }
  int find(const Generator& g) const;
  int add(const Generator& g);

 private:
  std::vector<Generator> gens_;
  std::map<Generator, int> ids_;
};

using Word = std::vector<std::uint16_t>;

struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

class NCPoly {
 public:
  using Terms = std::map<Word, Q, DegLex>;

  NCPoly() = default;
  static NCPoly constant(const Q& c);
  static NCPoly gen(std::uint16_t id);
  static NCPoly word(const Word& w, const Q& c = Q(1));

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  // -1 if zero or non-homogeneous.
  int homogeneous_degree() const;

  void add_term(const Word& w, const Q& c);
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Q& s);

  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

 private:
  Terms t_;
};

NCPoly operator+(NCPoly a, const NCPoly& b);
NCPoly operator-(NCPoly a, const NCPoly& b);
NCPoly operator*(const NCPoly& a, const NCPoly& b);
NCPoly operator*(const Q& s, NCPoly a);

std::string to_string(const NCPoly& p, const Alphabet& alpha);
// Unknown generators are added to alpha when allow_new is set.
NCPoly parse_ncpoly(const std::string& text, Alphabet& alpha, bool allow_new = true);
NCPoly remap(const NCPoly& p, const std::vector<std::uint16_t>& id_map);

std::uint32_t word_index(const Word& w, std::size_t g);
Word word_from_index(std::uint32_t idx, std::size_t g, int d);
// Coordinates over lexicographically ordered degree-d words; throws on non-homogeneous input.
SparseVec degree_component_vector(const NCPoly& p, int d, std::size_t g);
std::vector<Q> degree_component_dense(const NCPoly& p, int d, std::size_t g);
NCPoly poly_from_vector(const SparseVec& v, int d, std::size_t g);

class NCMatrix {
 public:
  NCMatrix() = default;
  NCMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static NCMatrix generic(const Alphabet& alpha, const std::string& sym, int rows, int cols);
  static NCMatrix scalar(const QMatrix& m);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  NCPoly& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const NCPoly& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  NCMatrix submatrix(const std::vector<int>& I, const std::vector<int>& J) const;
  bool is_zero() const;

  friend bool operator==(const NCMatrix& a, const NCMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

 private:
  std::size_t r_ = 0;
  std::size_t c_ = 0;
  std::vector<NCPoly> a_;
};

NCMatrix operator*(const NCMatrix& a, const NCMatrix& b);
NCMatrix operator*(const QMatrix& a, const NCMatrix& b);
NCMatrix operator*(const NCMatrix& a, const QMatrix& b);
NCMatrix operator-(const NCMatrix& a, const NCMatrix& b);

// Entry (I,J) = M^{i1}_{j1} ... M^{ik}_{jk}.
NCMatrix compose_chain(const NCMatrix& m, int k);

}  // namespace manin

#endif  // MANIN_NCPOLY_HPP
