#ifndef MANIN_SPARSE_HPP
#define MANIN_SPARSE_HPP

#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "manin/matrix.hpp"

namespace manin {

// Sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<std::uint32_t, Q>>;

SparseVec sparse_from_dense(const std::vector<Q>& v);

// Semi-echelon basis: each stored row is normalized with its smallest index as pivot.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t ambient = 0) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }

  // Returns true if the vector enlarged the span.
  bool insert(const SparseVec& v);
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  bool contains(const SparseEchelon& other) const;
  std::vector<std::uint32_t> pivots() const;
  const std::unordered_map<std::uint32_t, SparseVec>& rows() const { return rows_; }

 private:
  void reduce_in_place(std::map<std::uint32_t, Q>& w, bool leading_only) const;

  std::size_t ambient_;
  std::unordered_map<std::uint32_t, SparseVec> rows_;
};

}  // namespace manin

#endif  // MANIN_SPARSE_HPP
