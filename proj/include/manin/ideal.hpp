#ifndef MANIN_IDEAL_HPP
#define MANIN_IDEAL_HPP

#include <vector>

#include "manin/ncpoly.hpp"
#include "manin/sparse.hpp"

namespace manin {

// Cap on g^d for materialized slices; MANIN_BUDGET overrides the default 20736.
std::size_t size_budget();
void check_budget(std::size_t g, int d);

struct IdealSlice {
  std::size_t g = 0;
  int d = 0;
  SparseEchelon basis;
};

// Relations are vectors over the g^2 degree-2 words.
IdealSlice build_slice(const std::vector<SparseVec>& relations, std::size_t g, int d);
IdealSlice build_slice(const Subspace& relations, std::size_t g, int d);
IdealSlice build_slice(const std::vector<NCPoly>& relations, std::size_t g, int d);

bool reduces_to_zero(const NCPoly& p, const IdealSlice& slice);
// Number of words outside the slice.
std::size_t quotient_dimension(const IdealSlice& slice);

std::vector<SparseVec> relation_vectors(const std::vector<NCPoly>& relations, std::size_t g);
std::vector<SparseVec> relation_vectors(const Subspace& relations);
Subspace relation_subspace(const std::vector<NCPoly>& relations, std::size_t g);

}  // namespace manin

#endif  // MANIN_IDEAL_HPP
