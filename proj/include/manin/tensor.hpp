#ifndef MANIN_TENSOR_HPP
#define MANIN_TENSOR_HPP

#include <cstddef>
#include <vector>

#include "manin/matrix.hpp"
#include "manin/perm.hpp"

namespace manin {

// Operator on tensor powers; rows are multi-indices over n, columns over m.
struct TensorOperator {
  int n = 0;
  int m = 0;
  int k = 0;
  QMatrix mat;
};

std::size_t ipow(std::size_t n, int k);
// Digits are 0-based, leftmost most significant.
std::vector<int> decode_index(std::size_t idx, int n, int k);
std::size_t encode_index(const std::vector<int>& digits, int n);
std::vector<std::vector<int>> all_multi_indices(int n, int k);

QMatrix swap_operator(int n);
// Identity outside legs [a, a+ell-1] (1-based), op on them.
QMatrix embed(const QMatrix& op, int n, int ell, int k, int a);
// Two-leg operator placed on legs a and b (any distinct legs, 1-based).
QMatrix embed_legs(const QMatrix& op, int n, int k, int a, int b);
// rho^{+/-}(p) = product of (+/-P)^{(a,a+1)} along a reduced word.
QMatrix perm_rep(const Perm& p, int n, int sign);
// (p^{(x)k}) e_{i1..ik} = e_{p(i1)..p(ik)}.
QMatrix tensor_power_of_perm(const Perm& p, int k);

}  // namespace manin

#endif  // MANIN_TENSOR_HPP
