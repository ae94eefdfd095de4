#include "manin/tensor.hpp"

namespace manin {

std::size_t ipow(std::size_t n, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) r *= n;
  return r;
}

std::vector<int> decode_index(std::size_t idx, int n, int k) {
  std::vector<int> d(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    d[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::size_t>(n));
    idx /= static_cast<std::size_t>(n);
  }
  return d;
}

std::size_t encode_index(const std::vector<int>& digits, int n) {
  std::size_t idx = 0;
  for (int d : digits) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(d);
  return idx;
}

std::vector<std::vector<int>> all_multi_indices(int n, int k) {
  std::vector<std::vector<int>> out;
  const std::size_t N = ipow(static_cast<std::size_t>(n), k);
  for (std::size_t i = 0; i < N; ++i) out.push_back(decode_index(i, n, k));
  return out;
}

QMatrix swap_operator(int n) {
  const auto N = static_cast<std::size_t>(n);
  QMatrix p(N * N, N * N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) p(j * N + i, i * N + j) = 1;
  return p;
}

QMatrix embed(const QMatrix& op, int n, int ell, int k, int a) {
  if (a < 1 || a + ell - 1 > k) throw InputError("leg out of range");
  const std::size_t sz = ipow(static_cast<std::size_t>(n), ell);
  if (op.rows() != sz || op.cols() != sz) throw InputError("operator does not match local dimension");
  QMatrix left = QMatrix::identity(ipow(static_cast<std::size_t>(n), a - 1));
  QMatrix right = QMatrix::identity(ipow(static_cast<std::size_t>(n), k - a - ell + 1));
  return kron(kron(left, op), right);
}

QMatrix embed_legs(const QMatrix& op, int n, int k, int a, int b) {
  if (a < 1 || b < 1 || a > k || b > k || a == b) throw InputError("leg out of range");
  const auto N = static_cast<std::size_t>(n);
  if (op.rows() != N * N || op.cols() != N * N) throw InputError("operator does not match local dimension");
  const std::size_t D = ipow(N, k);
  QMatrix out(D, D);
  const auto la = static_cast<std::size_t>(a - 1), lb = static_cast<std::size_t>(b - 1);
  for (std::size_t col = 0; col < D; ++col) {
    std::vector<int> d = decode_index(col, n, k);
    const std::size_t oc = static_cast<std::size_t>(d[la]) * N + static_cast<std::size_t>(d[lb]);
    for (std::size_t orow = 0; orow < N * N; ++orow) {
      const Q& v = op(orow, oc);
      if (sgn(v) == 0) continue;
      std::vector<int> e = d;
      e[la] = static_cast<int>(orow / N);
      e[lb] = static_cast<int>(orow % N);
      out(encode_index(e, n), col) = v;
    }
  }
  return out;
}

QMatrix perm_rep(const Perm& p, int n, int sign) {
  const int k = static_cast<int>(p.size());
  const std::size_t D = ipow(static_cast<std::size_t>(n), k);
  std::vector<int> word = reduced_word(p);
  const int s = (sign < 0 && word.size() % 2) ? -1 : 1;
  QMatrix out(D, D);
  for (std::size_t col = 0; col < D; ++col) {
    std::vector<int> d = decode_index(col, n, k);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      auto a = static_cast<std::size_t>(*it - 1);
      std::swap(d[a], d[a + 1]);
    }
    out(encode_index(d, n), col) = s;
  }
  return out;
}

QMatrix tensor_power_of_perm(const Perm& p, int k) {
  const int n = static_cast<int>(p.size());
  const std::size_t D = ipow(static_cast<std::size_t>(n), k);
  QMatrix out(D, D);
  for (std::size_t col = 0; col < D; ++col) {
    std::vector<int> d = decode_index(col, n, k);
    for (int& x : d) x = p[static_cast<std::size_t>(x)] - 1;
    out(encode_index(d, n), col) = 1;
  }
  return out;
}

}  // namespace manin
