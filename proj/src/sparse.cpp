#include "manin/sparse.hpp"

#include <algorithm>

namespace manin {

SparseVec sparse_from_dense(const std::vector<Q>& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) s.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return s;
}

void SparseEchelon::reduce_in_place(std::map<std::uint32_t, Q>& w, bool leading_only) const {
  Q t;
  auto it = w.begin();
  while (it != w.end()) {
    auto r = rows_.find(it->first);
    if (r == rows_.end()) {
      if (leading_only) return;
      ++it;
      continue;
    }
    const std::uint32_t key = it->first;
    const Q c = it->second;
    for (const auto& [j, v] : r->second) {
      mpq_mul(t.get_mpq_t(), c.get_mpq_t(), v.get_mpq_t());
      auto f = w.try_emplace(j, 0).first;
      f->second -= t;
      if (sgn(f->second) == 0) w.erase(f);
    }
    it = w.upper_bound(key);
    if (leading_only) it = w.begin();
  }
}

bool SparseEchelon::insert(const SparseVec& v) {
  std::map<std::uint32_t, Q> w(v.begin(), v.end());
  for (auto it = w.begin(); it != w.end();) it = sgn(it->second) == 0 ? w.erase(it) : std::next(it);
  reduce_in_place(w, true);
  if (w.empty()) return false;
  const std::uint32_t p = w.begin()->first;
  const Q inv = 1 / w.begin()->second;
  SparseVec row;
  row.reserve(w.size());
  for (auto& [j, x] : w) row.emplace_back(j, x * inv);
  rows_.emplace(p, std::move(row));
  return true;
}

SparseVec SparseEchelon::reduce(const SparseVec& v) const {
  std::map<std::uint32_t, Q> w(v.begin(), v.end());
  for (auto it = w.begin(); it != w.end();) it = sgn(it->second) == 0 ? w.erase(it) : std::next(it);
  reduce_in_place(w, false);
  return SparseVec(w.begin(), w.end());
}

bool SparseEchelon::contains(const SparseEchelon& other) const {
  for (const auto& [p, row] : other.rows_)
    if (!contains(row)) return false;
  return true;
}

std::vector<std::uint32_t> SparseEchelon::pivots() const {
  std::vector<std::uint32_t> p;
  for (const auto& kv : rows_) p.push_back(kv.first);
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace manin
