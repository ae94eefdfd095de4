#include "manin/ideal.hpp"

#include <cstdlib>
#include <string>

#include "manin/tensor.hpp"

namespace manin {

std::size_t size_budget() {
  if (const char* env = std::getenv("MANIN_BUDGET")) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  return 20736;
}

void check_budget(std::size_t g, int d) {
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) {
    total *= g;
    if (total > size_budget())
      throw BudgetError("size budget exceeded: " + std::to_string(g) + "^" + std::to_string(d) + " > " +
                        std::to_string(size_budget()));
  }
}

IdealSlice build_slice(const std::vector<SparseVec>& relations, std::size_t g, int d) {
  if (d < 0) throw InputError("ideal slice degree must be non-negative");
  check_budget(g, d);
  IdealSlice s{g, d, SparseEchelon(ipow(g, d))};
  for (int i = 0; i + 2 <= d; ++i) {
    const std::size_t left = ipow(g, i), right = ipow(g, d - 2 - i);
    for (const auto& r : relations)
      for (std::size_t wl = 0; wl < left; ++wl)
        for (std::size_t wr = 0; wr < right; ++wr) {
          SparseVec v;
          v.reserve(r.size());
          for (const auto& [idx, c] : r)
            v.emplace_back(static_cast<std::uint32_t>((wl * g * g + idx) * right + wr), c);
          s.basis.insert(v);
        }
  }
  return s;
}

IdealSlice build_slice(const Subspace& relations, std::size_t g, int d) {
  if (relations.ambient() != g * g) throw InputError("relation space is not over degree-2 words");
  return build_slice(relation_vectors(relations), g, d);
}

IdealSlice build_slice(const std::vector<NCPoly>& relations, std::size_t g, int d) {
  return build_slice(relation_vectors(relations, g), g, d);
}

bool reduces_to_zero(const NCPoly& p, const IdealSlice& slice) {
  if (p.is_zero()) return true;
  return slice.basis.contains(degree_component_vector(p, slice.d, slice.g));
}

std::size_t quotient_dimension(const IdealSlice& slice) {
  return ipow(slice.g, slice.d) - slice.basis.rank();
}

std::vector<SparseVec> relation_vectors(const std::vector<NCPoly>& relations, std::size_t g) {
  std::vector<SparseVec> out;
  for (const auto& r : relations)
    if (!r.is_zero()) out.push_back(degree_component_vector(r, 2, g));
  return out;
}

std::vector<SparseVec> relation_vectors(const Subspace& relations) {
  std::vector<SparseVec> out;
  for (std::size_t i = 0; i < relations.dim(); ++i) out.push_back(sparse_from_dense(relations.basis().row(i)));
  return out;
}

Subspace relation_subspace(const std::vector<NCPoly>& relations, std::size_t g) {
  QMatrix m(0, g * g);
  for (const auto& r : relations)
    if (!r.is_zero()) m.append_row(degree_component_dense(r, 2, g));
  return Subspace::span(m);
}

}  // namespace manin
