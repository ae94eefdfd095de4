#include "manin/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace manin {

Perm perm_identity(int k) {
  Perm p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

bool is_perm(const Perm& p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (int x : p) {
    if (x < 1 || x > static_cast<int>(p.size()) || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw InputError("permutation size mismatch");
  Perm c(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i] - 1)];
  return c;
}

Perm perm_inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
  return q;
}

int inv(const Perm& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++c;
  return c;
}

int perm_sign(const Perm& p) { return inv(p) % 2 ? -1 : 1; }

std::vector<Perm> all_perms(int k) {
  std::vector<Perm> out;
  Perm p = perm_identity(k);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

InversionSet inversion_set(const Perm& p) {
  InversionSet s;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s.emplace(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  return s;
}

Perm simple_reflection(int a, int k) {
  if (a < 1 || a >= k) throw InputError("simple reflection index out of range");
  Perm p = perm_identity(k);
  std::swap(p[static_cast<std::size_t>(a - 1)], p[static_cast<std::size_t>(a)]);
  return p;
}

Perm word_product(const std::vector<int>& word, int k) {
  Perm p = perm_identity(k);
  for (int a : word) p = perm_compose(p, simple_reflection(a, k));
  return p;
}

std::vector<int> reduced_word(const Perm& p) {
  // Sorting p by adjacent swaps of positions: p * s_a swaps entries a, a+1.
  Perm cur = p;
  std::vector<int> rev;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t a = 0; a + 1 < cur.size(); ++a)
      if (cur[a] > cur[a + 1]) {
        std::swap(cur[a], cur[a + 1]);
        rev.push_back(static_cast<int>(a) + 1);
        swapped = true;
      }
  }
  // p * s_{r1} * ... * s_{rm} = id, so p = s_{rm} * ... * s_{r1}.
  return std::vector<int>(rev.rbegin(), rev.rend());
}

namespace {

// Root e_x - e_y stored as (x, y).
using Root = std::pair<int, int>;

Root reflect(int a, Root r) {
  auto s = [a](int x) { return x == a ? a + 1 : (x == a + 1 ? a : x); };
  return {s(r.first), s(r.second)};
}

InversionSet roots_to_set(const std::vector<Root>& roots, std::size_t len) {
  InversionSet s;
  for (const auto& r : roots) {
    if (r.first > r.second) throw ReducedWordError("word is not reduced (negative root)");
    s.insert(r);
  }
  if (s.size() != len) throw ReducedWordError("word is not reduced (repeated root)");
  return s;
}

void check_word(const std::vector<int>& word, int k) {
  for (int a : word)
    if (a < 1 || a >= k) throw InputError("simple reflection index out of range");
  if (static_cast<std::size_t>(inv(word_product(word, k))) != word.size())
    throw ReducedWordError("word is not reduced (length exceeds inversion count)");
}

}  // namespace

InversionSet inversion_set_from_reduced_word(const std::vector<int>& word, int k) {
  check_word(word, k);
  std::vector<Root> roots;
  const std::size_t l = word.size();
  for (std::size_t j = 0; j < l; ++j) {
    Root r{word[j], word[j] + 1};
    for (std::size_t m = j + 1; m < l; ++m) r = reflect(word[m], r);
    roots.push_back(r);
  }
  return roots_to_set(roots, l);
}

InversionSet inverse_inversion_set_from_reduced_word(const std::vector<int>& word, int k) {
  check_word(word, k);
  std::vector<Root> roots;
  for (std::size_t j = 0; j < word.size(); ++j) {
    Root r{word[j], word[j] + 1};
    for (std::size_t m = j; m-- > 0;) r = reflect(word[m], r);
    roots.push_back(r);
  }
  return roots_to_set(roots, word.size());
}

Q mu(const QMatrix& q, const Perm& p) {
  const Perm pi = perm_inverse(p);
  Q r(1);
  for (std::size_t s = 0; s < p.size(); ++s)
    for (std::size_t t = s + 1; t < p.size(); ++t)
      if (pi[s] > pi[t]) r *= q(s, t);
  return r;
}

QMatrix restrict_params(const QMatrix& q, const std::vector<int>& I) {
  QMatrix r(I.size(), I.size());
  for (std::size_t s = 0; s < I.size(); ++s)
    for (std::size_t t = 0; t < I.size(); ++t)
      r(s, t) = q(static_cast<std::size_t>(I[s] - 1), static_cast<std::size_t>(I[t] - 1));
  return r;
}

long stabilizer_order(const std::vector<int>& I) {
  std::map<int, long> mult;
  for (int x : I) ++mult[x];
  long r = 1;
  for (const auto& [v, m] : mult)
    for (long i = 2; i <= m; ++i) r *= i;
  return r;
}

}  // namespace manin
