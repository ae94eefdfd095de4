#ifndef MANIN_PERM_HPP
#define MANIN_PERM_HPP

#include <set>
#include <utility>
#include <vector>

#include "manin/matrix.hpp"

namespace manin {

// One-line notation, 1-based: p[i-1] = sigma(i).
using Perm = std::vector<int>;
using InversionSet = std::set<std::pair<int, int>>;

struct ReducedWordError : InputError {
  using InputError::InputError;
};

Perm perm_identity(int k);
bool is_perm(const Perm& p);
// (a*b)(i) = a(b(i)).
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& p);
int inv(const Perm& p);
int perm_sign(const Perm& p);
std::vector<Perm> all_perms(int k);
InversionSet inversion_set(const Perm& p);

// Simple reflection s_a swaps a and a+1.
Perm simple_reflection(int a, int k);
Perm word_product(const std::vector<int>& word, int k);
// Canonical reduced word by bubble-sort descent: p = s_{w1} * ... * s_{wl}.
std::vector<int> reduced_word(const Perm& p);

// Inversion set of w = s_{i1}*...*s_{il} from the word; rejects non-reduced words.
InversionSet inversion_set_from_reduced_word(const std::vector<int>& word, int k);
// Inversion set of w^{-1} from the same word.
InversionSet inverse_inversion_set_from_reduced_word(const std::vector<int>& word, int k);

// Product of q(s,t) over s<t with p^{-1}(s) > p^{-1}(t); q is k x k.
Q mu(const QMatrix& q, const Perm& p);
// Restriction of q to the tuple I (1-based indices).
QMatrix restrict_params(const QMatrix& q, const std::vector<int>& I);
long stabilizer_order(const std::vector<int>& I);

}  // namespace manin

#endif  // MANIN_PERM_HPP
