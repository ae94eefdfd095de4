#ifndef MANIN_RATIONAL_HPP
#define MANIN_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace manin {

using Q = mpq_class;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts "p", "p/q", "-p/q"; result canonicalized.
Q parse_rational(const std::string& s);
std::string to_string(const Q& x);

Q qpow(const Q& x, long e);
Q factorial(unsigned k);
Q binomial(long n, long k);

}  // namespace manin

#endif  // MANIN_RATIONAL_HPP
