#include "manin/rational.hpp"

#include <cctype>

namespace manin {

Q parse_rational(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  std::string t = s.substr(b, e - b);
  if (t.empty()) throw InputError("empty rational");
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  bool slash = false, digit = false;
  for (; i < t.size(); ++i) {
    char c = t[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (c == '/' && !slash && digit && i + 1 < t.size()) {
      slash = true;
      digit = false;
    } else {
      throw InputError("malformed rational '" + t + "'");
    }
  }
  if (!digit) throw InputError("malformed rational '" + t + "'");
  if (t[0] == '+') t.erase(0, 1);
  std::size_t sl = t.find('/');
  mpz_class num(t.substr(0, sl), 10);
  mpz_class den(1);
  if (sl != std::string::npos) den = mpz_class(t.substr(sl + 1), 10);
  if (den == 0) throw InputError("zero denominator in '" + t + "'");
  Q q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Q& x) { return x.get_str(10); }

Q qpow(const Q& x, long e) {
  if (e < 0) {
    if (x == 0) throw InputError("zero to a negative power");
    return qpow(Q(1) / x, -e);
  }
  Q r(1), b(x);
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Q factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Q(f);
}

Q binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Q(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Q(b);
}

}  // namespace manin
