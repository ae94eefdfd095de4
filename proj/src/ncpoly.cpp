#include "manin/ncpoly.hpp"

#include <cctype>

#include "manin/tensor.hpp"

namespace manin {

std::string Generator::str() const {
  if (idx.empty()) return sym;
  std::string s = sym + "[";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i]);
  }
  return s + "]";
}

Alphabet::Alphabet(std::vector<Generator> gens) {
  for (auto& g : gens) add(g);
}

Alphabet Alphabet::matrix(const std::string& sym, int rows, int cols) {
  Alphabet a;
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) a.add({sym, {i, j}});
  return a;
}

int Alphabet::find(const Generator& g) const {
  auto it = ids_.find(g);
  return it == ids_.end() ? -1 : it->second;
}

int Alphabet::add(const Generator& g) {
  int f = find(g);
  if (f >= 0) return f;
  if (gens_.size() >= 65535) throw BudgetError("too many generators");
  gens_.push_back(g);
  int id = static_cast<int>(gens_.size()) - 1;
  ids_.emplace(g, id);
  return id;
}

NCPoly NCPoly::constant(const Q& c) { return word({}, c); }
NCPoly NCPoly::gen(std::uint16_t id) { return word({id}); }

NCPoly NCPoly::word(const Word& w, const Q& c) {
  NCPoly p;
  p.add_term(w, c);
  return p;
}

int NCPoly::homogeneous_degree() const {
  if (t_.empty()) return -1;
  const std::size_t d = t_.begin()->first.size();
  for (const auto& kv : t_)
    if (kv.first.size() != d) return -1;
  return static_cast<int>(d);
}

void NCPoly::add_term(const Word& w, const Q& c) {
  if (sgn(c) == 0) return;
  auto it = t_.try_emplace(w, 0).first;
  it->second += c;
  if (sgn(it->second) == 0) t_.erase(it);
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.t_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.t_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Q& s) {
  if (sgn(s) == 0) {
    t_.clear();
    return *this;
  }
  for (auto& kv : t_) kv.second *= s;
  return *this;
}

NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
NCPoly operator*(const Q& s, NCPoly a) { return a *= s; }

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [u, x] : a.terms())
    for (const auto& [v, y] : b.terms()) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.add_term(w, x * y);
    }
  return r;
}

std::string to_string(const NCPoly& p, const Alphabet& alpha) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    Q a = abs(c);
    if (first) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    bool need_star = false;
    if (w.empty() || a != 1) {
      s += to_string(a);
      need_star = true;
    }
    for (auto id : w) {
      if (need_star) s += "*";
      s += alpha.at(id).str();
      need_star = true;
    }
  }
  return s;
}

namespace {

class Parser {
 public:
  Parser(const std::string& t, Alphabet& a, bool allow_new) : s_(t), alpha_(a), allow_new_(allow_new) {}

  NCPoly parse() {
    NCPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError(what + " at position " + std::to_string(pos_ + 1) + " in '" + s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  NCPoly expr() {
    NCPoly acc;
    bool neg = false;
    if (peek('-')) {
      neg = true;
      ++pos_;
    } else if (peek('+')) {
      ++pos_;
    }
    NCPoly t = term();
    acc = neg ? Q(-1) * t : t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  NCPoly term() {
    NCPoly p = factor();
    while (peek('*')) {
      ++pos_;
      p = p * factor();
    }
    return p;
  }

  int integer() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected integer");
    return std::stoi(s_.substr(b, pos_ - b));
  }

  NCPoly factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NCPoly p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t d = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (d == pos_) fail("expected denominator");
      }
      Q v;
      try {
        v = parse_rational(s_.substr(b, pos_ - b));
      } catch (const InputError& e) {
        fail(e.what());
      }
      return NCPoly::constant(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t b = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      Generator g{s_.substr(b, pos_ - b), {}};
      if (pos_ < s_.size() && s_[pos_] == '[') {
        ++pos_;
        g.idx.push_back(integer());
        while (peek(',')) {
          ++pos_;
          g.idx.push_back(integer());
        }
        if (!peek(']')) fail("expected ']'");
        ++pos_;
      }
      int id = alpha_.find(g);
      if (id < 0) {
        if (!allow_new_) fail("unknown generator " + g.str());
        id = alpha_.add(g);
      }
      return NCPoly::gen(static_cast<std::uint16_t>(id));
    }
    fail("unexpected character");
  }

  std::string s_;
  Alphabet& alpha_;
  bool allow_new_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse_ncpoly(const std::string& text, Alphabet& alpha, bool allow_new) {
  return Parser(text, alpha, allow_new).parse();
}

NCPoly remap(const NCPoly& p, const std::vector<std::uint16_t>& id_map) {
  NCPoly r;
  for (const auto& [w, c] : p.terms()) {
    Word v(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) v[i] = id_map.at(w[i]);
    r.add_term(v, c);
  }
  return r;
}

std::uint32_t word_index(const Word& w, std::size_t g) {
  std::uint64_t idx = 0;
  for (auto x : w) idx = idx * g + x;
  return static_cast<std::uint32_t>(idx);
}

Word word_from_index(std::uint32_t idx, std::size_t g, int d) {
  Word w(static_cast<std::size_t>(d));
  for (int i = d - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(idx % g);
    idx = static_cast<std::uint32_t>(idx / g);
  }
  return w;
}

SparseVec degree_component_vector(const NCPoly& p, int d, std::size_t g) {
  SparseVec v;
  for (const auto& [w, c] : p.terms()) {
    if (static_cast<int>(w.size()) != d) throw InputError("polynomial is not homogeneous of degree " + std::to_string(d));
    for (auto x : w)
      if (x >= g) throw InputError("generator outside basis");
    v.emplace_back(word_index(w, g), c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

std::vector<Q> degree_component_dense(const NCPoly& p, int d, std::size_t g) {
  std::vector<Q> v(ipow(g, d));
  for (const auto& [i, c] : degree_component_vector(p, d, g)) v[i] = c;
  return v;
}

NCPoly poly_from_vector(const SparseVec& v, int d, std::size_t g) {
  NCPoly p;
  for (const auto& [i, c] : v) p.add_term(word_from_index(i, g, d), c);
  return p;
}

NCMatrix NCMatrix::generic(const Alphabet& alpha, const std::string& sym, int rows, int cols) {
  NCMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) {
      int id = alpha.find({sym, {i, j}});
      if (id < 0) throw InputError("generator missing from alphabet");
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = NCPoly::gen(static_cast<std::uint16_t>(id));
    }
  return m;
}

NCMatrix NCMatrix::scalar(const QMatrix& q) {
  NCMatrix m(q.rows(), q.cols());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) m(i, j) = NCPoly::constant(q(i, j));
  return m;
}

NCMatrix NCMatrix::submatrix(const std::vector<int>& I, const std::vector<int>& J) const {
  NCMatrix m(I.size(), J.size());
  for (std::size_t s = 0; s < I.size(); ++s)
    for (std::size_t t = 0; t < J.size(); ++t)
      m(s, t) = (*this)(static_cast<std::size_t>(I[s] - 1), static_cast<std::size_t>(J[t] - 1));
  return m;
}

bool NCMatrix::is_zero() const {
  for (const auto& p : a_)
    if (!p.is_zero()) return false;
  return true;
}

NCMatrix operator*(const NCMatrix& a, const NCMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("shape mismatch in product");
  NCMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

NCMatrix operator*(const QMatrix& a, const NCMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("shape mismatch in product");
  NCMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

NCMatrix operator*(const NCMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("shape mismatch in product");
  NCMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += b(k, j) * a(i, k);
    }
  return c;
}

NCMatrix operator-(const NCMatrix& a, const NCMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("shape mismatch in subtraction");
  NCMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

NCMatrix compose_chain(const NCMatrix& m, int k) {
  const int n = static_cast<int>(m.rows()), mc = static_cast<int>(m.cols());
  const std::size_t R = ipow(m.rows(), k), C = ipow(m.cols(), k);
  NCMatrix out(R, C);
  for (std::size_t I = 0; I < R; ++I) {
    std::vector<int> ri = decode_index(I, n, k);
    for (std::size_t J = 0; J < C; ++J) {
      std::vector<int> cj = decode_index(J, mc, k);
      NCPoly p = NCPoly::constant(1);
      for (int s = 0; s < k; ++s)
        p = p * m(static_cast<std::size_t>(ri[static_cast<std::size_t>(s)]), static_cast<std::size_t>(cj[static_cast<std::size_t>(s)]));
      out(I, J) = p;
    }
  }
  return out;
}

}  // namespace manin
