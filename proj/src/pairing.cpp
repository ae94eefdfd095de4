#include "manin/pairing.hpp"

#include <deque>
#include <unordered_set>

#include "manin/ideal.hpp"
#include "manin/idempotent.hpp"
#include "manin/perm.hpp"
#include "manin/quadratic.hpp"
#include "manin/tensor.hpp"

namespace manin {

Kind parse_kind(const std::string& s) {
  if (s == "S") return Kind::S;
  if (s == "A") return Kind::A;
  throw InputError("unknown kind '" + s + "' (expected S or A)");
}

std::string kind_name(Kind k) { return k == Kind::S ? "S" : "A"; }

namespace {

void check_square_op(const QMatrix& e, int n) {
  const auto n2 = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (n < 1 || e.rows() != n2 || e.cols() != n2) throw InputError("operator is not n^2 x n^2");
}

void check_arity(int n, int k) {
  if (k < 1) throw InputError("arity must be at least 1");
  check_budget(static_cast<std::size_t>(n), k);
}

QMatrix relation_idempotent(const QMatrix& e, Kind kind) {
  return kind == Kind::S ? e : QMatrix::identity(e.rows()) - e;
}

std::vector<int> tuple_from(const std::vector<int>& base, const Perm& s) {
  std::vector<int> t(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) t[i] = base[static_cast<std::size_t>(s[i] - 1)];
  return t;
}

std::size_t tuple_index(const std::vector<int>& t, int n) {
  std::vector<int> d(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) d[i] = t[i] - 1;
  return encode_index(d, n);
}

// Nondecreasing (strict = false) or strictly increasing tuples over 1..n.
void monotone_tuples(int n, int k, bool strict, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  const int lo = cur.empty() ? 1 : cur.back() + (strict ? 1 : 0);
  for (int v = lo; v <= n; ++v) {
    cur.push_back(v);
    monotone_tuples(n, k, strict, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> monotone_tuples(int n, int k, bool strict) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  monotone_tuples(n, k, strict, cur, out);
  return out;
}

int tuple_inversions(const std::vector<int>& t) {
  int c = 0;
  for (std::size_t s = 0; s < t.size(); ++s)
    for (std::size_t u = s + 1; u < t.size(); ++u)
      if (t[s] > t[u]) ++c;
  return c;
}

std::string matrix_key(const QMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Q& x = m(i, j);
      if (sgn(x) == 0) continue;
      s += std::to_string(i * m.cols() + j);
      s += ':';
      s += x.get_str();
      s += ';';
    }
  return s;
}

}  // namespace

GenericResult generic_pairing(const QMatrix& e, int n, int k, Kind kind) {
  check_square_op(e, n);
  check_arity(n, k);
  const QMatrix rel = relation_idempotent(e, kind);
  const std::size_t D = ipow(static_cast<std::size_t>(n), k);
  GenericResult r;
  if (k == 1) {
    r.op = PairingOperator{kind, n, k, QMatrix::identity(D), "generic"};
    return r;
  }
  const Subspace v = joint_kernel(rel, n, k);
  const Subspace vbar = joint_left_kernel(rel, n, k);
  if (v.dim() != vbar.dim()) {
    r.reason = "dimension mismatch: " + std::to_string(v.dim()) + " vs " + std::to_string(vbar.dim());
    return r;
  }
  if (v.dim() == 0) {
    r.op = PairingOperator{kind, n, k, QMatrix(D, D), "generic"};
    return r;
  }
  const QMatrix gram = vbar.basis() * v.basis().transpose();
  auto inv = inverse(gram);
  if (!inv) {
    r.reason = "natural pairing is degenerate";
    return r;
  }
  r.op = PairingOperator{kind, n, k, (v.basis().transpose() * *inv) * vbar.basis(), "generic"};
  return r;
}

PairingOperator group_average(const QMatrix& e, int n, int k, Kind kind, std::size_t cap) {
  check_square_op(e, n);
  check_arity(n, k);
  const std::size_t D = ipow(static_cast<std::size_t>(n), k);
  if (k == 1) return {kind, n, k, QMatrix::identity(D), "group_average"};
  QMatrix p = QMatrix::identity(e.rows()) - Q(2) * e;
  if (kind == Kind::A) p = Q(-1) * p;
  std::vector<QMatrix> gens;
  for (int a = 1; a < k; ++a) gens.push_back(embed(p, n, 2, k, a));
  for (std::size_t a = 0; a + 1 < gens.size(); ++a)
    if ((gens[a] * gens[a + 1]) * gens[a] != (gens[a + 1] * gens[a]) * gens[a + 1])
      throw InputError("braid relation fails for P = 1 - 2E");
  std::unordered_set<std::string> seen;
  std::deque<QMatrix> queue;
  QMatrix sum(D, D);
  const QMatrix id = QMatrix::identity(D);
  seen.insert(matrix_key(id));
  queue.push_back(id);
  sum += id;
  while (!queue.empty()) {
    QMatrix cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      QMatrix nxt = g * cur;
      if (seen.insert(matrix_key(nxt)).second) {
        if (seen.size() > cap) throw BudgetError("group exceeds enumeration cap of " + std::to_string(cap));
        sum += nxt;
        queue.push_back(std::move(nxt));
      }
    }
  }
  sum *= Q(1) / Q(static_cast<unsigned long>(seen.size()));
  return {kind, n, k, sum, "group_average"};
}

Q q_number(const Q& q, int k) {
  Q s = 0;
  for (int j = 0; j < k; ++j) s += qpow(q, k - 1 - 2 * j);
  return s;
}

Q q_factorial(const Q& q, int k) {
  Q f = 1;
  for (int j = 1; j <= k; ++j) f *= q_number(q, j);
  return f;
}

namespace {

void check_hecke_q(const Q& q) {
  if (sgn(q) == 0 || q == 1 || q == -1) throw InputError("q must avoid 0, 1, -1");
}

}  // namespace

PairingOperator hecke_pairing(const Q& q, int n, int k, Kind kind) {
  check_hecke_q(q);
  if (n < 1) throw InputError("n must be positive");
  check_arity(n, k);
  const QMatrix rhat = op_Rhat(q, n);
  QMatrix cur = QMatrix::identity(static_cast<std::size_t>(n));
  for (int j = 2; j <= k; ++j) {
    const QMatrix prev = kron(cur, QMatrix::identity(static_cast<std::size_t>(n)));
    const QMatrix r = embed(rhat, n, 2, j, j - 1);
    const Q kq = q_number(q, j), km = q_number(q, j - 1);
    const Q first = (kind == Kind::S ? qpow(q, j - 1) : qpow(q, 1 - j)) / kq;
    const Q second = (kind == Kind::S ? km : -km) / kq;
    cur = first * prev + second * ((prev * r) * prev);
  }
  return {kind, n, k, cur, "heckerec"};
}

QMatrix hecke_A_closed(const Q& q, int n, int k) {
  check_hecke_q(q);
  check_arity(n, k);
  const std::size_t D = ipow(static_cast<std::size_t>(n), k);
  QMatrix out(D, D);
  const Q lead = qpow(q, static_cast<long>(k) * (k - 1) / 2) / q_factorial(q, k);
  const auto perms = all_perms(k);
  for (const auto& I : monotone_tuples(n, k, true))
    for (const auto& s : perms)
      for (const auto& t : perms)
        out(tuple_index(tuple_from(I, s), n), tuple_index(tuple_from(I, t), n)) =
            lead * perm_sign(s) * perm_sign(t) * qpow(q, -inv(s) - inv(t));
  return out;
}

QMatrix hecke_transport_G(const Q& q, int n, int k) {
  check_hecke_q(q);
  check_arity(n, k);
  const std::size_t D = ipow(static_cast<std::size_t>(n), k);
  QMatrix g(D, D);
  const Q lead = q_factorial(q, k) / factorial(static_cast<unsigned>(k));
  for (std::size_t idx = 0; idx < D; ++idx) {
    std::vector<int> t = decode_index(idx, n, k);
    bool distinct = true;
    for (std::size_t s = 0; s < t.size() && distinct; ++s)
      for (std::size_t u = s + 1; u < t.size(); ++u)
        if (t[s] == t[u]) distinct = false;
    g(idx, idx) = distinct ? lead * qpow(q, 2L * tuple_inversions(t) - static_cast<long>(k) * (k - 1) / 2) : Q(1);
  }
  return g;
}

BrauerFamily parse_brauer_family(const std::string& s) {
  if (s == "so") return BrauerFamily::so;
  if (s == "sp") return BrauerFamily::sp;
  throw InputError("unknown Brauer family '" + s + "' (expected so or sp)");
}

QMatrix jucys_murphy(BrauerFamily f, int n, int k, int b) {
  const std::size_t D = ipow(static_cast<std::size_t>(n), k);
  const QMatrix two = f == BrauerFamily::so ? op_P(n) - op_Q(n) : op_Qtilde(n) - op_P(n);
  QMatrix y(D, D);
  for (int a = 1; a < b; ++a) y += embed_legs(two, n, k, a, b);
  return y;
}

PairingOperator brauer_pairing(BrauerFamily f, int n, int k) {
  if (n < 1) throw InputError("n must be positive");
  if (f == BrauerFamily::sp) {
    if (n % 2 != 0) throw InputError("sp requires even n");
    if (k > n / 2 + 1) throw InputError("sp requires k <= n/2 + 1");
  }
  check_arity(n, k);
  const std::size_t D = ipow(static_cast<std::size_t>(n), k);
  const Kind kind = f == BrauerFamily::so ? Kind::S : Kind::A;
  const long omega = f == BrauerFamily::so ? n : -n;
  const QMatrix id = QMatrix::identity(D);
  QMatrix out = id;
  for (int b = 2; b <= k; ++b) {
    const long den = 2L * b + omega - 4;
    if (den == 0) throw InputError("vanishing denominator 2b + omega - 4 at b = " + std::to_string(b));
    const QMatrix y = jucys_murphy(f, n, k, b);
    const QMatrix f1 = y + id;
    const QMatrix f2 = y + Q(omega + b - 3) * id;
    out = (Q(1) / Q(den)) * ((out * f1) * f2);
  }
  out *= Q(1) / factorial(static_cast<unsigned>(k));
  return {kind, n, k, out, "brauer"};
}

Q brauer_trace_formula(BrauerFamily f, int n, int k) {
  if (f == BrauerFamily::so) return Q(n + 2 * k - 2) / Q(n + k - 2) * binomial(n + k - 2, k);
  return Q(n - 2 * k + 2) / Q(k) * binomial(n + 1, k - 1);
}

PairingOperator closed_form_multiparam(const QMatrix& qhat, int k, Kind kind) {
  if (!is_parameter_matrix(qhat)) throw InputError("invalid parameter matrix");
  const int n = static_cast<int>(qhat.rows());
  check_arity(n, k);
  const std::size_t D = ipow(static_cast<std::size_t>(n), k);
  QMatrix out(D, D);
  const Q kf = factorial(static_cast<unsigned>(k));
  const auto perms = all_perms(k);
  for (const auto& I : monotone_tuples(n, k, kind == Kind::A)) {
    const QMatrix qi = restrict_params(qhat, I);
    const Q scale = kind == Kind::A ? Q(1) / kf : Q(stabilizer_order(I)) / kf;
    for (const auto& s : perms)
      for (const auto& t : perms) {
        Q v = scale * mu(qi, s) / mu(qi, t);
        if (kind == Kind::A) v *= perm_sign(s) * perm_sign(t);
        out(tuple_index(tuple_from(I, s), n), tuple_index(tuple_from(I, t), n)) = v;
      }
  }
  return {kind, n, k, out, "closed_form"};
}

FourParamConditions fourparam_conditions(const Q& a, const Q& b, const Q& c, const Q& kappa) {
  FourParamConditions r;
  const Q a2 = a * a, b2 = b * b, c2 = c * c, k3 = kappa * kappa * kappa;
  r.i = a2 == b2 && b2 == c2;
  r.ii = a2 * a2 * b2 == -1 && b2 * b2 * c2 == -1 && c2 * c2 * a2 == -1 && k3 == -(a2 * a) / b * c;
  r.iii = a2 * a2 * c2 == -1 && b2 * b2 * a2 == -1 && c2 * c2 * b2 == -1 && k3 == c / (a2 * a * b);
  return r;
}

namespace {

std::size_t idx3(int i, int j, int k) { return static_cast<std::size_t>((i - 1) * 9 + (j - 1) * 3 + (k - 1)); }

}  // namespace

std::vector<Q> fourparam_w_lower(const Q& a) {
  std::vector<Q> w(27);
  const Q x = Q(1) / 6, y = -(a * a) / 6;
  w[idx3(1, 2, 3)] = x;
  w[idx3(2, 3, 1)] = x;
  w[idx3(3, 1, 2)] = x;
  w[idx3(1, 3, 2)] = y;
  w[idx3(2, 1, 3)] = y;
  w[idx3(3, 2, 1)] = y;
  return w;
}

std::vector<Q> fourparam_w_upper(const Q& a, const Q& b, const Q& c, const Q& kappa) {
  std::vector<Q> w(27);
  const Q y = -1 / (a * a);
  w[idx3(1, 2, 3)] = 1;
  w[idx3(2, 3, 1)] = 1;
  w[idx3(3, 1, 2)] = 1;
  w[idx3(1, 3, 2)] = y;
  w[idx3(2, 1, 3)] = y;
  w[idx3(3, 2, 1)] = y;
  w[idx3(1, 1, 1)] = -kappa / b;
  w[idx3(2, 2, 2)] = -kappa / c;
  w[idx3(3, 3, 3)] = -kappa / a;
  return w;
}

FourParamResult fourparam_A3(const Q& a, const Q& b, const Q& c, const Q& kappa) {
  if (sgn(a) == 0 || sgn(b) == 0 || sgn(c) == 0) throw InputError("a, b, c must be nonzero");
  FourParamResult r;
  r.conditions = fourparam_conditions(a, b, c, kappa);
  if (sgn(kappa) == 0) {
    GenericResult g = generic_pairing(op_A_fourparam(a, b, c, kappa), 3, 3, Kind::A);
    r.op = g.op;
    r.reason = g.reason;
    return r;
  }
  if (!r.conditions.i || r.conditions.ii || r.conditions.iii) {
    r.reason = std::string("condition (i) ") + (r.conditions.i ? "holds" : "fails") + ", (ii) " +
               (r.conditions.ii ? "holds" : "fails") + ", (iii) " + (r.conditions.iii ? "holds" : "fails");
    return r;
  }
  const auto lo = fourparam_w_lower(a), up = fourparam_w_upper(a, b, c, kappa);
  QMatrix op(27, 27);
  for (std::size_t i = 0; i < 27; ++i)
    if (sgn(lo[i]) != 0)
      for (std::size_t j = 0; j < 27; ++j) op(i, j) = lo[i] * up[j];
  r.op = PairingOperator{Kind::A, 3, 3, op, "closed_form"};
  return r;
}

AxiomReport verify_axioms(const PairingOperator& p, const QMatrix& e, const std::vector<PairingOperator>& others) {
  check_square_op(e, p.n);
  const std::size_t D = ipow(static_cast<std::size_t>(p.n), p.k);
  if (p.op.rows() != D || p.op.cols() != D) throw InputError("pairing operator has wrong shape");
  AxiomReport r;
  const QMatrix rel = relation_idempotent(e, p.kind);
  r.annihilation = true;
  for (int a = 1; a < p.k && r.annihilation; ++a) {
    const QMatrix emb = embed(rel, p.n, 2, p.k, a);
    r.annihilation = (emb * p.op).is_zero() && (p.op * emb).is_zero();
  }
  if (p.k == 1) {
    r.fixed_vectors = p.op == QMatrix::identity(D);
  } else {
    const Subspace v = joint_kernel(rel, p.n, p.k), vbar = joint_left_kernel(rel, p.n, p.k);
    r.fixed_vectors = v.basis() * p.op.transpose() == v.basis() && vbar.basis() * p.op == vbar.basis();
  }
  r.idempotent = p.op * p.op == p.op;
  for (const auto& o : others) {
    if (o.n != p.n || o.op.rows() != ipow(static_cast<std::size_t>(o.n), o.k)) continue;
    if (o.k == p.k && o.kind != p.kind) {
      const bool ok = (p.op * o.op).is_zero() && (o.op * p.op).is_zero();
      r.orthogonal = r.orthogonal.value_or(true) && ok;
    } else if (o.k < p.k) {
      bool ok = true;
      for (int a = 1; a + o.k - 1 <= p.k && ok; ++a) {
        const QMatrix l = embed(o.op, p.n, o.k, p.k, a);
        if (o.kind == p.kind)
          ok = l * p.op == p.op && p.op * l == p.op;
        else if (o.k >= 2)
          ok = (l * p.op).is_zero() && (p.op * l).is_zero();
      }
      r.nesting = r.nesting.value_or(true) && ok;
    }
  }
  return r;
}

}  // namespace manin
