#ifndef MANIN_PAIRING_HPP
#define MANIN_PAIRING_HPP

#include <optional>
#include <string>
#include <vector>

#include "manin/matrix.hpp"

namespace manin {

enum class Kind { S, A };

Kind parse_kind(const std::string& s);
std::string kind_name(Kind k);

struct PairingOperator {
  Kind kind = Kind::S;
  int n = 0;
  int k = 0;
  QMatrix op;
  std::string provenance;
};

struct GenericResult {
  std::optional<PairingOperator> op;
  std::string reason;  // set when op is empty
};

// Dual-basis construction S = V (Vbar V)^{-1} Vbar; A uses 1 - E in place of E.
GenericResult generic_pairing(const QMatrix& e, int n, int k, Kind kind);

// Average over the group generated by +P^{(a,a+1)} (S) or -P^{(a,a+1)} (A), P = 1 - 2E.
PairingOperator group_average(const QMatrix& e, int n, int k, Kind kind, std::size_t cap = 100000);

// Recursion for the idempotent R-hat^q_-.
PairingOperator hecke_pairing(const Q& q, int n, int k, Kind kind);
// q-number (q^k - q^{-k}) / (q - q^{-1}) and its factorial.
Q q_number(const Q& q, int k);
Q q_factorial(const Q& q, int k);
// Closed-form Hecke A-operator entries.
QMatrix hecke_A_closed(const Q& q, int n, int k);
// Diagonal matrix G with closed-form A^q_(k) = G * Hecke A_(k).
QMatrix hecke_transport_G(const Q& q, int n, int k);

enum class BrauerFamily { so, sp };
BrauerFamily parse_brauer_family(const std::string& s);
// Sum over a < b of (P - Q)^{(a,b)} for so, and -(P - Qtilde)^{(a,b)} summed for sp.
QMatrix jucys_murphy(BrauerFamily f, int n, int k, int b);
PairingOperator brauer_pairing(BrauerFamily f, int n, int k);
// Closed-form trace of S^{so_n}_(k) or A^{sp_n}_(k).
Q brauer_trace_formula(BrauerFamily f, int n, int k);

// Entries from the multi-parametric formulas for the idempotent A_qhat.
PairingOperator closed_form_multiparam(const QMatrix& qhat, int k, Kind kind);

struct FourParamConditions {
  bool i = false, ii = false, iii = false;
};
FourParamConditions fourparam_conditions(const Q& a, const Q& b, const Q& c, const Q& kappa);
struct FourParamResult {
  FourParamConditions conditions;
  std::optional<PairingOperator> op;
  std::string reason;
};
// w_1 w^1 under condition (i) with kappa != 0; kappa = 0 falls back to the generic construction.
FourParamResult fourparam_A3(const Q& a, const Q& b, const Q& c, const Q& kappa);
std::vector<Q> fourparam_w_lower(const Q& a);
std::vector<Q> fourparam_w_upper(const Q& a, const Q& b, const Q& c, const Q& kappa);

struct AxiomReport {
  bool annihilation = false;
  bool fixed_vectors = false;
  bool idempotent = false;
  std::optional<bool> orthogonal;
  std::optional<bool> nesting;
  bool all() const {
    return annihilation && fixed_vectors && idempotent && orthogonal.value_or(true) && nesting.value_or(true);
  }
};

// `others` may hold the opposite-kind operator of the same arity (orthogonality) and
// operators of lower arity (nesting); anything else is ignored.
AxiomReport verify_axioms(const PairingOperator& p, const QMatrix& e, const std::vector<PairingOperator>& others = {});

}  // namespace manin

#endif  // MANIN_PAIRING_HPP
