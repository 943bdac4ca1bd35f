#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wqo {

using BigNat = boost::multiprecision::cpp_int;

/// An ordinal strictly below epsilon_0 in Cantor normal form:
/// w^{e_0}*c_0 + ... + w^{e_k}*c_k with e_0 > e_1 > ... > e_k and c_i >= 1.
/// The empty term list denotes 0.  Values are immutable after construction
/// and every constructor canonicalises, so equality is structural.
class Ordinal {
 public:
  struct Term;
  using Terms = std::vector<Term>;

  Ordinal() = default;                    // zero
  explicit Ordinal(const BigNat& n);      // finite ordinal, n >= 0
  explicit Ordinal(std::uint64_t n) : Ordinal(BigNat(n)) {}

  static Ordinal omega();
  // w^exp * coeff; coeff >= 1
  static Ordinal omega_power(const Ordinal& exp, const BigNat& coeff = 1);
  // Validates the CNF invariants, throws std::invalid_argument on violation.
  static Ordinal from_terms(Terms terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  // nonzero with no finite part
  bool is_limit() const;
  bool is_successor() const;

  const Terms& terms() const { return terms_; }
  // pre: !is_zero()
  const Ordinal& leading_exp() const;
  const BigNat& leading_coeff() const;
  // exponent of the last CNF term; pre: !is_zero()
  const Ordinal& smallest_exp() const;

  // pre: is_finite()
  const BigNat& finite_value() const;
  // coefficient of w^0 (0 when absent)
  BigNat finite_part() const;
  // the ordinal with the w^0 term removed
  Ordinal limit_part() const;
  // pre: is_successor()
  Ordinal predecessor() const;
  // decrements the last CNF coefficient, dropping the term at zero;
  // pre: !is_zero()
  Ordinal drop_last_unit() const;
  // everything after the leading term
  Ordinal tail() const;

  std::strong_ordering operator<=>(const Ordinal& rhs) const;
  bool operator==(const Ordinal& rhs) const;

 private:
  Terms terms_;
};

struct Ordinal::Term {
  Ordinal exp;
  BigNat coeff;
};

// -- arithmetic ------------------------------------------------------------

// ordinal sum (non-commutative, left absorption)
Ordinal add(const Ordinal& a, const Ordinal& b);
// ordinal product (non-commutative)
Ordinal mul(const Ordinal& a, const Ordinal& b);
// natural (Hessenberg) sum: coefficient-wise
Ordinal nat_sum(const Ordinal& a, const Ordinal& b);
// natural (Hessenberg) product: CNFs multiplied as polynomials in w
Ordinal nat_prod(const Ordinal& a, const Ordinal& b);

// Heisenberg product a (.) b, defined by a(.)0 = 0,
// a(.)(b+1) = (a(.)b) (+) a, a(.)lambda = sup{a(.)g + 1 : g < lambda}.
// Computed by the closed form mul(a, limit_part(b)) (+) nat_prod(a, finite_part(b));
// the tests validate the closed form against a direct recursive evaluator.
Ordinal heisenberg(const Ordinal& a, const Ordinal& b);

// sup{x (+) y + 1 : x < a, y < b}, and 0 when a or b is 0.
// Symmetric; computed by case analysis on successor/limit shape and
// validated against fundamental-sequence sampling in the tests.
Ordinal hsup(const Ordinal& a, const Ordinal& b);

Ordinal omega_pow(const Ordinal& a);
// a in {w^g}; by convention 0 is not principal and 1 = w^0 is.
bool is_additively_principal(const Ordinal& a);
// a in {1, 2} or a = w^{w^g}
bool is_multiplicatively_principal(const Ordinal& a);

// Canonical sequence converging to the limit ordinal l:
// (m + w^{g+1})[n] = m + w^g*n,  (m + w^g)[n] = m + w^{g[n]} for limit g.
// Throws std::invalid_argument when l is not a limit.
Ordinal fundamental_sequence(const Ordinal& l, std::uint64_t n);

// The unique a' with l = w*a' for a limit ordinal l.
// Throws std::invalid_argument when l is not a limit.
Ordinal omega_quotient(const Ordinal& l);

// least x with nat_sum(a, x) >= b
Ordinal nat_minus(const Ordinal& b, const Ordinal& a);

// least xi with nat_prod(h, xi) >= o; requires h >= 1.
// Self-checks its result: nat_prod(h, xi) >= o and, for successor xi,
// nat_prod(h, xi - 1) < o.
Ordinal min_natural_cofactor(const Ordinal& h, const Ordinal& o);

}  // namespace wqo
