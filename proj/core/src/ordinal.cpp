#include "wqo/ordinal.hpp"

#include <algorithm>
#include <cassert>

namespace wqo {

namespace {

bool valid_cnf(const Ordinal::Terms& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff < 1) return false;
    if (i + 1 < terms.size() && !(terms[i + 1].exp < terms[i].exp)) return false;
  }
  return true;
}

}  // namespace

Ordinal::Ordinal(const BigNat& n) {
  if (n < 0) throw std::invalid_argument("ordinal: negative finite value");
  if (n > 0) terms_.push_back(Term{Ordinal(), n});
}

Ordinal Ordinal::omega() { return omega_power(Ordinal(BigNat(1))); }

Ordinal Ordinal::omega_power(const Ordinal& exp, const BigNat& coeff) {
  if (coeff < 1) throw std::invalid_argument("ordinal: coefficient must be >= 1");
  Ordinal r;
  r.terms_.push_back(Term{exp, coeff});
  return r;
}

Ordinal Ordinal::from_terms(Terms terms) {
  if (!valid_cnf(terms)) throw std::invalid_argument("ordinal: malformed CNF term list");
  Ordinal r;
  r.terms_ = std::move(terms);
  return r;
}

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero());
}

bool Ordinal::is_limit() const {
  return !terms_.empty() && !terms_.back().exp.is_zero();
}

bool Ordinal::is_successor() const {
  return !terms_.empty() && terms_.back().exp.is_zero();
}

const Ordinal& Ordinal::leading_exp() const {
  assert(!terms_.empty());
  return terms_.front().exp;
}

const BigNat& Ordinal::leading_coeff() const {
  assert(!terms_.empty());
  return terms_.front().coeff;
}

const Ordinal& Ordinal::smallest_exp() const {
  assert(!terms_.empty());
  return terms_.back().exp;
}

const BigNat& Ordinal::finite_value() const {
  static const BigNat zero = 0;
  assert(is_finite());
  return terms_.empty() ? zero : terms_[0].coeff;
}

BigNat Ordinal::finite_part() const {
  if (!terms_.empty() && terms_.back().exp.is_zero()) return terms_.back().coeff;
  return 0;
}

Ordinal Ordinal::limit_part() const {
  Ordinal r = *this;
  if (!r.terms_.empty() && r.terms_.back().exp.is_zero()) r.terms_.pop_back();
  return r;
}

Ordinal Ordinal::predecessor() const {
  assert(is_successor());
  return drop_last_unit();
}

Ordinal Ordinal::drop_last_unit() const {
  assert(!terms_.empty());
  Ordinal r = *this;
  if (r.terms_.back().coeff == 1) {
    r.terms_.pop_back();
  } else {
    r.terms_.back().coeff -= 1;
  }
  return r;
}

Ordinal Ordinal::tail() const {
  assert(!terms_.empty());
  Ordinal r;
  r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

std::strong_ordering Ordinal::operator<=>(const Ordinal& rhs) const {
  const std::size_t n = std::min(terms_.size(), rhs.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto ce = terms_[i].exp <=> rhs.terms_[i].exp;
    if (ce != 0) return ce;
    if (terms_[i].coeff != rhs.terms_[i].coeff)
      return terms_[i].coeff < rhs.terms_[i].coeff ? std::strong_ordering::less
                                                   : std::strong_ordering::greater;
  }
  return terms_.size() <=> rhs.terms_.size();
}

bool Ordinal::operator==(const Ordinal& rhs) const { return (*this <=> rhs) == 0; }

// -- sums and products -------------------------------------------------------

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& be = b.leading_exp();
  Ordinal::Terms out;
  for (const auto& t : a.terms()) {
    if (t.exp < be) break;
    out.push_back(t);
  }
  std::size_t from = 0;
  if (!out.empty() && out.back().exp == be) {
    out.back().coeff += b.leading_coeff();
    from = 1;
  }
  out.insert(out.end(), b.terms().begin() + from, b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  Ordinal acc;
  for (const auto& t : b.terms()) {
    Ordinal part;
    if (t.exp.is_zero()) {
      // a * n: scale the leading coefficient, keep the tail
      Ordinal::Terms ts = a.terms();
      ts.front().coeff *= t.coeff;
      part = Ordinal::from_terms(std::move(ts));
    } else {
      part = Ordinal::omega_power(add(a.leading_exp(), t.exp), t.coeff);
    }
    acc = add(acc, part);
  }
  return acc;
}

Ordinal nat_sum(const Ordinal& a, const Ordinal& b) {
  Ordinal::Terms out;
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ib->exp < ia->exp)) {
      out.push_back(*ia++);
    } else if (ia == ea || ia->exp < ib->exp) {
      out.push_back(*ib++);
    } else {
      out.push_back(Ordinal::Term{ia->exp, ia->coeff + ib->coeff});
      ++ia;
      ++ib;
    }
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal nat_prod(const Ordinal& a, const Ordinal& b) {
  Ordinal acc;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      acc = nat_sum(acc, Ordinal::omega_power(nat_sum(ta.exp, tb.exp), ta.coeff * tb.coeff));
  return acc;
}

Ordinal heisenberg(const Ordinal& a, const Ordinal& b) {
  return nat_sum(mul(a, b.limit_part()), nat_prod(a, Ordinal(b.finite_part())));
}

Ordinal hsup(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const bool la = a.is_limit(), lb = b.is_limit();
  if (!la && !lb) return add(nat_sum(a.predecessor(), b.predecessor()), Ordinal(BigNat(1)));
  if (la && lb) {
    const Ordinal& g = std::max(a.smallest_exp(), b.smallest_exp());
    return add(nat_sum(a.drop_last_unit(), b.drop_last_unit()), omega_pow(g));
  }
  const Ordinal& lim = la ? a : b;
  const Ordinal& suc = la ? b : a;
  return add(nat_sum(lim.drop_last_unit(), suc.predecessor()), omega_pow(lim.smallest_exp()));
}

Ordinal omega_pow(const Ordinal& a) { return Ordinal::omega_power(a); }

bool is_additively_principal(const Ordinal& a) {
  return a.terms().size() == 1 && a.leading_coeff() == 1;
}

bool is_multiplicatively_principal(const Ordinal& a) {
  if (a.is_finite()) return a.finite_value() == 1 || a.finite_value() == 2;
  return a.terms().size() == 1 && a.leading_coeff() == 1 &&
         is_additively_principal(a.leading_exp());
}

Ordinal fundamental_sequence(const Ordinal& l, std::uint64_t n) {
  if (!l.is_limit()) throw std::invalid_argument("fundamental_sequence: not a limit ordinal");
  const Ordinal& g = l.smallest_exp();  // g >= 1
  Ordinal prefix = l.drop_last_unit();
  if (g.is_successor()) {
    if (n == 0) return prefix;
    return add(prefix, Ordinal::omega_power(g.predecessor(), BigNat(n)));
  }
  return add(prefix, omega_pow(fundamental_sequence(g, n)));
}

Ordinal omega_quotient(const Ordinal& l) {
  if (!l.is_limit()) throw std::invalid_argument("omega_quotient: not a limit ordinal");
  Ordinal::Terms out;
  for (const auto& t : l.terms()) {
    // 1 + g = g for infinite g, so only finite exponents shift down
    if (t.exp.is_finite()) {
      out.push_back(Ordinal::Term{Ordinal(BigNat(t.exp.finite_value() - 1)), t.coeff});
    } else {
      out.push_back(t);
    }
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal nat_minus(const Ordinal& b, const Ordinal& a) {
  if (a >= b) return Ordinal();
  // a < b: positions agree from the top until the first exponent where b's
  // coefficient exceeds a's; fill that deficiency exactly and recurse on the
  // parts strictly below it.
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (true) {
    assert(ib != eb);
    assert(ia == ea || !(ib->exp < ia->exp));  // a-only exponent above would mean a > b
    if (ia != ea && ia->exp == ib->exp && ia->coeff == ib->coeff) {
      ++ia;
      ++ib;
      continue;
    }
    BigNat have = 0;
    if (ia != ea && ia->exp == ib->exp) {
      have = ia->coeff;
      ++ia;
    }
    assert(have < ib->coeff);
    Ordinal::Terms out;
    out.push_back(Ordinal::Term{ib->exp, ib->coeff - have});
    ++ib;
    const Ordinal rest = nat_minus(Ordinal::from_terms(Ordinal::Terms(ib, eb)),
                                   Ordinal::from_terms(Ordinal::Terms(ia, ea)));
    out.insert(out.end(), rest.terms().begin(), rest.terms().end());
    return Ordinal::from_terms(std::move(out));
  }
}

namespace {

BigNat ceil_div(const BigNat& p, const BigNat& m) { return (p + m - 1) / m; }

Ordinal min_cofactor_rec(const Ordinal& h, const Ordinal& o) {
  if (o.is_zero()) return Ordinal();
  if (h >= o) return Ordinal(BigNat(1));
  const Ordinal& a = h.leading_exp();
  const BigNat& m = h.leading_coeff();
  const Ordinal& b1 = o.leading_exp();
  const BigNat& p1 = o.leading_coeff();
  const Ordinal estar = nat_minus(b1, a);
  if (nat_sum(a, estar) > b1) return omega_pow(estar);
  const BigNat k1 = ceil_div(p1, m);
  if (m * k1 > p1) return Ordinal::omega_power(estar, k1);
  // exact division at the leading position: either overshoot the coefficient
  // by one, or keep it exact and cover the rest of o below b1.
  const Ordinal c1 = Ordinal::omega_power(estar, k1 + 1);
  const Ordinal cross = nat_prod(h.tail(), Ordinal::omega_power(estar, k1));
  const Ordinal rest = nat_minus(o.tail(), cross);
  const Ordinal c2 = add(Ordinal::omega_power(estar, k1), min_cofactor_rec(h, rest));
  return std::min(c1, c2);
}

}  // namespace

Ordinal min_natural_cofactor(const Ordinal& h, const Ordinal& o) {
  if (h.is_zero()) throw std::invalid_argument("min_natural_cofactor: h must be >= 1");
  Ordinal xi = min_cofactor_rec(h, o);
  // sanity: xi works, and xi - 1 does not when xi is a successor
  if (nat_prod(h, xi) < o) throw std::logic_error("min_natural_cofactor: result too small");
  if (xi.is_successor() && !xi.is_zero() && nat_prod(h, xi.predecessor()) >= o)
    throw std::logic_error("min_natural_cofactor: result not minimal");
  return xi;
}

}  // namespace wqo
