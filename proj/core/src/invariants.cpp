#include "wqo/invariants.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "wqo/finite_poset.hpp"
#include "wqo/ordinal_text.hpp"
#include "wqo/realize.hpp"

namespace wqo {

// -- opaque terms --------------------------------------------------------------

OpaqueTerm OpaqueTerm::leaf(Ordinal value) {
  OpaqueTerm t;
  t.lo_ = value;
  t.hi_ = std::move(value);
  return t;
}

OpaqueTerm OpaqueTerm::interval(Ordinal lo, Ordinal hi) {
  OpaqueTerm t;
  t.lo_ = std::move(lo);
  t.hi_ = std::move(hi);
  return t;
}

OpaqueTerm OpaqueTerm::node(std::string op, std::vector<OpaqueTerm> args) {
  OpaqueTerm t;
  t.op_ = std::move(op);
  t.args_ = std::move(args);
  return t;
}

OpaqueTerm OpaqueTerm::theta(OpaqueTerm arg) { return node("theta", {std::move(arg)}); }

bool OpaqueTerm::is_theta_leaf() const {
  return op_ == "theta" && args_.size() == 1 && args_[0].is_exact_leaf();
}

std::string OpaqueTerm::render() const {
  if (is_leaf()) {
    if (lo_ == hi_) return to_text(lo_);
    return "[" + to_text(lo_) + ", " + to_text(hi_) + "]";
  }
  if (op_ == "theta") return "theta(w^w * " + args_[0].render() + ")";
  std::string out = op_ + "(";
  for (std::size_t i = 0; i < args_.size(); ++i) {
    if (i) out += ", ";
    out += args_[i].render();
  }
  return out + ")";
}

bool OpaqueTerm::operator==(const OpaqueTerm& rhs) const {
  return op_ == rhs.op_ && lo_ == rhs.lo_ && hi_ == rhs.hi_ && args_ == rhs.args_;
}

// -- invariant values ----------------------------------------------------------

InvariantValue InvariantValue::exact(Ordinal a) {
  InvariantValue v;
  v.kind_ = Kind::exact;
  v.lo_ = a;
  v.hi_ = std::move(a);
  return v;
}

InvariantValue InvariantValue::range(Ordinal lo, Ordinal hi) {
  if (hi < lo) throw std::invalid_argument("invariant range: lo > hi");
  if (lo == hi) return exact(std::move(lo));
  InvariantValue v;
  v.kind_ = Kind::range;
  v.lo_ = std::move(lo);
  v.hi_ = std::move(hi);
  return v;
}

InvariantValue InvariantValue::opaque(OpaqueTerm t) {
  InvariantValue v;
  v.kind_ = Kind::opaque;
  v.term_.push_back(std::move(t));
  return v;
}

const Ordinal& InvariantValue::exact_value() const {
  assert(is_exact());
  return lo_;
}

const Ordinal& InvariantValue::lo() const {
  assert(!is_opaque());
  return lo_;
}

const Ordinal& InvariantValue::hi() const {
  assert(!is_opaque());
  return hi_;
}

const OpaqueTerm& InvariantValue::term() const {
  assert(is_opaque());
  return term_[0];
}

bool InvariantValue::operator==(const InvariantValue& rhs) const {
  return kind_ == rhs.kind_ && lo_ == rhs.lo_ && hi_ == rhs.hi_ && term_ == rhs.term_;
}

namespace {

const Ordinal kZero;
const Ordinal kOne{BigNat(1)};

InvariantValue exact0() { return InvariantValue::exact(kZero); }

OpaqueTerm term_of(const InvariantValue& v) {
  switch (v.kind()) {
    case InvariantValue::Kind::exact: return OpaqueTerm::leaf(v.exact_value());
    case InvariantValue::Kind::range: return OpaqueTerm::interval(v.lo(), v.hi());
    case InvariantValue::Kind::opaque: return v.term();
  }
  throw std::logic_error("unreachable");
}

const Ordinal& expect_exact(const InvariantValue& v, const char* what) {
  if (!v.is_exact()) throw std::logic_error(std::string(what) + ": expected an exact value");
  return v.exact_value();
}

// lift a monotone binary operation to exact/range values; opaque operands
// stay symbolic except for sound absorptions into the opaque side
InvariantValue lift(const char* opname, Ordinal (*f)(const Ordinal&, const Ordinal&),
                    const InvariantValue& a, const InvariantValue& b) {
  if (!a.is_opaque() && !b.is_opaque())
    return InvariantValue::range(f(a.lo(), b.lo()), f(a.hi(), b.hi()));

  const std::string_view op = opname;
  // opaque values all exceed every representable ordinal, which makes a few
  // mixed combinations collapse
  if (a.is_exact() && b.is_opaque()) {
    const Ordinal& c = a.exact_value();
    if (op == "osum" || op == "sup") return b;                      // c + V = V, max(c, V) = V
    if (op == "oprod") return c.is_zero() ? exact0() : b;           // c * V = V for c >= 1
    if (op == "natsum" && c.is_zero()) return b;
    if (op == "natprod" && c.is_zero()) return exact0();
    if (op == "natprod" && c == kOne) return b;
    if (op == "heis" && c.is_zero()) return exact0();
    if (op == "heis" && c == kOne) return b;                        // 1 (.) b = b
  }
  if (a.is_opaque() && b.is_exact()) {
    const Ordinal& c = b.exact_value();
    if (op == "sup") return a;
    if (c.is_zero()) {
      if (op == "osum" || op == "natsum") return a;
      if (op == "oprod" || op == "natprod" || op == "heis") return exact0();
    }
    if (c == kOne && (op == "oprod" || op == "natprod" || op == "heis")) return a;
  }
  if (a.is_opaque() && b.is_opaque() && op == "sup" && a == b) return a;
  return InvariantValue::opaque(
      OpaqueTerm::node(std::string(opname), {term_of(a), term_of(b)}));
}

Ordinal ord_max(const Ordinal& a, const Ordinal& b) { return std::max(a, b); }

InvariantValue iv_ordsum(const InvariantValue& a, const InvariantValue& b) {
  return lift("osum", add, a, b);
}
InvariantValue iv_natsum(const InvariantValue& a, const InvariantValue& b) {
  return lift("natsum", nat_sum, a, b);
}
InvariantValue iv_ordprod(const InvariantValue& a, const InvariantValue& b) {
  return lift("oprod", mul, a, b);
}
InvariantValue iv_natprod(const InvariantValue& a, const InvariantValue& b) {
  return lift("natprod", nat_prod, a, b);
}
InvariantValue iv_sup(const InvariantValue& a, const InvariantValue& b) {
  return lift("sup", ord_max, a, b);
}
InvariantValue iv_heis(const InvariantValue& a, const InvariantValue& b) {
  return lift("heis", heisenberg, a, b);
}
InvariantValue iv_hsup(const InvariantValue& a, const InvariantValue& b) {
  return lift("hsup", hsup, a, b);
}

bool is_exact_value(const InvariantValue& v, const Ordinal& a) {
  return v.is_exact() && v.exact_value() == a;
}

bool denotes_empty(const InvariantTriple& t) { return is_exact_value(t.o, kZero); }

// -- finite Cartesian widths -----------------------------------------------

BigNat binomial(const BigNat& x, unsigned k) {
  if (x < 0) return 0;
  BigNat num = 1;
  for (unsigned t = 0; t < k; ++t) {
    if (x < t) return 0;
    num *= x - t;
  }
  BigNat den = 1;
  for (unsigned t = 2; t <= k; ++t) den *= t;
  return num / den;
}

// Maximum antichain of a product of finite chains: products of chains are
// rank-unimodal with the maximum on the middle layer, so count the tuples
// with coordinate sum floor(sum(n_i - 1) / 2).
BigNat grid_middle_layer(const std::vector<BigNat>& sizes) {
  const unsigned k = static_cast<unsigned>(sizes.size());
  BigNat total_span = 0;
  for (const auto& s : sizes) total_span += s - 1;
  const BigNat m = total_span / 2;
  // coefficient of z^m in prod_i (1 - z^{n_i}) / (1 - z)^k
  BigNat total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
    BigNat shift = 0;
    for (unsigned i = 0; i < k; ++i)
      if ((mask >> i) & 1) shift += sizes[i];
    if (m < shift) continue;
    const BigNat c = binomial(m - shift + k - 1, k - 1);
    if (__builtin_popcountll(mask) % 2 == 0)
      total += c;
    else
      total -= c;
  }
  return total;
}

// exact widths of a product of w-power ordinals, where known
std::optional<Ordinal> power_product_width(const std::vector<Ordinal>& powers) {
  if (powers.size() == 1) return kOne;
  if (powers.size() == 2) return wprod2(powers[0], powers[1]);
  if (powers.size() == 3 && powers[0] == Ordinal::omega() && powers[1] == Ordinal::omega() &&
      powers[2] == Ordinal::omega())
    return mul(Ordinal::omega(), Ordinal::omega());
  return std::nullopt;
}

}  // namespace

// -- ordinal-level formulas -----------------------------------------------

Ordinal h_star(const Ordinal& h) {
  if (h.is_zero()) return h;
  if (!h.is_finite() && is_additively_principal(h)) return h;
  return mul(h, Ordinal::omega());
}

namespace {

// w(w*a' x w*b') for quotients a', b' >= 1: the limit-times-limit recursion
// with base w(w x w*b') = w*b'
Ordinal wlimq(const Ordinal& qa, const Ordinal& qb) {
  if (qa == kOne) return mul(Ordinal::omega(), qb);
  if (qb == kOne) return mul(Ordinal::omega(), qa);
  const Ordinal& a0 = qa.leading_exp();
  const Ordinal& b0 = qb.leading_exp();
  const BigNat& m0 = qa.leading_coeff();
  const BigNat& n0 = qb.leading_coeff();
  const Ordinal rho = qa.tail();
  const Ordinal sigma = qb.tail();
  Ordinal acc = Ordinal::omega_power(add(kOne, nat_sum(a0, b0)), m0 + n0 - 1);
  if (!sigma.is_zero()) acc = nat_sum(acc, wlimq(omega_pow(a0), sigma));
  if (!rho.is_zero()) acc = nat_sum(acc, wlimq(omega_pow(b0), rho));
  return acc;
}

}  // namespace

Ordinal wprod2(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  if (a.is_finite() || b.is_finite()) return std::min(a, b);
  // both infinite: successor rule peels the finite tails, then the limit
  // parts go through the recursion on their w-quotients
  const Ordinal base = wlimq(omega_quotient(a.limit_part()), omega_quotient(b.limit_part()));
  return add(base, Ordinal(a.finite_part() + b.finite_part()));
}

bool is_transferable(const PosetExpr& e) {
  auto power = [](const PosetExpr& f) {
    const auto a = as_ordinal(f);
    return a && !a->is_finite() && is_additively_principal(*a);
  };
  if (power(e)) return true;
  if (e.kind() != PosetExpr::Kind::cart_prod) return false;
  for (const auto& f : e.children())
    if (!power(f)) return false;
  return true;
}

InvariantValue width_cart(const std::vector<InvariantTriple>& factors,
                          const std::vector<PosetExpr>& exprs) {
  if (factors.size() != exprs.size() || factors.size() < 2)
    throw std::invalid_argument("width_cart: needs >= 2 factors with their expressions");

  // singleton factors are neutral for the product order
  std::vector<InvariantTriple> ts;
  std::vector<PosetExpr> es;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (is_exact_value(factors[i].o, kOne)) continue;
    ts.push_back(factors[i]);
    es.push_back(exprs[i]);
  }
  if (ts.empty()) return InvariantValue::exact(kOne);
  if (ts.size() == 1) return ts[0].w;

  // factors outside the representable universe stay symbolic
  for (const auto& t : ts)
    if (t.o.is_opaque() || t.w.is_opaque()) {
      std::vector<OpaqueTerm> args;
      for (const auto& f : ts) args.push_back(term_of(f.w));
      return InvariantValue::opaque(OpaqueTerm::node("w_cart", std::move(args)));
    }

  std::vector<std::optional<Ordinal>> ords;
  bool all_ord = true;
  for (const auto& e : es) {
    ords.push_back(as_ordinal(e));
    all_ord = all_ord && ords.back().has_value();
  }

  if (all_ord && ts.size() == 2) return InvariantValue::exact(wprod2(*ords[0], *ords[1]));
  if (all_ord && ts.size() == 3 && *ords[0] == Ordinal::omega() &&
      *ords[1] == Ordinal::omega() && *ords[2] == Ordinal::omega())
    return InvariantValue::exact(mul(Ordinal::omega(), Ordinal::omega()));

  // finite products have an exact width: the maximum antichain
  bool all_finite = true;
  for (const auto& t : ts)
    all_finite = all_finite && t.o.is_exact() && t.o.exact_value().is_finite();
  if (all_finite) {
    if (all_ord && ts.size() <= 20) {
      std::vector<BigNat> sizes;
      for (const auto& a : ords) sizes.push_back(a->finite_value());
      return InvariantValue::exact(Ordinal(grid_middle_layer(sizes)));
    }
    BigNat count = 1;
    for (const auto& t : ts) count *= t.o.exact_value().finite_value();
    if (count <= 512) {
      RealizeBounds b;
      b.max_elements = 512;
      const Realization r = realize(PosetExpr::cart_prod(es), b);
      return InvariantValue::exact(Ordinal(BigNat(max_antichain_size(r.poset))));
    }
  }

  // transferable part (w-power ordinal factors) with one leftover factor
  std::vector<Ordinal> powers;
  std::vector<Ordinal> others;
  if (all_ord) {
    for (const auto& a : ords) {
      if (!a->is_finite() && is_additively_principal(*a))
        powers.push_back(*a);
      else
        others.push_back(*a);
    }
    if (others.size() == 1 && others[0].is_finite() && !powers.empty()) {
      const auto wp = power_product_width(powers);
      if (wp && is_additively_principal(*wp))
        return InvariantValue::exact(mul(*wp, others[0]));
    }
  }

  // general case: best certified lower bound against the order type above
  std::vector<Ordinal> lows;
  for (const auto& t : ts) lows.push_back(t.w.is_opaque() ? kOne : t.w.lo());
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j)
      if (ords[i] && ords[j]) lows.push_back(wprod2(*ords[i], *ords[j]));
  int omegas = 0;
  for (const auto& a : ords)
    if (a && *a == Ordinal::omega()) ++omegas;
  if (omegas >= 3) lows.push_back(mul(Ordinal::omega(), Ordinal::omega()));
  if (all_ord && others.size() == 1 && !powers.empty()) {
    const auto wp = power_product_width(powers);
    if (wp) lows.push_back(mul(*wp, others[0]));
  }
  if (!all_ord) {
    // replace every factor by a chain of its height: the product of those
    // chains embeds, so its width is a certified lower bound
    std::vector<InvariantTriple> hts;
    std::vector<PosetExpr> hes;
    for (const auto& t : ts) {
      const Ordinal& h = expect_exact(t.h, "width_cart");
      hts.push_back(InvariantTriple{InvariantValue::exact(h), InvariantValue::exact(h),
                                    InvariantValue::exact(kOne)});
      hes.push_back(PosetExpr::ord(h));
    }
    const InvariantValue reduced = width_cart(hts, hes);
    if (reduced.is_exact()) lows.push_back(reduced.exact_value());
  }
  Ordinal lower = kOne;
  for (const auto& l : lows) lower = std::max(lower, l);

  Ordinal upper = kOne;
  for (const auto& t : ts) upper = nat_prod(upper, expect_exact(t.o, "width_cart"));
  return InvariantValue::range(std::move(lower), std::move(upper));
}

InvariantTriple kt_refine(const InvariantTriple& t) {
  if (!t.w.is_range()) return t;
  Ordinal lo = t.w.lo(), hi = t.w.hi();
  InvariantTriple out = t;
  if (t.o.is_exact()) {
    const Ordinal& o = t.o.exact_value();
    hi = std::min(hi, o);
    if (t.h.is_exact() && !t.h.exact_value().is_zero())
      lo = std::max(lo, min_natural_cofactor(t.h.exact_value(), o));
    if (is_multiplicatively_principal(o) && t.h.is_exact() && t.h.exact_value() < o) {
      out.w = InvariantValue::exact(o);
      return out;
    }
  }
  out.w = InvariantValue::range(std::move(lo), std::move(hi));
  return out;
}

// -- the dispatch ---------------------------------------------------------

namespace {

InvariantTriple triple_exact(Ordinal o, Ordinal h, Ordinal w) {
  return InvariantTriple{InvariantValue::exact(std::move(o)), InvariantValue::exact(std::move(h)),
                         InvariantValue::exact(std::move(w))};
}

InvariantTriple zeros() { return triple_exact(kZero, kZero, kZero); }
InvariantTriple singleton() { return triple_exact(kOne, kOne, kOne); }

bool is_epsilon_plus_finite(const Ordinal& a) {
  // epsilon numbers satisfy w^e = e; no CNF value below epsilon_0 does, so
  // this cannot trigger inside the representable universe
  const Ordinal lim = a.limit_part();
  return !lim.is_zero() && omega_pow(lim) == lim;
}

InvariantValue multiset_o(const InvariantValue& base_o) {
  if (base_o.is_opaque())
    return InvariantValue::opaque(OpaqueTerm::node("o_multiset", {base_o.term()}));
  // the hat adjustment only moves epsilon-number exponents, and there are
  // none below epsilon_0
  return InvariantValue::exact(omega_pow(expect_exact(base_o, "multiset")));
}

InvariantValue seq_o(const InvariantValue& base_o) {
  if (base_o.is_opaque())
    return InvariantValue::opaque(OpaqueTerm::node("o_seq", {base_o.term()}));
  const Ordinal& a = expect_exact(base_o, "seq");
  if (a.is_finite())
    return InvariantValue::exact(omega_pow(omega_pow(Ordinal(a.finite_value() - 1))));
  if (is_epsilon_plus_finite(a))
    return InvariantValue::exact(omega_pow(omega_pow(add(a, kOne))));
  return InvariantValue::exact(omega_pow(omega_pow(a)));
}

InvariantTriple invariants_raw(const PosetExpr& e) {
  using Kind = PosetExpr::Kind;
  switch (e.kind()) {
    case Kind::ordinal: {
      const Ordinal& a = e.ordinal_value();
      if (a.is_zero()) return zeros();
      return triple_exact(a, a, kOne);
    }
    case Kind::antichain: {
      if (e.antichain_size() == 0) return zeros();
      const Ordinal n{BigNat(e.antichain_size())};
      return triple_exact(n, kOne, n);
    }
    case Kind::rado: {
      const Ordinal w2 = mul(Ordinal::omega(), Ordinal::omega());
      return triple_exact(w2, Ordinal::omega(), Ordinal::omega());
    }
    case Kind::lex_sum: {
      InvariantTriple acc = zeros();
      for (const auto& c : e.children()) {
        const InvariantTriple t = invariants(c);
        acc.o = iv_ordsum(acc.o, t.o);
        acc.h = iv_ordsum(acc.h, t.h);
        acc.w = iv_sup(acc.w, t.w);
      }
      return acc;
    }
    case Kind::disjoint_sum: {
      InvariantTriple acc = zeros();
      for (const auto& c : e.children()) {
        const InvariantTriple t = invariants(c);
        acc.o = iv_natsum(acc.o, t.o);
        acc.h = iv_sup(acc.h, t.h);
        acc.w = iv_natsum(acc.w, t.w);
      }
      return acc;
    }
    case Kind::direct_prod: {
      const InvariantTriple p = invariants(e.children()[0]);
      const InvariantTriple q = invariants(e.children()[1]);
      return InvariantTriple{iv_ordprod(p.o, q.o), iv_ordprod(p.h, q.h), iv_heis(p.w, q.w)};
    }
    case Kind::cart_prod: {
      std::vector<InvariantTriple> ts;
      for (const auto& c : e.children()) ts.push_back(invariants(c));
      for (const auto& t : ts)
        if (denotes_empty(t)) return zeros();
      InvariantTriple out;
      out.o = InvariantValue::exact(kOne);
      out.h = InvariantValue::exact(kOne);
      for (const auto& t : ts) {
        out.o = iv_natprod(out.o, t.o);
        out.h = iv_hsup(out.h, t.h);
      }
      out.w = width_cart(ts, e.children());
      return out;
    }
    case Kind::multiset: {
      const InvariantTriple t = invariants(e.children()[0]);
      if (denotes_empty(t)) return singleton();  // only the empty multiset
      InvariantTriple out;
      out.o = multiset_o(t.o);
      out.h = InvariantValue::exact(h_star(expect_exact(t.h, "multiset")));
      if (t.o.is_exact()) {
        const Ordinal& a = t.o.exact_value();
        if (a == kOne) {
          out.w = InvariantValue::exact(kOne);  // M(1) is the chain w
        } else if (is_additively_principal(a)) {
          out.w = out.o;
        } else if (e.children()[0].kind() == Kind::antichain) {
          // multisets over an n-antichain are exactly the product of n
          // copies of w
          const std::uint64_t n = e.children()[0].antichain_size();
          std::vector<InvariantTriple> fs(
              n, triple_exact(Ordinal::omega(), Ordinal::omega(), kOne));
          std::vector<PosetExpr> es(n, PosetExpr::ord(Ordinal::omega()));
          out.w = width_cart(fs, es);
        } else {
          out.w = InvariantValue::range(kOne, omega_pow(a));
        }
      } else if (t.o.term().op() == "theta") {
        // collapsing-function values are multiplicatively principal, so the
        // width equals the maximal order type
        out.w = out.o;
      } else {
        out.w = InvariantValue::opaque(OpaqueTerm::node("w_multiset", {t.o.term()}));
      }
      return out;
    }
    case Kind::seq: {
      const InvariantTriple t = invariants(e.children()[0]);
      if (denotes_empty(t)) return singleton();  // only the empty sequence
      InvariantTriple out;
      out.o = seq_o(t.o);
      out.h = InvariantValue::exact(h_star(expect_exact(t.h, "seq")));
      if (t.o.is_exact() && t.o.exact_value() == kOne) {
        out.w = InvariantValue::exact(kOne);  // Seq(1) is the chain w
      } else {
        out.w = out.o;  // width equals the order type once o > 1
      }
      return out;
    }
    case Kind::tree: {
      const InvariantTriple t = invariants(e.children()[0]);
      if (denotes_empty(t)) return zeros();  // no trees over an empty label set
      InvariantTriple out;
      out.o = InvariantValue::opaque(OpaqueTerm::theta(term_of(t.o)));
      out.h = InvariantValue::exact(h_star(expect_exact(t.h, "tree")));
      out.w = out.o;
      return out;
    }
  }
  throw std::logic_error("invariants: unreachable");
}

void check_consistency(const InvariantTriple& t, const PosetExpr& e) {
  if (!(t.o.is_exact() && t.h.is_exact() && t.w.is_exact())) return;
  const Ordinal& o = t.o.exact_value();
  const Ordinal& h = t.h.exact_value();
  const Ordinal& w = t.w.exact_value();
  if (w <= o && o <= nat_prod(h, w)) return;
  throw std::logic_error("invariants: inconsistent triple for '" + to_text(e) + "'");
}

}  // namespace

InvariantTriple invariants(const PosetExpr& e) {
  InvariantTriple t = kt_refine(invariants_raw(e));
  check_consistency(t, e);
  return t;
}

PosetExpr construct_poset_with_width(const Ordinal& a) {
  std::vector<PosetExpr> parts;
  for (const auto& term : a.terms()) {
    if (term.exp.is_zero()) {
      if (term.coeff > std::numeric_limits<std::uint64_t>::max())
        throw std::invalid_argument("construct_poset_with_width: coefficient too large");
      parts.push_back(PosetExpr::antichain(term.coeff.convert_to<std::uint64_t>()));
      continue;
    }
    // each w^g x w block has width w^g; coefficients fold into the first
    // factor once listing the copies would get unwieldy
    if (term.coeff <= 32) {
      const std::uint64_t copies = term.coeff.convert_to<std::uint64_t>();
      for (std::uint64_t i = 0; i < copies; ++i)
        parts.push_back(PosetExpr::cart_prod(
            {PosetExpr::ord(omega_pow(term.exp)), PosetExpr::ord(Ordinal::omega())}));
    } else {
      parts.push_back(PosetExpr::cart_prod(
          {PosetExpr::ord(Ordinal::omega_power(term.exp, term.coeff)),
           PosetExpr::ord(Ordinal::omega())}));
    }
  }
  PosetExpr result = parts.size() == 1 ? std::move(parts[0])
                                       : PosetExpr::disjoint_sum(std::move(parts));
  const InvariantValue w = invariants(result).w;
  if (!is_exact_value(w, a))
    throw std::logic_error("construct_poset_with_width: self-check failed for '" + to_text(a) +
                           "'");
  return result;
}

// -- rendering --------------------------------------------------------------

std::string to_text(const InvariantValue& v) {
  switch (v.kind()) {
    case InvariantValue::Kind::exact: return to_text(v.exact_value());
    case InvariantValue::Kind::range: return "[" + to_text(v.lo()) + ", " + to_text(v.hi()) + "]";
    case InvariantValue::Kind::opaque: return v.term().render();
  }
  throw std::logic_error("unreachable");
}

std::string to_text(const InvariantTriple& t) {
  return "{o: " + to_text(t.o) + ", h: " + to_text(t.h) + ", w: " + to_text(t.w) + "}";
}

nlohmann::json invariant_to_json(const InvariantValue& v) {
  switch (v.kind()) {
    case InvariantValue::Kind::exact: return {{"exact", ordinal_to_json(v.exact_value())}};
    case InvariantValue::Kind::range:
      return {{"range", {ordinal_to_json(v.lo()), ordinal_to_json(v.hi())}}};
    case InvariantValue::Kind::opaque:
      if (v.term().is_theta_leaf())
        return {{"theta_of", ordinal_to_json(v.term().args()[0].lo())}};
      return {{"opaque", v.term().render()}};
  }
  throw std::logic_error("unreachable");
}

nlohmann::json triple_to_json(const InvariantTriple& t) {
  return {{"o", invariant_to_json(t.o)},
          {"h", invariant_to_json(t.h)},
          {"w", invariant_to_json(t.w)}};
}

}  // namespace wqo
