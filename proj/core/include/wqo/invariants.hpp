#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wqo/ordinal.hpp"
#include "wqo/poset_expr.hpp"

namespace wqo {

/// Uninterpreted symbolic ordinal term, used for values that leave the
/// representable universe (the collapsing-function values attached to
/// Tree(...)).  Terms are carried structurally and support only equality;
/// no arithmetic is ever performed on them.
class OpaqueTerm {
 public:
  static OpaqueTerm leaf(Ordinal value);
  static OpaqueTerm interval(Ordinal lo, Ordinal hi);
  static OpaqueTerm node(std::string op, std::vector<OpaqueTerm> args);
  static OpaqueTerm theta(OpaqueTerm arg);  // theta(w^w * arg)

  bool is_leaf() const { return op_.empty(); }
  bool is_exact_leaf() const { return is_leaf() && lo_ == hi_; }
  bool is_theta_leaf() const;  // theta applied to a single exact leaf
  const std::string& op() const { return op_; }
  const std::vector<OpaqueTerm>& args() const { return args_; }
  const Ordinal& lo() const { return lo_; }
  const Ordinal& hi() const { return hi_; }

  std::string render() const;
  bool operator==(const OpaqueTerm& rhs) const;

 private:
  std::string op_;
  std::vector<OpaqueTerm> args_;
  Ordinal lo_, hi_;
};

/// Exact ordinal, closed interval of ordinals, or an opaque symbolic term.
class InvariantValue {
 public:
  enum class Kind { exact, range, opaque };

  InvariantValue() : kind_(Kind::exact) {}
  static InvariantValue exact(Ordinal a);
  // lo == hi collapses to exact; throws when lo > hi
  static InvariantValue range(Ordinal lo, Ordinal hi);
  static InvariantValue opaque(OpaqueTerm t);

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ == Kind::exact; }
  bool is_range() const { return kind_ == Kind::range; }
  bool is_opaque() const { return kind_ == Kind::opaque; }
  const Ordinal& exact_value() const;
  const Ordinal& lo() const;
  const Ordinal& hi() const;
  const OpaqueTerm& term() const;

  bool operator==(const InvariantValue& rhs) const;

 private:
  Kind kind_;
  Ordinal lo_, hi_;
  std::vector<OpaqueTerm> term_;  // holds one element when opaque
};

struct InvariantTriple {
  InvariantValue o, h, w;
  bool operator==(const InvariantTriple&) const = default;
};

// Maximal order type, height and width of the denoted WPO.  Total: every
// expression gets a triple.  Components are exact wherever an exact rule
// exists, interval-valued for the open Cartesian-product cases, opaque for
// the maximal order type and width of Tree(...).
InvariantTriple invariants(const PosetExpr& e);

// h itself when additively principal >= w, otherwise h * w; h_star(0) = 0.
Ordinal h_star(const Ordinal& h);

// Exact width of the Cartesian product of two ordinals: min for a finite
// factor, the successor rule for finite tails, and the limit-times-limit
// recursion on the w-quotients.  Commutative.
Ordinal wprod2(const Ordinal& a, const Ordinal& b);

// Exactness ladder for the width of an n-ary Cartesian product.  `factors`
// are the children's invariant triples, `exprs` the children themselves.
InvariantValue width_cart(const std::vector<InvariantTriple>& factors,
                          const std::vector<PosetExpr>& exprs);

// Conservative: true only for w-power ordinals w^g (g >= 1) and Cartesian
// products of such factors.
bool is_transferable(const PosetExpr& e);

// Narrows interval components using w <= o <= h (x) w and the equality
// w = o forced when o is multiplicatively principal and h < o.  Never
// widens; exact and opaque components pass through.
InvariantTriple kt_refine(const InvariantTriple& t);

// An expression whose engine-computed width is exactly a, built from the
// CNF of a out of disjoint sums of w^g x w blocks and an antichain.
// The result is self-checked through invariants().
PosetExpr construct_poset_with_width(const Ordinal& a);

std::string to_text(const InvariantValue& v);
std::string to_text(const InvariantTriple& t);
// {"exact": ord} | {"range": [lo, hi]} | {"theta_of": ord} | {"opaque": str}
nlohmann::json invariant_to_json(const InvariantValue& v);
nlohmann::json triple_to_json(const InvariantTriple& t);

}  // namespace wqo
