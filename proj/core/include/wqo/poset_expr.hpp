#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wqo/ordinal.hpp"

namespace wqo {

/// Expression denoting a WPO built from base posets:
///   Ord(a) | Antichain(n) | Rado | LexSum(list) (sum along a finite chain)
///   | DisjointSum(list) | DirectProd(p, q) (copies of p along q)
///   | CartProd(list, >= 2 factors) | Multiset(p) | Seq(p) | Tree(p)
/// Every constructor preserves the WPO property.  Immutable value type.
class PosetExpr {
 public:
  enum class Kind {
    ordinal,
    antichain,
    rado,
    lex_sum,
    disjoint_sum,
    direct_prod,
    cart_prod,
    multiset,
    seq,
    tree,
  };

  static PosetExpr ord(Ordinal a);
  static PosetExpr antichain(std::uint64_t n);
  static PosetExpr rado();
  static PosetExpr lex_sum(std::vector<PosetExpr> parts);
  static PosetExpr disjoint_sum(std::vector<PosetExpr> parts);
  static PosetExpr direct_prod(PosetExpr p, PosetExpr q);
  // throws std::invalid_argument with fewer than two factors
  static PosetExpr cart_prod(std::vector<PosetExpr> factors);
  static PosetExpr multiset(PosetExpr p);
  static PosetExpr seq(PosetExpr p);
  static PosetExpr tree(PosetExpr p);

  Kind kind() const { return kind_; }
  const Ordinal& ordinal_value() const { return ord_; }      // kind == ordinal
  std::uint64_t antichain_size() const { return n_; }        // kind == antichain
  const std::vector<PosetExpr>& children() const { return children_; }

  bool operator==(const PosetExpr& rhs) const;

 private:
  Kind kind_ = Kind::ordinal;
  Ordinal ord_;
  std::uint64_t n_ = 0;
  std::vector<PosetExpr> children_;
};

// The denoted poset when the expression is just an ordinal: Ord(a),
// Antichain(0) and Antichain(1).
std::optional<Ordinal> as_ordinal(const PosetExpr& e);

// Grammar (lowest to highest precedence: x, ++, U, .):
//   expr := 'A' nat | 'Rado' | ordinal | 'M(' expr ')' | 'Seq(' expr ')'
//         | 'Tree(' expr ')' | expr '++' expr | expr 'U' expr
//         | expr '.' expr | expr 'x' expr | '(' expr ')'
// 'x', '++' and 'U' are n-ary.
PosetExpr parse_expr(std::string_view text);
std::string to_text(const PosetExpr& e);

}  // namespace wqo
