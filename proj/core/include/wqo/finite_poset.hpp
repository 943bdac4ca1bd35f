#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace wqo {

/// Explicit finite poset: element count plus the full <= relation.
/// Reflexivity, antisymmetry and transitivity are checked on construction.
class FinitePoset {
 public:
  FinitePoset() = default;
  // leq as a dense row-major matrix; throws std::invalid_argument unless it
  // is a partial order.
  FinitePoset(int n, std::vector<bool> rel);

  static FinitePoset chain(int n);
  static FinitePoset antichain(int n);

  int size() const { return n_; }
  bool leq(int i, int j) const { return leq_[static_cast<std::size_t>(i) * n_ + j]; }
  bool less(int i, int j) const { return i != j && leq(i, j); }
  bool incomparable(int i, int j) const { return !leq(i, j) && !leq(j, i); }

  // induced subposet on the given elements (indices remapped in order)
  FinitePoset restrict(const std::vector<int>& keep) const;

 private:
  int n_ = 0;
  std::vector<bool> leq_;
};

// -- ranks via the method of residuals --------------------------------------
//
// rank(S) = max over x in S of rank(residual of S at x) + 1, rank({}) = 0,
// with the residual keeping the elements incomparable to x (width), strictly
// below x (height), or not >= x (maximal order type).  Memoised on the
// carrier set.  Width and motype enforce a size cap (their recursion is
// exponential); height's residuals nest, so it reduces to a longest-path
// computation and has no cap.

std::uint64_t width_rank(const FinitePoset& p, int max_elements = 22);
std::uint64_t height_rank(const FinitePoset& p);
std::uint64_t motype_rank(const FinitePoset& p, int max_elements = 22);

// Height of the poset of non-empty antichains ordered by reverse inclusion.
// Chains of antichains shrink one element per step, so this is the maximum
// antichain cardinality; computed by exhaustive antichain enumeration.
std::uint64_t antichain_rank(const FinitePoset& p, int max_elements = 22);

// Maximum antichain size via a minimum chain cover (bipartite matching);
// polynomial, usable on posets too large for the rank recursions.
std::uint64_t max_antichain_size(const FinitePoset& p);

// Longest chain, computed by antichain layering (repeatedly removing the
// minimal elements); equals height_rank for every finite poset.
std::uint64_t longest_chain(const FinitePoset& p);

// Longest inclusion chain of downward-closed sets, the empty set included.
std::uint64_t downset_height(const FinitePoset& p, int max_elements = 20);

// Every linear extension of a finite poset enumerates all of its elements.
std::uint64_t max_linearisation(const FinitePoset& p);

FinitePoset reverse(const FinitePoset& p);
// true when aug has the same carrier and its order contains base's
bool is_augmentation(const FinitePoset& base, const FinitePoset& aug);

// -- exchange formats --------------------------------------------------------

enum class RelationEncoding { full, covers };

// {"n": k, "leq": [[i,j], ...]} with reflexive pairs omitted
nlohmann::json poset_to_json(const FinitePoset& p, RelationEncoding enc = RelationEncoding::full);
FinitePoset poset_from_json(const nlohmann::json& j, RelationEncoding enc = RelationEncoding::full);

// Hasse diagram in DOT format
std::string poset_to_dot(const FinitePoset& p, const std::string& name = "poset");

}  // namespace wqo
