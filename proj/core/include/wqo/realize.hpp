#pragma once

#include <cstdint>

#include "wqo/finite_poset.hpp"
#include "wqo/poset_expr.hpp"

namespace wqo {

struct RealizeBounds {
  std::uint64_t omega_cut = 4;   // chain length substituted for w
  std::uint64_t bag_cut = 3;     // maximum multiset/sequence size
  std::uint64_t max_elements = 5000;
};

struct Realization {
  FinitePoset poset;
  bool truncated = false;  // some infinite part was cut to the bounds
};

// Realizes the expression as an explicit poset.  Finite expressions are
// realized exactly; Ord(w) becomes the chain of length omega_cut, Rado is
// cut to coordinates below omega_cut, Multiset/Seq are restricted to bags
// and sequences of size at most bag_cut.  Truncation happens on constructor
// arguments, never on results, so every truncation is an induced subposet
// of the denoted order.  Throws std::invalid_argument for Tree(...) and
// for infinite ordinals other than w, and std::length_error when the result
// would exceed max_elements (the message names the offending subexpression).
Realization realize(const PosetExpr& e, const RealizeBounds& bounds = {});

}  // namespace wqo
