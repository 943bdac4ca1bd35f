#pragma once

#include <cstdint>

#include "wqo/finite_poset.hpp"

namespace wqo {

enum class Player { one, two };
enum class GameKind { height, motype, width };

// Two-player budget game on a finite poset.  A position is a budget plus the
// sequence built so far; Player 1 lowers the budget to any smaller value,
// Player 2 answers by extending the sequence with a legal element (strictly
// descending / bad / antichain according to kind) and loses when no element
// is available.  Player 2 wins once the budget is 0.  Solved by exhaustive
// minimax, memoised on (budget, set of legal continuations).
//
// Requires alpha <= |p| + 1 (a larger budget never helps Player 2 on a
// finite poset) and |p| <= 64.
Player winner(const FinitePoset& p, std::uint64_t alpha, GameKind kind);

}  // namespace wqo
