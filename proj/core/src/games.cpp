#include "wqo/games.hpp"

#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace wqo {

Player winner(const FinitePoset& p, std::uint64_t alpha, GameKind kind) {
  const int n = p.size();
  if (n > 64) throw std::invalid_argument("winner: poset too large for the game solver");
  if (alpha > static_cast<std::uint64_t>(n) + 1)
    throw std::invalid_argument("winner: budget exceeds |P| + 1");

  // legal continuations after picking x, mirroring the tree residuals
  std::vector<std::uint64_t> res(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool ok = false;
      switch (kind) {
        case GameKind::height: ok = p.less(y, x); break;
        case GameKind::motype: ok = !p.leq(x, y); break;
        case GameKind::width: ok = p.incomparable(x, y); break;
      }
      if (ok) res[x] |= std::uint64_t(1) << y;
    }

  // memo keyed by (budget, legal set)
  struct PairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
      return std::hash<std::uint64_t>()(k.first * 0x9e3779b97f4a7c15ull ^ k.second);
    }
  };
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, bool, PairHash> table;
  std::function<bool(std::uint64_t, std::uint64_t)> wins =
      [&](std::uint64_t budget, std::uint64_t legal) -> bool {
    if (budget == 0) return true;
    const auto key = std::make_pair(budget, legal);
    auto it = table.find(key);
    if (it != table.end()) return it->second;
    // Player 1 picks any smaller budget; Player 2 must have an answer for
    // every one of them
    bool ok = true;
    for (std::uint64_t next = 0; next < budget && ok; ++next) {
      bool answered = false;
      for (int x = 0; x < n && !answered; ++x)
        if ((legal >> x) & 1) answered = wins(next, legal & res[x]);
      ok = answered;
    }
    table.emplace(key, ok);
    return ok;
  };

  const std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
  return wins(alpha, all) ? Player::two : Player::one;
}

}  // namespace wqo
