#include "wqo/finite_poset.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace wqo {

namespace {

// carrier sets for the rank recursions; two words cover n <= 128
struct Carrier {
  std::array<std::uint64_t, 2> w{0, 0};

  bool operator==(const Carrier&) const = default;
  bool empty() const { return w[0] == 0 && w[1] == 0; }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
};

struct CarrierHash {
  std::size_t operator()(const Carrier& c) const {
    std::uint64_t h = c.w[0] * 0x9e3779b97f4a7c15ull;
    h ^= c.w[1] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// residual masks per element: residual[x] = elements allowed after x
std::vector<Carrier> residual_masks(const FinitePoset& p,
                                    const std::function<bool(int, int)>& allowed_after) {
  std::vector<Carrier> res(p.size());
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (allowed_after(x, y)) res[x].set(y);
  return res;
}

std::uint64_t rank_by_residuals(const FinitePoset& p, const std::vector<Carrier>& res) {
  std::unordered_map<Carrier, std::uint64_t, CarrierHash> memo;
  std::function<std::uint64_t(const Carrier&)> rank = [&](const Carrier& s) -> std::uint64_t {
    if (s.empty()) return 0;
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    std::uint64_t best = 0;
    for (int x = 0; x < p.size(); ++x) {
      if (!s.test(x)) continue;
      Carrier next;
      next.w[0] = s.w[0] & res[x].w[0];
      next.w[1] = s.w[1] & res[x].w[1];
      best = std::max(best, rank(next) + 1);
    }
    memo.emplace(s, best);
    return best;
  };
  Carrier all;
  for (int i = 0; i < p.size(); ++i) all.set(i);
  return rank(all);
}

void check_cap(const FinitePoset& p, int cap, const char* what) {
  if (p.size() > cap)
    throw std::invalid_argument(std::string(what) + ": poset too large (" +
                                std::to_string(p.size()) + " > " + std::to_string(cap) + ")");
}

}  // namespace

FinitePoset::FinitePoset(int n, std::vector<bool> rel) : n_(n), leq_(std::move(rel)) {
  if (n_ < 0 || leq_.size() != static_cast<std::size_t>(n_) * n_)
    throw std::invalid_argument("poset: relation size does not match element count");
  for (int i = 0; i < n_; ++i)
    if (!leq(i, i)) throw std::invalid_argument("poset: relation not reflexive");
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i != j && leq(i, j) && leq(j, i))
        throw std::invalid_argument("poset: relation not antisymmetric");
      if (leq(i, j))
        for (int k = 0; k < n_; ++k)
          if (leq(j, k) && !leq(i, k))
            throw std::invalid_argument("poset: relation not transitive");
    }
}

FinitePoset FinitePoset::chain(int n) {
  std::vector<bool> leq(static_cast<std::size_t>(n) * n, false);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) leq[static_cast<std::size_t>(i) * n + j] = true;
  return FinitePoset(n, std::move(leq));
}

FinitePoset FinitePoset::antichain(int n) {
  std::vector<bool> leq(static_cast<std::size_t>(n) * n, false);
  for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i) * n + i] = true;
  return FinitePoset(n, std::move(leq));
}

FinitePoset FinitePoset::restrict(const std::vector<int>& keep) const {
  const int m = static_cast<int>(keep.size());
  std::vector<bool> sub(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) sub[static_cast<std::size_t>(i) * m + j] = leq(keep[i], keep[j]);
  return FinitePoset(m, std::move(sub));
}

std::uint64_t width_rank(const FinitePoset& p, int max_elements) {
  check_cap(p, std::min(max_elements, 128), "width_rank");
  return rank_by_residuals(
      p, residual_masks(p, [&](int x, int y) { return p.incomparable(x, y); }));
}

std::uint64_t height_rank(const FinitePoset& p) {
  // the <-residuals nest (P_{<y} subset of P_{<x} for y < x), so the memo key
  // collapses from the carrier set to the last element picked
  std::vector<std::uint64_t> h(p.size(), 0);
  std::function<std::uint64_t(int)> from = [&](int x) -> std::uint64_t {
    if (h[x]) return h[x];
    std::uint64_t best = 0;
    for (int y = 0; y < p.size(); ++y)
      if (p.less(y, x)) best = std::max(best, from(y));
    return h[x] = best + 1;
  };
  std::uint64_t best = 0;
  for (int x = 0; x < p.size(); ++x) best = std::max(best, from(x));
  return best;
}

std::uint64_t motype_rank(const FinitePoset& p, int max_elements) {
  check_cap(p, std::min(max_elements, 128), "motype_rank");
  return rank_by_residuals(p, residual_masks(p, [&](int x, int y) { return !p.leq(x, y); }));
}

namespace {

void enumerate_antichains(const FinitePoset& p, int from, std::vector<int>& current,
                          std::uint64_t& best) {
  best = std::max<std::uint64_t>(best, current.size());
  for (int x = from; x < p.size(); ++x) {
    bool ok = true;
    for (int y : current)
      if (!p.incomparable(x, y)) {
        ok = false;
        break;
      }
    if (ok) {
      current.push_back(x);
      enumerate_antichains(p, x + 1, current, best);
      current.pop_back();
    }
  }
}

}  // namespace

std::uint64_t antichain_rank(const FinitePoset& p, int max_elements) {
  check_cap(p, max_elements, "antichain_rank");
  // a chain A_1 strictly-contains A_2 strictly-contains ... of non-empty
  // antichains loses at least one element per step and every subset of an
  // antichain is one, so the height of the containment order is the maximum
  // antichain cardinality
  std::uint64_t best = 0;
  std::vector<int> current;
  enumerate_antichains(p, 0, current, best);
  return best;
}

std::uint64_t max_antichain_size(const FinitePoset& p) {
  // minimum chain cover via bipartite matching on the strict order; by
  // Dilworth's theorem its size equals the maximum antichain
  const int n = p.size();
  std::vector<int> match_right(n, -1), match_left(n, -1);
  std::vector<char> seen(n);
  std::function<bool(int)> augment = [&](int u) -> bool {
    for (int v = 0; v < n; ++v) {
      if (!p.less(u, v) || seen[v]) continue;
      seen[v] = 1;
      if (match_right[v] == -1 || augment(match_right[v])) {
        match_right[v] = u;
        match_left[u] = v;
        return true;
      }
    }
    return false;
  };
  int matching = 0;
  for (int u = 0; u < n; ++u) {
    std::fill(seen.begin(), seen.end(), 0);
    if (augment(u)) ++matching;
  }
  return static_cast<std::uint64_t>(n - matching);
}

std::uint64_t longest_chain(const FinitePoset& p) {
  // Mirsky layering: repeatedly strip the minimal elements; the number of
  // layers is the longest chain
  std::vector<char> removed(p.size(), 0);
  int left = p.size();
  std::uint64_t layers = 0;
  while (left > 0) {
    std::vector<int> layer;
    for (int x = 0; x < p.size(); ++x) {
      if (removed[x]) continue;
      bool minimal = true;
      for (int y = 0; y < p.size(); ++y)
        if (!removed[y] && p.less(y, x)) {
          minimal = false;
          break;
        }
      if (minimal) layer.push_back(x);
    }
    for (int x : layer) removed[x] = 1;
    left -= static_cast<int>(layer.size());
    ++layers;
  }
  return layers;
}

std::uint64_t downset_height(const FinitePoset& p, int max_elements) {
  check_cap(p, std::min(max_elements, 128), "downset_height");
  // longest inclusion chain from the empty set to the full carrier, stepping
  // through downward-closed sets one maximal element at a time
  std::unordered_map<Carrier, std::uint64_t, CarrierHash> memo;
  std::function<std::uint64_t(const Carrier&)> len = [&](const Carrier& d) -> std::uint64_t {
    if (d.empty()) return 1;  // the chain <{}> alone
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
    std::uint64_t best = 0;
    for (int x = 0; x < p.size(); ++x) {
      if (!d.test(x)) continue;
      bool maximal = true;
      for (int y = 0; y < p.size(); ++y)
        if (y != x && d.test(y) && p.less(x, y)) {
          maximal = false;
          break;
        }
      if (!maximal) continue;
      Carrier next = d;
      next.w[x >> 6] &= ~(std::uint64_t(1) << (x & 63));
      best = std::max(best, len(next));
    }
    memo.emplace(d, best + 1);
    return best + 1;
  };
  Carrier all;
  for (int i = 0; i < p.size(); ++i) all.set(i);
  return len(all);
}

std::uint64_t max_linearisation(const FinitePoset& p) {
  return static_cast<std::uint64_t>(p.size());
}

FinitePoset reverse(const FinitePoset& p) {
  const int n = p.size();
  std::vector<bool> leq(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[static_cast<std::size_t>(i) * n + j] = p.leq(j, i);
  return FinitePoset(n, std::move(leq));
}

bool is_augmentation(const FinitePoset& base, const FinitePoset& aug) {
  if (base.size() != aug.size()) throw std::invalid_argument("is_augmentation: carrier mismatch");
  for (int i = 0; i < base.size(); ++i)
    for (int j = 0; j < base.size(); ++j)
      if (base.leq(i, j) && !aug.leq(i, j)) return false;
  return true;
}

nlohmann::json poset_to_json(const FinitePoset& p, RelationEncoding enc) {
  nlohmann::json pairs = nlohmann::json::array();
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) {
      if (!p.less(i, j)) continue;
      if (enc == RelationEncoding::covers) {
        bool cover = true;
        for (int k = 0; k < p.size(); ++k)
          if (p.less(i, k) && p.less(k, j)) {
            cover = false;
            break;
          }
        if (!cover) continue;
      }
      pairs.push_back({i, j});
    }
  return {{"n", p.size()}, {"leq", pairs}};
}

FinitePoset poset_from_json(const nlohmann::json& j, RelationEncoding enc) {
  if (!j.contains("n") || !j.contains("leq"))
    throw std::invalid_argument("poset JSON: expected {\"n\": ..., \"leq\": [[i,j], ...]}");
  const int n = j.at("n").get<int>();
  if (n < 0) throw std::invalid_argument("poset JSON: negative size");
  std::vector<bool> leq(static_cast<std::size_t>(n) * n, false);
  auto at = [&](int a, int b) -> decltype(leq)::reference {
    return leq[static_cast<std::size_t>(a) * n + b];
  };
  for (int i = 0; i < n; ++i) at(i, i) = true;
  for (const auto& pr : j.at("leq")) {
    if (!pr.is_array() || pr.size() != 2) throw std::invalid_argument("poset JSON: bad pair");
    const int a = pr[0].get<int>(), b = pr[1].get<int>();
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("poset JSON: index out of range");
    at(a, b) = true;
  }
  if (enc == RelationEncoding::covers) {
    // Floyd-Warshall style closure over the cover pairs
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (at(i, k))
          for (int jj = 0; jj < n; ++jj)
            if (at(k, jj)) at(i, jj) = true;
  }
  return FinitePoset(n, std::move(leq));
}

std::string poset_to_dot(const FinitePoset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int i = 0; i < p.size(); ++i) os << "  " << i << ";\n";
  const nlohmann::json covers = poset_to_json(p, RelationEncoding::covers)["leq"];
  for (const auto& pr : covers) os << "  " << pr[0] << " -> " << pr[1] << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace wqo
