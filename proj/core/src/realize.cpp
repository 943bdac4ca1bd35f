#include "wqo/realize.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "wqo/ordinal_text.hpp"

namespace wqo {

namespace {

[[noreturn]] void too_large(const PosetExpr& e, std::uint64_t have, std::uint64_t cap) {
  throw std::length_error("realize: '" + to_text(e) + "' needs " + std::to_string(have) +
                          " elements, cap is " + std::to_string(cap));
}

void check_size(const PosetExpr& e, std::uint64_t have, const RealizeBounds& b) {
  if (have > b.max_elements) too_large(e, have, b.max_elements);
}

FinitePoset build(int n, const std::function<bool(int, int)>& leq) {
  std::vector<bool> rel(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rel[static_cast<std::size_t>(i) * n + j] = leq(i, j);
  return FinitePoset(n, std::move(rel));
}

Realization realize_ordinal(const PosetExpr& e, const RealizeBounds& b) {
  const Ordinal& a = e.ordinal_value();
  if (a.is_finite()) {
    if (a.finite_value() > b.max_elements)
      too_large(e, a.finite_value().convert_to<std::uint64_t>(), b.max_elements);
    return {FinitePoset::chain(a.finite_value().convert_to<int>()), false};
  }
  if (a == Ordinal::omega()) {
    check_size(e, b.omega_cut, b);
    return {FinitePoset::chain(static_cast<int>(b.omega_cut)), true};
  }
  throw std::invalid_argument("realize: no truncation semantics for the ordinal '" +
                              to_text(a) + "' (only finite ordinals and w)");
}

Realization realize_rado(const PosetExpr& e, const RealizeBounds& b) {
  // pairs (a, b) with a < b, both below the cut;
  // (a,b) <= (a',b') iff (a = a' and b <= b') or b < a'
  std::vector<std::pair<int, int>> pts;
  const int cut = static_cast<int>(b.omega_cut);
  for (int x = 0; x < cut; ++x)
    for (int y = x + 1; y < cut; ++y) pts.emplace_back(x, y);
  check_size(e, pts.size(), b);
  return {build(static_cast<int>(pts.size()),
                [&](int i, int j) {
                  const auto [a1, b1] = pts[i];
                  const auto [a2, b2] = pts[j];
                  return (a1 == a2 && b1 <= b2) || b1 < a2;
                }),
          true};
}

Realization realize_sum(const PosetExpr& e, const RealizeBounds& b, bool lex) {
  std::vector<Realization> parts;
  std::uint64_t total = 0;
  for (const auto& c : e.children()) {
    parts.push_back(realize(c, b));
    total += parts.back().poset.size();
    check_size(e, total, b);
  }
  std::vector<int> offset(parts.size() + 1, 0);
  for (std::size_t k = 0; k < parts.size(); ++k)
    offset[k + 1] = offset[k] + parts[k].poset.size();
  auto block = [&](int i) {
    std::size_t k = 0;
    while (offset[k + 1] <= i) ++k;
    return k;
  };
  bool trunc = false;
  for (const auto& p : parts) trunc = trunc || p.truncated;
  return {build(offset.back(),
                [&](int i, int j) {
                  const std::size_t ki = block(i), kj = block(j);
                  if (ki == kj) return parts[ki].poset.leq(i - offset[ki], j - offset[kj]);
                  return lex && ki < kj;
                }),
          trunc};
}

Realization realize_direct_prod(const PosetExpr& e, const RealizeBounds& b) {
  // copies of p along q
  const Realization p = realize(e.children()[0], b);
  const Realization q = realize(e.children()[1], b);
  const std::uint64_t total = std::uint64_t(p.poset.size()) * q.poset.size();
  check_size(e, total, b);
  const int np = p.poset.size();
  return {build(static_cast<int>(total),
                [&](int i, int j) {
                  const int qi = i / np, xi = i % np;
                  const int qj = j / np, xj = j % np;
                  if (qi == qj) return p.poset.leq(xi, xj);
                  return q.poset.less(qi, qj);
                }),
          p.truncated || q.truncated};
}

Realization realize_cart_prod(const PosetExpr& e, const RealizeBounds& b) {
  std::vector<Realization> fs;
  std::uint64_t total = 1;
  bool trunc = false;
  for (const auto& c : e.children()) {
    fs.push_back(realize(c, b));
    trunc = trunc || fs.back().truncated;
    const std::uint64_t sz = fs.back().poset.size();
    if (sz == 0) total = 0;
    if (total > 0 && sz > b.max_elements / std::max<std::uint64_t>(total, 1) + 1)
      total = b.max_elements + 1;
    else
      total *= sz;
    check_size(e, total, b);
  }
  std::vector<int> radix(fs.size());
  for (std::size_t k = 0; k < fs.size(); ++k) radix[k] = fs[k].poset.size();
  auto digits = [&](int i) {
    std::vector<int> d(fs.size());
    for (std::size_t k = 0; k < fs.size(); ++k) {
      d[k] = i % radix[k];
      i /= radix[k];
    }
    return d;
  };
  return {build(static_cast<int>(total),
                [&](int i, int j) {
                  const auto di = digits(i), dj = digits(j);
                  for (std::size_t k = 0; k < fs.size(); ++k)
                    if (!fs[k].poset.leq(di[k], dj[k])) return false;
                  return true;
                }),
          trunc};
}

// all multisets (as sorted index tuples) of size <= cut over n elements
void enumerate_bags(int n, std::uint64_t cut, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    out.push_back(cur);
    if (cur.size() >= cut) return;
    for (int x = from; x < n; ++x) {
      cur.push_back(x);
      rec(x);
      cur.pop_back();
    }
  };
  rec(0);
}

// multiset embedding: an injective matching f with x_i <= y_{f(i)}
bool bag_embeds(const FinitePoset& base, const std::vector<int>& xs, const std::vector<int>& ys) {
  if (xs.size() > ys.size()) return false;
  std::vector<int> match(ys.size(), -1);
  std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t i,
                                                                     std::vector<char>& seen) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (seen[j] || !base.leq(xs[i], ys[j])) continue;
      seen[j] = 1;
      if (match[j] < 0 || augment(static_cast<std::size_t>(match[j]), seen)) {
        match[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<char> seen(ys.size(), 0);
    if (!augment(i, seen)) return false;
  }
  return true;
}

// subsequence embedding: strictly monotone f with x_i <= y_{f(i)};
// greedy leftmost matching is exact here
bool seq_embeds(const FinitePoset& base, const std::vector<int>& xs, const std::vector<int>& ys) {
  std::size_t j = 0;
  for (const int x : xs) {
    while (j < ys.size() && !base.leq(x, ys[j])) ++j;
    if (j == ys.size()) return false;
    ++j;
  }
  return true;
}

Realization realize_bags(const PosetExpr& e, const RealizeBounds& b, bool ordered) {
  const Realization base = realize(e.children()[0], b);
  const int n = base.poset.size();
  std::vector<std::vector<int>> elems;
  if (ordered) {
    // sequences of length <= cut
    std::uint64_t count = 1, pw = 1;
    for (std::uint64_t len = 1; len <= b.bag_cut; ++len) {
      pw = (n == 0) ? 0 : pw * n;
      count += pw;
      if (count > b.max_elements) too_large(e, count, b.max_elements);
    }
    elems.emplace_back();
    std::vector<std::vector<int>> frontier{{}};
    for (std::uint64_t len = 1; len <= b.bag_cut; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& s : frontier)
        for (int x = 0; x < n; ++x) {
          auto t = s;
          t.push_back(x);
          elems.push_back(t);
          next.push_back(std::move(t));
        }
      frontier = std::move(next);
    }
  } else {
    enumerate_bags(n, b.bag_cut, elems);
    check_size(e, elems.size(), b);
  }
  const auto embeds = ordered ? seq_embeds : bag_embeds;
  // over the empty base the only bag is the empty one, which is exact
  const bool trunc = base.truncated || n > 0;
  return {build(static_cast<int>(elems.size()),
                [&](int i, int j) { return embeds(base.poset, elems[i], elems[j]); }),
          trunc};
}

}  // namespace

Realization realize(const PosetExpr& e, const RealizeBounds& bounds) {
  if (bounds.omega_cut == 0 || bounds.bag_cut == 0)
    throw std::invalid_argument("realize: bounds must be positive");
  switch (e.kind()) {
    case PosetExpr::Kind::ordinal:
      return realize_ordinal(e, bounds);
    case PosetExpr::Kind::antichain: {
      check_size(e, e.antichain_size(), bounds);
      return {FinitePoset::antichain(static_cast<int>(e.antichain_size())), false};
    }
    case PosetExpr::Kind::rado:
      return realize_rado(e, bounds);
    case PosetExpr::Kind::lex_sum:
      return realize_sum(e, bounds, /*lex=*/true);
    case PosetExpr::Kind::disjoint_sum:
      return realize_sum(e, bounds, /*lex=*/false);
    case PosetExpr::Kind::direct_prod:
      return realize_direct_prod(e, bounds);
    case PosetExpr::Kind::cart_prod:
      return realize_cart_prod(e, bounds);
    case PosetExpr::Kind::multiset:
      return realize_bags(e, bounds, /*ordered=*/false);
    case PosetExpr::Kind::seq:
      return realize_bags(e, bounds, /*ordered=*/true);
    case PosetExpr::Kind::tree:
      throw std::invalid_argument("realize: Tree(...) has no finite truncation semantics");
  }
  throw std::logic_error("realize: unreachable");
}

}  // namespace wqo
