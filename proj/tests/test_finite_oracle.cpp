#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wqo/finite_poset.hpp"
#include "wqo/invariants.hpp"
#include "wqo/ordinal_text.hpp"
#include "wqo/realize.hpp"

using namespace wqo;
using wqo::testing::Rng;
using wqo::testing::random_finitary_expr;
using wqo::testing::random_poset;
using wqo::testing::uniform;

namespace {

FinitePoset grid(int n, int m) {
  return realize(PosetExpr::cart_prod({PosetExpr::ord(Ordinal(std::uint64_t(n))),
                                       PosetExpr::ord(Ordinal(std::uint64_t(m)))}))
      .poset;
}

}  // namespace

TEST_CASE("poset construction validates the order axioms") {
  CHECK_THROWS_AS(FinitePoset(2, {true, true, true, false}), std::invalid_argument);  // irreflexive
  CHECK_THROWS_AS(FinitePoset(2, {true, true, true, true}), std::invalid_argument);   // symmetric
  // 0 <= 1, 1 <= 2, but not 0 <= 2
  CHECK_THROWS_AS(FinitePoset(3, {true, true, false,  //
                                  false, true, true,  //
                                  false, false, true}),
                  std::invalid_argument);
  CHECK_NOTHROW(FinitePoset::chain(4));
  CHECK_NOTHROW(FinitePoset::antichain(4));
}

TEST_CASE("ranks of basic posets") {
  const FinitePoset g = grid(2, 3);
  CHECK(width_rank(g) == 2);
  CHECK(height_rank(g) == 4);
  CHECK(motype_rank(g) == 6);

  const FinitePoset c5 = FinitePoset::chain(5);
  CHECK(width_rank(c5) == 1);
  CHECK(height_rank(c5) == 5);
  CHECK(motype_rank(c5) == 5);

  const FinitePoset a4 = FinitePoset::antichain(4);
  CHECK(width_rank(a4) == 4);
  CHECK(height_rank(a4) == 1);
  CHECK(motype_rank(a4) == 4);

  const FinitePoset empty = FinitePoset::antichain(0);
  CHECK(width_rank(empty) == 0);
  CHECK(height_rank(empty) == 0);
  CHECK(motype_rank(empty) == 0);
}

TEST_CASE("antichain rank") {
  CHECK(antichain_rank(FinitePoset::antichain(3)) == 3);
  CHECK(antichain_rank(FinitePoset::chain(4)) == 1);
  CHECK(antichain_rank(grid(3, 3)) == 3);
}

TEST_CASE("characterisation routes on fixed posets") {
  const FinitePoset g = grid(2, 2);
  CHECK(longest_chain(g) == 3);
  CHECK(downset_height(g) == 5);  // motype 4, plus one
  CHECK(max_linearisation(g) == 4);
  CHECK(max_antichain_size(g) == 2);

  const FinitePoset empty = FinitePoset::antichain(0);
  CHECK(longest_chain(empty) == 0);
  CHECK(downset_height(empty) == 1);  // the chain consisting of {} alone
  CHECK(max_linearisation(empty) == 0);
}

TEST_CASE("reverse and augmentation") {
  const FinitePoset g = grid(2, 3);
  CHECK(width_rank(reverse(g)) == width_rank(g));
  CHECK(width_rank(reverse(FinitePoset::chain(5))) == 1);

  const FinitePoset c4 = FinitePoset::chain(4);
  CHECK(is_augmentation(grid(2, 2), c4));
  CHECK_FALSE(is_augmentation(c4, grid(2, 2)));
  CHECK(width_rank(c4) <= width_rank(grid(2, 2)));
  CHECK_THROWS_AS(is_augmentation(c4, FinitePoset::chain(5)), std::invalid_argument);

  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const FinitePoset p = random_poset(rng, static_cast<int>(uniform(rng, 0, 8)));
    REQUIRE(width_rank(reverse(p)) == width_rank(p));
  }
}

TEST_CASE("realize: fixed cases") {
  // 6-element grid
  CHECK(grid(2, 3).size() == 6);

  // multisets of size <= 2 over a 2-antichain: {}, {a}, {b}, {aa}, {ab}, {bb}
  RealizeBounds b;
  b.bag_cut = 2;
  const Realization m = realize(PosetExpr::multiset(PosetExpr::antichain(2)), b);
  CHECK(m.poset.size() == 6);
  CHECK(m.truncated);
  CHECK(width_rank(m.poset) == 3);   // {a}, {b} and one of size two... checked by oracle
  CHECK(height_rank(m.poset) == 3);  // {} < {a} < {aa}

  // sequences over a singleton of length <= 3: a chain of 4
  b.bag_cut = 3;
  const Realization s = realize(PosetExpr::seq(PosetExpr::ord(Ordinal(std::uint64_t(1)))), b);
  CHECK(s.poset.size() == 4);
  CHECK(width_rank(s.poset) == 1);

  // M({}) and Seq({}) are the one-point poset, exactly
  const Realization m0 = realize(PosetExpr::multiset(PosetExpr::antichain(0)), b);
  CHECK(m0.poset.size() == 1);
  CHECK_FALSE(m0.truncated);

  // w truncates to a chain
  RealizeBounds wb;
  wb.omega_cut = 7;
  const Realization wchain = realize(PosetExpr::ord(Ordinal::omega()), wb);
  CHECK(wchain.poset.size() == 7);
  CHECK(wchain.truncated);
  CHECK(height_rank(wchain.poset) == 7);

  CHECK_THROWS_AS(realize(PosetExpr::tree(PosetExpr::ord(Ordinal::omega()))),
                  std::invalid_argument);
  CHECK_THROWS_AS(realize(PosetExpr::ord(parse_ordinal("w^2"))), std::invalid_argument);
  CHECK_THROWS_AS(realize(PosetExpr::ord(parse_ordinal("w*2"))), std::invalid_argument);

  RealizeBounds tiny;
  tiny.max_elements = 10;
  CHECK_THROWS_AS(realize(parse_expr("4 x 3"), tiny), std::length_error);
}

TEST_CASE("realize: Rado truncation") {
  RealizeBounds b;
  b.omega_cut = 4;
  const Realization r = realize(PosetExpr::rado(), b);
  CHECK(r.poset.size() == 6);  // pairs (a,b) with a < b < 4
  CHECK(r.truncated);

  // spot-check the order: (0,1) <= (2,3) via b < a', (0,1) <= (0,3) within a row,
  // (0,2) and (1,3) incomparable
  auto idx = [&](int a, int bb) {
    int k = 0;
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y) {
        if (x == a && y == bb) return k;
        ++k;
      }
    return -1;
  };
  CHECK(r.poset.leq(idx(0, 1), idx(2, 3)));
  CHECK(r.poset.leq(idx(0, 1), idx(0, 3)));
  CHECK(r.poset.incomparable(idx(0, 2), idx(1, 3)));
}

TEST_CASE("Rado truncations: invariants grow with the cut and stay consistent") {
  std::uint64_t prev_w = 0, prev_h = 0;
  for (std::uint64_t cut = 2; cut <= 9; ++cut) {
    RealizeBounds b;
    b.omega_cut = cut;
    const FinitePoset p = realize(PosetExpr::rado(), b).poset;
    const std::uint64_t w = max_antichain_size(p);
    const std::uint64_t h = height_rank(p);
    const std::uint64_t o = static_cast<std::uint64_t>(p.size());
    REQUIRE(w >= prev_w);
    REQUIRE(h >= prev_h);
    REQUIRE(w <= o);
    REQUIRE(o <= h * w);
    prev_w = w;
    prev_h = h;
  }
  CHECK(prev_w >= 6);
  CHECK(prev_h >= 6);
}

TEST_CASE("oracle cross-checks on random posets") {
  Rng rng(32);
  for (int i = 0; i < 600; ++i) {
    const int n = static_cast<int>(uniform(rng, 0, 9));
    const FinitePoset p = random_poset(rng, n);
    const std::uint64_t w = width_rank(p);
    const std::uint64_t h = height_rank(p);
    const std::uint64_t o = motype_rank(p);
    REQUIRE(w == antichain_rank(p));
    REQUIRE(w == max_antichain_size(p));
    REQUIRE(h == longest_chain(p));
    REQUIRE(o == static_cast<std::uint64_t>(n));
    REQUIRE(o == max_linearisation(p));
    REQUIRE(downset_height(p) == o + 1);
    REQUIRE(w <= o);
    REQUIRE(o <= h * w);
  }
}

TEST_CASE("deleting an element never increases a rank") {
  Rng rng(33);
  for (int i = 0; i < 150; ++i) {
    const int n = static_cast<int>(uniform(rng, 1, 8));
    const FinitePoset p = random_poset(rng, n);
    const std::uint64_t w = width_rank(p), h = height_rank(p), o = motype_rank(p);
    const int victim = static_cast<int>(uniform(rng, 0, n - 1));
    std::vector<int> keep;
    for (int x = 0; x < n; ++x)
      if (x != victim) keep.push_back(x);
    const FinitePoset q = p.restrict(keep);
    REQUIRE(width_rank(q) <= w);
    REQUIRE(height_rank(q) <= h);
    REQUIRE(motype_rank(q) <= o);
  }
}

TEST_CASE("oracle agrees with the symbolic engine on finitary expressions") {
  Rng rng(34);
  int checked = 0;
  while (checked < 350) {
    const PosetExpr e = random_finitary_expr(rng, 60);
    const Realization r = realize(e);
    REQUIRE_FALSE(r.truncated);
    if (r.poset.size() > 16) continue;
    const InvariantTriple t = invariants(e);
    REQUIRE(t.o == InvariantValue::exact(Ordinal(BigNat(r.poset.size()))));
    REQUIRE(t.h == InvariantValue::exact(Ordinal(BigNat(height_rank(r.poset)))));
    REQUIRE(t.w == InvariantValue::exact(Ordinal(BigNat(width_rank(r.poset)))));
    ++checked;
  }
}

TEST_CASE("size-n multiset slices dominate the n-fold product in height") {
  Rng rng(35);
  for (int trial = 0; trial < 25; ++trial) {
    const int base_n = static_cast<int>(uniform(rng, 1, 3));
    const FinitePoset base = random_poset(rng, base_n);
    const int n = static_cast<int>(uniform(rng, 1, 3));

    // realize the exact-size-n slice of the finite multisets over base
    std::vector<std::vector<int>> bags;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
      if (static_cast<int>(cur.size()) == n) {
        bags.push_back(cur);
        return;
      }
      for (int x = from; x < base_n; ++x) {
        cur.push_back(x);
        rec(x);
        cur.pop_back();
      }
    };
    rec(0);
    std::vector<bool> leq(bags.size() * bags.size());
    for (std::size_t i = 0; i < bags.size(); ++i)
      for (std::size_t j = 0; j < bags.size(); ++j) {
        // injective matching between equal-size bags is a perfect matching
        std::vector<int> match(n, -1);
        std::function<bool(int, std::vector<char>&)> aug = [&](int a, std::vector<char>& seen) {
          for (int bidx = 0; bidx < n; ++bidx) {
            if (seen[bidx] || !base.leq(bags[i][a], bags[j][bidx])) continue;
            seen[bidx] = 1;
            if (match[bidx] < 0 || aug(match[bidx], seen)) {
              match[bidx] = a;
              return true;
            }
          }
          return false;
        };
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
          std::vector<char> seen(n, 0);
          ok = aug(a, seen);
        }
        leq[i * bags.size() + j] = ok;
      }
    const FinitePoset slice(static_cast<int>(bags.size()), std::move(leq));

    // h(Q^n) on the explicit n-fold product of the same base
    FinitePoset power = base;
    for (int k = 1; k < n; ++k) {
      const int pn = power.size();
      std::vector<bool> prod(static_cast<std::size_t>(pn) * base_n * pn * base_n);
      const int total = pn * base_n;
      for (int i2 = 0; i2 < total; ++i2)
        for (int j2 = 0; j2 < total; ++j2)
          prod[static_cast<std::size_t>(i2) * total + j2] =
              power.leq(i2 % pn, j2 % pn) && base.leq(i2 / pn, j2 / pn);
      power = FinitePoset(total, std::move(prod));
    }
    REQUIRE(height_rank(slice) >= height_rank(power));
  }
}

TEST_CASE("JSON and DOT round-trips") {
  Rng rng(36);
  for (int i = 0; i < 100; ++i) {
    const FinitePoset p = random_poset(rng, static_cast<int>(uniform(rng, 0, 8)));
    const FinitePoset q = poset_from_json(poset_to_json(p, RelationEncoding::full));
    REQUIRE(q.size() == p.size());
    for (int a = 0; a < p.size(); ++a)
      for (int c = 0; c < p.size(); ++c) REQUIRE(q.leq(a, c) == p.leq(a, c));
    const FinitePoset r =
        poset_from_json(poset_to_json(p, RelationEncoding::covers), RelationEncoding::covers);
    for (int a = 0; a < p.size(); ++a)
      for (int c = 0; c < p.size(); ++c) REQUIRE(r.leq(a, c) == p.leq(a, c));
  }
  const std::string dot = poset_to_dot(grid(2, 2));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}
