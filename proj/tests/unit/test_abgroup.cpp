#include <doctest.h>

#include <algorithm>
#include <set>

#include "gbihom/abgroup.hpp"
#include "gbihom/error.hpp"
#include "test_util.hpp"

using namespace gbihom;
using namespace gbihom::testing;

namespace {

const std::vector<std::vector<std::int64_t>> kId{{1, 0}, {0, 1}}, kSwap{{0, 1}, {1, 0}}, kShear{{1, 0}, {1, 1}};

BiHomGroup klein(const std::vector<std::vector<std::int64_t>>& a, const std::vector<std::vector<std::int64_t>>& b) {
  GroupSpec g({2, 2});
  return BiHomGroup(g, GroupAuto(g, a), GroupAuto(g, b));
}

// Pairs drawn from the automorphisms of a few small groups that pass construction.
std::vector<BiHomGroup> small_bihom_groups() {
  std::vector<BiHomGroup> out;
  for (auto orders : std::vector<std::vector<std::int64_t>>{{2, 2}, {3, 3}, {2, 4}, {5}, {2, 3}}) {
    GroupSpec g(orders);
    std::vector<GroupAuto> autos;
    const std::size_t k = orders.size();
    const std::int64_t top = *std::max_element(orders.begin(), orders.end());
    std::vector<std::int64_t> entries(k * k, 0);
    while (true) {
      std::vector<std::vector<std::int64_t>> m(k, std::vector<std::int64_t>(k));
      for (std::size_t i = 0; i < k * k; ++i) m[i / k][i % k] = entries[i];
      try {
        autos.emplace_back(g, m);
      } catch (const InvalidInput&) {
      }
      std::size_t i = 0;
      while (i < entries.size() && ++entries[i] == top) entries[i++] = 0;
      if (i == entries.size()) break;
    }
    for (std::size_t a = 0; a < autos.size() && a < 6; ++a)
      for (std::size_t b = 0; b < autos.size() && b < 6; ++b) out.emplace_back(g, autos[a], autos[b]);
  }
  return out;
}

}  // namespace

TEST_SUITE("abgroup") {
  TEST_CASE("indexing is lexicographic") {
    GroupSpec g({2, 3, 2});
    CHECK(g.size() == 12);
    auto els = g.elements();
    CHECK(std::is_sorted(els.begin(), els.end()));
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(g.index_of(g.element(i)) == i);
    CHECK(g.reduce({3, -1, 5}) == el({1, 2, 1}));
    CHECK(g.neg(el({1, 1, 1})) == el({1, 2, 1}));
    CHECK_THROWS_AS(GroupSpec({2, 0}), InvalidInput);
  }

  TEST_CASE("bihom sum") {
    BiHomGroup plain = klein(kId, kId);
    CHECK(bihom_sum(plain, el({1, 0}), el({0, 1})) == el({1, 1}));
    BiHomGroup swapped = klein(kSwap, kId);
    CHECK(bihom_sum(swapped, el({1, 0}), el({0, 1})) == el({0, 0}));
    for (const auto& G : {plain, swapped}) CHECK(bihom_sum(G, el({0, 0}), el({0, 0})) == el({0, 0}));
  }

  TEST_CASE("automorphism validation") {
    GroupSpec g({2, 4});
    // (x, y) -> (x, 2x + y) is well defined: 2 * 2 = 4 = 0 mod 4.
    CHECK_NOTHROW(GroupAuto(g, {{1, 0}, {2, 1}}));
    CHECK_THROWS_AS(GroupAuto(g, {{1, 0}, {1, 1}}), InvalidInput);
    CHECK_THROWS_AS(GroupAuto(g, {{1, 0}, {0, 2}}), InvalidInput);
    CHECK_THROWS_AS(GroupAuto(g, {{1, 0}}), InvalidInput);
    GroupAuto a(g, {{1, 0}, {2, 3}});
    for (const auto& x : g.elements()) CHECK(a.apply_inverse(a.apply(x)) == x);
  }

  TEST_CASE("orbits") {
    CHECK(orbit(klein(kId, kId), el({1, 0}), false) == std::vector<GroupElem>{el({1, 0})});
    BiHomGroup swapped = klein(kSwap, kId);
    CHECK(orbit(swapped, el({1, 0}), false) == std::vector<GroupElem>{el({0, 1}), el({1, 0})});
    CHECK(orbit(swapped, el({1, 0}), true) == orbit(swapped, el({1, 0}), false));
    GroupSpec z5({5});
    BiHomGroup doubling(z5, GroupAuto(z5, {{2}}), GroupAuto::identity(z5));
    CHECK(orbit(doubling, el({1}), false).size() == 4);
    GroupSpec z7({7});
    BiHomGroup cube(z7, GroupAuto(z7, {{2}}), GroupAuto::identity(z7));
    CHECK(orbit(cube, el({1}), false) == std::vector<GroupElem>{el({1}), el({2}), el({4})});
    CHECK(orbit(cube, el({1}), true).size() == 6);
  }

  TEST_CASE("orbit points carry valid exponents") {
    for (const auto& G : small_bihom_groups()) {
      if (!check_commuting(G).passed) continue;
      for (const auto& g : G.group().elements())
        for (const auto& p : orbit_points(G, g, true)) {
          GroupElem e = G.alpha().power(G.beta().power(g, p.beta_exp), p.alpha_exp);
          if (p.sign < 0) e = G.group().neg(e);
          CHECK(e == p.element);
        }
    }
  }

  TEST_CASE("commuting check") {
    CHECK(check_commuting(klein(kSwap, kSwap)).passed);
    CHECK(check_commuting(klein(kSwap, kId)).passed);
    auto w = check_commuting(klein(kSwap, kShear));
    REQUIRE_FALSE(w.passed);
    CHECK(*w.witness == el({1, 0}));
  }

  TEST_CASE("orbit properties on small groups") {
    for (const auto& G : small_bihom_groups()) {
      const GroupSpec& grp = G.group();
      for (const auto& g : grp.elements()) {
        auto o = orbit(G, g, false);
        std::set<GroupElem> os(o.begin(), o.end());
        for (const auto& h : o) {
          for (const auto& k : orbit(G, h, false)) CHECK(os.count(k));
          CHECK(os.count(G.alpha().apply_inverse(h)));
          CHECK(os.count(G.beta().apply_inverse(h)));
        }
        auto so = orbit(G, g, true);
        for (const auto& h : so) CHECK(std::binary_search(so.begin(), so.end(), grp.neg(h)));
      }
      for (const auto& g : grp.elements())
        for (const auto& h : grp.elements())
          CHECK(bihom_sum(G, g, h) == grp.add(G.alpha().apply(g), G.beta().apply(h)));
    }
  }
}
