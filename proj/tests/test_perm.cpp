#include "doctest.h"
#include "weyl/perm.hpp"

using namespace weyl;

TEST_CASE("permutation arithmetic") {
  Perm a{1, 2, 0, 3}, b{0, 1, 3, 2};
  CHECK(compose(a, b) == Perm{1, 3, 0, 2});
  CHECK(is_identity(compose(a, inverse(a))));
  CHECK(is_perm(a, 4));
  CHECK(!is_perm(Perm{0, 0, 1}, 3));
}

TEST_CASE("group orders") {
  CHECK(group_order(PermGroup(4, {Perm{1, 0, 2, 3}, Perm{1, 2, 3, 0}})) == 24);
  CHECK(group_order(PermGroup(5, {})) == 1);
  // Alt(5) from two 3-cycles
  CHECK(group_order(PermGroup(5, {Perm{1, 2, 0, 3, 4}, Perm{0, 1, 3, 4, 2}})) == 60);
  // Sym(9) has order 362880
  CHECK(group_order(PermGroup(9, {Perm{1, 0, 2, 3, 4, 5, 6, 7, 8}, Perm{1, 2, 3, 4, 5, 6, 7, 8, 0}})) == 362880);
  // two disjoint 3-cycles and a swap of the blocks: C3 wr C2, order 18
  CHECK(group_order(PermGroup(6, {Perm{1, 2, 0, 3, 4, 5}, Perm{3, 4, 5, 0, 1, 2}})) == 18);
}

TEST_CASE("membership and stabilizers") {
  PermGroup S4(4, {Perm{1, 0, 2, 3}, Perm{1, 2, 3, 0}});
  CHECK(S4.contains(Perm{3, 2, 1, 0}));
  PermGroup C4(4, {Perm{1, 2, 3, 0}});
  CHECK(!C4.contains(Perm{1, 0, 2, 3}));
  auto st = S4.stabilizer({0});
  CHECK(group_order(PermGroup(4, st)) == 6);
  for (const auto& g : st) CHECK(g[0] == 0);
  CHECK(S4.stabilizer({0, 1, 2}).empty());
  auto reps = orbit_reps(6, {Perm{1, 0, 2, 3, 4, 5}, Perm{0, 1, 3, 4, 2, 5}});
  CHECK(reps == std::vector<std::uint32_t>{0, 0, 2, 2, 2, 5});
}
