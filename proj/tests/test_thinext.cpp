#include <bit>

#include "doctest.h"
#include "print.hpp"
#include "weyl/error.hpp"
#include "weyl/thinext.hpp"

using namespace weyl;

namespace {

std::uint64_t binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t c = 1;
  for (int x = 1; x <= r; ++x) c = c * (n - r + x) / x;
  return c;
}

// i-sets meeting J1 and J2 (|J1 ∩ J2| = t) in an admissible way, split by
// where the i-set's points lie: J1 ∩ J2, J1 only, J2 only, outside
std::uint64_t common_oracle(const FamilySpec& s, int t) {
  auto ok = [&](int m) { return s.mode == Mode::Exact ? m == s.k : m >= s.k; };
  std::uint64_t total = 0;
  for (int a = 0; a <= t; ++a)
    for (int b = 0; b <= s.j - t; ++b)
      for (int c = 0; c <= s.j - t; ++c) {
        const int d = s.i - a - b - c;
        if (d < 0 || !ok(a + b) || !ok(a + c)) continue;
        total += binom(t, a) * binom(s.j - t, b) * binom(s.j - t, c) * binom(s.n - 2 * s.j + t, d);
      }
  return total;
}

}  // namespace

TEST_CASE("the (12,4,4) common neighbour table") {
  const std::uint64_t paper[6][4] = {{1, 5, 15, 35},   {96, 100, 100, 126}, {36, 54, 64, 84},
                                     {0, 0, 4, 10},    {36, 72, 102, 138},  {0, 0, 4, 12}};
  const FamilySpec specs[6] = {thin(12, 4, 4, 0), thin(12, 4, 4, 1), thin(12, 4, 4, 2), thin(12, 4, 4, 3),
                               thin(12, 4, 4, 2, Mode::AtLeast), thin(12, 4, 4, 3, Mode::AtLeast)};
  const std::size_t valences[6] = {70, 224, 168, 32, 201, 33};
  for (int r = 0; r < 6; ++r) {
    CAPTURE(specs[r]);
    const auto table = common_neighbor_table(specs[r]);
    for (int t = 0; t < 4; ++t) {
      CHECK(table[t].value() == paper[r][t]);
      CHECK(common_oracle(specs[r], t) == paper[r][t]);
    }
    CHECK(build_bigraph(specs[r]).valence(Side::A) == valences[r]);
  }
  CHECK(common_neighbor_profile(thin(12, 4, 4, 3), 2) == 4);
  CHECK(common_neighbor_profile(thin(12, 4, 4, 3, Mode::AtLeast), 3) == 12);
}

TEST_CASE("the (10,3,3) profiles") {
  CHECK(common_neighbor_profile(thin(10, 3, 3, 0), 0) == 4);
  CHECK(common_neighbor_profile(thin(10, 3, 3, 0), 1) == 10);
  CHECK(common_neighbor_profile(thin(10, 3, 3, 0), 2) == 20);
  CHECK(common_neighbor_profile(thin(10, 3, 3, 2), 0) == 0);
  CHECK(common_neighbor_profile(thin(10, 3, 3, 2), 1) == 4);
  CHECK(common_neighbor_profile(thin(10, 3, 3, 2), 2) == 8);
  CHECK(common_neighbor_profile(thin(10, 3, 3, 2, Mode::AtLeast), 0) == 0);
  CHECK(common_neighbor_profile(thin(10, 3, 3, 2, Mode::AtLeast), 1) == 4);
  CHECK(common_neighbor_profile(thin(10, 3, 3, 2, Mode::AtLeast), 2) == 10);

  const FamilySpec specs[4] = {thin(10, 3, 3, 0), thin(10, 3, 3, 1), thin(10, 3, 3, 2),
                               thin(10, 3, 3, 2, Mode::AtLeast)};
  const std::size_t valences[4] = {35, 63, 21, 22};
  for (int r = 0; r < 4; ++r) CHECK(build_bigraph(specs[r]).valence(Side::B) == valences[r]);

  for (int n = 4; n <= 9; ++n)
    for (int j = 1; j < n; ++j)
      for (int i = 1; i < n; ++i)
        for (int k = 0; k <= std::min(i, j); ++k)
          for (Mode m : {Mode::Exact, Mode::AtLeast}) {
            const FamilySpec s = thin(n, i, j, k, m);
            if (!s.valid()) continue;
            const auto table = common_neighbor_table(s);
            for (int t = 0; t <= j; ++t)
              if (table[t]) CHECK(*table[t] == common_oracle(s, t));
          }
  CHECK_THROWS_AS(common_neighbor_profile(thin(10, 3, 3, 1), 4), Error);
}

TEST_CASE("derived relation graphs") {
  const SimpleGraph H = derived_relation_graph(thin(10, 3, 3, 1), [](std::uint64_t c) { return c == 30; });
  CHECK(srg_parameters(H) == SrgParams{120, 63, 30, 36});

  // counts 0, 4, 8 separate the overlaps 0, 1, 2
  const FamilySpec s = thin(10, 3, 3, 2);
  const Family fam = build_family(s);
  for (std::uint64_t c : {0u, 4u, 8u}) {
    const SimpleGraph R = derived_relation_graph(s, [c](std::uint64_t x) { return x == c; });
    const int expect = c == 0 ? 0 : c == 4 ? 1 : 2;
    for (std::size_t x = 0; x < R.size(); ++x)
      for (std::size_t y = x + 1; y < R.size(); ++y)
        CHECK(R.adj(x, y) == (std::popcount(fam.thin_b[x] & fam.thin_b[y]) == expect));
  }

  const SimpleGraph K = derived_relation_graph(thin(6, 2, 2, 1), [](std::uint64_t) { return true; });
  CHECK(K.edge_count() == 15 * 14 / 2);
  CHECK(srg_parameters(K) == SrgParams{15, 14, 13, 0});
}

TEST_CASE("partition model") {
  const PartitionModel M = partition_model(4);
  CHECK(M.subsets.size() == 35);
  for (std::size_t x = 0; x < M.subsets.size(); ++x) {
    CHECK(std::popcount(M.partitions[x].half) == 4);
    CHECK((M.partitions[x].half & 1u));
    CHECK(M.index_of(M.partitions[x]) == x);
  }
  CHECK(partition_exceptional_k(4) == 1);
  CHECK(partition_invariant(4, 1));
  const auto w = partition_violation(4, 0);
  REQUIRE(w.has_value());
  CHECK(w->overlap == 0);
  CHECK(w->image_overlap == 2);
  CHECK_FALSE(partition_exceptional_k(3).has_value());
  for (int k = 0; k <= 1; ++k) CHECK_FALSE(partition_invariant(3, k));
  CHECK(partition_invariant(3, 2));  // the matching
  for (int k = 1; k <= 2; ++k) CHECK_FALSE(partition_invariant(4, k, Mode::AtLeast));
}

TEST_CASE("thin(6,2,2,1) is the PG(3,2) non-incidence graph") {
  const Perm iso = duad_pg32_bijection();
  const ColoredGraph T = ColoredGraph::from(build_bigraph(thin(6, 2, 2, 1)));
  const ColoredGraph P = ColoredGraph::from(build_bigraph(thick(2, 3, 0, 2, -1)));
  REQUIRE(is_perm(iso, 30));
  for (std::size_t v = 0; v < 30; ++v)
    for (std::size_t w = 0; w < 30; ++w) CHECK(T.adj[v].test(w) == P.adj[iso[v]].test(iso[w]));
}
