#include <bit>

#include "doctest.h"
#include "weyl/error.hpp"
#include "weyl/grassmann.hpp"

using namespace weyl;

namespace {

SimpleGraph meet_graph(const std::vector<Subspace>& v, int d) {
  SimpleGraph g(v.size());
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (meet(v[a], v[b]).pdim() == d) g.add_edge(a, b);
  return g;
}

SimpleGraph cycle(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

SimpleGraph complete(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

}  // namespace

TEST_CASE("round-up triples give the plane Grassmann graph of PG(5,2)") {
  auto fam = build_family(thick(2, 5, 2, 2, 1, Mode::AtLeast));
  auto G1 = grassmann_from_roundups(fam.graph, Side::B, false);
  CHECK(G1 == meet_graph(fam.thick_b, 1));
}

TEST_CASE("round-up quadruples give the line Grassmann graph of PG(3,3)") {
  auto fam = build_family(thick(3, 3, 1, 1, 0));
  auto G1 = grassmann_from_roundups(fam.graph, Side::B, true);
  CHECK(G1 == meet_graph(fam.thick_b, 0));
  CHECK_THROWS_AS(grassmann_from_roundups(fam.graph, Side::B, false), Error);
  try {
    grassmann_from_roundups(fam.graph, Side::A, false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoRoundups);
  }
}

TEST_CASE("common-neighbour profile recovers the Johnson graph") {
  auto fam = build_family(thin(8, 2, 3, 1, Mode::AtLeast));
  auto G1 = grassmann_from_profile(fam.graph, Side::B);
  for (std::size_t a = 0; a < fam.thin_b.size(); ++a)
    for (std::size_t b = a + 1; b < fam.thin_b.size(); ++b)
      CHECK(G1.adj(a, b) == (std::popcount(fam.thin_b[a] & fam.thin_b[b]) == 2));
}

TEST_CASE("clique system of the line Grassmann graph of PG(3,2)") {
  auto lines = enumerate_subspaces(3, 1, FieldSpec::get(2));
  auto cs = clique_system(meet_graph(lines, 0));
  CHECK(lines.size() == 35);
  CHECK(cs.cliques.size() == 30);
  CHECK(cs.class_size(0) == 15);
  CHECK(cs.class_size(1) == 15);
  for (const auto& c : cs.cliques) CHECK(c.count() == 7);
  // each class is either all stars or all tops
  for (int c : {0, 1}) {
    int stars = 0;
    for (const auto& K : cs.class_cliques(c)) {
      auto idx = K.indices();
      Subspace m = lines[idx[0]];
      for (auto x : idx) m = meet(m, lines[x]);
      stars += m.pdim() == 0;
    }
    CHECK((stars == 0 || stars == 15));
  }
  CHECK(cs.lines.size() == 15 * 7);  // incident point-plane pairs
  for (const auto& L : cs.lines) CHECK(L.count() == 3);
}

TEST_CASE("non-Grassmann inputs") {
  CHECK_THROWS_AS(clique_system(complete(7)), Error);
  CHECK_THROWS_AS(clique_system(cycle(5)), Error);
  CHECK(unique_max_clique_test(complete(4)));
  CHECK(!unique_max_clique_test(cycle(5)));
  CHECK(maximal_cliques(cycle(5)).size() == 5);
  CHECK(maximal_cliques(complete(6)).size() == 1);
}

TEST_CASE("unique maximal clique test separates type I") {
  auto fam = build_family(thick(2, 3, 0, 2, 0));
  CHECK(unique_max_clique_test(grassmann_from_roundups(fam.graph, Side::A, false)));
  auto G = build_bigraph(thick(2, 5, 2, 2, 1, Mode::AtLeast));
  CHECK(!unique_max_clique_test(grassmann_from_roundups(G, Side::A, false)));
}
