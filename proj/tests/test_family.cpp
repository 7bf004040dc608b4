#include <map>
#include <sstream>

#include "doctest.h"
#include "weyl/error.hpp"
#include "weyl/family.hpp"
#include "weyl/graph_io.hpp"

using namespace weyl;

namespace {

std::vector<FamilySpec> thick_specs(int q, int n) {
  std::vector<FamilySpec> out;
  for (int i = 0; i <= n - 1; ++i)
    for (int j = i; j <= n - 1; ++j)
      for (int k = -1; k <= i; ++k)
        for (Mode m : {Mode::Exact, Mode::AtLeast}) out.push_back(thick(q, n, i, j, k, m));
  return out;
}

std::vector<FamilySpec> thin_specs(int n) {
  std::vector<FamilySpec> out;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i; j <= n - 1; ++j)
      for (int k = 0; k <= i; ++k)
        for (Mode m : {Mode::Exact, Mode::AtLeast}) out.push_back(thin(n, i, j, k, m));
  return out;
}

std::size_t index_in(const std::vector<Subspace>& v, const Subspace& s) {
  return std::lower_bound(v.begin(), v.end(), s) - v.begin();
}

}  // namespace

TEST_CASE("Fano incidence graph") {
  auto fam = build_family(thick(2, 2, 0, 1, 0));
  const auto& G = fam.graph;
  CHECK(G.size_a() == 7);
  CHECK(G.size_b() == 7);
  CHECK(G.valence(Side::A) == 3u);
  CHECK(G.valence(Side::B) == 3u);
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = 0; b < 7; ++b) CHECK(G.adj(a, b) == contains_vector(fam.thick_b[b], fam.thick_a[a].row(0)));
}

TEST_CASE("thin valences and matchings") {
  CHECK(build_bigraph(thin(6, 2, 2, 0)).valence(Side::A) == 6u);
  CHECK(build_bigraph(thin(6, 2, 2, 1)).valence(Side::A) == 8u);
  auto M = build_bigraph(thick(2, 3, 1, 1, 1));
  CHECK(M.size_a() == 35);
  CHECK(classify_trivial(M) == TrivialKind::Matching);
}

TEST_CASE("simple graphs") {
  auto S = build_simple(thin(10, 3, 3, 1));
  CHECK(S.size() == 120);
  for (std::size_t v = 0; v < S.size(); ++v) CHECK(S.degree(v) == 63);

  auto T = build_simple(thick(2, 3, 1, 1, 0));
  auto B = build_bigraph(thick(2, 3, 1, 1, 0));
  CHECK(T.size() == 35);
  for (std::size_t v = 0; v < T.size(); ++v) CHECK(T.degree(v) == *B.valence(Side::A));

  CHECK(build_simple(thick(2, 3, 1, 1, 1, Mode::AtLeast)).edge_count() == 0);
  CHECK(build_simple(thin(6, 2, 2, 2, Mode::AtLeast)).edge_count() == 0);
}

TEST_CASE("invalid specs") {
  CHECK_THROWS_AS(build_bigraph(thick(2, 3, 1, 1, 2)), Error);
  CHECK_THROWS_AS(build_bigraph(thick(2, 3, 1, 3, 0)), Error);
  CHECK_THROWS_AS(build_bigraph(thin(5, 0, 2, 0)), Error);
  CHECK_THROWS_AS(build_bigraph(thick(6, 3, 1, 1, 0)), Error);
  set_vertex_cap(30);
  CHECK_THROWS_AS(build_bigraph(thick(2, 3, 1, 1, 0)), Error);
  set_vertex_cap(20000);
}

TEST_CASE("bipartite complement") {
  auto G = build_bigraph(thick(2, 3, 1, 1, 0));
  auto C = bipartite_complement(G);
  CHECK(bipartite_complement(C) == G);
  CHECK(G.edge_count() + C.edge_count() == G.size_a() * G.size_b());
  for (int n : {3, 4})
    CHECK(bipartite_complement(build_bigraph(thick(2, n, 1, 1, -1))) ==
          build_bigraph(thick(2, n, 1, 1, 0, Mode::AtLeast)));
  // k = i+j+1-n for (n,i,j) = (4,1,2): at-least 0 is the complement of exact -1
  CHECK(build_bigraph(thick(2, 4, 1, 2, 0, Mode::AtLeast)) == bipartite_complement(build_bigraph(thick(2, 4, 1, 2, -1))));
  // and one step up for (n,i,j) = (3,1,2): at-least 1 complements exact 0
  CHECK(build_bigraph(thick(2, 3, 1, 2, 1, Mode::AtLeast)) == bipartite_complement(build_bigraph(thick(2, 3, 1, 2, 0))));
}

TEST_CASE("bipartite doubles") {
  SimpleGraph E(5);
  CHECK(bipartite_double(E, false).edge_count() == 0);
  CHECK(classify_trivial(bipartite_double(E, true)) == TrivialKind::Matching);

  CHECK(bipartite_double(build_simple(thick(2, 5, 2, 2, 1, Mode::AtLeast)), true) ==
        build_bigraph(thick(2, 5, 2, 2, 1, Mode::AtLeast)));
  CHECK(bipartite_double(build_simple(thin(7, 3, 3, 1)), false) == build_bigraph(thin(7, 3, 3, 1)));
}

TEST_CASE("classify trivial examples") {
  CHECK(classify_trivial(build_bigraph(thick(2, 5, 2, 2, 2))) == TrivialKind::Matching);
  CHECK(classify_trivial(build_bigraph(thick(2, 3, 1, 2, -1))) == TrivialKind::Empty);
  CHECK(classify_trivial(build_bigraph(thick(2, 3, 1, 2, 0))) == TrivialKind::Nontrivial);
  CHECK(classify_trivial(build_bigraph(thin(4, 2, 2, 0))) == TrivialKind::Matching);
  CHECK(classify_trivial(build_bigraph(thin(5, 2, 3, 0, Mode::AtLeast))) == TrivialKind::CompleteBipartite);
  CHECK(classify_trivial(build_bigraph(thick(2, 2, 1, 1, 0))) == TrivialKind::ComplementOfMatching);
  CHECK(classify_trivial(build_bigraph(thick(2, 3, 1, 1, 0))) == TrivialKind::Nontrivial);
}

TEST_CASE("twins and distinguishing neighbours") {
  auto M = build_bigraph(thick(2, 3, 1, 1, 1));
  CHECK(twin_free(M));
  BiGraph K(3, 3);
  CHECK(!twin_free(bipartite_complement(K)));

  auto fam = build_family(thick(2, 3, 1, 1, 0));
  for (std::size_t a = 0; a < fam.thick_a.size(); ++a)
    for (std::size_t b = 0; b < fam.thick_a.size(); ++b)
      if (meet(fam.thick_a[a], fam.thick_a[b]).rank() == 0) CHECK(distinguishing_neighbors(fam.graph, Side::A, a, b) >= 2);
  CHECK_THROWS_AS(distinguishing_neighbors(fam.graph, Side::A, 3, 3), Error);

  auto G = build_bigraph(thick(2, 4, 1, 2, 0, Mode::AtLeast));
  std::size_t lo = SIZE_MAX;
  for (Side s : {Side::A, Side::B})
    for (std::size_t u = 0; u < G.size(s); ++u)
      for (std::size_t v = 0; v < G.size(s); ++v)
        if (u != v) lo = std::min(lo, distinguishing_neighbors(G, s, u, v));
  CHECK(lo >= 2);
}

TEST_CASE("thin complement identity on the j-side") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& s : thin_specs(n)) {
      if (s.mode != Mode::Exact) continue;
      FamilySpec t = thin(n, s.i, n - s.j, s.i - s.k);
      if (!t.valid()) continue;
      auto F1 = build_family(s), F2 = build_family(t);
      std::map<std::uint32_t, std::size_t> pos;
      for (std::size_t b = 0; b < F2.thin_b.size(); ++b) pos[F2.thin_b[b]] = b;
      const std::uint32_t all = (1u << n) - 1;
      bool same = true;
      for (std::size_t a = 0; a < F1.thin_a.size(); ++a)
        for (std::size_t b = 0; b < F1.thin_b.size(); ++b)
          same &= F1.graph.adj(a, b) == F2.graph.adj(a, pos.at(all & ~F1.thin_b[b]));
      CHECK_MESSAGE(same, s.to_string());
    }
}

TEST_CASE("thick duality maps edges onto the dual family") {
  for (int q : {2, 3})
    for (int n = 2; n <= 4; ++n)
      for (const auto& s : thick_specs(q, n)) {
        FamilySpec d = thick(q, n, n - 1 - s.j, n - 1 - s.i, n - 1 + s.k - s.i - s.j, s.mode);
        if (!d.valid()) continue;
        auto F1 = build_family(s), F2 = build_family(d);
        std::vector<std::size_t> to_a(F1.thick_b.size()), to_b(F1.thick_a.size());
        for (std::size_t b = 0; b < F1.thick_b.size(); ++b) to_a[b] = index_in(F2.thick_a, dual_complement(F1.thick_b[b]));
        for (std::size_t a = 0; a < F1.thick_a.size(); ++a) to_b[a] = index_in(F2.thick_b, dual_complement(F1.thick_a[a]));
        bool same = true;
        for (std::size_t a = 0; a < F1.thick_a.size(); ++a)
          for (std::size_t b = 0; b < F1.thick_b.size(); ++b) same &= F1.graph.adj(a, b) == F2.graph.adj(to_a[b], to_b[a]);
        CHECK_MESSAGE(same, s.to_string());
      }
}

TEST_CASE("bivalences are constant and match the counting formula") {
  std::vector<FamilySpec> specs = thick_specs(2, 3);
  for (auto s : thick_specs(3, 3)) specs.push_back(s);
  for (auto s : thin_specs(7)) specs.push_back(s);
  for (const auto& s : specs) {
    auto G = build_bigraph(s);
    auto va = G.valence(Side::A), vb = G.valence(Side::B);
    REQUIRE(va.has_value());
    REQUIRE(vb.has_value());
    CHECK(*va == valence_formula(s, s.i, s.j));
    CHECK(*vb == valence_formula(s, s.j, s.i));
    CHECK(G.size_a() == part_size(s, s.i));
  }
}

TEST_CASE("graph files round-trip") {
  auto spec = thick(2, 3, 1, 1, 0, Mode::AtLeast);
  auto G = build_bigraph(spec);
  std::stringstream ss;
  write_graph(ss, G, spec);
  auto f = read_graph(ss);
  REQUIRE(f.bipartite());
  CHECK(std::get<BiGraph>(f.graph) == G);
  REQUIRE(f.spec.has_value());
  CHECK(*f.spec == spec);

  auto S = build_simple(thin(6, 2, 2, 1));
  std::stringstream ss2;
  write_graph(ss2, S);
  auto g = read_graph(ss2);
  CHECK(!g.bipartite());
  CHECK(std::get<SimpleGraph>(g.graph) == S);

  std::stringstream bad("WBG1 2 2\n01\n1\n");
  CHECK_THROWS_AS(read_graph(bad), Error);
  std::stringstream bad2("WSG1 2\n01\n00\n");
  CHECK_THROWS_AS(read_graph(bad2), Error);
  std::stringstream bad3("XYZ 2\n");
  CHECK_THROWS_AS(read_graph(bad3), Error);
}

TEST_CASE("trivial predictions agree with built graphs") {
  std::vector<FamilySpec> specs;
  for (int q : {2, 3})
    for (int n = 2; n <= 4; ++n)
      for (auto s : thick_specs(q, n)) specs.push_back(s);
  for (int n = 2; n <= 8; ++n)
    for (auto s : thin_specs(n)) specs.push_back(s);
  for (const auto& s : specs) {
    auto shapes = trivial_shapes(build_bigraph(s));
    auto pred = predicted_trivial(s);
    bool ok = pred.empty() ? shapes.empty() : std::includes(shapes.begin(), shapes.end(), pred.begin(), pred.end());
    CHECK_MESSAGE(ok, s.to_string());
  }
}
