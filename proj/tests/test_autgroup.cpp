#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "print.hpp"
#include "weyl/autgroup.hpp"

using namespace weyl;

namespace {

// counts adjacency-preserving bijections by plain backtracking
std::uint64_t brute_force_count(const ColoredGraph& G) {
  const std::size_t N = G.size();
  std::vector<int> img(N, -1);
  std::vector<char> used(N, 0);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == N) {
      ++count;
      return;
    }
    for (std::size_t w = 0; w < N; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = G.adj[v].test(u) == G.adj[w].test(img[u]);
      if (!ok) continue;
      used[w] = 1;
      img[v] = static_cast<int>(w);
      self(self, v + 1);
      used[w] = 0;
    }
  };
  rec(rec, 0);
  return count;
}

BiGraph relabel(const BiGraph& G, std::mt19937& rng) {
  std::vector<std::size_t> pa(G.size_a()), pb(G.size_b());
  std::iota(pa.begin(), pa.end(), 0);
  std::iota(pb.begin(), pb.end(), 0);
  std::shuffle(pa.begin(), pa.end(), rng);
  std::shuffle(pb.begin(), pb.end(), rng);
  std::vector<Bitset> rows(G.size_a(), Bitset(G.size_b()));
  for (std::size_t a = 0; a < G.size_a(); ++a)
    G.nbrs(Side::A, a).for_each([&](std::size_t b) { rows[pa[a]].set(pb[b]); });
  return BiGraph(rows, G.size_b());
}

bool is_automorphism(const ColoredGraph& G, const Perm& p) {
  for (std::size_t v = 0; v < G.size(); ++v)
    for (std::size_t w = 0; w < G.size(); ++w)
      if (G.adj[v].test(w) != G.adj[p[v]].test(p[w])) return false;
  return true;
}

}  // namespace

TEST_CASE("colour refinement") {
  SimpleGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  auto c = color_refine(path, {0, 0, 0});
  CHECK(c[0] == c[2]);
  CHECK(c[0] != c[1]);

  auto h = color_refine(build_bigraph(thick(2, 2, 0, 1, 0)));
  CHECK(std::set<int>(h.begin(), h.end()).size() == 2);
}

TEST_CASE("projective group orders") {
  CHECK(pgl_order(2, 2) == 168);
  CHECK(pgl_order(3, 2) == 20160);
  CHECK(pgammal_order(2, 4) == 2 * pgl_order(2, 4));
  CHECK(pgl_order(2, 4) == 60480);
}

TEST_CASE("small automorphism groups") {
  BiGraph heawood = build_bigraph(thick(2, 2, 0, 1, 0));
  auto aut = automorphisms(heawood);
  CHECK(aut.order() == 336);
  CHECK(brute_force_count(ColoredGraph::from(SimpleGraph(0))) == 1);
  ColoredGraph hc = ColoredGraph::from(heawood);
  CHECK(brute_force_count(hc) == 336);
  for (const auto& g : aut.generators()) CHECK(is_automorphism(hc, g));

  std::vector<Bitset> full(3, Bitset(3));
  for (auto& r : full) r.set_all();
  CHECK(automorphisms(BiGraph(full, 3)).order() == 72);
}

TEST_CASE("geometric generators") {
  CHECK(geometric_generators(thick(2, 2, 0, 1, 0)).order() == 336);
  // the linear and Frobenius part on the points of PG(2,4)
  auto G = geometric_generators(thick(4, 2, 0, 1, 0));
  std::vector<Perm> on_points;
  for (const auto& g : G.generators())
    if (g[0] < 21) on_points.push_back(Perm(g.begin(), g.begin() + 21));
  CHECK(PermGroup(21, on_points).order() == pgammal_order(2, 4));

  for (auto s : {thick(2, 3, 1, 1, 0), thick(2, 3, 1, 2, 1)}) {
    INFO(s.to_string());
    CHECK(automorphisms(build_bigraph(s)).order() == geometric_generators(s).order());
  }
  CHECK(geometric_generators(thin(8, 2, 3, 1)).order() == 40320);
  CHECK(automorphisms(build_bigraph(thin(8, 2, 3, 1))).order() == 40320);
}

TEST_CASE("thin exceptions") {
  auto duads = thin(6, 2, 2, 1);
  CHECK(thin_symmetric_order(duads) == 1440);
  CHECK(automorphisms(build_bigraph(duads)).order() == 40320);
  CHECK(geometric_generators(duads).order() == 40320);

  auto triples = thin(7, 3, 3, 1);
  CHECK(automorphisms(build_bigraph(triples)).order() == 80640);
  CHECK(geometric_generators(triples).order() == 80640);
}

TEST_CASE("canonical certificates") {
  std::mt19937 rng(7);
  for (auto s : {thick(2, 2, 0, 1, 0), thick(2, 3, 1, 1, 0), thin(7, 2, 3, 1)}) {
    INFO(s.to_string());
    BiGraph G = build_bigraph(s);
    auto c = canonical(G);
    CHECK(canonical(relabel(G, rng)).certificate == c.certificate);
    CHECK(canonical(G.swapped()).certificate == c.certificate);
  }
  // lines of PG(3,2) meeting in a point against 3-sets of 7 meeting in one element
  CHECK(canonical(build_bigraph(thick(2, 3, 1, 1, 0))).certificate ==
        canonical(build_bigraph(thin(7, 3, 3, 1))).certificate);
  CHECK(canonical(build_bigraph(thick(2, 3, 1, 1, 0))).certificate !=
        canonical(build_bigraph(thick(2, 3, 1, 1, -1))).certificate);
  CHECK(canonical(build_bigraph(thin(7, 3, 3, 1))).certificate !=
        canonical(build_bigraph(thin(7, 3, 3, 2))).certificate);
}
