#include <random>

#include "doctest.h"
#include "weyl/error.hpp"
#include "weyl/roundup.hpp"

using namespace weyl;

namespace {

// Direct per-vertex recount of the definition.
TripleVerdict brute_triple(const BiGraph& G, Side s, std::array<std::size_t, 3> v) {
  TripleVerdict out;
  for (std::size_t x = 0; x < G.size(other(s)); ++x) {
    int c = 0;
    for (auto u : v) c += G.nbrs(s, u).test(x);
    if (c == 3 && !out.witness_common) out.witness_common = x;
    if (c == 2 && !out.violator) out.violator = x;
  }
  out.is_roundup = out.witness_common && !out.violator;
  return out;
}

QuadVerdict brute_quad(const BiGraph& G, Side s, std::array<std::size_t, 4> v) {
  QuadVerdict out;
  for (std::size_t x = 0; x < G.size(other(s)); ++x) {
    int c = 0;
    for (auto u : v) c += G.nbrs(s, u).test(x);
    if (c >= 3 && !out.witness) out.witness = x;
    if (c == 2 && !out.violator) out.violator = x;
  }
  out.is_roundup = out.witness && !out.violator;
  return out;
}

}  // namespace

TEST_CASE("regular triple oracle") {
  const auto& F = FieldSpec::get(2);
  auto P = [&](Vec v) { return canonicalize(2, F, {v}); };
  CHECK(is_regular_triple(P({1, 0, 0}), P({0, 1, 0}), P({1, 1, 0})));
  CHECK(!is_regular_triple(P({1, 0, 0}), P({0, 1, 0}), P({0, 0, 1})));
  CHECK(!is_regular_triple(P({1, 0, 0}), P({1, 0, 0}), P({0, 0, 1})));

  // planes of PG(3,2) pairwise meeting in distinct lines
  auto Q = [&](std::vector<Vec> r) { return canonicalize(3, F, r); };
  auto a = Q({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  auto b = Q({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
  auto c = Q({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(meet(a, b) != meet(a, c));
  CHECK(!is_regular_triple(a, b, c));
  CHECK_THROWS_AS(is_regular_triple(a, b, P({1, 0, 0})), Error);
}

TEST_CASE("triple verdicts: type II round-up and brute-force agreement") {
  auto fam = build_family(thick(2, 5, 2, 2, 1, Mode::AtLeast));
  const auto& J = fam.thick_b;
  // three planes through a common line inside a common solid
  std::size_t a = 0, b = 0, c = 0;
  bool found = false;
  for (b = 1; b < J.size() && !found; ++b)
    for (c = b + 1; c < J.size() && !found; ++c)
      if (is_regular_triple(J[a], J[b], J[c])) found = true;
  REQUIRE(found);
  --b;
  --c;
  auto v = triple_verdict(fam.graph, Side::B, {a, b, c});
  CHECK(v.is_roundup);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 2000; ++t) {
    std::array<std::size_t, 3> x{rng() % J.size(), rng() % J.size(), rng() % J.size()};
    if (x[0] == x[1] || x[0] == x[2] || x[1] == x[2]) continue;
    auto got = triple_verdict(fam.graph, Side::B, x), want = brute_triple(fam.graph, Side::B, x);
    CHECK(got.is_roundup == want.is_roundup);
    CHECK(got.witness_common == want.witness_common);
    CHECK(got.violator == want.violator);
  }
  CHECK_THROWS_AS(triple_verdict(fam.graph, Side::B, {1, 1, 2}), Error);
}

TEST_CASE("type III graphs have no round-up triples on regular triples") {
  auto fam = build_family(thick(3, 3, 1, 1, 0));
  const auto& J = fam.thick_b;
  int regular = 0;
  for (std::size_t b = 1; b < J.size(); ++b)
    for (std::size_t c = b + 1; c < J.size(); ++c)
      if (is_regular_triple(J[0], J[b], J[c])) {
        ++regular;
        CHECK(!triple_verdict(fam.graph, Side::B, {0, b, c}).is_roundup);
      }
  CHECK(regular > 0);
}

TEST_CASE("quad verdicts") {
  auto fam = build_family(thick(3, 3, 1, 1, 0));
  const auto& J = fam.thick_b;
  // four lines through a point inside a plane (q = 3 gives exactly four)
  std::vector<std::size_t> pencil{0};
  for (std::size_t b = 1; b < J.size() && pencil.size() < 4; ++b) {
    bool ok = true;
    for (std::size_t p : pencil) ok &= pencil.size() < 2 ? meet(J[p], J[b]).pdim() == 0 : is_regular_triple(J[pencil[0]], J[pencil[1]], J[b]);
    if (ok) pencil.push_back(b);
  }
  REQUIRE(pencil.size() == 4);
  CHECK(is_regular_quad(J[pencil[0]], J[pencil[1]], J[pencil[2]], J[pencil[3]]));
  CHECK(quad_verdict(fam.graph, Side::B, {pencil[0], pencil[1], pencil[2], pencil[3]}).is_roundup);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 3000; ++t) {
    std::array<std::size_t, 4> x{rng() % J.size(), rng() % J.size(), rng() % J.size(), rng() % J.size()};
    bool distinct = true;
    for (int p = 0; p < 4; ++p)
      for (int r = p + 1; r < 4; ++r) distinct &= x[p] != x[r];
    if (!distinct) continue;
    auto got = quad_verdict(fam.graph, Side::B, x), want = brute_quad(fam.graph, Side::B, x);
    CHECK(got.is_roundup == want.is_roundup);
    CHECK(got.witness == want.witness);
    CHECK(got.violator == want.violator);
    // unequal pairwise meets rule out a round-up quadruple
    int d01 = meet(J[x[0]], J[x[1]]).pdim();
    bool unequal = false;
    for (int p = 0; p < 4; ++p)
      for (int r = p + 1; r < 4; ++r) unequal |= meet(J[x[p]], J[x[r]]).pdim() != d01;
    if (unequal) CHECK(!got.is_roundup);
  }
  CHECK_THROWS_AS(quad_verdict(fam.graph, Side::B, {0, 1, 2, 2}), Error);
}

TEST_CASE("property (min)") {
  auto G = build_bigraph(thick(2, 6, 1, 4, 1));
  CHECK(satisfies_min(G, Side::B, 0));

  auto H = build_bigraph(thick(2, 5, 2, 2, 1, Mode::AtLeast));
  for (std::size_t v : {0, 17, 400, 1394}) {
    CHECK(!satisfies_min(H, Side::A, v));
    CHECK(!satisfies_min(H, Side::B, v));
  }
  auto K = build_bigraph(thick(2, 3, 1, 1, -1));
  CHECK(!satisfies_min(K, Side::A, 0));
  // (0, n-1) is excluded from (min)
  CHECK(!satisfies_min(build_bigraph(thick(2, 3, 0, 2, 0)), Side::A, 0));
  CHECK(!satisfies_min(build_bigraph(thick(2, 3, 0, 2, 0)), Side::B, 0));
}

TEST_CASE("pair-intersection property") {
  CHECK(every_vertex_is_pair_intersection(build_bigraph(thick(2, 3, 1, 2, 1))));
  CHECK(!every_vertex_is_pair_intersection(build_bigraph(thick(2, 5, 2, 2, 1, Mode::AtLeast))));
  CHECK(!every_vertex_is_pair_intersection(build_bigraph(thick(2, 3, 1, 1, 1))));
}
