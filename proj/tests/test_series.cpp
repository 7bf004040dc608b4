#include <bit>
#include <map>

#include "doctest.h"
#include "weyl/error.hpp"
#include "weyl/series.hpp"

using namespace weyl;

namespace {

// The (j-1)- or (j+1)-space a clique of j-spaces corresponds to.
Subspace clique_label(const Bitset& K, const std::vector<Subspace>& js) {
  auto idx = K.indices();
  Subspace m = js[idx[0]], s = js[idx[0]];
  for (auto x : idx) {
    m = meet(m, js[x]);
    s = join(s, js[x]);
  }
  return m.pdim() == js[0].pdim() - 1 ? m : s;
}

// Labeled comparison of a series step against the directly built family.
bool step_matches(const Family& fam, const CliqueSystem& cs, int cls, Quantifier q, const FamilySpec& target) {
  BiGraph step = q == Quantifier::Exists || q == Quantifier::Forall ? series_step_typeII(fam.graph, cs, cls, q)
                                                                     : series_step_typeIII(fam.graph, cs, cls, q);
  auto T = build_family(target);
  auto cl = cs.class_cliques(cls);
  if (cl.size() != T.thick_b.size()) return false;
  for (std::size_t x = 0; x < cl.size(); ++x) {
    Subspace lab = clique_label(cl[x], fam.thick_b);
    if (lab.pdim() != target.j) return false;
    std::size_t b = std::lower_bound(T.thick_b.begin(), T.thick_b.end(), lab) - T.thick_b.begin();
    for (std::size_t a = 0; a < fam.thick_a.size(); ++a)
      if (step.adj(a, x) != T.graph.adj(a, b)) return false;
  }
  return true;
}

int class_with_dim(const CliqueSystem& cs, const std::vector<Subspace>& js, int d) {
  return clique_label(cs.class_cliques(0)[0], js).pdim() == d ? 0 : 1;
}

}  // namespace

TEST_CASE("type II steps equal the directly built families") {
  auto fam = build_family(thick(2, 5, 2, 2, 1, Mode::AtLeast));
  auto cs = clique_system(grassmann_from_roundups(fam.graph, Side::B, false));
  const int minus = class_with_dim(cs, fam.thick_b, 1), plus = 1 - minus;
  CHECK(step_matches(fam, cs, minus, Quantifier::Exists, thick(2, 5, 2, 1, 0, Mode::AtLeast)));
  CHECK(step_matches(fam, cs, plus, Quantifier::Forall, thick(2, 5, 2, 3, 2, Mode::AtLeast)));
  CHECK(step_matches(fam, cs, minus, Quantifier::Forall, thick(2, 5, 2, 1, 1, Mode::AtLeast)));
  CHECK(step_matches(fam, cs, plus, Quantifier::Exists, thick(2, 5, 2, 3, 1, Mode::AtLeast)));
}

TEST_CASE("type III steps equal the directly built families") {
  auto fam = build_family(thick(3, 3, 1, 1, 0));
  auto cs = clique_system(grassmann_from_roundups(fam.graph, Side::B, true));
  const int minus = class_with_dim(cs, fam.thick_b, 0), plus = 1 - minus;
  CHECK(step_matches(fam, cs, minus, Quantifier::ForallMinus1, thick(3, 3, 1, 0, 0)));
  CHECK(step_matches(fam, cs, plus, Quantifier::Exists1, thick(3, 3, 1, 2, 0)));
  CHECK(step_matches(fam, cs, plus, Quantifier::ForallMinus1, thick(3, 3, 1, 2, 1)));
  CHECK(step_matches(fam, cs, minus, Quantifier::Exists1, thick(3, 3, 1, 0, -1)));
  CHECK_THROWS_AS(series_step_typeIII(fam.graph, cs, 0, Quantifier::Exists), Error);
}

TEST_CASE("stopping indices") {
  SUBCASE("thick type II") {
    auto s = thick(2, 5, 2, 2, 1, Mode::AtLeast);
    auto G = build_bigraph(s);
    auto r = run_series(G, clique_system(grassmann_from_roundups(G, Side::B, false)), SeriesType::II);
    CHECK(r.stop == std::array<int, 4>{2, 2, 2, 2});
    CHECK(params_from_stops(r.stop, SeriesType::II, false, 2) == s);
  }
  SUBCASE("thin type II") {
    auto s = thin(8, 2, 3, 1, Mode::AtLeast);
    auto G = build_bigraph(s);
    auto r = run_series(G, clique_system(grassmann_from_profile(G, Side::B)), SeriesType::II);
    CHECK(r.stop == expected_stops(s));
    CHECK(params_from_stops(r.stop, SeriesType::II, true, 2) == s);
  }
  SUBCASE("type III") {
    auto s = thick(3, 3, 1, 1, 0);
    auto G = build_bigraph(s);
    auto r = run_series(G, clique_system(grassmann_from_roundups(G, Side::B, true)), SeriesType::III);
    CHECK(r.stop == expected_stops(s));
    CHECK(params_from_stops(r.stop, SeriesType::III, false, 3) == s);
  }
}
