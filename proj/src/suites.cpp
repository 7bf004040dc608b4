#include "weyl/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "weyl/autgroup.hpp"
#include "weyl/error.hpp"
#include "weyl/field.hpp"
#include "weyl/projgeom.hpp"
#include "weyl/reconstruct.hpp"
#include "weyl/roundup.hpp"
#include "weyl/series.hpp"
#include "weyl/thinext.hpp"

namespace weyl {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

std::size_t SuiteResult::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

std::vector<FamilySpec> admissible_specs(Geometry g, int q, int n) {
  std::vector<FamilySpec> out;
  const bool th = g == Geometry::Thin;
  for (int i = 0; i <= n - 1; ++i)
    for (int j = 0; j <= n - 1; ++j)
      for (int k = th ? 0 : -1; k <= std::min(i, j); ++k)
        for (Mode m : {Mode::Exact, Mode::AtLeast}) {
          FamilySpec s = th ? thin(n, i, j, k, m) : thick(q, n, i, j, k, m);
          if (s.valid()) out.push_back(s);
        }
  return out;
}

bool in_thin_scope(const FamilySpec& s) {
  if (!s.thin() || !s.valid()) return false;
  if (s.i < 1 || s.i > s.j || 2 * s.j > s.n || s.k >= s.j) return false;
  if (s.mode == Mode::Exact) return 2 * s.j < s.n || 2 * s.k <= s.i;
  return s.k != 0 && (2 * s.j < s.n || 2 * s.k <= s.i + 1);
}

bool thin_exception(const FamilySpec& s) {
  if (!s.thin() || s.mode != Mode::Exact || s.i != s.j) return false;
  if (s.n == 6 && s.i == 2 && s.k == 1) return true;
  return s.n >= 7 && (s.n + 1) % 4 == 0 && s.i == (s.n - 1) / 2 && s.k == (s.n + 1) / 4 - 1;
}

std::vector<FamilySpec> thick_instances(int max_n, std::uint64_t max_part) {
  std::set<FamilySpec> seen;
  for (int q : {2, 3})
    for (int n = 1; n <= max_n; ++n)
      for (const auto& s : admissible_specs(Geometry::Thick, q, n)) {
        if (!predicted_trivial(s).empty()) continue;
        const FamilySpec t = normalize(s).spec;
        if (!t.valid()) throw Error(ErrorKind::AxiomViolation, "normal form of " + s.to_string() + " is invalid");
        if (part_size(t, t.i) > max_part || part_size(t, t.j) > max_part) continue;
        if (!predicted_trivial(t).empty()) continue;
        seen.insert(t);
      }
  return {seen.begin(), seen.end()};
}

std::vector<FamilySpec> thin_instances(int max_n) {
  std::set<FamilySpec> seen;
  for (int n = 2; n <= max_n; ++n)
    for (const auto& s : admissible_specs(Geometry::Thin, 0, n))
      if (in_thin_scope(s) && predicted_trivial(s).empty()) seen.insert(s);
  return {seen.begin(), seen.end()};
}

FamilySpec thick_dual(const FamilySpec& s) {
  return thick(s.q, s.n, s.n - 1 - s.i, s.n - 1 - s.j, s.n - 1 + s.k - s.i - s.j, s.mode);
}

namespace {

using Clock = std::chrono::steady_clock;

std::string label(const FamilySpec& s) {
  std::ostringstream os;
  os << (s.thin() ? std::string("thin") : "thick" + std::to_string(s.q)) << '(' << s.n << ',' << s.i << ','
     << s.j << ',' << (s.mode == Mode::AtLeast ? ">=" : "") << s.k << ')';
  return os.str();
}

std::string join_shapes(const std::set<TrivialKind>& ks) {
  if (ks.empty()) return "nontrivial";
  std::string r;
  for (auto k : ks) r += (r.empty() ? "" : "+") + std::string(to_string(k));
  return r;
}

std::string join_ints(const std::array<int, 4>& a) {
  return std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + "," +
         std::to_string(a[3]);
}

struct Recorder {
  SuiteResult& res;
  const SuiteOptions& opt;

  void operator()(std::string name, std::string expected, std::string observed, bool ok) {
    add({std::move(name), std::move(expected), std::move(observed), ok ? CheckStatus::Pass : CheckStatus::Fail});
  }
  void skip(std::string name, std::string why) { add({std::move(name), "-", std::move(why), CheckStatus::Skip}); }
  void eq(std::string name, const std::string& expected, const std::string& observed) {
    (*this)(std::move(name), expected, observed, expected == observed);
  }
  void add(CheckResult c) {
    if (opt.on_check) opt.on_check(c);
    res.checks.push_back(std::move(c));
  }
};

void trivial_shapes_suite(Recorder& rec) {
  std::vector<FamilySpec> specs;
  for (int q : {2, 3})
    for (int n = 1; n <= 4; ++n)
      for (const auto& s : admissible_specs(Geometry::Thick, q, n)) specs.push_back(s);
  for (int n = 2; n <= 8; ++n)
    for (const auto& s : admissible_specs(Geometry::Thin, 0, n)) specs.push_back(s);
  for (const auto& s : specs) {
    const auto shapes = trivial_shapes(build_bigraph(s));
    const auto pred = predicted_trivial(s);
    const bool ok =
        pred.empty() ? shapes.empty() : std::includes(shapes.begin(), shapes.end(), pred.begin(), pred.end());
    rec("trivial/" + label(s), join_shapes(pred), join_shapes(shapes), ok);
  }
}

void roundup_suite(Recorder& rec, const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed);

  {  // lines of PG(3,2) meeting in a point, every triple
    const Family fam = build_family(thick(2, 3, 1, 1, 0, Mode::AtLeast));
    const auto& J = fam.thick_b;
    std::size_t total = 0, bad = 0;
    for (std::size_t a = 0; a < J.size(); ++a)
      for (std::size_t b = a + 1; b < J.size(); ++b)
        for (std::size_t c = b + 1; c < J.size(); ++c, ++total)
          bad += triple_verdict(fam.graph, Side::B, {a, b, c}).is_roundup != is_regular_triple(J[a], J[b], J[c]);
    rec("triples/thick2(3,1,1,>=0)/exhaustive-" + std::to_string(total), "0", std::to_string(bad), bad == 0);
  }

  {  // planes of PG(5,2) meeting in a line
    const FamilySpec spec = thick(2, 5, 2, 2, 1, Mode::AtLeast);
    const Family fam = build_family(spec);
    const auto& J = fam.thick_b;
    const PointTable pts(5, FieldSpec::get(2));
    std::vector<Bitset> sets;
    std::unordered_map<Bitset, std::size_t, BitsetHash> index;
    for (std::size_t x = 0; x < J.size(); ++x) {
      sets.push_back(pts.point_set(J[x]));
      index[sets.back()] = x;
    }
    // over GF(2) the third plane through L inside a + b is L plus the points of a + b on neither
    std::size_t regular = 0, bad = 0;
    for (std::size_t a = 0; a < J.size(); ++a)
      for (std::size_t b = a + 1; b < J.size(); ++b) {
        if (sets[a].intersect_count(sets[b]) != 3) continue;
        Bitset c = pts.point_set(join(J[a], J[b]));
        c.and_not(sets[a] | sets[b]);
        c |= sets[a] & sets[b];
        const std::size_t z = index.at(c);
        if (z < b) continue;
        ++regular;
        bad += !is_regular_triple(J[a], J[b], J[z]) || !triple_verdict(fam.graph, Side::B, {a, b, z}).is_roundup;
      }
    // (line, solid) flags: lines of PG(5,2) times the solids through a line
    const std::uint64_t flags = gaussian_binomial(6, 2, 2) * gaussian_binomial(4, 2, 2);
    rec.eq("triples/" + label(spec) + "/regular", std::to_string(flags), std::to_string(regular));
    rec("triples/" + label(spec) + "/regular-mismatches", "0", std::to_string(bad), bad == 0);

    std::size_t rbad = 0;
    for (std::uint64_t t = 0; t < opt.random_samples; ++t) {
      std::array<std::size_t, 3> x{};
      do {
        for (auto& e : x) e = rng() % J.size();
      } while (x[0] == x[1] || x[0] == x[2] || x[1] == x[2]);
      rbad += triple_verdict(fam.graph, Side::B, x).is_roundup != is_regular_triple(J[x[0]], J[x[1]], J[x[2]]);
    }
    rec("triples/" + label(spec) + "/random-" + std::to_string(opt.random_samples), "0", std::to_string(rbad),
        rbad == 0);
  }

  {  // lines of PG(3,3) meeting in a point
    const FamilySpec spec = thick(3, 3, 1, 1, 0);
    const Family fam = build_family(spec);
    const auto& J = fam.thick_b;
    const auto& F = FieldSpec::get(3);
    std::size_t regular = 0, bad = 0;
    for (const auto& p : enumerate_subspaces(3, 0, F))
      for (const auto& pi : enumerate_subspaces(3, 2, F)) {
        if (!contains(pi, p)) continue;
        std::vector<std::size_t> pencil;
        for (std::size_t x = 0; x < J.size(); ++x)
          if (contains(J[x], p) && contains(pi, J[x])) pencil.push_back(x);
        if (pencil.size() != 4) {
          ++bad;
          continue;
        }
        ++regular;
        const std::array<std::size_t, 4> v{pencil[0], pencil[1], pencil[2], pencil[3]};
        bad += !is_regular_quad(J[v[0]], J[v[1]], J[v[2]], J[v[3]]) ||
               !quad_verdict(fam.graph, Side::B, v).is_roundup;
      }
    const std::uint64_t flags = gaussian_binomial(4, 1, 3) * gaussian_binomial(3, 2, 3);
    rec.eq("quads/" + label(spec) + "/regular", std::to_string(flags), std::to_string(regular));
    rec("quads/" + label(spec) + "/regular-mismatches", "0", std::to_string(bad), bad == 0);

    std::size_t rbad = 0;
    for (std::uint64_t t = 0; t < opt.random_samples; ++t) {
      std::array<std::size_t, 4> x{};
      bool distinct = false;
      while (!distinct) {
        for (auto& e : x) e = rng() % J.size();
        distinct = x[0] != x[1] && x[0] != x[2] && x[0] != x[3] && x[1] != x[2] && x[1] != x[3] && x[2] != x[3];
      }
      rbad += quad_verdict(fam.graph, Side::B, x).is_roundup != is_regular_quad(J[x[0]], J[x[1]], J[x[2]], J[x[3]]);
    }
    rec("quads/" + label(spec) + "/random-" + std::to_string(opt.random_samples), "0", std::to_string(rbad),
        rbad == 0);
  }
}

void roundtrip_one(Recorder& rec, const FamilySpec& spec, std::uint64_t seed) {
  const std::string name = "roundtrip/" + label(spec);
  const FamilySpec want = normalize(spec).spec;
  try {
    const BiGraph G = build_bigraph(spec);
    const ReconstructionReport r = reconstruct(G, seed);
    if (!r.params) {
      rec(name, label(want), std::string("trivial:") + (r.trivial_kind ? to_string(*r.trivial_kind) : "?"), false);
      return;
    }
    const FamilySpec got = normalize(*r.params).spec;
    if (got == want) {
      rec(name, label(want), label(got), true);
    } else {
      // an exceptional coincidence: accepted only when the graphs are provably isomorphic
      bool listed = false;
      for (const auto& e : r.equivalents) listed |= normalize(e).spec == want;
      const bool iso = listed && canonical(G).certificate == canonical(build_bigraph(*r.params)).certificate;
      rec(name, label(want), label(got) + (listed ? "~" + label(want) : ""), iso);
    }
    if (r.stop_indices && r.series_spec) {
      const auto expect = expected_stops(*r.series_spec);
      rec(name + "/stops", join_ints(expect), join_ints(*r.stop_indices), expect == *r.stop_indices);
    }
  } catch (const Error& e) {
    rec(name, label(want), e.what(), false);
  }
}

void roundtrip_suite(Recorder& rec, const SuiteOptions& opt) {
  for (const auto& s : thick_instances(5, 2000)) roundtrip_one(rec, s, opt.seed);
  for (const auto& s : thin_instances(9)) roundtrip_one(rec, s, opt.seed);
}

void paper_tables_suite(Recorder& rec) {
  const FamilySpec t10[4] = {thin(10, 3, 3, 0), thin(10, 3, 3, 1), thin(10, 3, 3, 2),
                             thin(10, 3, 3, 2, Mode::AtLeast)};
  const std::size_t v10[4] = {35, 63, 21, 22};
  for (int r = 0; r < 4; ++r) {
    const auto val = build_bigraph(t10[r]).valence(Side::A);
    rec.eq("valence/" + label(t10[r]), std::to_string(v10[r]), val ? std::to_string(*val) : "irregular");
  }
  // common neighbours of two triples by overlap 0, 1, 2
  const std::pair<FamilySpec, std::array<std::uint64_t, 3>> p10[3] = {
      {thin(10, 3, 3, 0), {4, 10, 20}}, {thin(10, 3, 3, 2), {0, 4, 8}}, {thin(10, 3, 3, 2, Mode::AtLeast), {0, 4, 10}}};
  for (const auto& [s, row] : p10) {
    const auto tab = common_neighbor_table(s);
    for (int t = 0; t < 3; ++t)
      rec.eq("common/" + label(s) + "/overlap" + std::to_string(t), std::to_string(row[t]),
             tab[t] ? std::to_string(*tab[t]) : "none");
  }

  const FamilySpec t12[6] = {thin(12, 4, 4, 0), thin(12, 4, 4, 1), thin(12, 4, 4, 2), thin(12, 4, 4, 3),
                             thin(12, 4, 4, 2, Mode::AtLeast), thin(12, 4, 4, 3, Mode::AtLeast)};
  const std::size_t v12[6] = {70, 224, 168, 32, 201, 33};
  const std::uint64_t table[6][4] = {{1, 5, 15, 35},   {96, 100, 100, 126}, {36, 54, 64, 84},
                                     {0, 0, 4, 10},    {36, 72, 102, 138},  {0, 0, 4, 12}};
  for (int r = 0; r < 6; ++r) {
    const auto val = build_bigraph(t12[r]).valence(Side::A);
    rec.eq("valence/" + label(t12[r]), std::to_string(v12[r]), val ? std::to_string(*val) : "irregular");
    const auto tab = common_neighbor_table(t12[r]);
    for (int t = 0; t < 4; ++t)
      rec.eq("common/" + label(t12[r]) + "/overlap" + std::to_string(t), std::to_string(table[r][t]),
             tab[t] ? std::to_string(*tab[t]) : "none");
  }
}

void srg_suite(Recorder& rec) {
  const SimpleGraph H = derived_relation_graph(thin(10, 3, 3, 1), [](std::uint64_t c) { return c == 30; });
  const auto p = srg_parameters(H);
  rec.eq("srg/thin(10,3,3,1)/count30", "(120,63,30,36)",
         p ? "(" + std::to_string(p->v) + "," + std::to_string(p->k) + "," + std::to_string(p->lambda) + "," +
                 std::to_string(p->mu) + ")"
           : "not-strongly-regular");
}

std::string order_of(const BiGraph& G) { return to_string(automorphisms(G).order()); }

void aut_groups_suite(Recorder& rec) {
  const BiGraph heawood = build_bigraph(thick(2, 2, 0, 1, 0));
  rec.eq("aut/thick2(2,0,1,0)/backtracking", "336", order_of(heawood));
  std::vector<FamilySpec> specs{thick(2, 2, 0, 1, 0), thick(2, 3, 1, 1, 0), thick(2, 3, 1, 2, 1)};
  for (const auto& s : thin_instances(8))
    if (!thin_exception(s)) specs.push_back(s);
  for (const auto& s : specs) {
    try {
      rec.eq("aut/" + label(s), to_string(geometric_generators(s).order()), order_of(build_bigraph(s)));
    } catch (const Error& e) {
      rec("aut/" + label(s), "-", e.what(), false);
    }
  }
  for (const auto& s : {thin(6, 2, 2, 1), thin(7, 3, 3, 1)}) {
    const BigInt aut = automorphisms(build_bigraph(s)).order(), sym = thin_symmetric_order(s);
    rec("aut/" + label(s) + "/exceeds-sym", ">" + to_string(sym), to_string(aut), aut > sym);
    rec.eq("aut/" + label(s) + "/model", to_string(geometric_generators(s).order()), to_string(aut));
  }
}

void thin_exceptions_suite(Recorder& rec) {
  // PGL(4,2) with a polarity, and Sym(2l) on the (l,l)-partitions with the bipart swap
  const std::pair<FamilySpec, BigInt> ex[3] = {
      {thin(6, 2, 2, 1), BigInt(40320)}, {thin(7, 3, 3, 1), BigInt(80640)}, {thin(11, 5, 5, 2), BigInt(958003200)}};
  const std::size_t cap = aut_vertex_cap();
  set_aut_vertex_cap(std::max<std::size_t>(cap, 1000));
  for (const auto& [s, model] : ex) {
    const BigInt aut = automorphisms(build_bigraph(s)).order(), sym = thin_symmetric_order(s);
    rec("exception/" + label(s) + "/exceeds-sym", ">" + to_string(sym), to_string(aut), aut > sym);
    rec.eq("exception/" + label(s) + "/model-order", to_string(model), to_string(aut));
    rec.eq("exception/" + label(s) + "/model-generators", to_string(model), to_string(geometric_generators(s).order()));
  }
  set_aut_vertex_cap(cap);

  for (int ell = 3; ell <= 6; ++ell) {
    const auto kx = partition_exceptional_k(ell);
    for (int k = 0; k <= ell - 2; ++k) {
      const bool inv = partition_invariant(ell, k);
      const bool want = kx && *kx == k;
      rec("partition/l=" + std::to_string(ell) + "/k=" + std::to_string(k), want ? "invariant" : "not-invariant",
          inv ? "invariant" : "not-invariant", inv == want);
    }
  }

  try {
    const Perm iso = duad_pg32_bijection();
    rec("duad/pg32-bijection", "isomorphism", "isomorphism", is_perm(iso, 30));
  } catch (const Error& e) {
    rec("duad/pg32-bijection", "isomorphism", e.what(), false);
  }
}

bool known_coincidence(const std::vector<FamilySpec>& group) {
  std::set<FamilySpec> g(group.begin(), group.end());
  return g == std::set<FamilySpec>{thick(2, 3, 1, 1, 0), thin(7, 3, 3, 1)} ||
         g == std::set<FamilySpec>{thick(2, 3, 0, 2, -1), thin(6, 2, 2, 1)};
}

void separation_suite(Recorder& rec) {
  std::vector<FamilySpec> specs = thick_instances(4, 300);
  std::set<FamilySpec> thin_forms;
  for (const auto& s : thin_instances(8)) thin_forms.insert(normalize(s).spec);
  specs.insert(specs.end(), thin_forms.begin(), thin_forms.end());
  std::map<std::string, std::vector<FamilySpec>> by_cert;
  std::map<FamilySpec, std::string> cert_of;
  for (const auto& s : specs) {
    try {
      const std::string c = canonical(build_bigraph(s)).certificate;
      by_cert[c].push_back(s);
      cert_of[s] = c;
    } catch (const Error& e) {
      rec("certificate/" + label(s), "computed", e.what(), false);
    }
  }
  std::size_t clashes = 0, merged = 0;
  for (const auto& [c, group] : by_cert) {
    if (group.size() == 1) continue;
    std::string names;
    for (const auto& s : group) names += (names.empty() ? "" : "=") + label(s);
    const bool known = known_coincidence(group);
    clashes += !known;
    if (known) merged += group.size() - 1;
    rec("coincidence/" + names, "known-exception", known ? "known-exception" : "unexpected", known);
  }
  rec("separation/distinct-classes", std::to_string(cert_of.size() - merged), std::to_string(by_cert.size()),
      clashes == 0);

  for (const auto& s : specs) {
    if (s.thin() || !cert_of.count(s)) continue;
    const FamilySpec d = thick_dual(s);
    try {
      const bool same = canonical(build_bigraph(d)).certificate == cert_of[s];
      rec("dual/" + label(s) + "~" + label(d), "equal", same ? "equal" : "different", same);
    } catch (const Error& e) {
      rec("dual/" + label(s), "equal", e.what(), false);
    }
  }
}

void twin_suite(Recorder& rec) {
  std::vector<FamilySpec> specs = thick_instances(5, 2000);
  for (const auto& s : thin_instances(9)) specs.push_back(s);
  for (const auto& s : specs) {
    const BiGraph G = build_bigraph(s);
    rec("twin-free/" + label(s), "yes", twin_free(G) ? "yes" : "no", twin_free(G));
    // the distinguishing bound holds over fields only; thin(n,1,2;0) has pairs differing in one neighbour
    if (s.thin() || G.size_a() > 500 || G.size_b() > 500) continue;
    std::size_t lo = SIZE_MAX;
    for (Side side : {Side::A, Side::B})
      for (std::size_t x = 0; x < G.size(side); ++x)
        for (std::size_t y = 0; y < G.size(side); ++y)
          if (x != y) lo = std::min(lo, distinguishing_neighbors(G, side, x, y));
    rec("distinguishing/" + label(s), ">=2", std::to_string(lo), lo >= 2);
  }
}

void choose_suite(Recorder& rec, const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::size_t bad = 0;
  std::string first_bad;
  for (std::uint64_t rep = 0; rep < opt.choose_instances; ++rep) {
    const int q = 2 + static_cast<int>(rep % 2);
    const auto& F = FieldSpec::get(q);
    const int a = 2 + static_cast<int>(rng() % 4), b = static_cast<int>(rng() % a);
    auto pick = [&](int d) {
      if (d < 0) return empty_subspace(a, F);
      std::vector<Vec> rows(d + 1, Vec(a + 1));
      while (true) {
        for (auto& r : rows)
          for (auto& e : r) e = static_cast<Elem>(rng() % q);
        Subspace S = canonicalize(a, F, rows);
        if (S.pdim() == d) return S;
      }
    };
    const Subspace B = pick(b), B1 = pick(static_cast<int>(rng() % (b + 1)) - 1),
                   B2 = pick(static_cast<int>(rng() % (b + 1)) - 1),
                   B3 = pick(b == 0 ? -1 : static_cast<int>(rng() % b) - 1);
    bool ok = false;
    try {
      const Subspace C = find_disjoint_space(B, B1, B2, B3);
      ok = C.pdim() == a - b - 1;
      for (const Subspace* X : {&B, &B1, &B2, &B3}) ok = ok && meet(C, *X).rank() == 0;
    } catch (const Error&) {
    }
    if (!ok && first_bad.empty())
      first_bad = "rep" + std::to_string(rep) + ":q=" + std::to_string(q) + ",a=" + std::to_string(a) + ",b=" +
                  std::to_string(b);
    bad += !ok;
  }
  rec("choose/random-" + std::to_string(opt.choose_instances), "0",
      std::to_string(bad) + (first_bad.empty() ? "" : "(" + first_bad + ")"), bad == 0);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"trivial-shapes", "roundup-equivalence", "reconstruction-roundtrip",
                                              "paper-tables",   "srg",                 "aut-groups",
                                              "thin-exceptions", "isomorphism-separation", "twin-freeness",
                                              "choose-lemma"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  SuiteResult res;
  res.name = name;
  Recorder rec{res, opt};
  const auto t0 = Clock::now();
  if (name == "trivial-shapes") trivial_shapes_suite(rec);
  else if (name == "roundup-equivalence") roundup_suite(rec, opt);
  else if (name == "reconstruction-roundtrip") roundtrip_suite(rec, opt);
  else if (name == "paper-tables") paper_tables_suite(rec);
  else if (name == "srg") srg_suite(rec);
  else if (name == "aut-groups") aut_groups_suite(rec);
  else if (name == "thin-exceptions") thin_exceptions_suite(rec);
  else if (name == "isomorphism-separation") separation_suite(rec);
  else if (name == "twin-freeness") twin_suite(rec);
  else if (name == "choose-lemma") choose_suite(rec, opt);
  else throw Error(ErrorKind::PreconditionViolation, "unknown suite '" + name + "'");
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return res;
}

}  // namespace weyl
