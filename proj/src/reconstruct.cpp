#include "weyl/reconstruct.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "json.hpp"
#include "weyl/error.hpp"
#include "weyl/field.hpp"
#include "weyl/grassmann.hpp"
#include "weyl/roundup.hpp"
#include "weyl/series.hpp"

namespace weyl {

const char* to_string(DetectedType t) {
  switch (t) {
    case DetectedType::I: return "I";
    case DetectedType::II: return "II";
    case DetectedType::III: return "III";
    case DetectedType::Trivial: return "Trivial";
  }
  return "?";
}

namespace {

FamilySpec sorted(FamilySpec s) {
  if (s.i > s.j) std::swap(s.i, s.j);
  return s;
}

auto order_key(const FamilySpec& s) { return std::make_tuple(s.i + s.j, s.i, s.j, s.k); }

DetectedType type_of(const FamilySpec& s) {
  if (s.k == std::min(s.i, s.j)) return DetectedType::I;
  return s.mode == Mode::AtLeast ? DetectedType::II : DetectedType::III;
}

}  // namespace

NormalForm normalize(const FamilySpec& spec) {
  NormalForm out;
  FamilySpec s = spec;
  if (s.mode == Mode::AtLeast && s.k == std::min(s.i, s.j)) s.mode = Mode::Exact;
  if (s.i > s.j) {
    std::swap(s.i, s.j);
    out.swap = true;
  }
  if (!s.thin()) {
    if (s.i + s.j > s.n - 1) {
      s = thick(s.q, s.n, s.n - 1 - s.j, s.n - 1 - s.i, s.n - 1 + s.k - s.i - s.j, s.mode);
      out.dual = true;
    }
    out.spec = s;
    return out;
  }

  // thin: complementing one side (exact) or both sides (either mode) gives isomorphic graphs
  std::vector<std::pair<FamilySpec, bool>> orbit{{s, false}};
  const int n = s.n, i = s.i, j = s.j, k = s.k;
  orbit.push_back({thin(n, n - i, n - j, n - i - j + k, s.mode), true});
  if (s.mode == Mode::Exact) {
    orbit.push_back({thin(n, i, n - j, i - k), true});
    orbit.push_back({thin(n, n - i, j, j - k), true});
  }
  out.spec = s;
  for (auto& [t, flip] : orbit) {
    t = sorted(t);
    if (t.mode == Mode::AtLeast && t.k == std::min(t.i, t.j)) t.mode = Mode::Exact;
    if (!t.valid()) continue;
    if (order_key(t) < order_key(out.spec)) {
      out.spec = t;
      out.dual = flip;
    }
  }
  return out;
}

std::optional<FamilySpec> complement_spec(const FamilySpec& s) {
  // smallest intersection that actually occurs
  const int lo = s.thin() ? std::max(0, s.i + s.j - s.n) : std::max(-1, s.i + s.j - s.n);
  FamilySpec t = s;
  if (s.mode == Mode::AtLeast) {
    if (s.k - 1 == lo) {
      t.mode = Mode::Exact;
      t.k = s.k - 1;
      if (t.valid()) return t;
    }
    if (s.thin()) {
      t = thin(s.n, s.i, s.n - s.j, s.i - s.k + 1, Mode::AtLeast);
      if (t.valid()) return t;
    }
    return std::nullopt;
  }
  if (s.k == lo) {
    t.mode = Mode::AtLeast;
    t.k = s.k + 1;
    if (t.valid()) return t;
  }
  // only two intersections occur: exactly the larger is the complement of exactly the smaller
  if (s.k == std::min(s.i, s.j) && s.k - 1 == lo) {
    t.k = lo;
    if (t.valid()) return t;
  }
  return std::nullopt;
}

Signature signature(const BiGraph& G) {
  Signature sig;
  sig.sizes = {G.size_a(), G.size_b()};
  sig.edges = G.edge_count();
  for (Side s : {Side::A, Side::B}) {
    auto& prof = sig.profiles[s == Side::A ? 0 : 1];
    const std::size_t N = G.size(s);
    if (N == 0) continue;
    for (std::size_t v : {std::size_t{0}, N - 1}) {
      std::vector<std::size_t> row;
      for (std::size_t w = 0; w < N; ++w)
        if (w != v) row.push_back(G.nbrs(s, v).intersect_count(G.nbrs(s, w)));
      std::sort(row.begin(), row.end());
      prof.insert(prof.end(), row.begin(), row.end());
    }
  }
  return sig;
}

bool signature_matches(const BiGraph& G, const FamilySpec& spec) {
  if (!spec.valid()) return false;
  if (part_size(spec, spec.i) != G.size_a() || part_size(spec, spec.j) != G.size_b()) return false;
  try {
    return signature(build_bigraph(spec)) == signature(G);
  } catch (const Error&) {
    return false;
  }
}

namespace {

bool matches_either(const BiGraph& G, const FamilySpec& spec) {
  return signature_matches(G, spec) || signature_matches(G.swapped(), spec);
}

// Length of a maximal chain of neighbourhood intersections at vertex v of `side`.
int chain_length(const BiGraph& G, Side side, std::size_t v) {
  Bitset S = G.nbrs(side, v);
  int len = 0;
  while (S.count() > 1) {
    std::size_t best = 0;
    Bitset next;
    for (std::size_t w = 0; w < G.size(side); ++w) {
      if (w == v) continue;
      std::size_t c = S.intersect_count(G.nbrs(side, w));
      if (c == 0 || c == S.count() || c <= best) continue;
      best = c;
      next = S & G.nbrs(side, w);
    }
    if (best == 0) throw Error(ErrorKind::NotTypeI, "neighbourhood chain stalls");
    S = std::move(next);
    ++len;
  }
  return len;
}

struct SideWalks {
  bool point_like = false;
  std::array<int, 2> walks{0, 0};
  std::size_t line_size = 0;
};

SideWalks side_walks(const BiGraph& G, Side side) {
  SideWalks out;
  SimpleGraph g = grassmann_from_profile(G, side);
  if (unique_max_clique_test(g)) {
    out.point_like = true;
    return out;
  }
  CliqueSystem cs;
  try {
    cs = clique_system(g);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotTypeI, e.what());
  }
  out.line_size = cs.lines.empty() ? 0 : cs.lines.front().count();
  for (int c : {0, 1}) out.walks[c] = walk_to_end(cs.class_cliques(c), G.size(side));
  return out;
}

}  // namespace

FamilySpec reconstruct_flag_typeI(const BiGraph& G) {
  SideWalks wa = side_walks(G, Side::A), wb = side_walks(G, Side::B);

  if (wa.point_like && wb.point_like) {
    // points against hyperplanes: invert the bipart size, the valence breaks ties
    const std::size_t N = G.size_a();
    auto va = G.valence(Side::A);
    if (N != G.size_b() || !va) throw Error(ErrorKind::NotTypeI, "unequal biparts");
    for (int q : {2, 3, 4, 5, 7})
      for (int n = 2; point_count(n, q) <= N; ++n)
        if (point_count(n, q) == N && point_count(n - 1, q) == *va) return thick(q, n, 0, n - 1, 0);
    if (*va + 1 == N) return thin(static_cast<int>(N), 1, static_cast<int>(N) - 1, 1);
    throw Error(ErrorKind::NotTypeI, "no projective space of this size");
  }

  const std::size_t ls = wa.point_like ? wb.line_size : wa.line_size;
  if (ls < 2 || (!wa.point_like && !wb.point_like && wa.line_size != wb.line_size))
    throw Error(ErrorKind::NotTypeI, "inconsistent Grassmann lines");
  const bool is_thin = ls == 2;
  const int offset = is_thin ? 1 : 0;
  const int d = chain_length(G, Side::B, 0);

  // walks on one side measure (dim - offset) downwards and the rest upwards
  const int total = wa.point_like ? wb.walks[0] + wb.walks[1] : wa.walks[0] + wa.walks[1];
  if (!wa.point_like && !wb.point_like && total != wb.walks[0] + wb.walks[1])
    throw Error(ErrorKind::NotTypeI, "walk lengths disagree");
  std::array<int, 2> ca = wa.point_like ? std::array<int, 2>{0, total} : wa.walks;
  std::array<int, 2> cb = wb.point_like ? std::array<int, 2>{0, total} : wb.walks;
  for (int a : ca)
    for (int b : cb)
      if (std::abs(b - a) == d) {
        const int n = total + 1 + offset, i = a + offset, j = b + offset;
        const int lo = std::min(i, j);
        FamilySpec s = is_thin ? thin(n, i, j, lo) : thick(static_cast<int>(ls) - 1, n, i, j, lo);
        if (s.valid() && signature_matches(G, s)) return s;
      }
  throw Error(ErrorKind::NotTypeI, "no dimensions fit the chain length");
}

std::vector<FamilySpec> census(const BiGraph& G) {
  std::vector<FamilySpec> out;
  const std::size_t a = G.size_a(), b = G.size_b();
  auto va = G.valence(Side::A), vb = G.valence(Side::B);
  if (!va || !vb) return out;
  const std::size_t big = std::max(a, b);

  auto consider = [&](const FamilySpec& s) {
    if (!s.valid()) return;
    const std::uint64_t pa = part_size(s, s.i), pb = part_size(s, s.j);
    bool ok = pa == a && pb == b && valence_formula(s, s.i, s.j) == *va && valence_formula(s, s.j, s.i) == *vb;
    ok = ok || (pa == b && pb == a && valence_formula(s, s.i, s.j) == *vb && valence_formula(s, s.j, s.i) == *va);
    if (ok) out.push_back(normalize(s).spec);
  };
  // only dimensions whose part size occurs in G are worth pairing; complementing
  // (thin) or dualizing (thick) both sides covers the pairs with i + j past `top`
  auto scan = [&](const std::function<FamilySpec(int, int, int, int, Mode)>& make, int n, int lo_dim, int kmin,
                  int top) {
    std::vector<int> dims;
    for (int d = lo_dim; d <= n - 1; ++d) {
      const std::uint64_t p = part_size(make(n, d, d, d, Mode::Exact), d);
      if (p == a || p == b) dims.push_back(d);
    }
    for (int i : dims)
      for (int j : dims)
        if (i <= j && i + j <= top)
          for (int k = kmin; k <= i; ++k)
            for (Mode m : {Mode::Exact, Mode::AtLeast}) consider(make(n, i, j, k, m));
  };

  for (int n = 2; static_cast<std::size_t>(n) <= big; ++n) scan(thin, n, 1, 0, n);
  for (int q : {2, 3, 4, 5, 7})
    for (int n = 2; point_count(n, q) <= big; ++n)
      scan([q](int n, int i, int j, int k, Mode m) { return thick(q, n, i, j, k, m); }, n, 0, -1, n - 1);

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

struct Found {
  FamilySpec spec;
  std::string stage;
  std::optional<std::array<int, 4>> stops;
  std::optional<FamilySpec> series_spec;
  std::array<std::size_t, 2> clique_counts{0, 0};
  std::array<std::vector<std::size_t>, 4> trace;
  bool complement = false;
};

using Attempt = std::optional<Found>;

Attempt guarded(const std::function<Attempt()>& f) {
  try {
    return f();
  } catch (const Error&) {
    return std::nullopt;
  }
}

Attempt try_type_one(const BiGraph& G) {
  return guarded([&]() -> Attempt {
    bool flag = satisfies_min(G, Side::A, 0) || satisfies_min(G, Side::B, 0) || every_vertex_is_pair_intersection(G);
    if (!flag) return std::nullopt;
    FamilySpec s = reconstruct_flag_typeI(G);
    if (!matches_either(G, s)) return std::nullopt;
    Found f;
    f.spec = s;
    f.stage = "type-I";
    return f;
  });
}

Attempt series_attempt(const BiGraph& G, Side side, const SimpleGraph& g1, SeriesType type, bool want_thin,
                       const std::string& stage) {
  return guarded([&]() -> Attempt {
    CliqueSystem cs = clique_system(g1);
    if (cs.lines.empty()) return std::nullopt;
    const std::size_t ls = cs.lines.front().count();
    for (const auto& L : cs.lines)
      if (L.count() != ls) return std::nullopt;
    const bool is_thin = ls == 2;
    if (is_thin != want_thin) return std::nullopt;
    const BiGraph H = side == Side::B ? G : G.swapped();
    SeriesResult r = run_series(H, cs, type);
    FamilySpec s = params_from_stops(r.stop, type, is_thin, static_cast<int>(ls) - 1);
    if (!matches_either(G, s)) return std::nullopt;
    Found f;
    f.spec = s;
    f.stage = stage;
    f.stops = r.stop;
    f.series_spec = s;
    f.clique_counts = {cs.class_size(r.minus_class), cs.class_size(1 - r.minus_class)};
    f.trace = r.trace;
    return f;
  });
}

Attempt try_triples(const BiGraph& G) {
  for (Side side : {Side::B, Side::A}) {
    Attempt got = guarded([&]() -> Attempt {
      SimpleGraph g1 = grassmann_from_roundups(G, side, false);
      if (unique_max_clique_test(g1)) {
        FamilySpec s = reconstruct_flag_typeI(G);
        if (!matches_either(G, s)) return std::nullopt;
        Found f;
        f.spec = s;
        f.stage = "triples/unique-clique";
        return f;
      }
      return series_attempt(G, side, g1, SeriesType::II, false, "triples");
    });
    if (got) return got;
  }
  return std::nullopt;
}

Attempt try_quads(const BiGraph& G) {
  for (Side side : {Side::B, Side::A}) {
    Attempt got = guarded([&]() -> Attempt {
      SimpleGraph g1 = grassmann_from_roundups(G, side, true);
      return series_attempt(G, side, g1, SeriesType::III, false, "quadruples");
    });
    if (got) return got;
  }
  return std::nullopt;
}

Attempt try_profile(const BiGraph& G) {
  for (Side side : {Side::B, Side::A}) {
    Attempt got = guarded([&]() -> Attempt {
      SimpleGraph g1 = grassmann_from_profile(G, side);
      return series_attempt(G, side, g1, SeriesType::II, true, "profile");
    });
    if (got) return got;
  }
  return std::nullopt;
}

Attempt try_complement(const BiGraph& G) {
  BiGraph C = bipartite_complement(G);
  if (classify_trivial(C) != TrivialKind::Nontrivial) return std::nullopt;
  for (auto stage : {try_type_one, try_triples, try_profile}) {
    Attempt f = stage(C);
    if (!f) continue;
    auto back = complement_spec(f->spec);
    if (!back || !matches_either(G, *back)) continue;
    f->spec = *back;
    f->stage = "complement/" + f->stage;
    f->complement = true;
    return f;
  }
  return std::nullopt;
}

// Census candidates; several hits share the signature only through an exceptional
// isomorphism, in which case the thick reading is reported.
Attempt census_attempt(const BiGraph& G, bool q2_type_three_only) {
  return guarded([&]() -> Attempt {
    std::vector<FamilySpec> hits;
    for (const auto& s : census(G))
      if (matches_either(G, s)) hits.push_back(s);
    std::stable_partition(hits.begin(), hits.end(), [](const FamilySpec& s) { return !s.thin(); });
    if (hits.empty() || (hits.size() > 1 && hits[0].thin() == hits[1].thin())) return std::nullopt;
    const FamilySpec& s = hits.front();
    if (q2_type_three_only && (s.thin() || s.q != 2 || type_of(s) != DetectedType::III)) return std::nullopt;
    Found f;
    f.spec = s;
    f.stage = q2_type_three_only ? "census/q2" : "census";
    return f;
  });
}

// over GF(2) quadruples carry no line information, so these graphs go by census
Attempt try_census_q2(const BiGraph& G) { return census_attempt(G, true); }
Attempt try_census(const BiGraph& G) { return census_attempt(G, false); }

}  // namespace

ReconstructionReport reconstruct(const BiGraph& G, std::uint64_t seed) {
  ReconstructionReport rep;
  rep.seed = seed;
  TrivialKind kind = classify_trivial(G);
  if (kind != TrivialKind::Nontrivial) {
    rep.detected_type = DetectedType::Trivial;
    rep.trivial_kind = kind;
    rep.stage = "trivial";
    return rep;
  }

  Attempt found;
  for (auto stage : {try_type_one, try_triples, try_complement, try_census_q2, try_quads, try_profile, try_census}) {
    found = stage(G);
    if (found) break;
  }
  if (!found) throw Error(ErrorKind::UnrecognizedStructure, "no stage recognized the graph (tried type-I, triples, "
                                                            "complement, census, quadruples, profile)");

  NormalForm nf = normalize(found->spec);
  rep.params = nf.spec;
  rep.detected_type = type_of(nf.spec);
  rep.stage = found->stage;
  rep.clique_counts = found->clique_counts;
  rep.series_trace = found->trace;
  rep.normalizations.dual = nf.dual;
  rep.normalizations.complement = found->complement;
  rep.normalizations.swap = nf.spec.i != nf.spec.j && !signature_matches(G, nf.spec);
  for (const auto& s : census(G))
    if (!(s == nf.spec) && matches_either(G, s)) rep.equivalents.push_back(s);
  if (found->stops) {
    std::array<int, 4> st = *found->stops;
    FamilySpec ss = *found->series_spec;
    if (ss.i > ss.j) {
      std::swap(ss.i, ss.j);
      std::swap(st[2], st[3]);
    }
    rep.stop_indices = st;
    rep.series_spec = ss;
  }
  return rep;
}

ReconstructionReport reconstruct(const SimpleGraph& G, std::uint64_t seed) {
  std::optional<Error> last;
  for (bool extended : {false, true}) {
    try {
      ReconstructionReport rep = reconstruct(bipartite_double(G, extended), seed);
      rep.doubled = extended ? "extended" : "ordinary";
      if (rep.detected_type != DetectedType::Trivial || extended) return rep;
    } catch (const Error& e) {
      last = e;
    }
  }
  throw *last;
}

std::string ReconstructionReport::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["detected_type"] = trivial_kind ? std::string("Trivial(") + weyl::to_string(*trivial_kind) + ")"
                                    : std::string(weyl::to_string(detected_type));
  if (params) {
    j["params"] = {{"geometry", params->thin() ? "thin" : "thick(" + std::to_string(params->q) + ")"},
                   {"n", params->n},
                   {"i", params->i},
                   {"j", params->j},
                   {"k", params->k},
                   {"mode", params->mode == Mode::Exact ? "exact" : "at-least"}};
  } else {
    j["params"] = nullptr;
  }
  if (stop_indices)
    j["stop_indices"] = *stop_indices;
  else
    j["stop_indices"] = nullptr;
  j["normalizations"] = {{"dual", normalizations.dual},
                         {"swap", normalizations.swap},
                         {"complement", normalizations.complement}};
  ordered_json cert;
  cert["seed"] = seed;
  cert["stage"] = stage;
  if (!doubled.empty()) cert["doubled"] = doubled;
  cert["clique_counts"] = clique_counts;
  cert["series_trace"] = series_trace;
  if (series_spec) cert["series_spec"] = series_spec->metadata();
  if (!equivalents.empty()) {
    cert["equivalents"] = ordered_json::array();
    for (const auto& e : equivalents) cert["equivalents"].push_back(e.metadata());
  }
  j["certificates"] = cert;
  return j.dump(2);
}

}  // namespace weyl
