#include "weyl/series.hpp"

#include <algorithm>

#include "weyl/error.hpp"
#include "weyl/parallel.hpp"

namespace weyl {

const char* to_string(Quantifier q) {
  switch (q) {
    case Quantifier::Exists: return "exists";
    case Quantifier::Forall: return "forall";
    case Quantifier::Exists1: return "exists_1";
    case Quantifier::ForallMinus1: return "forall_minus1";
  }
  return "?";
}

Quantifier inverse(Quantifier q) {
  switch (q) {
    case Quantifier::Exists: return Quantifier::Forall;
    case Quantifier::Forall: return Quantifier::Exists;
    case Quantifier::Exists1: return Quantifier::ForallMinus1;
    case Quantifier::ForallMinus1: return Quantifier::Exists1;
  }
  return q;
}

BiGraph series_step(const BiGraph& G, const std::vector<Bitset>& cliques, Quantifier q,
                    const std::vector<Bitset>& lines) {
  const std::size_t na = G.size_a(), f = cliques.size();
  const bool profiled = q == Quantifier::Exists1 || q == Quantifier::ForallMinus1;

  std::vector<std::vector<std::size_t>> inside(profiled ? f : 0);
  if (profiled)
    parallel_for(f, [&](std::size_t x) {
      for (std::size_t l = 0; l < lines.size(); ++l)
        if (lines[l].subset_of(cliques[x])) inside[x].push_back(l);
    });
  std::vector<std::size_t> line_size(lines.size());
  for (std::size_t l = 0; l < lines.size(); ++l) line_size[l] = lines[l].count();

  std::vector<Bitset> rows(na, Bitset(f));
  parallel_for(na, [&](std::size_t p) {
    const Bitset& np = G.nbrs(Side::A, p);
    for (std::size_t x = 0; x < f; ++x) {
      const Bitset& Q = cliques[x];
      bool adj = false;
      switch (q) {
        case Quantifier::Exists: adj = np.intersects(Q); break;
        case Quantifier::Forall: adj = Q.subset_of(np); break;
        default: {
          adj = np.intersects(Q);
          for (std::size_t l : inside[x]) {
            if (!adj) break;
            const std::size_t c = np.intersect_count(lines[l]), s = line_size[l];
            adj = c == 0 || c == s || (q == Quantifier::Exists1 ? c == 1 : c + 1 == s);
          }
        }
      }
      if (adj) rows[p].set(x);
    }
  });
  return BiGraph(std::move(rows), f);
}

BiGraph series_step_typeII(const BiGraph& G, const CliqueSystem& cs, int cls, Quantifier q) {
  if (q != Quantifier::Exists && q != Quantifier::Forall)
    throw Error(ErrorKind::PreconditionViolation, "type II steps use exists or forall");
  return series_step(G, cs.class_cliques(cls), q, cs.lines);
}

BiGraph series_step_typeIII(const BiGraph& G, const CliqueSystem& cs, int cls, Quantifier q) {
  if (q != Quantifier::Exists1 && q != Quantifier::ForallMinus1)
    throw Error(ErrorKind::PreconditionViolation, "type III steps use exists_1 or forall_minus1");
  return series_step(G, cs.class_cliques(cls), q, cs.lines);
}

namespace {

bool complete_bipartite(const BiGraph& G) { return G.edge_count() == G.size_a() * G.size_b(); }

struct LevelFrame {
  std::vector<Bitset> forward;
  std::vector<Bitset> lines;
};

// The clique structure one level further on, where the new vertices are the
// forward cliques `fwd` of the old level. `back[v]` collects the new vertices
// inside old vertex v; those sets form the class leading back.
LevelFrame next_frame(const std::vector<Bitset>& fwd, const std::vector<Bitset>& back) {
  const std::size_t f = fwd.size();
  LevelFrame out;
  if (f <= 1) return out;

  SimpleGraph g(f);
  for (const auto& R : back) {
    auto idx = R.indices();
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) g.add_edge(idx[a], idx[b]);
  }

  std::vector<Bitset> rset;
  for (const auto& R : back)
    if (R.any()) rset.push_back(R);
  std::sort(rset.begin(), rset.end());
  rset.erase(std::unique(rset.begin(), rset.end()), rset.end());

  if (g.edge_count() == f * (f - 1) / 2) {
    // a point-like level: one clique ahead, the returning sets are its lines
    Bitset all(f);
    all.set_all();
    out.forward.push_back(all);
    for (const auto& R : rset)
      if (R.count() >= 2) out.lines.push_back(R);
    return out;
  }

  CliqueSystem cs = clique_system(g);
  bool match[2];
  for (int c : {0, 1}) {
    auto cl = cs.class_cliques(c);
    std::sort(cl.begin(), cl.end());
    match[c] = cl == rset;
  }
  if (match[0] == match[1]) throw Error(ErrorKind::DirectionAmbiguous, "cannot tell the returning clique class");
  out.forward = cs.class_cliques(match[0] ? 1 : 0);
  out.lines = std::move(cs.lines);
  return out;
}

int run_direction(const BiGraph& G0, std::vector<Bitset> fwd, std::vector<Bitset> lines, Quantifier q, int bound,
                  std::vector<std::size_t>& trace) {
  BiGraph cur = G0;
  for (int m = 1; m <= bound; ++m) {
    if (fwd.empty()) throw Error(ErrorKind::SeriesDiverged, std::string("series ran out of levels (") + to_string(q) + ")");
    BiGraph next = series_step(cur, fwd, q, lines);
    trace.push_back(next.size_b());
    switch (q) {
      case Quantifier::Exists:
        if (complete_bipartite(next)) return m;
        break;
      case Quantifier::Exists1:
        if (next.edge_count() == 0) return m - 1;
        break;
      default:
        if (next.edge_count() == 0) return m;
    }

    std::vector<Bitset> back(cur.size_b(), Bitset(fwd.size()));
    for (std::size_t x = 0; x < fwd.size(); ++x) fwd[x].for_each([&](std::size_t v) { back[v].set(x); });
    LevelFrame frame = next_frame(fwd, back);
    // line profiles cannot see the difference between cases once k drops to -1,
    // so only the type II steps are checked by stepping back
    const bool plain = q == Quantifier::Exists || q == Quantifier::Forall;
    if (plain && series_step(next, back, inverse(q), frame.lines) != cur)
      throw Error(ErrorKind::DirectionAmbiguous, "returning step does not reproduce the previous graph");
    cur = std::move(next);
    fwd = std::move(frame.forward);
    lines = std::move(frame.lines);
  }
  throw Error(ErrorKind::SeriesDiverged, "stopping index exceeds bound");
}

}  // namespace

int walk_to_end(std::vector<Bitset> fwd, std::size_t base, int bound) {
  std::size_t cur = base;
  for (int m = 1; m <= bound; ++m) {
    if (fwd.empty()) throw Error(ErrorKind::SeriesDiverged, "walk ran out of levels");
    if (fwd.size() == 1) return m;
    std::vector<Bitset> back(cur, Bitset(fwd.size()));
    for (std::size_t x = 0; x < fwd.size(); ++x) fwd[x].for_each([&](std::size_t v) { back[v].set(x); });
    LevelFrame frame = next_frame(fwd, back);
    if (frame.forward.size() == 1 && frame.forward[0].count() == fwd.size()) return m;
    cur = fwd.size();
    fwd = std::move(frame.forward);
  }
  throw Error(ErrorKind::SeriesDiverged, "walk exceeds bound");
}

SeriesResult run_series(const BiGraph& G, const CliqueSystem& cs, SeriesType type, int bound) {
  const Quantifier qe = type == SeriesType::II ? Quantifier::Exists : Quantifier::Exists1;
  const Quantifier qa = type == SeriesType::II ? Quantifier::Forall : Quantifier::ForallMinus1;
  SeriesResult out;
  std::array<std::vector<std::size_t>, 2> etrace;
  int e[2];
  for (int c : {0, 1}) e[c] = run_direction(G, cs.class_cliques(c), cs.lines, qe, bound, etrace[c]);
  const int minus = e[0] <= e[1] ? 0 : 1;
  out.minus_class = minus;
  out.stop[0] = e[minus];
  out.stop[1] = e[1 - minus];
  out.trace[0] = etrace[minus];
  out.trace[1] = etrace[1 - minus];
  out.stop[2] = run_direction(G, cs.class_cliques(minus), cs.lines, qa, bound, out.trace[2]);
  out.stop[3] = run_direction(G, cs.class_cliques(1 - minus), cs.lines, qa, bound, out.trace[3]);
  return out;
}

FamilySpec params_from_stops(const std::array<int, 4>& stop, SeriesType type, bool thin, int q) {
  FamilySpec s;
  s.geometry = thin ? Geometry::Thin : Geometry::Thick;
  s.q = thin ? 0 : q;
  s.mode = type == SeriesType::II ? Mode::AtLeast : Mode::Exact;
  s.k = thin ? stop[0] : stop[0] - 1;
  s.j = stop[2] + s.k - 1;
  s.i = stop[3] + s.k - 1;
  s.n = stop[1] - s.k + s.i + s.j;
  return s;
}

std::array<int, 4> expected_stops(const FamilySpec& s) {
  const int first = s.thin() ? s.k : s.k + 1;
  return {first, s.n + s.k - s.i - s.j, s.j - s.k + 1, s.i - s.k + 1};
}

}  // namespace weyl
