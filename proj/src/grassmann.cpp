#include "weyl/grassmann.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <unordered_map>

#include "weyl/error.hpp"
#include "weyl/parallel.hpp"
#include "weyl/roundup.hpp"

namespace weyl {

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

SimpleGraph from_edges(std::size_t n, const std::vector<std::vector<Edge>>& parts) {
  SimpleGraph out(n);
  for (const auto& p : parts)
    for (auto [a, b] : p) out.add_edge(a, b);
  return out;
}

// Round-up triples through u with u smallest. A triple is round-up iff its three
// pairwise neighbourhood intersections coincide and are nonempty.
void triples_at(const BiGraph& G, Side side, std::size_t u, std::vector<Edge>& out) {
  const std::size_t N = G.size(side);
  const Bitset& nu = G.nbrs(side, u);
  std::unordered_map<Bitset, std::vector<std::size_t>, BitsetHash> bucket;
  for (std::size_t v = u + 1; v < N; ++v) {
    Bitset s = nu & G.nbrs(side, v);
    if (s.any()) bucket[std::move(s)].push_back(v);
  }
  for (const auto& [s, vs] : bucket) {
    if (vs.size() < 2) continue;
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        const std::size_t v = vs[a], w = vs[b];
        if ((G.nbrs(side, v) & G.nbrs(side, w)) != s) continue;
        if (!triple_verdict(G, side, {u, v, w}).is_roundup) continue;
        out.push_back({u, v});
        out.push_back({u, w});
        out.push_back({v, w});
      }
  }
}

// Round-up quadruples {u,v,w,x} with u < v < w < x whose six pairwise common
// neighbourhoods all have the same size, restricted to sizes in `sizes` when given.
// Returns the sizes for which a quadruple was found.
std::vector<std::size_t> quads_at(const BiGraph& G, Side side, std::size_t u, const std::vector<std::size_t>* sizes,
                                  std::vector<Edge>& out) {
  const std::size_t N = G.size(side);
  const Bitset& nu = G.nbrs(side, u);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = u + 1; v < N; ++v) {
    std::size_t s = nu.intersect_count(G.nbrs(side, v));
    if (s == 0) continue;
    if (sizes && !std::binary_search(sizes->begin(), sizes->end(), s)) continue;
    groups[s].push_back(v);
  }
  std::vector<std::size_t> found;
  for (const auto& [s, vs] : groups) {
    const std::size_t m = vs.size();
    if (m < 3) continue;
    std::vector<Bitset> local(m, Bitset(m));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        if (G.nbrs(side, vs[a]).intersect_count(G.nbrs(side, vs[b])) == s) {
          local[a].set(b);
          local[b].set(a);
        }
    bool any = false;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = local[a].next(a + 1); b < m; b = local[a].next(b + 1)) {
        Bitset third = local[a] & local[b];
        if (third.next(b + 1) >= m) continue;
        // x completes a round-up quadruple iff it meets everything in exactly two of
        // the first three neighbourhoods and nothing in exactly one
        const Bitset &nv = G.nbrs(side, vs[a]), &nw = G.nbrs(side, vs[b]);
        const Bitset all3 = nu & nv & nw;
        Bitset two = (nu & nv) | (nu & nw) | (nv & nw);
        two.and_not(all3);
        Bitset one = nu | nv | nw;
        one.and_not(two);
        one.and_not(all3);
        if (all3.none() && two.none()) continue;
        for (std::size_t c = third.next(b + 1); c < m; c = third.next(c + 1)) {
          const Bitset& nx = G.nbrs(side, vs[c]);
          if (!two.subset_of(nx) || one.intersects(nx)) continue;
          const std::size_t v = vs[a], w = vs[b], x = vs[c];
          any = true;
          for (auto e : {Edge{u, v}, Edge{u, w}, Edge{u, x}, Edge{v, w}, Edge{v, x}, Edge{w, x}}) out.push_back(e);
        }
      }
    if (any) found.push_back(s);
  }
  return found;
}

Bitset closed_nbrs(const SimpleGraph& G, std::size_t v) {
  Bitset b = G.nbrs(v);
  b.set(v);
  return b;
}

bool is_clique(const SimpleGraph& G, const Bitset& K) {
  bool ok = true;
  K.for_each([&](std::size_t x) { ok = ok && K.subset_of(closed_nbrs(G, x)); });
  return ok;
}

// stops once `out` holds more than `limit` cliques
void bron_kerbosch(const SimpleGraph& G, Bitset R, Bitset P, Bitset X, std::vector<Bitset>& out,
                   std::size_t limit = SIZE_MAX) {
  if (P.none() && X.none()) {
    out.push_back(std::move(R));
    return;
  }
  std::size_t pivot = 0, best = 0;
  bool have = false;
  Bitset PX = P | X;
  PX.for_each([&](std::size_t u) {
    std::size_t c = P.intersect_count(G.nbrs(u));
    if (!have || c > best) {
      have = true;
      best = c;
      pivot = u;
    }
  });
  Bitset cand = P;
  cand.and_not(G.nbrs(pivot));
  for (std::size_t v : cand.indices()) {
    Bitset R2 = R;
    R2.set(v);
    bron_kerbosch(G, std::move(R2), P & G.nbrs(v), X & G.nbrs(v), out, limit);
    if (out.size() > limit) return;
    P.reset(v);
    X.set(v);
  }
}

// The maximal cliques of G containing the edge uv; only the first three when there are more.
std::vector<Bitset> cliques_through(const SimpleGraph& G, std::size_t u, std::size_t v) {
  const std::size_t n = G.size();
  Bitset C = G.nbrs(u) & G.nbrs(v);
  Bitset P(n);
  C.for_each([&](std::size_t c) {
    if (C.subset_of(closed_nbrs(G, c))) P.set(c);
  });
  Bitset uv(n);
  uv.set(u);
  uv.set(v);

  Bitset rest = C;
  rest.and_not(P);
  if (rest.none()) return {C | uv};

  // split C by the closed neighbourhood of one non-universal member
  const std::size_t w = rest.first();
  Bitset K1 = C & closed_nbrs(G, w);
  Bitset K2 = C;
  K2.and_not(closed_nbrs(G, w));
  K2 |= P;
  Bitset X1 = K1, X2 = K2;
  X1.and_not(P);
  X2.and_not(P);
  bool split = is_clique(G, K1) && is_clique(G, K2);
  X1.for_each([&](std::size_t x) { split = split && !G.nbrs(x).intersects(X2); });
  if (split) return {K1 | uv, K2 | uv};

  std::vector<Bitset> local;
  bron_kerbosch(G, Bitset(n), C, Bitset(n), local, 2);
  for (auto& K : local) K |= uv;
  return local;
}

}  // namespace

SimpleGraph grassmann_from_roundups(const BiGraph& G, Side side, bool use_quads) {
  const std::size_t N = G.size(side);
  std::vector<std::vector<Edge>> parts(N);
  if (!use_quads) {
    parallel_for(N, [&](std::size_t u) { triples_at(G, side, u, parts[u]); });
  } else if (N > 0) {
    // full search at the first vertex fixes which common-neighbourhood sizes occur
    std::vector<std::size_t> sizes = quads_at(G, side, 0, nullptr, parts[0]);
    if (!sizes.empty())
      parallel_for(N - 1, [&](std::size_t idx) { quads_at(G, side, idx + 1, &sizes, parts[idx + 1]); });
  }
  bool any = false;
  for (const auto& p : parts) any = any || !p.empty();
  if (!any) throw Error(ErrorKind::NoRoundups, use_quads ? "no round-up quadruples" : "no round-up triples");
  return from_edges(N, parts);
}

SimpleGraph grassmann_from_profile(const BiGraph& G, Side side) {
  const std::size_t N = G.size(side);
  std::vector<std::size_t> best(N, 0);
  parallel_for(N, [&](std::size_t u) {
    for (std::size_t v = u + 1; v < N; ++v) best[u] = std::max(best[u], G.nbrs(side, u).intersect_count(G.nbrs(side, v)));
  });
  const std::size_t top = N ? *std::max_element(best.begin(), best.end()) : 0;
  std::vector<std::vector<Edge>> parts(N);
  parallel_for(N, [&](std::size_t u) {
    for (std::size_t v = u + 1; v < N; ++v)
      if (G.nbrs(side, u).intersect_count(G.nbrs(side, v)) == top) parts[u].push_back({u, v});
  });
  return from_edges(N, parts);
}

std::vector<Bitset> maximal_cliques(const SimpleGraph& G) {
  const std::size_t n = G.size();
  std::vector<Bitset> out;
  if (n == 0) return out;
  Bitset P(n);
  P.set_all();
  bron_kerbosch(G, Bitset(n), P, Bitset(n), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Bitset> CliqueSystem::class_cliques(int c) const {
  std::vector<Bitset> out;
  for (std::size_t x = 0; x < cliques.size(); ++x)
    if (class_of[x] == c) out.push_back(cliques[x]);
  return out;
}

std::size_t CliqueSystem::class_size(int c) const { return std::count(class_of.begin(), class_of.end(), c); }

CliqueSystem clique_system(const SimpleGraph& G1) {
  const std::size_t n = G1.size();
  // the maximal cliques through each vertex; an edge is only expanded when
  // its neighbour is not yet covered twice
  std::vector<std::vector<Bitset>> per(n);
  std::vector<char> bad(n, 0);
  parallel_for(n, [&](std::size_t u) {
    auto& mine = per[u];
    std::vector<unsigned char> cover(n, 0);
    for (std::size_t v : G1.nbrs(u).indices()) {
      if (cover[v] >= 2) continue;
      auto ks = cliques_through(G1, u, v);
      if (ks.size() != 2) {
        bad[u] = 1;
        return;
      }
      for (auto& K : ks) {
        if (std::find(mine.begin(), mine.end(), K) != mine.end()) continue;
        K.for_each([&](std::size_t w) { ++cover[w]; });
        mine.push_back(std::move(K));
      }
    }
    for (std::size_t v : G1.nbrs(u).indices())
      if (cover[v] != 2) bad[u] = 1;
  });
  for (std::size_t u = 0; u < n; ++u)
    if (bad[u]) throw Error(ErrorKind::NotGrassmann, "an edge does not lie in exactly two maximal cliques");

  CliqueSystem cs;
  cs.grassmann = G1;
  std::unordered_map<Bitset, std::size_t, BitsetHash> index;
  std::vector<std::vector<std::size_t>> ids(n);
  for (std::size_t u = 0; u < n; ++u)
    for (const auto& K : per[u]) {
      auto [it, fresh] = index.try_emplace(K, cs.cliques.size());
      if (fresh) cs.cliques.push_back(K);
      ids[u].push_back(it->second);
    }
  per.clear();
  if (cs.cliques.empty()) throw Error(ErrorKind::NotGrassmann, "graph has no edges");

  // two cliques are adjacent when they share an edge
  const std::size_t m = cs.cliques.size();
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t a = 0; a < ids[u].size(); ++a)
      for (std::size_t b = a + 1; b < ids[u].size(); ++b) {
        const std::size_t x = ids[u][a], y = ids[u][b];
        if (cs.cliques[x].intersect_count(cs.cliques[y]) >= 2) {
          adj[x].push_back(y);
          adj[y].push_back(x);
        }
      }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }

  cs.class_of.assign(m, -1);
  std::queue<std::size_t> bfs;
  cs.class_of[0] = 0;
  bfs.push(0);
  std::size_t seen = 1;
  while (!bfs.empty()) {
    std::size_t x = bfs.front();
    bfs.pop();
    for (std::size_t y : adj[x]) {
      if (cs.class_of[y] < 0) {
        cs.class_of[y] = 1 - cs.class_of[x];
        ++seen;
        bfs.push(y);
      } else if (cs.class_of[y] == cs.class_of[x]) {
        throw Error(ErrorKind::NotGrassmann, "clique graph is not bipartite");
      }
    }
  }
  if (seen != m) throw Error(ErrorKind::NotGrassmann, "clique graph is disconnected");

  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y : adj[x])
      if (x < y) cs.lines.push_back(cs.cliques[x] & cs.cliques[y]);
  std::sort(cs.lines.begin(), cs.lines.end());
  cs.lines.erase(std::unique(cs.lines.begin(), cs.lines.end()), cs.lines.end());
  return cs;
}

bool unique_max_clique_test(const SimpleGraph& G1) {
  // a non-adjacent pair lies in no clique, so the test holds exactly for complete graphs
  const std::size_t n = G1.size();
  if (n < 2) return false;
  for (std::size_t v = 0; v < n; ++v)
    if (G1.degree(v) != n - 1) return false;
  return true;
}

}  // namespace weyl
