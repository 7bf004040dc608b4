#include "weyl/autgroup.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "weyl/error.hpp"
#include "weyl/field.hpp"
#include "weyl/projgeom.hpp"

namespace weyl {

namespace {

std::size_t g_cap = 600;
std::uint64_t g_budget = 5'000'000;

}  // namespace

void set_aut_vertex_cap(std::size_t cap) { g_cap = cap; }
std::size_t aut_vertex_cap() { return g_cap; }
void set_search_budget(std::uint64_t nodes) { g_budget = nodes; }

ColoredGraph ColoredGraph::from(const SimpleGraph& G) {
  ColoredGraph out;
  for (std::size_t v = 0; v < G.size(); ++v) out.adj.push_back(G.nbrs(v));
  out.color.assign(G.size(), 0);
  return out;
}

ColoredGraph ColoredGraph::from(const BiGraph& G) {
  const std::size_t na = G.size_a(), nb = G.size_b(), N = na + nb;
  ColoredGraph out;
  out.adj.assign(N, Bitset(N));
  for (std::size_t a = 0; a < na; ++a)
    G.nbrs(Side::A, a).for_each([&](std::size_t b) {
      out.adj[a].set(na + b);
      out.adj[na + b].set(a);
    });
  out.color.assign(N, 0);
  std::fill(out.color.begin() + static_cast<std::ptrdiff_t>(na), out.color.end(), 1);
  return out;
}

namespace {

using Trace = std::vector<std::uint32_t>;

// Ordered partition: cells are contiguous ranges of `lab`; start[v] is the
// first position of v's cell and len[s] the length of the cell starting at s.
struct Partition {
  std::vector<std::uint32_t> lab, pos, start, len;
  std::size_t cells = 0;

  bool discrete() const { return cells == lab.size(); }
};

Partition initial_partition(const std::vector<int>& color) {
  const std::size_t N = color.size();
  Partition P;
  P.lab.resize(N);
  std::iota(P.lab.begin(), P.lab.end(), 0u);
  std::stable_sort(P.lab.begin(), P.lab.end(), [&](auto a, auto b) { return color[a] < color[b]; });
  P.pos.resize(N);
  P.start.resize(N);
  P.len.assign(N, 0);
  for (std::size_t p = 0; p < N; ++p) P.pos[P.lab[p]] = static_cast<std::uint32_t>(p);
  for (std::size_t p = 0; p < N;) {
    std::size_t e = p;
    while (e < N && color[P.lab[e]] == color[P.lab[p]]) ++e;
    for (std::size_t x = p; x < e; ++x) P.start[P.lab[x]] = static_cast<std::uint32_t>(p);
    P.len[p] = static_cast<std::uint32_t>(e - p);
    ++P.cells;
    p = e;
  }
  return P;
}

// Splits cells against splitter cells until the partition is equitable.
void refine(const ColoredGraph& G, Partition& P, std::deque<std::uint32_t> queue, Trace& trace) {
  const std::size_t N = G.size();
  std::vector<char> inq(N, 0);
  for (auto s : queue) inq[s] = 1;
  std::vector<std::uint32_t> cnt(N, 0);
  std::vector<std::uint32_t> touched;
  std::vector<std::uint32_t> cellset;

  while (!queue.empty() && !P.discrete()) {
    const std::uint32_t W = queue.front();
    queue.pop_front();
    inq[W] = 0;

    touched.clear();
    for (std::uint32_t p = W; p < W + P.len[W]; ++p)
      G.adj[P.lab[p]].for_each([&](std::size_t u) {
        if (cnt[u]++ == 0) touched.push_back(static_cast<std::uint32_t>(u));
      });
    cellset.clear();
    for (auto u : touched)
      if (P.len[P.start[u]] > 1) cellset.push_back(P.start[u]);
    std::sort(cellset.begin(), cellset.end());
    cellset.erase(std::unique(cellset.begin(), cellset.end()), cellset.end());

    for (const std::uint32_t s : cellset) {
      const std::uint32_t L = P.len[s];
      auto first = P.lab.begin() + s, last = first + L;
      const std::uint32_t c0 = cnt[*first];
      if (std::all_of(first, last, [&](auto v) { return cnt[v] == c0; })) continue;
      std::stable_sort(first, last, [&](auto a, auto b) { return cnt[a] < cnt[b]; });

      std::vector<std::pair<std::uint32_t, std::uint32_t>> pieces;  // start, length
      for (std::uint32_t p = s; p < s + L;) {
        std::uint32_t e = p;
        while (e < s + L && cnt[P.lab[e]] == cnt[P.lab[p]]) ++e;
        pieces.push_back({p, e - p});
        p = e;
      }
      trace.push_back(s);
      trace.push_back(W);
      trace.push_back(static_cast<std::uint32_t>(pieces.size()));
      for (auto [p, l] : pieces) {
        trace.push_back(cnt[P.lab[p]]);
        trace.push_back(l);
        P.len[p] = l;
        for (std::uint32_t x = p; x < p + l; ++x) {
          P.pos[P.lab[x]] = x;
          P.start[P.lab[x]] = p;
        }
      }
      P.cells += pieces.size() - 1;

      if (inq[s]) {
        for (std::size_t t = 1; t < pieces.size(); ++t) {
          queue.push_back(pieces[t].first);
          inq[pieces[t].first] = 1;
        }
      } else {
        std::size_t big = 0;
        for (std::size_t t = 1; t < pieces.size(); ++t)
          if (pieces[t].second > pieces[big].second) big = t;
        for (std::size_t t = 0; t < pieces.size(); ++t)
          if (t != big) {
            queue.push_back(pieces[t].first);
            inq[pieces[t].first] = 1;
          }
      }
    }
    for (auto u : touched) cnt[u] = 0;
  }
  trace.push_back(static_cast<std::uint32_t>(P.cells));
}

void individualize(const ColoredGraph& G, Partition& P, std::uint32_t v, Trace& trace) {
  const std::uint32_t s = P.start[v], L = P.len[s];
  const std::uint32_t at = P.pos[v], other = P.lab[s];
  std::swap(P.lab[s], P.lab[at]);
  P.pos[v] = s;
  P.pos[other] = at;
  P.len[s] = 1;
  P.len[s + 1] = L - 1;
  for (std::uint32_t x = s + 1; x < s + L; ++x) P.start[P.lab[x]] = s + 1;
  ++P.cells;
  trace.push_back(s);
  refine(G, P, {s}, trace);
}

// first smallest non-singleton cell
std::uint32_t target_cell(const Partition& P) {
  std::uint32_t best = 0, size = 0;
  for (std::uint32_t s = 0; s < P.lab.size(); s += P.len[s])
    if (P.len[s] > 1 && (size == 0 || P.len[s] < size)) {
      best = s;
      size = P.len[s];
    }
  return best;
}

std::vector<std::uint32_t> cell_vertices(const Partition& P, std::uint32_t s) {
  std::vector<std::uint32_t> out(P.lab.begin() + s, P.lab.begin() + s + P.len[s]);
  std::sort(out.begin(), out.end());
  return out;
}

// Adjacency matrix under the leaf's order, preceded by the colour sequence.
std::vector<std::uint64_t> leaf_matrix(const ColoredGraph& G, const Partition& P) {
  const std::size_t N = G.size(), W = (N + 63) / 64;
  std::vector<std::uint64_t> out(N + N * W, 0);
  for (std::size_t p = 0; p < N; ++p) {
    out[p] = static_cast<std::uint64_t>(G.color[P.lab[p]]);
    G.adj[P.lab[p]].for_each([&](std::size_t u) {
      const std::size_t q = P.pos[u];
      out[N + p * W + (q >> 6)] |= std::uint64_t{1} << (q & 63);
    });
  }
  return out;
}

struct Search {
  const ColoredGraph& G;
  std::uint64_t nodes = 0;

  explicit Search(const ColoredGraph& g) : G(g) {}

  void tick() {
    if (++nodes > g_budget) throw Error(ErrorKind::SearchBudgetExceeded, "search tree exceeds the node budget");
  }
};

struct FirstPath {
  std::vector<Partition> nodes;  // node at each level before individualizing
  std::vector<Trace> traces;     // trace produced on entering each level (0 = root refinement)
  std::vector<std::uint32_t> chosen;
  Partition leaf;
  std::vector<std::uint64_t> matrix;
};

// Looks below `node` for a leaf whose matrix equals the first leaf's.
bool find_equivalent(Search& S, const FirstPath& fp, const Partition& node, std::size_t depth, Perm& out) {
  S.tick();
  if (node.discrete()) {
    if (leaf_matrix(S.G, node) != fp.matrix) return false;
    out.assign(node.lab.size(), 0);
    for (std::size_t p = 0; p < node.lab.size(); ++p) out[fp.leaf.lab[p]] = node.lab[p];
    return true;
  }
  const std::uint32_t s = target_cell(node);
  for (auto u : cell_vertices(node, s)) {
    Partition child = node;
    Trace t;
    individualize(S.G, child, u, t);
    if (depth + 1 >= fp.traces.size() || t != fp.traces[depth + 1]) continue;
    if (find_equivalent(S, fp, child, depth + 1, out)) return true;
  }
  return false;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct AutResult {
  std::vector<Perm> gens;
  BigInt order = 1;
};

AutResult search_automorphisms(Search& S) {
  const std::size_t N = S.G.size();
  FirstPath fp;
  Partition P = initial_partition(S.G.color);
  Trace t0;
  std::deque<std::uint32_t> all;
  for (std::uint32_t s = 0; s < N; s += P.len[s]) all.push_back(s);
  refine(S.G, P, all, t0);
  fp.traces.push_back(t0);
  while (!P.discrete()) {
    S.tick();
    fp.nodes.push_back(P);
    const std::uint32_t v = cell_vertices(P, target_cell(P)).front();
    fp.chosen.push_back(v);
    Trace t;
    individualize(S.G, P, v, t);
    fp.traces.push_back(t);
  }
  fp.leaf = P;
  fp.matrix = leaf_matrix(S.G, P);

  AutResult R;
  UnionFind uf(N);
  for (std::size_t l = fp.nodes.size(); l-- > 0;) {
    const Partition& node = fp.nodes[l];
    const std::uint32_t z = fp.chosen[l];
    std::vector<std::uint32_t> failed;
    for (auto v : cell_vertices(node, target_cell(node))) {
      if (v == z || uf.find(v) == uf.find(z)) continue;
      bool known_bad = false;
      for (auto f : failed) known_bad = known_bad || uf.find(f) == uf.find(v);
      if (known_bad) continue;
      Partition child = node;
      Trace t;
      individualize(S.G, child, v, t);
      Perm g;
      if (t == fp.traces[l + 1] && find_equivalent(S, fp, child, l + 1, g)) {
        for (std::uint32_t x = 0; x < N; ++x) uf.unite(x, g[x]);
        R.gens.push_back(std::move(g));
      } else {
        failed.push_back(v);
      }
    }
    std::size_t orbit = 0;
    for (auto v : cell_vertices(node, target_cell(node))) orbit += uf.find(v) == uf.find(z);
    R.order *= orbit;
  }
  return R;
}

struct Best {
  bool have = false;
  std::vector<Trace> traces;
  std::vector<std::uint64_t> matrix;
  Partition leaf;
};

// -1, 0, 1 comparing the current path's traces with the best leaf's, up to depth
int compare_prefix(const std::vector<Trace>& cur, const Best& best) {
  for (std::size_t d = 0; d < cur.size(); ++d) {
    if (d >= best.traces.size()) return -1;
    if (cur[d] != best.traces[d]) return cur[d] < best.traces[d] ? -1 : 1;
  }
  return 0;
}

void canonical_dfs(Search& S, const PermGroup& aut, const Partition& node, std::vector<Trace>& path,
                   std::vector<std::uint32_t>& fixed, Best& best) {
  S.tick();
  if (best.have && compare_prefix(path, best) > 0) return;
  if (node.discrete()) {
    auto m = leaf_matrix(S.G, node);
    const int c = best.have ? compare_prefix(path, best) : -1;
    if (!best.have || c < 0 || (c == 0 && path.size() == best.traces.size() && m < best.matrix)) {
      best.have = true;
      best.traces = path;
      best.matrix = std::move(m);
      best.leaf = node;
    }
    return;
  }
  const auto cell = cell_vertices(node, target_cell(node));
  std::vector<Perm> stab = aut.generators().empty() ? std::vector<Perm>{} : aut.stabilizer(fixed);
  UnionFind uf(node.lab.size());
  for (const auto& g : stab)
    for (auto v : cell) uf.unite(v, g[v]);
  std::vector<char> done(node.lab.size(), 0);
  for (auto v : cell) {
    const std::uint32_t r = uf.find(v);
    if (done[r]) continue;
    done[r] = 1;
    Partition child = node;
    Trace t;
    individualize(S.G, child, v, t);
    path.push_back(std::move(t));
    fixed.push_back(v);
    canonical_dfs(S, aut, child, path, fixed, best);
    fixed.pop_back();
    path.pop_back();
  }
}

void check_cap(std::size_t N) {
  if (N > g_cap)
    throw Error(ErrorKind::TooLarge, std::to_string(N) + " vertices exceed the automorphism cap " + std::to_string(g_cap));
}

std::string encode(const ColoredGraph& G, const std::vector<std::uint64_t>& matrix) {
  std::string out = "N" + std::to_string(G.size()) + ":";
  out.reserve(out.size() + matrix.size() * 8);
  for (auto w : matrix)
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((w >> (8 * b)) & 0xff));
  return out;
}

}  // namespace

std::vector<int> color_refine(const ColoredGraph& G, const std::vector<int>& init) {
  Partition P = initial_partition(init);
  std::deque<std::uint32_t> all;
  for (std::uint32_t s = 0; s < init.size(); s += P.len[s]) all.push_back(s);
  Trace t;
  refine(G, P, all, t);
  std::vector<int> out(init.size());
  int c = 0;
  for (std::uint32_t s = 0; s < init.size(); s += P.len[s], ++c)
    for (std::uint32_t p = s; p < s + P.len[s]; ++p) out[P.lab[p]] = c;
  return out;
}

std::vector<int> color_refine(const SimpleGraph& G, const std::vector<int>& init) {
  return color_refine(ColoredGraph::from(G), init);
}

std::vector<int> color_refine(const BiGraph& G) {
  ColoredGraph C = ColoredGraph::from(G);
  return color_refine(C, C.color);
}

PermGroup automorphisms(const ColoredGraph& G) {
  check_cap(G.size());
  Search S(G);
  AutResult R = search_automorphisms(S);
  return PermGroup(G.size(), std::move(R.gens));
}

CanonicalForm canonical(const ColoredGraph& G) {
  check_cap(G.size());
  Search S(G);
  PermGroup aut(G.size(), search_automorphisms(S).gens);

  Partition P = initial_partition(G.color);
  Trace t0;
  std::deque<std::uint32_t> all;
  for (std::uint32_t s = 0; s < G.size(); s += P.len[s]) all.push_back(s);
  refine(G, P, all, t0);
  std::vector<Trace> path{t0};
  std::vector<std::uint32_t> fixed;
  Best best;
  canonical_dfs(S, aut, P, path, fixed, best);

  CanonicalForm cf;
  cf.labeling = best.leaf.pos;
  cf.certificate = encode(G, best.matrix);
  return cf;
}

PermGroup automorphisms(const SimpleGraph& G) { return automorphisms(ColoredGraph::from(G)); }
CanonicalForm canonical(const SimpleGraph& G) { return canonical(ColoredGraph::from(G)); }

namespace {

// H = G.swapped() with vertices renumbered; maps an H vertex to the G vertex it came from
std::uint32_t from_swapped(const BiGraph& G, std::uint32_t h) {
  const std::size_t nb = G.size_b();
  return h < nb ? static_cast<std::uint32_t>(G.size_a() + h) : static_cast<std::uint32_t>(h - nb);
}

}  // namespace

PermGroup automorphisms(const BiGraph& G) {
  ColoredGraph C = ColoredGraph::from(G);
  PermGroup grp = automorphisms(C);
  std::vector<Perm> gens = grp.generators();
  if (G.size_a() == G.size_b() && G.size_a() > 0) {
    CanonicalForm a = canonical(C), b = canonical(ColoredGraph::from(G.swapped()));
    if (a.certificate == b.certificate) {
      // vertex at canonical position p in G goes to the G-vertex behind position p of the swapped copy
      const std::size_t N = C.size();
      Perm at_b(N), swap(N);
      for (std::uint32_t h = 0; h < N; ++h) at_b[b.labeling[h]] = from_swapped(G, h);
      for (std::uint32_t v = 0; v < N; ++v) swap[v] = at_b[a.labeling[v]];
      gens.push_back(std::move(swap));
    }
  }
  return PermGroup(C.size(), std::move(gens));
}

CanonicalForm canonical(const BiGraph& G) {
  CanonicalForm a = canonical(ColoredGraph::from(G));
  CanonicalForm b = canonical(ColoredGraph::from(G.swapped()));
  if (a.certificate <= b.certificate) return a;
  // express the swapped copy's labelling on G's own vertex numbers
  CanonicalForm out;
  out.certificate = std::move(b.certificate);
  out.labeling.assign(b.labeling.size(), 0);
  for (std::uint32_t h = 0; h < b.labeling.size(); ++h) out.labeling[from_swapped(G, h)] = b.labeling[h];
  return out;
}

BigInt pgl_order(int n, int q) {
  BigInt r = 1, Q = 1, qn = 1;
  for (int t = 0; t <= n; ++t) qn *= q;
  for (int t = 0; t <= n; ++t) {
    r *= qn - Q;
    Q *= q;
  }
  return r / (q - 1);
}

BigInt pgammal_order(int n, int q) { return pgl_order(n, q) * FieldSpec::get(q).degree(); }

BigInt thin_symmetric_order(const FamilySpec& spec) {
  BigInt r = 1;
  for (int t = 2; t <= spec.n; ++t) r *= t;
  return spec.i == spec.j ? r * 2 : r;
}

namespace {

using Matrix = std::vector<Vec>;

Matrix identity_matrix(int m) {
  Matrix M(m, Vec(m, 0));
  for (int r = 0; r < m; ++r) M[r][r] = 1;
  return M;
}

// linear maps generating GL(m,q): a transvection (plus its scalar multiple over
// a non-prime field), a cyclic coordinate shift and a diagonal primitive element
std::vector<Matrix> gl_generators(int m, const FieldSpec& F) {
  std::vector<Matrix> out;
  Matrix T = identity_matrix(m);
  T[0][1] = 1;
  out.push_back(T);
  if (F.degree() > 1) {
    T[0][1] = F.primitive();
    out.push_back(T);
  }
  Matrix C(m, Vec(m, 0));
  for (int r = 0; r < m; ++r) C[r][(r + 1) % m] = 1;
  out.push_back(C);
  if (F.order() > 2) {
    Matrix D = identity_matrix(m);
    D[0][0] = F.primitive();
    out.push_back(D);
  }
  return out;
}

Subspace apply(const Subspace& U, const FieldSpec& F, const Matrix* M, bool frob) {
  const int n = U.ambient(), m = n + 1;
  std::vector<Vec> rows;
  for (int r = 0; r < U.rank(); ++r) {
    Vec v = U.row(r);
    if (frob)
      for (auto& x : v) x = F.frobenius(x);
    if (M) {
      Vec w(m, 0);
      for (int a = 0; a < m; ++a)
        if (v[a])
          for (int c = 0; c < m; ++c) w[c] = F.add(w[c], F.mul(v[a], (*M)[a][c]));
      v = std::move(w);
    }
    rows.push_back(std::move(v));
  }
  return canonicalize(n, F, std::move(rows));
}

PermGroup thick_generators(const FamilySpec& spec) {
  if (!FieldSpec::supported(spec.q)) throw Error(ErrorKind::UnsupportedSpec, "unsupported field order");
  const FieldSpec& F = FieldSpec::get(spec.q);
  Family fam = build_family(spec);
  const std::size_t na = fam.thick_a.size(), nb = fam.thick_b.size(), N = na + nb;
  std::unordered_map<Subspace, std::uint32_t, SubspaceHash> ia, ib;
  for (std::size_t a = 0; a < na; ++a) ia[fam.thick_a[a]] = static_cast<std::uint32_t>(a);
  for (std::size_t b = 0; b < nb; ++b) ib[fam.thick_b[b]] = static_cast<std::uint32_t>(na + b);

  std::vector<Perm> gens;
  auto induced = [&](const Matrix* M, bool frob) {
    Perm p(N);
    for (std::size_t a = 0; a < na; ++a) p[a] = ia.at(apply(fam.thick_a[a], F, M, frob));
    for (std::size_t b = 0; b < nb; ++b) p[na + b] = ib.at(apply(fam.thick_b[b], F, M, frob));
    gens.push_back(std::move(p));
  };
  for (const auto& M : gl_generators(spec.n + 1, F)) induced(&M, false);
  if (F.degree() > 1) induced(nullptr, true);
  if (spec.i + spec.j == spec.n - 1) {
    Perm p(N);
    for (std::size_t a = 0; a < na; ++a) p[a] = ib.at(dual_complement(fam.thick_a[a]));
    for (std::size_t b = 0; b < nb; ++b) p[na + b] = ia.at(dual_complement(fam.thick_b[b]));
    gens.push_back(std::move(p));
  }
  if (spec.i == spec.j) {
    Perm p(N);
    for (std::size_t a = 0; a < na; ++a) p[a] = static_cast<std::uint32_t>(na + a);
    for (std::size_t b = 0; b < nb; ++b) p[na + b] = static_cast<std::uint32_t>(b);
    gens.push_back(std::move(p));
  }
  return PermGroup(N, std::move(gens));
}

std::uint32_t permute_mask(std::uint32_t m, const std::vector<int>& sigma) {
  std::uint32_t r = 0;
  for (std::size_t x = 0; x < sigma.size(); ++x)
    if (m >> x & 1u) r |= 1u << sigma[x];
  return r;
}

bool partition_exception(const FamilySpec& s) {
  return s.mode == Mode::Exact && s.i == s.j && (s.n + 1) % 4 == 0 && s.n >= 7 && s.i == (s.n - 1) / 2 &&
         s.k == (s.n + 1) / 4 - 1;
}

bool duad_exception(const FamilySpec& s) {
  return s.mode == Mode::Exact && s.n == 6 && s.i == 2 && s.j == 2 && s.k == 1;
}

PermGroup thin_generators(const FamilySpec& spec) {
  Family fam = build_family(spec);
  const std::size_t na = fam.thin_a.size(), nb = fam.thin_b.size(), N = na + nb;
  std::unordered_map<std::uint32_t, std::uint32_t> ia, ib;
  for (std::size_t a = 0; a < na; ++a) ia[fam.thin_a[a]] = static_cast<std::uint32_t>(a);
  for (std::size_t b = 0; b < nb; ++b) ib[fam.thin_b[b]] = static_cast<std::uint32_t>(na + b);

  std::vector<Perm> gens;
  auto from_sigma = [&](const std::vector<int>& sigma) {
    Perm p(N);
    for (std::size_t a = 0; a < na; ++a) p[a] = ia.at(permute_mask(fam.thin_a[a], sigma));
    for (std::size_t b = 0; b < nb; ++b) p[na + b] = ib.at(permute_mask(fam.thin_b[b], sigma));
    gens.push_back(std::move(p));
  };
  const int n = spec.n;
  std::vector<int> tr(n), cyc(n);
  std::iota(tr.begin(), tr.end(), 0);
  std::swap(tr[0], tr[1]);
  for (int x = 0; x < n; ++x) cyc[x] = (x + 1) % n;
  from_sigma(tr);
  from_sigma(cyc);
  if (spec.i == spec.j) {
    Perm p(N);
    for (std::size_t a = 0; a < na; ++a) p[a] = static_cast<std::uint32_t>(na + a);
    for (std::size_t b = 0; b < nb; ++b) p[na + b] = static_cast<std::uint32_t>(b);
    gens.push_back(std::move(p));
  }

  if (partition_exception(spec)) {
    // a subset T of {0..n-1} is the partition {T + n, rest} of {0..n}; Sym(n+1) acts on those
    const std::uint32_t full = (1u << (n + 1)) - 1, top = 1u << n;
    auto image = [&](std::uint32_t m, const std::vector<int>& sigma) {
      std::uint32_t half = permute_mask(m | top, sigma);
      if (!(half & top)) half = full & ~half;
      return half & ~top;
    };
    std::vector<int> tr2(n + 1), cyc2(n + 1);
    std::iota(tr2.begin(), tr2.end(), 0);
    std::swap(tr2[0], tr2[1]);
    for (int x = 0; x <= n; ++x) cyc2[x] = (x + 1) % (n + 1);
    for (const auto& sigma : {tr2, cyc2}) {
      Perm p(N);
      for (std::size_t a = 0; a < na; ++a) p[a] = ia.at(image(fam.thin_a[a], sigma));
      for (std::size_t b = 0; b < nb; ++b) p[na + b] = ib.at(image(fam.thin_b[b], sigma));
      gens.push_back(std::move(p));
    }
  }

  if (duad_exception(spec)) {
    // duad {a,b} -> e_a + e_b in the even-weight code of length 6 modulo the all-one word,
    // a 4-space whose form |D1 ∩ D2| mod 2 is symplectic. A vertices are points x,
    // B vertices the planes x-perp; adjacency is x not in y-perp.
    const std::uint32_t basis[4] = {0b000011, 0b000110, 0b001100, 0b011000};
    auto coords = [&](std::uint32_t duad) {
      for (std::uint32_t c = 1; c < 16; ++c) {
        std::uint32_t w = 0;
        for (int t = 0; t < 4; ++t)
          if (c >> t & 1u) w ^= basis[t];
        if (w == duad || (w ^ 0b111111u) == duad) return c;
      }
      throw Error(ErrorKind::PreconditionViolation, "duad outside the code");
    };
    auto form = [&](std::uint32_t x, std::uint32_t y) {
      int s = 0;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          if ((x >> a & 1u) && (y >> b & 1u)) s += std::popcount(basis[a] & basis[b]);
      return s & 1;
    };
    std::vector<std::uint32_t> vec_of(na), vert_of(16, 0);
    for (std::size_t a = 0; a < na; ++a) {
      vec_of[a] = coords(fam.thin_a[a]);
      vert_of[vec_of[a]] = static_cast<std::uint32_t>(a);
    }
    auto mul = [](const std::array<std::uint32_t, 4>& cols, std::uint32_t x) {
      std::uint32_t r = 0;
      for (int t = 0; t < 4; ++t)
        if (x >> t & 1u) r ^= cols[t];
      return r;
    };
    // columns of the GL(4,2) generators
    const std::array<std::array<std::uint32_t, 4>, 2> mats{{{0b0001, 0b0011, 0b0100, 0b1000},
                                                            {0b0010, 0b0100, 0b1000, 0b0001}}};
    for (const auto& M : mats) {
      Perm p(N);
      for (std::size_t a = 0; a < na; ++a) p[a] = vert_of[mul(M, vec_of[a])];
      for (std::size_t b = 0; b < nb; ++b) {
        // image of the plane y-perp is z-perp for the unique z with the same incidences
        const std::uint32_t y = vec_of[b];
        std::uint32_t hit = 0;
        for (std::uint32_t z = 1; z < 16 && !hit; ++z) {
          bool same = true;
          for (std::uint32_t x = 1; x < 16 && same; ++x) same = form(x, y) == form(mul(M, x), z);
          if (same) hit = z;
        }
        p[na + b] = static_cast<std::uint32_t>(na + vert_of[hit]);
      }
      gens.push_back(std::move(p));
    }
  }
  return PermGroup(N, std::move(gens));
}

}  // namespace

PermGroup geometric_generators(const FamilySpec& spec) {
  spec.validate();
  return spec.thin() ? thin_generators(spec) : thick_generators(spec);
}

}  // namespace weyl
