#include "weyl/thinext.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "weyl/error.hpp"

namespace weyl {

namespace {

void require_thin(const FamilySpec& spec) {
  spec.validate();
  if (!spec.thin()) throw Error(ErrorKind::PreconditionViolation, "thin spec expected: " + spec.to_string());
}

bool thin_adjacent(const FamilySpec& s, std::uint32_t I, std::uint32_t J) {
  const int m = std::popcount(I & J);
  return s.mode == Mode::Exact ? m == s.k : m >= s.k;
}

}  // namespace

std::vector<std::optional<std::uint64_t>> common_neighbor_table(const FamilySpec& spec) {
  require_thin(spec);
  const Family fam = build_family(spec);
  const auto& cols = fam.graph.rows(Side::B);
  const std::size_t nb = cols.size();
  // every pair when that is cheap, otherwise the first j-set against all others
  const std::size_t firsts = nb <= 2000 ? nb : 1;
  std::vector<std::optional<std::uint64_t>> table(spec.j + 1);
  for (std::size_t x = 0; x < firsts; ++x)
    for (std::size_t y = 0; y < nb; ++y) {
      if (x == y) continue;
      const int t = std::popcount(fam.thin_b[x] & fam.thin_b[y]);
      const std::uint64_t c = cols[x].intersect_count(cols[y]);
      auto& slot = table[t];
      if (!slot) slot = c;
      else if (*slot != c)
        throw Error(ErrorKind::AxiomViolation, "common neighbour count not constant at overlap " + std::to_string(t) +
                                                   " in " + spec.to_string());
    }
  return table;
}

std::uint64_t common_neighbor_profile(const FamilySpec& spec, int t) {
  require_thin(spec);
  if (t < 0 || t > spec.j) throw Error(ErrorKind::PreconditionViolation, "overlap out of range");
  const auto table = common_neighbor_table(spec);
  if (!table[t]) throw Error(ErrorKind::PreconditionViolation, "no two j-sets meet in " + std::to_string(t) + " points");
  return *table[t];
}

SimpleGraph derived_relation_graph(const FamilySpec& spec, const std::function<bool(std::uint64_t)>& keep) {
  require_thin(spec);
  const BiGraph G = build_bigraph(spec);
  const auto& cols = G.rows(Side::B);
  SimpleGraph H(cols.size());
  for (std::size_t x = 0; x < cols.size(); ++x)
    for (std::size_t y = x + 1; y < cols.size(); ++y)
      if (keep(cols[x].intersect_count(cols[y]))) H.add_edge(x, y);
  return H;
}

std::optional<SrgParams> srg_parameters(const SimpleGraph& G) {
  const std::size_t v = G.size();
  if (v == 0) return std::nullopt;
  SrgParams p;
  p.v = v;
  p.k = G.degree(0);
  std::optional<std::size_t> lambda, mu;
  for (std::size_t x = 0; x < v; ++x) {
    if (G.degree(x) != p.k) return std::nullopt;
    for (std::size_t y = x + 1; y < v; ++y) {
      const std::size_t c = G.nbrs(x).intersect_count(G.nbrs(y));
      auto& slot = G.adj(x, y) ? lambda : mu;
      if (!slot) slot = c;
      else if (*slot != c) return std::nullopt;
    }
  }
  p.lambda = lambda.value_or(0);
  p.mu = mu.value_or(0);
  return p;
}

PartitionVertex PartitionModel::to_partition(std::uint32_t subset) const {
  const std::uint32_t full = (1u << (2 * ell)) - 1;
  std::uint32_t half = subset | 1u << (2 * ell - 1);
  if (!(half & 1u)) half = full & ~half;
  return {half};
}

std::size_t PartitionModel::index_of(PartitionVertex p) const {
  const auto it = std::find(partitions.begin(), partitions.end(), p);
  if (it == partitions.end()) throw Error(ErrorKind::PreconditionViolation, "not an (l,l)-partition");
  return static_cast<std::size_t>(it - partitions.begin());
}

std::size_t PartitionModel::act(std::size_t x, const std::vector<int>& sigma) const {
  std::uint32_t img = 0;
  for (int e = 0; e < 2 * ell; ++e)
    if (partitions[x].half >> e & 1u) img |= 1u << sigma[e];
  const std::uint32_t full = (1u << (2 * ell)) - 1;
  if (!(img & 1u)) img = full & ~img;
  return index_of({img});
}

PartitionModel partition_model(int ell) {
  if (ell < 3 || ell > 15) throw Error(ErrorKind::PreconditionViolation, "partition model needs 3 <= l <= 15");
  PartitionModel M;
  M.ell = ell;
  M.subsets = enumerate_subsets(2 * ell - 1, ell - 1);
  for (auto s : M.subsets) M.partitions.push_back(M.to_partition(s));
  return M;
}

std::optional<InvarianceWitness> partition_violation(int ell, int k, Mode mode) {
  const PartitionModel M = partition_model(ell);
  const FamilySpec spec = thin(2 * ell - 1, ell - 1, ell - 1, k, mode);
  spec.validate();
  const std::size_t N = M.subsets.size();
  for (int u = 0; u < 2 * ell; ++u)
    for (int w = u + 1; w < 2 * ell; ++w) {
      std::vector<int> sigma(2 * ell);
      std::iota(sigma.begin(), sigma.end(), 0);
      std::swap(sigma[u], sigma[w]);
      std::vector<std::size_t> img(N);
      for (std::size_t x = 0; x < N; ++x) img[x] = M.act(x, sigma);
      for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
          const bool e = thin_adjacent(spec, M.subsets[a], M.subsets[b]);
          if (e && !thin_adjacent(spec, M.subsets[img[a]], M.subsets[img[b]]))
            return InvarianceWitness{sigma, a, b, std::popcount(M.subsets[a] & M.subsets[b]),
                                     std::popcount(M.subsets[img[a]] & M.subsets[img[b]])};
        }
    }
  return std::nullopt;
}

bool partition_invariant(int ell, int k, Mode mode) { return !partition_violation(ell, k, mode); }

std::optional<int> partition_exceptional_k(int ell) {
  if ((ell - 2) % 2 != 0) return std::nullopt;
  return (ell - 2) / 2;
}

Perm duad_pg32_bijection() {
  const ColoredGraph T = ColoredGraph::from(build_bigraph(thin(6, 2, 2, 1)));
  const BiGraph P = build_bigraph(thick(2, 3, 0, 2, -1));
  for (int side = 0; side < 2; ++side) {
    const BiGraph target = side == 0 ? P : P.swapped();
    const ColoredGraph C = ColoredGraph::from(target);
    const CanonicalForm ct = canonical(T), cc = canonical(C);
    if (ct.certificate != cc.certificate) continue;
    const Perm back = inverse(cc.labeling);
    Perm iso(T.size());
    for (std::size_t v = 0; v < T.size(); ++v) iso[v] = back[ct.labeling[v]];
    for (std::size_t v = 0; v < T.size(); ++v)
      for (std::size_t w = 0; w < T.size(); ++w)
        if (T.adj[v].test(w) != C.adj[iso[v]].test(iso[w]))
          throw Error(ErrorKind::AxiomViolation, "canonical labelings do not give an isomorphism");
    if (side == 1) {
      // report against P's own numbering: its B side came first in the swapped graph
      const std::size_t nb = P.size_b(), na = P.size_a();
      for (auto& x : iso) x = x < nb ? static_cast<std::uint32_t>(na + x) : static_cast<std::uint32_t>(x - nb);
    }
    return iso;
  }
  throw Error(ErrorKind::AxiomViolation, "thin(6,2,2,1) is not the PG(3,2) point/plane non-incidence graph");
}

}  // namespace weyl
