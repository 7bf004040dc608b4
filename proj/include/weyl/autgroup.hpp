#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weyl/family.hpp"
#include "weyl/perm.hpp"

namespace weyl {

/// Vertex-coloured graph on which the search runs. Bipartite graphs use
/// vertices 0..|A|-1 for A and |A|.. for B.
struct ColoredGraph {
  std::vector<Bitset> adj;
  std::vector<int> color;

  std::size_t size() const { return adj.size(); }
  static ColoredGraph from(const SimpleGraph& G);
  /// Colours A with 0 and B with 1.
  static ColoredGraph from(const BiGraph& G);
};

/// Coarsest equitable refinement of `init`; the returned colours number the
/// cells in their (labelling-independent) order.
std::vector<int> color_refine(const ColoredGraph& G, const std::vector<int>& init);
std::vector<int> color_refine(const SimpleGraph& G, const std::vector<int>& init);
std::vector<int> color_refine(const BiGraph& G);

struct CanonicalForm {
  Perm labeling;            // labeling[v] is v's position in the canonical order
  std::string certificate;  // equal for two inputs iff they are isomorphic
};

void set_aut_vertex_cap(std::size_t cap);
std::size_t aut_vertex_cap();
void set_search_budget(std::uint64_t nodes);

/// Automorphisms preserving colours.
PermGroup automorphisms(const ColoredGraph& G);
CanonicalForm canonical(const ColoredGraph& G);

PermGroup automorphisms(const SimpleGraph& G);
CanonicalForm canonical(const SimpleGraph& G);
/// Automorphisms that fix or swap the two biparts.
PermGroup automorphisms(const BiGraph& G);
/// Certificate of the bipartite graph with its two biparts unordered.
CanonicalForm canonical(const BiGraph& G);

BigInt pgl_order(int n, int q);
BigInt pgammal_order(int n, int q);

/// Permutations of build_family(spec)'s vertices induced by the geometry: linear
/// generators, the Frobenius map, a duality when i + j = n - 1, the bipart swap
/// when i = j; Sym(n) for thin specs, with the partition model for the exceptions.
PermGroup geometric_generators(const FamilySpec& spec);

/// Order of the group Sym(n) induces on a thin graph (with the swap when i = j).
BigInt thin_symmetric_order(const FamilySpec& spec);

}  // namespace weyl
