#pragma once

#include <cstddef>
#include <vector>

#include "weyl/bitset.hpp"
#include "weyl/family.hpp"

namespace weyl {

/// Gamma_1 on `side`: two vertices adjacent iff they lie in a common round-up
/// triple (or quadruple when use_quads is set). Throws NoRoundups when none exists.
SimpleGraph grassmann_from_roundups(const BiGraph& G, Side side, bool use_quads);

/// Pairs attaining the largest common-neighbour count on `side`.
SimpleGraph grassmann_from_profile(const BiGraph& G, Side side);

/// All maximal cliques of G (Bron–Kerbosch with pivoting), sorted.
std::vector<Bitset> maximal_cliques(const SimpleGraph& G);

struct CliqueSystem {
  SimpleGraph grassmann;
  std::vector<Bitset> cliques;  // maximal cliques of `grassmann`
  std::vector<int> class_of;    // 0 or 1 per clique
  std::vector<Bitset> lines;    // |C ∩ D| >= 2 for C, D of opposite classes

  std::vector<Bitset> class_cliques(int c) const;
  std::size_t class_size(int c) const;
};

/// Throws NotGrassmann unless every edge lies in exactly two maximal cliques
/// and the cliques sharing an edge form a connected bipartite graph.
CliqueSystem clique_system(const SimpleGraph& G1);

/// Every pair of distinct vertices lies in exactly one maximal clique.
bool unique_max_clique_test(const SimpleGraph& G1);

}  // namespace weyl
