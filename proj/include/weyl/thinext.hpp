#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "weyl/autgroup.hpp"
#include "weyl/family.hpp"

namespace weyl {

/// Number of i-sets adjacent to both of two j-sets meeting in t points.
/// Throws AxiomViolation if the count depends on the chosen pair.
std::uint64_t common_neighbor_profile(const FamilySpec& spec, int t);

/// Full profile over every pair of j-sets, indexed by overlap 0..j; nullopt
/// entries for overlaps that cannot occur. Throws as above when not constant.
std::vector<std::optional<std::uint64_t>> common_neighbor_table(const FamilySpec& spec);

/// Graph on the B side of a thin spec: two vertices are adjacent when their
/// number of common neighbours satisfies `keep`.
SimpleGraph derived_relation_graph(const FamilySpec& spec, const std::function<bool(std::uint64_t)>& keep);

struct SrgParams {
  std::size_t v = 0, k = 0, lambda = 0, mu = 0;
  bool operator==(const SrgParams&) const = default;
};
/// Parameters of G when it is strongly regular.
std::optional<SrgParams> srg_parameters(const SimpleGraph& G);

/// An (l,l)-partition of a 2l-set, kept as the half that contains 0.
struct PartitionVertex {
  std::uint32_t half = 0;
  bool operator==(const PartitionVertex&) const = default;
};

/// (l-1)-sets of {0..2l-2} against (l,l)-partitions of {0..2l-1}: S goes to {S + (2l-1), rest}.
struct PartitionModel {
  int ell = 0;
  std::vector<std::uint32_t> subsets;        // enumerate_subsets(2l-1, l-1)
  std::vector<PartitionVertex> partitions;  // partitions[x] corresponds to subsets[x]

  PartitionVertex to_partition(std::uint32_t subset) const;
  /// Index of the subset matching p.
  std::size_t index_of(PartitionVertex p) const;
  /// Image of vertex x under a permutation of {0..2l-1}.
  std::size_t act(std::size_t x, const std::vector<int>& sigma) const;
};

PartitionModel partition_model(int ell);

struct InvarianceWitness {
  std::vector<int> sigma;  // a transposition of {0..2l-1}
  std::size_t a = 0, b = 0;  // an edge (A vertex a, B vertex b) mapped to a non-edge
  int overlap = 0, image_overlap = 0;
};

/// Whether the adjacency of thin(2l-1, l-1, l-1, k, mode), carried over to the
/// partitions, is preserved by Sym(2l). Transpositions generate Sym(2l), so a
/// failure is reported with a transposition.
std::optional<InvarianceWitness> partition_violation(int ell, int k, Mode mode = Mode::Exact);
bool partition_invariant(int ell, int k, Mode mode = Mode::Exact);
/// The k with k = l - k - 2, when integral.
std::optional<int> partition_exceptional_k(int ell);

/// An isomorphism from thin(6,2,2,1) onto the point/plane non-incidence graph
/// of PG(3,2), found by matching canonical forms and checked edge by edge.
/// Vertex numbering as in ColoredGraph::from (A first).
Perm duad_pg32_bijection();

}  // namespace weyl
