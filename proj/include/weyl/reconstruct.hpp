#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "weyl/family.hpp"

namespace weyl {

enum class DetectedType { I, II, III, Trivial };
const char* to_string(DetectedType t);

struct Normalizations {
  bool dual = false;        // a duality (or thin set complement) was applied
  bool swap = false;        // the reported i-part is the input's B side
  bool complement = false;  // parameters were found on the bipartite complement
};

struct ReconstructionReport {
  DetectedType detected_type = DetectedType::Trivial;
  std::optional<TrivialKind> trivial_kind;
  std::optional<FamilySpec> params;
  /// m_minus_exists, m_plus_exists, m_minus_forall, m_plus_forall when a series ran
  std::optional<std::array<int, 4>> stop_indices;
  /// The spec the stopping indices belong to (differs from params on the complement route).
  std::optional<FamilySpec> series_spec;
  Normalizations normalizations;
  /// Other normalized specs whose graphs share every signature invariant with G
  /// (the exceptional coincidences between thin and thick graphs show up here).
  std::vector<FamilySpec> equivalents;

  // certificates
  std::uint64_t seed = 0;
  std::string stage;
  std::string doubled;  // "", "ordinary" or "extended" for simple inputs
  std::array<std::size_t, 2> clique_counts{0, 0};
  std::array<std::vector<std::size_t>, 4> series_trace;

  std::string to_json() const;
};

struct NormalForm {
  FamilySpec spec;
  bool dual = false;
  bool swap = false;
};

/// Canonical representative among the parameter tuples giving isomorphic graphs
/// (i <= j, i+j <= n-1 for thick; at-least with k = min(i,j) becomes exact).
NormalForm normalize(const FamilySpec& spec);

/// The family spec whose graph is the bipartite complement of spec's, if one exists.
std::optional<FamilySpec> complement_spec(const FamilySpec& spec);

/// Invariants compared between the input and a rebuilt candidate.
struct Signature {
  std::array<std::size_t, 2> sizes{};
  std::size_t edges = 0;
  std::array<std::vector<std::size_t>, 2> profiles;  // sorted common-neighbour counts at the first and last vertex

  bool operator==(const Signature&) const = default;
};
Signature signature(const BiGraph& G);
/// True iff spec builds a graph with G's signature in the same orientation.
bool signature_matches(const BiGraph& G, const FamilySpec& spec);

/// Type I (flag) graphs: recovers (n, i, j) with k = i. Throws NotTypeI.
FamilySpec reconstruct_flag_typeI(const BiGraph& G);

/// Specs whose part sizes and bi-valence agree with G (either orientation), normalized.
std::vector<FamilySpec> census(const BiGraph& G);

ReconstructionReport reconstruct(const BiGraph& G, std::uint64_t seed = 0);
ReconstructionReport reconstruct(const SimpleGraph& G, std::uint64_t seed = 0);

}  // namespace weyl
