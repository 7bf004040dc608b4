#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "weyl/family.hpp"
#include "weyl/projgeom.hpp"

namespace weyl {

struct TripleVerdict {
  bool is_roundup = false;
  std::optional<std::size_t> witness_common;  // adjacent to all three
  std::optional<std::size_t> violator;        // adjacent to exactly two
};

struct QuadVerdict {
  bool is_roundup = false;
  std::optional<std::size_t> witness;   // adjacent to at least three
  std::optional<std::size_t> violator;  // adjacent to exactly two
};

/// The vertices lie on `side`; the opposite bipart is scanned.
TripleVerdict triple_verdict(const BiGraph& G, Side side, const std::array<std::size_t, 3>& v);
QuadVerdict quad_verdict(const BiGraph& G, Side side, const std::array<std::size_t, 4>& v);

/// Three distinct j-spaces through a common (j-1)-space inside a common (j+1)-space.
bool is_regular_triple(const Subspace& a, const Subspace& b, const Subspace& c);
bool is_regular_quad(const Subspace& a, const Subspace& b, const Subspace& c, const Subspace& d);

/// Property (min) evaluated at vertex v of `side`.
bool satisfies_min(const BiGraph& G, Side side, std::size_t v);

/// True iff every vertex u equals Gamma(v) ∩ Gamma(w) for some v, w.
bool every_vertex_is_pair_intersection(const BiGraph& G);

}  // namespace weyl
