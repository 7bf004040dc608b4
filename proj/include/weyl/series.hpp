#pragma once

#include <array>
#include <string>
#include <vector>

#include "weyl/family.hpp"
#include "weyl/grassmann.hpp"

namespace weyl {

enum class Quantifier { Exists, Forall, Exists1, ForallMinus1 };
const char* to_string(Quantifier q);
/// The quantifier whose step on the returning clique class undoes a step.
Quantifier inverse(Quantifier q);

/// One step of a series. G has the fixed side on A and the current level on B;
/// the result has the same A side and one B vertex per clique. `lines` are only
/// consulted by Exists1 / ForallMinus1.
BiGraph series_step(const BiGraph& G, const std::vector<Bitset>& cliques, Quantifier q,
                    const std::vector<Bitset>& lines);

BiGraph series_step_typeII(const BiGraph& G, const CliqueSystem& cs, int cls, Quantifier q);
BiGraph series_step_typeIII(const BiGraph& G, const CliqueSystem& cs, int cls, Quantifier q);

enum class SeriesType { II, III };

struct SeriesResult {
  // m_minus_exists, m_plus_exists, m_minus_forall, m_plus_forall
  std::array<int, 4> stop{};
  int minus_class = 0;
  // B-side sizes of every graph visited, one list per direction in `stop` order
  std::array<std::vector<std::size_t>, 4> trace;
};

/// Runs the four series from G (fixed side A, clique side B) and reports the
/// stopping indices. Throws SeriesDiverged past `bound` steps.
SeriesResult run_series(const BiGraph& G, const CliqueSystem& cs, SeriesType type, int bound = 16);

/// Starting from one clique class of a Grassmann-type level with `base` vertices,
/// the number of clique-adjunction steps until a level whose Grassmann graph is
/// complete (a point-like level) is reached.
int walk_to_end(std::vector<Bitset> fwd, std::size_t base, int bound = 16);

/// Parameters read off the stopping indices; `thin` shifts the first index by one.
FamilySpec params_from_stops(const std::array<int, 4>& stop, SeriesType type, bool thin, int q);

/// The stopping indices the closed forms predict for spec.
std::array<int, 4> expected_stops(const FamilySpec& spec);

}  // namespace weyl
