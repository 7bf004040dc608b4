#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "weyl/bitset.hpp"
#include "weyl/projgeom.hpp"

namespace weyl {

enum class Geometry { Thick, Thin };
enum class Mode { Exact, AtLeast };

struct FamilySpec {
  Geometry geometry = Geometry::Thick;
  int q = 2;  // ignored for thin
  int n = 0, i = 0, j = 0, k = 0;
  Mode mode = Mode::Exact;

  bool thin() const { return geometry == Geometry::Thin; }
  /// Smallest admissible k for this geometry.
  int k_floor() const { return thin() ? 0 : -1; }

  /// Throws InvalidSpec unless the parameter bounds hold.
  void validate() const;
  bool valid() const;

  std::string to_string() const;
  /// The `key=value` form used in graph file metadata.
  std::string metadata() const;
  static FamilySpec from_metadata(const std::string& line);

  bool operator==(const FamilySpec& o) const;
  bool operator<(const FamilySpec& o) const;
};

FamilySpec thick(int q, int n, int i, int j, int k, Mode mode = Mode::Exact);
FamilySpec thin(int n, int i, int j, int k, Mode mode = Mode::Exact);

enum class Side { A, B };
inline Side other(Side s) { return s == Side::A ? Side::B : Side::A; }

class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : rows_(n, Bitset(n)) {}

  std::size_t size() const { return rows_.size(); }
  bool adj(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  const Bitset& nbrs(std::size_t u) const { return rows_[u]; }
  std::size_t degree(std::size_t u) const { return rows_[u].count(); }
  void add_edge(std::size_t u, std::size_t v) {
    rows_[u].set(v);
    rows_[v].set(u);
  }
  std::size_t edge_count() const;
  SimpleGraph complement() const;
  bool operator==(const SimpleGraph& o) const = default;

 private:
  std::vector<Bitset> rows_;
};

/// Bipartite graph with adjacency rows from A to B and the transposed rows.
class BiGraph {
 public:
  BiGraph() = default;
  BiGraph(std::size_t na, std::size_t nb);
  explicit BiGraph(std::vector<Bitset> rows, std::size_t nb);

  std::size_t size(Side s) const { return s == Side::A ? rows_.size() : cols_.size(); }
  std::size_t size_a() const { return rows_.size(); }
  std::size_t size_b() const { return cols_.size(); }

  bool adj(std::size_t a, std::size_t b) const { return rows_[a].test(b); }
  const Bitset& nbrs(Side s, std::size_t v) const { return s == Side::A ? rows_[v] : cols_[v]; }
  const std::vector<Bitset>& rows(Side s) const { return s == Side::A ? rows_ : cols_; }

  std::size_t edge_count() const;
  /// Degrees of side s, or nullopt when they are not constant.
  std::optional<std::size_t> valence(Side s) const;

  BiGraph swapped() const { return BiGraph(cols_, rows_.size()); }
  bool operator==(const BiGraph& o) const { return rows_ == o.rows_ && cols_.size() == o.cols_.size(); }

 private:
  void transpose();
  std::vector<Bitset> rows_, cols_;
};

/// A built family graph with its vertex labels.
struct Family {
  FamilySpec spec;
  BiGraph graph;
  std::vector<Subspace> thick_a, thick_b;
  std::vector<std::uint32_t> thin_a, thin_b;
};

/// Process-wide worker count for parallel loops (1 = sequential).
void set_threads(int n);
int threads();
/// Per-bipart vertex cap for builders.
void set_vertex_cap(std::uint64_t cap);
std::uint64_t vertex_cap();

/// All r-subsets of {0..n-1} as bitmasks, lexicographic in sorted-element order.
std::vector<std::uint32_t> enumerate_subsets(int n, int r);

Family build_family(const FamilySpec& spec);
BiGraph build_bigraph(const FamilySpec& spec);
/// Graph on the j-part of spec (i is ignored).
SimpleGraph build_simple(const FamilySpec& spec);

BiGraph bipartite_complement(const BiGraph& G);
BiGraph bipartite_double(const SimpleGraph& G, bool extended);

enum class TrivialKind { Empty, CompleteBipartite, Matching, ComplementOfMatching, Nontrivial };
const char* to_string(TrivialKind kind);

TrivialKind classify_trivial(const BiGraph& G);
/// Every trivial shape G has (small graphs can have several).
std::set<TrivialKind> trivial_shapes(const BiGraph& G);
/// The trivial shapes the structure theorems assign to spec; empty when none applies.
std::set<TrivialKind> predicted_trivial(const FamilySpec& spec);

bool twin_free(const BiGraph& G);
std::size_t distinguishing_neighbors(const BiGraph& G, Side side, std::size_t v1, std::size_t v2);

/// Vertex count of one bipart of spec (dimension d part) without building.
std::uint64_t part_size(const FamilySpec& spec, int d);
/// Number of d2-vertices adjacent to a fixed d1-vertex.
std::uint64_t valence_formula(const FamilySpec& spec, int d1, int d2);

}  // namespace weyl
