#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "weyl/bitset.hpp"
#include "weyl/field.hpp"

namespace weyl {

using Elem = FieldSpec::Elem;
using Vec = std::vector<Elem>;

/// A subspace of PG(n,q) held as its reduced row-echelon basis.
/// Two values are equal as point sets iff their bases are byte-identical.
class Subspace {
 public:
  Subspace() = default;

  int ambient() const { return n_; }
  int q() const { return q_; }
  int pdim() const { return rank_ - 1; }
  int rank() const { return rank_; }
  int cols() const { return n_ + 1; }

  Elem at(int r, int c) const { return data_[r * (n_ + 1) + c]; }
  Vec row(int r) const;
  const std::vector<Elem>& data() const { return data_; }
  std::vector<int> pivots() const;

  bool operator==(const Subspace& o) const {
    return n_ == o.n_ && q_ == o.q_ && rank_ == o.rank_ && data_ == o.data_;
  }
  bool operator<(const Subspace& o) const;
  std::size_t hash() const;

 private:
  friend Subspace canonicalize(int n, const FieldSpec& F, std::vector<Vec> rows);
  int n_ = -1, q_ = 0, rank_ = 0;
  std::vector<Elem> data_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

/// Row space of `rows` (each of length n+1) in canonical form.
Subspace canonicalize(int n, const FieldSpec& F, std::vector<Vec> rows);
Subspace empty_subspace(int n, const FieldSpec& F);
Subspace whole_space(int n, const FieldSpec& F);

/// [m choose r]_q; returns 0 outside 0 <= r <= m. Saturates at UINT64_MAX.
std::uint64_t gaussian_binomial(int m, int r, int q);
/// Number of points of a projective space of dimension d.
std::uint64_t point_count(int d, int q);

/// All d-subspaces of PG(n,q), ordered lexicographically by canonical matrix.
std::vector<Subspace> enumerate_subspaces(int n, int d, const FieldSpec& F,
                                          std::uint64_t cap = 1'000'000);

Subspace join(const Subspace& U, const Subspace& V);
Subspace meet(const Subspace& U, const Subspace& V);
/// Annihilator under the standard dot product.
Subspace dual_complement(const Subspace& U);
bool contains(const Subspace& big, const Subspace& small);
bool contains_vector(const Subspace& U, const Vec& v);

/// The projective space Res(K) of subspaces through K, with coordinates
/// given by the non-pivot columns of K.
class Residue {
 public:
  explicit Residue(Subspace K);

  const Subspace& base() const { return K_; }
  int dim() const { return K_.ambient() - K_.rank(); }

  Subspace project(const Subspace& W) const;
  Subspace lift(const Subspace& Wp) const;

 private:
  Vec reduce(Vec v) const;

  Subspace K_;
  std::vector<int> pivots_, free_;
};

/// A (a-b-1)-space disjoint from B, B1, B2 and B3, where a is the ambient
/// dimension, b = pdim(B), pdim(B1), pdim(B2) <= b-1 and pdim(B3) <= b-2.
Subspace find_disjoint_space(const Subspace& B, const Subspace& B1, const Subspace& B2,
                             const Subspace& B3);

/// Points of PG(n,q) with fast conversion from subspaces to point sets.
class PointTable {
 public:
  PointTable(int n, const FieldSpec& F);

  int ambient() const { return n_; }
  std::size_t size() const { return points_.size(); }
  const Vec& point(std::size_t idx) const { return points_[idx]; }
  /// Index of the point spanned by nonzero vector v.
  std::size_t index_of(const Vec& v) const;

  Bitset point_set(const Subspace& U) const;
  /// Projective dimension of a subspace from its number of points.
  int pdim_from_count(std::size_t count) const;

  static std::shared_ptr<const PointTable> get(int n, const FieldSpec& F);

 private:
  int n_;
  const FieldSpec* F_;
  std::vector<Vec> points_;
  std::vector<std::uint32_t> code_to_index_;
};

}  // namespace weyl
