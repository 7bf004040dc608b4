#pragma once

#include <cstdint>
#include <vector>

namespace weyl {

/// Finite field GF(q) given by complete lookup tables over element indices
/// 0..q-1, where 0 is zero and 1 is one. Immutable after construction.
class FieldSpec {
 public:
  using Elem = std::uint8_t;

  /// Builds GF(q) for q in {2,3,4,5,7}; the tables are checked exhaustively
  /// against the field axioms before returning.
  explicit FieldSpec(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return e_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  /// Multiplicative inverse; a must be nonzero.
  Elem inv(Elem a) const { return inv_[a]; }

  /// A generator of the multiplicative group.
  Elem primitive() const { return primitive_; }
  /// The Frobenius automorphism x -> x^p.
  Elem frobenius(Elem a) const { return frob_[a]; }

  static bool supported(int q);
  static const FieldSpec& get(int q);

  bool operator==(const FieldSpec& o) const { return q_ == o.q_; }

 private:
  void verify() const;

  int q_ = 0, p_ = 0, e_ = 0;
  Elem primitive_ = 1;
  std::vector<Elem> add_, mul_, neg_, inv_, frob_;
};

}  // namespace weyl
