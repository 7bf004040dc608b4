#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace weyl {

using BigInt = boost::multiprecision::cpp_int;

/// p[x] is the image of x. Products apply the left factor first.
using Perm = std::vector<std::uint32_t>;

Perm identity_perm(std::size_t n);
Perm compose(const Perm& first, const Perm& then);
Perm inverse(const Perm& p);
bool is_identity(const Perm& p);
/// Checks that p is a bijection of {0..n-1}.
bool is_perm(const Perm& p, std::size_t n);

/// Base and strong generating set built by Schreier-Sims.
struct StabChain {
  struct Level {
    std::uint32_t point = 0;
    std::vector<Perm> gens;  // strong generators fixing every earlier base point
    std::vector<std::uint32_t> orbit;
    std::vector<std::int32_t> slot;  // index into transversal per point, -1 outside the orbit
    std::vector<Perm> transversal;   // transversal[slot[y]] maps `point` to y
    std::vector<std::size_t> checked;  // per orbit position, generators already used for Schreier generators
  };
  std::size_t degree = 0;
  std::vector<Level> levels;

  BigInt order() const;
  std::vector<std::uint32_t> base() const;
  /// Residue of g after sifting from `from`; identity iff g lies in the level's group.
  Perm sift(Perm g, std::size_t from = 0) const;
  bool contains(const Perm& g) const { return is_identity(sift(g)); }
};

/// Deterministic Schreier-Sims. The base starts with `prefix` (points may be
/// repeated or fixed by everything; those give trivial levels).
StabChain schreier_sims(std::size_t degree, const std::vector<Perm>& gens,
                        const std::vector<std::uint32_t>& prefix = {});

class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Perm> gens);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const StabChain& chain() const;
  BigInt order() const { return chain().order(); }
  bool contains(const Perm& g) const { return chain().contains(g); }

  /// Generators of the pointwise stabilizer of `points`.
  std::vector<Perm> stabilizer(const std::vector<std::uint32_t>& points) const;
  /// Orbit representative (smallest point) for every point.
  std::vector<std::uint32_t> orbit_reps() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  mutable std::vector<StabChain> chain_;  // lazily built, at most one entry
};

BigInt group_order(const PermGroup& G);
/// Orbit representatives of the group generated by gens on {0..n-1}.
std::vector<std::uint32_t> orbit_reps(std::size_t n, const std::vector<Perm>& gens);

std::string to_string(const BigInt& x);

}  // namespace weyl
