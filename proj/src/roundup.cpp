#include "weyl/roundup.hpp"

#include <algorithm>
#include <unordered_set>

#include "weyl/error.hpp"

namespace weyl {

namespace {

template <std::size_t N>
void require_distinct(const std::array<std::size_t, N>& v, std::size_t bound) {
  for (std::size_t a = 0; a < N; ++a) {
    if (v[a] >= bound) throw Error(ErrorKind::PreconditionViolation, "vertex index out of range");
    for (std::size_t b = a + 1; b < N; ++b)
      if (v[a] == v[b]) throw Error(ErrorKind::PreconditionViolation, "vertices must be distinct");
  }
}

std::optional<std::size_t> first_of(const Bitset& b) {
  std::size_t f = b.first();
  if (f == b.size()) return std::nullopt;
  return f;
}

}  // namespace

TripleVerdict triple_verdict(const BiGraph& G, Side side, const std::array<std::size_t, 3>& v) {
  require_distinct(v, G.size(side));
  const Bitset &a = G.nbrs(side, v[0]), &b = G.nbrs(side, v[1]), &c = G.nbrs(side, v[2]);
  Bitset ab = a & b;
  Bitset all = ab & c;
  Bitset two = ab;
  two.and_not(c);
  Bitset ac = a & c;
  ac.and_not(b);
  Bitset bc = b & c;
  bc.and_not(a);
  two |= ac;
  two |= bc;

  TripleVerdict out;
  out.witness_common = first_of(all);
  out.violator = first_of(two);
  out.is_roundup = out.witness_common && !out.violator;
  return out;
}

QuadVerdict quad_verdict(const BiGraph& G, Side side, const std::array<std::size_t, 4>& v) {
  require_distinct(v, G.size(side));
  // bit-sliced counter of how many of the four neighbourhoods contain each vertex
  const std::size_t m = G.size(other(side));
  Bitset s0(m), s1(m), s2(m);
  for (std::size_t t = 0; t < 4; ++t) {
    const Bitset& x = G.nbrs(side, v[t]);
    Bitset c0 = s0 & x;
    s0 ^= x;
    Bitset c1 = s1 & c0;
    s1 ^= c0;
    s2 |= c1;
  }
  Bitset two = s1;
  two.and_not(s0);
  two.and_not(s2);
  Bitset three = (s0 & s1) | s2;

  QuadVerdict out;
  out.witness = first_of(three);
  out.violator = first_of(two);
  out.is_roundup = out.witness && !out.violator;
  return out;
}

bool is_regular_triple(const Subspace& a, const Subspace& b, const Subspace& c) {
  const int j = a.pdim();
  if (b.pdim() != j || c.pdim() != j) throw Error(ErrorKind::DimensionMismatch, "triple of unequal dimensions");
  if (a == b || a == c || b == c) return false;
  return meet(meet(a, b), c).pdim() == j - 1 && join(join(a, b), c).pdim() == j + 1;
}

bool is_regular_quad(const Subspace& a, const Subspace& b, const Subspace& c, const Subspace& d) {
  const int j = a.pdim();
  if (b.pdim() != j || c.pdim() != j || d.pdim() != j)
    throw Error(ErrorKind::DimensionMismatch, "quadruple of unequal dimensions");
  const Subspace* s[4] = {&a, &b, &c, &d};
  for (int x = 0; x < 4; ++x)
    for (int y = x + 1; y < 4; ++y)
      if (*s[x] == *s[y]) return false;
  return meet(meet(a, b), meet(c, d)).pdim() == j - 1 && join(join(a, b), join(c, d)).pdim() == j + 1;
}

bool satisfies_min(const BiGraph& G, Side side, std::size_t v) {
  const Bitset& nv = G.nbrs(side, v);
  std::vector<Bitset> fam;
  for (std::size_t w = 0; w < G.size(side); ++w) {
    if (w == v) continue;
    Bitset x = nv & G.nbrs(side, w);
    if (x.any()) fam.push_back(std::move(x));
  }
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  const std::size_t f = fam.size();
  if (f == 0) return false;

  std::unordered_set<Bitset, BitsetHash> members(fam.begin(), fam.end());
  std::vector<std::size_t> card(f);
  for (std::size_t x = 0; x < f; ++x) card[x] = fam[x].count();
  // down[x]: members contained in fam[x], including x itself
  std::vector<Bitset> down(f, Bitset(f));
  std::vector<bool> maximal(f, true);
  for (std::size_t x = 0; x < f; ++x)
    for (std::size_t y = 0; y < f; ++y)
      if (card[y] <= card[x] && fam[y].subset_of(fam[x])) {
        down[x].set(y);
        if (x != y) maximal[y] = false;
      }

  // greatest element of the common down-set, if there is one
  auto glb = [&](const Bitset& lb) -> std::optional<std::size_t> {
    std::size_t best = f;
    lb.for_each([&](std::size_t z) {
      if (best == f || card[z] > card[best]) best = z;
    });
    if (best == f || down[best] != lb) return std::nullopt;
    return best;
  };

  for (std::size_t x = 0; x < f; ++x)
    for (std::size_t y = x + 1; y < f; ++y) {
      Bitset lb = down[x] & down[y];
      if (members.count(fam[x] & fam[y])) continue;
      auto g = glb(lb);
      if (g) return false;  // a glb exists but is not the intersection
      if (maximal[x] && maximal[y]) return false;
    }
  return true;
}

bool every_vertex_is_pair_intersection(const BiGraph& G) {
  for (Side s : {Side::A, Side::B}) {
    const Side o = other(s);
    for (std::size_t u = 0; u < G.size(s); ++u) {
      auto nb = G.nbrs(s, u).indices();
      bool found = false;
      for (std::size_t x = 0; x < nb.size() && !found; ++x)
        for (std::size_t y = x + 1; y < nb.size() && !found; ++y)
          found = G.nbrs(o, nb[x]).intersect_count(G.nbrs(o, nb[y])) == 1;
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace weyl
