#include "weyl/perm.hpp"

#include <numeric>

namespace weyl {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm compose(const Perm& first, const Perm& then) {
  Perm r(first.size());
  for (std::size_t x = 0; x < first.size(); ++x) r[x] = then[first[x]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<std::uint32_t>(x);
  return r;
}

bool is_identity(const Perm& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] != x) return false;
  return true;
}

bool is_perm(const Perm& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (auto y : p) {
    if (y >= n || seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

BigInt StabChain::order() const {
  BigInt r = 1;
  for (const auto& L : levels) r *= L.orbit.size();
  return r;
}

std::vector<std::uint32_t> StabChain::base() const {
  std::vector<std::uint32_t> b;
  for (const auto& L : levels) b.push_back(L.point);
  return b;
}

Perm StabChain::sift(Perm g, std::size_t from) const {
  for (std::size_t l = from; l < levels.size(); ++l) {
    const auto& L = levels[l];
    const auto s = L.slot[g[L.point]];
    if (s < 0) return g;
    g = compose(g, inverse(L.transversal[s]));
  }
  return g;
}

namespace {

using Level = StabChain::Level;

Level make_level(std::size_t n, std::uint32_t point) {
  Level L;
  L.point = point;
  L.slot.assign(n, -1);
  L.slot[point] = 0;
  L.orbit.push_back(point);
  L.transversal.push_back(identity_perm(n));
  L.checked.push_back(0);
  return L;
}

void extend_orbit(Level& L) {
  for (std::size_t idx = 0; idx < L.orbit.size(); ++idx) {
    const std::uint32_t x = L.orbit[idx];
    for (const auto& g : L.gens) {
      const std::uint32_t z = g[x];
      if (L.slot[z] >= 0) continue;
      L.slot[z] = static_cast<std::int32_t>(L.transversal.size());
      L.transversal.push_back(compose(L.transversal[L.slot[x]], g));
      L.orbit.push_back(z);
      L.checked.push_back(0);
    }
  }
}

bool fixes_all(const Perm& g, const std::vector<Level>& levels, std::size_t upto) {
  for (std::size_t l = 0; l < upto; ++l)
    if (g[levels[l].point] != levels[l].point) return false;
  return true;
}

std::uint32_t first_moved(const Perm& g) {
  for (std::size_t x = 0; x < g.size(); ++x)
    if (g[x] != x) return static_cast<std::uint32_t>(x);
  return 0;
}

}  // namespace

StabChain schreier_sims(std::size_t n, const std::vector<Perm>& gens, const std::vector<std::uint32_t>& prefix) {
  StabChain C;
  C.degree = n;
  auto& lv = C.levels;
  for (auto p : prefix) lv.push_back(make_level(n, p));

  std::vector<Perm> S;
  for (const auto& g : gens)
    if (!is_identity(g)) S.push_back(g);
  for (const auto& g : S)
    if (fixes_all(g, lv, lv.size())) lv.push_back(make_level(n, first_moved(g)));
  for (std::size_t l = 0; l < lv.size(); ++l) {
    for (const auto& g : S)
      if (fixes_all(g, lv, l)) lv[l].gens.push_back(g);
    extend_orbit(lv[l]);
  }

  auto strip = [&](Perm h, std::size_t from) -> std::pair<Perm, std::size_t> {
    for (std::size_t l = from; l < lv.size(); ++l) {
      const auto s = lv[l].slot[h[lv[l].point]];
      if (s < 0) return {h, l};
      h = compose(h, inverse(lv[l].transversal[s]));
    }
    return {h, lv.size()};
  };

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(lv.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    for (std::size_t pos = 0; pos < lv[i].orbit.size() && !restarted; ++pos) {
      while (lv[i].checked[pos] < lv[i].gens.size()) {
        const Perm s = lv[i].gens[lv[i].checked[pos]++];
        const std::uint32_t y = lv[i].orbit[pos];
        const Perm& uy = lv[i].transversal[lv[i].slot[y]];
        const Perm& uys = lv[i].transversal[lv[i].slot[s[y]]];
        Perm h = compose(compose(uy, s), inverse(uys));
        if (is_identity(h)) continue;
        auto [res, j] = strip(std::move(h), static_cast<std::size_t>(i) + 1);
        if (j == lv.size() && is_identity(res)) continue;
        if (j == lv.size()) lv.push_back(make_level(n, first_moved(res)));
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          lv[l].gens.push_back(res);
          extend_orbit(lv[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
  // drop trailing levels that carry no generators
  while (!lv.empty() && lv.back().orbit.size() == 1 && lv.back().gens.empty()) lv.pop_back();
  return C;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> gens) : degree_(degree), gens_(std::move(gens)) {}

const StabChain& PermGroup::chain() const {
  if (chain_.empty()) chain_.push_back(schreier_sims(degree_, gens_));
  return chain_.front();
}

std::vector<Perm> PermGroup::stabilizer(const std::vector<std::uint32_t>& points) const {
  StabChain C = schreier_sims(degree_, gens_, points);
  if (points.size() >= C.levels.size()) return {};
  return C.levels[points.size()].gens;
}

std::vector<std::uint32_t> PermGroup::orbit_reps() const { return weyl::orbit_reps(degree_, gens_); }

BigInt group_order(const PermGroup& G) { return G.order(); }

std::vector<std::uint32_t> orbit_reps(std::size_t n, const std::vector<Perm>& gens) {
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens)
    for (std::uint32_t x = 0; x < n; ++x) {
      std::uint32_t a = find(x), b = find(g[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::uint32_t> rep(n);
  for (std::uint32_t x = 0; x < n; ++x) rep[x] = find(x);
  return rep;
}

std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace weyl
