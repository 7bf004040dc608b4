#include "weyl/family.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <tuple>

#include "weyl/error.hpp"
#include "weyl/parallel.hpp"

namespace weyl {

namespace {

std::atomic<int> g_threads{1};
std::atomic<std::uint64_t> g_cap{20000};

std::uint64_t binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t c = 1;
  for (int t = 1; t <= r; ++t) c = c * (n - r + t) / t;
  return c;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

void set_threads(int n) { g_threads = std::max(1, n); }
int threads() { return g_threads; }
void set_vertex_cap(std::uint64_t cap) { g_cap = cap; }
std::uint64_t vertex_cap() { return g_cap; }

bool FamilySpec::valid() const {
  if (n < 2) return false;
  if (!thin() && !FieldSpec::supported(q)) return false;
  const int lo = std::min(i, j), hi = std::max(i, j);
  if (lo < (thin() ? 1 : 0) || hi > n - 1) return false;
  return k >= k_floor() && k <= lo;
}

void FamilySpec::validate() const {
  if (!valid()) throw Error(ErrorKind::InvalidSpec, to_string());
}

std::string FamilySpec::to_string() const {
  std::ostringstream os;
  if (thin())
    os << "thin";
  else
    os << "thick(" << q << ")";
  os << " n=" << n << " i=" << i << " j=" << j << " k=" << (mode == Mode::AtLeast ? ">=" : "") << k;
  return os.str();
}

std::string FamilySpec::metadata() const {
  std::ostringstream os;
  os << "geometry=" << (thin() ? "thin" : "thick(" + std::to_string(q) + ")") << " n=" << n
     << " i=" << i << " j=" << j << " k=" << k << " mode=" << (mode == Mode::Exact ? "exact" : "at-least");
  return os.str();
}

FamilySpec FamilySpec::from_metadata(const std::string& line) {
  FamilySpec s;
  std::istringstream is(line);
  std::string tok;
  int seen = 0;
  try {
    while (is >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) continue;
      std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "geometry") {
        if (val == "thin") {
          s.geometry = Geometry::Thin;
        } else if (val.rfind("thick(", 0) == 0 && val.back() == ')') {
          s.geometry = Geometry::Thick;
          s.q = std::stoi(val.substr(6, val.size() - 7));
        } else {
          throw Error(ErrorKind::ParseError, "bad geometry '" + val + "'");
        }
      } else if (key == "n") {
        s.n = std::stoi(val);
      } else if (key == "i") {
        s.i = std::stoi(val);
      } else if (key == "j") {
        s.j = std::stoi(val);
      } else if (key == "k") {
        s.k = std::stoi(val);
      } else if (key == "mode") {
        if (val == "exact")
          s.mode = Mode::Exact;
        else if (val == "at-least")
          s.mode = Mode::AtLeast;
        else
          throw Error(ErrorKind::ParseError, "bad mode '" + val + "'");
      } else {
        continue;
      }
      ++seen;
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "bad metadata '" + line + "'");
  }
  if (seen < 6) throw Error(ErrorKind::ParseError, "incomplete metadata '" + line + "'");
  return s;
}

bool FamilySpec::operator==(const FamilySpec& o) const {
  return geometry == o.geometry && (thin() || q == o.q) && n == o.n && i == o.i && j == o.j &&
         k == o.k && mode == o.mode;
}

bool FamilySpec::operator<(const FamilySpec& o) const {
  auto key = [](const FamilySpec& s) {
    return std::make_tuple(s.geometry, s.thin() ? 0 : s.q, s.n, s.i, s.j, s.k, s.mode);
  };
  return key(*this) < key(o);
}

FamilySpec thick(int q, int n, int i, int j, int k, Mode mode) {
  return FamilySpec{Geometry::Thick, q, n, i, j, k, mode};
}

FamilySpec thin(int n, int i, int j, int k, Mode mode) {
  return FamilySpec{Geometry::Thin, 0, n, i, j, k, mode};
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t c = 0;
  for (const auto& r : rows_) c += r.count();
  return c / 2;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph H(size());
  for (std::size_t u = 0; u < size(); ++u) {
    H.rows_[u] = ~rows_[u];
    H.rows_[u].reset(u);
  }
  return H;
}

BiGraph::BiGraph(std::size_t na, std::size_t nb) : rows_(na, Bitset(nb)), cols_(nb, Bitset(na)) {}

BiGraph::BiGraph(std::vector<Bitset> rows, std::size_t nb) : rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.size() != nb) throw Error(ErrorKind::DimensionMismatch, "ragged adjacency rows");
  cols_.assign(nb, Bitset(rows_.size()));
  transpose();
}

void BiGraph::transpose() {
  for (std::size_t a = 0; a < rows_.size(); ++a) rows_[a].for_each([&](std::size_t b) { cols_[b].set(a); });
}

std::size_t BiGraph::edge_count() const {
  std::size_t c = 0;
  for (const auto& r : rows_) c += r.count();
  return c;
}

std::optional<std::size_t> BiGraph::valence(Side s) const {
  const auto& rs = rows(s);
  if (rs.empty()) return std::nullopt;
  std::size_t d = rs[0].count();
  for (const auto& r : rs)
    if (r.count() != d) return std::nullopt;
  return d;
}

std::vector<std::uint32_t> enumerate_subsets(int n, int r) {
  std::vector<std::uint32_t> out;
  if (r < 0 || r > n) return out;
  std::vector<int> el(r);
  for (int t = 0; t < r; ++t) el[t] = t;
  while (true) {
    std::uint32_t m = 0;
    for (int e : el) m |= 1u << e;
    out.push_back(m);
    int t = r - 1;
    while (t >= 0 && el[t] == n - r + t) --t;
    if (t < 0) break;
    ++el[t];
    for (int s = t + 1; s < r; ++s) el[s] = el[s - 1] + 1;
  }
  return out;
}

std::uint64_t part_size(const FamilySpec& spec, int d) {
  return spec.thin() ? binom(spec.n, d) : gaussian_binomial(spec.n + 1, d + 1, spec.q);
}

std::uint64_t valence_formula(const FamilySpec& spec, int d1, int d2) {
  auto exact = [&](int k) -> std::uint64_t {
    if (spec.thin()) return binom(d1, k) * binom(spec.n - d1, d2 - k);
    if (k < -1 || k > std::min(d1, d2)) return 0;
    return gaussian_binomial(d1 + 1, k + 1, spec.q) * ipow(spec.q, (d1 - k) * (d2 - k)) *
           gaussian_binomial(spec.n - d1, d2 - k, spec.q);
  };
  if (spec.mode == Mode::Exact) return exact(spec.k);
  std::uint64_t s = 0;
  for (int k = spec.k; k <= std::min(d1, d2); ++k) s += exact(k);
  return s;
}

namespace {

bool accepts(const FamilySpec& spec, int d) {
  return spec.mode == Mode::Exact ? d == spec.k : d >= spec.k;
}

void check_cap(const FamilySpec& spec, int d) {
  if (part_size(spec, d) > vertex_cap())
    throw Error(ErrorKind::TooLarge, std::to_string(part_size(spec, d)) + " vertices exceed cap " +
                                         std::to_string(vertex_cap()));
}

}  // namespace

Family build_family(const FamilySpec& spec) {
  spec.validate();
  check_cap(spec, spec.i);
  check_cap(spec, spec.j);
  Family fam;
  fam.spec = spec;
  std::vector<Bitset> rows;

  if (spec.thin()) {
    fam.thin_a = enumerate_subsets(spec.n, spec.i);
    fam.thin_b = enumerate_subsets(spec.n, spec.j);
    rows.assign(fam.thin_a.size(), Bitset(fam.thin_b.size()));
    parallel_for(fam.thin_a.size(), [&](std::size_t a) {
      for (std::size_t b = 0; b < fam.thin_b.size(); ++b)
        if (accepts(spec, std::popcount(fam.thin_a[a] & fam.thin_b[b]))) rows[a].set(b);
    });
  } else {
    const FieldSpec& F = FieldSpec::get(spec.q);
    const auto cap = vertex_cap();
    fam.thick_a = enumerate_subspaces(spec.n, spec.i, F, cap);
    fam.thick_b = enumerate_subspaces(spec.n, spec.j, F, cap);
    auto table = PointTable::get(spec.n, F);
    std::vector<Bitset> pa, pb;
    for (const auto& U : fam.thick_a) pa.push_back(table->point_set(U));
    for (const auto& U : fam.thick_b) pb.push_back(table->point_set(U));
    std::vector<int> dim_of(table->size() + 1);
    for (std::size_t c = 0; c <= table->size(); ++c) dim_of[c] = table->pdim_from_count(c);
    rows.assign(pa.size(), Bitset(pb.size()));
    parallel_for(pa.size(), [&](std::size_t a) {
      for (std::size_t b = 0; b < pb.size(); ++b)
        if (accepts(spec, dim_of[pa[a].intersect_count(pb[b])])) rows[a].set(b);
    });
  }
  const std::size_t nb = spec.thin() ? fam.thin_b.size() : fam.thick_b.size();
  fam.graph = BiGraph(std::move(rows), nb);
  return fam;
}

BiGraph build_bigraph(const FamilySpec& spec) { return build_family(spec).graph; }

SimpleGraph build_simple(const FamilySpec& spec) {
  FamilySpec s = spec;
  s.i = s.j;
  BiGraph G = build_bigraph(s);
  SimpleGraph H(G.size_a());
  for (std::size_t a = 0; a < G.size_a(); ++a)
    G.nbrs(Side::A, a).for_each([&](std::size_t b) {
      if (b != a) H.add_edge(a, b);
    });
  return H;
}

BiGraph bipartite_complement(const BiGraph& G) {
  std::vector<Bitset> rows;
  rows.reserve(G.size_a());
  for (const auto& r : G.rows(Side::A)) rows.push_back(~r);
  return BiGraph(std::move(rows), G.size_b());
}

BiGraph bipartite_double(const SimpleGraph& G, bool extended) {
  std::vector<Bitset> rows;
  for (std::size_t u = 0; u < G.size(); ++u) {
    Bitset r = G.nbrs(u);
    if (extended) r.set(u);
    rows.push_back(std::move(r));
  }
  return BiGraph(std::move(rows), G.size());
}

const char* to_string(TrivialKind kind) {
  switch (kind) {
    case TrivialKind::Empty: return "Empty";
    case TrivialKind::CompleteBipartite: return "CompleteBipartite";
    case TrivialKind::Matching: return "Matching";
    case TrivialKind::ComplementOfMatching: return "ComplementOfMatching";
    case TrivialKind::Nontrivial: return "Nontrivial";
  }
  return "Unknown";
}

namespace {

bool is_matching(const BiGraph& G, bool complemented) {
  if (G.size_a() != G.size_b()) return false;
  const std::size_t n = G.size_a();
  for (Side s : {Side::A, Side::B})
    for (std::size_t v = 0; v < n; ++v)
      if (G.nbrs(s, v).count() != (complemented ? n - 1 : 1)) return false;
  return true;
}

}  // namespace

std::set<TrivialKind> trivial_shapes(const BiGraph& G) {
  std::set<TrivialKind> out;
  const std::size_t e = G.edge_count();
  if (e == 0) out.insert(TrivialKind::Empty);
  if (e == G.size_a() * G.size_b()) out.insert(TrivialKind::CompleteBipartite);
  if (is_matching(G, false)) out.insert(TrivialKind::Matching);
  if (is_matching(G, true)) out.insert(TrivialKind::ComplementOfMatching);
  return out;
}

TrivialKind classify_trivial(const BiGraph& G) {
  const std::size_t e = G.edge_count();
  if (e == 0) return TrivialKind::Empty;
  if (e == G.size_a() * G.size_b()) return TrivialKind::CompleteBipartite;
  if (is_matching(G, false)) return TrivialKind::Matching;
  if (is_matching(G, true)) return TrivialKind::ComplementOfMatching;
  return TrivialKind::Nontrivial;
}

namespace {

TrivialKind complement_kind(TrivialKind t) {
  switch (t) {
    case TrivialKind::Empty: return TrivialKind::CompleteBipartite;
    case TrivialKind::CompleteBipartite: return TrivialKind::Empty;
    case TrivialKind::Matching: return TrivialKind::ComplementOfMatching;
    case TrivialKind::ComplementOfMatching: return TrivialKind::Matching;
    default: return t;
  }
}

using Visited = std::set<FamilySpec>;

std::set<TrivialKind> predict(FamilySpec s, Visited& seen) {
  if (s.i > s.j) std::swap(s.i, s.j);
  std::set<TrivialKind> out;
  if (!s.valid() || !seen.insert(s).second) return out;
  const int n = s.n, i = s.i, j = s.j, k = s.k;
  auto merge = [&](const std::set<TrivialKind>& other, bool complemented) {
    for (auto t : other) out.insert(complemented ? complement_kind(t) : t);
  };

  if (s.mode == Mode::AtLeast) {
    if (n + k <= i + j || k == s.k_floor()) out.insert(TrivialKind::CompleteBipartite);
    if (i == k) {
      FamilySpec e = s;
      e.mode = Mode::Exact;
      merge(predict(e, seen), false);
    }
    if (k == i + j + 1 - n && k - 1 >= s.k_floor()) {
      FamilySpec e = s;
      e.mode = Mode::Exact;
      e.k = k - 1;
      merge(predict(e, seen), true);
    }
    if (s.thin()) {
      merge(predict(thin(n, i, n - j, i - k + 1, Mode::AtLeast), seen), true);
      merge(predict(thin(n, n - i, j, j - k + 1, Mode::AtLeast), seen), true);
    } else {
      merge(predict(thick(s.q, n, n - 1 - j, n - 1 - i, n - 1 + k - i - j, Mode::AtLeast), seen), false);
    }
    return out;
  }

  if (s.thin()) {
    if (i == j && j == k && k >= 1) out.insert(TrivialKind::Matching);
    if (i + j == n && k == 0) out.insert(TrivialKind::Matching);
    if (i == j && ((j == n - 1 && k + 1 == j) || (j == 1 && k == 0)))
      out.insert(TrivialKind::ComplementOfMatching);
    if (n + k < i + j) out.insert(TrivialKind::Empty);
    merge(predict(thin(n, i, n - j, i - k), seen), false);
    merge(predict(thin(n, n - i, j, j - k), seen), false);
  } else {
    if (i == j && j == k && k >= 0) out.insert(TrivialKind::Matching);
    if (i == j && ((j == n - 1 && k + 1 == j) || (j == 0 && k == -1)))
      out.insert(TrivialKind::ComplementOfMatching);
    if (n + k < i + j) out.insert(TrivialKind::Empty);
    merge(predict(thick(s.q, n, n - 1 - j, n - 1 - i, n - 1 + k - i - j), seen), false);
  }
  return out;
}

}  // namespace

std::set<TrivialKind> predicted_trivial(const FamilySpec& spec) {
  Visited seen;
  return predict(spec, seen);
}

bool twin_free(const BiGraph& G) {
  for (Side s : {Side::A, Side::B}) {
    std::vector<Bitset> rs = G.rows(s);
    std::sort(rs.begin(), rs.end());
    if (std::adjacent_find(rs.begin(), rs.end()) != rs.end()) return false;
  }
  return true;
}

std::size_t distinguishing_neighbors(const BiGraph& G, Side side, std::size_t v1, std::size_t v2) {
  if (v1 == v2) throw Error(ErrorKind::PreconditionViolation, "distinct vertices required");
  const Bitset& a = G.nbrs(side, v1);
  return a.count() - a.intersect_count(G.nbrs(side, v2));
}

}  // namespace weyl
