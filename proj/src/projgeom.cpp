#include "weyl/projgeom.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "weyl/error.hpp"

namespace weyl {

namespace {

void check_same(const Subspace& U, const Subspace& V) {
  if (U.ambient() != V.ambient() || U.q() != V.q())
    throw Error(ErrorKind::AmbientMismatch, "PG(" + std::to_string(U.ambient()) + "," +
                                                std::to_string(U.q()) + ") vs PG(" +
                                                std::to_string(V.ambient()) + "," +
                                                std::to_string(V.q()) + ")");
}

std::vector<Vec> rows_of(const Subspace& U) {
  std::vector<Vec> out;
  out.reserve(U.rank());
  for (int r = 0; r < U.rank(); ++r) out.push_back(U.row(r));
  return out;
}

}  // namespace

Vec Subspace::row(int r) const {
  return Vec(data_.begin() + r * (n_ + 1), data_.begin() + (r + 1) * (n_ + 1));
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> piv;
  piv.reserve(rank_);
  for (int r = 0; r < rank_; ++r) {
    int c = 0;
    while (at(r, c) == 0) ++c;
    piv.push_back(c);
  }
  return piv;
}

bool Subspace::operator<(const Subspace& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  if (q_ != o.q_) return q_ < o.q_;
  if (rank_ != o.rank_) return rank_ < o.rank_;
  return data_ < o.data_;
}

std::size_t Subspace::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ (std::uint64_t(rank_) << 8) ^ n_;
  for (auto e : data_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Subspace canonicalize(int n, const FieldSpec& F, std::vector<Vec> rows) {
  const int m = n + 1;
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != m)
      throw Error(ErrorKind::DimensionMismatch,
                  "row of length " + std::to_string(r.size()) + ", expected " + std::to_string(m));

  int rank = 0;
  for (int c = 0; c < m && rank < static_cast<int>(rows.size()); ++c) {
    int p = rank;
    while (p < static_cast<int>(rows.size()) && rows[p][c] == 0) ++p;
    if (p == static_cast<int>(rows.size())) continue;
    std::swap(rows[rank], rows[p]);
    Elem s = F.inv(rows[rank][c]);
    for (auto& e : rows[rank]) e = F.mul(e, s);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Elem f = rows[r][c];
      for (int t = c; t < m; ++t) rows[r][t] = F.sub(rows[r][t], F.mul(f, rows[rank][t]));
    }
    ++rank;
  }

  Subspace U;
  U.n_ = n;
  U.q_ = F.order();
  U.rank_ = rank;
  U.data_.reserve(rank * m);
  for (int r = 0; r < rank; ++r) U.data_.insert(U.data_.end(), rows[r].begin(), rows[r].end());
  return U;
}

Subspace empty_subspace(int n, const FieldSpec& F) { return canonicalize(n, F, {}); }

Subspace whole_space(int n, const FieldSpec& F) {
  std::vector<Vec> rows(n + 1, Vec(n + 1, 0));
  for (int r = 0; r <= n; ++r) rows[r][r] = 1;
  return canonicalize(n, F, std::move(rows));
}

std::uint64_t gaussian_binomial(int m, int r, int q) {
  if (r < 0 || r > m) return 0;
  // Product formula evaluated with 128-bit intermediates; exact division at each step.
  unsigned __int128 num = 1;
  const unsigned __int128 limit = std::numeric_limits<std::uint64_t>::max();
  for (int t = 0; t < r; ++t) {
    unsigned __int128 a = 1, b = 1;
    for (int s = 0; s < m - t; ++s) a *= q;
    for (int s = 0; s < t + 1; ++s) b *= q;
    num = num * (a - 1);
    num /= (b - 1);
    if (num > limit) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(num);
}

std::uint64_t point_count(int d, int q) { return gaussian_binomial(d + 1, 1, q); }

std::vector<Subspace> enumerate_subspaces(int n, int d, const FieldSpec& F, std::uint64_t cap) {
  if (d < -1 || d > n)
    throw Error(ErrorKind::PreconditionViolation, "dimension " + std::to_string(d) + " outside [-1," +
                                                      std::to_string(n) + "]");
  const int q = F.order();
  const std::uint64_t total = gaussian_binomial(n + 1, d + 1, q);
  if (total > cap)
    throw Error(ErrorKind::TooLarge, std::to_string(total) + " subspaces exceed cap " + std::to_string(cap));

  const int m = n + 1, r = d + 1;
  std::vector<Subspace> out;
  out.reserve(total);
  std::vector<int> piv(r);
  for (int t = 0; t < r; ++t) piv[t] = t;

  while (true) {
    // free positions (row, col) right of the row's pivot and not a pivot column
    std::vector<std::pair<int, int>> free;
    std::vector<bool> is_piv(m, false);
    for (int c : piv) is_piv[c] = true;
    for (int row = 0; row < r; ++row)
      for (int c = piv[row] + 1; c < m; ++c)
        if (!is_piv[c]) free.emplace_back(row, c);

    std::vector<Elem> vals(free.size(), 0);
    while (true) {
      std::vector<Vec> rows(r, Vec(m, 0));
      for (int row = 0; row < r; ++row) rows[row][piv[row]] = 1;
      for (std::size_t f = 0; f < free.size(); ++f) rows[free[f].first][free[f].second] = vals[f];
      out.push_back(canonicalize(n, F, std::move(rows)));
      std::size_t f = 0;
      while (f < vals.size() && ++vals[f] == q) vals[f++] = 0;
      if (f == vals.size()) break;
    }

    int t = r - 1;
    while (t >= 0 && piv[t] == m - r + t) --t;
    if (t < 0) break;
    ++piv[t];
    for (int s = t + 1; s < r; ++s) piv[s] = piv[s - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subspace join(const Subspace& U, const Subspace& V) {
  check_same(U, V);
  auto rows = rows_of(U);
  for (int r = 0; r < V.rank(); ++r) rows.push_back(V.row(r));
  return canonicalize(U.ambient(), FieldSpec::get(U.q()), std::move(rows));
}

Subspace dual_complement(const Subspace& U) {
  const FieldSpec& F = FieldSpec::get(U.q());
  const int m = U.cols();
  auto piv = U.pivots();
  std::vector<bool> is_piv(m, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<Vec> rows;
  for (int f = 0; f < m; ++f) {
    if (is_piv[f]) continue;
    Vec v(m, 0);
    v[f] = 1;
    for (int r = 0; r < U.rank(); ++r) v[piv[r]] = F.neg(U.at(r, f));
    rows.push_back(std::move(v));
  }
  return canonicalize(U.ambient(), F, std::move(rows));
}

Subspace meet(const Subspace& U, const Subspace& V) {
  check_same(U, V);
  return dual_complement(join(dual_complement(U), dual_complement(V)));
}

bool contains(const Subspace& big, const Subspace& small) {
  check_same(big, small);
  return join(big, small).rank() == big.rank();
}

bool contains_vector(const Subspace& U, const Vec& v) {
  const FieldSpec& F = FieldSpec::get(U.q());
  Vec w = v;
  auto piv = U.pivots();
  for (int r = 0; r < U.rank(); ++r) {
    Elem f = w[piv[r]];
    if (f == 0) continue;
    for (int c = 0; c < U.cols(); ++c) w[c] = F.sub(w[c], F.mul(f, U.at(r, c)));
  }
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

Residue::Residue(Subspace K) : K_(std::move(K)) {
  pivots_ = K_.pivots();
  std::vector<bool> is_piv(K_.cols(), false);
  for (int c : pivots_) is_piv[c] = true;
  for (int c = 0; c < K_.cols(); ++c)
    if (!is_piv[c]) free_.push_back(c);
}

Vec Residue::reduce(Vec v) const {
  const FieldSpec& F = FieldSpec::get(K_.q());
  for (int r = 0; r < K_.rank(); ++r) {
    Elem f = v[pivots_[r]];
    if (f == 0) continue;
    for (int c = 0; c < K_.cols(); ++c) v[c] = F.sub(v[c], F.mul(f, K_.at(r, c)));
  }
  Vec out(free_.size());
  for (std::size_t t = 0; t < free_.size(); ++t) out[t] = v[free_[t]];
  return out;
}

Subspace Residue::project(const Subspace& W) const {
  if (!contains(W, K_)) throw Error(ErrorKind::NotContaining, "base of residue is not contained in W");
  std::vector<Vec> rows;
  for (int r = 0; r < W.rank(); ++r) rows.push_back(reduce(W.row(r)));
  return canonicalize(dim(), FieldSpec::get(K_.q()), std::move(rows));
}

Subspace Residue::lift(const Subspace& Wp) const {
  if (Wp.ambient() != dim() || Wp.q() != K_.q())
    throw Error(ErrorKind::AmbientMismatch, "subspace is not in this residue");
  auto rows = rows_of(K_);
  for (int r = 0; r < Wp.rank(); ++r) {
    Vec v(K_.cols(), 0);
    for (std::size_t t = 0; t < free_.size(); ++t) v[free_[t]] = Wp.at(r, static_cast<int>(t));
    rows.push_back(std::move(v));
  }
  return canonicalize(K_.ambient(), FieldSpec::get(K_.q()), std::move(rows));
}

namespace {

// Within the lemma's bounds the first free point always extends; backtracking
// only matters for the relaxed b = 0 inputs.
std::optional<Subspace> disjoint_rec(const std::vector<Subspace>& avoid, int target, const FieldSpec& F) {
  const int a = avoid.front().ambient();
  auto table = PointTable::get(a, F);
  Bitset covered(table->size());
  for (const auto& X : avoid) covered |= table->point_set(X);
  Bitset free = ~covered;
  for (std::size_t p = free.first(); p < table->size(); p = free.next(p + 1)) {
    Subspace x = canonicalize(a, F, {table->point(p)});
    if (target == 0) return x;
    Residue R(x);
    std::vector<Subspace> next;
    for (const auto& X : avoid) next.push_back(R.project(join(X, x)));
    if (auto C = disjoint_rec(next, target - 1, F)) return R.lift(*C);
  }
  return std::nullopt;
}

}  // namespace

Subspace find_disjoint_space(const Subspace& B, const Subspace& B1, const Subspace& B2,
                             const Subspace& B3) {
  check_same(B, B1);
  check_same(B, B2);
  check_same(B, B3);
  const int a = B.ambient(), b = B.pdim();
  // For b = 0 points are accepted for B1 and B2: the union bound still leaves a free point.
  const int lim12 = std::max(b - 1, 0), lim3 = b == 0 ? -1 : b - 2;
  if (a < 2 || b < 0 || b >= a || B1.pdim() > lim12 || B2.pdim() > lim12 || B3.pdim() > lim3)
    throw Error(ErrorKind::PreconditionViolation, "dimension bounds violated");
  const FieldSpec& F = FieldSpec::get(B.q());
  auto found = disjoint_rec({B, B1, B2, B3}, a - b - 1, F);
  if (!found) throw Error(ErrorKind::PreconditionViolation, "no disjoint subspace exists");
  Subspace C = *found;
  for (const Subspace* X : {&B, &B1, &B2, &B3})
    if (meet(C, *X).rank() != 0) throw Error(ErrorKind::PreconditionViolation, "construction failed");
  return C;
}

PointTable::PointTable(int n, const FieldSpec& F) : n_(n), F_(&F) {
  const int q = F.order(), m = n + 1;
  std::size_t codes = 1;
  for (int t = 0; t < m; ++t) codes *= q;
  code_to_index_.assign(codes, std::numeric_limits<std::uint32_t>::max());
  for (int lead = 0; lead < m; ++lead) {
    Vec v(m, 0);
    v[lead] = 1;
    std::size_t tail = 1;
    for (int t = lead + 1; t < m; ++t) tail *= q;
    for (std::size_t c = 0; c < tail; ++c) {
      std::size_t x = c;
      for (int t = m - 1; t > lead; --t) {
        v[t] = static_cast<Elem>(x % q);
        x /= q;
      }
      points_.push_back(v);
    }
  }
  std::sort(points_.begin(), points_.end());
  for (std::size_t idx = 0; idx < points_.size(); ++idx) {
    std::size_t code = 0;
    for (auto e : points_[idx]) code = code * q + e;
    code_to_index_[code] = static_cast<std::uint32_t>(idx);
  }
}

std::size_t PointTable::index_of(const Vec& v) const {
  const int q = F_->order();
  int lead = 0;
  while (lead <= n_ && v[lead] == 0) ++lead;
  if (lead > n_) throw Error(ErrorKind::PreconditionViolation, "zero vector is not a point");
  Elem s = F_->inv(v[lead]);
  std::size_t code = 0;
  for (auto e : v) code = code * q + F_->mul(e, s);
  return code_to_index_[code];
}

Bitset PointTable::point_set(const Subspace& U) const {
  Bitset out(points_.size());
  const int r = U.rank(), q = F_->order(), m = n_ + 1;
  if (r == 0) return out;
  std::vector<std::size_t> pow(m, 1);
  for (int t = m - 2; t >= 0; --t) pow[t] = pow[t + 1] * q;
  // Each point is a combination whose first nonzero coefficient is 1.
  for (int first = 0; first < r; ++first) {
    std::vector<Elem> lam(r - first - 1, 0);
    while (true) {
      std::size_t code = 0;
      for (int c = 0; c < m; ++c) {
        Elem e = U.at(first, c);
        for (int t = first + 1; t < r; ++t) e = F_->add(e, F_->mul(lam[t - first - 1], U.at(t, c)));
        code += e * pow[c];
      }
      out.set(code_to_index_[code]);
      std::size_t f = 0;
      while (f < lam.size() && ++lam[f] == q) lam[f++] = 0;
      if (f == lam.size()) break;
    }
  }
  return out;
}

int PointTable::pdim_from_count(std::size_t count) const {
  int d = -1;
  while (point_count(d, F_->order()) < count) ++d;
  return d;
}

std::shared_ptr<const PointTable> PointTable::get(int n, const FieldSpec& F) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const PointTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, F.order()}];
  if (!slot) slot = std::make_shared<PointTable>(n, F);
  return slot;
}

}  // namespace weyl
