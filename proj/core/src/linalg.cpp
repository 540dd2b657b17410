#include "modrep/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "modrep/errors.hpp"

namespace modrep {

namespace {

// A generator can re-enter the touched list after its coefficient cancels.
void dedup(std::vector<std::uint32_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::size_t common_dim(const std::vector<SparseVec>& vs, std::size_t fallback) {
  std::size_t d = vs.empty() ? fallback : vs.front().dim;
  for (const auto& v : vs)
    if (v.dim != d) throw ShapeError("vectors of different dimensions");
  return d;
}

}  // namespace

Echelon::Echelon(const Field& f, std::size_t dim, bool track)
    : f_(&f), dim_(dim), track_(track), pivot_row_(dim, -1) {}

SparseVec Echelon::reduce_impl(const SparseVec& v, std::vector<Field::code>* combo_dense,
                               std::vector<std::uint32_t>* combo_touched) const {
  if (v.dim != dim_) throw ShapeError("echelon dimension mismatch");
  if (v.field != f_) throw ContextMismatch("echelon field mismatch");
  SparseVec out(*f_, dim_);
  if (v.entries.empty()) return out;

  // Fast path: no entry of v hits a pivot.
  bool hits = false;
  for (const auto& e : v.entries)
    if (pivot_row_[e.first] >= 0) {
      hits = true;
      break;
    }
  if (!hits) return v;

  std::vector<Field::code> w(dim_, 0);
  std::vector<char> queued(dim_, 0);
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
  for (const auto& [i, c] : v.entries) {
    w[i] = c;
    queued[i] = 1;
    heap.push(i);
  }
  while (!heap.empty()) {
    std::uint32_t i = heap.top();
    heap.pop();
    Field::code c = w[i];
    if (c == 0) continue;
    std::int32_t r = pivot_row_[i];
    if (r < 0) {
      out.entries.emplace_back(i, c);
      continue;
    }
    Field::code neg = f_->neg(c);
    for (const auto& [j, d] : rows_[r].entries) {
      w[j] = f_->axpy(w[j], neg, d);
      if (!queued[j]) {
        queued[j] = 1;
        heap.push(j);
      }
    }
    if (combo_dense) {
      for (const auto& [g, d] : combos_[r].entries) {
        if ((*combo_dense)[g] == 0) combo_touched->push_back(g);
        (*combo_dense)[g] = f_->axpy((*combo_dense)[g], c, d);
      }
    }
  }
  return out;
}

SparseVec Echelon::reduce(const SparseVec& v, SparseVec* combo) const {
  if (!combo) return reduce_impl(v, nullptr, nullptr);
  if (!track_) throw ShapeError("combination requested from an untracked echelon");
  std::vector<Field::code> dense(ngen_, 0);
  std::vector<std::uint32_t> touched;
  SparseVec rem = reduce_impl(v, &dense, &touched);
  dedup(touched);
  std::vector<SparseVec::Entry> pairs;
  for (auto g : touched)
    if (dense[g]) pairs.emplace_back(g, dense[g]);
  *combo = SparseVec::from_pairs(*f_, ngen_, std::move(pairs));
  return rem;
}

bool Echelon::insert(const SparseVec& v) {
  const std::size_t gen = ngen_++;
  if (track_)
    for (auto& c : combos_) c.dim = ngen_;
  if (!track_) {
    SparseVec rem = reduce_impl(v, nullptr, nullptr);
    if (rem.is_zero()) return false;
    Field::code lead_inv = f_->inv(rem.entries.front().second);
    pivot_row_[rem.entries.front().first] = std::int32_t(rows_.size());
    rows_.push_back(rem.scaled(lead_inv));
    return true;
  }
  std::vector<Field::code> dense(ngen_, 0);
  std::vector<std::uint32_t> touched;
  SparseVec rem = reduce_impl(v, &dense, &touched);
  if (rem.is_zero()) return false;
  dedup(touched);
  // row = (gen - sum dense_j gen_j) / lead
  Field::code lead_inv = f_->inv(rem.entries.front().second);
  std::vector<SparseVec::Entry> pairs;
  for (auto g : touched)
    if (dense[g]) pairs.emplace_back(g, f_->neg(f_->mul(dense[g], lead_inv)));
  pairs.emplace_back(std::uint32_t(gen), lead_inv);
  pivot_row_[rem.entries.front().first] = std::int32_t(rows_.size());
  rows_.push_back(rem.scaled(lead_inv));
  combos_.push_back(SparseVec::from_pairs(*f_, ngen_, std::move(pairs)));
  return true;
}

std::vector<SparseVec> Echelon::reduced_basis() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot(a) > pivot(b); });
  Echelon done(*f_, dim_);
  std::vector<SparseVec> out;
  for (auto idx : order) {
    const SparseVec& row = rows_[idx];
    SparseVec tail(*f_, dim_);
    tail.entries.assign(row.entries.begin() + 1, row.entries.end());
    SparseVec red = done.reduce(tail);
    SparseVec full(*f_, dim_);
    full.entries.push_back(row.entries.front());
    full.entries.insert(full.entries.end(), red.entries.begin(), red.entries.end());
    done.rows_.push_back(full);
    done.pivot_row_[full.entries.front().first] = std::int32_t(done.rows_.size() - 1);
    out.push_back(std::move(full));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<SparseVec> solve(const SparseMat& a, const SparseVec& b) {
  if (b.dim != a.rows) throw ShapeError("solve: right-hand side has wrong dimension");
  if (b.field != a.field) throw ContextMismatch("solve: field mismatch");
  SparseMat cols = a.transpose();
  std::vector<std::size_t> order(a.cols);
  std::iota(order.begin(), order.end(), 0);
  // Sparsest columns first keeps fill-in low.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return cols.row_vecs[x].nnz() < cols.row_vecs[y].nnz();
  });
  Echelon ech(*a.field, a.rows, true);
  for (auto j : order) ech.insert(cols.row_vecs[j]);
  SparseVec combo;
  SparseVec rem = ech.reduce(b, &combo);
  if (!rem.is_zero()) return std::nullopt;
  std::vector<SparseVec::Entry> pairs;
  for (const auto& [g, c] : combo.entries) pairs.emplace_back(std::uint32_t(order[g]), c);
  return SparseVec::from_pairs(*a.field, a.cols, std::move(pairs));
}

std::size_t rank(const std::vector<SparseVec>& vectors) {
  if (vectors.empty()) return 0;
  std::size_t d = common_dim(vectors, 0);
  Echelon e(*vectors.front().field, d);
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

std::vector<SparseVec> basis(const std::vector<SparseVec>& vectors) {
  if (vectors.empty()) return {};
  std::size_t d = common_dim(vectors, 0);
  Echelon e(*vectors.front().field, d);
  for (const auto& v : vectors) e.insert(v);
  return e.reduced_basis();
}

std::vector<SparseVec> intersect(const std::vector<SparseVec>& u, const std::vector<SparseVec>& v) {
  if (u.empty() || v.empty()) return {};
  std::size_t d = common_dim(u, 0);
  if (common_dim(v, d) != d) throw ShapeError("intersect: dimension mismatch");
  const Field& f = *u.front().field;
  // Rows (x, x) for x in U and (y, 0) for y in V; rows of the echelon form
  // vanishing on the first half carry U ∩ V in the second half.
  Echelon e(f, 2 * d);
  for (const auto& x : u) {
    SparseVec w(f, 2 * d);
    w.entries = x.entries;
    for (const auto& [i, c] : x.entries) w.entries.emplace_back(std::uint32_t(i + d), c);
    e.insert(w);
  }
  for (const auto& y : v) {
    SparseVec w(f, 2 * d);
    w.entries = y.entries;
    e.insert(w);
  }
  std::vector<SparseVec> out;
  for (const auto& row : e.rows()) {
    if (row.entries.front().first < d) continue;
    SparseVec x(f, d);
    for (const auto& [i, c] : row.entries) x.entries.emplace_back(std::uint32_t(i - d), c);
    out.push_back(std::move(x));
  }
  return basis(out);
}

std::vector<SparseVec> kernel(const SparseMat& a) {
  Echelon e(*a.field, a.cols);
  for (const auto& r : a.row_vecs) e.insert(r);
  auto rref = e.reduced_basis();
  std::vector<std::int32_t> row_of(a.cols, -1);
  for (std::size_t i = 0; i < rref.size(); ++i) row_of[rref[i].entries.front().first] = std::int32_t(i);
  std::vector<SparseVec> out;
  for (std::size_t free = 0; free < a.cols; ++free) {
    if (row_of[free] >= 0) continue;
    std::vector<SparseVec::Entry> pairs{{std::uint32_t(free), a.field->one()}};
    for (const auto& row : rref) {
      Field::code c = row.at(free);
      if (c) pairs.emplace_back(row.entries.front().first, a.field->neg(c));
    }
    out.push_back(SparseVec::from_pairs(*a.field, a.cols, std::move(pairs)));
  }
  return out;
}

std::vector<SparseVec> fixed_space(const Field& f, std::size_t dim, const std::vector<SparseMat>& ops) {
  SparseMat stacked(f, 0, dim);
  SparseMat id = SparseMat::identity(f, dim);
  for (const auto& m : ops) {
    if (m.rows != m.cols) throw ShapeError("fixed_space: operator is not square");
    if (m.rows != dim) throw ShapeError("fixed_space: operator dimension mismatch");
    SparseMat d = m - id;
    for (auto& r : d.row_vecs)
      if (!r.is_zero()) stacked.row_vecs.push_back(std::move(r));
  }
  stacked.rows = stacked.row_vecs.size();
  return kernel(stacked);
}

}  // namespace modrep
