#include "modrep/quotient.hpp"

#include <algorithm>

#include "modrep/errors.hpp"

namespace modrep {

BallCoords::BallCoords(WeightPtr w, long radius)
    : w_(std::move(w)), radius_(radius), block_(w_->dim()), vertices_(ball(w_->p(), radius)) {
  std::stable_sort(vertices_.begin(), vertices_.end(),
                   [](const Vertex& x, const Vertex& y) { return x.distance() > y.distance(); });
  for (std::size_t i = 0; i < vertices_.size(); ++i) slot_.emplace(vertices_[i], i);
}

std::size_t BallCoords::suffix_offset(long n) const {
  std::size_t i = 0;
  while (i < vertices_.size() && vertices_[i].distance() > n) ++i;
  return i * block_;
}

std::size_t BallCoords::slot(const Vertex& v) const {
  auto it = slot_.find(v);
  if (it == slot_.end())
    throw SupportOverflow("vertex " + v.str() + " outside ball of radius " + std::to_string(radius_));
  return it->second;
}

SparseVec BallCoords::coords(const CIndElt& f) const {
  std::vector<SparseVec::Entry> pairs;
  for (const auto& [v, w] : f.support()) {
    std::size_t base = slot(v) * block_;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (w[j]) pairs.emplace_back(std::uint32_t(base + j), w[j]);
  }
  return SparseVec::from_pairs(w_->field(), dim(), std::move(pairs));
}

CIndElt BallCoords::element(const SparseVec& x) const {
  if (x.dim != dim()) throw ShapeError("coordinate vector of wrong dimension");
  CIndElt f(w_);
  for (const auto& [i, c] : x.entries) {
    WeightVector e = w_->monomial(int(i % block_));
    f.add_at(vertices_[i / block_], e, c);
  }
  return f;
}

namespace {

// (T - lambda)[v, e_j] in range coordinates, for each domain coordinate.
std::vector<SparseVec> image_columns(const WeightPtr& w, Field::code lambda, const BallCoords& domain,
                                     const BallCoords& range) {
  std::vector<SparseVec> cols;
  cols.reserve(domain.dim());
  for (const auto& v : domain.vertices()) {
    for (int j = 0; j <= w->r(); ++j) {
      CIndElt e(w);
      e.add_at(v, w->monomial(j));
      cols.push_back(range.coords(hecke_T_minus(e, lambda)));
    }
  }
  return cols;
}

}  // namespace

ImageSolver::ImageSolver(WeightPtr w, Field::code lambda, long bound)
    : w_(std::move(w)),
      lambda_(lambda),
      bound_(bound),
      domain_(w_, std::max(bound, 0L)),
      range_(w_, std::max(bound, 0L) + 1),
      ech_(w_->field(), range_.dim(), true) {
  for (const auto& c : image_columns(w_, lambda_, domain_, range_)) ech_.insert(c);
}

bool ImageSolver::in_image(const CIndElt& target) const {
  if (target.max_distance() > range_.radius()) return false;
  return ech_.contains(range_.coords(target));
}

std::optional<CIndElt> ImageSolver::solve(const CIndElt& target) const {
  if (target.max_distance() > range_.radius()) return std::nullopt;
  SparseVec combo;
  SparseVec rem = ech_.reduce(range_.coords(target), &combo);
  if (!rem.is_zero()) return std::nullopt;
  combo.dim = domain_.dim();
  return domain_.element(combo);
}

std::optional<CIndElt> image_solve(const CIndElt& target, Field::code lambda, long bound) {
  if (bound < 0) return target.is_zero() ? std::optional<CIndElt>(CIndElt(target.weight_ptr())) : std::nullopt;
  return ImageSolver(target.weight_ptr(), lambda, bound).solve(target);
}

QuotientCtx::QuotientCtx(WeightPtr w, Field::code lambda, int depth, int slack)
    : w_(std::move(w)),
      lambda_(lambda),
      depth_(depth),
      slack_(slack),
      coords_(w_, depth),
      ech_(w_->field(), coords_.dim()) {
  if (depth < 0 || slack < 0) throw RangeError("depth and slack must be nonnegative");
  const Field& f = w_->field();
  const long outer = long(depth) + slack;
  BallCoords range(w_, outer);
  const std::size_t offset = range.suffix_offset(depth);
  Echelon big(f, range.dim());
  if (outer >= 1) {
    BallCoords domain(w_, outer - 1);
    for (const auto& c : image_columns(w_, lambda_, domain, range)) big.insert(c);
  }
  // Rows whose pivot lies in the B_n suffix have all entries there.
  std::vector<SparseVec> inner;
  for (const auto& row : big.rows()) {
    if (row.entries.front().first < offset) continue;
    SparseVec x(f, coords_.dim());
    for (const auto& [i, c] : row.entries) x.entries.emplace_back(std::uint32_t(i - offset), c);
    inner.push_back(std::move(x));
  }
  basis_ = basis(inner);
  finish();
}

QuotientCtx::QuotientCtx(WeightPtr w, Field::code lambda, int depth, int slack,
                         const std::vector<SparseVec>& image_basis)
    : w_(std::move(w)),
      lambda_(lambda),
      depth_(depth),
      slack_(slack),
      coords_(w_, depth),
      basis_(image_basis),
      ech_(w_->field(), coords_.dim()) {
  for (const auto& b : basis_)
    if (b.dim != coords_.dim() || b.field != &w_->field()) throw ShapeError("stored basis does not match context");
  finish();
}

void QuotientCtx::finish() {
  for (const auto& b : basis_)
    if (!ech_.insert(b)) throw ShapeError("image basis is not independent");
  compact_.assign(coords_.dim(), -1);
  qdim_ = 0;
  for (std::size_t i = 0; i < coords_.dim(); ++i)
    if (!ech_.is_pivot(i)) compact_[i] = std::int64_t(qdim_++);
}

SparseVec QuotientCtx::reduce_coords(const SparseVec& x) const {
  SparseVec rem = ech_.reduce(x);
  SparseVec out(w_->field(), qdim_);
  for (const auto& [i, c] : rem.entries) out.entries.emplace_back(std::uint32_t(compact_[i]), c);
  return out;
}

SparseVec QuotientCtx::reduce(const CIndElt& f) const {
  if (f.max_distance() > depth_)
    throw SupportOverflow("element reaches distance " + std::to_string(f.max_distance()) + " beyond depth " +
                          std::to_string(depth_));
  return reduce_coords(coords_.coords(f));
}

std::vector<SparseVec> generated_span(const QuotientCtx& ctx, const CIndElt& seed, const Alphabet& alphabet,
                                      int L, SpanStats* stats) {
  SpanStats local;
  Echelon ech(ctx.weight().field(), ctx.dim());
  for (const auto& g : word_enum(alphabet, L)) {
    ++local.words;
    CIndElt f = act(g, seed);
    if (f.max_distance() > ctx.depth()) {
      ++local.skipped;
      continue;
    }
    ++local.within_depth;
    ech.insert(ctx.reduce(f));
  }
  if (stats) *stats = local;
  return ech.reduced_basis();
}

}  // namespace modrep
