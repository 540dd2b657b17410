#pragma once
/// @file quotient.hpp
/// Truncated cokernels of T - lambda and bounded preimage search.

#include <optional>
#include <vector>

#include "modrep/cind.hpp"
#include "modrep/linalg.hpp"
#include "modrep/words.hpp"

namespace modrep {

/// Coordinates for elements supported on the ball B_radius. Vertices are
/// ordered by decreasing distance, so every sub-ball B_n is a suffix.
class BallCoords {
 public:
  BallCoords(WeightPtr w, long radius);

  long radius() const { return radius_; }
  std::size_t dim() const { return vertices_.size() * block_; }
  std::size_t block() const { return block_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  /// Index of the first coordinate belonging to B_n.
  std::size_t suffix_offset(long n) const;
  /// Throws SupportOverflow when f leaves the ball.
  SparseVec coords(const CIndElt& f) const;
  CIndElt element(const SparseVec& x) const;
  std::size_t slot(const Vertex& v) const;  // throws SupportOverflow

 private:
  WeightPtr w_;
  long radius_;
  std::size_t block_;
  std::vector<Vertex> vertices_;
  std::map<Vertex, std::size_t> slot_;
};

/// Columns (T - lambda)[v, e_j] for v in B_bound, ready for repeated solves.
class ImageSolver {
 public:
  ImageSolver(WeightPtr w, Field::code lambda, long bound);
  long bound() const { return bound_; }
  /// Some f on B_bound with (T - lambda) f = target, if one exists.
  std::optional<CIndElt> solve(const CIndElt& target) const;
  bool in_image(const CIndElt& target) const;

 private:
  WeightPtr w_;
  Field::code lambda_;
  long bound_;
  BallCoords domain_, range_;
  Echelon ech_;
};

std::optional<CIndElt> image_solve(const CIndElt& target, Field::code lambda, long bound);

/// W_n / ((T - lambda) W_{n+R-1} intersected with W_n).
class QuotientCtx {
 public:
  QuotientCtx(WeightPtr w, Field::code lambda, int depth, int slack);
  /// Rebuilds from a stored reduced image basis (W_n coordinates).
  QuotientCtx(WeightPtr w, Field::code lambda, int depth, int slack, const std::vector<SparseVec>& image_basis);

  const Weight& weight() const { return *w_; }
  const WeightPtr& weight_ptr() const { return w_; }
  Field::code lambda() const { return lambda_; }
  int depth() const { return depth_; }
  int slack() const { return slack_; }
  const BallCoords& coords() const { return coords_; }
  std::size_t dim_w() const { return coords_.dim(); }
  std::size_t image_dim() const { return basis_.size(); }
  std::size_t dim() const { return dim_w() - image_dim(); }
  /// Reduced echelon basis of the image part, in W_n coordinates.
  const std::vector<SparseVec>& image_basis() const { return basis_; }

  SparseVec reduce(const CIndElt& f) const;
  SparseVec reduce_coords(const SparseVec& x) const;

 private:
  void finish();
  WeightPtr w_;
  Field::code lambda_;
  int depth_, slack_;
  BallCoords coords_;
  std::vector<SparseVec> basis_;
  Echelon ech_;
  std::vector<std::int64_t> compact_;
  std::size_t qdim_ = 0;
};

struct SpanStats {
  std::size_t words = 0;
  std::size_t within_depth = 0;
  std::size_t skipped = 0;
};

/// Reduced basis of the span of the classes of g.seed over words of length <= L
/// whose translate stays inside the depth.
std::vector<SparseVec> generated_span(const QuotientCtx& ctx, const CIndElt& seed, const Alphabet& alphabet,
                                      int L, SpanStats* stats = nullptr);

}  // namespace modrep
