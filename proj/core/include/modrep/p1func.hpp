#pragma once
/// @file p1func.hpp
/// Locally constant functions on P^1(Q_p) at resolution N, the model of
/// Ind_{B_S}^{G_S}(1). A point is the bottom row [c : d] of a matrix.
/// Cells 0..p^N-1 are the cosets z + p^N Z_p of the chart z = d/c in Z_p;
/// cells p^N + j are the cosets j p + p^N Z_p of the chart y = c/d in p Z_p.
/// The two charts are the two I_S(1)-orbits.

#include <vector>

#include "modrep/gmat.hpp"
#include "modrep/sparse.hpp"

namespace modrep {

class P1Func {
 public:
  /// Throws ShapeError unless N >= 1 and values.size() == p^N + p^(N-1).
  P1Func(const Field& f, int N, std::vector<Field::code> values);
  static P1Func constant(const Field& f, int N, Field::code v);
  static std::size_t cell_count(std::uint32_t p, int N);

  const Field& field() const { return *f_; }
  int N() const { return n_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Field::code>& values() const { return values_; }
  bool operator==(const P1Func& o) const { return f_ == o.f_ && n_ == o.n_ && values_ == o.values_; }

  /// Cell containing [c : d]; the pair must not be (0, 0).
  std::size_t cell_of(const PExact& c, const PExact& d) const;
  /// (g f)([c : d]) = f([c : d] g). Exact for g in K; throws OutOfSubgroup otherwise.
  P1Func act(const GMat& g) const;

  /// Header `p k N`, then `chart index : value` with chart 0 or inf.
  std::string str() const;
  static P1Func parse(const Field& f, const std::string& text);

 private:
  const Field* f_;
  int n_;
  std::vector<Field::code> values_;
};

/// Permutation operator of g in K on the level-N cell space.
SparseMat p1_action_matrix(const Field& f, int N, const GMat& g);

}  // namespace modrep
