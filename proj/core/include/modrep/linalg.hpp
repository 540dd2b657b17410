#pragma once

#include <optional>
#include <vector>

#include "modrep/sparse.hpp"

namespace modrep {

/// Incremental semi-echelon basis of a subspace of F^dim.
///
/// Each stored row has leading (smallest-index) entry 1 at a pivot no other
/// row shares. Lower indices are eliminated first, so placing coordinates
/// with low indices gives them elimination priority. With tracking enabled,
/// every row remembers its expression in the inserted generators.
class Echelon {
 public:
  Echelon(const Field& f, std::size_t dim, bool track = false);

  /// Adds v as generator number generators(); true when the rank grew.
  bool insert(const SparseVec& v);
  /// Remainder of v modulo the span; zero exactly at pivot positions.
  /// With tracking, *combo receives c with v = remainder + sum_j c_j gen_j.
  SparseVec reduce(const SparseVec& v, SparseVec* combo = nullptr) const;
  bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t generators() const { return ngen_; }
  const Field& field() const { return *f_; }
  const std::vector<SparseVec>& rows() const { return rows_; }
  bool is_pivot(std::size_t i) const { return pivot_row_[i] >= 0; }
  std::uint32_t pivot(std::size_t row) const { return rows_[row].entries.front().first; }
  /// Fully reduced echelon basis, sorted by pivot.
  std::vector<SparseVec> reduced_basis() const;

 private:
  SparseVec reduce_impl(const SparseVec& v, std::vector<Field::code>* combo_dense,
                        std::vector<std::uint32_t>* combo_touched) const;

  const Field* f_;
  std::size_t dim_;
  bool track_;
  std::size_t ngen_ = 0;
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> combos_;
  std::vector<std::int32_t> pivot_row_;
};

/// Some x with A x = b, or none when inconsistent.
std::optional<SparseVec> solve(const SparseMat& a, const SparseVec& b);
std::size_t rank(const std::vector<SparseVec>& vectors);
/// Reduced row echelon basis of the span.
std::vector<SparseVec> basis(const std::vector<SparseVec>& vectors);
/// Basis of span(u) intersected with span(v) (Zassenhaus).
std::vector<SparseVec> intersect(const std::vector<SparseVec>& u, const std::vector<SparseVec>& v);
/// Basis of the kernel of a (right null space).
std::vector<SparseVec> kernel(const SparseMat& a);
/// Basis of the common fixed space of square operators on F^dim.
std::vector<SparseVec> fixed_space(const Field& f, std::size_t dim, const std::vector<SparseMat>& ops);

}  // namespace modrep
