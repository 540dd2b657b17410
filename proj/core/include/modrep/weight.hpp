#pragma once
/// @file weight.hpp
/// Serre weights Sym^r of KZ in the monomial basis x^(r-i) y^i, i = 0..r.

#include <vector>

#include "modrep/field.hpp"
#include "modrep/gmat.hpp"
#include "modrep/sparse.hpp"

namespace modrep {

using WeightVector = std::vector<Field::code>;

class Weight {
 public:
  /// Requires 0 <= r <= p - 1.
  Weight(const Field& f, int r);

  const Field& field() const { return *f_; }
  std::uint32_t p() const { return f_->p(); }
  int r() const { return r_; }
  std::size_t dim() const { return std::size_t(r_) + 1; }

  /// Row-major (r+1)x(r+1) matrix of sigma_r(g); g must lie in KZ.
  std::vector<Field::code> dense(const GMat& g) const;
  /// Same matrix from residues (a, b, c, d) mod p of an element of K.
  std::vector<Field::code> dense_residues(long a, long b, long c, long d) const;
  SparseMat matrix(const GMat& g) const;
  WeightVector apply(const GMat& g, const WeightVector& w) const;
  WeightVector apply_dense(const std::vector<Field::code>& m, const WeightVector& w) const;

  WeightVector zero() const { return WeightVector(dim(), 0); }
  /// x^(r-i) y^i
  WeightVector monomial(int i) const;
  WeightVector x_r() const { return monomial(0); }
  WeightVector y_r() const { return monomial(r_); }

 private:
  const Field* f_;
  int r_;
  std::vector<std::vector<Field::code>> binom_;
};

}  // namespace modrep
