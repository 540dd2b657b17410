#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "modrep/field.hpp"

namespace modrep {

/// Sparse vector over F_{p^k}: sorted, duplicate-free, no stored zeros.
struct SparseVec {
  using Entry = std::pair<std::uint32_t, Field::code>;

  const Field* field = nullptr;
  std::size_t dim = 0;
  std::vector<Entry> entries;

  SparseVec() = default;
  SparseVec(const Field& f, std::size_t n) : field(&f), dim(n) {}

  static SparseVec unit(const Field& f, std::size_t n, std::size_t i);
  static SparseVec from_dense(const Field& f, const std::vector<Field::code>& dense);
  /// Builds from unsorted (index, value) pairs, summing duplicates.
  static SparseVec from_pairs(const Field& f, std::size_t n, std::vector<Entry> pairs);

  std::vector<Field::code> to_dense() const;
  Field::code at(std::size_t i) const;
  Fq get(std::size_t i) const { return Fq(*field, at(i)); }
  std::size_t nnz() const { return entries.size(); }
  bool is_zero() const { return entries.empty(); }

  SparseVec operator+(const SparseVec& o) const;
  SparseVec operator-(const SparseVec& o) const;
  SparseVec scaled(Field::code c) const;
  bool operator==(const SparseVec& o) const {
    return field == o.field && dim == o.dim && entries == o.entries;
  }
  bool operator!=(const SparseVec& o) const { return !(*this == o); }
  std::string str() const;
};

/// Row-major sparse matrix.
struct SparseMat {
  const Field* field = nullptr;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVec> row_vecs;

  SparseMat() = default;
  SparseMat(const Field& f, std::size_t r, std::size_t c);

  static SparseMat identity(const Field& f, std::size_t n);
  static SparseMat from_dense(const Field& f, std::size_t r, std::size_t c,
                              const std::vector<Field::code>& row_major);
  /// Matrix whose columns are the given vectors.
  static SparseMat from_columns(const Field& f, std::size_t r, const std::vector<SparseVec>& cols);

  std::size_t nnz() const;
  Field::code at(std::size_t i, std::size_t j) const { return row_vecs[i].at(j); }
  void set_row(std::size_t i, SparseVec v);
  SparseVec apply(const SparseVec& x) const;
  SparseMat operator*(const SparseMat& o) const;
  SparseMat operator-(const SparseMat& o) const;
  SparseMat transpose() const;
  bool operator==(const SparseMat& o) const {
    return field == o.field && rows == o.rows && cols == o.cols && row_vecs == o.row_vecs;
  }

  /// Text format: header `p k rows cols nnz`, then `row col c0 .. c(k-1)` lines.
  void write_text(std::ostream& os) const;
  std::string to_text() const;
  static SparseMat read_text(std::istream& is);
  static SparseMat from_text(const std::string& text);
};

}  // namespace modrep
