#include "modrep/sparse.hpp"

#include <algorithm>
#include <sstream>

#include "modrep/errors.hpp"

namespace modrep {

namespace {

void require_same(const SparseVec& a, const SparseVec& b) {
  if (a.field != b.field) throw ContextMismatch("sparse vectors over different fields");
  if (a.dim != b.dim) throw ShapeError("sparse vector dimensions differ");
}

}  // namespace

SparseVec SparseVec::unit(const Field& f, std::size_t n, std::size_t i) {
  if (i >= n) throw ShapeError("unit index out of range");
  SparseVec v(f, n);
  v.entries.emplace_back(std::uint32_t(i), f.one());
  return v;
}

SparseVec SparseVec::from_dense(const Field& f, const std::vector<Field::code>& dense) {
  SparseVec v(f, dense.size());
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i]) v.entries.emplace_back(std::uint32_t(i), dense[i]);
  return v;
}

SparseVec SparseVec::from_pairs(const Field& f, std::size_t n, std::vector<Entry> pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVec v(f, n);
  for (const auto& [i, c] : pairs) {
    if (i >= n) throw ShapeError("sparse index out of range");
    if (!v.entries.empty() && v.entries.back().first == i) {
      v.entries.back().second = f.add(v.entries.back().second, c);
      if (v.entries.back().second == 0) v.entries.pop_back();
    } else if (c != 0) {
      v.entries.emplace_back(i, c);
    }
  }
  return v;
}

std::vector<Field::code> SparseVec::to_dense() const {
  std::vector<Field::code> out(dim, 0);
  for (const auto& [i, c] : entries) out[i] = c;
  return out;
}

Field::code SparseVec::at(std::size_t i) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), Entry(std::uint32_t(i), 0),
                             [](const Entry& a, const Entry& b) { return a.first < b.first; });
  if (it != entries.end() && it->first == i) return it->second;
  return 0;
}

SparseVec SparseVec::operator+(const SparseVec& o) const {
  require_same(*this, o);
  SparseVec r(*field, dim);
  r.entries.reserve(entries.size() + o.entries.size());
  std::size_t i = 0, j = 0;
  while (i < entries.size() || j < o.entries.size()) {
    if (j == o.entries.size() || (i < entries.size() && entries[i].first < o.entries[j].first)) {
      r.entries.push_back(entries[i++]);
    } else if (i == entries.size() || o.entries[j].first < entries[i].first) {
      r.entries.push_back(o.entries[j++]);
    } else {
      Field::code s = field->add(entries[i].second, o.entries[j].second);
      if (s) r.entries.emplace_back(entries[i].first, s);
      ++i;
      ++j;
    }
  }
  return r;
}

SparseVec SparseVec::operator-(const SparseVec& o) const { return *this + o.scaled(field->neg(1)); }

SparseVec SparseVec::scaled(Field::code c) const {
  SparseVec r(*field, dim);
  if (c == 0) return r;
  r.entries.reserve(entries.size());
  for (const auto& [i, v] : entries) r.entries.emplace_back(i, field->mul(v, c));
  return r;
}

std::string SparseVec::str() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [i, c] : entries) {
    if (!first) os << ", ";
    first = false;
    os << i << ":" << field->format(c);
  }
  os << "]/" << dim;
  return os.str();
}

SparseMat::SparseMat(const Field& f, std::size_t r, std::size_t c)
    : field(&f), rows(r), cols(c), row_vecs(r, SparseVec(f, c)) {}

SparseMat SparseMat::identity(const Field& f, std::size_t n) {
  SparseMat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.row_vecs[i] = SparseVec::unit(f, n, i);
  return m;
}

SparseMat SparseMat::from_dense(const Field& f, std::size_t r, std::size_t c,
                                const std::vector<Field::code>& row_major) {
  if (row_major.size() != r * c) throw ShapeError("dense data size mismatch");
  SparseMat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    m.row_vecs[i] = SparseVec::from_dense(
        f, std::vector<Field::code>(row_major.begin() + i * c, row_major.begin() + (i + 1) * c));
  return m;
}

SparseMat SparseMat::from_columns(const Field& f, std::size_t r, const std::vector<SparseVec>& cs) {
  SparseMat t(f, cs.size(), r);
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (cs[j].dim != r) throw ShapeError("column dimension mismatch");
    t.row_vecs[j] = cs[j];
  }
  return t.transpose();
}

std::size_t SparseMat::nnz() const {
  std::size_t n = 0;
  for (const auto& r : row_vecs) n += r.nnz();
  return n;
}

void SparseMat::set_row(std::size_t i, SparseVec v) {
  if (i >= rows || v.dim != cols) throw ShapeError("row shape mismatch");
  row_vecs[i] = std::move(v);
}

SparseVec SparseMat::apply(const SparseVec& x) const {
  if (x.dim != cols) throw ShapeError("matrix-vector dimension mismatch");
  if (x.field != field) throw ContextMismatch("matrix and vector over different fields");
  SparseVec y(*field, rows);
  auto xd = x.to_dense();
  for (std::size_t i = 0; i < rows; ++i) {
    Field::code s = 0;
    for (const auto& [j, c] : row_vecs[i].entries) s = field->axpy(s, c, xd[j]);
    if (s) y.entries.emplace_back(std::uint32_t(i), s);
  }
  return y;
}

SparseMat SparseMat::transpose() const {
  std::vector<std::vector<SparseVec::Entry>> cols_e(cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (const auto& [j, c] : row_vecs[i].entries) cols_e[j].emplace_back(std::uint32_t(i), c);
  SparseMat t(*field, cols, rows);
  for (std::size_t j = 0; j < cols; ++j) t.row_vecs[j].entries = std::move(cols_e[j]);
  return t;
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
  if (cols != o.rows) throw ShapeError("matrix product dimension mismatch");
  if (field != o.field) throw ContextMismatch("matrices over different fields");
  SparseMat r(*field, rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<SparseVec::Entry> acc;
    for (const auto& [k, c] : row_vecs[i].entries)
      for (const auto& [j, d] : o.row_vecs[k].entries) acc.emplace_back(j, field->mul(c, d));
    r.row_vecs[i] = SparseVec::from_pairs(*field, o.cols, std::move(acc));
  }
  return r;
}

SparseMat SparseMat::operator-(const SparseMat& o) const {
  if (rows != o.rows || cols != o.cols) throw ShapeError("matrix difference shape mismatch");
  SparseMat r(*field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) r.row_vecs[i] = row_vecs[i] - o.row_vecs[i];
  return r;
}

void SparseMat::write_text(std::ostream& os) const {
  os << field->p() << ' ' << field->k() << ' ' << rows << ' ' << cols << ' ' << nnz() << '\n';
  for (std::size_t i = 0; i < rows; ++i)
    for (const auto& [j, c] : row_vecs[i].entries) {
      os << i << ' ' << j;
      for (auto d : field->coeffs(c)) os << ' ' << d;
      os << '\n';
    }
}

std::string SparseMat::to_text() const {
  std::ostringstream os;
  write_text(os);
  return os.str();
}

SparseMat SparseMat::read_text(std::istream& is) {
  std::uint64_t p, k, r, c, nnz;
  if (!(is >> p >> k >> r >> c >> nnz)) throw ParseError("bad sparse matrix header");
  const Field& f = Field::get(std::uint32_t(p), unsigned(k));
  SparseMat m(f, r, c);
  std::vector<std::vector<SparseVec::Entry>> rows_e(r);
  std::uint64_t last_i = 0, last_j = 0;
  for (std::uint64_t t = 0; t < nnz; ++t) {
    std::uint64_t i, j;
    if (!(is >> i >> j)) throw ParseError("truncated sparse matrix body");
    std::vector<std::uint32_t> coeffs(k);
    for (auto& d : coeffs) {
      std::uint64_t v;
      if (!(is >> v) || v >= p) throw ParseError("bad sparse matrix coefficient");
      d = std::uint32_t(v);
    }
    if (i >= r || j >= c) throw ParseError("sparse matrix index out of range");
    if (t > 0 && (i < last_i || (i == last_i && j <= last_j)))
      throw ParseError("sparse matrix entries out of order");
    last_i = i;
    last_j = j;
    Field::code v = f.from_coeffs(coeffs);
    if (v == 0) throw ParseError("explicit zero in sparse matrix");
    rows_e[i].emplace_back(std::uint32_t(j), v);
  }
  for (std::size_t i = 0; i < r; ++i) m.row_vecs[i].entries = std::move(rows_e[i]);
  return m;
}

SparseMat SparseMat::from_text(const std::string& text) {
  std::istringstream is(text);
  return read_text(is);
}

}  // namespace modrep
