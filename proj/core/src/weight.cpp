#include "modrep/weight.hpp"

#include "modrep/errors.hpp"

namespace modrep {

Weight::Weight(const Field& f, int r) : f_(&f), r_(r) {
  if (r < 0 || r > int(f.p()) - 1) throw RangeError("weight r must lie in 0..p-1");
  binom_.assign(std::size_t(r) + 1, {});
  for (int n = 0; n <= r; ++n) {
    binom_[n].assign(std::size_t(n) + 1, f.one());
    for (int k = 1; k < n; ++k) binom_[n][k] = f.add(binom_[n - 1][k - 1], binom_[n - 1][k]);
  }
}

WeightVector Weight::monomial(int i) const {
  WeightVector w = zero();
  w.at(std::size_t(i)) = f_->one();
  return w;
}

namespace {

// Coefficients of (u x + v y)^n in the basis x^(n-j) y^j.
std::vector<Field::code> linear_power(const Field& f, const std::vector<std::vector<Field::code>>& binom,
                                      Field::code u, Field::code v, int n) {
  std::vector<Field::code> out(std::size_t(n) + 1);
  for (int j = 0; j <= n; ++j) out[j] = f.mul(binom[n][j], f.mul(f.pow(u, n - j), f.pow(v, j)));
  return out;
}

}  // namespace

std::vector<Field::code> Weight::dense_residues(long a, long b, long c, long d) const {
  const std::size_t n = dim();
  std::vector<Field::code> m(n * n, 0);
  Field::code fa = f_->from_int(a), fb = f_->from_int(b), fc = f_->from_int(c), fd = f_->from_int(d);
  for (int i = 0; i <= r_; ++i) {
    // (a x + c y)^(r-i) (b x + d y)^i
    auto left = linear_power(*f_, binom_, fa, fc, r_ - i);
    auto right = linear_power(*f_, binom_, fb, fd, i);
    for (std::size_t j1 = 0; j1 < left.size(); ++j1) {
      if (!left[j1]) continue;
      for (std::size_t j2 = 0; j2 < right.size(); ++j2)
        m[(j1 + j2) * n + i] = f_->axpy(m[(j1 + j2) * n + i], left[j1], right[j2]);
    }
  }
  return m;
}

std::vector<Field::code> Weight::dense(const GMat& g) const {
  if (!member(g, "KZ")) throw OutOfSubgroup("sigma_r needs an element of KZ: " + g.str());
  const long m = g.min_valuation();
  auto res = [&](const PExact& x) { return long(x.shifted(-m).reduce_mod_p()); };
  return dense_residues(res(g.a()), res(g.b()), res(g.c()), res(g.d()));
}

SparseMat Weight::matrix(const GMat& g) const { return SparseMat::from_dense(*f_, dim(), dim(), dense(g)); }

WeightVector Weight::apply_dense(const std::vector<Field::code>& m, const WeightVector& w) const {
  const std::size_t n = dim();
  WeightVector out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!w[i]) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] = f_->axpy(out[j], m[j * n + i], w[i]);
  }
  return out;
}

WeightVector Weight::apply(const GMat& g, const WeightVector& w) const { return apply_dense(dense(g), w); }

}  // namespace modrep
