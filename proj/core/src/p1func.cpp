#include "modrep/p1func.hpp"

#include <sstream>

#include "modrep/errors.hpp"

namespace modrep {

namespace {

std::size_t ipow(std::uint32_t p, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

// Bottom row of the representative point of a cell.
std::pair<PExact, PExact> cell_point(std::uint32_t p, int N, std::size_t i) {
  std::size_t n0 = ipow(p, N);
  if (i < n0) return {PExact::one(p), PExact(p, long(i))};
  return {PExact(p, long((i - n0) * p)), PExact::one(p)};
}

std::vector<std::size_t> permutation(std::uint32_t p, int N, const GMat& g) {
  if (!member(g, "K")) throw OutOfSubgroup("P1Func action needs an element of K");
  std::size_t n = P1Func::cell_count(p, N);
  P1Func probe(Field::get(p, 1), N, std::vector<Field::code>(n, 0));
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [c, d] = cell_point(p, N, i);
    perm[i] = probe.cell_of(c * g.a() + d * g.c(), c * g.b() + d * g.d());
  }
  return perm;
}

}  // namespace

std::size_t P1Func::cell_count(std::uint32_t p, int N) { return ipow(p, N) + ipow(p, N - 1); }

P1Func::P1Func(const Field& f, int N, std::vector<Field::code> values)
    : f_(&f), n_(N), values_(std::move(values)) {
  if (N < 1) throw ShapeError("P1Func resolution must be >= 1");
  if (values_.size() != cell_count(f.p(), N)) throw ShapeError("P1Func size mismatch");
}

P1Func P1Func::constant(const Field& f, int N, Field::code v) {
  return P1Func(f, N, std::vector<Field::code>(cell_count(f.p(), N), v));
}

std::size_t P1Func::cell_of(const PExact& c, const PExact& d) const {
  const std::uint32_t p = f_->p();
  if (c.is_zero() && d.is_zero()) throw DomainError("[0 : 0] is not a point");
  if (!c.is_zero() && (d.is_zero() || d.valuation() >= c.valuation()))
    return (d / c).residue(unsigned(n_)).get_ui();
  PExact y = c / d;
  return ipow(p, n_) + y.residue(unsigned(n_)).get_ui() / p;
}

P1Func P1Func::act(const GMat& g) const {
  auto perm = permutation(f_->p(), n_, g);
  std::vector<Field::code> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[perm[i]];
  return P1Func(*f_, n_, std::move(out));
}

std::string P1Func::str() const {
  std::ostringstream os;
  std::size_t n0 = ipow(f_->p(), n_);
  os << f_->p() << ' ' << f_->k() << ' ' << n_ << '\n';
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i < n0)
      os << "0 " << i;
    else
      os << "inf " << (i - n0);
    os << " : " << values_[i] << '\n';
  }
  return os.str();
}

P1Func P1Func::parse(const Field& f, const std::string& text) {
  std::istringstream is(text);
  std::uint32_t p;
  unsigned k;
  int N;
  if (!(is >> p >> k >> N)) throw ParseError("bad P1Func header");
  if (p != f.p() || k != f.k()) throw ContextMismatch("P1Func field mismatch");
  if (N < 1 || N > 16) throw ParseError("bad P1Func resolution");
  std::size_t n = cell_count(p, N), n0 = ipow(p, N);
  std::vector<Field::code> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string chart, colon;
    std::size_t idx;
    Field::code val;
    if (!(is >> chart >> idx >> colon >> val) || colon != ":" || val >= f.order())
      throw ParseError("bad P1Func cell line");
    std::size_t want = i < n0 ? i : i - n0;
    if (chart != (i < n0 ? "0" : "inf") || idx != want) throw ParseError("P1Func cells out of order");
    v[i] = val;
  }
  return P1Func(f, N, std::move(v));
}

SparseMat p1_action_matrix(const Field& f, int N, const GMat& g) {
  auto perm = permutation(f.p(), N, g);
  SparseMat m(f, perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m.set_row(i, SparseVec::unit(f, perm.size(), perm[i]));
  return m;
}

}  // namespace modrep
