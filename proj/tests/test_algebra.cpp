// Finite fields, p-adic scalars, sparse vectors and exact linear algebra.

#include <random>
#include <set>

#include "doctest.h"
#include "modrep/errors.hpp"
#include "modrep/field.hpp"
#include "modrep/linalg.hpp"
#include "modrep/pexact.hpp"
#include "modrep/sparse.hpp"

using namespace modrep;

namespace {

// Every vector in the span of `gens`, by enumerating all coefficient tuples.
std::set<std::vector<Field::code>> brute_span(const Field& f, std::size_t dim, const std::vector<SparseVec>& gens) {
  std::set<std::vector<Field::code>> out;
  std::vector<Field::code> coef(gens.size(), 0);
  for (;;) {
    std::vector<Field::code> v(dim, 0);
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (std::size_t i = 0; i < dim; ++i) v[i] = f.axpy(v[i], coef[g], gens[g].at(i));
    out.insert(v);
    std::size_t j = 0;
    while (j < coef.size() && ++coef[j] == f.order()) coef[j++] = 0;
    if (j == coef.size()) break;
  }
  return out;
}

SparseVec random_vec(std::mt19937_64& rng, const Field& f, std::size_t dim, int density) {
  std::vector<Field::code> d(dim, 0);
  for (auto& x : d)
    if (int(rng() % 100) < density) x = Field::code(rng() % f.order());
  return SparseVec::from_dense(f, d);
}

}  // namespace

TEST_CASE("field modulus is the least irreducible by integer code") {
  CHECK(Field::get(3, 2).modulus_string() == "t^2 + 1");
  CHECK(Field::get(5, 2).modulus_string() == "t^2 + 2");
  CHECK(Field::get(7, 1).order() == 7);
  CHECK(Field::get(3, 2).order() == 9);
  CHECK(&Field::get(5, 2) == &Field::get(5, 2));
}

TEST_CASE("field axioms on every pair") {
  for (auto [p, k] : {std::pair{3u, 2u}, {5u, 2u}, {7u, 1u}}) {
    const Field& f = Field::get(p, k);
    for (Field::code a = 0; a < f.order(); ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      for (Field::code b = 0; b < f.order(); ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        Field::code c = Field::code((a * 7 + b * 3 + 1) % f.order());
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

TEST_CASE("prime subfield agrees with integers mod p") {
  const Field& f = Field::get(5, 2);
  for (long x = -12; x <= 12; ++x)
    for (long y = -12; y <= 12; ++y) {
      CHECK(f.add(f.from_int(x), f.from_int(y)) == f.from_int(x + y));
      CHECK(f.mul(f.from_int(x), f.from_int(y)) == f.from_int(x * y));
    }
}

TEST_CASE("generator has full order and square roots square back") {
  for (auto [p, k] : {std::pair{3u, 2u}, {5u, 2u}, {11u, 1u}}) {
    const Field& f = Field::get(p, k);
    Field::code g = f.generator(), x = g;
    std::uint32_t order = 1;
    while (x != 1) x = f.mul(x, g), ++order;
    CHECK(order == f.order() - 1);
    std::size_t squares = 0;
    for (Field::code a = 1; a < f.order(); ++a) {
      auto r = f.sqrt(a);
      CHECK(r.has_value() == f.is_square(a));
      if (r) {
        ++squares;
        CHECK(f.mul(*r, *r) == a);
      }
    }
    CHECK(squares == (f.order() - 1) / 2);
  }
}

TEST_CASE("field format and parse round-trip; errors") {
  const Field& f = Field::get(5, 2);
  for (Field::code a = 0; a < f.order(); ++a) CHECK(f.parse(f.format(a)) == a);
  CHECK_THROWS_AS(f.inv(0), DivisionByZero);
  CHECK_THROWS_AS(Field::get(4, 1), DomainError);
  Fq x(f, 3), y(Field::get(3, 2), 1);
  CHECK_THROWS_AS(x + y, ContextMismatch);
}

TEST_CASE("PExact arithmetic matches rationals") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {3u, 5u}) {
    for (int t = 0; t < 300; ++t) {
      mpq_class a(long(rng() % 2001) - 1000, long(1 + rng() % 50)), b(long(rng() % 2001) - 1000, long(1 + rng() % 50));
      a.canonicalize();
      b.canonicalize();
      PExact x(p, a), y(p, b);
      CHECK((x + y).value() == a + b);
      CHECK((x - y).value() == a - b);
      CHECK((x * y).value() == a * b);
      if (b != 0) CHECK((x / y).value() == a / b);
      CHECK(PExact::parse(p, x.str()) == x);
      CHECK((x < y) + (y < x) + (x == y) == 1);
    }
  }
}

TEST_CASE("PExact valuation and residues") {
  PExact x(5, mpq_class(50, 3));  // 5^2 * 2/3
  CHECK(x.valuation() == 2);
  CHECK(x.unit() == mpq_class(2, 3));
  CHECK(PExact(5, 7L).residue(1) == 2);
  CHECK(PExact(5, mpq_class(1, 3)).reduce_mod_p() == 2);  // 3 * 2 = 6 = 1 mod 5
  CHECK(PExact(3, 18L).residue(3) == 18);
  CHECK(PExact::pow_p(3, -2).value() == mpq_class(1, 9));
  CHECK(PExact(3, 1L).shifted(-1).is_integral() == false);
  CHECK_THROWS_AS(PExact::zero(3).inv(), DivisionByZero);
  CHECK_THROWS_AS(PExact(3, mpq_class(1, 3)).residue(1), DomainError);
  CHECK_THROWS_AS(PExact::parse(3, "x1"), ParseError);
}

TEST_CASE("sparse vectors and matrices") {
  const Field& f = Field::get(3, 2);
  SparseVec v = SparseVec::from_pairs(f, 5, {{3, 1}, {1, 2}, {3, 2}});
  CHECK(v.nnz() == 1);  // 1 + 2 = 0 in characteristic 3
  CHECK(v.at(1) == 2);
  CHECK(v.at(3) == 0);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Field::code> a(12), b(12);
    for (auto& x : a) x = Field::code(rng() % 9);
    for (auto& x : b) x = Field::code(rng() % 9);
    SparseMat A = SparseMat::from_dense(f, 3, 4, a), B = SparseMat::from_dense(f, 4, 3, b);
    SparseMat C = A * B;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Field::code s = 0;
        for (std::size_t k = 0; k < 4; ++k) s = f.axpy(s, a[i * 4 + k], b[k * 3 + j]);
        CHECK(C.at(i, j) == s);
      }
    CHECK(A.transpose().transpose() == A);
    CHECK(SparseMat::from_text(A.to_text()) == A);
  }
}

TEST_CASE("echelon rank, membership and intersection match enumeration over F_3") {
  const Field& f = Field::get(3, 1);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const std::size_t dim = 4;
    std::vector<SparseVec> u, w;
    for (int i = 0; i < 3; ++i) u.push_back(random_vec(rng, f, dim, 60));
    for (int i = 0; i < 2; ++i) w.push_back(random_vec(rng, f, dim, 60));
    auto su = brute_span(f, dim, u), sw = brute_span(f, dim, w);
    std::size_t r = 0;
    for (std::size_t q = 1; q < su.size(); q *= 3) ++r;
    CHECK(rank(u) == r);
    Echelon e(f, dim);
    for (const auto& x : u) e.insert(x);
    for (int s = 0; s < 10; ++s) {
      SparseVec x = random_vec(rng, f, dim, 70);
      CHECK(e.contains(x) == (su.count(x.to_dense()) == 1));
    }
    std::size_t common = 0;
    for (const auto& x : su) common += sw.count(x);
    auto inter = intersect(u, w);
    std::size_t q = 1;
    for (std::size_t i = 0; i < inter.size(); ++i) q *= 3;
    CHECK(q == common);
    for (const auto& x : inter) {
      CHECK(su.count(x.to_dense()) == 1);
      CHECK(sw.count(x.to_dense()) == 1);
    }
  }
}

TEST_CASE("solve, kernel and fixed space are verified by substitution") {
  const Field& f = Field::get(5, 2);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    std::vector<Field::code> d(5 * 6);
    for (auto& x : d) x = (rng() % 3 == 0) ? Field::code(rng() % f.order()) : 0;
    SparseMat A = SparseMat::from_dense(f, 5, 6, d);
    SparseVec x0 = random_vec(rng, f, 6, 50);
    SparseVec b = A.apply(x0);
    auto x = solve(A, b);
    REQUIRE(x.has_value());
    CHECK(A.apply(*x) == b);
    auto ker = kernel(A);
    for (const auto& k : ker) CHECK(A.apply(k).is_zero());
    std::size_t rk = rank(A.row_vecs);
    CHECK(ker.size() + rk == 6);
  }
  // A permutation of order 3 on F^3 fixes exactly the constants.
  SparseMat cyc = SparseMat::from_dense(f, 3, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0});
  auto fix = fixed_space(f, 3, {cyc});
  REQUIRE(fix.size() == 1);
  CHECK(fix[0].at(0) == fix[0].at(1));
  CHECK(fix[0].at(1) == fix[0].at(2));
}

TEST_CASE("echelon tracks combinations of its generators") {
  const Field& f = Field::get(3, 2);
  std::mt19937_64 rng(9);
  Echelon e(f, 6, true);
  std::vector<SparseVec> gens;
  for (int i = 0; i < 4; ++i) {
    gens.push_back(random_vec(rng, f, 6, 60));
    e.insert(gens.back());
  }
  for (int t = 0; t < 20; ++t) {
    SparseVec v = random_vec(rng, f, 6, 60), combo;
    SparseVec rem = e.reduce(v, &combo);
    SparseVec rebuilt = rem;
    for (std::size_t j = 0; j < gens.size(); ++j) rebuilt = rebuilt + gens[j].scaled(combo.at(j));
    CHECK(rebuilt == v);
    for (const auto& [i, c] : rem.entries) CHECK(!e.is_pivot(i));
  }
}
