// Matrices, subgroup predicates, the Bruhat-Tits tree and words.

#include <random>
#include <set>

#include "doctest.h"
#include "modrep/errors.hpp"
#include "modrep/tree.hpp"
#include "modrep/words.hpp"

using namespace modrep;

namespace {

GMat random_gl2(std::mt19937_64& rng, std::uint32_t p) {
  for (;;) {
    auto e = [&] { return PExact(p, long(rng() % 61) - 30).shifted(long(rng() % 5) - 2); };
    PExact a = e(), b = e(), c = e(), d = e();
    if (!(a * d - b * c).is_zero()) return GMat(a, b, c, d);
  }
}

// Distance of the lattice class g Z_p^2 from the standard one, from the
// elementary divisors of g: v(det) - 2 min v(entry).
long lattice_distance(const GMat& g) { return g.det_valuation() - 2 * g.min_valuation(); }

}  // namespace

TEST_CASE("matrix group laws and parsing") {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {3u, 5u}) {
    for (int t = 0; t < 50; ++t) {
      GMat g = random_gl2(rng, p), h = random_gl2(rng, p), k = random_gl2(rng, p);
      CHECK((g * h) * k == g * (h * k));
      CHECK(g * g.inv() == GMat::identity(p));
      CHECK((g * h).det() == g.det() * h.det());
      CHECK(GMat::parse(p, g.str()) == g);
    }
    CHECK_THROWS_AS(GMat(p, 1, 2, 2, 4), DomainError);
    CHECK(mat_s(p).pow(4) == GMat::identity(p));
    CHECK(mat_beta0(p) * mat_beta0(p) == GMat::identity(p).scaled(PExact(p, -1L)));
    CHECK(mat_alpha0(p) == mat_t(PExact(p, long(p))));
  }
}

TEST_CASE("named elements lie in their subgroups") {
  const std::uint32_t p = 5;
  CHECK(member(mat_s(p), "KS"));
  CHECK(member(mat_s_prime(p), "KS"));
  CHECK(!member(mat_alpha0(p), "K"));
  CHECK(member(mat_alpha0(p), "SL2"));
  CHECK(member(mat_beta0(p), "SL2"));
  CHECK(!member(mat_beta0(p), "KS"));
  CHECK(member(mat_u(p, 3), "IS1"));
  CHECK(member(mat_l(p, 5), "IS1"));
  CHECK(!member(mat_l(p, 1), "IS"));
  CHECK(member(mat_t(PExact(p, 2L)), "IS"));
  CHECK(!member(mat_t(PExact(p, 2L)), "IS1"));
  CHECK(member(mat_t(PExact(p, 6L)), "IS1"));
  CHECK(member(mat_alpha(p), "GL2"));
  CHECK(!member(mat_alpha(p), "KZ"));
  CHECK(member(GMat::identity(p).scaled(PExact(p, 25L)), "KZ"));
  CHECK(member(GMat(p, 1, 0, 25, 1), "KSm", 2));
  CHECK(!member(GMat(p, 1, 0, 5, 1), "KSm", 2));
  CHECK_THROWS_AS(member(mat_s(p), "nope"), UnknownName);
  for (const auto& name : subgroup_names()) CHECK(member(GMat::identity(p), name, 1));
}

TEST_CASE("ball sizes follow 1 + (p+1)(p^n - 1)/(p-1)") {
  for (std::uint32_t p : {3u, 5u, 7u})
    for (long n = 0; n <= 3; ++n) {
      std::size_t pn = 1;
      for (long i = 0; i < n; ++i) pn *= p;
      std::size_t expect = 1 + (p + 1) * (pn - 1) / (p - 1);
      CHECK(ball_size(p, n) == expect);
      auto b = ball(p, n);
      CHECK(b.size() == expect);
      CHECK(std::set<Vertex>(b.begin(), b.end()).size() == expect);
      for (const auto& v : b) CHECK(v.distance() <= n);
    }
}

TEST_CASE("vertex_of agrees with lattice distance and KZ cosets") {
  std::mt19937_64 rng(2);
  for (std::uint32_t p : {3u, 5u}) {
    for (int t = 0; t < 100; ++t) {
      GMat g = random_gl2(rng, p), h = random_gl2(rng, p);
      VertexInfo vg = vertex_of(g);
      CHECK(vg.distance == lattice_distance(g));
      CHECK(vg.parity == int(((g.det_valuation() % 2) + 2) % 2));
      // Same vertex iff g^-1 h lies in KZ.
      CHECK((vg.vertex == vertex_of(h).vertex) == member(g.inv() * h, "KZ"));
      auto [c, k] = kz_factor(g);
      CHECK(c * k == g);
      CHECK(member(k, "KZ"));
      CHECK(c == vg.vertex.rep());
      CHECK(distance(vg.vertex, vertex_of(h).vertex) == lattice_distance(g.inv() * h));
      CHECK(Vertex::parse(p, vg.vertex.str()) == vg.vertex);
    }
  }
}

TEST_CASE("neighbors are the p+1 vertices at distance one") {
  for (std::uint32_t p : {3u, 5u})
    for (const auto& v : ball(p, 2)) {
      auto nb = neighbors(v);
      CHECK(nb.size() == p + 1);
      CHECK(std::set<Vertex>(nb.begin(), nb.end()).size() == p + 1);
      for (const auto& w : nb) {
        CHECK(distance(v, w) == 1);
        CHECK(lattice_distance(v.rep().inv() * w.rep()) == 1);
      }
    }
}

TEST_CASE("tree distance is a metric on a small ball") {
  auto b = ball(3, 2);
  for (const auto& x : b)
    for (const auto& y : b) {
      CHECK(distance(x, y) == distance(y, x));
      CHECK((distance(x, y) == 0) == (x == y));
      for (std::size_t i = 0; i < b.size(); i += 5) CHECK(distance(x, y) <= distance(x, b[i]) + distance(b[i], y));
    }
}

TEST_CASE("named alphabets and generator sets") {
  for (std::uint32_t p : {3u, 5u}) {
    for (const GMat& g : generators("IS1", p)) CHECK(member(g, "IS1"));
    for (const GMat& g : generators("I1", p)) CHECK(member(g, "I1"));
    for (const GMat& g : generators("torus_units", p)) CHECK(member(g, "IS"));
    CHECK(generators("R1", p).size() == p);
    CHECK(generators("R2", p).size() == p * p);
    for (const char* name : {"SL2_default", "SL2_wide", "SL2_tree"})
      for (const auto& l : Alphabet::named(name, p).letters()) CHECK(member(l.g, "SL2"));
    CHECK_THROWS_AS(Alphabet::named("nope", p), UnknownName);
    CHECK_THROWS_AS(Alphabet({{"a", mat_alpha(p)}}, "SL2"), OutOfSubgroup);
  }
  CHECK(primitive_root(7) == 3);
  CHECK(least_nonsquare(7) == 3);
  CHECK(least_nonsquare(5) == 2);
  CHECK(representatives(3, 2).size() == 9);
}

TEST_CASE("word enumeration is deduplicated and spelled") {
  const std::uint32_t p = 3;
  Alphabet a = Alphabet::named("SL2_default", p);
  auto words = word_enum_spelled(a, 3);
  REQUIRE(!words.empty());
  CHECK(words.front().length == 0);
  CHECK(words.front().g == GMat::identity(p));
  std::set<GMat> seen;
  for (const auto& w : words) {
    CHECK(seen.insert(w.g).second);
    CHECK(w.length <= 3);
  }
  // Every product of up to two letters appears.
  for (const auto& x : a.letters())
    for (const auto& y : a.letters()) CHECK(seen.count(x.g * y.g) == 1);
  CHECK(word_enum(a, 3).size() == words.size());
}
