// Principal series: windowed functions, the group action, named vectors,
// identities, the Steinberg model and generation evidence.

#include <random>

#include "doctest.h"
#include "modrep/errors.hpp"
#include "modrep/pseries.hpp"
#include "modrep/suites.hpp"

using namespace modrep;

namespace {

JFunc random_jfunc(std::mt19937_64& rng, const SmoothCharacter& eta, int M, int N) {
  const Field& f = eta.field();
  return JFunc::from_points(eta, M, N, [&](const PExact&) { return Field::code(rng() % f.order()); },
                            Field::code(rng() % f.order()));
}

GMat random_sl2(std::mt19937_64& rng, std::uint32_t p) {
  GMat g = GMat::identity(p);
  for (int i = 0; i < 3; ++i) {
    switch (rng() % 4) {
      case 0: g = g * mat_s(p); break;
      case 1: g = g * mat_u(PExact(p, long(rng() % 25)).shifted(-long(rng() % 2))); break;
      case 2: g = g * mat_l(PExact(p, long(rng() % 25)).shifted(long(rng() % 2))); break;
      default: g = g * mat_t(PExact(p, long(1 + rng() % (p - 1))).shifted(long(rng() % 3) - 1)); break;
    }
  }
  return g;
}

PExact random_point(std::mt19937_64& rng, std::uint32_t p) {
  if (rng() % 8 == 0) return PExact::zero(p);
  return PExact(p, long(1 + rng() % 500)).shifted(long(rng() % 9) - 4);
}

std::vector<SmoothCharacter> characters(std::uint32_t p) {
  const Field& f = Field::get(p, 2);
  std::vector<SmoothCharacter> out{SmoothCharacter::trivial(f), SmoothCharacter(f, 0, f.generator()),
                                   SmoothCharacter(f, 0, f.neg(f.one())), SmoothCharacter(f, 1, f.one())};
  if (p > 3) out.push_back(SmoothCharacter(f, 2, f.generator()));
  return out;
}

}  // namespace

TEST_CASE("windowed functions: tail law, refinement and parsing") {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {3u, 5u})
    for (const auto& eta : characters(p)) {
      const Field& f = eta.field();
      JFunc phi = random_jfunc(rng, eta, 1, 1);
      CHECK(phi.cells() == std::size_t(p) * p);
      JFunc fine = phi.refined(3, 2);
      CHECK(fine == phi);
      CHECK(fine.coarsened() == phi);
      CHECK(fine.coarsened().cells() <= phi.cells());
      CHECK(JFunc::parse(f, phi.str()) == phi);
      for (int t = 0; t < 40; ++t) {
        PExact x = random_point(rng, p);
        CHECK(fine.at(x) == phi.at(x));
        if (!x.is_zero() && x.valuation() < -1)
          CHECK(phi.at(x) == f.mul(phi.tail_constant(), eta.eval(x.inv())));
      }
      CHECK(phi + phi.scaled(f.neg(f.one())) == JFunc::zero(eta));
      CHECK_THROWS_AS(JFunc(eta, 1, 1, {0, 1}, 0), ShapeError);
    }
}

TEST_CASE("action agrees with the induced-model definition pointwise") {
  // (g phi)(x) = f(s u(x) g) where f is phi's function on SL2; f(s u(x)) = phi(x).
  std::mt19937_64 rng(2);
  for (std::uint32_t p : {3u, 5u})
    for (const auto& eta : characters(p)) {
      for (int t = 0; t < 8; ++t) {
        JFunc phi = random_jfunc(rng, eta, 1, 1);
        for (int i = 0; i < 10; ++i) {
          PExact x = random_point(rng, p);
          CHECK(eval_ind(phi, mat_s(p) * mat_u(x)) == phi.at(x));
        }
        GMat g = random_sl2(rng, p);
        JFunc gphi = act_ps(g, phi);
        for (int i = 0; i < 20; ++i) {
          PExact x = random_point(rng, p);
          CHECK(gphi.at(x) == eval_ind(phi, mat_s(p) * mat_u(x) * g));
        }
      }
    }
}

TEST_CASE("action law, s^2 and the Borel law") {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {3u, 5u})
    for (const auto& eta : characters(p)) {
      const Field& f = eta.field();
      for (int t = 0; t < 6; ++t) {
        JFunc phi = random_jfunc(rng, eta, 1, 1);
        GMat g = random_sl2(rng, p), h = random_sl2(rng, p);
        CHECK(act_ps(g, act_ps(h, phi)) == act_ps(g * h, phi));
        CHECK(act_ps(mat_s(p), act_ps(mat_s(p), phi)) == phi.scaled(eta.eval(PExact(p, -1L))));
        PExact a = PExact(p, long(1 + rng() % (p - 1))).shifted(long(rng() % 3) - 1);
        GMat b(a, PExact(p, long(rng() % 9)), PExact::zero(p), a.inv());
        CHECK(eval_ind(phi, b * g) == f.mul(eta.eval(a), eval_ind(phi, g)));
      }
    }
}

TEST_CASE("window overflow is reported with the needed size") {
  const Field& f = Field::get(5, 2);
  SmoothCharacter eta(f, 0, f.generator());
  JFunc phi = make_basis("indicator:3", eta);
  CHECK_THROWS_AS(act_ps(mat_alpha0(5).inv(), phi, 4), WindowOverflow);
  CHECK_THROWS_AS(act_ps(mat_alpha(5), phi), DomainError);
}

TEST_CASE("named vectors: normalization and pro-p Iwahori invariance") {
  for (std::uint32_t p : {3u, 5u}) {
    const Field& f = Field::get(p, 2);
    for (const auto& eta : characters(p)) {
      JFunc l1 = make_basis("ell1", eta), l2 = make_basis("ell2", eta);
      CHECK(iwahori_pair(l1) == std::pair<Field::code, Field::code>{1, 0});
      CHECK(iwahori_pair(l2) == std::pair<Field::code, Field::code>{0, 1});
      for (const GMat& g : generators("IS1", p)) {
        CHECK(act_ps(g, l1) == l1);
        CHECK(act_ps(g, l2) == l2);
      }
      if (eta.unramified()) {
        JFunc f0 = make_basis("f0", eta);
        CHECK(f0 == make_basis("phi0", eta));
        for (const GMat& g : {mat_s(p), mat_u(p, 1), mat_t(PExact(p, primitive_root(p)))}) CHECK(act_ps(g, f0) == f0);
        CHECK(make_basis("f1", eta) + make_basis("f2", eta).scaled(eval_ind(f0, mat_beta0(p))) == f0);
      } else {
        CHECK_THROWS_AS(make_basis("f0", eta), CharacterMismatch);
      }
    }
    CHECK_THROWS_AS(make_basis("nope", SmoothCharacter::trivial(f)), UnknownName);
  }
}

TEST_CASE("identity suite holds for unramified and ramified characters") {
  for (std::uint32_t p : {3u, 5u}) {
    const Field& f = Field::get(p, 2);
    for (Field::code lam : default_lambdas(f)) {
      for (long a = 0; a < long(p) - 1; ++a) {
        SmoothCharacter eta(f, a, f.inv(lam));
        auto ids = identity_suite(eta);
        CHECK(!ids.empty());
        for (const auto& c : ids) {
          INFO(p, " a=", a, " Lambda=", f.format(lam), " ", c.name, ": ", c.details);
          CHECK(c.pass);
        }
      }
    }
  }
}

TEST_CASE("the projective line model: action law and orbits") {
  std::mt19937_64 rng(4);
  for (std::uint32_t p : {3u, 5u}) {
    const Field& f = Field::get(p, 2);
    for (int N : {1, 2}) {
      const std::size_t n = P1Func::cell_count(p, N);
      std::vector<Field::code> vals(n);
      for (auto& v : vals) v = Field::code(rng() % f.order());
      P1Func phi(f, N, vals);
      CHECK(P1Func::parse(f, phi.str()) == phi);
      for (int t = 0; t < 10; ++t) {
        GMat g(p, long(rng() % 50), long(rng() % 50), long(rng() % 50), long(rng() % 50));
        if (!member(g, "K")) continue;
        GMat h = mat_s(p) * mat_u(p, long(rng() % 9));
        CHECK(phi.act(h).act(g) == phi.act(g * h));
        // (g f)([c : d]) = f([c : d] g) at sample points.
        for (int i = 0; i < 10; ++i) {
          PExact c(p, long(rng() % 30)), d(p, long(rng() % 30));
          if (c.is_zero() && d.is_zero()) continue;
          PExact c2 = c * g.a() + d * g.c(), d2 = c * g.b() + d * g.d();
          CHECK(phi.act(g).values()[phi.cell_of(c, d)] == phi.values()[phi.cell_of(c2, d2)]);
          PExact u(p, long(1 + rng() % 40));
          CHECK(phi.cell_of(c * u, d * u) == phi.cell_of(c, d));
        }
      }
      CHECK_THROWS_AS(phi.act(mat_alpha0(p)), OutOfSubgroup);
      CHECK_THROWS_AS(P1Func(f, N, std::vector<Field::code>(n + 1)), ShapeError);
    }
  }
}

TEST_CASE("Steinberg invariants: two chart indicators, one class mod constants") {
  for (std::uint32_t p : {3u, 5u})
    for (int N : {2, 3}) {
      SteinbergInvariants s = sp_invariants(p, N);
      CHECK(s.invariant_dim == 2);
      CHECK(s.quotient_dim == 1);
      CHECK(s.chart_indicators);
      // Independent count: the fixed space of permutations has one dimension per orbit.
      const Field& f = Field::get(p, 2);
      std::vector<SparseMat> ops;
      for (const GMat& g : generators("IS1", p)) ops.push_back(p1_action_matrix(f, N, g));
      CHECK(fixed_space(f, P1Func::cell_count(p, N), ops).size() == 2);
    }
}

TEST_CASE("translation ladder passes and p vanishes in the coefficients") {
  for (std::uint32_t p : {3u, 5u})
    for (int levels = 1; levels <= 3; ++levels) {
      LadderReport l = seulquo_ladder(Field::get(p, 2), levels);
      CHECK(l.pass());
      CHECK(l.swap_pass);
      CHECK(l.q_vanishes);
      CHECK(l.steps.size() == std::size_t(levels) + 1);
    }
}

TEST_CASE("generation evidence at p = 3") {
  const Field& f = Field::get(3, 2);
  Alphabet a = Alphabet::named("SL2_default", 3);
  SmoothCharacter nontrivial(f, 0, f.neg(f.one())), ramified(f, 1, f.one()), one = SmoothCharacter::trivial(f);
  GenerationReport g1 = generation_check({make_basis("f0", nontrivial)}, a, 12, 1, 1);
  CHECK(g1.window_dim == 10);
  CHECK(g1.fills());
  GenerationReport g2 = generation_check({make_basis("ell1", ramified), make_basis("ell2", ramified)}, a, 12, 1, 1);
  CHECK(g2.fills());
  GenerationReport g3 = generation_check({JFunc(one, 0, 0, {f.one()}, f.one())}, a, 12, 1, 1);
  CHECK(g3.span_dim == 1);
}

TEST_CASE("restriction from GL2 follows the Borel law") {
  const Field& f = Field::get(5, 2);
  SmoothCharacter e1(f, 1, f.generator()), e2(f, 3, f.one());
  RestrictionReport r = restrict_gl2(e1, e2, 1, 1);
  CHECK(r.borel_law);
  CHECK(r.eta == e1 * e2.inverse());
  CHECK(r.gl2_dim == r.sl2_dim);
}
