#include "modrep/supersingular.hpp"

#include <algorithm>
#include <set>

#include "modrep/errors.hpp"

namespace modrep {

const char* side_name(Side s) { return s == Side::infty ? "infty" : "zero"; }

Side parse_side(const std::string& text) {
  if (text == "infty" || text == "inf" || text == "oo") return Side::infty;
  if (text == "0" || text == "zero") return Side::zero;
  throw ParseError("side must be infty or 0: " + text);
}

const char* status_name(InvStatus s) {
  switch (s) {
    case InvStatus::exact_fixed:
      return "exact_fixed";
    case InvStatus::fixed_mod_image:
      return "fixed_mod_image";
    case InvStatus::not_fixed_at_bound:
      return "not_fixed_at_bound";
  }
  return "?";
}

std::string Param::str() const { return "(" + std::to_string(r) + "," + side_name(side) + ")"; }

AppCRewrite decompose_appC(WeightPtr w, const GMat& g, Monomial m) {
  const std::uint32_t p = w->p();
  const Field& f = w->field();
  // [g, y^r] = [g s, x^r]
  GMat gx = m == Monomial::y_r ? g * mat_s(p) : g;
  const PExact& det = gx.det();
  const long e = det.valuation();
  const long ubar = long(det.unit_mod(1).get_si());
  bool square = false;
  for (long x = 1; x < long(p) && !square; ++x) square = x * x % long(p) == ubar;

  // gx = h diag(det, 1) with h in SL2.
  GMat h = gx * GMat::diag(det.inv(), PExact::one(p));
  const long half = e >= 0 ? e / 2 : -((-e + 1) / 2);  // floor(e / 2)
  AppCRewrite out{Side::infty, "", h, f.pow(f.from_int(ubar), w->r()), false};
  if (e - 2 * half == 0) {
    out.component = Side::infty;
    out.case_label = square ? "square" : "nonsquare-unit";
    out.h = h * mat_alpha0(p).pow(half);
  } else {
    out.component = Side::zero;
    out.case_label = square ? "p-square" : "p-nonsquare";
    out.h = h * mat_alpha0(p).pow(half + 1) * mat_w(p);
  }
  CIndElt base = out.component == Side::infty ? v_infty(w) : v_zero(w);
  CIndElt lhs = CIndElt::elementary(w, g, m == Monomial::x_r ? w->x_r() : w->y_r());
  out.verified = member(out.h, "SL2") && act(out.h, base).scaled(out.scalar) == lhs;
  return out;
}

std::vector<InvarianceEntry> invariance_report(const QuotientCtx& ctx, const CIndElt& v,
                                               const std::vector<Letter>& gens) {
  std::vector<InvarianceEntry> out;
  const long top = long(ctx.depth()) + ctx.slack();
  std::vector<std::unique_ptr<ImageSolver>> solvers(std::size_t(top + 1));
  for (const auto& gen : gens) {
    CIndElt diff = act(gen.g, v) - v;
    if (diff.is_zero()) {
      out.push_back({gen.name, InvStatus::exact_fixed, 0, 0});
      continue;
    }
    InvarianceEntry entry{gen.name, InvStatus::not_fixed_at_bound, top, 0};
    for (long b = std::max(0L, diff.max_distance() - 1); b <= top; ++b) {
      auto& s = solvers[std::size_t(b)];
      if (!s) s = std::make_unique<ImageSolver>(ctx.weight_ptr(), ctx.lambda(), b);
      if (auto wit = s->solve(diff)) {
        entry = {gen.name, InvStatus::fixed_mod_image, b, wit->support().size()};
        break;
      }
    }
    out.push_back(entry);
  }
  return out;
}

long iwahori_character(const CIndElt& v) {
  const Weight& w = v.weight();
  const Field& f = w.field();
  const std::uint32_t p = w.p();
  if (v.is_zero()) throw NotEigen("zero vector has no eigencharacter");
  const long g = primitive_root(p);
  CIndElt tv = act(mat_t(PExact(p, g)), v);
  // Read the eigenvalue off the first nonzero coordinate.
  const auto& [vert, vec] = *v.support().begin();
  auto it = tv.support().find(vert);
  std::size_t j = 0;
  while (vec[j] == 0) ++j;
  if (it == tv.support().end()) throw NotEigen("torus moves the support");
  Field::code ev = f.div(it->second[j], vec[j]);
  if (tv != v.scaled(ev)) throw NotEigen("not an eigenvector of the torus");
  const Field::code fg = f.from_int(g);
  long c = -1;
  for (long k = 0; k < long(p) - 1; ++k)
    if (f.pow(fg, k) == ev) {
      c = k;
      break;
    }
  if (c < 0) throw NotEigen("eigenvalue outside F_p^x");
  for (long l = 1; l < long(p); ++l)
    if (act(mat_t(PExact(p, l)), v) != v.scaled(f.pow(f.from_int(l), c)))
      throw NotEigen("torus eigenvalues not given by a single character");
  return c;
}

long expected_exponent(std::uint32_t p, Param x) {
  const long m = long(p) - 1;
  long e = x.side == Side::infty ? x.r : -x.r;
  return ((e % m) + m) % m;
}

IsoDecision decide_isomorphism(std::uint32_t p, Param x, Param y) {
  for (const Param& q : {x, y})
    if (q.r < 0 || q.r > int(p) - 1) throw RangeError("weight parameter outside 0..p-1");
  const int top = int(p) - 1;
  if (x == y) return {true, "identical parameters"};
  if (x.side != y.side && x.r + y.r == top) return {true, "side exchange r <-> p-1-r"};
  if (expected_exponent(p, x) != expected_exponent(p, y)) return {false, "Iwahori exponents differ"};
  // Equal exponents without an isomorphism only happen among weights 0 and
  // p-1; transport to the pair (0, infty) / (0, zero) and compare K_S-fixed lines.
  return {false, "K_S-invariant dimensions differ (1 vs 0 after side exchange)"};
}

std::vector<std::vector<Param>> packet(std::uint32_t p, int r) {
  if (r < 0 || r > int(p) - 1) throw RangeError("weight parameter outside 0..p-1");
  std::vector<std::vector<Param>> classes;
  for (Side s : {Side::infty, Side::zero}) {
    Param x{r, s};
    std::vector<Param> cls;
    for (int q = 0; q < int(p); ++q)
      for (Side t : {Side::infty, Side::zero})
        if (decide_isomorphism(p, x, Param{q, t}).isomorphic) cls.push_back({q, t});
    std::sort(cls.begin(), cls.end());
    if (std::find(classes.begin(), classes.end(), cls) == classes.end()) classes.push_back(cls);
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

}  // namespace modrep
