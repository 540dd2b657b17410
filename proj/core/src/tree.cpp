#include "modrep/tree.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

#include "modrep/errors.hpp"

namespace modrep {

namespace {

// Least valuation of b relevant to the lattice; zero behaves as +infinity.
bool below(const PExact& x, long bound) { return !x.is_zero() && x.valuation() < bound; }

}  // namespace

Vertex Vertex::make(long a, const PExact& b) {
  const std::uint32_t p = b.prime();
  if (!below(b, a)) return Vertex{a, PExact::zero(p)};
  const long e = b.valuation();
  mpz_class n = b.unit_mod(unsigned(a - e));
  return Vertex{a, PExact(p, mpq_class(n)).shifted(e)};
}

GMat Vertex::rep() const {
  const std::uint32_t p = prime();
  return GMat(PExact::pow_p(p, a), b, PExact::zero(p), PExact::one(p));
}

long Vertex::distance() const {
  long m = std::min(a, 0L);
  if (!b.is_zero()) m = std::min(m, b.valuation());
  return a - 2 * m;
}

bool Vertex::operator<(const Vertex& o) const {
  long d = distance(), od = o.distance();
  if (d != od) return d < od;
  if (a != o.a) return a < o.a;
  return b < o.b;
}

std::string Vertex::str() const { return std::to_string(a) + " " + b.str(); }

Vertex Vertex::parse(std::uint32_t p, const std::string& text) {
  auto sp = text.find(' ');
  if (sp == std::string::npos) throw ParseError("vertex literal must be `a b`");
  long a = 0;
  try {
    a = std::stol(text.substr(0, sp));
  } catch (const std::logic_error&) {
    throw ParseError("bad vertex literal: " + text);
  }
  Vertex v = make(a, PExact::parse(p, text.substr(sp + 1)));
  if (v.b != PExact::parse(p, text.substr(sp + 1))) throw ParseError("vertex literal not canonical: " + text);
  return v;
}

VertexInfo vertex_of(const GMat& g) {
  PExact a = g.a(), b = g.b(), c = g.c(), d = g.d();
  // Column swap so that the bottom-right entry has minimal valuation.
  if (d.is_zero() || (!c.is_zero() && c.valuation() < d.valuation())) {
    std::swap(a, b);
    std::swap(c, d);
  }
  // Clear the bottom-left entry: col1 -= (c/d) col2 with c/d integral.
  PExact q = c / d;
  a = a - q * b;
  // Scale columns by units, then divide by p^t.
  const long t = d.valuation();
  const long s = a.valuation();
  b = (b / d.shifted(-t)).shifted(-t);
  Vertex v = Vertex::make(s - t, b);
  return VertexInfo{v, v.distance(), v.parity()};
}

std::pair<GMat, GMat> kz_factor(const GMat& g) {
  GMat c = vertex_of(g).vertex.rep();
  GMat k = c.inv() * g;
  assert(member(k, "KZ"));
  return {c, k};
}

std::vector<Vertex> neighbors(const Vertex& v) {
  const std::uint32_t p = v.prime();
  std::vector<Vertex> out;
  out.reserve(p + 1);
  PExact step = PExact::pow_p(p, v.a);
  for (std::uint32_t j = 0; j < p; ++j) out.push_back(Vertex::make(v.a + 1, v.b + step * PExact(p, long(j))));
  out.push_back(Vertex::make(v.a - 1, v.b));
  return out;
}

long distance(const Vertex& v, const Vertex& w) {
  return vertex_of(v.rep().inv() * w.rep()).distance;
}

std::vector<Vertex> ball(std::uint32_t p, long n) {
  std::vector<Vertex> out{Vertex::origin(p)};
  std::set<Vertex> seen{out.front()};
  std::size_t frontier = 0;
  for (long r = 0; r < n; ++r) {
    std::size_t end = out.size();
    for (std::size_t i = frontier; i < end; ++i)
      for (const auto& w : neighbors(out[i]))
        if (seen.insert(w).second) out.push_back(w);
    frontier = end;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ball_size(std::uint32_t p, long n) {
  if (n <= 0) return 1;
  std::size_t pn = 1;
  for (long i = 0; i < n; ++i) pn *= p;
  return 1 + (p + 1) * (pn - 1) / (p - 1);
}

}  // namespace modrep
