#pragma once
/// @file tree.hpp
/// Vertices of the Bruhat-Tits tree of PGL2(Q_p) in canonical form.
///
/// The vertex (a, b) is the homothety class of the lattice spanned by the
/// columns of (p^a b; 0 1), with b = 0 or b = N p^e, e < a, p not dividing N
/// and 0 < N < p^(a-e). The origin is (0, 0).

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "modrep/gmat.hpp"

namespace modrep {

struct Vertex {
  long a = 0;
  PExact b;

  /// Canonical vertex of the lattice class of (p^a b; 0 1).
  static Vertex make(long a, const PExact& b);
  static Vertex origin(std::uint32_t p) { return Vertex{0, PExact::zero(p)}; }

  std::uint32_t prime() const { return b.prime(); }
  /// Canonical matrix representative (p^a b; 0 1).
  GMat rep() const;
  long distance() const;
  int parity() const { return int(((a % 2) + 2) % 2); }

  bool operator==(const Vertex& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Vertex& o) const { return !(*this == o); }
  /// Ordered by distance to the origin, then a, then b.
  bool operator<(const Vertex& o) const;
  std::string str() const;
  static Vertex parse(std::uint32_t p, const std::string& text);
};

struct VertexHash {
  std::size_t operator()(const Vertex& v) const { return v.b.hash() * 31u + std::hash<long>()(v.a); }
};

struct VertexInfo {
  Vertex vertex;
  long distance;
  int parity;
};

VertexInfo vertex_of(const GMat& g);
/// g = c k with c = vertex_of(g).rep() and k in KZ.
std::pair<GMat, GMat> kz_factor(const GMat& g);
/// The p+1 neighbors, ordered as (a+1, b + j p^a) for j = 0..p-1, then (a-1, .).
std::vector<Vertex> neighbors(const Vertex& v);
long distance(const Vertex& v, const Vertex& w);
/// All vertices at distance <= n from the origin, sorted.
std::vector<Vertex> ball(std::uint32_t p, long n);
std::size_t ball_size(std::uint32_t p, long n);

}  // namespace modrep
