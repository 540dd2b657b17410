#pragma once
/// @file gmat.hpp
/// Exact invertible 2x2 matrices over Q_p scalars and subgroup predicates.

#include <array>
#include <string>
#include <vector>

#include "modrep/pexact.hpp"

namespace modrep {

class GMat {
 public:
  GMat() = default;
  /// Throws DomainError when the determinant vanishes.
  GMat(PExact a, PExact b, PExact c, PExact d);
  GMat(std::uint32_t p, long a, long b, long c, long d);

  static GMat identity(std::uint32_t p);
  static GMat diag(const PExact& x, const PExact& y);

  std::uint32_t prime() const { return a_.prime(); }
  const PExact& a() const { return a_; }
  const PExact& b() const { return b_; }
  const PExact& c() const { return c_; }
  const PExact& d() const { return d_; }
  const PExact& det() const { return det_; }
  long det_valuation() const { return det_.valuation(); }
  /// Minimum valuation over nonzero entries.
  long min_valuation() const;

  GMat operator*(const GMat& o) const;
  GMat inv() const;
  GMat scaled(const PExact& x) const;
  GMat pow(long n) const;

  bool operator==(const GMat& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
  }
  bool operator!=(const GMat& o) const { return !(*this == o); }
  /// Deterministic total order (entrywise, a, b, c, d).
  bool operator<(const GMat& o) const;

  /// Literal `[[a, b],[c, d]]` with PExact entries (`n`, `n/d`, `n@e`).
  std::string str() const;
  static GMat parse(std::uint32_t p, const std::string& text);

 private:
  PExact a_, b_, c_, d_, det_;
};

// Named elements.
GMat mat_u(const PExact& x);                    // (1 x; 0 1)
GMat mat_u(std::uint32_t p, long x);
GMat mat_l(const PExact& x);                    // (1 0; x 1)
GMat mat_l(std::uint32_t p, long x);
GMat mat_t(const PExact& x);                    // diag(x, 1/x)
GMat mat_s(std::uint32_t p);                    // (0 -1; 1 0)
GMat mat_s_prime(std::uint32_t p);              // (1 1; -1 0)
GMat mat_alpha0(std::uint32_t p);               // diag(p, 1/p)
GMat mat_beta0(std::uint32_t p);                // (0 -1/p; p 0)
GMat mat_alpha(std::uint32_t p);                // diag(1, p)
GMat mat_beta(std::uint32_t p);                 // (0 1; p 0)
GMat mat_omega(std::uint32_t p);                // (0 1; 1 0)
/// (0 1/p; -p 0), carries [alpha, y^r] to the other parity class.
GMat mat_w(std::uint32_t p);

/// Subgroup names: K, KZ, Z, I, I1, Km, KS, IS, IS1, KSm, B, BS, TS, U, SL2, GL2.
/// `m` is the congruence level for Km / KSm.
bool member(const GMat& g, const std::string& subgroup, int m = 1);
const std::vector<std::string>& subgroup_names();

}  // namespace modrep
