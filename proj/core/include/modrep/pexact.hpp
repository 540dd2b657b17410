#pragma once
/// @file pexact.hpp
/// Exact p-adic scalars: rationals written as p^e * (unit), p dividing neither
/// numerator nor denominator of the unit part.
///
/// Denominators prime to p are allowed so that GL2 elements with unit
/// determinant other than +-p^n (diag(u, 1), the torus t(lambda)) have exact
/// inverses.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace modrep {

class PExact {
 public:
  PExact() = default;
  PExact(std::uint32_t p, long value);
  PExact(std::uint32_t p, const mpq_class& value);
  static PExact zero(std::uint32_t p) { return PExact(p, 0L); }
  static PExact one(std::uint32_t p) { return PExact(p, 1L); }
  /// num * p^e
  static PExact pow_p(std::uint32_t p, long e, long num = 1);

  std::uint32_t prime() const { return p_; }
  bool is_zero() const { return unit_ == 0; }
  /// v_p(x); zero has valuation 0 by the canonical-form convention.
  long valuation() const { return e_; }
  const mpq_class& unit() const { return unit_; }
  mpq_class value() const;
  bool is_integral() const { return is_zero() || e_ >= 0; }
  bool is_unit() const { return !is_zero() && e_ == 0; }
  bool is_integer() const;

  /// Unit part reduced mod p^m, in [0, p^m). Throws DomainError on zero.
  mpz_class unit_mod(unsigned m) const;
  /// x mod p^m for integral x, in [0, p^m).
  mpz_class residue(unsigned m) const;
  /// Residue class mod p of a unit or integral element, as 0..p-1.
  std::uint32_t reduce_mod_p() const;

  PExact operator+(const PExact& o) const;
  PExact operator-(const PExact& o) const;
  PExact operator*(const PExact& o) const;
  PExact operator/(const PExact& o) const;
  PExact operator-() const;
  PExact inv() const;
  PExact shifted(long k) const;  // x * p^k

  bool operator==(const PExact& o) const { return p_ == o.p_ && e_ == o.e_ && unit_ == o.unit_; }
  bool operator!=(const PExact& o) const { return !(*this == o); }
  /// Total order by (is_zero, valuation, unit value); deterministic, not numeric.
  int compare(const PExact& o) const;
  bool operator<(const PExact& o) const { return compare(o) < 0; }

  /// Literal forms: "n", "n/d", "n@e", "n/d@e" meaning (n/d) * p^e.
  std::string str() const;
  static PExact parse(std::uint32_t p, const std::string& text);
  std::size_t hash() const;

 private:
  void normalize();
  void check(const PExact& o) const;
  std::uint32_t p_ = 0;
  long e_ = 0;
  mpq_class unit_;
};

}  // namespace modrep
