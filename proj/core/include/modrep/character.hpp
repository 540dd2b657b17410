#pragma once

#include <string>

#include "modrep/field.hpp"
#include "modrep/pexact.hpp"

namespace modrep {

/// Tame character of Q_p^x: x = p^v u maps to vp^v * (u mod p)^a.
class SmoothCharacter {
 public:
  SmoothCharacter(const Field& f, long a, Field::code vp);

  static SmoothCharacter trivial(const Field& f) { return SmoothCharacter(f, 0, f.one()); }
  static SmoothCharacter omega_pow(const Field& f, long a) { return SmoothCharacter(f, a, f.one()); }
  /// Unramified, p -> lambda. Throws DegenerateCharacter for lambda = 0.
  static SmoothCharacter mu(const Field& f, Field::code lambda);

  const Field& field() const { return *f_; }
  long exponent() const { return a_; }
  Field::code value_at_p() const { return vp_; }
  /// Lambda = eta(1/p).
  Field::code big_lambda() const { return f_->inv(vp_); }
  bool unramified() const { return a_ == 0; }
  bool is_trivial() const { return a_ == 0 && vp_ == f_->one(); }

  /// Throws DomainError on zero.
  Field::code eval(const PExact& x) const;
  /// Value on an integer unit residue.
  Field::code eval_unit(long u) const;
  Field::code eval_int(long x) const;

  SmoothCharacter operator*(const SmoothCharacter& o) const;
  SmoothCharacter inverse() const;
  bool operator==(const SmoothCharacter& o) const {
    return f_ == o.f_ && a_ == o.a_ && vp_ == o.vp_;
  }
  bool operator!=(const SmoothCharacter& o) const { return !(*this == o); }

  /// `omega^a * mu(c0,...,c(k-1))`; either factor may be omitted, `1` is trivial.
  std::string str() const;
  static SmoothCharacter parse(const Field& f, const std::string& text);

 private:
  const Field* f_;
  long a_;
  Field::code vp_;
};

}  // namespace modrep
