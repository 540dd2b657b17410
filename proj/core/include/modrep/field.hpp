#pragma once
/// @file field.hpp
/// Finite fields F_{p^k} with table-driven arithmetic.
///
/// Elements are encoded as integers: the coefficient vector (c_0..c_{k-1})
/// relative to the modulus maps to sum c_i p^i. Contexts are interned, so a
/// context pointer identifies (p, k) uniquely and is valid for the process
/// lifetime.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace modrep {

bool is_odd_prime(std::uint64_t p);

class Field {
 public:
  using code = std::uint32_t;

  /// Interned context for F_{p^k}; throws DomainError for invalid (p, k).
  static const Field& get(std::uint32_t p, unsigned k = 2);

  std::uint32_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint32_t order() const { return q_; }
  /// Low coefficients c_0..c_{k-1} of the monic modulus.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string modulus_string() const;

  code zero() const { return 0; }
  code one() const { return 1; }
  code from_int(std::int64_t v) const;
  code from_coeffs(const std::vector<std::uint32_t>& c) const;
  std::vector<std::uint32_t> coeffs(code a) const;

  code add(code a, code b) const {
    if (k_ == 1) {
      code s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_slow(a, b);
  }
  code neg(code a) const { return k_ == 1 ? (a ? p_ - a : 0) : neg_slow(a); }
  code sub(code a, code b) const { return add(a, neg(b)); }
  code mul(code a, code b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  code inv(code a) const;  // throws DivisionByZero
  code div(code a, code b) const { return mul(a, inv(b)); }
  code pow(code a, std::int64_t n) const;
  /// a + b*c, the elimination kernel.
  code axpy(code a, code b, code c) const { return add(a, mul(b, c)); }

  bool is_square(code a) const { return a == 0 || log_[a] % 2 == 0; }
  std::optional<code> sqrt(code a) const;
  code generator() const { return gen_; }

  std::string format(code a) const;
  code parse(const std::string& text) const;

 private:
  Field(std::uint32_t p, unsigned k);
  code add_slow(code a, code b) const;
  code neg_slow(code a) const;

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pw_;  // p^i
  std::vector<std::uint32_t> log_;
  std::vector<code> exp_;  // length 2(q-1)
  code gen_ = 1;
};

/// A field element carrying its context.
class Fq {
 public:
  Fq() = default;
  Fq(const Field& f, Field::code v) : f_(&f), v_(v) {}
  static Fq of_int(const Field& f, std::int64_t v) { return Fq(f, f.from_int(v)); }

  const Field& field() const { return *f_; }
  const Field* context() const { return f_; }
  Field::code code() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fq operator+(const Fq& o) const { check(o); return Fq(*f_, f_->add(v_, o.v_)); }
  Fq operator-(const Fq& o) const { check(o); return Fq(*f_, f_->sub(v_, o.v_)); }
  Fq operator*(const Fq& o) const { check(o); return Fq(*f_, f_->mul(v_, o.v_)); }
  Fq operator/(const Fq& o) const { check(o); return Fq(*f_, f_->div(v_, o.v_)); }
  Fq operator-() const { return Fq(*f_, f_->neg(v_)); }
  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }
  Fq inv() const { return Fq(*f_, f_->inv(v_)); }
  Fq pow(std::int64_t n) const { return Fq(*f_, f_->pow(v_, n)); }
  std::optional<Fq> sqrt() const;

  bool operator==(const Fq& o) const { return f_ == o.f_ && v_ == o.v_; }
  bool operator!=(const Fq& o) const { return !(*this == o); }
  bool operator<(const Fq& o) const { return v_ < o.v_; }

  std::string str() const { return f_->format(v_); }

 private:
  void check(const Fq& o) const;
  const Field* f_ = nullptr;
  Field::code v_ = 0;
};

}  // namespace modrep
