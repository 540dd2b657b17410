#include "modrep/pexact.hpp"

#include <functional>

#include "modrep/errors.hpp"

namespace modrep {

namespace {

mpz_class ppow(std::uint32_t p, unsigned m) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, m);
  return r;
}

}  // namespace

PExact::PExact(std::uint32_t p, long value) : p_(p), unit_(value) { normalize(); }

PExact::PExact(std::uint32_t p, const mpq_class& value) : p_(p), unit_(value) {
  unit_.canonicalize();
  normalize();
}

PExact PExact::pow_p(std::uint32_t p, long e, long num) {
  PExact x(p, num);
  if (!x.is_zero()) x.e_ += e;
  return x;
}

void PExact::normalize() {
  if (unit_ == 0) {
    e_ = 0;
    return;
  }
  mpz_class pz(p_);
  mpz_class& num = unit_.get_num();
  mpz_class& den = unit_.get_den();
  e_ += long(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()));
  e_ -= long(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()));
}

void PExact::check(const PExact& o) const {
  if (p_ != o.p_) throw ContextMismatch("p-adic scalars with different primes");
}

mpq_class PExact::value() const {
  if (is_zero()) return 0;
  mpq_class r = unit_;
  mpz_class pk = ppow(p_, unsigned(e_ >= 0 ? e_ : -e_));
  if (e_ >= 0)
    r *= pk;
  else
    r /= pk;
  return r;
}

bool PExact::is_integer() const { return is_zero() || (e_ >= 0 && unit_.get_den() == 1); }

mpz_class PExact::unit_mod(unsigned m) const {
  if (is_zero()) throw DomainError("unit part of zero");
  mpz_class mod = ppow(p_, m);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), unit_.get_den().get_mpz_t(), mod.get_mpz_t());
  mpz_class r = unit_.get_num() * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return r;
}

mpz_class PExact::residue(unsigned m) const {
  if (!is_integral()) throw DomainError("residue of a non-integral p-adic scalar");
  if (is_zero() || e_ >= long(m)) return 0;
  return unit_mod(unsigned(long(m) - e_)) * ppow(p_, unsigned(e_));
}

std::uint32_t PExact::reduce_mod_p() const {
  return std::uint32_t(residue(1).get_ui());
}

PExact PExact::operator+(const PExact& o) const {
  check(o);
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const PExact& lo = e_ <= o.e_ ? *this : o;
  const PExact& hi = e_ <= o.e_ ? o : *this;
  PExact r;
  r.p_ = p_;
  r.e_ = lo.e_;
  r.unit_ = lo.unit_ + hi.unit_ * ppow(p_, unsigned(hi.e_ - lo.e_));
  r.normalize();
  return r;
}

PExact PExact::operator-() const {
  PExact r = *this;
  r.unit_ = -r.unit_;
  return r;
}

PExact PExact::operator-(const PExact& o) const { return *this + (-o); }

PExact PExact::operator*(const PExact& o) const {
  check(o);
  if (is_zero() || o.is_zero()) return zero(p_);
  PExact r;
  r.p_ = p_;
  r.e_ = e_ + o.e_;
  r.unit_ = unit_ * o.unit_;  // product of p-units stays a p-unit
  return r;
}

PExact PExact::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero p-adic scalar");
  PExact r;
  r.p_ = p_;
  r.e_ = -e_;
  r.unit_ = 1 / unit_;
  return r;
}

PExact PExact::operator/(const PExact& o) const { return *this * o.inv(); }

PExact PExact::shifted(long k) const {
  PExact r = *this;
  if (!r.is_zero()) r.e_ += k;
  return r;
}

int PExact::compare(const PExact& o) const {
  if (is_zero() != o.is_zero()) return is_zero() ? -1 : 1;
  if (e_ != o.e_) return e_ < o.e_ ? -1 : 1;
  return cmp(unit_, o.unit_);
}

std::string PExact::str() const {
  if (is_zero()) return "0";
  std::string s = unit_.get_num().get_str();
  if (unit_.get_den() != 1) s += "/" + unit_.get_den().get_str();
  if (e_ != 0) s += "@" + std::to_string(e_);
  return s;
}

PExact PExact::parse(std::uint32_t p, const std::string& text) {
  std::string body = text;
  long e = 0;
  auto at = text.find('@');
  try {
    if (at != std::string::npos) {
      body = text.substr(0, at);
      std::size_t used = 0;
      std::string es = text.substr(at + 1);
      e = std::stol(es, &used);
      if (used != es.size()) throw ParseError("bad exponent");
    }
    mpq_class q;
    if (q.set_str(body, 10) != 0) throw ParseError("bad rational");
    if (q.get_den() == 0) throw ParseError("zero denominator");
    q.canonicalize();
    PExact x(p, q);
    return x.shifted(e);
  } catch (const std::logic_error&) {
    throw ParseError("bad p-adic literal: " + text);
  } catch (const ParseError&) {
    throw ParseError("bad p-adic literal: " + text);
  }
}

std::size_t PExact::hash() const {
  std::size_t h = std::hash<long>()(e_);
  h ^= mpz_get_ui(unit_.get_num().get_mpz_t()) * 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= mpz_get_ui(unit_.get_den().get_mpz_t()) + 0x7f4a7c15ull + (h << 6) + (h >> 2);
  if (unit_ < 0) h = ~h;
  return h;
}

}  // namespace modrep
