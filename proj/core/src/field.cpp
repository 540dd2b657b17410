#include "modrep/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "modrep/errors.hpp"

namespace modrep {

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 20;

using Poly = std::vector<std::uint32_t>;  // low degree first

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& monic_low, std::uint32_t p) {
  const std::size_t k = monic_low.size();
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  // x^k = -sum monic_low[i] x^i
  for (std::size_t d = 2 * k - 1; d >= k; --d) {
    std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < k; ++i)
      prod[d - k + i] = (prod[d - k + i] + (p - c) * monic_low[i]) % p;
  }
  Poly out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = std::uint32_t(prod[i]);
  return out;
}

// True when monic g divides monic f (full coefficient lists, leading 1 last).
bool divides(const Poly& g_full, Poly f_full, std::uint32_t p) {
  const int dg = int(g_full.size()) - 1;
  for (int d = int(f_full.size()) - 1; d >= dg; --d) {
    std::uint64_t c = f_full[d];
    if (c == 0) continue;
    for (int i = 0; i <= dg; ++i)
      f_full[d - dg + i] = std::uint32_t((f_full[d - dg + i] + (p - c) * g_full[i]) % p);
  }
  for (int i = 0; i < dg; ++i)
    if (f_full[i] != 0) return false;
  return true;
}

bool irreducible(const Poly& low, std::uint32_t p) {
  const std::size_t k = low.size();
  Poly f_full = low;
  f_full.push_back(1);
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g(d + 1);
      std::uint64_t t = c;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = std::uint32_t(t % p);
        t /= p;
      }
      g[d] = 1;
      if (divides(g, f_full, p)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

const Field& Field::get(std::uint32_t p, unsigned k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, std::unique_ptr<Field>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = registry.find(key);
  if (it != registry.end()) return *it->second;
  if (!is_odd_prime(p)) throw DomainError("field characteristic must be an odd prime, got " + std::to_string(p));
  if (k == 0) throw DomainError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw DomainError("field order exceeds table limit");
  }
  auto* f = new Field(p, k);
  registry.emplace(key, std::unique_ptr<Field>(f));
  return *f;
}

Field::Field(std::uint32_t p, unsigned k) : p_(p), k_(k) {
  pw_.resize(k + 1);
  pw_[0] = 1;
  for (unsigned i = 1; i <= k; ++i) pw_[i] = pw_[i - 1] * p;
  q_ = pw_[k];

  // Least irreducible modulus in the order of its code sum c_i p^i.
  modulus_.assign(k, 0);
  if (k == 1) {
    modulus_[0] = 0;  // F_p itself; the modulus x is never used for reduction
  } else {
    for (std::uint32_t c = 0; c < q_; ++c) {
      Poly low(k);
      std::uint32_t t = c;
      for (unsigned i = 0; i < k; ++i) {
        low[i] = t % p;
        t /= p;
      }
      if (irreducible(low, p)) {
        modulus_ = low;
        break;
      }
    }
  }

  auto mulc = [&](code a, code b) -> code {
    if (k_ == 1) return code(std::uint64_t(a) * b % p_);
    return from_coeffs(poly_mulmod(coeffs(a), coeffs(b), modulus_, p_));
  };

  // Find a generator of the multiplicative group.
  log_.assign(q_, 0);
  exp_.assign(2 * (q_ - 1), 0);
  for (code g = 2; g < q_; ++g) {
    code x = 1;
    std::uint32_t ord = 0;
    do {
      x = mulc(x, g);
      ++ord;
    } while (x != 1 && ord < q_);
    if (ord == q_ - 1) {
      gen_ = g;
      break;
    }
  }
  if (q_ == 2) gen_ = 1;
  code x = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = x;
    exp_[i + q_ - 1] = x;
    log_[x] = i;
    x = mulc(x, gen_);
  }
}

Field::code Field::from_int(std::int64_t v) const {
  std::int64_t r = v % std::int64_t(p_);
  if (r < 0) r += p_;
  return code(r);
}

Field::code Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (c.size() > k_) throw DomainError("too many coefficients for field element");
  code out = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= p_) throw DomainError("coefficient out of range");
    out += c[i] * pw_[i];
  }
  return out;
}

std::vector<std::uint32_t> Field::coeffs(code a) const {
  std::vector<std::uint32_t> out(k_);
  for (unsigned i = 0; i < k_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

Field::code Field::add_slow(code a, code b) const {
  code out = 0;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * pw_[i];
    a /= p_;
    b /= p_;
  }
  return out;
}

Field::code Field::neg_slow(code a) const {
  code out = 0;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint32_t c = a % p_;
    out += (c ? p_ - c : 0) * pw_[i];
    a /= p_;
  }
  return out;
}

Field::code Field::inv(code a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(q_));
  std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : (q_ - 1) - l];
}

Field::code Field::pow(code a, std::int64_t n) const {
  if (a == 0) {
    if (n < 0) throw DivisionByZero("negative power of zero");
    return n == 0 ? 1 : 0;
  }
  std::int64_t m = std::int64_t(q_ - 1);
  std::int64_t e = (std::int64_t(log_[a]) * (n % m)) % m;
  if (e < 0) e += m;
  return exp_[std::size_t(e)];
}

std::optional<Field::code> Field::sqrt(code a) const {
  if (a == 0) return code(0);
  std::uint32_t l = log_[a];
  if (l % 2 != 0) return std::nullopt;
  code r = exp_[l / 2];
  code s = neg(r);
  return r < s ? r : s;
}

std::string Field::format(code a) const {
  if (k_ == 1) return std::to_string(a);
  std::ostringstream os;
  auto c = coeffs(a);
  for (unsigned i = 0; i < k_; ++i) {
    if (i) os << ',';
    os << c[i];
  }
  return os.str();
}

Field::code Field::parse(const std::string& text) const {
  std::vector<std::uint32_t> c;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(part, &used);
      if (used != part.size()) throw ParseError("bad field literal: " + text);
      c.push_back(std::uint32_t(from_int(v)));
    } catch (const std::logic_error&) {
      throw ParseError("bad field literal: " + text);
    }
  }
  if (c.empty()) throw ParseError("empty field literal");
  return from_coeffs(c);
}

std::string Field::modulus_string() const {
  std::ostringstream os;
  os << "t^" << k_;
  for (int i = int(k_) - 1; i >= 0; --i) {
    if (modulus_[i] == 0) continue;
    os << " + " << modulus_[i];
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

void Fq::check(const Fq& o) const {
  if (f_ != o.f_) throw ContextMismatch("field elements from different contexts");
}

std::optional<Fq> Fq::sqrt() const {
  auto r = f_->sqrt(v_);
  if (!r) return std::nullopt;
  return Fq(*f_, *r);
}

}  // namespace modrep
