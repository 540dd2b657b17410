#include "modrep/gmat.hpp"

#include <algorithm>
#include <cctype>

#include "modrep/errors.hpp"

namespace modrep {

GMat::GMat(PExact a, PExact b, PExact c, PExact d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  det_ = a_ * d_ - b_ * c_;
  if (det_.is_zero()) throw DomainError("singular matrix");
}

GMat::GMat(std::uint32_t p, long a, long b, long c, long d)
    : GMat(PExact(p, a), PExact(p, b), PExact(p, c), PExact(p, d)) {}

GMat GMat::identity(std::uint32_t p) { return GMat(p, 1, 0, 0, 1); }

GMat GMat::diag(const PExact& x, const PExact& y) {
  PExact z = PExact::zero(x.prime());
  return GMat(x, z, z, y);
}

long GMat::min_valuation() const {
  long m = 0;
  bool seen = false;
  for (const PExact* x : {&a_, &b_, &c_, &d_}) {
    if (x->is_zero()) continue;
    if (!seen || x->valuation() < m) m = x->valuation();
    seen = true;
  }
  return m;
}

GMat GMat::operator*(const GMat& o) const {
  return GMat(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_,
              c_ * o.b_ + d_ * o.d_);
}

GMat GMat::inv() const {
  PExact di = det_.inv();
  return GMat(d_ * di, -b_ * di, -c_ * di, a_ * di);
}

GMat GMat::scaled(const PExact& x) const { return GMat(a_ * x, b_ * x, c_ * x, d_ * x); }

GMat GMat::pow(long n) const {
  GMat base = n < 0 ? inv() : *this;
  GMat r = identity(prime());
  for (long k = n < 0 ? -n : n; k > 0; k >>= 1) {
    if (k & 1) r = r * base;
    base = base * base;
  }
  return r;
}

bool GMat::operator<(const GMat& o) const {
  if (int c = a_.compare(o.a_)) return c < 0;
  if (int c = b_.compare(o.b_)) return c < 0;
  if (int c = c_.compare(o.c_)) return c < 0;
  return d_.compare(o.d_) < 0;
}

std::string GMat::str() const {
  return "[[" + a_.str() + ", " + b_.str() + "],[" + c_.str() + ", " + d_.str() + "]]";
}

GMat GMat::parse(std::uint32_t p, const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.size() < 4 || t.substr(0, 2) != "[[" || t.substr(t.size() - 2) != "]]")
    throw ParseError("matrix literal must look like [[a, b],[c, d]]");
  std::string body = t.substr(2, t.size() - 4);
  auto mid = body.find("],[");
  if (mid == std::string::npos) throw ParseError("matrix literal must have two rows");
  auto split = [&](const std::string& row) {
    auto comma = row.find(',');
    if (comma == std::string::npos || row.find(',', comma + 1) != std::string::npos)
      throw ParseError("matrix row must have two entries");
    return std::make_pair(PExact::parse(p, row.substr(0, comma)), PExact::parse(p, row.substr(comma + 1)));
  };
  auto [a, b] = split(body.substr(0, mid));
  auto [c, d] = split(body.substr(mid + 3));
  return GMat(a, b, c, d);
}

GMat mat_u(const PExact& x) {
  std::uint32_t p = x.prime();
  return GMat(PExact::one(p), x, PExact::zero(p), PExact::one(p));
}
GMat mat_u(std::uint32_t p, long x) { return mat_u(PExact(p, x)); }
GMat mat_l(const PExact& x) {
  std::uint32_t p = x.prime();
  return GMat(PExact::one(p), PExact::zero(p), x, PExact::one(p));
}
GMat mat_l(std::uint32_t p, long x) { return mat_l(PExact(p, x)); }
GMat mat_t(const PExact& x) { return GMat::diag(x, x.inv()); }
GMat mat_s(std::uint32_t p) { return GMat(p, 0, -1, 1, 0); }
GMat mat_s_prime(std::uint32_t p) { return GMat(p, 1, 1, -1, 0); }
GMat mat_alpha0(std::uint32_t p) { return GMat::diag(PExact::pow_p(p, 1), PExact::pow_p(p, -1)); }
GMat mat_beta0(std::uint32_t p) {
  return GMat(PExact::zero(p), PExact::pow_p(p, -1, -1), PExact::pow_p(p, 1), PExact::zero(p));
}
GMat mat_alpha(std::uint32_t p) { return GMat(p, 1, 0, 0, long(p)); }
GMat mat_beta(std::uint32_t p) { return GMat(p, 0, 1, long(p), 0); }
GMat mat_omega(std::uint32_t p) { return GMat(p, 0, 1, 1, 0); }
GMat mat_w(std::uint32_t p) {
  return GMat(PExact::zero(p), PExact::pow_p(p, -1), PExact::pow_p(p, 1, -1), PExact::zero(p));
}

namespace {

bool integral(const GMat& g) {
  return g.a().is_integral() && g.b().is_integral() && g.c().is_integral() && g.d().is_integral();
}
bool in_k(const GMat& g) { return integral(g) && g.det().is_unit(); }
bool det_one(const GMat& g) { return g.det() == PExact::one(g.prime()); }
bool at_least(const PExact& x, long m) { return x.is_zero() || x.valuation() >= m; }
bool in_iwahori(const GMat& g) { return in_k(g) && at_least(g.c(), 1); }
bool in_pro_p(const GMat& g) {
  PExact one = PExact::one(g.prime());
  return in_iwahori(g) && at_least(g.a() - one, 1) && at_least(g.d() - one, 1);
}
bool in_congruence(const GMat& g, int m) {
  PExact one = PExact::one(g.prime());
  return in_k(g) && at_least(g.a() - one, m) && at_least(g.b(), m) && at_least(g.c(), m) &&
         at_least(g.d() - one, m);
}

}  // namespace

const std::vector<std::string>& subgroup_names() {
  static const std::vector<std::string> names = {"K",  "KZ", "Z",  "I",  "I1", "Km",  "KS",  "IS",
                                                 "IS1", "KSm", "B", "BS", "TS", "U", "SL2", "GL2"};
  return names;
}

bool member(const GMat& g, const std::string& h, int m) {
  if (h == "GL2") return true;
  if (h == "SL2") return det_one(g);
  if (h == "K") return in_k(g);
  if (h == "KZ") return g.det_valuation() == 2 * g.min_valuation();
  if (h == "Z") return g.b().is_zero() && g.c().is_zero() && g.a() == g.d();
  if (h == "I") return in_iwahori(g);
  if (h == "I1") return in_pro_p(g);
  if (h == "Km") return in_congruence(g, m);
  if (h == "KS") return in_k(g) && det_one(g);
  if (h == "IS") return in_iwahori(g) && det_one(g);
  if (h == "IS1") return in_pro_p(g) && det_one(g);
  if (h == "KSm") return in_congruence(g, m) && det_one(g);
  if (h == "B") return g.c().is_zero();
  if (h == "BS") return g.c().is_zero() && det_one(g);
  if (h == "TS") return g.b().is_zero() && g.c().is_zero() && det_one(g);
  if (h == "U") {
    PExact one = PExact::one(g.prime());
    return g.c().is_zero() && g.a() == one && g.d() == one;
  }
  throw UnknownName("unknown subgroup: " + h);
}

}  // namespace modrep
