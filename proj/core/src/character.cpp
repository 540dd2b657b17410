#include "modrep/character.hpp"

#include <cctype>

#include "modrep/errors.hpp"

namespace modrep {

SmoothCharacter::SmoothCharacter(const Field& f, long a, Field::code vp) : f_(&f), vp_(vp) {
  if (vp == 0) throw DegenerateCharacter("character value at p must be nonzero");
  const long m = long(f.p()) - 1;
  a_ = ((a % m) + m) % m;
}

SmoothCharacter SmoothCharacter::mu(const Field& f, Field::code lambda) {
  if (lambda == 0) throw DegenerateCharacter("mu(lambda) needs lambda != 0");
  return SmoothCharacter(f, 0, lambda);
}

Field::code SmoothCharacter::eval_unit(long u) const {
  Field::code ub = f_->from_int(u);
  if (ub == 0) throw DomainError("character evaluated on a non-unit residue");
  return f_->pow(ub, a_);
}

Field::code SmoothCharacter::eval(const PExact& x) const {
  if (x.is_zero()) throw DomainError("character evaluated at zero");
  Field::code u = f_->pow(f_->from_int(long(x.unit_mod(1).get_si())), a_);
  return f_->mul(f_->pow(vp_, x.valuation()), u);
}

Field::code SmoothCharacter::eval_int(long x) const { return eval(PExact(f_->p(), x)); }

SmoothCharacter SmoothCharacter::operator*(const SmoothCharacter& o) const {
  if (f_ != o.f_) throw ContextMismatch("characters over different fields");
  return SmoothCharacter(*f_, a_ + o.a_, f_->mul(vp_, o.vp_));
}

SmoothCharacter SmoothCharacter::inverse() const { return SmoothCharacter(*f_, -a_, f_->inv(vp_)); }

std::string SmoothCharacter::str() const {
  if (is_trivial()) return "1";
  std::string s;
  if (a_ != 0) s = "omega^" + std::to_string(a_);
  if (vp_ != f_->one()) {
    if (!s.empty()) s += " * ";
    s += "mu(" + f_->format(vp_) + ")";
  }
  return s;
}

SmoothCharacter SmoothCharacter::parse(const Field& f, const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw ParseError("empty character literal");
  if (t == "1") return trivial(f);
  long a = 0;
  Field::code vp = f.one();
  std::size_t pos = 0;
  while (pos < t.size()) {
    auto star = t.find('*', pos);
    std::string factor = t.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    pos = star == std::string::npos ? t.size() : star + 1;
    try {
      if (factor.rfind("omega^", 0) == 0) {
        std::size_t used = 0;
        a += std::stol(factor.substr(6), &used);
        if (used != factor.size() - 6) throw ParseError("bad exponent");
      } else if (factor == "omega") {
        a += 1;
      } else if (factor.rfind("mu(", 0) == 0 && factor.back() == ')') {
        vp = f.mul(vp, f.parse(factor.substr(3, factor.size() - 4)));
      } else {
        throw ParseError("unknown factor");
      }
    } catch (const std::logic_error&) {
      throw ParseError("bad character literal: " + text);
    } catch (const ParseError&) {
      throw ParseError("bad character literal: " + text);
    }
  }
  if (vp == 0) throw DegenerateCharacter("mu(0) is not a character");
  return SmoothCharacter(f, a, vp);
}

}  // namespace modrep
