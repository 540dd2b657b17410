#include "modrep/words.hpp"

#include <algorithm>
#include <map>

#include "modrep/errors.hpp"

namespace modrep {

Alphabet::Alphabet(std::vector<Letter> letters, std::string subgroup)
    : letters_(std::move(letters)), subgroup_(std::move(subgroup)) {
  for (const auto& l : letters_)
    if (!member(l.g, subgroup_)) throw OutOfSubgroup("letter " + l.name + " not in " + subgroup_);
}

namespace {

std::vector<Letter> sl2_letters(std::uint32_t p) {
  return {{"s", mat_s(p)},
          {"a0", mat_alpha0(p)},
          {"a0i", mat_alpha0(p).inv()},
          {"u1", mat_u(p, 1)},
          {"u1/p", mat_u(PExact::pow_p(p, -1))}};
}

std::vector<Letter> gl2_letters(std::uint32_t p) {
  auto l = sl2_letters(p);
  l.push_back({"alpha", mat_alpha(p)});
  l.push_back({"beta", mat_beta(p)});
  l.push_back({"omega", mat_omega(p)});
  return l;
}

}  // namespace

Alphabet Alphabet::named(const std::string& name, std::uint32_t p) {
  if (name == "SL2_default") return Alphabet(sl2_letters(p), "SL2");
  if (name == "SL2_wide" || name == "SL2_tree") {
    std::vector<Letter> l = {{"s", mat_s(p)}, {"a0", mat_alpha0(p)}, {"a0i", mat_alpha0(p).inv()}};
    for (long j = 1; j < long(p); ++j) l.push_back({"u" + std::to_string(j), mat_u(p, j)});
    for (long j = 1; j < long(p); ++j)
      l.push_back({"u" + std::to_string(j) + "/p", mat_u(PExact::pow_p(p, -1, j))});
    l.push_back({"t" + std::to_string(primitive_root(p)), mat_t(PExact(p, primitive_root(p)))});
    if (name == "SL2_tree")
      for (long j = 1; j < long(p); ++j) l.push_back({"l" + std::to_string(j) + "p", mat_l(p, j * long(p))});
    return Alphabet(std::move(l), "SL2");
  }
  if (name == "GL2_default") return Alphabet(gl2_letters(p), "GL2");
  if (name == "GL2_appC") {
    auto l = gl2_letters(p);
    long u = least_nonsquare(p);
    l.push_back({"d" + std::to_string(u), GMat(p, u, 0, 0, 1)});
    return Alphabet(std::move(l), "GL2");
  }
  if (name == "IS1" || name == "I1") {
    std::vector<Letter> l = {{"u1", mat_u(p, 1)}, {"l(p)", mat_l(p, long(p))}, {"t(1+p)", mat_t(PExact(p, long(p) + 1))}};
    if (name == "I1") l.push_back({"diag(1+p,1)", GMat(p, long(p) + 1, 0, 0, 1)});
    return Alphabet(std::move(l), name);
  }
  throw UnknownName("unknown alphabet: " + name);
}

std::vector<Word> word_enum_spelled(const Alphabet& alphabet, int L) {
  if (alphabet.size() == 0 && L < 0) return {};
  const std::uint32_t p = alphabet.size() ? alphabet.letters().front().g.prime() : 3;
  std::map<GMat, std::size_t> index;
  std::vector<Word> out;
  if (L < 0) return out;
  out.push_back({"1", GMat::identity(p), 0});
  index.emplace(out.back().g, 0);
  std::size_t level_begin = 0;
  for (int len = 1; len <= L; ++len) {
    std::size_t level_end = out.size();
    std::vector<Word> fresh;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const auto& letter : alphabet.letters()) {
        GMat g = out[i].g * letter.g;
        if (index.count(g)) continue;
        std::string sp = len == 1 ? letter.name : out[i].spelling + "*" + letter.name;
        index.emplace(g, 0);
        fresh.push_back({std::move(sp), std::move(g), len});
      }
    }
    std::sort(fresh.begin(), fresh.end(), [](const Word& x, const Word& y) { return x.g < y.g; });
    for (auto& w : fresh) out.push_back(std::move(w));
    level_begin = level_end;
  }
  return out;
}

std::vector<GMat> word_enum(const Alphabet& alphabet, int L) {
  std::vector<GMat> out;
  for (auto& w : word_enum_spelled(alphabet, L)) out.push_back(std::move(w.g));
  return out;
}

std::vector<long> representatives(std::uint32_t p, int i) {
  long n = 1;
  for (int k = 0; k < i; ++k) n *= long(p);
  std::vector<long> out(std::size_t(n), 0);
  for (long x = 0; x < n; ++x) out[std::size_t(x)] = x;
  return out;
}

long primitive_root(std::uint32_t p) {
  for (long g = 1; g < long(p); ++g) {
    long x = 1;
    long order = 0;
    do {
      x = x * g % long(p);
      ++order;
    } while (x != 1);
    if (order == long(p) - 1) return g;
  }
  throw DomainError("no primitive root");
}

long least_nonsquare(std::uint32_t p) {
  for (long u = 2; u < long(p); ++u) {
    bool square = false;
    for (long x = 1; x < long(p) && !square; ++x) square = x * x % long(p) == u;
    if (!square) return u;
  }
  throw DomainError("no non-square residue");
}

std::vector<GMat> generators(const std::string& set, std::uint32_t p) {
  std::vector<GMat> out;
  if (set == "IS1" || set == "I1") {
    Alphabet a = Alphabet::named(set, p);
    for (const auto& l : a.letters()) out.push_back(l.g);
  } else if (set == "torus_units") {
    out.push_back(mat_t(PExact(p, primitive_root(p))));
  } else if (set == "R1" || set == "R2") {
    for (long x : representatives(p, set == "R1" ? 1 : 2)) out.push_back(mat_u(p, x));
  } else if (set == "SL2_default_alphabet") {
    Alphabet a = Alphabet::named("SL2_default", p);
    for (const auto& l : a.letters()) out.push_back(l.g);
  } else {
    throw UnknownName("unknown generator set: " + set);
  }
  return out;
}

}  // namespace modrep
