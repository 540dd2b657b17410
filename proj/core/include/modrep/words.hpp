#pragma once

#include <string>
#include <vector>

#include "modrep/gmat.hpp"

namespace modrep {

struct Letter {
  std::string name;
  GMat g;
};

/// Named generator matrices, each checked against a declared subgroup.
class Alphabet {
 public:
  /// Throws OutOfSubgroup when a letter is not in `subgroup`.
  Alphabet(std::vector<Letter> letters, std::string subgroup = "GL2");
  /// SL2_default, SL2_wide (s, a0, a0^-1, u(j), u(j/p), a torus generator), GL2_default, GL2_appC (adds diag(u,1), u the least
  /// non-square unit), IS1, I1.
  static Alphabet named(const std::string& name, std::uint32_t p);

  const std::vector<Letter>& letters() const& { return letters_; }
  /// By value on temporaries, so `for (auto& l : Alphabet::named(..).letters())` is safe.
  std::vector<Letter> letters() && { return std::move(letters_); }
  const std::string& subgroup() const { return subgroup_; }
  std::size_t size() const { return letters_.size(); }

 private:
  std::vector<Letter> letters_;
  std::string subgroup_;
};

struct Word {
  std::string spelling;  // letters joined by '*', "1" for the empty word
  GMat g;
  int length;
};

/// Products of at most L letters, deduplicated by exact equality (first
/// spelling wins), ordered by (length, matrix order). Always contains I2.
std::vector<Word> word_enum_spelled(const Alphabet& alphabet, int L);
std::vector<GMat> word_enum(const Alphabet& alphabet, int L);

/// Generator sets: IS1, I1, torus_units, R1, R2 (as u(x)), SL2_default_alphabet.
std::vector<GMat> generators(const std::string& set, std::uint32_t p);
/// Representatives 0..p^i - 1 of Z_p / p^i.
std::vector<long> representatives(std::uint32_t p, int i);
/// Least residue generating (Z/p)^x.
long primitive_root(std::uint32_t p);
/// Least unit residue that is not a square mod p.
long least_nonsquare(std::uint32_t p);

}  // namespace modrep
