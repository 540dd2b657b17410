#pragma once
/// @file supersingular.hpp
/// The SL2 pieces generated by [I2, x^r] and [beta, x^r] in the cokernel of
/// T at lambda = 0, and the arithmetic of their isomorphism classes.

#include <string>
#include <vector>

#include "modrep/quotient.hpp"

namespace modrep {

enum class Side { infty, zero };
const char* side_name(Side s);
Side parse_side(const std::string& text);

enum class Monomial { x_r, y_r };

struct AppCRewrite {
  Side component;
  std::string case_label;  // square, nonsquare-unit, p-square, p-nonsquare
  GMat h;                  // in SL2
  Field::code scalar;
  /// scalar * act(h, v_side) == [g, monomial] as elements.
  bool verified;
};

AppCRewrite decompose_appC(WeightPtr w, const GMat& g, Monomial m);

enum class InvStatus { exact_fixed, fixed_mod_image, not_fixed_at_bound };
const char* status_name(InvStatus s);

struct InvarianceEntry {
  std::string generator;
  InvStatus status;
  long bound;  // witness bound, or the largest bound tried
  std::size_t witness_support = 0;
};

/// Classifies each generator: exact fixing, fixing modulo the image of
/// T - lambda (bounds escalated up to depth + slack), or neither.
std::vector<InvarianceEntry> invariance_report(const QuotientCtx& ctx, const CIndElt& v,
                                               const std::vector<Letter>& gens);

/// Exponent c mod p-1 with t(l) v = l^c v for every l in F_p^x; throws NotEigen.
long iwahori_character(const CIndElt& v);

struct Param {
  int r;
  Side side;
  bool operator==(const Param& o) const { return r == o.r && side == o.side; }
  bool operator<(const Param& o) const { return r != o.r ? r < o.r : side < o.side; }
  std::string str() const;
};

struct IsoDecision {
  bool isomorphic;
  std::string criterion;
};

/// Throws RangeError for parameters outside 0..p-1.
IsoDecision decide_isomorphism(std::uint32_t p, Param left, Param right);
/// Iwahori exponent attached to a parameter: r on the infty side, -r on the zero side.
long expected_exponent(std::uint32_t p, Param x);

/// Isomorphism classes of the two summands attached to r; each class lists
/// all parameters in it, sorted.
std::vector<std::vector<Param>> packet(std::uint32_t p, int r);

}  // namespace modrep
