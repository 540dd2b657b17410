#pragma once
/// @file jfunc.hpp
/// Windowed model of the principal series Ind_{B_S}^{G_S}(eta) as locally
/// constant functions on Q_p with a tail law.
///
/// A JFunc with window (M, N) stores one value per coset of p^N Z_p inside
/// p^-M Z_p; cell k holds the value at k p^-M. For v(x) < -M the value is
/// c * eta(1/x). Mt <= M is the least radius beyond which the stored table
/// already follows the tail law.

#include <functional>
#include <string>
#include <vector>

#include "modrep/character.hpp"
#include "modrep/gmat.hpp"

namespace modrep {

class JFunc {
 public:
  /// Throws ShapeError when the table size is not p^(M+N).
  JFunc(SmoothCharacter eta, int M, int N, std::vector<Field::code> table, Field::code c);
  /// Samples `value` at every cell representative.
  static JFunc from_points(const SmoothCharacter& eta, int M, int N,
                           const std::function<Field::code(const PExact&)>& value, Field::code c);
  static JFunc zero(const SmoothCharacter& eta) { return JFunc(eta, 0, 0, {0}, 0); }

  const SmoothCharacter& character() const { return eta_; }
  const Field& field() const { return eta_.field(); }
  std::uint32_t p() const { return eta_.field().p(); }
  int M() const { return m_; }
  int N() const { return n_; }
  int tail_radius() const { return mt_; }
  Field::code tail_constant() const { return c_; }
  const std::vector<Field::code>& table() const { return table_; }
  std::size_t cells() const { return table_.size(); }

  PExact cell_rep(std::size_t k) const;
  /// Requires x = 0 or v(x) >= -M.
  std::size_t cell_of(const PExact& x) const;
  Field::code at(const PExact& x) const;
  /// True when the function is constant on x0 + p^k Z_p (exact).
  bool constant_on(const PExact& x0, long k) const;

  JFunc refined(int M2, int N2) const;
  /// Least window representing the same function (M, N >= 0).
  JFunc coarsened() const;

  JFunc operator+(const JFunc& o) const;
  JFunc operator-(const JFunc& o) const;
  JFunc scaled(Field::code s) const;
  /// Window-independent equality.
  bool operator==(const JFunc& o) const;
  bool operator!=(const JFunc& o) const { return !(*this == o); }

  /// Header `p k a vp M N Mt c`, then `digits : value` per cell.
  std::string str() const;
  static JFunc parse(const Field& f, const std::string& text);

 private:
  void check(const JFunc& o) const;
  SmoothCharacter eta_;
  int m_, n_, mt_;
  std::vector<Field::code> table_;
  Field::code c_;
};

/// f(h) for h in SL2, through the factorization h = b s u(d/c).
Field::code eval_ind(const JFunc& phi, const GMat& h);

/// (g phi)(x) = f(s u(x) g). Windows are chosen so every output cell is
/// provably constant; throws WindowOverflow past `max_cells`.
JFunc act_ps(const GMat& g, const JFunc& phi, std::size_t max_cells = std::size_t(1) << 18);

/// (f(I2), f(beta0)): coordinates on the pro-p Iwahori invariants.
std::pair<Field::code, Field::code> iwahori_pair(const JFunc& phi);

}  // namespace modrep
