#pragma once
/// @file pseries.hpp
/// Named vectors of the principal series, the identities they satisfy, the
/// Steinberg invariants, the translation ladder and generation evidence.

#include <string>
#include <vector>

#include "modrep/jfunc.hpp"
#include "modrep/linalg.hpp"
#include "modrep/p1func.hpp"
#include "modrep/words.hpp"

namespace modrep {

/// Names: phi0 (the printed closed form), f0, f1, f2, ell1, ell2, and
/// indicator:m for 1_{p^m Z_p}. f0 comes from the Iwasawa decomposition and
/// f1, f2, ell1, ell2 from the Iwahori double cosets, independently of any
/// closed form. phi0/f0/f1/f2 need unramified eta (else CharacterMismatch).
/// ell1, ell2 take the values (1, 0) and (0, 1) at (I2, beta0).
JFunc make_basis(const std::string& name, const SmoothCharacter& eta);

/// f in the induced model from its values at I2 and beta0 on the
/// double cosets B_S I_S(1) and B_S beta0 I_S(1).
JFunc iwahori_function(const SmoothCharacter& eta, Field::code at_identity, Field::code at_beta0);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string details;
};

/// Unramified eta: translation sums at levels 1 and 2, the spherical
/// decomposition, the closed form of phi0 and its tail law, and the four
/// alpha0/beta0 relations on the Iwahori pair. Ramified eta: the two closed
/// forms of ell1/ell2, their normalization, the dilation sum, and the four
/// relations. Details record which statements hold literally.
std::vector<IdentityCheck> identity_suite(const SmoothCharacter& eta);

struct SteinbergInvariants {
  int N = 0;
  std::vector<SparseVec> basis;   // fixed vectors in the level-N cell space
  std::size_t invariant_dim = 0;  // of the level-N model
  std::size_t quotient_dim = 0;   // of the quotient by constants
  bool chart_indicators = false;  // basis spans the two chart indicators
};
SteinbergInvariants sp_invariants(std::uint32_t p, int N);

struct LadderStep {
  int m = 0;  // 1_{p^m} = sum_j u(j p^m) 1_{p^(m+1)}
  bool pass = false;
};
struct LadderReport {
  std::vector<LadderStep> steps;
  bool swap_pass = false;     // beta0 1_{p^-1 Z_p} = 1_{v <= -1} (with the point at infinity)
  bool q_vanishes = false;    // p = 0 in the coefficient field
  bool pass() const;
};
/// Steps m = -1 .. levels-1 in the model with trivial character.
LadderReport seulquo_ladder(const Field& f, int levels);

struct GenerationReport {
  int M = 0, N = 0, L = 0;
  std::size_t window_dim = 0;
  std::size_t span_dim = 0;
  std::size_t overflow = 0;  // images skipped for exceeding the cell budget
  bool fills() const { return span_dim == window_dim; }
};
/// Closure of span(seeds) inside the window V(M, N) under the alphabet:
/// each of L rounds adds the combinations of images that land back in the
/// window. Evidence only.
GenerationReport generation_check(const std::vector<JFunc>& seeds, const Alphabet& alphabet, int L,
                                  int M, int N);

struct RestrictionReport {
  SmoothCharacter eta;
  std::size_t gl2_dim = 0, sl2_dim = 0;
  bool borel_law = false;  // eta1(t) eta2(1/t) = eta(t) on the sampled torus
};
RestrictionReport restrict_gl2(const SmoothCharacter& eta1, const SmoothCharacter& eta2, int M, int N);

}  // namespace modrep
