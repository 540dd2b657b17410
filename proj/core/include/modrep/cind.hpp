#pragma once
/// @file cind.hpp
/// Compactly induced representation c-ind_{KZ}^G(sigma_r) as finitely
/// supported maps from tree vertices to weight vectors.
///
/// An element is the sum over its support of [c_v, w_v] with c_v the
/// canonical representative of v. Terms are normalized with
/// [g k, w] = [g, sigma_r(k) w] for k in KZ.

#include <map>
#include <memory>
#include <string>
#include <utility>

#include "modrep/tree.hpp"
#include "modrep/weight.hpp"

namespace modrep {

using WeightPtr = std::shared_ptr<const Weight>;

WeightPtr make_weight(const Field& f, int r);

class CIndElt {
 public:
  explicit CIndElt(WeightPtr w);
  static CIndElt elementary(WeightPtr w, const GMat& g, const WeightVector& v);

  const Weight& weight() const { return *w_; }
  const WeightPtr& weight_ptr() const { return w_; }
  const std::map<Vertex, WeightVector>& support() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long max_distance() const;

  /// Adds scale * [rep(v), w].
  void add_at(const Vertex& v, const WeightVector& w, Field::code scale = 1);
  /// Adds scale * [g, w] after normalization.
  void add_elementary(const GMat& g, const WeightVector& w, Field::code scale = 1);

  CIndElt operator+(const CIndElt& o) const;
  CIndElt operator-(const CIndElt& o) const;
  CIndElt scaled(Field::code c) const;
  bool operator==(const CIndElt& o) const;
  bool operator!=(const CIndElt& o) const { return !(*this == o); }

  /// One line per vertex, `a b : c_0 ... c_r`, vertices in canonical order.
  std::string str() const;
  static CIndElt parse(WeightPtr w, const std::string& text);

 private:
  void check(const CIndElt& o) const;
  WeightPtr w_;
  std::map<Vertex, WeightVector> terms_;
};

/// [I2, x^r]
CIndElt v_infty(WeightPtr w);
/// [beta, x^r] = [alpha, y^r]
CIndElt v_zero(WeightPtr w);

CIndElt act(const GMat& g, const CIndElt& f);
/// (even-distance part, odd-distance part)
std::pair<CIndElt, CIndElt> parity_split(const CIndElt& f);

CIndElt hecke_T(const CIndElt& f);
CIndElt hecke_T_minus(const CIndElt& f, Field::code lambda);
/// tau = T^2
CIndElt hecke_tau(const CIndElt& f);

}  // namespace modrep
