#include "modrep/cind.hpp"

#include <sstream>

#include "modrep/errors.hpp"

namespace modrep {

WeightPtr make_weight(const Field& f, int r) { return std::make_shared<const Weight>(f, r); }

CIndElt::CIndElt(WeightPtr w) : w_(std::move(w)) {
  if (!w_) throw DomainError("null weight context");
}

CIndElt CIndElt::elementary(WeightPtr w, const GMat& g, const WeightVector& v) {
  CIndElt f(std::move(w));
  f.add_elementary(g, v);
  return f;
}

long CIndElt::max_distance() const {
  long d = -1;
  for (const auto& [v, w] : terms_) d = std::max(d, v.distance());
  return d;
}

void CIndElt::add_at(const Vertex& v, const WeightVector& w, Field::code scale) {
  if (w.size() != w_->dim()) throw ShapeError("weight vector of wrong dimension");
  if (scale == 0) return;
  const Field& f = w_->field();
  auto it = terms_.find(v);
  if (it == terms_.end()) {
    WeightVector s(w.size());
    bool nz = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      s[i] = f.mul(scale, w[i]);
      nz = nz || s[i] != 0;
    }
    if (nz) terms_.emplace(v, std::move(s));
    return;
  }
  bool nz = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    it->second[i] = f.axpy(it->second[i], scale, w[i]);
    nz = nz || it->second[i] != 0;
  }
  if (!nz) terms_.erase(it);
}

void CIndElt::add_elementary(const GMat& g, const WeightVector& w, Field::code scale) {
  VertexInfo info = vertex_of(g);
  GMat k = info.vertex.rep().inv() * g;
  add_at(info.vertex, w_->apply(k, w), scale);
}

void CIndElt::check(const CIndElt& o) const {
  if (&w_->field() != &o.w_->field() || w_->r() != o.w_->r())
    throw ContextMismatch("compact induction elements over different weights");
}

CIndElt CIndElt::operator+(const CIndElt& o) const {
  check(o);
  CIndElt r = *this;
  for (const auto& [v, w] : o.terms_) r.add_at(v, w);
  return r;
}

CIndElt CIndElt::operator-(const CIndElt& o) const {
  check(o);
  CIndElt r = *this;
  Field::code m1 = w_->field().neg(1);
  for (const auto& [v, w] : o.terms_) r.add_at(v, w, m1);
  return r;
}

CIndElt CIndElt::scaled(Field::code c) const {
  CIndElt r(w_);
  for (const auto& [v, w] : terms_) r.add_at(v, w, c);
  return r;
}

bool CIndElt::operator==(const CIndElt& o) const {
  return &w_->field() == &o.w_->field() && w_->r() == o.w_->r() && terms_ == o.terms_;
}

std::string CIndElt::str() const {
  std::ostringstream os;
  const Field& f = w_->field();
  for (const auto& [v, w] : terms_) {
    os << v.str() << " :";
    for (auto c : w) os << ' ' << f.format(c);
    os << '\n';
  }
  return os.str();
}

CIndElt CIndElt::parse(WeightPtr wp, const std::string& text) {
  CIndElt out(wp);
  const Field& f = wp->field();
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("missing ':' in element line: " + line);
    std::string head = line.substr(0, colon);
    while (!head.empty() && head.back() == ' ') head.pop_back();
    Vertex v = Vertex::parse(f.p(), head);
    std::istringstream cs(line.substr(colon + 1));
    WeightVector w;
    std::string tok;
    while (cs >> tok) w.push_back(f.parse(tok));
    if (w.size() != wp->dim()) throw ParseError("wrong number of weight coordinates: " + line);
    out.add_at(v, w);
  }
  return out;
}

CIndElt v_infty(WeightPtr w) {
  const std::uint32_t p = w->p();
  WeightVector x = w->x_r();
  return CIndElt::elementary(std::move(w), GMat::identity(p), x);
}

CIndElt v_zero(WeightPtr w) {
  const std::uint32_t p = w->p();
  WeightVector x = w->x_r();
  return CIndElt::elementary(std::move(w), mat_beta(p), x);
}

CIndElt act(const GMat& g, const CIndElt& f) {
  CIndElt out(f.weight_ptr());
  for (const auto& [v, w] : f.support()) out.add_elementary(g * v.rep(), w);
  return out;
}

std::pair<CIndElt, CIndElt> parity_split(const CIndElt& f) {
  CIndElt even(f.weight_ptr()), odd(f.weight_ptr());
  for (const auto& [v, w] : f.support()) (v.parity() == 0 ? even : odd).add_at(v, w);
  return {even, odd};
}

CIndElt hecke_T(const CIndElt& f) {
  const Weight& wt = f.weight();
  const Field& fld = wt.field();
  const std::uint32_t p = wt.p();
  const int r = wt.r();
  const WeightVector xr = wt.x_r(), yr = wt.y_r();
  const GMat alpha = mat_alpha(p);
  CIndElt out(f.weight_ptr());
  for (const auto& [v, w] : f.support()) {
    const GMat c = v.rep();
    // T[c, w] = sum_lambda P_w(-lambda) [c (p lambda; 0 1), x^r] + w_r [c alpha, y^r]
    for (std::uint32_t lam = 0; lam < p; ++lam) {
      Field::code t = fld.from_int(-long(lam));
      Field::code s = 0, tp = 1;
      for (int j = 0; j <= r; ++j) {
        s = fld.axpy(s, w[j], tp);
        tp = fld.mul(tp, t);
      }
      if (s) out.add_elementary(c * GMat(p, long(p), long(lam), 0, 1), xr, s);
    }
    if (w[r]) out.add_elementary(c * alpha, yr, w[r]);
  }
  return out;
}

CIndElt hecke_T_minus(const CIndElt& f, Field::code lambda) {
  CIndElt t = hecke_T(f);
  if (lambda == 0) return t;
  return t - f.scaled(lambda);
}

CIndElt hecke_tau(const CIndElt& f) { return hecke_T(hecke_T(f)); }

}  // namespace modrep
