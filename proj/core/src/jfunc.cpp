#include "modrep/jfunc.hpp"

#include <algorithm>
#include <sstream>

#include "modrep/errors.hpp"

namespace modrep {

namespace {

std::size_t ipow(std::uint32_t p, long e) {
  std::size_t r = 1;
  for (long i = 0; i < e; ++i) r *= p;
  return r;
}

}  // namespace

JFunc::JFunc(SmoothCharacter eta, int M, int N, std::vector<Field::code> table, Field::code c)
    : eta_(std::move(eta)), m_(M), n_(N), mt_(-N), table_(std::move(table)), c_(c) {
  if (M + N < 0) throw ShapeError("JFunc window needs M + N >= 0");
  if (table_.size() != ipow(p(), M + N)) throw ShapeError("JFunc table size mismatch");
  const Field& f = field();
  for (std::size_t k = 1; k < table_.size(); ++k) {
    PExact x = cell_rep(k);
    if (table_[k] != f.mul(c_, eta_.eval(x.inv()))) mt_ = std::max<int>(mt_, -x.valuation());
  }
  mt_ = std::min(mt_, m_);
}

JFunc JFunc::from_points(const SmoothCharacter& eta, int M, int N,
                         const std::function<Field::code(const PExact&)>& value, Field::code c) {
  std::size_t n = ipow(eta.field().p(), M + N);
  std::vector<Field::code> t(n);
  std::uint32_t p = eta.field().p();
  for (std::size_t k = 0; k < n; ++k) t[k] = value(PExact(p, long(k)).shifted(-M));
  return JFunc(eta, M, N, std::move(t), c);
}

PExact JFunc::cell_rep(std::size_t k) const { return PExact(p(), long(k)).shifted(-m_); }

std::size_t JFunc::cell_of(const PExact& x) const {
  if (x.is_zero()) return 0;
  if (x.valuation() < -m_) throw DomainError("point outside JFunc window");
  if (x.valuation() >= n_) return 0;
  return x.shifted(m_).residue(unsigned(m_ + n_)).get_ui();
}

Field::code JFunc::at(const PExact& x) const {
  if (x.is_zero() || x.valuation() >= -m_) return table_[cell_of(x)];
  return field().mul(c_, eta_.eval(x.inv()));
}

bool JFunc::constant_on(const PExact& x0, long k) const {
  if (!x0.is_zero() && x0.valuation() < -m_) return k >= x0.valuation() + 1;
  if (k >= n_) return true;
  if (k < -m_) return false;
  std::size_t step = ipow(p(), m_ + k);
  std::size_t base = cell_of(x0) % step;
  Field::code v = table_[base];
  for (std::size_t i = base; i < table_.size(); i += step)
    if (table_[i] != v) return false;
  return true;
}

JFunc JFunc::refined(int M2, int N2) const {
  if (M2 < m_ || N2 < n_) throw ShapeError("refined window must contain the current one");
  return from_points(eta_, M2, N2, [this](const PExact& x) { return at(x); }, c_);
}

JFunc JFunc::coarsened() const {
  int M2 = std::max(mt_, 0);
  JFunc r = M2 < m_ ? from_points(eta_, M2, n_, [this](const PExact& x) { return at(x); }, c_)
                    : *this;
  int N2 = r.n_;
  while (N2 > 0) {
    std::size_t coarse = ipow(p(), M2 + N2 - 1);
    bool ok = true;
    for (std::size_t i = coarse; i < ipow(p(), M2 + r.n_) && ok; ++i)
      ok = r.table_[i] == r.table_[i % coarse];
    if (!ok) break;
    --N2;
  }
  if (N2 == r.n_) return r;
  std::vector<Field::code> t(r.table_.begin(), r.table_.begin() + long(ipow(p(), M2 + N2)));
  return JFunc(eta_, M2, N2, std::move(t), c_);
}

void JFunc::check(const JFunc& o) const {
  if (eta_ != o.eta_) throw CharacterMismatch("JFunc characters differ");
}

JFunc JFunc::operator+(const JFunc& o) const {
  check(o);
  int M = std::max(m_, o.m_), N = std::max(n_, o.n_);
  JFunc a = refined(M, N), b = o.refined(M, N);
  const Field& f = field();
  for (std::size_t i = 0; i < a.table_.size(); ++i) a.table_[i] = f.add(a.table_[i], b.table_[i]);
  return JFunc(eta_, M, N, std::move(a.table_), f.add(c_, o.c_)).coarsened();
}

JFunc JFunc::operator-(const JFunc& o) const { return *this + o.scaled(field().neg(1)); }

JFunc JFunc::scaled(Field::code s) const {
  std::vector<Field::code> t(table_);
  for (auto& v : t) v = field().mul(v, s);
  return JFunc(eta_, m_, n_, std::move(t), field().mul(c_, s)).coarsened();
}

bool JFunc::operator==(const JFunc& o) const {
  if (eta_ != o.eta_ || c_ != o.c_) return false;
  int M = std::max(m_, o.m_), N = std::max(n_, o.n_);
  return refined(M, N).table_ == o.refined(M, N).table_;
}

std::string JFunc::str() const {
  std::ostringstream os;
  os << p() << ' ' << field().k() << ' ' << eta_.exponent() << ' ' << eta_.value_at_p() << ' '
     << m_ << ' ' << n_ << ' ' << mt_ << ' ' << c_ << '\n';
  for (std::size_t k = 0; k < table_.size(); ++k) os << k << " : " << table_[k] << '\n';
  return os.str();
}

JFunc JFunc::parse(const Field& f, const std::string& text) {
  std::istringstream is(text);
  std::uint32_t p;
  unsigned k;
  long a;
  Field::code vp, c;
  int M, N, Mt;
  if (!(is >> p >> k >> a >> vp >> M >> N >> Mt >> c)) throw ParseError("bad JFunc header");
  if (p != f.p() || k != f.k()) throw ContextMismatch("JFunc field mismatch");
  if (M + N < 0 || M + N > 24) throw ParseError("bad JFunc window");
  std::vector<Field::code> t(ipow(p, M + N));
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::size_t idx;
    std::string colon;
    Field::code v;
    if (!(is >> idx >> colon >> v) || idx != i || colon != ":" || v >= f.order())
      throw ParseError("bad JFunc cell line");
    t[i] = v;
  }
  if (vp == 0 || vp >= f.order() || c >= f.order()) throw ParseError("bad JFunc scalar");
  JFunc r(SmoothCharacter(f, a, vp), M, N, std::move(t), c);
  if (r.tail_radius() != Mt) throw ParseError("JFunc tail radius does not match table");
  return r;
}

Field::code eval_ind(const JFunc& phi, const GMat& h) {
  if (h.det() != PExact::one(h.prime())) throw DomainError("eval_ind needs an SL2 element");
  const SmoothCharacter& eta = phi.character();
  if (!h.c().is_zero()) return phi.field().mul(eta.eval(h.c().inv()), phi.at(h.d() / h.c()));
  return phi.field().mul(eta.eval(h.a()), phi.tail_constant());
}

JFunc act_ps(const GMat& g, const JFunc& phi, std::size_t max_cells) {
  if (g.det() != PExact::one(g.prime())) throw DomainError("act_ps needs an SL2 element, got " + g.str());
  const std::uint32_t p = phi.p();
  const Field& f = phi.field();
  const SmoothCharacter& eta = phi.character();
  const PExact &a = g.a(), &b = g.b(), &c = g.c(), &d = g.d();

  // Least tail radius for the output, from the asymptotics of x -> D/C.
  long mreq = 0;
  if (!c.is_zero()) {
    if (!a.is_zero()) mreq = std::max(mreq, c.valuation() - a.valuation());
    PExact y0 = d / c;
    long lo = std::min<long>(-phi.M(), y0.is_zero() ? 0 : y0.valuation() + 1);
    long k = lo;
    while (!phi.constant_on(y0, k)) ++k;
    mreq = std::max(mreq, k + 2 * c.valuation() - 1);
  } else {
    if (!b.is_zero()) mreq = std::max(mreq, d.valuation() - b.valuation());
    mreq = std::max(mreq, d.valuation() - a.valuation() + phi.tail_radius());
  }
  const int M2 = int(mreq);

  // Resolution grows until every output cell is provably constant; failed
  // passes stop at their first bad cell, so the search is cheap.
  int N2 = 0;

  const Field::code pole_value = c.is_zero() ? 0 : f.mul(phi.tail_constant(), eta.eval(-c));
  for (;;) {
    std::size_t n = ipow(p, M2 + N2);
    if (n > max_cells) throw WindowOverflow(M2, N2);
    std::vector<Field::code> t(n);
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) {
      PExact x0 = PExact(p, long(k)).shifted(-M2);
      PExact C0 = a + x0 * c, D0 = b + x0 * d;
      if (c.is_zero()) {
        PExact y0 = D0 / a;
        ok = phi.constant_on(y0, N2 + d.valuation() - a.valuation());
        if (ok) t[k] = f.mul(eta.eval(a.inv()), phi.at(y0));
      } else if (!C0.is_zero() && C0.valuation() < c.valuation() + N2) {
        PExact y0 = D0 / C0;
        ok = phi.constant_on(y0, N2 - 2 * C0.valuation());
        if (ok) t[k] = f.mul(eta.eval(C0.inv()), phi.at(y0));
      } else {
        // The cell contains the pole of x -> D/C; near it the value tends to c * eta(-c).
        ok = (d.is_zero() || d.valuation() + N2 > -c.valuation()) &&
             N2 > phi.tail_radius() - 2 * c.valuation();
        t[k] = pole_value;
      }
    }
    if (ok) return JFunc(eta, M2, N2, std::move(t), eval_ind(phi, g)).coarsened();
    ++N2;
  }
}

std::pair<Field::code, Field::code> iwahori_pair(const JFunc& phi) {
  return {phi.tail_constant(), eval_ind(phi, mat_beta0(phi.p()))};
}

}  // namespace modrep
