// Acceptance run: one PASS/FAIL line per criterion. The exit status is
// nonzero only when an exact criterion fails; evidence-only criteria print
// their numbers either way.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "modrep/errors.hpp"
#include "modrep/pseries.hpp"
#include "modrep/suites.hpp"
#include "modrep/supersingular.hpp"

using namespace modrep;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream details;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      details << "[failed: " << what << "] ";
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  bool exact;
  std::function<void(Outcome&)> body;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const Check* find_check(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

Report run(const std::string& suite, std::uint32_t p, const std::function<void(SuiteConfig&)>& tweak = {}) {
  SuiteConfig c;
  c.suite = suite;
  c.p = p;
  if (tweak) tweak(c);
  return run_suite(c);
}

// Supersingular suites are shared by several criteria.
const Report& supersingular(std::uint32_t p) {
  static Report r3 = run("supersingular", 3), r5 = run("supersingular", 5);
  return p == 3 ? r3 : r5;
}

std::string rtag(int r) { return "r" + std::to_string(r) + "/"; }

void hecke_parity(Outcome& o) {
  for (std::uint32_t p : {3u, 5u}) {
    Report rep = run("cind-core", p);
    long worst = 0;
    for (int r = 0; r < int(p); ++r) {
      const Check* c = find_check(rep, rtag(r) + "hecke-parity-exchange");
      o.require(c && c->status == Status::pass, "p=" + std::to_string(p) + " r=" + std::to_string(r));
      if (c) worst = std::max(worst, c->runtime_ms);
    }
    o.require(worst < 10000, "runtime per (p, r) below 10 s");
    o.details << "p=" << p << ": all r, 50 per parity, slowest " << worst << " ms; ";
  }
}

void invariance(Outcome& o) {
  for (std::uint32_t p : {3u, 5u}) {
    const Report& rep = supersingular(p);
    long worst = 0;
    std::size_t mod_image = 0;
    for (int r = 0; r < int(p); ++r) {
      long ms = 0;
      for (const char* side : {"infty", "zero"}) {
        const Check* c = find_check(rep, rtag(r) + "invariance-" + side);
        o.require(c && c->status == Status::pass, "p=" + std::to_string(p) + " r=" + std::to_string(r) + " " + side);
        if (!c) continue;
        ms += c->runtime_ms;
        for (std::size_t at = c->details.find("fixed_mod_image"); at != std::string::npos;
             at = c->details.find("fixed_mod_image", at + 1))
          ++mod_image;
      }
      if (const Check* q = find_check(rep, rtag(r) + "quotient")) ms += q->runtime_ms;
      worst = std::max(worst, ms);
    }
    o.require(worst < 60000, "runtime per (p, r) below 60 s");
    o.details << "p=" << p << ": every I1 generator fixes both vectors (" << mod_image
              << " only modulo the image), slowest " << worst << " ms; ";
  }
}

void independence(Outcome& o) {
  for (std::uint32_t p : {3u, 5u})
    for (int r = 0; r < int(p); ++r) {
      const Check* c = find_check(supersingular(p), rtag(r) + "independence");
      o.require(c && c->status == Status::pass, "p=" + std::to_string(p) + " r=" + std::to_string(r));
    }
  o.details << "rank 2 for every (p, r) at depth 4, slack 1";
}

void span_intersection(Outcome& o) {
  for (std::uint32_t p : {3u, 5u}) {
    long worst = 0;
    for (int r = 0; r < int(p); ++r) {
      const Check* c = find_check(supersingular(p), rtag(r) + "span-intersection");
      o.require(c && c->status == Status::evidence_only, "p=" + std::to_string(p) + " r=" + std::to_string(r));
      if (c) worst = std::max(worst, c->runtime_ms);
    }
    o.require(worst < 300000, "runtime per (p, r) below 5 min");
    o.details << "p=" << p << ": intersection 0 for all r, slowest " << worst << " ms; ";
  }
  o.details << "bounds depth 4, L 4";
}

void router(Outcome& o) {
  for (std::uint32_t p : {3u, 5u}) {
    Report rep = run("appendix-c", p);
    for (int r = 0; r < int(p); ++r) {
      const Check* c = find_check(rep, rtag(r) + "router");
      o.require(c && c->status == Status::pass, "p=" + std::to_string(p) + " r=" + std::to_string(r));
      if (c && r == 0) o.details << "p=" << p << " r=0: " << c->details.substr(0, c->details.find(';')) << "; ";
    }
  }
}

void decomposition(Outcome& o) {
  std::ostringstream counts;
  for (std::uint32_t p : {3u, 5u}) {
    counts << "p=" << p << ":";
    for (int r = 0; r < int(p); ++r) {
      const Check* c = find_check(supersingular(p), rtag(r) + "decomposition");
      if (!c || c->status != Status::evidence_only) o.ok = false;
      if (c) counts << " r" << r << " " << c->details.substr(0, c->details.find(' '));
    }
    counts << "; ";
  }
  o.details << "classes in span_infty + span_zero " << counts.str() << "depth 4, L 4";
}

void iwahori_characters(Outcome& o) {
  auto t0 = Clock::now();
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Field& f = Field::get(p, 2);
    const long m = long(p) - 1;
    for (int r = 0; r < int(p); ++r) {
      WeightPtr w = make_weight(f, r);
      o.require(iwahori_character(v_infty(w)) == r % m, "infty p=" + std::to_string(p) + " r=" + std::to_string(r));
      o.require(iwahori_character(v_zero(w)) == ((-r % m) + m) % m,
                "zero p=" + std::to_string(p) + " r=" + std::to_string(r));
    }
  }
  double s = seconds_since(t0);
  o.require(s < 1.0, "runtime below 1 s");
  o.details << "exponents r and -r mod p-1 for p = 3, 5, 7, all r (" << int(s * 1000) << " ms)";
}

void ks_separation(Outcome& o) {
  for (std::uint32_t p : {3u, 5u}) {
    const Check* c = find_check(supersingular(p), "r0/ks-separation");
    o.require(c && c->status == Status::evidence_only, "p=" + std::to_string(p));
    if (c) o.details << "p=" << p << ": " << c->details << "; ";
  }
}

void iso_table(Outcome& o) {
  Report rep = run("isomorphism-table", 5);
  const Check* t = find_check(rep, "table");
  const Check* x = find_check(rep, "table-crosscheck");
  o.require(t && t->status == Status::pass, "table");
  o.require(x && x->status != Status::fail, "cross-check");
  if (t) o.details << t->details << "; ";
  if (x) o.details << x->details.substr(x->details.find("inconsistencies"));
}

void identities(Outcome& o, bool ramified) {
  auto t0 = Clock::now();
  std::size_t total = 0;
  for (std::uint32_t p : {3u, 5u}) {
    const Field& f = Field::get(p, 2);
    std::vector<long> exps;
    if (ramified)
      for (long a = 1; a < long(p) - 1; ++a) exps.push_back(a);
    else
      exps.push_back(0);
    for (long a : exps)
      for (Field::code lam : default_lambdas(f)) {
        SmoothCharacter eta(f, a, f.inv(lam));
        for (const auto& c : identity_suite(eta)) {
          ++total;
          o.require(c.pass, "p=" + std::to_string(p) + " a=" + std::to_string(a) + " Lambda=" + f.format(lam) + " " +
                                c.name);
        }
      }
  }
  double s = seconds_since(t0);
  o.require(s < 10.0, "runtime below 10 s");
  o.details << total << " identities over p = 3, 5" << (ramified ? ", every a != 0 mod p-1" : "")
            << ", five Lambda values including -1 (" << int(s * 1000) << " ms)";
}

void steinberg_invariants(Outcome& o) {
  for (std::uint32_t p : {3u, 5u})
    for (int N : {2, 3}) {
      SteinbergInvariants s = sp_invariants(p, N);
      o.require(s.invariant_dim == 2 && s.quotient_dim == 1 && s.chart_indicators,
                "p=" + std::to_string(p) + " N=" + std::to_string(N));
    }
  o.details << "fixed dimension 2, quotient by constants 1, at N = 2, 3 for p = 3, 5";
}

void ladder(Outcome& o) {
  bool vanishes = true;
  for (std::uint32_t p : {3u, 5u})
    for (int levels = 1; levels <= 3; ++levels) {
      LadderReport l = seulquo_ladder(Field::get(p, 2), levels);
      o.require(l.pass(), "p=" + std::to_string(p) + " levels=" + std::to_string(levels));
      vanishes = vanishes && l.q_vanishes;
    }
  o.details << "levels 1..3 for p = 3, 5; q = 0 mod p: " << (vanishes ? "yes" : "no");
}

void generation(Outcome& o) {
  for (std::uint32_t p : {3u, 5u}) {
    const Field& f = Field::get(p, 2);
    Alphabet a = Alphabet::named("SL2_default", p);
    struct Case {
      std::string label;
      SmoothCharacter eta;
      std::vector<std::string> seeds;
      bool fill;
    };
    std::vector<Case> cases = {
        {"Lambda=" + f.format(f.generator()), SmoothCharacter(f, 0, f.inv(f.generator())), {"f0"}, true},
        {"Lambda=-1", SmoothCharacter(f, 0, f.neg(f.one())), {"f0"}, true},
        {"omega^1", SmoothCharacter(f, 1, f.one()), {"ell1", "ell2"}, true},
        {"trivial", SmoothCharacter::trivial(f), {}, false},
    };
    o.details << "p=" << p << ":";
    for (const auto& c : cases) {
      auto t0 = Clock::now();
      std::vector<JFunc> seeds;
      for (const auto& n : c.seeds) seeds.push_back(make_basis(n, c.eta));
      if (seeds.empty()) seeds.push_back(JFunc(c.eta, 0, 0, {f.one()}, f.one()));
      GenerationReport g = generation_check(seeds, a, 12, 1, 1);
      double s = seconds_since(t0);
      o.require(c.fill ? g.fills() : g.span_dim == 1, "p=" + std::to_string(p) + " " + c.label);
      o.require(s < 120.0, "runtime per eta below 2 min");
      o.details << " " << c.label << " " << g.span_dim << "/" << g.window_dim;
    }
    o.details << "; ";
  }
  o.details << "window (1,1), 12 rounds";
}

void packets(Outcome& o) {
  auto t0 = Clock::now();
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    const int top = int(p) - 1;
    for (int r = 0; r <= top; ++r) o.require(packet(p, r) == packet(p, top - r), "symmetry p=" + std::to_string(p));
    o.require(packet(p, top / 2).size() == 1, "middle weight p=" + std::to_string(p));
  }
  double s = seconds_since(t0);
  o.require(s < 1.0, "runtime below 1 s");
  o.details << "symmetric for p = 3, 5, 7, 11, one class at r = (p-1)/2";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Hecke parity exchange", true, hecke_parity},
      {2, "invariant vectors fixed by the pro-p Iwahori", true, invariance},
      {3, "invariant vectors independent in the quotient", true, independence},
      {4, "generated spans meet in zero", false, span_intersection},
      {5, "GL2 words rewritten through the two vectors", true, router},
      {6, "random classes decompose into the two spans", false, decomposition},
      {7, "Iwahori characters", true, iwahori_characters},
      {8, "K_S separation at weight 0", false, ks_separation},
      {9, "isomorphism table at p = 5", true, iso_table},
      {10, "unramified principal-series identities", true, [](Outcome& o) { identities(o, false); }},
      {11, "ramified principal-series identities", true, [](Outcome& o) { identities(o, true); }},
      {12, "Steinberg invariants", true, steinberg_invariants},
      {13, "translation ladder without Haar measure", true, ladder},
      {14, "generation inside a window", false, generation},
      {15, "packet bookkeeping", true, packets},
  };
  int exact_failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      c.body(o);
    } catch (const Error& e) {
      o.ok = false;
      o.details << "[error: " << e.what() << "]";
    }
    double s = seconds_since(t0);
    if (!o.ok && c.exact) ++exact_failures;
    std::printf("%s %2d %s (%s, %.1f s): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, c.exact ? "exact" : "evidence",
                s, o.details.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d exact criteria failed\n", exact_failures);
  return exact_failures == 0 ? 0 : 1;
}
