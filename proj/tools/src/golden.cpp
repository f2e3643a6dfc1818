#include "salemforge/cli/golden.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "salemforge/salemforge.hpp"

namespace salemforge::cli {

namespace {

// Frozen reference data. Polynomials are stored as expressions; decimal values
// as the digits quoted in the literature.
const std::map<std::string, std::string>& polynomial_table() {
  static const std::map<std::string, std::string> t = {
      {"phi30", "z^8 + z^7 - z^5 - z^4 - z^3 + z + 1"},
      {"lehmer-denominator", "(z-1)(z+1)(z^2+z+1)(z^4+z^3+z^2+z+1)"},
      {"lehmer", "z^10 + z^9 - z^7 - z^6 - z^5 - z^4 - z^3 + z + 1"},
      {"eighth-P", "z^10 + z^7 - z^3 - 1"},
      {"eighth-Q", "2z^10 + z^8 + 2z^7 + z^6 + 2z^5 + z^4 + 2z^3 + z^2 + 2"},
      {"eighth-core", "z^8 - 2z^7 - z^6 - 3z^4 - z^2 - 2z + 1"},
      {"eighth-cofactor", "z^4 + 1"},
      {"pisot16",
       "z^16 + z^15 - z^14 - 4z^13 - 6z^12 - 7z^11 - 7z^10 - 7z^9 - 6z^8 - 4z^7 - 2z^6 - z^5 + z^3 + 2z^2 + 2z + 1"},
      {"degree54-Q1", "z^18 - 1"},
      {"degree54-P1", "(z^7 - 1)(z^11 - 1)"},
      {"degree54-Q2", "z^30 - 1"},
      {"degree54-P2", "(z^13 - 1)(z^17 - 1)"},
      // Leading coefficients of the degree-54 core, read as a polynomial.
      {"degree54-head", "z^6 + 3z^5 + 2z^4 - 11z^3 - 48z^2 - 122z - 245"},
      {"cs-simple-Q", "(z^2 - 1)(z^2 - z + 1)"},
      {"cs-P", "(z^2 + z + 1)(z^2 - 3z + 1)"},
      {"cs-triple-Q", "(z + 1)(z - 1)^3"},
      {"ss-Q", "z^6 - z^4 - z^3 - z^2 + 1"},
      {"ss-P", "z^6 - 2z^5 + 2z - 1"},
      {"plastic", "z^3 - z - 1"},
      {"boyd-A", "z^11 - 2z^9 - 4z^8 - 4z^7 - 3z^6 - z^5 + z^4 + 3z^3 + 4z^2 + 3z + 1"},
  };
  return t;
}

const std::map<std::string, std::vector<std::string>>& decimal_table() {
  static const std::map<std::string, std::vector<std::string>> t = {
      {"lehmer-root", {"1.17628"}},
      {"boyd-A-roots", {"-0.74616", "0.98390", "2.20974"}},
  };
  return t;
}

Rational parse_decimal(const std::string& s) {
  const auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(Integer(s, 10));
  const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(s.size() - dot - 1));
  Rational r(Integer(digits, 10), scale);
  r.canonicalize();
  return r;
}

class Table {
 public:
  explicit Table(const std::set<std::string>& inject) : inject_(inject) {}

  IntPolynomial poly(const std::string& key) const {
    IntPolynomial p = parse_polynomial(polynomial_table().at(key));
    if (inject_.count(key)) p += IntPolynomial{1};
    return p;
  }

  std::vector<Rational> decimals(const std::string& key) const {
    std::vector<Rational> out;
    for (const auto& s : decimal_table().at(key)) out.push_back(parse_decimal(s));
    if (inject_.count(key))
      for (auto& v : out) v += Rational(1, 100);
    return out;
  }

 private:
  const std::set<std::string>& inject_;
};

class Checker {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& what) { notes.push_back(what); }
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

std::string dec(const Rational& x) { return render_decimal(x, 8, false); }

// The closed interval [lo, hi] widened by tol contains v.
bool near(const IsolatingInterval& iv, const Rational& v, const Rational& tol) {
  return iv.lo - tol <= v && v <= iv.hi + tol;
}

IsolatingInterval tight(const IntPolynomial& f, const IsolatingInterval& iv, const Rational& width) {
  return iv.width() <= width ? iv : refine_root(f, iv, width);
}

IntPolynomial lehmer_Q(const Table& t) { return t.poly("phi30"); }
IntPolynomial lehmer_P(const Table& t) { return t.poly("lehmer-denominator"); }

// Census shape of a certified result, recomputed from scratch.
bool census_ok(const ConstructionResult& r, std::string& why) {
  const RootCensus c = disc_root_count(r.core);
  const int d = r.core.degree();
  IntPolynomial rebuilt = shift_up(r.core * r.cofactor, r.z_power);
  if (rebuilt != r.raw) {
    why = "raw is not z^m * core * cofactor";
    return false;
  }
  if (r.cofactor.degree() >= 1 && circle_root_count(r.cofactor) != r.cofactor.degree()) {
    why = "cofactor has roots off the circle";
    return false;
  }
  bool ok = false;
  switch (r.kind) {
    case ResultKind::Salem: ok = c.outside_disc == 1 && c.inside_disc == 1 && c.on_circle == d - 2 && d >= 4; break;
    case ResultKind::RecipQuadPisot: ok = d == 2 && c.outside_disc == 1 && c.inside_disc == 1; break;
    case ResultKind::Pisot: ok = c.outside_disc == 1 && c.on_circle == 0 && c.inside_disc == d - 1; break;
  }
  ok = ok && c.real_gt_1 == 1 && r.root.lo >= 1 && sign_at(r.core, r.root.lo) * sign_at(r.core, r.root.hi) <= 0;
  if (!ok)
    why = to_string(r.kind) + " census inside=" + std::to_string(c.inside_disc) + " on=" +
          std::to_string(c.on_circle) + " outside=" + std::to_string(c.outside_disc);
  return ok;
}

// ---------------------------------------------------------------------------
// Criterion 1

void case_cyclotomic30(Checker& ck, const Table& t) {
  ck.require(cyclotomic(30) == t.poly("phi30"), "cyclotomic(30) differs from the tabulated Phi_30");
  ck.require(circle_root_count(t.poly("phi30")) == 8, "Phi_30 circle count is not 8");
}

void case_lehmer(Checker& ck, const Table& t) {
  const ConstructionResult r = salem_cc(lehmer_Q(t), lehmer_P(t));
  ck.require(r.kind == ResultKind::Salem, "kind is " + to_string(r.kind));
  ck.require(r.core == t.poly("lehmer"), "core " + to_expression(r.core));
  ck.require(r.cofactor.is_one(), "cofactor " + to_expression(r.cofactor));
  const Rational v = t.decimals("lehmer-root").front();
  const Rational tol(1, 100000);
  ck.require(r.root.lo >= v - tol && r.root.hi <= v + tol,
             "root enclosure [" + dec(r.root.lo) + ", " + dec(r.root.hi) + "] outside 1.17628 +- 1e-5");
  ck.note("tau in [" + dec(r.root.lo) + ", " + dec(r.root.hi) + "]");
}

// Criterion 2

void case_eighth_roots(Checker& ck, const Table& t) {
  const ConstructionResult r = salem_cc(t.poly("eighth-Q"), t.poly("eighth-P"));
  ck.require(r.core == t.poly("eighth-core"), "core " + to_expression(r.core));
  ck.require(r.cofactor == t.poly("eighth-cofactor"), "cofactor " + to_expression(r.cofactor));
}

// Criterion 3

void case_pisot16(Checker& ck, const Table& t) {
  const ConstructionResult r = pisot_cc(Quotient{lehmer_Q(t), lehmer_P(t)}, LimitFunctionSpec::single('B', 1, 7));
  ck.require(r.kind == ResultKind::Pisot, "kind is " + to_string(r.kind));
  ck.require(r.core == t.poly("pisot16"), "core " + to_expression(r.core));
  const PolyClassification c = classify_poly(r.core);
  ck.require(c.kind == PolyKind::PisotPoly, "classify_poly says " + to_string(c.kind));
  ck.require(c.trace == -1, "trace " + c.trace.get_str());
  ck.require(c.core.degree() == 16, "degree " + std::to_string(c.core.degree()));
  ck.note("theta in [" + dec(r.root.lo) + ", " + dec(r.root.hi) + "]");
}

// Criterion 4

void case_degree54(Checker& ck, const Table& t) {
  // The added terms are quoted with (z - 1) pulled out of the denominator, so
  // reduce each before summing.
  const RationalFunction first(t.poly("degree54-Q1"), t.poly("degree54-P1"));
  const RationalFunction second(t.poly("degree54-Q2"), t.poly("degree54-P2"));
  const RationalFunction added = sum_quotients(first.num(), first.den(), second.num(), second.den());
  const RationalFunction total = sum_quotients(lehmer_Q(t), lehmer_P(t), added.num(), added.den());
  const ConstructionResult r = salem_cc(total.num(), total.den());
  ck.require(r.kind == ResultKind::Salem, "kind is " + to_string(r.kind));
  ck.require(r.core.degree() == 54, "degree " + std::to_string(r.core.degree()));
  ck.require(r.cofactor.is_one(), "cofactor " + to_expression(r.cofactor));
  const IntPolynomial head = t.poly("degree54-head");
  bool head_ok = r.core.degree() >= head.degree();
  for (int i = 0; head_ok && i <= head.degree(); ++i)
    head_ok = r.core.coefficient(static_cast<std::size_t>(r.core.degree() - i)) ==
              head.coefficient(static_cast<std::size_t>(head.degree() - i));
  ck.require(head_ok, "leading coefficients differ");
  const PolyClassification c = classify_poly(r.core);
  ck.require(c.kind == PolyKind::SalemPoly, "classify_poly says " + to_string(c.kind));
  ck.require(c.trace == -3, "trace " + c.trace.get_str());
}

// Criterion 5

void case_pk_lehmer(Checker& ck, const Table& t) {
  ck.require(pk(t.poly("plastic"), 8) == t.poly("lehmer"), "P_8 is not the Lehmer polynomial");
}

void case_pk_sequence(Checker& ck, const Table& t) {
  const PkSequence seq = pk_sequence(t.poly("plastic"), 12);
  ck.require(seq.onset_k0 == 8, "onset " + (seq.onset_k0 ? std::to_string(*seq.onset_k0) : std::string("none")));
  std::string kinds;
  for (const auto& e : seq.entries) {
    const InterlacingKind k = e.classification.kind;
    kinds += (kinds.empty() ? "" : " ") + to_string(k);
    ck.require(k != InterlacingKind::None, "k=" + std::to_string(e.k) + " is NONE: " + e.classification.failure_reason);
    if (e.k >= 8)
      ck.require(k == InterlacingKind::SS1 || k == InterlacingKind::SS2,
                 "k=" + std::to_string(e.k) + " is " + to_string(k) + ", expected SS");
  }
  ck.require(seq.entries.size() == 12, "expected 12 entries");
  ck.note("k=1..12: " + kinds);
}

// Criterion 6

void case_boyd(Checker& ck, const Table& t) {
  const IntPolynomial R = t.poly("lehmer");
  const IntPolynomial A = t.poly("boyd-A");
  const auto sols = boyd_solve(R, 1, 5);
  bool found = false;
  for (const auto& s : sols) found = found || s.A == A;
  ck.require(found, "tabulated A not among " + std::to_string(sols.size()) + " solutions");
  ck.note(std::to_string(sols.size()) + " solutions");

  // Enclosures of width 1e-5; the quoted values carry five decimals, so the
  // comparison allows their rounding half-unit.
  const Rational width(1, 100000);
  const Rational half_unit(1, 200000);
  const auto roots = isolate_real_roots(A, width);
  const auto expect = t.decimals("boyd-A-roots");
  ck.require(roots.size() == expect.size(), std::to_string(roots.size()) + " real roots");
  for (std::size_t i = 0; i < roots.size() && i < expect.size(); ++i)
    ck.require(near(roots[i], expect[i], half_unit),
               "root " + std::to_string(i) + " enclosure [" + dec(roots[i].lo) + ", " + dec(roots[i].hi) + "]");

  const SmallSalemReport rep = small_salem_check(R, A);
  ck.require(rep.real_root_count >= 3 && rep.real_root_count % 2 == 1,
             "real root count " + std::to_string(rep.real_root_count));
  ck.require(rep.roots_in_gap >= 1, "no root of A in (1/tau, 1)");
}

// Criterion 7

void case_round_trip(Checker& ck, const Table&) {
  const auto corpus = pisot_corpus(4, 3);
  ck.require(corpus.size() > 100, "corpus has only " + std::to_string(corpus.size()) + " entries");
  int trips = 0;
  for (const auto& A : corpus) {
    const PkSequence seq = pk_sequence(A, 1);
    if (!seq.onset_k0) {
      ck.require(false, "no onset for " + to_expression(A));
      continue;
    }
    for (long k = *seq.onset_k0; k <= *seq.onset_k0 + 2; ++k) {
      try {
        const ConstructionResult r = recover_pisot(A, k);
        ck.require(r.core == A, "k=" + std::to_string(k) + " " + to_expression(A));
      } catch (const SalemError& e) {
        ck.require(false, to_expression(A) + " k=" + std::to_string(k) + ": " + e.what());
      }
      ++trips;
    }
  }
  ck.note(std::to_string(corpus.size()) + " polynomials, " + std::to_string(trips) + " round trips");
}

// Criterion 8

constexpr std::size_t kGeneratedPairs = 240;
constexpr unsigned kGeneratorSeed = 20240601u;

void case_cc_algebra(Checker& ck, const Table&) {
  const auto pairs = generate_cc_pairs(kGeneratedPairs, kGeneratorSeed);
  int checked = 0;
  for (const auto& g : pairs) {
    const InterlacingClassification c = classify_quotient(g.Q, g.P);
    ck.require(c.kind == InterlacingKind::CC, g.recipe + " closure: " + to_string(c.kind) + " " + c.failure_reason);
    ck.require(classify_quotient(g.P, g.Q).kind == InterlacingKind::CC, g.recipe + " symmetry fails");
    const IntPolynomial sq = g.P * g.P + g.Q * g.Q;
    ck.require(circle_root_count(sq) == sq.degree(), g.recipe + " P^2+Q^2 has roots off the circle");
    const IntPolynomial s = g.P + g.Q;
    ck.require(disc_root_count(s).inside_disc == s.degree(), g.recipe + " P+Q has roots outside the open disc");
    ++checked;
  }
  ck.note(std::to_string(checked) + " generated CC pairs");
}

void case_interlacing_examples(Checker& ck, const Table& t) {
  const IntPolynomial p2 = t.poly("cs-P");
  auto kind = [](const IntPolynomial& Q, const IntPolynomial& P) { return classify_quotient(Q, P).kind; };
  ck.require(kind(lehmer_Q(t), lehmer_P(t)) == InterlacingKind::CC, "Lehmer pair is not CC");
  ck.require(kind(t.poly("cs-simple-Q"), p2) == InterlacingKind::CS, "simple CS pair is not CS");
  ck.require(kind(p2, t.poly("cs-simple-Q")) == InterlacingKind::None, "swapped CS pair is not NONE");
  ck.require(kind(t.poly("cs-triple-Q"), p2) == InterlacingKind::CS, "triple-root CS pair is not CS");
  ck.require(kind(t.poly("ss-Q"), t.poly("ss-P")) == InterlacingKind::SS1, "SS pair is not SS1");
  ck.require(kind(t.poly("ss-P"), t.poly("ss-Q")) == InterlacingKind::SS2, "swapped SS pair is not SS2");
}

void case_ss_duality(Checker& ck, const Table& t) {
  std::vector<std::pair<IntPolynomial, IntPolynomial>> ss;
  ss.emplace_back(t.poly("ss-Q"), t.poly("ss-P"));
  for (const auto& A : pisot_corpus(3, 2)) {
    const PkSequence seq = pk_sequence(A, *pk_sequence(A, 1).onset_k0 + 2);
    for (const auto& e : seq.entries) {
      if (e.k + 1 >= static_cast<long>(seq.entries.size())) break;
      const InterlacingKind k = e.classification.kind;
      if (k == InterlacingKind::SS1 || k == InterlacingKind::SS2)
        ss.emplace_back(linear(1) * e.Pk, seq.entries[static_cast<std::size_t>(e.k)].Pk);
    }
  }
  int ss1 = 0, ss2 = 0;
  for (const auto& [Q, P] : ss) {
    const RationalFunction f(Q, P);
    const InterlacingKind k = classify_quotient(f.num(), f.den()).kind;
    const InterlacingKind swapped = classify_quotient(f.den(), f.num()).kind;
    const bool ok = (k == InterlacingKind::SS1 && swapped == InterlacingKind::SS2) ||
                    (k == InterlacingKind::SS2 && swapped == InterlacingKind::SS1);
    ck.require(ok, to_expression(Q) + " / " + to_expression(P) + ": " + to_string(k) + " vs " + to_string(swapped));
    (k == InterlacingKind::SS1 ? ss1 : ss2)++;
    // Adding a CC quotient keeps the flavour within CS/SS.
    const RationalFunction sum = f + RationalFunction(linear(1), linear(-1));
    const InterlacingKind ks = classify_quotient(sum.num(), sum.den()).kind;
    ck.require(ks == InterlacingKind::CS || ks == InterlacingKind::SS1 || ks == InterlacingKind::SS2,
               "SS + CC sum classified " + to_string(ks));
  }
  ck.note(std::to_string(ss.size()) + " SS pairs (" + std::to_string(ss1) + " SS1, " + std::to_string(ss2) + " SS2)");
}

// Criterion 9

void case_convergence(Checker& ck, const Table& t) {
  const LimitFunctionSpec spec = LimitFunctionSpec::single('B', 1, 7);
  const ConstructionResult theta = pisot_cc(Quotient{lehmer_Q(t), lehmer_P(t)}, spec);
  const Rational width = pow2(-200);
  const IsolatingInterval th = tight(theta.core, theta.root, width);
  std::vector<std::pair<Rational, Rational>> gaps;  // bounds on |tau_n - theta|
  std::ostringstream os;
  for (long n : {10L, 20L, 40L, 80L}) {
    const RationalFunction approx = cc_approximant(spec, n);
    const RationalFunction sum = sum_quotients(lehmer_Q(t), lehmer_P(t), approx.num(), approx.den());
    const ConstructionResult r = salem_cc(sum.num(), sum.den());
    const IsolatingInterval tau = tight(r.core, r.root, width);
    Rational lo = std::max(Rational(tau.lo - th.hi), Rational(th.lo - tau.hi));
    if (lo < 0) lo = 0;
    const Rational hi = std::max(Rational(tau.hi - th.lo), Rational(th.hi - tau.lo));
    gaps.emplace_back(lo, hi);
    os << "n=" << n << " |tau-theta|~" << hi.get_d() << " ";
  }
  for (std::size_t i = 1; i < gaps.size(); ++i)
    ck.require(gaps[i].second < gaps[i - 1].first, "gap does not shrink at step " + std::to_string(i));
  ck.require(gaps.back().second < Rational(1, 1000), "|tau_80 - theta| >= 1e-3");
  ck.note(os.str());
}

// Criterion 10

void case_census(Checker& ck, const Table& t) {
  std::vector<std::pair<std::string, std::function<ConstructionResult()>>> runs;
  const IntPolynomial Q = lehmer_Q(t), P = lehmer_P(t);
  const IntPolynomial A = t.poly("plastic");
  const LimitFunctionSpec b7 = LimitFunctionSpec::single('B', 1, 7);
  const LimitFunctionSpec inv_z = LimitFunctionSpec::single('A', 1, 1);
  runs.emplace_back("salem_cc Lehmer", [&] { return salem_cc(Q, P); });
  runs.emplace_back("salem_cc eighth", [&] { return salem_cc(t.poly("eighth-Q"), t.poly("eighth-P")); });
  runs.emplace_back("salem_cc quadratic", [&] { return salem_cc(IntPolynomial{-3, 0, 3}, IntPolynomial{1, 0, 1}); });
  runs.emplace_back("salem_cs simple", [&] { return salem_cs(t.poly("cs-simple-Q"), t.poly("cs-P")); });
  runs.emplace_back("salem_cs triple", [&] { return salem_cs(t.poly("cs-triple-Q"), t.poly("cs-P")); });
  runs.emplace_back("salem_ss P_9", [&] { return salem_ss(linear(1) * pk(A, 8), pk(A, 9)); });
  runs.emplace_back("salem product II", [&] { return salem_cc_product(Q, P, Q, P, ProductVariant::II); });
  runs.emplace_back("salem product I",
                    [&] { return salem_cc_product(Q, P, linear(1), linear(-1), ProductVariant::I); });
  runs.emplace_back("pisot_cc B7", [&] { return pisot_cc(Quotient{Q, P}, b7); });
  runs.emplace_back("pisot_cc 1/z", [&] { return pisot_cc(Quotient{Q, P}, inv_z); });
  runs.emplace_back("pisot product II", [&] {
    return pisot_cc_product(Quotient{Q, P}, LimitFunctionSpec::single('B', 1, 7), Quotient{Q, P}, std::nullopt,
                            ProductVariant::II);
  });
  runs.emplace_back("pisot_ss k=8", [&] { return pisot_ss(linear(1) * pk(A, 8), pk(A, 9), inv_z); });
  runs.emplace_back("pisot_ss k=12", [&] { return pisot_ss(linear(1) * pk(A, 12), pk(A, 13), inv_z); });
  int certified = 0;
  for (const auto& [name, run] : runs) {
    try {
      const ConstructionResult r = run();
      std::string why;
      ck.require(census_ok(r, why), name + ": " + why);
      ++certified;
    } catch (const SalemError& e) {
      ck.require(false, name + ": " + e.what());
    }
  }
  // The certification step must reject a polynomial of the wrong shape.
  bool rejected = false;
  try {
    certify_salem(A * IntPolynomial{1, 0, 1});
  } catch (const SalemError& e) {
    rejected = e.code() == ErrorCode::UnexpectedCensus;
  }
  ck.require(rejected, "certify_salem accepted a Pisot polynomial");
  bool rejected_pisot = false;
  try {
    certify_pisot(t.poly("lehmer"));
  } catch (const SalemError& e) {
    rejected_pisot = e.code() == ErrorCode::UnexpectedCensus;
  }
  ck.require(rejected_pisot, "certify_pisot accepted a Salem polynomial");
  ck.note(std::to_string(certified) + " results certified");
}

struct CaseDef {
  const char* name;
  int criterion;
  void (*fn)(Checker&, const Table&);
};

const std::vector<CaseDef>& cases() {
  static const std::vector<CaseDef> c = {
      {"cyclotomic-30", 1, case_cyclotomic30},
      {"lehmer-salem-cc", 1, case_lehmer},
      {"eighth-roots-cofactor", 2, case_eighth_roots},
      {"pisot-degree-16", 3, case_pisot16},
      {"salem-degree-54", 4, case_degree54},
      {"pk-lehmer", 5, case_pk_lehmer},
      {"pk-sequence-plastic", 5, case_pk_sequence},
      {"boyd-lehmer", 6, case_boyd},
      {"pisot-round-trip", 7, case_round_trip},
      {"interlacing-examples", 8, case_interlacing_examples},
      {"cc-pair-algebra", 8, case_cc_algebra},
      {"ss-duality", 8, case_ss_duality},
      {"approximant-convergence", 9, case_convergence},
      {"census-self-checks", 10, case_census},
  };
  return c;
}

}  // namespace

bool GoldenReport::passed() const {
  for (const auto& c : cases)
    if (!c.passed) return false;
  return !cases.empty();
}

bool GoldenReport::criterion_passed(int criterion) const {
  bool any = false;
  for (const auto& c : cases) {
    if (c.criterion != criterion) continue;
    any = true;
    if (!c.passed) return false;
  }
  return any;
}

std::vector<std::string> golden_case_names() {
  std::vector<std::string> out;
  for (const auto& c : cases()) out.emplace_back(c.name);
  return out;
}

std::vector<std::string> golden_table_keys() {
  std::vector<std::string> out;
  for (const auto& [k, v] : polynomial_table()) out.push_back(k);
  for (const auto& [k, v] : decimal_table()) out.push_back(k);
  return out;
}

std::string criterion_title(int criterion) {
  switch (criterion) {
    case 1: return "Lehmer polynomial from the CC construction";
    case 2: return "cyclotomic cofactor z^4+1";
    case 3: return "degree-16 Pisot polynomial of trace -1";
    case 4: return "degree-54 Salem polynomial of trace -3";
    case 5: return "P_k sequence of z^3-z-1";
    case 6: return "Boyd equation for the Lehmer polynomial";
    case 7: return "Pisot round trip over the small corpus";
    case 8: return "interlacing algebra";
    case 9: return "Salem approximants converge to the Pisot number";
    case 10: return "census self-checks";
    default: return "unknown";
  }
}

GoldenReport run_golden_suite(const GoldenOptions& options) {
  for (const auto& key : options.inject) {
    if (!polynomial_table().count(key) && !decimal_table().count(key))
      fail(ErrorCode::InvalidArgument, "unknown table entry '" + key + "'");
  }
  const Table table(options.inject);
  GoldenReport report;
  for (const auto& c : cases()) {
    if (!options.filter.empty() && std::string(c.name).find(options.filter) == std::string::npos) continue;
    GoldenCaseResult res;
    res.name = c.name;
    res.criterion = c.criterion;
    Checker ck;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.fn(ck, table);
    } catch (const std::exception& e) {
      ck.require(false, std::string("exception: ") + e.what());
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.passed = ck.failures.empty();
    if (ck.failures.size() > 5) {
      const std::size_t extra = ck.failures.size() - 5;
      ck.failures.resize(5);
      ck.failures.push_back("and " + std::to_string(extra) + " more");
    }
    res.detail = res.passed ? join(ck.notes) : join(ck.failures);
    report.cases.push_back(std::move(res));
  }
  return report;
}

}  // namespace salemforge::cli
