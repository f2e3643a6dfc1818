#include "salemforge/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "salemforge/cli/golden.hpp"
#include "salemforge/salemforge.hpp"

namespace salemforge::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Settings {
  std::string format = "text";
  int precision = 12;
};

// ---------------------------------------------------------------------------
// Serialization

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json poly_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(integer_json(c));
  return a;
}

Json enclosure_json(const IntPolynomial& f, IsolatingInterval iv, int precision) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(precision + 1));
  const Rational width(1, scale);
  if (iv.width() > width && iv.multiplicity == 1) iv = refine_root(f, iv, width);
  return Json{{"lo", render_decimal(iv.lo, precision, false)}, {"hi", render_decimal(iv.hi, precision, true)}};
}

Json census_json(const RootCensus& c) {
  return Json{{"inside", c.inside_disc},
              {"on_circle", c.on_circle},
              {"outside", c.outside_disc},
              {"real_gt_1", c.real_gt_1},
              {"real_in_01", c.real_in_01}};
}

Json construction_json(const ConstructionResult& r, int precision) {
  Json diag = Json::array();
  for (const auto& d : r.diagnostics) diag.push_back(d);
  for (long n : r.cyclotomic_indices) diag.push_back("cofactor contains Phi_" + std::to_string(n));
  diag.push_back("census inside=" + std::to_string(r.census.inside_disc) + " on=" + std::to_string(r.census.on_circle) +
                 " outside=" + std::to_string(r.census.outside_disc));
  return Json{{"kind", to_string(r.kind)},
              {"core", poly_json(r.core)},
              {"cofactor", poly_json(r.cofactor)},
              {"z_power", r.z_power},
              {"root", enclosure_json(r.core, r.root, precision)},
              {"trace", integer_json(r.trace)},
              {"diagnostics", diag}};
}

Json classification_json(const InterlacingClassification& c) {
  auto roots = [](const std::vector<CircleRoot>& rs) {
    Json a = Json::array();
    for (const auto& r : rs) {
      std::ostringstream os;
      os << std::setprecision(12) << r.angle();
      a.push_back(Json{{"angle", os.str()}, {"multiplicity", r.multiplicity}});
    }
    return a;
  };
  Json j{{"kind", to_string(c.kind)}};
  if (c.kind == InterlacingKind::None) j["failure_reason"] = c.failure_reason;
  j["circle_order"] = c.circle_order;
  j["circle_roots_P"] = roots(c.circle_roots_P);
  j["circle_roots_Q"] = roots(c.circle_roots_Q);
  j["census_P"] = census_json(c.census_P);
  j["census_Q"] = census_json(c.census_Q);
  return j;
}

// Text rendering of the same document, so both modes carry identical content.
bool is_integer_array(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& e : j) {
    if (e.is_number_integer()) continue;
    if (e.is_string() && !e.get<std::string>().empty() &&
        e.get<std::string>().find_first_not_of("-0123456789") == std::string::npos)
      continue;
    return false;
  }
  return true;
}

IntPolynomial poly_from_json(const Json& j) {
  std::vector<Integer> c;
  for (const auto& e : j) c.emplace_back(e.is_string() ? Integer(e.get<std::string>(), 10) : Integer(e.dump(), 10));
  return IntPolynomial(std::move(c));
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

void render_text(const Json& j, std::ostream& out, int indent);

void render_value(const std::string& key, const Json& v, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const bool polynomial = key != "free_params";
  if (is_integer_array(v)) {
    std::string list;
    for (const auto& e : v) list += (list.empty() ? "" : ",") + scalar_text(e);
    out << pad << key << ": " << list;
    if (polynomial) out << "  [" << to_expression(poly_from_json(v)) << "]";
    out << "\n";
  } else if (v.is_object()) {
    if (v.size() == 2 && v.contains("lo") && v.contains("hi")) {
      out << pad << key << ": [" << scalar_text(v["lo"]) << ", " << scalar_text(v["hi"]) << "]\n";
    } else {
      out << pad << key << ":\n";
      render_text(v, out, indent + 2);
    }
  } else if (v.is_array()) {
    out << pad << key << ":";
    if (v.empty()) out << " (none)";
    out << "\n";
    for (const auto& e : v) {
      if (e.is_object()) {
        std::ostringstream item;
        render_text(e, item, indent + 4);
        std::string s = item.str();
        s.replace(static_cast<std::size_t>(indent) + 2, 2, "- ");
        out << s;
      } else {
        out << pad << "  - " << scalar_text(e) << "\n";
      }
    }
  } else {
    out << pad << key << ": " << scalar_text(v) << "\n";
  }
}

void render_text(const Json& j, std::ostream& out, int indent) {
  for (auto it = j.begin(); it != j.end(); ++it) render_value(it.key(), it.value(), out, indent);
}

void emit(const Json& doc, const Settings& s, std::ostream& out) {
  if (s.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    render_text(doc, out, 0);
  }
}

// ---------------------------------------------------------------------------
// Input

IntPolynomial parse_arg(const std::string& text, const char* name) {
  try {
    return parse_polynomial(text);
  } catch (const SalemError& e) {
    const std::string prefix = std::string(to_string(e.code())) + ": ";
    std::string msg = e.what();
    if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
    fail(e.code(), std::string("argument ") + name + ": " + msg);
  }
}

LimitFunctionSpec parse_spec(const std::string& text) {
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) fail(ErrorCode::ParseError, "cannot read spec file " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return limit_spec_from_json(ss.str());
  }
  return limit_spec_from_json(text);
}

ProductVariant parse_variant(const std::string& v) {
  if (v == "I") return ProductVariant::I;
  if (v == "II") return ProductVariant::II;
  fail(ErrorCode::InvalidArgument, "variant must be I or II");
}

Quotient quotient_arg(const std::string& q, const std::string& p, const char* qname, const char* pname) {
  Quotient g{parse_arg(q, qname), parse_arg(p, pname)};
  return g;
}

// ---------------------------------------------------------------------------
// Commands

Json cmd_classify(const std::string& text, const Settings& s) {
  const IntPolynomial f = parse_arg(text, "poly");
  const PolyClassification c = classify_poly(f);
  Json diag = Json::array();
  for (long n : strip_cyclotomic(c.cofactor).factors) diag.push_back("cofactor contains Phi_" + std::to_string(n));
  Json j{{"kind", to_string(c.kind)},
         {"core", poly_json(c.core)},
         {"cofactor", poly_json(c.cofactor)},
         {"z_power", c.z_power}};
  if (c.salem_or_pisot_factor) {
    const IntPolynomial& core = *c.salem_or_pisot_factor;
    const auto roots = isolate_real_roots_in(core, Rational(1), root_bound(core), pow2(-64));
    if (roots.size() == 1) j["root"] = enclosure_json(core, roots.front(), s.precision);
  }
  j["trace"] = integer_json(c.trace);
  if (c.core.degree() >= 1) j["census"] = census_json(disc_root_count(c.core));
  j["diagnostics"] = diag;
  return j;
}

Json cmd_quotient(const std::string& q, const std::string& p) {
  const IntPolynomial Q = parse_arg(q, "Q");
  const IntPolynomial P = parse_arg(p, "P");
  Json j = classification_json(classify_quotient(Q, P));
  try {
    const RealQuotient rq = real_quotient(Q, P);
    Json signs = Json::array();
    for (const auto& r : rq.residues) signs.push_back(r.sign);
    j["real_quotient"] = Json{{"q", poly_json(rq.q)}, {"p", poly_json(rq.p)}, {"residue_signs", signs}};
  } catch (const SalemError& e) {
    if (e.code() != ErrorCode::NotTransformable) throw;
  }
  return j;
}

Json cmd_pk(const std::string& a, long kmax) {
  const IntPolynomial A = parse_arg(a, "A");
  const PkSequence seq = pk_sequence(A, kmax);
  Json entries = Json::array();
  for (const auto& e : seq.entries) {
    Json row{{"k", e.k},
             {"value_at_one", integer_json(pk_value_at_one(A, e.k))},
             {"kind", to_string(e.classification.kind)},
             {"Pk", poly_json(e.Pk)}};
    if (e.classification.kind == InterlacingKind::None) row["failure_reason"] = e.classification.failure_reason;
    entries.push_back(row);
  }
  Json j{{"A", poly_json(A)}};
  j["onset_k0"] = seq.onset_k0 ? Json(*seq.onset_k0) : Json(nullptr);
  j["reciprocal_quadratic_source"] = seq.reciprocal_quadratic_source;
  j["entries"] = entries;
  return j;
}

Json cmd_boyd(const std::string& r, int eps, long bound, unsigned threads) {
  const IntPolynomial R = parse_arg(r, "R");
  const auto sols = boyd_solve(R, eps, bound, threads);
  Json list = Json::array();
  for (const auto& s : sols) {
    Json params = Json::array();
    for (const auto& v : s.free_params) params.push_back(integer_json(v));
    list.push_back(Json{{"A", poly_json(s.A)}, {"S", poly_json(s.S)}, {"free_params", params}});
  }
  return Json{{"R", poly_json(R)}, {"epsilon", eps}, {"bound", bound}, {"count", sols.size()}, {"solutions", list}};
}

Json cmd_type(const std::string& r, const std::string& a) {
  const SalemTypeReport rep = salem_type(parse_arg(r, "R"), parse_arg(a, "A"));
  return Json{{"type", to_string(rep.type)},
              {"kind", to_string(rep.classification.kind)},
              {"circle_order", rep.classification.circle_order},
              {"P1", poly_json(rep.P1)},
              {"P2", poly_json(rep.P2)}};
}

Json cmd_smallsalem(const std::string& r, const std::string& a, const Settings& s) {
  const IntPolynomial R = parse_arg(r, "R");
  const IntPolynomial A = parse_arg(a, "A");
  const SmallSalemReport rep = small_salem_check(R, A);
  Json roots = Json::array();
  for (const auto& iv : rep.real_roots)
    roots.push_back(Json{{"lo", render_decimal(iv.lo, s.precision, false)},
                         {"hi", render_decimal(iv.hi, s.precision, true)}});
  return Json{{"tau", Json{{"lo", render_decimal(rep.tau.lo, s.precision, false)},
                           {"hi", render_decimal(rep.tau.hi, s.precision, true)}}},
              {"real_root_count", rep.real_root_count},
              {"roots_in_gap", rep.roots_in_gap},
              {"real_roots", roots}};
}

Json cmd_rootplot(const std::string& q, const std::string& p) {
  const IntPolynomial Q = parse_arg(q, "Q");
  const IntPolynomial P = parse_arg(p, "P");
  const InterlacingClassification c = classify_quotient(Q, P);
  Json points = Json::array();
  auto num = [](double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
  };
  auto add_circle = [&](const std::vector<CircleRoot>& rs) {
    for (const auto& r : rs)
      points.push_back(Json{{"owner", std::string(1, r.owner)},
                            {"angle", num(r.angle())},
                            {"radius", "1"},
                            {"multiplicity", r.multiplicity}});
  };
  add_circle(c.circle_roots_P);
  add_circle(c.circle_roots_Q);
  auto add_real = [&](const IntPolynomial& f, char owner) {
    if (f.degree() < 1) return;
    for (const auto& iv : isolate_real_roots(f, pow2(-40))) {
      const double x = iv.midpoint();
      if (iv.contains(Rational(1)) || iv.contains(Rational(-1))) continue;
      points.push_back(Json{{"owner", std::string(1, owner)},
                            {"angle", num(x < 0 ? 3.14159265358979 : 0.0)},
                            {"radius", num(x < 0 ? -x : x)},
                            {"multiplicity", iv.multiplicity}});
    }
  };
  add_real(P, 'P');
  add_real(Q, 'Q');
  Json j{{"kind", to_string(c.kind)}};
  if (c.kind == InterlacingKind::None) j["failure_reason"] = c.failure_reason;
  j["points"] = points;
  return j;
}

int cmd_golden(const std::vector<std::string>& inject, const std::string& filter, bool list, const Settings& s,
               std::ostream& out) {
  if (list) {
    Json j{{"cases", golden_case_names()}, {"table_keys", golden_table_keys()}};
    emit(j, s, out);
    return kExitOk;
  }
  GoldenOptions opt;
  opt.inject.insert(inject.begin(), inject.end());
  opt.filter = filter;
  const GoldenReport rep = run_golden_suite(opt);
  Json cases = Json::array();
  for (const auto& c : rep.cases) {
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(3) << c.seconds;
    cases.push_back(Json{{"name", c.name},
                         {"criterion", c.criterion},
                         {"passed", c.passed},
                         {"seconds", secs.str()},
                         {"detail", c.detail}});
  }
  emit(Json{{"passed", rep.passed()}, {"cases", cases}}, s, out);
  return rep.passed() ? kExitOk : kExitInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and verification of Salem and Pisot numbers", "salemforge"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Settings s;
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--precision", s.precision, "Decimal digits of root enclosures")->check(CLI::Range(0, 200));

  std::string a1, a2, a3, a4, spec1, spec2, variant = "II";
  long kmax = 12, k = 0, bound = 3;
  int eps = 1;
  unsigned threads = 0;
  std::vector<std::string> inject;
  std::string filter;
  bool list = false;

  auto* classify = app.add_subcommand("classify", "Classify a polynomial as Salem, Pisot, cyclotomic or other");
  classify->add_option("poly", a1)->required();

  auto* quotient = app.add_subcommand("quotient", "Interlacing quotients");
  quotient->require_subcommand(1, 1);
  auto* qclassify = quotient->add_subcommand("classify", "Classify Q/P as CC, CS, SS1, SS2 or NONE");
  qclassify->add_option("Q", a1)->required();
  qclassify->add_option("P", a2)->required();

  auto* salem = app.add_subcommand("salem", "Salem constructions");
  salem->require_subcommand(1, 1);
  std::vector<CLI::App*> salem_single;
  for (const char* name : {"cc", "cs", "ss"}) {
    auto* sub = salem->add_subcommand(name, std::string("Salem number from a ") + name + " quotient Q/P");
    sub->add_option("Q", a1)->required();
    sub->add_option("P", a2)->required();
    salem_single.push_back(sub);
  }
  auto* salem_product = salem->add_subcommand("product", "Salem number from two CC quotients");
  salem_product->add_option("Q1", a1)->required();
  salem_product->add_option("P1", a2)->required();
  salem_product->add_option("Q2", a3)->required();
  salem_product->add_option("P2", a4)->required();
  salem_product->add_option("--variant", variant)->check(CLI::IsMember({"I", "II"}));

  auto* pisot = app.add_subcommand("pisot", "Pisot constructions");
  pisot->require_subcommand(1, 1);
  auto* pisot_cc_cmd = pisot->add_subcommand("cc", "Pisot number from a CC quotient (or 0/1) and a limit function");
  auto* pisot_ss_cmd = pisot->add_subcommand("ss", "Pisot number from a CS or SS quotient and a limit function");
  for (auto* sub : {pisot_cc_cmd, pisot_ss_cmd}) {
    sub->add_option("Q", a1)->required();
    sub->add_option("P", a2)->required();
    sub->add_option("--spec", spec1, "Limit function as JSON, or @file")->required();
  }
  auto* pisot_product = pisot->add_subcommand("product", "Pisot number from two CC-or-zero quotients");
  pisot_product->add_option("Q1", a1)->required();
  pisot_product->add_option("P1", a2)->required();
  pisot_product->add_option("Q2", a3)->required();
  pisot_product->add_option("P2", a4)->required();
  pisot_product->add_option("--spec", spec1, "First limit function")->required();
  pisot_product->add_option("--spec2", spec2, "Optional second limit function");
  pisot_product->add_option("--variant", variant)->check(CLI::IsMember({"I", "II"}));

  auto* seq = app.add_subcommand("seq", "Sequences built from a Pisot polynomial");
  seq->require_subcommand(1, 1);
  auto* seq_pk = seq->add_subcommand("pk", "The P_k sequence with classifications");
  seq_pk->add_option("A", a1)->required();
  seq_pk->add_option("--kmax", kmax)->check(CLI::Range(1L, 10000L));

  auto* recover = app.add_subcommand("recover", "Recover A from (z-1)P_k/P_{k+1}");
  recover->add_option("A", a1)->required();
  recover->add_option("--k", k)->required()->check(CLI::Range(1L, 10000L));

  auto* boyd = app.add_subcommand("boyd", "Solve S R = z A + eps A* for Pisot A");
  boyd->add_option("R", a1)->required();
  boyd->add_option("--eps", eps)->check(CLI::IsMember({1, -1}));
  boyd->add_option("--bound", bound)->check(CLI::Range(0L, 1000L));
  boyd->add_option("--threads", threads, "Worker count (default: SALEMFORGE_THREADS or hardware)");

  auto* type = app.add_subcommand("type", "Salem type I-IV of R with Boyd partner A");
  type->add_option("R", a1)->required();
  type->add_option("A", a2)->required();

  auto* small = app.add_subcommand("smallsalem", "Real roots of A for a small Salem number R");
  small->add_option("R", a1)->required();
  small->add_option("A", a2)->required();

  auto* rootplot = app.add_subcommand("rootplot", "Root angle/radius data of P and Q for plotting");
  rootplot->add_option("Q", a1)->required();
  rootplot->add_option("P", a2)->required();

  auto* golden = app.add_subcommand("golden", "Run the golden and property suite");
  golden->add_option("--inject", inject, "Corrupt a frozen table entry");
  golden->add_option("--filter", filter, "Run only cases whose name contains this text");
  golden->add_flag("--list", list, "List case names and table keys");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }

  try {
    Json doc;
    if (classify->parsed()) {
      doc = cmd_classify(a1, s);
    } else if (qclassify->parsed()) {
      doc = cmd_quotient(a1, a2);
    } else if (salem->parsed()) {
      ConstructionResult r;
      if (salem_product->parsed()) {
        r = salem_cc_product(parse_arg(a1, "Q1"), parse_arg(a2, "P1"), parse_arg(a3, "Q2"), parse_arg(a4, "P2"),
                             parse_variant(variant));
      } else {
        const IntPolynomial Q = parse_arg(a1, "Q");
        const IntPolynomial P = parse_arg(a2, "P");
        if (salem_single[0]->parsed()) r = salem_cc(Q, P);
        if (salem_single[1]->parsed()) r = salem_cs(Q, P);
        if (salem_single[2]->parsed()) r = salem_ss(Q, P);
      }
      doc = construction_json(r, s.precision);
    } else if (pisot->parsed()) {
      ConstructionResult r;
      if (pisot_product->parsed()) {
        std::optional<LimitFunctionSpec> second;
        if (!spec2.empty()) second = parse_spec(spec2);
        r = pisot_cc_product(quotient_arg(a1, a2, "Q1", "P1"), parse_spec(spec1), quotient_arg(a3, a4, "Q2", "P2"),
                             second, parse_variant(variant));
      } else if (pisot_cc_cmd->parsed()) {
        r = pisot_cc(quotient_arg(a1, a2, "Q", "P"), parse_spec(spec1));
      } else {
        r = pisot_ss(parse_arg(a1, "Q"), parse_arg(a2, "P"), parse_spec(spec1));
      }
      doc = construction_json(r, s.precision);
    } else if (seq_pk->parsed()) {
      doc = cmd_pk(a1, kmax);
    } else if (recover->parsed()) {
      doc = construction_json(recover_pisot(parse_arg(a1, "A"), k), s.precision);
    } else if (boyd->parsed()) {
      doc = cmd_boyd(a1, eps, bound, threads);
    } else if (type->parsed()) {
      doc = cmd_type(a1, a2);
    } else if (small->parsed()) {
      doc = cmd_smallsalem(a1, a2, s);
    } else if (rootplot->parsed()) {
      doc = cmd_rootplot(a1, a2);
    } else if (golden->parsed()) {
      return cmd_golden(inject, filter, list, s, out);
    }
    emit(doc, s, out);
    return kExitOk;
  } catch (const SalemError& e) {
    err << "error: " << e.what() << "\n";
    return is_precondition_failure(e.code()) ? kExitPrecondition : kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace salemforge::cli
