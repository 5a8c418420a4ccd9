#include "commands.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "koszulcat/errors.hpp"
#include "koszulcat/syzygy.hpp"
#include "problem.hpp"

namespace koszulcat::cli {
namespace {

struct Context {
  const Options& opts;
  Problem problem;
  Exec exec;
  Report report;
  std::optional<int> cap;  // resolved max-degree
};

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

Certificate from_validation(const std::string& statement, const ValidationReport& r) {
  Certificate c;
  c.statement = statement;
  if (r.ok()) {
    c.add("all axiom instances hold", true, std::to_string(r.checked) + " checked");
    return c;
  }
  for (const auto& v : r.violations) c.add(v.axiom, false, join(v.where, ", ") + (v.detail.empty() ? "" : ": " + v.detail));
  return c;
}

std::string resolve_monoid_name(const Context& cx) {
  if (cx.opts.monoid) return *cx.opts.monoid;
  if (!cx.problem.task.monoid.empty()) return cx.problem.task.monoid;
  if (cx.problem.monoid_order.empty()) throw ParseError("the problem defines no monoid");
  return cx.problem.monoid_order.back();
}

const PolynomialMonoid* polynomial_of(const Problem& p, const std::string& name) {
  const auto it = p.polynomials.find(name);
  return it == p.polynomials.end() ? nullptr : &it->second;
}

std::vector<std::string> resolve_alpha(const Context& cx) {
  std::vector<std::string> out;
  const auto& src = cx.opts.alpha.empty() ? cx.problem.task.alpha : cx.opts.alpha;
  for (const auto& a : src) {
    // "--alpha x,y" and "--alpha x --alpha y" are equivalent.
    std::stringstream ss(a);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      piece.erase(0, piece.find_first_not_of(' '));
      piece.erase(piece.find_last_not_of(' ') + 1);
      if (!piece.empty()) out.push_back(piece);
    }
  }
  return out;
}

std::vector<std::string> resolve_modules(const Context& cx) {
  return cx.opts.modules.empty() ? cx.problem.task.modules : cx.opts.modules;
}

std::size_t require_n(const Context& cx) {
  if (cx.opts.n) return *cx.opts.n;
  if (cx.problem.task.n) return *cx.problem.task.n;
  throw ParseError("this command needs -n");
}

int require_cap(const Context& cx) {
  if (!cx.cap) throw ParseError("this command needs --max-degree");
  return *cx.cap;
}

/// Dimension rows of a representation per object, per degree up to `top`.
std::vector<GradedEntry> rep_rows(const Representation& r, std::optional<int> top, int p = 0) {
  std::vector<GradedEntry> rows;
  for (std::size_t x = 0; x < r.num_objects(); ++x) {
    if (!r.is_graded()) {
      rows.push_back({p, x, std::nullopt, r.dims[x]});
      continue;
    }
    const int last = top ? *top : r.cap >= 0 ? r.cap : r.max_degree();
    for (int d = 0; d <= last; ++d) rows.push_back({p, x, d, r.basis_in_degree(x, d).size()});
  }
  return rows;
}

std::vector<GradedEntry> term_rows(const ChainComplex& c) {
  std::vector<GradedEntry> rows;
  for (std::size_t p = 0; p < c.terms.size(); ++p) {
    const auto& r = c.terms[p].carrier;
    for (std::size_t x = 0; x < r.num_objects(); ++x) {
      if (!c.graded) {
        rows.push_back({static_cast<int>(p), x, std::nullopt, r.dims[x]});
        continue;
      }
      for (int d : c.cell_degrees(x)) rows.push_back({static_cast<int>(p), x, d, r.basis_in_degree(x, d).size()});
    }
  }
  return rows;
}

void add_graded(Report& rep, const GradedReport& g, const CategoryPresentation& c) {
  rep.add_table(g.title, g.entries, c);
  for (const auto& cert : g.certificates) rep.add_certificate(cert);
  for (const auto& n : g.notes) rep.add_note(n);
}

void add_witnesses(Report& rep, const RegularityCertificate& reg, const Representation& r) {
  for (const auto& s : reg.stages) {
    if (s.witness) rep.add_witness(*s.witness, r, s.element);
  }
}

struct ParsedAlpha {
  MonoidPtr monoid;
  std::vector<std::string> names;
  std::vector<ElementRef> elements;
};

ParsedAlpha parse_alpha(Context& cx) {
  const std::string name = resolve_monoid_name(cx);
  ParsedAlpha out{cx.problem.monoid(name), resolve_alpha(cx), {}};
  if (out.names.empty()) throw ParseError("this command needs --alpha");
  const auto* poly = polynomial_of(cx.problem, name);
  for (const auto& a : out.names) out.elements.push_back(parse_element(*out.monoid, poly, a));
  auto& par = cx.report.parameters();
  par["monoid"] = name;
  par["alpha"] = out.names;
  return out;
}

int cap_arg(const Context& cx) { return cx.cap ? *cx.cap : kInheritCap; }

void cmd_validate(Context& cx) {
  const Problem& p = cx.problem;
  cx.report.add_certificate(from_validation("category presentation satisfies the axioms", validate_presentation(*p.category)));
  for (const auto& name : p.monoid_order) {
    const auto& m = p.monoids.at(name);
    ValidationReport r = validate_representation(m->carrier);
    r.merge(validate_monoid(*m));
    cx.report.add_certificate(from_validation("monoid " + name + " is a functor with associative unital product", r));
    cx.report.add_table("monoid " + name, rep_rows(m->carrier, std::nullopt), *p.category, false);
  }
  for (const auto& spec : p.modules) {
    if (spec.over == "A_n") {
      cx.report.add_note("module " + spec.name + " lives over A_n and is validated when n is fixed");
      continue;
    }
    const ModuleData m = build_module(p, spec, p.monoid(spec.over), polynomial_of(p, spec.over));
    ValidationReport r = validate_representation(m.carrier);
    r.merge(validate_module(m));
    cx.report.add_certificate(from_validation("module " + spec.name + " satisfies the module axioms", r));
  }
}

void cmd_koszul(Context& cx) {
  const ParsedAlpha a = parse_alpha(cx);
  const bool check = cx.opts.check_resolution || cx.problem.task.check_resolution;
  cx.report.parameters()["check-resolution"] = check;
  const auto& cat = a.monoid->cat();
  if (check) {
    const ResolutionCheck rc = check_resolution(a.monoid, a.elements, cap_arg(cx), a.names, cx.exec);
    cx.report.set_window(rc.koszul.complex.window);
    cx.report.add_table("terms K_p", term_rows(rc.koszul.complex), cat);
    cx.report.add_certificate(rc.koszul.certificate);
    add_graded(cx.report, rc.homology, cat);
    cx.report.add_certificate(rc.regularity.to_certificate("α is a regular sequence"));
    add_witnesses(cx.report, rc.regularity, a.monoid->carrier);
    return;
  }
  const KoszulComplex k = build_koszul(a.monoid, a.elements, cap_arg(cx), a.names, cx.exec);
  cx.report.set_window(k.complex.window);
  cx.report.add_table("terms K_p", term_rows(k.complex), cat);
  cx.report.add_certificate(k.certificate);
  add_graded(cx.report, homology(k.complex, cx.exec), cat);
}

void cmd_regular_check(Context& cx) {
  const ParsedAlpha a = parse_alpha(cx);
  const RegularityCertificate reg = is_regular_sequence(*a.monoid, a.elements, cap_arg(cx), a.names);
  for (const auto& s : reg.stages) {
    if (s.window) {
      cx.report.set_window(s.window);
      break;
    }
  }
  cx.report.add_certificate(reg.to_certificate("α is a regular sequence"));
  add_witnesses(cx.report, reg, a.monoid->carrier);
  if (!reg.regular()) cx.report.add_note(reg.failure());
}

void cmd_commutant(Context& cx) {
  const std::string name = resolve_monoid_name(cx);
  const auto& a = cx.problem.monoid(name);
  cx.report.parameters()["monoid"] = name;
  std::vector<GradedEntry> rows;
  for (std::size_t x = 0; x < a->carrier.num_objects(); ++x) {
    const SubspacePresentation s = commutant(*a, x);
    rows.push_back({0, x, std::nullopt, s.dim()});
    for (std::size_t j = 0; j < s.dim(); ++j) {
      cx.report.add_note("C" + name + "(" + a->cat().objects[x] + ") basis: " +
                         format_element(a->carrier, x, s.basis.column(j)));
    }
  }
  cx.report.add_table("commutant dims", rows, a->cat(), false);
}

void cmd_tensor_idem(Context& cx) {
  const std::string name = resolve_monoid_name(cx);
  const auto& a = cx.problem.monoid(name);
  cx.report.parameters()["monoid"] = name;
  const TensorIdempotentCertificate t = certify_tensor_idempotent(a, cx.exec);
  cx.report.add_table(name + " dims", rep_rows(a->carrier, std::nullopt), a->cat(), false);
  cx.report.add_certificate(t.certificate);
  cx.report.add_note("mode: " + to_string(t.mode));
  if (!t.pass()) {
    cx.report.add_note(t.failure);
    cx.report.fail();
  }
}

struct Enveloping {
  TensorIdempotentCertificate idem;
  std::optional<EnvelopingData> e;
};

/// Common prefix of hh and syzygy; empty `e` means the refusal was reported.
Enveloping enveloping(Context& cx) {
  const std::string name = resolve_monoid_name(cx);
  const auto& a = cx.problem.monoid(name);
  const std::size_t n = require_n(cx);
  const int cap = require_cap(cx);
  auto& par = cx.report.parameters();
  par["monoid"] = name;
  par["n"] = n;
  Enveloping out{certify_tensor_idempotent(a, cx.exec), std::nullopt};
  if (!out.idem.pass()) {
    cx.report.add_certificate(out.idem.certificate);
    cx.report.add_note("refusing: " + name + " is not certified tensor-idempotent and commutative (" +
                       out.idem.failure + ")");
    cx.report.fail();
    return out;
  }
  out.e = build_enveloping(a, n, cap, out.idem, cx.exec);
  cx.report.add_certificate(out.e->certificate);
  return out;
}

ModuleData module_over_an(Context& cx, const EnvelopingData& e, const std::string& name) {
  const ModuleSpec& spec = cx.problem.module(name);
  if (spec.over != "A_n") throw PreconditionError("module " + name + " must be declared over A_n");
  ModuleData m = build_module(cx.problem, spec, e.an.monoid, &e.an);
  const ValidationReport r = validate_module(m);
  if (!r.ok()) {
    cx.report.add_certificate(from_validation("module " + name + " satisfies the module axioms", r));
    throw PreconditionError("module " + name + " violates the module axioms");
  }
  return m;
}

void cmd_hh(Context& cx) {
  const auto mods = resolve_modules(cx);
  if (mods.size() > 1) throw ParseError("hh takes at most one --module");
  const std::optional<int> p = cx.opts.p ? cx.opts.p : cx.problem.task.p;
  auto& par = cx.report.parameters();
  par["module"] = mods.empty() ? "A_n" : mods.front();
  if (p) par["p"] = *p;
  else par["p"] = nullptr;
  Enveloping env = enveloping(cx);
  if (!env.e) return;
  const EnvelopingData& e = *env.e;
  const ModuleData m = mods.empty() ? regular_module(e.an.monoid) : module_over_an(cx, e, mods.front());
  const KoszulComplex k = build_koszul(e.c.monoid, e.alpha, e.cap, e.alpha_names, cx.exec);
  cx.report.add_certificate(k.certificate);
  std::vector<int> ps;
  if (p) ps.push_back(*p);
  else for (int q = 0; q <= static_cast<int>(e.n) + 1; ++q) ps.push_back(q);
  for (int q : ps) {
    const HochschildCohomology h = hochschild_cohomology(e, k, m, q, kInheritCap, cx.exec);
    cx.report.set_window(h.report.window);
    add_graded(cx.report, h.report, e.an.monoid->cat());
  }
}

void cmd_syzygy(Context& cx) {
  const auto mods = resolve_modules(cx);
  if (mods.size() != 1) throw ParseError("syzygy needs exactly one --module");
  cx.report.parameters()["module"] = mods.front();
  if (require_cap(cx) < 1) {
    throw WindowError("syzygy certifies degrees <= max-degree - 1; max-degree " + std::to_string(*cx.cap) +
                      " leaves an empty window");
  }
  Enveloping env = enveloping(cx);
  if (!env.e) return;
  const EnvelopingData& e = *env.e;
  const ModuleData m = module_over_an(cx, e, mods.front());
  const SyzygyResolution s = build_syzygy_resolution(e, m, kInheritCap, cx.exec);
  const auto& cat = e.an.monoid->cat();
  cx.report.set_window(s.complex.window);
  cx.report.add_table("terms L_p", term_rows(s.complex), cat);
  cx.report.add_table("module " + m.name, rep_rows(m.carrier, s.complex.window), cat, false);
  cx.report.add_certificate(s.identification);
  cx.report.add_certificate(s.exactness);
  cx.report.add_certificate(s.split.certificate);
  cx.report.add_certificate(s.certificate);
  for (const auto& t : s.tags) cx.report.add_note(t);
  cx.report.add_note("length " + std::to_string(s.length()) + " (" + std::to_string(s.complex.terms.size()) +
                     " terms above " + m.name + ")");
}

void cmd_tensor_over(Context& cx) {
  const auto mods = resolve_modules(cx);
  if (mods.size() != 2) throw ParseError("tensor-over needs two --module names: a right module and a left module");
  cx.report.parameters()["modules"] = mods;
  std::vector<ModuleData> ms;
  for (const auto& name : mods) {
    const ModuleSpec& spec = cx.problem.module(name);
    if (spec.over == "A_n") throw PreconditionError("tensor-over needs modules over a named monoid");
    ms.push_back(build_module(cx.problem, spec, cx.problem.monoid(spec.over), polynomial_of(cx.problem, spec.over)));
  }
  const CoequalizerPresentation t = tensor_over_monoid(ms[0], ms[1], cap_arg(cx), cx.exec);
  const auto& r = t.coequalizer.result;
  if (r.cap >= 0) cx.report.set_window(r.cap);
  cx.report.add_table(mods[0] + " ⊗ " + mods[1], rep_rows(t.tensor.result, std::nullopt), r.cat ? *r.cat : ms[0].cat(),
                      false);
  cx.report.add_table(mods[0] + " ⊗_A " + mods[1], rep_rows(r, std::nullopt), ms[0].cat(), false);
  cx.report.add_certificate(t.certificate);
  if (ms[0].left && ms[0].right) {
    Certificate c = check_restriction_compatibility(ms[0], ms[1], cap_arg(cx), cx.exec);
    cx.report.add_certificate(c);
  }
}

/// Parameters echoed in every report; enough to replay the run.
void echo_parameters(Context& cx) {
  auto& par = cx.report.parameters();
  par["field"] = cx.problem.field.to_string();
  if (cx.cap) par["max-degree"] = *cx.cap;
  else par["max-degree"] = nullptr;
}

int exit_code_for(const Report& r) { return r.pass() ? kExitPass : kExitFailure; }

}  // namespace

Outcome run_text(const Options& opts, const std::string& text, const std::string& path) {
  try {
    if (std::find(verbs().begin(), verbs().end(), opts.verb) == verbs().end()) {
      throw ParseError("unknown command '" + opts.verb + "'");
    }
    LoadOptions lo;
    if (opts.field) lo.field = Field::parse(*opts.field);
    lo.max_degree = opts.max_degree;
    Context cx{opts, load_problem(text, path, lo), Exec{std::max(1u, opts.threads)}, Report(opts.verb), std::nullopt};
    cx.cap = opts.max_degree ? opts.max_degree : cx.problem.task.max_degree;
    if (cx.cap && *cx.cap < 0) throw RangeError("--max-degree must be nonnegative");
    echo_parameters(cx);
    cx.report.set_problem(path, text);
    if (opts.verb == "validate") cmd_validate(cx);
    else if (opts.verb == "koszul") cmd_koszul(cx);
    else if (opts.verb == "regular-check") cmd_regular_check(cx);
    else if (opts.verb == "commutant") cmd_commutant(cx);
    else if (opts.verb == "tensor-idem") cmd_tensor_idem(cx);
    else if (opts.verb == "hh") cmd_hh(cx);
    else if (opts.verb == "syzygy") cmd_syzygy(cx);
    else cmd_tensor_over(cx);
    return {exit_code_for(cx.report), cx.report.finish()};
  } catch (const TheoremViolation& e) {
    Json r = error_report(opts.verb, "theorem-violation", e.what());
    r["verdict"] = "fail";
    return {kExitFailure, r};
  } catch (const IsoFailure& e) {
    Json r = error_report(opts.verb, "iso-failure", e.what());
    r["verdict"] = "fail";
    return {kExitFailure, r};
  } catch (const ParseError& e) {
    return {kExitInputError, error_report(opts.verb, "parse", e.what())};
  } catch (const NotCentral& e) {
    return {kExitInputError, error_report(opts.verb, "not-central", e.what())};
  } catch (const WindowError& e) {
    return {kExitInputError, error_report(opts.verb, "window", e.what())};
  } catch (const PreconditionError& e) {
    return {kExitInputError, error_report(opts.verb, "precondition", e.what())};
  } catch (const RangeError& e) {
    return {kExitInputError, error_report(opts.verb, "range", e.what())};
  } catch (const Error& e) {
    return {kExitInputError, error_report(opts.verb, "input", e.what())};
  } catch (const YAML::Exception& e) {
    return {kExitInputError, error_report(opts.verb, "parse", e.what())};
  }
}

Outcome run(const Options& opts) {
  std::ifstream in(opts.file);
  if (!in) return {kExitInputError, error_report(opts.verb, "io", "cannot read '" + opts.file + "'")};
  std::stringstream ss;
  ss << in.rdbuf();
  return run_text(opts, ss.str(), opts.file);
}

Outcome replay(const std::string& report_text, unsigned threads) {
  Json old;
  Options o;
  try {
    old = Json::parse(report_text);
    if (!old.contains("problem") || !old.contains("parameters")) {
      throw std::runtime_error("the report carries no embedded problem");
    }
    const Json& par = old["parameters"];
    o.verb = old.at("command").get<std::string>();
    o.field = par.at("field").get<std::string>();
    if (!par.at("max-degree").is_null()) o.max_degree = par["max-degree"].get<int>();
    if (par.contains("monoid")) o.monoid = par["monoid"].get<std::string>();
    if (par.contains("alpha")) o.alpha = par["alpha"].get<std::vector<std::string>>();
    if (par.contains("check-resolution")) o.check_resolution = par["check-resolution"].get<bool>();
    if (par.contains("n")) o.n = par["n"].get<std::size_t>();
    if (par.contains("p") && !par["p"].is_null()) o.p = par["p"].get<int>();
    if (par.contains("module") && par["module"].get<std::string>() != "A_n") o.modules = {par["module"]};
    if (par.contains("modules")) o.modules = par["modules"].get<std::vector<std::string>>();
    o.threads = threads;
  } catch (const std::exception& e) {
    return {kExitInputError, error_report("replay", "report", e.what())};
  }
  Outcome fresh = run_text(o, old["problem"]["text"].get<std::string>(), old["problem"]["path"].get<std::string>());
  const bool same = fresh.report == old;
  fresh.report["replay"] = {{"identical", same}, {"verdict", old["verdict"]}};
  if (!same) return {kExitFailure, fresh.report};
  return {fresh.exit_code == kExitInputError ? kExitInputError : kExitPass, fresh.report};
}

}  // namespace koszulcat::cli
