#include <chrono>
#include <set>
#include <sstream>

#include "json.hpp"

#include "cli.hpp"
#include "wbalg/version.hpp"

namespace wbalg::cli {

namespace {

struct SuiteInfo {
  Suite suite;
  std::string_view name;
};

constexpr SuiteInfo suite_table[] = {
    {Suite::wba, "wba"},
    {Suite::wha, "wha"},
    {Suite::comodule, "comodule"},
    {Suite::comodule_algebra, "comodule-algebra"},
    {Suite::comodule_coalgebra, "comodule-coalgebra"},
    {Suite::comodule_frobenius, "comodule-frobenius"},
    {Suite::internal_roundtrip, "internal-roundtrip"},
    {Suite::qtg_full, "qtg-full"},
    {Suite::gamma_monoidal, "gamma-monoidal"},
};

std::shared_ptr<const WeakBialgebra> wba_of(const Structure& s) {
  if (s.qtg) return s.qtg->hopf.wba;
  return s.wba;
}

std::optional<WeakHopfAlgebra> weak_hopf_of(const Structure& s) {
  if (s.qtg) return s.qtg->hopf;
  if (s.wba && s.antipode) return WeakHopfAlgebra{s.wba, *s.antipode, std::nullopt};
  return std::nullopt;
}

// Empty when compatible, otherwise the reason.
std::string mismatch(const Structure& s, Suite suite) {
  switch (suite) {
    case Suite::wba:
      return wba_of(s) ? "" : "has no weak bialgebra";
    case Suite::wha:
      if (s.face) return "face algebras carry no antipode";
      return weak_hopf_of(s) ? "" : "has no antipode";
    case Suite::comodule:
      return s.comodule || s.bicomodule ? "" : "is not a comodule";
    case Suite::comodule_algebra:
      return s.algebra ? "" : "is not a comodule algebra";
    case Suite::comodule_coalgebra:
      return s.coalgebra ? "" : "is not a comodule coalgebra";
    case Suite::comodule_frobenius:
      return s.algebra && s.coalgebra ? "" : "is not a comodule Frobenius algebra";
    case Suite::internal_roundtrip:
      return s.algebra || s.coalgebra ? "" : "is not a comodule (co)algebra";
    case Suite::qtg_full:
    case Suite::gamma_monoidal:
      return s.qtg ? "" : "is not a quantum transformation groupoid";
  }
  return "unknown suite";
}

template <class F>
void guarded(CheckReport& r, const std::string& name, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    r.add(boolean_check(name, false, e.what()));
  }
}

Bicomodule pair_member(const Structures& all, const Structure& q, const std::string& name) {
  if (name == "L") return regular_bicomodule(q.qtg->l);
  if (name == "k") return trivial_bicomodule(q.qtg->l);
  if (!all.contains(name)) throw ResolutionError("'" + name + "' is not declared");
  const Structure& s = all.get(name);
  if (!s.bicomodule) throw SuiteMismatch("'" + name + "' is not a bicomodule");
  auto it = s.refs.find("L");
  auto qt = q.refs.find("L");
  if (it == s.refs.end() || qt == q.refs.end() || it->second != qt->second)
    throw SuiteMismatch("'" + name + "' is not a bicomodule over the L of '" + q.name + "'");
  Bicomodule x = *s.bicomodule;
  x.l = q.qtg->l;
  return x;
}

bool pairs_fit(const Structures& all, const Structure& q, Suite suite, const SuiteOptions& opt) {
  if (suite != Suite::gamma_monoidal) return true;
  try {
    for (const auto& [a, b] : opt.pairs) {
      pair_member(all, q, a);
      pair_member(all, q, b);
    }
  } catch (const SuiteMismatch&) {
    return false;
  }
  return true;
}

CheckReport run_one(const Structures& all, const Structure& s, Suite suite, const SuiteOptions& opt) {
  const CheckOptions& c = opt.check;
  CheckReport r;
  switch (suite) {
    case Suite::wba:
      return check_weak_bialgebra(*wba_of(s), c);
    case Suite::wha:
      return check_weak_hopf(*weak_hopf_of(s), c);
    case Suite::comodule:
      return s.comodule ? check_comodule(*s.comodule, c) : check_bicomodule(*s.bicomodule, c);
    case Suite::comodule_algebra:
      return check_comodule_algebra(*s.algebra, c);
    case Suite::comodule_coalgebra:
      return check_comodule_coalgebra(*s.coalgebra, c);
    case Suite::comodule_frobenius:
      return check_comodule_frobenius({*s.algebra, *s.coalgebra}, c);
    case Suite::internal_roundtrip:
      if (s.algebra) {
        guarded(r, "algebra/roundtrip", [&] { r.merge(roundtrip_report(*s.algebra), "algebra/"); });
        guarded(r, "algebra/internal", [&] {
          r.merge(check_internal(functor_F(*s.algebra, Construction::unchecked), c), "algebra/internal/");
        });
      }
      if (s.coalgebra) {
        guarded(r, "coalgebra/roundtrip", [&] { r.merge(roundtrip_report(*s.coalgebra), "coalgebra/"); });
        guarded(r, "coalgebra/internal", [&] {
          r.merge(check_internal(functor_F(*s.coalgebra, Construction::unchecked), c), "coalgebra/internal/");
        });
      }
      if (s.algebra && s.coalgebra) {
        ComoduleFrobenius f{*s.algebra, *s.coalgebra};
        if (check_comodule_frobenius(f, c).passed()) {
          guarded(r, "frobenius/roundtrip", [&] { r.merge(roundtrip_report(f), "frobenius/"); });
          guarded(r, "frobenius/internal", [&] {
            r.merge(check_internal(functor_F(f, Construction::unchecked), c), "frobenius/internal/");
          });
        } else {
          r.add_fact("frobenius", "not a comodule Frobenius algebra; only the algebra and coalgebra halves are transported");
        }
      }
      return r;
    case Suite::qtg_full:
      return s.qtg->report;
    case Suite::gamma_monoidal: {
      auto pairs = opt.pairs;
      if (pairs.empty()) pairs.emplace_back("L", "L");
      for (const auto& [a, b] : pairs) {
        Bicomodule x = pair_member(all, s, a);
        Bicomodule y = pair_member(all, s, b);
        r.merge(gamma_hat_monoidal(*s.qtg, x, y, c).report, a + "," + b + "/");
      }
      return r;
    }
  }
  return r;
}

// Basis label of index i in a tensor product of component spaces, components joined by "|".
std::string component_label(std::size_t i, const std::vector<const Space*>& comps) {
  std::vector<std::string> parts(comps.size());
  for (std::size_t k = comps.size(); k-- > 0;) {
    std::size_t d = comps[k]->dim();
    parts[k] = comps[k]->label(i % d);
    i /= d;
  }
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "|" : "") + parts[k];
  return out;
}

std::string render_vector(const SparseVector& v, const std::vector<const Space*>& comps) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& e : v) {
    Scalar c = e.value;
    if (comps.empty()) return to_string(c);
    if (!first) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "- ";
    if (sgn(c) < 0) c = -c;
    if (c != 1) out += to_string(c) + " * ";
    out += component_label(e.index, comps);
    first = false;
  }
  return out;
}

void write_list(std::ostream& o, std::string_view key, const std::vector<std::string>& items) {
  o << "  " << key << ":";
  for (const auto& i : items) o << " " << i;
  o << "\n";
}

void write_entries(std::ostream& o, std::string_view key, const LinearMap& m, const std::vector<const Space*>& dom,
                   const std::vector<const Space*>& cod) {
  for (std::size_t j = 0; j < m.domain().dim(); ++j) {
    if (m.column(j).is_zero()) continue;
    o << "  " << key << ": " << component_label(j, dom) << " -> " << render_vector(m.column(j), cod) << "\n";
  }
}

void write_wba_body(std::ostream& o, const AlgebraData& a, const CoalgebraData& c, const LinearMap* antipode) {
  const Space& H = a.space;
  write_list(o, "basis", H.labels());
  write_entries(o, "mult", a.mult, {&H, &H}, {&H});
  o << "  unit: " << render_vector(a.unit, {&H}) << "\n";
  write_entries(o, "comult", c.comult, {&H}, {&H, &H});
  write_entries(o, "counit", c.counit, {&H}, {});
  if (antipode) write_entries(o, "antipode", *antipode, {&H}, {&H});
}

void write_comodule(std::ostream& o, const std::string& name, const std::string& h, const Comodule& m) {
  const Space& M = m.space();
  const Space& H = m.algebra().space();
  o << "comodule " << name << " {\n  H: " << h << "\n";
  write_list(o, "basis", M.labels());
  write_entries(o, "coaction", m.coaction(), {&M}, {&M, &H});
  o << "}\n\n";
}

void dump_one(std::ostream& o, const Structure& s) {
  const std::string& n = s.name;
  if (s.kind == "quiver") {
    const Quiver& q = *s.quiver;
    o << "quiver " << n << " {\n";
    write_list(o, "vertices", q.vertices());
    for (const auto& a : q.arrows())
      o << "  arrow " << a.name << ": " << q.vertices()[a.source] << " -> " << q.vertices()[a.target] << "\n";
    o << "  algebra: " << s.refs.at("algebra") << "\n";
    if (s.face && s.face->mode.truncation) o << "  truncation: " << *s.face->mode.truncation << "\n";
    o << "}\n\n";
  } else if (s.kind == "group") {
    const GroupTable& g = *s.group;
    o << "group " << n << " {\n";
    write_list(o, "elements", g.elements);
    for (const auto& row : g.table) {
      std::vector<std::string> names;
      for (auto x : row) names.push_back(g.elements[x]);
      write_list(o, "row", names);
    }
    o << "}\n\n";
  } else if (s.kind == "groupoid") {
    const Groupoid& g = *s.groupoid;
    const auto& ms = g.morphisms();
    o << "groupoid " << n << " {\n";
    write_list(o, "objects", g.objects());
    for (const auto& m : ms)
      o << "  morphism " << m.name << ": " << g.objects()[m.source] << " -> " << g.objects()[m.target] << "\n";
    for (std::size_t a = 0; a < ms.size(); ++a)
      for (std::size_t b = 0; b < ms.size(); ++b)
        if (auto c = g.compose(a, b)) o << "  compose: " << ms[a].name << "|" << ms[b].name << " -> " << ms[*c].name << "\n";
    for (std::size_t x = 0; x < g.objects().size(); ++x)
      o << "  identity: " << g.objects()[x] << " -> " << ms[g.identity(x)].name << "\n";
    for (std::size_t a = 0; a < ms.size(); ++a) o << "  inverse: " << ms[a].name << " -> " << ms[g.inverse(a)].name << "\n";
    o << "}\n\n";
  } else if (s.kind == "wba" || s.kind == "qtg") {
    auto h = wba_of(s);
    o << "wba " << n << " {\n";
    write_wba_body(o, h->algebra(), h->coalgebra(), s.antipode ? &*s.antipode : nullptr);
    if (s.unchecked) o << "  unchecked: true\n";
    o << "}\n\n";
  } else if (s.kind == "hopf") {
    o << "hopf " << n << " {\n";
    write_wba_body(o, s.hopf->algebra, s.hopf->coalgebra, &s.hopf->antipode);
    o << "}\n\n";
  } else if (s.kind == "separable") {
    const Space& B = s.separable->space();
    o << "separable " << n << " {\n  algebra: " << s.refs.at("algebra") << "\n";
    o << "  idempotent: " << render_vector(s.separable->idempotent, {&B, &B}) << "\n";
    write_entries(o, "omega", s.separable->omega, {&B}, {});
    o << "}\n\n";
  } else if (s.kind == "action") {
    const Space& B = s.separable->space();
    const Space& L = s.hopf->space();
    o << "action " << n << " {\n  L: " << s.refs.at("L") << "\n  B: " << s.refs.at("B") << "\n";
    write_entries(o, "act", s.action->right, {&B, &L}, {&B});
    o << "}\n\n";
  } else if (s.kind == "comodule") {
    write_comodule(o, n, s.refs.at("H"), *s.comodule);
  } else if (s.kind == "bicomodule") {
    const Bicomodule& x = *s.bicomodule;
    o << "bicomodule " << n << " {\n  L: " << s.refs.at("L") << "\n";
    if (x.space.is_ground()) {
      o << "  preset: trivial\n";
    } else {
      const Space& L = x.l->space();
      write_list(o, "basis", x.space.labels());
      write_entries(o, "left", x.left, {&x.space}, {&L, &x.space});
      write_entries(o, "right", x.right, {&x.space}, {&x.space, &L});
    }
    o << "}\n\n";
  } else if (s.kind == "bundle") {
    auto h = s.refs.find("H");
    if (h == s.refs.end()) {
      // The matrix preset lives over a truncated quotient that has no explicit form.
      o << "bundle " << n << " {\n  kind: " << s.bundle_kind << "\n  preset: matrix\n}\n\n";
      return;
    }
    const Comodule& m = s.algebra ? s.algebra->comodule : s.coalgebra->comodule;
    std::string cname = n + ".comodule";
    if (auto it = s.refs.find("comodule"); it != s.refs.end())
      cname = it->second;
    else
      write_comodule(o, cname, h->second, m);
    const Space& A = m.space();
    o << "bundle " << n << " {\n  kind: " << s.bundle_kind << "\n  comodule: " << cname << "\n";
    if (s.algebra) {
      write_entries(o, "mult", s.algebra->mult, {&A, &A}, {&A});
      o << "  unit: " << render_vector(s.algebra->unit, {&A}) << "\n";
    }
    if (s.coalgebra) {
      write_entries(o, "comult", s.coalgebra->comult, {&A}, {&A, &A});
      write_entries(o, "counit", s.coalgebra->counit, {&A}, {});
    }
    o << "}\n\n";
  }
}

// Witness vectors as label:value lists.
nlohmann::ordered_json tensor_json(const Tensor& t) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& [idx, v] : t.items()) {
    std::string label;
    for (std::size_t k = 0; k < idx.size(); ++k) label += (k ? "|" : "") + t.factors()[k].label(idx[k]);
    if (idx.empty()) label = "1";
    out.push_back({{"label", label}, {"value", to_string(v)}});
  }
  return out;
}

std::string tensor_text(const Tensor& t) {
  std::string out;
  for (const auto& e : tensor_json(t)) {
    if (!out.empty()) out += " ";
    out += e["label"].get<std::string>() + ":" + e["value"].get<std::string>();
  }
  return out.empty() ? "0" : out;
}

std::string result_word(const CheckReport& r) {
  if (!r.passed()) return "FAIL";
  return r.has_skips() ? "PASS-WITH-SKIPS" : "PASS";
}

std::string status_word(Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::skip:
      return "SKIP";
  }
  return "?";
}

std::string overall_word(const std::vector<SuiteRun>& runs) {
  switch (exit_code(runs)) {
    case 0:
      return "PASS";
    case 2:
      return "PASS-WITH-SKIPS";
    default:
      return "FAIL";
  }
}

void text_witness(std::ostream& o, const Witness& w) {
  o << "    at: (";
  for (std::size_t k = 0; k < w.tuple.size(); ++k) o << (k ? "," : "") << w.tuple[k];
  o << ")";
  for (const auto& l : w.labels) o << " " << l;
  o << "\n    lhs: " << tensor_text(w.lhs) << "\n    rhs: " << tensor_text(w.rhs) << "\n";
}

std::string emit_text(const std::vector<SuiteRun>& runs, const EmitOptions& opt) {
  std::ostringstream o;
  o << "wbalg " << version << "\n";
  for (const auto& run : runs) {
    o << "\nSUITE " << run.suite << " STRUCTURE " << run.structure << " (" << run.kind << ")\n";
    for (const auto& c : run.report.checks) {
      o << "CHECK " << c.name << ": " << status_word(c.status);
      if (opt.verbose)
        o << " [verified " << c.verified << ", skipped " << c.skipped << ", failed " << c.failed
          << (c.sampled ? ", sampled" : "") << "]";
      o << "\n";
      if (!c.note.empty() && (c.status != Status::pass || opt.verbose)) o << "    note: " << c.note << "\n";
      if (c.witness) text_witness(o, *c.witness);
    }
    for (const auto& [k, v] : run.report.facts) o << "FACT " << k << ": " << v << "\n";
    for (const auto& d : run.report.discrepancies) {
      o << "DISCREPANCY " << d.name << ": " << d.description << "\n";
      if (d.witness) text_witness(o, *d.witness);
    }
    if (opt.timing) o << "TIME " << run.seconds << "s\n";
    o << "RESULT " << run.structure << ": " << result_word(run.report) << "\n";
  }
  o << "\nOVERALL: " << overall_word(runs) << "\n";
  return o.str();
}

nlohmann::ordered_json witness_json(const Witness& w) {
  return {{"tuple", w.tuple}, {"at", w.labels}, {"lhs", tensor_json(w.lhs)}, {"rhs", tensor_json(w.rhs)}};
}

std::string emit_json(const std::vector<SuiteRun>& runs, const EmitOptions& opt) {
  nlohmann::ordered_json doc;
  doc["version"] = version;
  doc["runs"] = nlohmann::ordered_json::array();
  for (const auto& run : runs) {
    nlohmann::ordered_json r;
    r["suite"] = run.suite;
    r["structure"] = run.structure;
    r["kind"] = run.kind;
    r["result"] = result_word(run.report);
    r["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : run.report.checks) {
      nlohmann::ordered_json j{{"name", c.name},         {"status", status_word(c.status)}, {"verified", c.verified},
                               {"skipped", c.skipped},   {"failed", c.failed},              {"sampled", c.sampled},
                               {"note", c.note}};
      j["witness"] = c.witness ? witness_json(*c.witness) : nlohmann::ordered_json();
      r["checks"].push_back(std::move(j));
    }
    r["facts"] = nlohmann::ordered_json::array();
    for (const auto& [k, v] : run.report.facts) r["facts"].push_back({{"name", k}, {"value", v}});
    r["discrepancies"] = nlohmann::ordered_json::array();
    for (const auto& d : run.report.discrepancies) {
      nlohmann::ordered_json j{{"name", d.name}, {"description", d.description}};
      j["witness"] = d.witness ? witness_json(*d.witness) : nlohmann::ordered_json();
      r["discrepancies"].push_back(std::move(j));
    }
    if (opt.timing) r["seconds"] = run.seconds;
    doc["runs"].push_back(std::move(r));
  }
  doc["result"] = overall_word(runs);
  return doc.dump(2) + "\n";
}

}  // namespace

std::optional<Suite> suite_from_name(std::string_view name) {
  for (const auto& s : suite_table)
    if (s.name == name) return s.suite;
  return std::nullopt;
}

std::string_view suite_name(Suite s) {
  for (const auto& e : suite_table)
    if (e.suite == s) return e.name;
  return "?";
}

std::vector<Suite> all_suites() {
  std::vector<Suite> out;
  for (const auto& s : suite_table) out.push_back(s.suite);
  return out;
}

std::vector<SuiteRun> run_suite(const Structures& all, Suite suite, const SuiteOptions& opt) {
  std::vector<std::string> names;
  if (opt.structures.empty()) {
    for (const auto& n : all.names())
      if (mismatch(all.get(n), suite).empty() && pairs_fit(all, all.get(n), suite, opt)) names.push_back(n);
    if (names.empty())
      throw SuiteMismatch("no declaration fits the " + std::string(suite_name(suite)) + " suite");
  } else {
    for (const auto& n : opt.structures) {
      if (!all.contains(n)) throw ResolutionError("'" + n + "' is not declared");
      std::string why = mismatch(all.get(n), suite);
      if (!why.empty()) throw SuiteMismatch("'" + n + "' " + why + " (suite " + std::string(suite_name(suite)) + ")");
      names.push_back(n);
    }
  }
  std::vector<SuiteRun> out;
  for (const auto& n : names) {
    const Structure& s = all.get(n);
    auto t0 = std::chrono::steady_clock::now();
    CheckReport r = run_one(all, s, suite, opt);
    auto t1 = std::chrono::steady_clock::now();
    out.push_back({std::string(suite_name(suite)), n, s.kind, std::move(r),
                   std::chrono::duration<double>(t1 - t0).count()});
  }
  return out;
}

std::string emit_report(const std::vector<SuiteRun>& runs, const EmitOptions& opt) {
  return opt.format == Format::json ? emit_json(runs, opt) : emit_text(runs, opt);
}

int exit_code(const std::vector<SuiteRun>& runs) {
  bool skips = false;
  for (const auto& r : runs) {
    if (!r.report.passed()) return 1;
    skips = skips || r.report.has_skips();
  }
  return skips ? 2 : 0;
}

std::string dump(const Structures& all, const std::vector<std::string>& names) {
  std::set<std::string> keep;
  if (names.empty()) {
    keep.insert(all.names().begin(), all.names().end());
  } else {
    std::vector<std::string> todo = names;
    while (!todo.empty()) {
      std::string n = todo.back();
      todo.pop_back();
      if (!keep.insert(n).second) continue;
      for (const auto& [role, ref] : all.get(n).refs)
        if (role != "algebra" || all.get(n).kind != "quiver") todo.push_back(ref);
    }
  }
  std::ostringstream o;
  for (const auto& n : all.names())
    if (keep.count(n)) dump_one(o, all.get(n));
  return o.str();
}

std::vector<std::pair<std::string, std::vector<SparseVector>>> tensors_of(const Structure& s) {
  std::vector<std::pair<std::string, std::vector<SparseVector>>> out;
  auto add = [&](std::string name, const LinearMap& m) { out.emplace_back(std::move(name), m.columns()); };
  auto add_vec = [&](std::string name, const SparseVector& v) {
    out.emplace_back(std::move(name), std::vector<SparseVector>{v});
  };
  if (auto h = wba_of(s)) {
    add("mult", h->mult());
    add_vec("unit", h->one());
    add("comult", h->comult());
    add("counit", h->counit());
    if (s.antipode) add("antipode", *s.antipode);
  } else if (s.hopf && s.kind == "hopf") {
    add("mult", s.hopf->algebra.mult);
    add_vec("unit", s.hopf->algebra.unit);
    add("comult", s.hopf->coalgebra.comult);
    add("counit", s.hopf->coalgebra.counit);
    add("antipode", s.hopf->antipode);
  }
  if (s.kind == "separable") {
    add("algebra.mult", s.separable->algebra.mult);
    add_vec("idempotent", s.separable->idempotent);
    add("omega", s.separable->omega);
  }
  if (s.kind == "action") add("act", s.action->right);
  if (s.comodule) add("coaction", s.comodule->coaction());
  if (s.bicomodule) {
    add("left", s.bicomodule->left);
    add("right", s.bicomodule->right);
  }
  if (s.algebra) {
    add("coaction", s.algebra->comodule.coaction());
    add("mult", s.algebra->mult);
    add_vec("unit", s.algebra->unit);
  }
  if (s.coalgebra) {
    if (!s.algebra) add("coaction", s.coalgebra->comodule.coaction());
    add("comult", s.coalgebra->comult);
    add("counit", s.coalgebra->counit);
  }
  return out;
}

}  // namespace wbalg::cli
