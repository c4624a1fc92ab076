// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fail.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "cli.hpp"

using namespace wbalg;
using namespace wbalg::cli;

namespace {

using Clock = std::chrono::steady_clock;

std::string data_file(const std::string& f) { return std::string(WBALG_DATA_DIR) + "/" + f; }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string secs(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << " s";
  return o.str();
}

unsigned worker_count() { return std::clamp(std::thread::hardware_concurrency(), 1u, 8u); }

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::vector<std::string> failing(const CheckReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.checks)
    if (c.status != Status::pass) out.push_back(c.name);
  return out;
}

void require_all_pass(Outcome& o, const CheckReport& r, const std::string& what) {
  auto bad = failing(r);
  std::string list;
  for (std::size_t i = 0; i < bad.size() && i < 5; ++i) list += " " + bad[i];
  o.require(bad.empty(), what + (bad.empty() ? "" : " (" + std::to_string(bad.size()) + " not passing:" + list + ")"));
}

SparseVector e(std::size_t i) { return SparseVector::unit(i); }

std::size_t index_of(const Space& s, const std::string& label) {
  auto i = s.find(label);
  if (!i) throw std::runtime_error("no basis label " + label);
  return *i;
}

// Span of { a⊗h⊗b : fixed factors } inside B⊗L⊗B, for an order-n group with identity 0.
LinearMap triple_span(const QTG& q, bool left_free) {
  std::size_t n = q.b->dim();
  std::vector<SparseVector> cols;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) {
    cols.push_back(e(left_free ? q.index(x, 0, 0) : q.index(0, 0, x)));
    labels.push_back(std::to_string(x));
  }
  return LinearMap(Space(labels), q.wba().space(), cols);
}

struct Inputs {
  std::unique_ptr<Structures> groupoids, bundles, z2, s3;
  double s3_build = 0;
};

Outcome weak_bialgebra_suite(const Inputs& in) {
  Outcome o;
  auto t0 = Clock::now();
  CheckOptions c;
  c.threads = worker_count();
  Structures s = parse_spec({data_file("groupoids.wba")}, c);
  SuiteOptions opt;
  opt.check = c;
  opt.structures = {"pair2", "Z2", "A3path", "A2", "A3"};
  auto runs = run_suite(s, Suite::wba, opt);
  double t = seconds_since(t0);
  const std::vector<std::string> dims{"4", "2", "6", "5", "14"};
  for (std::size_t i = 0; i < runs.size(); ++i) {
    require_all_pass(o, runs[i].report, runs[i].structure);
    std::string d;
    for (const auto& [k, v] : runs[i].report.facts)
      if (k == "dim") d = v;
    o.require(d == dims[i], runs[i].structure + " has dim " + dims[i]);
  }
  o.require(t < 5, "runtime under 5 s");
  o.note("pair2, kZ2, kA3, h(A2), h(A3) with dims 4, 2, 6, 5, 14 in " + secs(t));
  return o;
}

Outcome weak_hopf_suite(const Inputs& in) {
  Outcome o;
  SuiteOptions opt;
  opt.check.threads = worker_count();
  opt.structures = {"pair2"};
  require_all_pass(o, run_suite(*in.groupoids, Suite::wha, opt)[0].report, "pair2");

  auto t0 = Clock::now();
  CheckOptions c;
  c.threads = worker_count();
  Structures z2 = parse_spec({data_file("qtg_z2.wba")}, c);
  opt.structures = {"H_Z2"};
  auto z2_runs = run_suite(z2, Suite::wha, opt);
  double tz = seconds_since(t0);
  require_all_pass(o, z2_runs[0].report, "H(kZ2,kZ2,adj)");
  o.require(z2.get("H_Z2").qtg->wba().dim() == 8, "Z2 groupoid has dim 8");
  o.require(tz < 5, "Z2 groupoid under 5 s");

  t0 = Clock::now();
  opt.structures = {"H_S3"};
  auto s3_runs = run_suite(*in.s3, Suite::wha, opt);
  double ts = seconds_since(t0);
  const CheckReport& r = s3_runs[0].report;
  require_all_pass(o, r, "H(kS3,kS3,adj)");
  o.require(in.s3->get("H_S3").qtg->wba().dim() == 216, "S3 groupoid has dim 216");
  const CheckResult* assoc = r.find("assoc");
  o.require(assoc && !assoc->sampled && assoc->verified == 216ull * 216 * 216, "exhaustive associativity triple loop");
  o.require(ts < 600, "S3 weak Hopf suite under 10 min");
  o.note("Z2 groupoid in " + secs(tz) + "; S3 groupoid construction " + secs(in.s3_build) + ", suite " + secs(ts) +
         " on " + std::to_string(worker_count()) + " thread(s), " + std::to_string(assoc ? assoc->verified : 0) +
         " associativity triples");
  return o;
}

Outcome closed_forms(const Inputs& in) {
  Outcome o;
  // Pair groupoid: ε_s(g) = id_{t(g)}, ε_t(g) = id_{s(g)}.
  const Structure& p = in.groupoids->get("pair2");
  const Groupoid& g = *p.groupoid;
  bool ok = true;
  for (std::size_t m = 0; m < g.morphisms().size(); ++m) {
    ok = ok && p.wba->eps_s().column(m) == e(g.identity(g.morphisms()[m].target));
    ok = ok && p.wba->eps_t().column(m) == e(g.identity(g.morphisms()[m].source));
  }
  o.require(ok, "pair groupoid counital maps");

  // Face algebras: ε_s(x_{p,q}) = δ_{p,q} Σ_i x_{i,t(q)}, ε_t(x_{p,q}) = δ_{p,q} Σ_j x_{s(q),j}.
  for (std::string name : {"A2", "A3"}) {
    const FaceAlgebra& f = *in.groupoids->get(name).face;
    const auto& w = *f.wba;
    std::size_t n = f.quiver->vertices().size();
    bool good = true;
    for (std::size_t x = 0; x < w.dim(); ++x) {
      auto [pp, qq] = f.pairs[x];
      VectorBuilder s, t;
      if (pp == qq)
        for (std::size_t i = 0; i < n; ++i) {
          s.add(f.basis_of(i, f.paths[qq].target), 1);
          t.add(f.basis_of(f.paths[qq].source, i), 1);
        }
      good = good && w.eps_s().column(x) == s.build() && w.eps_t().column(x) == t.build();
    }
    o.require(good, "face algebra counital maps on " + name);
  }

  for (auto [st, name] : {std::pair{in.z2.get(), "H_Z2"}, std::pair{in.s3.get(), "H_S3"}}) {
    const QTG& q = *st->get(name).qtg;
    for (std::string c : {"lemma/eps-s-closed-form", "lemma/eps-t-closed-form", "lemma/source-subspace",
                          "lemma/target-subspace"})
      o.require(q.report.passed(c), std::string(name) + " " + c);
    o.require(same_span(q.wba().source().basis, triple_span(q, false)), std::string(name) + " Hs = 1⊗1⊗B");
    o.require(same_span(q.wba().target().basis, triple_span(q, true)), std::string(name) + " Ht = B⊗1⊗1");
  }
  o.note("pair groupoid, h(A2), h(A3), and both groupoids of groups against direct formulas");
  return o;
}

Outcome bar_product_criterion(const Inputs& in) {
  Outcome o;
  const Structure& a2 = in.bundles->get("A2");
  Comodule kq = path_comodule(*a2.face);
  BarProduct b = bar_product(kq, kq);
  const Space& S = kq.space();
  std::vector<SparseVector> cols;
  for (auto [x, y] : {std::pair{"e_1", "e_1"}, {"e_2", "e_2"}, {"e_1", "a"}, {"a", "e_2"}})
    cols.push_back(e(index_of(S, x) * S.dim() + index_of(S, y)));
  LinearMap expect(Space({"1", "2", "3", "4"}), tensor(S, S), cols);
  o.require(b.subspace.dim() == 4, "dim kQ ⊗̄ kQ = 4");
  o.require(same_span(b.inclusion, expect), "basis e1⊗e1, e2⊗e2, e1⊗a, a⊗e2");
  o.require(b.projector * b.projector == b.projector, "projector idempotent");
  o.require(b.projection * b.inclusion == LinearMap::identity(b.product.space()), "η∘ι = Id");
  o.require(b.report.passed("equals-hs-cotensor"), "bar product equals the Hs cotensor product");
  require_all_pass(o, b.report, "bar product report");
  auto ui = unit_isomorphisms(kq);
  o.require(ui.l * ui.l_inv == LinearMap::identity(ui.l.codomain()) &&
                ui.l_inv * ui.l == LinearMap::identity(ui.l.domain()),
            "l invertible");
  o.require(ui.r * ui.r_inv == LinearMap::identity(ui.r.codomain()) &&
                ui.r_inv * ui.r == LinearMap::identity(ui.r.domain()),
            "r invertible");

  auto z2 = in.groupoids->get("Z2").wba;
  Comodule reg = Comodule::regular(z2);
  BarProduct bb = bar_product(reg, reg);
  o.require(bb.projector == LinearMap::identity(tensor(reg.space(), reg.space())), "bialgebra bar product is ⊗");
  o.require(z2->source().dim() == 1 &&
                same_span(z2->source().basis, LinearMap::vector(z2->space(), z2->one())),
            "bialgebra Hs = span{1}");
  o.note("kQ over h(A2): dim 4, projector idempotent, units invertible; kZ2 gives ⊗ and Hs = span{1}");
  return o;
}

Outcome roundtrips(const Inputs& in) {
  Outcome o;
  const FaceAlgebra& f = *in.bundles->get("A2").face;
  auto [alg, coalg] = kq_comodule_instances(f);
  require_all_pass(o, roundtrip_report(alg), "kQ comodule algebra");
  require_all_pass(o, roundtrip_report(coalg), "path comodule coalgebra");
  require_all_pass(o, roundtrip_report(unit_object_instance(f.wba)), "Hs unit object");
  require_all_pass(o, roundtrip_report(matrix_frobenius_example().frobenius), "Mat2 over the quotient");
  o.note("FG = Id and GF = Id on kQ, the path coalgebra, Hs and Mat2");
  return o;
}

Outcome frobenius_dichotomy(const Inputs& in) {
  Outcome o;
  SuiteOptions opt;
  opt.structures = {"kQ_V2", "kQ_A2"};
  auto runs = run_suite(*in.bundles, Suite::comodule_frobenius, opt);
  o.require(runs[0].report.passed("frobenius-eq"), "arrowless quiver passes");
  const CheckResult* fe = runs[1].report.find("frobenius-eq");
  o.require(fe && fe->status == Status::fail, "A2 fails");
  bool witnessed = false;
  for (const auto& c : runs[1].report.checks)
    witnessed = witnessed || (c.name.rfind("frobenius-eq", 0) == 0 && c.status == Status::fail && c.witness);
  o.require(witnessed, "A2 failure has a witness");
  o.note("two isolated vertices pass, A2 fails with a witness");
  return o;
}

Outcome gamma_coherence(const Inputs& in) {
  Outcome o;
  const QTG& q = *in.z2->get("H_Z2").qtg;
  auto reg = regular_bicomodule(q.l);
  o.require(check_gamma_hat_associativity(q, reg, reg, reg).status == Status::pass, "associativity on (L,L,L)");
  require_all_pass(o, check_gamma_hat_units(q, reg), "unit constraints");

  auto tl = transport_algebra(q, regular_bicomodule_algebra(q.l));
  o.require(tl.algebra.mult == q.wba().mult() && tl.algebra.unit == q.wba().one() &&
                tl.algebra.comodule.coaction() == q.wba().comult(),
            "transport of L is (H, m, u)");

  auto tk = transport_algebra(q, trivial_bicomodule_algebra(q.l));
  AlgebraData target = opposite_tensor_algebra(q.b->algebra);
  LinearMap phi = LinearMap::identity(target.space).relabel(tk.algebra.comodule.space(), target.space);
  o.require(inverse(phi).has_value(), "identification invertible");
  o.require(phi * tk.algebra.mult == target.mult * kron(phi, phi), "identification multiplicative");
  o.require(phi(tk.algebra.unit) == target.unit, "identification unital");
  // Direct formula (a⊗b)(a'⊗b') = a'a ⊗ bb' in Z2, with s·s = 1.
  bool table = true;
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y)
      table = table && phi(tk.algebra.mult.column(x * 4 + y)) == e(((y / 2) ^ (x / 2)) * 2 + ((x % 2) ^ (y % 2)));
  o.require(table, "transport of k matches B^op⊗B by table");
  o.note("Z2: associativity and units exact; transport(L) = H; transport(k) ≅ B^op⊗B");
  return o;
}

Outcome appendix_report(const Inputs& in) {
  Outcome o;
  const std::vector<std::string> axioms{"algebra/assoc",
                                        "algebra/unit-left",
                                        "algebra/unit-right",
                                        "coalgebra/coassoc",
                                        "coalgebra/counit-left",
                                        "coalgebra/counit-right",
                                        "delta-multiplicative",
                                        "counit-weak-mult-left",
                                        "counit-weak-mult-right",
                                        "unit-weak-comult-left",
                                        "unit-weak-comult-right",
                                        "antipode-i",
                                        "antipode-ii",
                                        "antipode-iii"};
  for (auto [st, name] : {std::pair{in.z2.get(), "H_Z2"}, std::pair{in.s3.get(), "H_S3"}}) {
    const CheckReport& r = st->get(name).qtg->report;
    for (const auto& a : axioms) {
      std::string key = a;
      if (!r.find(key)) key = a.substr(a.find('/') + 1);
      o.require(r.passed(key), std::string(name) + " " + a);
    }
    require_all_pass(o, r, std::string(name) + " attached report");
  }
  o.note("every axiom PASS in the reports attached to both groupoids of groups");
  return o;
}

Outcome counit_discrepancy(const Inputs& in) {
  Outcome o;
  const CheckReport& r = in.z2->get("H_Z2_group").qtg->report;
  require_all_pass(o, r, "Z2 groupoid with the derived ω");
  bool flagged = false;
  for (const auto& d : r.discrepancies)
    if (d.name == "displayed-counit") flagged = d.witness && d.witness->lhs.values() != d.witness->rhs.values();
  o.require(flagged, "displayed counit flagged with a witness");
  std::string omega;
  for (const auto& [k, v] : r.facts)
    if (k == "omega") omega = v;
  o.require(omega == "1:2 s:0", "derived ω = 2δ");
  o.note("derived ω = " + omega + "; the constant counit is reported as a discrepancy");
  return o;
}

Outcome determinism(const Inputs&) {
  Outcome o;
  struct Case {
    std::string file;
    Suite suite;
  };
  std::vector<Case> cases{{"groupoids.wba", Suite::wba},
                          {"groupoids.wba", Suite::wha},
                          {"truncated.wba", Suite::wba},
                          {"bundles.wba", Suite::comodule_frobenius},
                          {"bundles.wba", Suite::internal_roundtrip},
                          {"qtg_z2.wba", Suite::qtg_full},
                          {"qtg_z2.wba", Suite::gamma_monoidal}};
  for (const auto& c : cases) {
    std::vector<std::string> out;
    for (unsigned threads : {1u, 8u, 1u, 8u}) {
      CheckOptions co;
      co.threads = threads;
      Structures s = parse_spec({data_file(c.file)}, co);
      SuiteOptions opt;
      opt.check = co;
      auto runs = run_suite(s, c.suite, opt);
      out.push_back(emit_report(runs, {Format::text, false, true}) + emit_report(runs, {Format::json, false, true}));
    }
    for (std::size_t i = 1; i < out.size(); ++i) {
      o.require(out[i] == out[0], c.file + " " + std::string(suite_name(c.suite)));
    }
  }
  o.note(std::to_string(cases.size()) + " suite runs, each repeated with 1 and 8 threads: byte-identical");
  return o;
}

}  // namespace

int main() {
  Inputs in;
  CheckOptions c;
  c.threads = worker_count();
  try {
    in.groupoids = std::make_unique<Structures>(parse_spec({data_file("groupoids.wba")}, c));
    in.bundles = std::make_unique<Structures>(parse_spec({data_file("bundles.wba")}, c));
    in.z2 = std::make_unique<Structures>(parse_spec({data_file("qtg_z2.wba")}, c));
    auto t0 = Clock::now();
    in.s3 = std::make_unique<Structures>(parse_spec({data_file("s3.wba")}, c));
    in.s3_build = seconds_since(t0);
  } catch (const std::exception& e) {
    std::cout << "could not load inputs: " << e.what() << "\n";
    return 1;
  }

  const std::vector<std::pair<int, std::function<Outcome(const Inputs&)>>> criteria{
      {1, weak_bialgebra_suite}, {2, weak_hopf_suite},     {3, closed_forms},     {4, bar_product_criterion},
      {5, roundtrips},           {6, frobenius_dichotomy}, {7, gamma_coherence},  {8, appendix_report},
      {9, counit_discrepancy},   {10, determinism}};
  int failures = 0;
  for (const auto& [n, run] : criteria) {
    Outcome o;
    try {
      o = run(in);
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("threw ") + e.what());
    }
    std::cout << "criterion " << n << ": " << (o.ok ? "PASS" : "FAIL");
    for (const auto& s : o.notes) std::cout << "; " << s;
    std::cout << std::endl;
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
