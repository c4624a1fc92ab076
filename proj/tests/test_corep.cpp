#include "helpers.hpp"
#include "wbalg/instances.hpp"

using namespace wbalg;
using namespace testing;

namespace {

std::shared_ptr<const WeakBialgebra> z2() { return group_algebra(cyclic_group(2, "s")).wba; }
std::shared_ptr<const WeakBialgebra> pair2() { return groupoid_algebra(Groupoid::pair_groupoid(2)).wba; }
FaceAlgebra h_a(std::size_t n) { return face_algebra(quiver_a(n), FaceMode::full()); }

SparseVector e(std::size_t i, const Scalar& c = 1) { return SparseVector::unit(i, c); }

// Span of the listed pure tensors of M⊗N.
LinearMap pure_tensors(const Space& m, const Space& n, const std::vector<std::pair<std::string, std::string>>& ts) {
  Space mn = tensor(m, n);
  std::vector<SparseVector> cols;
  std::vector<std::string> labels;
  for (const auto& [a, b] : ts) {
    cols.push_back(e(idx(m, a) * n.dim() + idx(n, b)));
    labels.push_back(a + "," + b);
  }
  return LinearMap(Space(labels), mn, cols);
}

// The comodules used for corpus-wide properties.
std::vector<Comodule> corpus() {
  std::vector<Comodule> out;
  for (auto h : {z2(), pair2(), group_algebra(symmetric_group_3()).wba, h_a(2).wba}) {
    out.push_back(Comodule::regular(h));
    out.push_back(Comodule::unit_object(h));
  }
  auto f2 = h_a(2);
  out.push_back(path_comodule(f2));
  auto f3 = h_a(3);
  out.push_back(path_comodule(f3));
  out.push_back(Comodule::regular(f3.wba));
  return out;
}

}  // namespace

TEST_CASE("check_comodule") {
  SUBCASE("regular comodule over the pair groupoid") { CHECK(all_pass(check_comodule(Comodule::regular(pair2())))); }
  SUBCASE("kQ over h(A2)") {
    auto f = h_a(2);
    Comodule kq = path_comodule(f);
    CHECK(kq.dim() == 3);
    CHECK(all_pass(check_comodule(kq)));
    // The only length-1 path is a, so ρ(a) = a⊗x_{a,a}.
    const auto& H = f.wba->space();
    CHECK(kq.coaction().column(idx(kq.space(), "a")) ==
          e(idx(kq.space(), "a") * H.dim() + idx(H, "x[a,a]")));
  }
  SUBCASE("coaction ρ(a) = a⊗x_{1,1} fails the counit check at a") {
    auto f = h_a(2);
    Comodule kq = path_comodule(f);
    LinearMap rho = kq.coaction();
    std::size_t a = idx(kq.space(), "a");
    rho.set_column(a, e(a * f.wba->dim() + idx(f.wba->space(), "x[e_1,e_1]")));
    Comodule bad("bad", f.wba, kq.space(), rho);
    auto rep = check_comodule(bad);
    // ε(x_{1,1}) = 1 so the counit holds; coassociativity breaks since Δ(x_{1,1}) has two terms.
    CHECK(rep.find("coassoc")->status == Status::fail);
    CHECK(rep.find("coassoc")->witness->tuple == std::vector<std::size_t>{a});
  }
  SUBCASE("coaction ρ(e_1) = e_1⊗x_{1,2} fails the counit check") {
    auto f = h_a(2);
    Comodule kq = path_comodule(f);
    LinearMap rho = kq.coaction();
    std::size_t e1 = idx(kq.space(), "e_1");
    // ε(x_{1,2}) = 0, so counitality fails at e_1 only.
    rho.set_column(e1, e(e1 * f.wba->dim() + idx(f.wba->space(), "x[e_1,e_2]")));
    auto rep = check_comodule(Comodule("bad", f.wba, kq.space(), rho));
    CHECK(rep.find("counit")->status == Status::fail);
    CHECK(rep.find("counit")->failed == 1);
  }
  SUBCASE("coaction with the wrong codomain") {
    auto h = pair2();
    CHECK_THROWS_AS(Comodule("bad", h, h->space(), LinearMap::identity(h->space())), DimensionMismatch);
  }
}

TEST_CASE("bar_product") {
  SUBCASE("bialgebra: the bar product is all of M⊗N") {
    Comodule m = Comodule::regular(z2());
    BarProduct b = bar_product(m, m);
    CHECK(b.subspace.dim() == 4);
    CHECK(b.projector == LinearMap::identity(tensor(m.space(), m.space())));
    CHECK(all_pass(b.report));
  }
  SUBCASE("kQ ⊗̄ kQ over h(A2) against the brute-force projector") {
    auto f = h_a(2);
    Comodule kq = path_comodule(f);
    BarProduct b = bar_product(kq, kq);
    CHECK(b.subspace.dim() == 4);
    CHECK(all_pass(b.report));
    auto expect = pure_tensors(kq.space(), kq.space(), {{"e_1", "e_1"}, {"e_2", "e_2"}, {"e_1", "a"}, {"a", "e_2"}});
    CHECK(same_span(b.inclusion, expect));
    // Oracle: P(p⊗q) = Σ ε(x_{p',p} x_{q',q}) p'⊗q', and in h(A2) the product of
    // x_{p',p} and x_{q',q} is nonzero only if t(p')=s(q'), t(p)=s(q).
    const auto& S = kq.space();
    auto tgt = [&](std::string l) { return l == "e_1" ? 1 : 2; };
    auto src = [&](std::string l) { return l == "e_2" ? 2 : 1; };
    for (std::size_t p = 0; p < 3; ++p)
      for (std::size_t q = 0; q < 3; ++q) {
        bool kept = tgt(S.label(p)) == src(S.label(q));
        CHECK(b.projector.column(p * 3 + q) == (kept ? e(p * 3 + q) : SparseVector{}));
      }
  }
  SUBCASE("H_s ⊗̄ N → N is bijective") {
    auto f = h_a(2);
    Comodule kq = path_comodule(f);
    auto ui = unit_isomorphisms(kq);
    CHECK(ui.left_bar.subspace.dim() == kq.dim());
    CHECK(inverse(ui.l).has_value());
  }
}

TEST_CASE("bar product properties over the corpus") {
  auto cs = corpus();
  for (const auto& m : cs)
    for (const auto& n : cs) {
      if (m.algebra_ptr() != n.algebra_ptr()) continue;
      CAPTURE(m.name());
      CAPTURE(n.name());
      BarProduct b = bar_product(m, n);
      CHECK(b.report.passed("projector-idempotent"));
      CHECK(b.report.passed("equals-hs-cotensor"));
      CHECK(all_pass(b.report));
    }
}

TEST_CASE("bar_map") {
  auto f = h_a(2);
  Comodule kq = path_comodule(f);
  BarProduct b = bar_product(kq, kq);
  LinearMap id = LinearMap::identity(kq.space());
  SUBCASE("identity") { CHECK(bar_map(id, id, b, b) == LinearMap::identity(b.product.space())); }
  SUBCASE("zero") {
    LinearMap z = LinearMap::zero(kq.space(), kq.space());
    CHECK(bar_map(z, id, b, b).nnz() == 0);
  }
  SUBCASE("scaling a by 2") {
    LinearMap s = id;
    std::size_t a = idx(kq.space(), "a");
    s.set_column(a, e(a, 2));
    LinearMap bm = bar_map(s, s, b, b);
    // In ambient terms: ι∘bm = (s⊗s)∘ι, and s⊗s scales e1⊗a and a⊗e2 by 2.
    CHECK(b.inclusion * bm == kron(s, s) * b.inclusion);
    const auto& S = kq.space();
    for (auto [x, y, c] : std::vector<std::tuple<std::string, std::string, int>>{
             {"e_1", "e_1", 1}, {"e_2", "e_2", 1}, {"e_1", "a", 2}, {"a", "e_2", 2}}) {
      SparseVector v = e(idx(S, x) * 3 + idx(S, y));
      SparseVector coords = b.projection(v);
      CHECK(b.inclusion(bm(coords)) == Scalar(c) * v);
    }
  }
  SUBCASE("non-morphism is rejected") {
    LinearMap bad = id;
    bad.set_column(idx(kq.space(), "e_1"), e(idx(kq.space(), "a")));
    CHECK_THROWS_AS(bar_map(bad, id, b, b), NotAComoduleMorphism);
    try {
      bar_map(bad, id, b, b);
    } catch (const NotAComoduleMorphism& err) {
      CHECK(err.failure().witness.has_value());
    }
  }
}

TEST_CASE("naturality of η and ι") {
  auto f = h_a(2);
  Comodule kq = path_comodule(f);
  BarProduct b = bar_product(kq, kq);
  LinearMap s = LinearMap::identity(kq.space());
  s.set_column(idx(kq.space(), "a"), e(idx(kq.space(), "a"), 3));
  LinearMap bm = bar_map(s, s, b, b);
  CHECK(b.projection * kron(s, s) == bm * b.projection);
  CHECK(kron(s, s) * b.inclusion == b.inclusion * bm);
}

TEST_CASE("unit_isomorphisms") {
  SUBCASE("bialgebra: l(1⊗m) = m") {
    Comodule m = Comodule::regular(z2());
    auto ui = unit_isomorphisms(m);
    CHECK(all_pass(ui.report));
    CHECK(ui.left_bar.subspace.dim() == 2);
    for (std::size_t i = 0; i < 2; ++i) CHECK(ui.l(ui.left_bar.projection(e(i))) == e(i));
  }
  SUBCASE("M = H_s: l and r are multiplication in H_s") {
    for (auto h : {pair2(), h_a(2).wba, h_a(3).wba}) {
      Comodule hs = Comodule::unit_object(h);
      auto ui = unit_isomorphisms(hs);
      CHECK(all_pass(ui.report));
      LinearMap mu = structure_on(h->algebra(), h->source().basis, h->source().projection);
      CHECK(ui.l == mu * ui.left_bar.inclusion);
      CHECK(ui.r == mu * ui.right_bar.inclusion);
    }
  }
  SUBCASE("kQ over h(A2)") {
    auto f = h_a(2);
    Comodule kq = path_comodule(f);
    auto ui = unit_isomorphisms(kq);
    CHECK(ui.l * ui.l_inv == LinearMap::identity(kq.space()));
    CHECK(ui.r * ui.r_inv == LinearMap::identity(kq.space()));
    CHECK(all_pass(ui.report));
  }
  SUBCASE("corpus") {
    for (const auto& m : corpus()) {
      CAPTURE(m.name());
      CHECK(all_pass(unit_isomorphisms(m).report));
    }
  }
}

TEST_CASE("coherence") {
  auto f = h_a(2);
  Comodule kq = path_comodule(f);
  Comodule hs = Comodule::unit_object(f.wba);
  Comodule reg = Comodule::regular(f.wba);
  SUBCASE("both parenthesizations agree") {
    for (const auto* x : {&kq, &hs, &reg})
      for (const auto* y : {&kq, &hs})
        for (const auto* z : {&kq, &reg}) {
          BarTriple t = bar_triple(*x, *y, *z);
          CHECK(all_pass(t.report));
        }
  }
  SUBCASE("triangle identity") {
    for (const auto* m : {&kq, &reg})
      for (const auto* n : {&kq, &hs}) {
        BarTriple t = bar_triple(*m, hs, *n);
        BarProduct mn = bar_product(*m, *n);
        auto um = unit_isomorphisms(*m);
        auto un = unit_isomorphisms(*n);
        LinearMap id_m = LinearMap::identity(m->space());
        LinearMap id_n = LinearMap::identity(n->space());
        LinearMap lhs = bar_map(id_m, un.l, t.x_yz, mn) * t.assoc;
        LinearMap rhs = bar_map(um.r, id_n, t.xy_z, mn);
        CHECK(lhs == rhs);
      }
  }
  SUBCASE("pentagon subspaces agree") {
    // ((X Y) Z) W and X (Y (Z W)) inside X⊗Y⊗Z⊗W.
    BarProduct xy = bar_product(kq, reg);
    BarProduct xy_z = bar_product(xy.product, kq);
    BarProduct left = bar_product(xy_z.product, reg);
    BarProduct zw = bar_product(kq, reg);
    BarProduct y_zw = bar_product(reg, zw.product);
    BarProduct right = bar_product(kq, y_zw.product);
    LinearMap id_k = LinearMap::identity(kq.space());
    LinearMap id_r = LinearMap::identity(reg.space());
    LinearMap el = kron(kron(xy.inclusion, id_k) * xy_z.inclusion, id_r) * left.inclusion;
    LinearMap er = kron(id_k, kron(id_r, zw.inclusion) * y_zw.inclusion) * right.inclusion;
    CHECK(same_span(el, er));
  }
}

TEST_CASE("forgetful_structure") {
  SUBCASE("bialgebra: η = ι = Id") {
    Comodule m = Comodule::regular(z2());
    auto u = forgetful_structure(m, m);
    CHECK(u.monoidal == LinearMap::identity(tensor(m.space(), m.space())).relabel(u.monoidal.domain(), u.monoidal.codomain()));
    CHECK(all_pass(u.report));
  }
  SUBCASE("kQ over h(A2)") {
    auto f = h_a(2);
    Comodule kq = path_comodule(f);
    auto u = forgetful_structure(kq, kq);
    CHECK(u.monoidal * u.comonoidal == LinearMap::identity(u.monoidal.codomain()));
    CHECK(u.monoidal.codomain().dim() == 4);
    CHECK(u.counit.evaluate(u.unit.column(0)) == 2);
    CHECK(fact(u.report, "counit-of-unit") == "2");
    CHECK(all_pass(u.report));
  }
  SUBCASE("mixed pairs") {
    auto f = h_a(3);
    Comodule kq = path_comodule(f);
    Comodule reg = Comodule::regular(f.wba);
    CHECK(all_pass(forgetful_structure(kq, reg).report));
    CHECK(all_pass(forgetful_structure(reg, kq).report));
    auto p = pair2();
    CHECK(all_pass(forgetful_structure(Comodule::regular(p), Comodule::unit_object(p)).report));
  }
}

TEST_CASE("hs_bistructure") {
  SUBCASE("bialgebra: x ▷ m = ε(x) m") {
    Comodule m = Comodule::regular(z2());
    auto hb = hs_bistructure(m);
    CHECK(all_pass(hb.report));
    REQUIRE(m.algebra().source().dim() == 1);
    Scalar eps = m.algebra().counit_of(m.algebra().source().basis.column(0));
    for (std::size_t i = 0; i < 2; ++i) CHECK(hb.left_action.column(i) == eps * e(i));
  }
  SUBCASE("kQ over h(A2): a_1 ▷ e_1 = e_1 and a_2 ▷ e_1 = 0") {
    auto f = h_a(2);
    Comodule kq = path_comodule(f);
    auto hb = hs_bistructure(kq);
    CHECK(all_pass(hb.report));
    const auto& H = f.wba->space();
    auto a1 = solve_in_subspace(sum_of(H, {"x[e_1,e_1]", "x[e_2,e_1]"}), f.wba->source());
    auto a2 = solve_in_subspace(sum_of(H, {"x[e_1,e_2]", "x[e_2,e_2]"}), f.wba->source());
    REQUIRE(a1);
    REQUIRE(a2);
    std::size_t e1 = idx(kq.space(), "e_1");
    CHECK(hb.left_action(kron(*a1, e(e1), 3)) == e(e1));
    CHECK(hb.left_action(kron(*a2, e(e1), 3)).is_zero());
    CHECK(has_discrepancy(hb.report, "literal-left-coaction"));
  }
  SUBCASE("M = H_s: ▷ is multiplication") {
    for (auto h : {pair2(), h_a(2).wba, h_a(3).wba}) {
      auto hb = hs_bistructure(Comodule::unit_object(h));
      CHECK(all_pass(hb.report));
      CHECK(hb.left_action == structure_on(h->algebra(), h->source().basis, h->source().projection));
    }
  }
  SUBCASE("corpus") {
    for (const auto& m : corpus()) {
      CAPTURE(m.name());
      CHECK(all_pass(hs_bistructure(m).report));
    }
  }
}
