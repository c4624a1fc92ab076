#include "wbalg/qtg.hpp"

#include <array>
#include <stdexcept>
#include <tuple>

namespace wbalg {

namespace {

// Σ c (i, j) for a vector in a two-fold tensor product.
std::vector<std::tuple<std::size_t, std::size_t, Scalar>> split(const SparseVector& v, std::size_t dim_right) {
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> out;
  for (const auto& e : v) out.emplace_back(e.index / dim_right, e.index % dim_right, e.value);
  return out;
}

SparseVector kron3(const SparseVector& u, const SparseVector& v, std::size_t dv, const SparseVector& w,
                   std::size_t dw) {
  return kron(kron(u, v, dv), w, dw);
}

SparseVector times(const AlgebraData& a, const SparseVector& u, std::size_t y) {
  return multiply(a, u, SparseVector::unit(y));
}

SparseVector times(const AlgebraData& a, std::size_t x, const SparseVector& v) {
  return multiply(a, SparseVector::unit(x), v);
}

// (u ◁ h) for a vector u in B and a vector h in L.
SparseVector act_right(const ModuleAlgebraAction& act, const SparseVector& u, const SparseVector& h, std::size_t nl) {
  return act.right(kron(u, h, nl));
}

LinearMap solve_trace_system(const AlgebraData& b, const SparseVector& e, SparseVector& rhs, Space& rows) {
  std::size_t n = b.dim();
  std::vector<std::string> side{"left", "right"};
  rows = tensor(Space(side), b.space);
  std::vector<std::string> unknowns;
  for (std::size_t i = 0; i < n; ++i) unknowns.push_back("ω(" + b.space.label(i) + ")");
  LinearMap w(Space(unknowns), rows);
  std::vector<VectorBuilder> cols(n);
  for (const auto& [i, j, c] : split(e, n)) {
    cols[i].add(j, c);  // ω(e⁽¹⁾) e⁽²⁾
    cols[j].add(n + i, c);  // e⁽¹⁾ ω(e⁽²⁾)
  }
  for (std::size_t i = 0; i < n; ++i) w.set_column(i, cols[i].build());
  rhs = b.unit + kron(SparseVector::unit(1), b.unit, n);
  return w;
}

std::string label_list(const Bicomodule& x, const Bicomodule& y) { return x.name + "," + y.name; }

}  // namespace

HopfAlgebraData make_hopf(std::string name, AlgebraData alg, CoalgebraData coalg, LinearMap antipode) {
  validate(alg);
  validate(coalg);
  if (!(antipode.domain() == alg.space) || !(antipode.codomain() == alg.space))
    throw DimensionMismatch("antipode of " + name + " must map L → L");
  auto inv = inverse(antipode);
  if (!inv) {
    CheckReport rep;
    rep.subject = name;
    rep.add(boolean_check("antipode-invertible", false));
    throw InvalidStructure("antipode of " + name + " is singular", rep);
  }
  return HopfAlgebraData{std::move(name), std::move(alg), std::move(coalg), std::move(antipode), std::move(*inv)};
}

HopfAlgebraData group_hopf(const GroupTable& g, const std::string& name) {
  validate(g);
  auto w = group_algebra(g, name);
  return make_hopf(name, w.wba->algebra(), w.wba->coalgebra(), w.antipode);
}

CheckReport check_hopf(const HopfAlgebraData& l, const CheckOptions& opt) {
  auto wba = std::make_shared<const WeakBialgebra>(l.name, l.algebra, l.coalgebra, Construction::unchecked);
  CheckReport rep = check_weak_hopf(WeakHopfAlgebra{wba, l.antipode, l.antipode_inverse}, opt);
  rep.subject = l.name;
  const Space& L = l.space();
  std::size_t n = l.dim();
  rep.add(equality_check("delta-one", tensor(L, L), wba->delta_one(), kron(l.algebra.unit, l.algebra.unit, n)));
  rep.add(run_check<Scalar>(
      "counit-multiplicative", {L, L}, Space::ground(),
      [&](std::span<const std::size_t> t) -> std::optional<std::pair<Scalar, Scalar>> {
        return std::pair<Scalar, Scalar>(wba->counit_of(l.algebra.product(t[0], t[1])),
                                         wba->counit_value(t[0]) * wba->counit_value(t[1]));
      },
      opt));
  return rep;
}

SeparableAlgebraData make_separable(AlgebraData b, SparseVector e, std::optional<LinearMap> omega) {
  validate(b);
  std::size_t n = b.dim();
  SeparableAlgebraData out{std::move(b), std::move(e), LinearMap(), {}};
  out.derivation.subject = "ω";
  SparseVector rhs;
  Space rows;
  LinearMap w = solve_trace_system(out.algebra, out.idempotent, rhs, rows);
  auto derived = solve(w, rhs);
  std::optional<LinearMap> derived_map;
  if (derived) {
    derived_map = LinearMap::functional(out.space(), *derived);
    out.derivation.add_fact("omega-unique", rank(w) == n ? "yes" : "no");
  }
  out.derivation.add_fact("omega-derivable", derived ? "yes" : "no");

  if (omega) {
    if (!(omega->domain() == out.space()) || !omega->codomain().is_ground())
      throw DimensionMismatch("ω must be a functional on B");
    out.derivation.add_fact("omega-source", "supplied");
    SparseVector coeffs;
    {
      VectorBuilder vb;
      for (std::size_t i = 0; i < n; ++i) vb.add(i, omega->column(i).coefficient(0));
      coeffs = vb.build();
    }
    if (!(w(coeffs) == rhs))
      out.derivation.discrepancies.push_back(
          {"supplied-omega-trace-identity", "the supplied ω does not satisfy ω(e⁽¹⁾)e⁽²⁾ = e⁽¹⁾ω(e⁽²⁾) = 1",
           std::nullopt});
    if (derived_map && !(*derived_map == *omega))
      out.derivation.discrepancies.push_back(
          {"supplied-omega-conflict", "the supplied ω differs from the ω solved from the idempotent", std::nullopt});
    out.omega = std::move(*omega);
  } else if (derived_map) {
    out.derivation.add_fact("omega-source", "derived");
    out.omega = std::move(*derived_map);
  } else {
    CheckReport rep = out.derivation;
    rep.add(boolean_check("omega-derivable", false));
    throw InvalidStructure("no ω satisfies ω(e⁽¹⁾)e⁽²⁾ = e⁽¹⁾ω(e⁽²⁾) = 1", rep);
  }
  return out;
}

SeparableAlgebraData group_separable(const GroupTable& g, const std::string& name) {
  HopfAlgebraData l = group_hopf(g, name);
  std::size_t n = l.dim();
  Scalar c(1, static_cast<unsigned long>(n));
  c.canonicalize();
  VectorBuilder e;
  for (std::size_t x = 0; x < n; ++x) e.add(x * n + g.inverse(x), c);
  return make_separable(l.algebra, e.build());
}

CheckReport check_separable(const SeparableAlgebraData& b, const CheckOptions& opt) {
  CheckReport rep;
  rep.subject = "separable " + std::to_string(b.dim());
  rep.merge(check_algebra(b.algebra, opt), "algebra/");
  const Space& B = b.space();
  std::size_t n = b.dim();
  Space BB = tensor(B, B);
  const SparseVector& one = b.algebra.unit;
  rep.add(run_check<SparseVector>(
      "idempotent-central", {B}, BB,
      [&](std::span<const std::size_t> t) -> std::optional<std::pair<SparseVector, SparseVector>> {
        SparseVector x = SparseVector::unit(t[0]);
        return std::pair(*try_multiply_tensor(b.algebra, kron(x, one, n), b.idempotent, 2),
                         *try_multiply_tensor(b.algebra, b.idempotent, kron(one, x, n), 2));
      },
      opt));
  VectorBuilder prod, swapped, left, right;
  for (const auto& [i, j, c] : split(b.idempotent, n)) {
    prod.add(b.algebra.product(i, j), c);
    swapped.add(j * n + i, c);
    left.add(SparseVector::unit(j), c * b.omega.entry(0, i));
    right.add(SparseVector::unit(i), c * b.omega.entry(0, j));
  }
  rep.add(equality_check("idempotent-unit", B, prod.build(), one));
  rep.add(equality_check("idempotent-symmetric", BB, swapped.build(), b.idempotent));
  rep.add(equality_check("trace-left", B, left.build(), one));
  rep.add(equality_check("trace-right", B, right.build(), one));
  LinearMap gram(B, B);
  for (std::size_t x = 0; x < n; ++x) {
    VectorBuilder col;
    for (std::size_t y = 0; y < n; ++y) col.add(y, b.omega.evaluate(b.algebra.product(x, y)));
    gram.set_column(x, col.build());
  }
  rep.add(boolean_check("trace-nondegenerate", rank(gram) == n));
  return rep;
}

ModuleAlgebraAction make_action(const HopfAlgebraData& l, LinearMap right) {
  const Space& L = l.space();
  const Space& B = right.codomain();
  if (!(right.domain() == tensor(B, L))) throw DimensionMismatch("action must map B⊗L → B");
  std::size_t nb = B.dim(), nl = L.dim();
  LinearMap left(tensor(L, B), B);
  for (std::size_t h = 0; h < nl; ++h)
    for (std::size_t a = 0; a < nb; ++a)
      left.set_column(h * nb + a, right(kron(SparseVector::unit(a), l.antipode.column(h), nl)));
  return ModuleAlgebraAction{std::move(right), std::move(left)};
}

ModuleAlgebraAction adjoint_action(const HopfAlgebraData& l) {
  const Space& L = l.space();
  std::size_t n = l.dim();
  LinearMap right(tensor(L, L), L);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t h = 0; h < n; ++h) {
      VectorBuilder col;
      for (const auto& [h1, h2, c] : split(l.coalgebra.comult.column(h), n))
        col.add(times(l.algebra, times(l.algebra, l.antipode.column(h1), b), h2), c);
      right.set_column(b * n + h, col.build());
    }
  return make_action(l, std::move(right));
}

ModuleAlgebraAction trivial_action(const HopfAlgebraData& l, const SeparableAlgebraData& b) {
  std::size_t nb = b.dim(), nl = l.dim();
  LinearMap right(tensor(b.space(), l.space()), b.space());
  for (std::size_t x = 0; x < nb; ++x)
    for (std::size_t h = 0; h < nl; ++h)
      right.set_column(x * nl + h, SparseVector::unit(x, l.coalgebra.counit.entry(0, h)));
  return make_action(l, std::move(right));
}

CheckReport check_action_data(const HopfAlgebraData& l, const SeparableAlgebraData& b, const ModuleAlgebraAction& act,
                              const CheckOptions& opt) {
  const Space& L = l.space();
  const Space& B = b.space();
  std::size_t nl = L.dim(), nb = B.dim();
  if (!(act.right.domain() == tensor(B, L)) || !(act.right.codomain() == B) ||
      !(act.left.domain() == tensor(L, B)) || !(act.left.codomain() == B))
    throw DimensionMismatch("action maps do not match L and B");
  CheckReport rep;
  rep.subject = "action of " + l.name;
  rep.merge(check_hopf(l, opt), "hopf/");
  rep.merge(check_separable(b, opt), "separable/");
  rep.merge(b.derivation, "separable/");

  auto rb = [&](std::size_t x, std::size_t h) -> const SparseVector& { return act.right.column(x * nl + h); };
  auto unit = [](std::size_t i) { return SparseVector::unit(i); };
  using VV = std::optional<std::pair<SparseVector, SparseVector>>;

  rep.add(run_check<SparseVector>(
      "right-module", {B, L, L}, B,
      [&](std::span<const std::size_t> t) -> VV {
        return std::pair(act_right(act, rb(t[0], t[1]), unit(t[2]), nl),
                         act_right(act, unit(t[0]), l.algebra.product(t[1], t[2]), nl));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "right-module-unit", {B}, B,
      [&](std::span<const std::size_t> t) -> VV {
        return std::pair(act_right(act, unit(t[0]), l.algebra.unit, nl), unit(t[0]));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "module-algebra", {B, B, L}, B,
      [&](std::span<const std::size_t> t) -> VV {
        SparseVector lhs = act_right(act, b.algebra.product(t[0], t[1]), unit(t[2]), nl);
        VectorBuilder rhs;
        for (const auto& [h1, h2, c] : split(l.coalgebra.comult.column(t[2]), nl))
          rhs.add(multiply(b.algebra, rb(t[0], h1), rb(t[1], h2)), c);
        return std::pair(lhs, rhs.build());
      },
      opt));
  rep.add(run_check<SparseVector>(
      "module-algebra-unit", {L}, B,
      [&](std::span<const std::size_t> t) -> VV {
        return std::pair(act_right(act, b.algebra.unit, unit(t[0]), nl),
                         l.coalgebra.counit.entry(0, t[0]) * b.algebra.unit);
      },
      opt));
  rep.add(run_check<Scalar>(
      "trace-compat", {L, B, B}, Space::ground(),
      [&](std::span<const std::size_t> t) -> std::optional<std::pair<Scalar, Scalar>> {
        Scalar lhs = b.omega.evaluate(times(b.algebra, act.left.column(t[0] * nb + t[1]), t[2]));
        Scalar rhs = b.omega.evaluate(times(b.algebra, t[1], rb(t[2], t[0])));
        return std::pair(lhs, rhs);
      },
      opt));
  rep.add(run_check<SparseVector>(
      "idempotent-compat", {L}, tensor(B, B),
      [&](std::span<const std::size_t> t) -> VV {
        VectorBuilder lhs, rhs;
        for (const auto& [i, j, c] : split(b.idempotent, nb)) {
          lhs.add_kron(unit(i), act.left.column(t[0] * nb + j), nb, c);
          rhs.add_kron(rb(i, t[0]), unit(j), nb, c);
        }
        return std::pair(lhs.build(), rhs.build());
      },
      opt));
  return rep;
}

std::size_t QTG::index(std::size_t a, std::size_t h, std::size_t x) const {
  return (a * l->dim() + h) * b->dim() + x;
}

QTG build_qtg(HopfAlgebraData l_in, SeparableAlgebraData b_in, ModuleAlgebraAction act_in, const CheckOptions& opt,
              std::string name) {
  CheckReport action_report = check_action_data(l_in, b_in, act_in, opt);
  if (!action_report.passed()) throw ActionDataInvalid("action data for " + name + " fails its checks", action_report);

  QTG q;
  q.l = std::make_shared<const HopfAlgebraData>(std::move(l_in));
  q.b = std::make_shared<const SeparableAlgebraData>(std::move(b_in));
  q.action = std::make_shared<const ModuleAlgebraAction>(std::move(act_in));
  const HopfAlgebraData& l = *q.l;
  const SeparableAlgebraData& b = *q.b;
  const ModuleAlgebraAction& act = *q.action;
  const AlgebraData& la = l.algebra;
  const AlgebraData& ba = b.algebra;
  std::size_t nl = l.dim(), nb = b.dim();
  Space H = tensor(b.space(), l.space(), b.space());
  std::size_t n = H.dim();
  auto unit = [](std::size_t i) { return SparseVector::unit(i); };
  auto decode = [&](std::size_t x) { return std::array<std::size_t, 3>{x / (nl * nb), (x / nb) % nl, x % nb}; };
  auto delta = [&](std::size_t h) { return split(l.coalgebra.comult.column(h), nl); };
  auto e_terms = split(b.idempotent, nb);

  // (h₁ ▷ a')a ⊗ h₂h₁' ⊗ (b ◁ h₂')b'
  AlgebraData alg{H, LinearMap(tensor(H, H), H), {}, nullptr};
  for (std::size_t x = 0; x < n; ++x) {
    auto [a, h, bx] = decode(x);
    auto dh = delta(h);
    for (std::size_t y = 0; y < n; ++y) {
      auto [a2, h2, b2] = decode(y);
      VectorBuilder col;
      for (const auto& [k1, k2, c] : dh)
        for (const auto& [m1, m2, c2] : delta(h2)) {
          SparseVector left = times(ba, act.left.column(k1 * nb + a2), a);
          SparseVector right = times(ba, act.right.column(bx * nl + m2), b2);
          col.add(kron3(left, la.product(k2, m1), nl, right, nb), c * c2);
        }
      alg.mult.set_column(x * n + y, col.build());
    }
  }
  alg.unit = kron3(ba.unit, la.unit, nl, ba.unit, nb);

  // (a ⊗ h₁ ⊗ e⁽¹⁾) ⊗ ((h₂ ▷ e⁽²⁾) ⊗ h₃ ⊗ b) and ε = ω(a(b ◁ S⁻¹(h)))
  CoalgebraData coalg{H, LinearMap(H, tensor(H, H)), LinearMap(H, Space::ground())};
  for (std::size_t x = 0; x < n; ++x) {
    auto [a, h, bx] = decode(x);
    VectorBuilder col;
    for (const auto& [h1, h23, c] : delta(h))
      for (const auto& [h2, h3, c2] : delta(h23))
        for (const auto& [i, j, c3] : e_terms) {
          SparseVector second = kron3(act.left.column(h2 * nb + j), unit(h3), nl, unit(bx), nb);
          col.add_kron(unit((a * nl + h1) * nb + i), second, n, c * c2 * c3);
        }
    coalg.comult.set_column(x, col.build());
    SparseVector twisted = act_right(act, unit(bx), l.antipode_inverse.column(h), nl);
    coalg.counit.set_column(x, SparseVector::unit(0, b.omega.evaluate(times(ba, a, twisted))));
  }

  LinearMap s(H, H), s_inv(H, H);
  for (std::size_t x = 0; x < n; ++x) {
    auto [a, h, bx] = decode(x);
    VectorBuilder col, col_inv;
    for (const auto& e : l.antipode.column(h)) col.add((bx * nl + e.index) * nb + a, e.value);
    for (const auto& e : l.antipode_inverse.column(h)) col_inv.add((bx * nl + e.index) * nb + a, e.value);
    s.set_column(x, col.build());
    s_inv.set_column(x, col_inv.build());
  }

  auto wba = std::make_shared<const WeakBialgebra>(name, std::move(alg), std::move(coalg), Construction::unchecked);
  q.hopf = WeakHopfAlgebra{wba, std::move(s), std::move(s_inv)};

  CheckReport& rep = q.report;
  rep.subject = name;
  rep.merge(action_report, "action/");
  rep.merge(check_weak_hopf(q.hopf, opt));

  // ε_s(a⊗h⊗b) = 1⊗1⊗(a◁h)b and ε_t(a⊗h⊗b) = (h▷b)a⊗1⊗1.
  LinearMap eps_s(H, H), eps_t(H, H);
  for (std::size_t x = 0; x < n; ++x) {
    auto [a, h, bx] = decode(x);
    eps_s.set_column(x, kron3(ba.unit, la.unit, nl, times(ba, act.right.column(a * nl + h), bx), nb));
    eps_t.set_column(x, kron3(times(ba, act.left.column(h * nb + bx), a), la.unit, nl, ba.unit, nb));
  }
  rep.add(map_equality_check("lemma/eps-s-closed-form", wba->eps_s(), eps_s));
  rep.add(map_equality_check("lemma/eps-t-closed-form", wba->eps_t(), eps_t));
  LinearMap hs(b.space(), H), ht(b.space(), H);
  for (std::size_t x = 0; x < nb; ++x) {
    hs.set_column(x, kron3(ba.unit, la.unit, nl, unit(x), nb));
    ht.set_column(x, kron3(unit(x), la.unit, nl, ba.unit, nb));
  }
  rep.add(boolean_check("lemma/source-subspace", same_span(wba->source().basis, hs)));
  rep.add(boolean_check("lemma/target-subspace", same_span(wba->target().basis, ht)));

  const LinearMap& sm = q.hopf.antipode;
  rep.add(map_equality_check("observed/antipode-squared-on-source", sm * sm * wba->source().basis,
                             wba->source().basis));
  rep.add(map_equality_check("observed/antipode-squared-on-target", sm * sm * wba->target().basis,
                             wba->target().basis));
  return q;
}

QTG group_qtg(const GroupTable& g, const CheckOptions& opt) {
  HopfAlgebraData l = group_hopf(g, "kG");
  SeparableAlgebraData b = group_separable(g, "kG");
  ModuleAlgebraAction act = adjoint_action(l);
  QTG q = build_qtg(l, b, act, opt, "H(kG,kG,adj)");
  const WeakBialgebra& h = q.wba();
  const Space& H = h.space();
  std::size_t n = g.elements.size(), dim = H.dim();
  auto mul = [&](std::size_t x, std::size_t y) { return g.table[x][y]; };
  auto inv = [&](std::size_t x) { return g.inverse(x); };
  Scalar c(1, static_cast<unsigned long>(n));
  c.canonicalize();

  LinearMap mult(tensor(H, H), H), comult(H, tensor(H, H)), anti(H, H);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t a = x / (n * n), hh = (x / n) % n, bx = x % n;
    for (std::size_t y = 0; y < dim; ++y) {
      std::size_t a2 = y / (n * n), h2 = (y / n) % n, b2 = y % n;
      std::size_t left = mul(mul(mul(hh, a2), inv(hh)), a);
      std::size_t right = mul(mul(mul(inv(h2), bx), h2), b2);
      mult.set_column(x * dim + y, SparseVector::unit(q.index(left, mul(hh, h2), right)));
    }
    VectorBuilder col;
    for (std::size_t k = 0; k < n; ++k)
      col.add(q.index(a, hh, k) * dim + q.index(mul(mul(hh, inv(k)), inv(hh)), hh, bx), c);
    comult.set_column(x, col.build());
    anti.set_column(x, SparseVector::unit(q.index(bx, inv(hh), a)));
  }
  CheckReport& rep = q.report;
  rep.add(map_equality_check("example/mult", h.mult(), mult));
  rep.add(map_equality_check("example/comult", h.comult(), comult));
  rep.add(map_equality_check("example/antipode", q.hopf.antipode, anti));

  // ω = ε_kG against the trace identity.
  VectorBuilder trace;
  for (const auto& [i, j, cc] : split(q.b->idempotent, n)) trace.add(SparseVector::unit(j), cc);
  SparseVector traced = trace.build();
  if (!(traced == q.b->algebra.unit)) {
    Witness w;
    w.lhs = Tensor::from_vector(q.b->space(), traced);
    w.rhs = Tensor::from_vector(q.b->space(), q.b->algebra.unit);
    rep.discrepancies.push_back({"omega-is-counit",
                                 "ω = ε gives ω(e⁽¹⁾)e⁽²⁾ ≠ 1; the trace form solved from e is used instead", w});
  }
  std::vector<std::string> omega_values;
  for (std::size_t x = 0; x < n; ++x)
    omega_values.push_back(g.elements[x] + ":" + to_string(q.b->omega.entry(0, x)));
  std::string joined;
  for (const auto& s : omega_values) joined += (joined.empty() ? "" : " ") + s;
  rep.add_fact("omega", joined);

  // ε(a⊗h⊗b) = |G| when a·hbh⁻¹ = 1, else 0.
  LinearMap derived(H, Space::ground());
  std::optional<std::size_t> first_mismatch;
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t a = x / (n * n), hh = (x / n) % n, bx = x % n;
    bool one = mul(a, mul(mul(hh, bx), inv(hh))) == g.identity();
    derived.set_column(x, one ? SparseVector::unit(0, Scalar(static_cast<unsigned long>(n))) : SparseVector());
    if (!first_mismatch && h.counit_value(x) != 1) first_mismatch = x;
  }
  rep.add(map_equality_check("example/counit-from-derived-omega", h.counit(), derived));
  if (first_mismatch) {
    Witness w;
    w.tuple = {*first_mismatch};
    w.labels = {H.label(*first_mismatch)};
    w.lhs = Tensor::from_vector(Space::ground(), SparseVector::unit(0, h.counit_value(*first_mismatch)));
    w.rhs = Tensor::from_vector(Space::ground(), SparseVector::unit(0));
    rep.discrepancies.push_back(
        {"displayed-counit", "the displayed ε(a⊗h⊗b) = 1 differs from ω(a(b ◁ S⁻¹(h))) with the solved ω", w});
  }
  return q;
}

Bicomodule make_bicomodule(std::string name, std::shared_ptr<const HopfAlgebraData> l, Space space, LinearMap left,
                           LinearMap right) {
  if (!l) throw std::invalid_argument("bicomodule without a Hopf algebra");
  if (!(left.domain() == space) || !(left.codomain() == tensor(l->space(), space)))
    throw DimensionMismatch("left coaction of " + name + " must map X → L⊗X");
  if (!(right.domain() == space) || !(right.codomain() == tensor(space, l->space())))
    throw DimensionMismatch("right coaction of " + name + " must map X → X⊗L");
  return Bicomodule{std::move(name), std::move(l), std::move(space), std::move(left), std::move(right)};
}

Bicomodule trivial_bicomodule(std::shared_ptr<const HopfAlgebraData> l) {
  Space k = Space::ground();
  LinearMap u = LinearMap::vector(l->space(), l->algebra.unit);
  return make_bicomodule("k", l, k, u, u);
}

Bicomodule regular_bicomodule(std::shared_ptr<const HopfAlgebraData> l) {
  Space s = l->space();
  LinearMap d = l->coalgebra.comult;
  return make_bicomodule(l->name, l, s, d, d);
}

Bicomodule graded_bicomodule(std::string name, std::shared_ptr<const HopfAlgebraData> l,
                             std::vector<std::string> labels, const std::vector<std::size_t>& degrees) {
  if (labels.size() != degrees.size()) throw DimensionMismatch("one degree per basis vector");
  Space x(std::move(labels));
  std::size_t d = x.dim(), nl = l->dim();
  LinearMap left(x, tensor(l->space(), x)), right(x, tensor(x, l->space()));
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t g = degrees[i];
    if (g >= nl) throw DimensionMismatch("degree out of range");
    if (!(l->coalgebra.comult.column(g) == SparseVector::unit(g * nl + g)))
      throw std::invalid_argument("degree " + l->space().label(g) + " is not grouplike");
    right.set_column(i, SparseVector::unit(i * nl + g));
    left.set_column(i, kron(l->antipode.column(g), SparseVector::unit(i), d));
  }
  return make_bicomodule(std::move(name), std::move(l), std::move(x), std::move(left), std::move(right));
}

Bicomodule tensor(const Bicomodule& x, const Bicomodule& y) {
  if (x.l != y.l) throw DimensionMismatch(x.name + " and " + y.name + " are over different Hopf algebras");
  const HopfAlgebraData& l = *x.l;
  std::size_t nl = l.dim(), dx = x.dim(), dy = y.dim();
  Space s = tensor(x.space, y.space);
  LinearMap left(s, tensor(l.space(), s)), right(s, tensor(s, l.space()));
  for (std::size_t i = 0; i < dx; ++i)
    for (std::size_t j = 0; j < dy; ++j) {
      VectorBuilder lb, rb;
      for (const auto& [g, x0, c] : split(x.left.column(i), dx))
        for (const auto& [g2, y0, c2] : split(y.left.column(j), dy))
          lb.add_kron(l.algebra.product(g, g2), SparseVector::unit(x0 * dy + y0), dx * dy, c * c2);
      for (const auto& [x0, g, c] : split(x.right.column(i), nl))
        for (const auto& [y0, g2, c2] : split(y.right.column(j), nl))
          rb.add_kron(SparseVector::unit(x0 * dy + y0), l.algebra.product(g, g2), nl, c * c2);
      left.set_column(i * dy + j, lb.build());
      right.set_column(i * dy + j, rb.build());
    }
  return make_bicomodule(x.name + "⊗" + y.name, x.l, std::move(s), std::move(left), std::move(right));
}

CheckReport check_bicomodule(const Bicomodule& x, const CheckOptions& opt) {
  const HopfAlgebraData& l = *x.l;
  const Space& L = l.space();
  std::size_t d = x.dim(), nl = l.dim();
  CheckReport rep;
  rep.subject = x.name;
  using VV = std::optional<std::pair<SparseVector, SparseVector>>;
  const LinearMap& comult = l.coalgebra.comult;
  const LinearMap& counit = l.coalgebra.counit;
  rep.add(run_check<SparseVector>(
      "left-comodule/coassoc", {x.space}, tensor(L, L, x.space),
      [&](std::span<const std::size_t> t) -> VV {
        const SparseVector& v = x.left.column(t[0]);
        return std::pair(apply_left(comult, v, d), apply_right(x.left, v));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "left-comodule/counit", {x.space}, x.space,
      [&](std::span<const std::size_t> t) -> VV {
        return std::pair(apply_left(counit, x.left.column(t[0]), d), SparseVector::unit(t[0]));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "right-comodule/coassoc", {x.space}, tensor(x.space, L, L),
      [&](std::span<const std::size_t> t) -> VV {
        const SparseVector& v = x.right.column(t[0]);
        return std::pair(apply_left(x.right, v, nl), apply_right(comult, v));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "right-comodule/counit", {x.space}, x.space,
      [&](std::span<const std::size_t> t) -> VV {
        return std::pair(apply_right(counit, x.right.column(t[0])), SparseVector::unit(t[0]));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "compat", {x.space}, tensor(L, x.space, L),
      [&](std::span<const std::size_t> t) -> VV {
        return std::pair(apply_left(x.left, x.right.column(t[0]), nl), apply_right(x.right, x.left.column(t[0])));
      },
      opt));
  return rep;
}

CheckReport check_bicomodule_morphism(const LinearMap& f, const Bicomodule& x, const Bicomodule& y,
                                      const CheckOptions& opt) {
  if (!(f.domain() == x.space) || !(f.codomain() == y.space))
    throw DimensionMismatch("morphism must map " + x.name + " → " + y.name);
  const Space& L = x.l->space();
  std::size_t nl = L.dim();
  using VV = std::optional<std::pair<SparseVector, SparseVector>>;
  CheckReport rep;
  rep.subject = x.name + " → " + y.name;
  rep.add(run_check<SparseVector>(
      "left-colinear", {x.space}, tensor(L, y.space),
      [&](std::span<const std::size_t> t) -> VV {
        return std::pair(y.left(f.column(t[0])), apply_right(f, x.left.column(t[0])));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "right-colinear", {x.space}, tensor(y.space, L),
      [&](std::span<const std::size_t> t) -> VV {
        return std::pair(y.right(f.column(t[0])), apply_left(f, x.right.column(t[0]), nl));
      },
      opt));
  return rep;
}

CheckReport check_bicomodule_algebra(const BicomoduleAlgebra& a, const CheckOptions& opt) {
  const Bicomodule& x = a.object;
  const Space& X = x.space;
  std::size_t d = x.dim();
  if (!(a.mult.domain() == tensor(X, X)) || !(a.mult.codomain() == X))
    throw DimensionMismatch("multiplication of " + x.name + " must map X⊗X → X");
  CheckReport rep;
  rep.subject = x.name;
  rep.merge(check_bicomodule(x, opt), "bicomodule/");
  using VV = std::optional<std::pair<SparseVector, SparseVector>>;
  auto mul = [&](const SparseVector& u, const SparseVector& v) { return a.mult(kron(u, v, d)); };
  auto unit = [](std::size_t i) { return SparseVector::unit(i); };
  rep.add(run_check<SparseVector>(
      "assoc", {X, X, X}, X,
      [&](std::span<const std::size_t> t) -> VV {
        return std::pair(mul(mul(unit(t[0]), unit(t[1])), unit(t[2])),
                         mul(unit(t[0]), mul(unit(t[1]), unit(t[2]))));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "unit-left", {X}, X,
      [&](std::span<const std::size_t> t) -> VV { return std::pair(mul(a.unit, unit(t[0])), unit(t[0])); }, opt));
  rep.add(run_check<SparseVector>(
      "unit-right", {X}, X,
      [&](std::span<const std::size_t> t) -> VV { return std::pair(mul(unit(t[0]), a.unit), unit(t[0])); }, opt));
  rep.merge(check_bicomodule_morphism(a.mult, tensor(x, x), x, opt), "mult-morphism/");
  rep.merge(check_bicomodule_morphism(LinearMap::vector(X, a.unit), trivial_bicomodule(x.l), x, opt),
            "unit-morphism/");
  return rep;
}

BicomoduleAlgebra regular_bicomodule_algebra(std::shared_ptr<const HopfAlgebraData> l) {
  LinearMap m = l->algebra.mult;
  SparseVector u = l->algebra.unit;
  return BicomoduleAlgebra{regular_bicomodule(std::move(l)), std::move(m), std::move(u)};
}

BicomoduleAlgebra trivial_bicomodule_algebra(std::shared_ptr<const HopfAlgebraData> l) {
  Space k = Space::ground();
  return BicomoduleAlgebra{trivial_bicomodule(std::move(l)), LinearMap::identity(k), SparseVector::unit(0)};
}

BicomoduleAlgebra truncated_tensor_algebra(std::shared_ptr<const HopfAlgebraData> l, std::size_t g, unsigned k) {
  const AlgebraData& la = l->algebra;
  if (la.unit.nnz() != 1 || la.unit.entries()[0].value != 1)
    throw std::invalid_argument("the unit of L must be a basis element");
  std::vector<std::string> labels{"1"};
  std::vector<std::size_t> degrees{la.unit.entries()[0].index};
  for (unsigned i = 1; i <= k; ++i) {
    labels.push_back(i == 1 ? "v" : "v^" + std::to_string(i));
    const SparseVector& p = la.product(degrees.back(), g);
    if (p.nnz() != 1 || p.entries()[0].value != 1) throw std::invalid_argument("degree must be grouplike");
    degrees.push_back(p.entries()[0].index);
  }
  std::string name = "T(V)/(v^" + std::to_string(k + 1) + ")";
  Bicomodule x = graded_bicomodule(name, std::move(l), std::move(labels), degrees);
  std::size_t d = k + 1;
  LinearMap m(tensor(x.space, x.space), x.space);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; i + j < d; ++j) m.set_column(i * d + j, SparseVector::unit(i + j));
  return BicomoduleAlgebra{std::move(x), std::move(m), SparseVector::unit(0)};
}

Comodule gamma(const QTG& h, const std::string& name, const Space& space, const LinearMap& right) {
  const HopfAlgebraData& l = *h.l;
  const SeparableAlgebraData& b = *h.b;
  std::size_t nl = l.dim(), nb = b.dim(), dx = space.dim(), n = h.wba().dim();
  if (!(right.domain() == space) || !(right.codomain() == tensor(space, l.space())))
    throw DimensionMismatch("right coaction of " + name + " must map X → X⊗L");
  Space g = tensor(b.space(), space, b.space());
  auto e_terms = split(b.idempotent, nb);
  LinearMap rho(g, tensor(g, h.wba().space()));
  // (a ⊗ x_[0] ⊗ e⁽¹⁾) ⊗ ((x_[1],1 ▷ e⁽²⁾) ⊗ x_[1],2 ⊗ b)
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t x = 0; x < dx; ++x)
      for (std::size_t bx = 0; bx < nb; ++bx) {
        VectorBuilder col;
        for (const auto& [x0, y, c] : split(right.column(x), nl))
          for (const auto& [y1, y2, c2] : split(l.coalgebra.comult.column(y), nl))
            for (const auto& [i, j, c3] : e_terms) {
              SparseVector second = kron3(h.action->left.column(y1 * nb + j), SparseVector::unit(y2), nl,
                                          SparseVector::unit(bx), nb);
              col.add_kron(SparseVector::unit((a * dx + x0) * nb + i), second, n, c * c2 * c3);
            }
        rho.set_column((a * dx + x) * nb + bx, col.build());
      }
  return Comodule("Γ(" + name + ")", h.hopf.wba, std::move(g), std::move(rho));
}

Comodule gamma(const QTG& h, const Bicomodule& x) {
  if (x.l != h.l) throw DimensionMismatch(x.name + " is not over the Hopf algebra of " + h.wba().name());
  return gamma(h, x.name, x.space, x.right);
}

LinearMap gamma_map(const QTG& h, const LinearMap& f) {
  LinearMap id = LinearMap::identity(h.b->space());
  return kron(kron(id, f), id);
}

LinearMap gamma_hat_unit(const QTG& h) {
  const WeakBialgebra& w = h.wba();
  std::size_t nl = h.l->dim(), nb = h.b->dim();
  LinearMap collapse(w.space(), tensor(h.b->space(), h.b->space()));
  for (std::size_t x = 0; x < w.dim(); ++x) {
    std::size_t a = x / (nl * nb), m = (x / nb) % nl, bx = x % nb;
    collapse.set_column(x, SparseVector::unit(a * nb + bx, h.l->coalgebra.counit.entry(0, m)));
  }
  return collapse * w.source().basis;
}

LinearMap gamma_hat_structure(const QTG& h, const Bicomodule& x, const Bicomodule& y, const BarProduct& bar) {
  const HopfAlgebraData& l = *h.l;
  const AlgebraData& ba = h.b->algebra;
  std::size_t nl = l.dim(), nb = h.b->dim(), dx = x.dim(), dy = y.dim();
  Space gx = tensor(h.b->space(), x.space, h.b->space());
  Space gy = tensor(h.b->space(), y.space, h.b->space());
  Space target = tensor(h.b->space(), tensor(x.space, y.space), h.b->space());
  if (!(bar.inclusion.codomain() == tensor(gx, gy)))
    throw DimensionMismatch("bar product does not match Γ(" + x.name + ")⊗Γ(" + y.name + ")");
  std::size_t ny = gy.dim();
  // (a⊗x⊗b)⊗(a'⊗y⊗b') ↦ (x_[-1] ▷ a')a ⊗ x_[0] ⊗ y_[0] ⊗ (b ◁ y_[1])b'
  LinearMap full(tensor(gx, gy), target);
  for (std::size_t u = 0; u < gx.dim(); ++u) {
    std::size_t a = u / (dx * nb), xi = (u / nb) % dx, bx = u % nb;
    for (std::size_t v = 0; v < ny; ++v) {
      std::size_t a2 = v / (dy * nb), yi = (v / nb) % dy, b2 = v % nb;
      VectorBuilder col;
      for (const auto& [g, x0, c] : split(x.left.column(xi), dx))
        for (const auto& [y0, g2, c2] : split(y.right.column(yi), nl)) {
          SparseVector left = times(ba, h.action->left.column(g * nb + a2), a);
          SparseVector right = times(ba, h.action->right.column(bx * nl + g2), b2);
          col.add(kron3(left, SparseVector::unit(x0 * dy + y0), dx * dy, right, nb), c * c2);
        }
      full.set_column(u * ny + v, col.build());
    }
  }
  return full * bar.inclusion;
}

CheckReport check_gamma_hat_units(const QTG& h, const Bicomodule& x, const CheckOptions& opt) {
  Bicomodule k = trivial_bicomodule(x.l);
  Comodule gx = gamma(h, x);
  Comodule gk = gamma(h, k);
  UnitIsomorphisms ui = unit_isomorphisms(gx, opt);
  LinearMap g0 = gamma_hat_unit(h);
  LinearMap id = LinearMap::identity(gx.space());
  CheckReport rep;
  rep.subject = x.name;

  BarProduct kx = bar_product(gk, gx, opt);
  LinearMap lhs = gamma_hat_structure(h, k, x, kx) * bar_map(g0, id, ui.left_bar, kx, Construction::unchecked);
  rep.add(map_equality_check("unit-left", lhs.relabel(lhs.domain(), gx.space()), ui.l));

  BarProduct xk = bar_product(gx, gk, opt);
  LinearMap rhs = gamma_hat_structure(h, x, k, xk) * bar_map(id, g0, ui.right_bar, xk, Construction::unchecked);
  rep.add(map_equality_check("unit-right", rhs.relabel(rhs.domain(), gx.space()), ui.r));
  return rep;
}

CheckResult check_gamma_hat_associativity(const QTG& h, const Bicomodule& x, const Bicomodule& y,
                                          const Bicomodule& z, const CheckOptions& opt) {
  Comodule gx = gamma(h, x), gy = gamma(h, y), gz = gamma(h, z);
  Bicomodule xy = tensor(x, y), yz = tensor(y, z);
  Comodule gxy = gamma(h, xy), gyz = gamma(h, yz);
  BarTriple tr = bar_triple(gx, gy, gz, opt);
  LinearMap hat_xy = gamma_hat_structure(h, x, y, tr.xy);
  LinearMap hat_yz = gamma_hat_structure(h, y, z, tr.yz);
  BarProduct b1 = bar_product(gxy, gz, opt);
  BarProduct b2 = bar_product(gx, gyz, opt);
  LinearMap lhs = gamma_hat_structure(h, xy, z, b1) *
                  bar_map(hat_xy, LinearMap::identity(gz.space()), tr.xy_z, b1, Construction::unchecked);
  LinearMap rhs = gamma_hat_structure(h, x, yz, b2) *
                  bar_map(LinearMap::identity(gx.space()), hat_yz, tr.x_yz, b2, Construction::unchecked) * tr.assoc;
  return map_equality_check("associativity/" + x.name + "," + y.name + "," + z.name, lhs,
                            rhs.relabel(rhs.domain(), lhs.codomain()));
}

GammaHat gamma_hat_monoidal(const QTG& h, const Bicomodule& x, const Bicomodule& y, const CheckOptions& opt) {
  Comodule gx = gamma(h, x), gy = gamma(h, y), gxy = gamma(h, tensor(x, y));
  BarProduct bar = bar_product(gx, gy, opt);
  LinearMap structure = gamma_hat_structure(h, x, y, bar);
  LinearMap unit = gamma_hat_unit(h);
  CheckReport rep;
  rep.subject = "Γ̂ on " + label_list(x, y);
  rep.add(check_comodule_morphism("structure-colinear", structure, bar.product, gxy, opt));
  Comodule gk = gamma(h, trivial_bicomodule(x.l));
  rep.add(check_comodule_morphism("unit-colinear", unit, Comodule::unit_object(h.hopf.wba), gk, opt));
  rep.merge(check_gamma_hat_units(h, x, opt), x.name + "/");
  if (y.name != x.name) rep.merge(check_gamma_hat_units(h, y, opt), y.name + "/");
  rep.add(check_gamma_hat_associativity(h, x, y, x, opt));
  return GammaHat{std::move(gx), std::move(gy), std::move(gxy), std::move(bar), std::move(structure), std::move(unit),
                  std::move(rep)};
}

TransportedAlgebra transport_algebra(const QTG& h, const BicomoduleAlgebra& x, const CheckOptions& opt) {
  CheckReport input = check_bicomodule_algebra(x, opt);
  if (!input.passed()) throw InvalidStructure(x.object.name + " is not an algebra in L-Bicomod", input);
  Comodule gx = gamma(h, x.object);
  BarProduct bar = bar_product(gx, gx, opt);
  LinearMap mult = gamma_map(h, x.mult) * gamma_hat_structure(h, x.object, x.object, bar);
  LinearMap unit = gamma_map(h, LinearMap::vector(x.object.space, x.unit)) * gamma_hat_unit(h);
  mult = mult.relabel(mult.domain(), gx.space());
  unit = unit.relabel(unit.domain(), gx.space());
  TransportedAlgebra out{InternalAlgebra{gx, bar, std::move(mult), std::move(unit)},
                         ComoduleAlgebra{gx, LinearMap(), SparseVector()}, {}};
  out.report.subject = "Γ(" + x.object.name + ")";
  out.report.merge(input, "input/");
  out.report.merge(check_internal(out.internal, opt), "internal/");
  out.algebra = functor_G(out.internal, Construction::unchecked);
  out.report.merge(check_comodule_algebra(out.algebra, opt), "algebra/");
  return out;
}

AlgebraData opposite_tensor_algebra(const AlgebraData& b) {
  std::size_t n = b.dim();
  Space s = tensor(b.space, b.space);
  AlgebraData out{s, LinearMap(tensor(s, s), s), kron(b.unit, b.unit, n), nullptr};
  for (std::size_t x = 0; x < n * n; ++x)
    for (std::size_t y = 0; y < n * n; ++y)
      out.mult.set_column(x * n * n + y,
                          kron(b.product(y / n, x / n), b.product(x % n, y % n), n));
  return out;
}

}  // namespace wbalg
