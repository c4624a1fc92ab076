#include "wbalg/weak_bialgebra.hpp"

#include <tuple>

namespace wbalg {

namespace {

using Sides = std::pair<SparseVector, SparseVector>;

struct Split {
  std::size_t left, right;
  Scalar value;
};

// Δ(x) as (left, right, coefficient) triples for every basis x.
std::vector<std::vector<Split>> split_table(const WeakBialgebra& h) {
  std::size_t n = h.dim();
  std::vector<std::vector<Split>> out(n);
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& e : h.comult().column(x)) out[x].push_back({e.index / n, e.index % n, e.value});
  return out;
}

std::vector<Split> split_vector(const SparseVector& v, std::size_t n) {
  std::vector<Split> out;
  for (const auto& e : v) out.push_back({e.index / n, e.index % n, e.value});
  return out;
}

}  // namespace

WeakBialgebra::WeakBialgebra(std::string name, AlgebraData alg, CoalgebraData coalg, Construction mode)
    : name_(std::move(name)), alg_(std::move(alg)), coalg_(std::move(coalg)) {
  validate(alg_);
  validate(coalg_);
  if (!(alg_.space == coalg_.space)) throw DimensionMismatch("algebra and coalgebra live on different spaces");
  if (mode == Construction::checked) {
    CheckReport rep = check_algebra(alg_);
    rep.merge(check_coalgebra(coalg_));
    if (!rep.passed()) throw InvalidStructure(name_ + " fails the algebra or coalgebra axioms", rep);
  }

  std::size_t n = dim();
  counit_.resize(n);
  for (std::size_t x = 0; x < n; ++x) counit_[x] = coalg_.counit.column(x).coefficient(0);
  eps_product_.assign(n * n, Scalar(0));
  eps_known_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!alg_.product_defined(x, y)) continue;
      eps_known_[x * n + y] = 1;
      Scalar s = 0;
      for (const auto& e : alg_.mult.column(x * n + y)) s += e.value * counit_[e.index];
      eps_product_[x * n + y] = s;
    }

  delta_one_ = coalg_.comult(alg_.unit);
  delta2_one_ = apply_left(coalg_.comult, delta_one_, n);
  auto d1 = split_vector(delta_one_, n);

  auto eps_of = [&](std::size_t x, std::size_t y) -> const Scalar& {
    if (!eps_known_[x * n + y])
      throw TruncationOverflow("counit of " + space().label(x) + " · " + space().label(y) + " is outside the truncation");
    return eps_product_[x * n + y];
  };
  eps_s_ = LinearMap(space(), space());
  eps_t_ = LinearMap(space(), space());
  for (std::size_t x = 0; x < n; ++x) {
    VectorBuilder s, t;
    for (const auto& [i, j, c] : d1) {
      s.add(i, c * eps_of(x, j));
      t.add(j, c * eps_of(i, x));
    }
    eps_s_.set_column(x, s.build());
    eps_t_.set_column(x, t.build());
  }
  hs_ = image_basis(eps_s_, "s");
  ht_ = image_basis(eps_t_, "t");

  auto build_coalgebra = [&](const Subspace& sub, bool source, const char* check_name) {
    Subspace sq = tensor(sub, sub);
    LinearMap comult(sub.coordinates, sq.coordinates);
    bool closed = true;
    std::optional<Witness> bad;
    for (std::size_t k = 0; k < sub.dim(); ++k) {
      const SparseVector& y = sub.basis.column(k);
      VectorBuilder b;
      for (const auto& [i, j, c] : d1) {
        if (source) {
          // 1₁ ⊗ ε_s(y 1₂)
          b.add_kron(SparseVector::unit(i), eps_s_(multiply(y, SparseVector::unit(j))), n, c);
        } else {
          // ε_t(1₁ y) ⊗ 1₂
          b.add_kron(eps_t_(multiply(SparseVector::unit(i), y)), SparseVector::unit(j), n, c);
        }
      }
      SparseVector v = b.build();
      auto coords = solve_in_subspace(v, sq);
      if (!coords) {
        if (closed) bad = Witness{{k}, {sub.coordinates.label(k)}, Tensor::from_vector(sq.ambient, v),
                                  Tensor::from_vector(sq.ambient, sq.basis(sq.projection(v)))};
        closed = false;
        continue;
      }
      comult.set_column(k, std::move(*coords));
    }
    CheckResult r = boolean_check(check_name, closed);
    r.witness = std::move(bad);
    construction_.add(std::move(r));
    return CoalgebraData{sub.coordinates, std::move(comult), coalg_.counit * sub.basis};
  };
  hs_coalg_ = build_coalgebra(hs_, true, "hs-coproduct-closed");
  ht_coalg_ = build_coalgebra(ht_, false, "ht-coproduct-closed");
}

std::optional<Scalar> WeakBialgebra::counit_of_product(std::size_t x, std::size_t y) const {
  std::size_t n = dim();
  if (!eps_known_[x * n + y]) return std::nullopt;
  return eps_product_[x * n + y];
}

Scalar WeakBialgebra::counit_of(const SparseVector& v) const {
  Scalar s = 0;
  for (const auto& e : v) s += e.value * counit_[e.index];
  return s;
}

bool is_bialgebra(const WeakBialgebra& h) {
  return h.delta_one() == kron(h.one(), h.one(), h.dim());
}

CheckReport check_weak_bialgebra(const WeakBialgebra& h, const CheckOptions& opt) {
  CheckReport rep;
  rep.subject = h.name();
  rep.merge(check_algebra(h.algebra(), opt));
  rep.merge(check_coalgebra(h.coalgebra(), opt));

  const std::size_t n = h.dim();
  const Space& H = h.space();
  const Space HH = tensor(H, H);
  const Space HHH = tensor(HH, H);
  const auto& A = h.algebra();
  const auto* trunc = A.truncation.get();
  auto splits = split_table(h);
  auto d1 = split_vector(h.delta_one(), n);

  rep.add(run_check<SparseVector>(
      "delta-multiplicative", {H, H}, HH,
      [&](std::span<const std::size_t> t) -> std::optional<Sides> {
        if (!A.product_defined(t[0], t[1])) return std::nullopt;
        auto rhs = try_multiply_tensor(A, h.comult().column(t[0]), h.comult().column(t[1]), 2);
        if (!rhs) return std::nullopt;
        return Sides(h.comult()(A.mult.column(t[0] * n + t[1])), std::move(*rhs));
      },
      opt));

  // ε(abc) against ε(a b₁)ε(b₂ c) and ε(a b₂)ε(b₁ c).
  std::vector<Scalar> E(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (auto v = h.counit_of_product(x, y)) E[x * n + y] = *v;
  auto weak_mult = [&](bool left) {
    return [&, left](std::span<const std::size_t> t) -> std::optional<std::pair<Scalar, Scalar>> {
      std::size_t a = t[0], b = t[1], c = t[2];
      if (trunc && !trunc->fits(t)) return std::nullopt;
      Scalar lhs = 0, rhs = 0;
      for (const auto& e : A.mult.column(a * n + b)) {
        const Scalar& v = E[e.index * n + c];
        if (sgn(v) != 0) lhs += e.value * v;
      }
      for (const auto& s : splits[b]) {
        const Scalar& x = E[a * n + (left ? s.left : s.right)];
        if (sgn(x) == 0) continue;
        const Scalar& y = E[(left ? s.right : s.left) * n + c];
        if (sgn(y) == 0) continue;
        rhs += s.value * x * y;
      }
      return std::pair(std::move(lhs), std::move(rhs));
    };
  };
  rep.add(run_check<Scalar>("counit-weak-mult-left", {H, H, H}, Space::ground(), weak_mult(true), opt));
  rep.add(run_check<Scalar>("counit-weak-mult-right", {H, H, H}, Space::ground(), weak_mult(false), opt));

  {
    SparseVector one = h.one();
    SparseVector d1_1 = kron(h.delta_one(), one, n);
    SparseVector one_d1 = kron(one, h.delta_one(), n * n);
    auto left = try_multiply_tensor(A, d1_1, one_d1, 3);
    auto right = try_multiply_tensor(A, one_d1, d1_1, 3);
    rep.add(left ? equality_check("unit-weak-comult-left", HHH, h.delta2_one(), *left)
                 : skipped_check("unit-weak-comult-left"));
    rep.add(right ? equality_check("unit-weak-comult-right", HHH, h.delta2_one(), *right)
                  : skipped_check("unit-weak-comult-right"));
  }

  rep.add(map_equality_check("eps-s-idempotent", h.eps_s() * h.eps_s(), h.eps_s()));
  rep.add(map_equality_check("eps-t-idempotent", h.eps_t() * h.eps_t(), h.eps_t()));

  rep.add(run_check<SparseVector>(
      "element-recovery-source", {H}, H,
      [&](std::span<const std::size_t> t) -> std::optional<Sides> {
        VectorBuilder b;
        for (const auto& s : splits[t[0]]) {
          auto p = h.try_multiply(SparseVector::unit(s.left), h.eps_s().column(s.right));
          if (!p) return std::nullopt;
          b.add(*p, s.value);
        }
        return Sides(b.build(), SparseVector::unit(t[0]));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "element-recovery-target", {H}, H,
      [&](std::span<const std::size_t> t) -> std::optional<Sides> {
        VectorBuilder b;
        for (const auto& s : splits[t[0]]) {
          auto p = h.try_multiply(h.eps_t().column(s.left), SparseVector::unit(s.right));
          if (!p) return std::nullopt;
          b.add(*p, s.value);
        }
        return Sides(b.build(), SparseVector::unit(t[0]));
      },
      opt));

  {
    Subspace st = tensor(h.source(), h.target());
    bool inside = solve_in_subspace(h.delta_one(), st).has_value();
    rep.add(boolean_check("delta-one-in-Hs-Ht", inside));
    VectorBuilder a, b;
    for (const auto& [i, j, c] : d1) {
      a.add_kron(SparseVector::unit(i), h.eps_t().column(j), n, c);
      b.add_kron(h.eps_s().column(i), SparseVector::unit(j), n, c);
    }
    rep.add(equality_check("delta-one-target-form", HH, h.delta_one(), a.build()));
    rep.add(equality_check("delta-one-source-form", HH, h.delta_one(), b.build()));
  }

  const Subspace& hs = h.source();
  const Subspace& ht = h.target();
  rep.add(run_check<SparseVector>(
      "hs-membership", {hs.coordinates}, HH,
      [&](std::span<const std::size_t> t) {
        const SparseVector& y = hs.basis.column(t[0]);
        VectorBuilder b;
        for (const auto& [i, j, c] : d1) b.add_kron(SparseVector::unit(i), h.multiply(y, SparseVector::unit(j)), n, c);
        return std::optional(Sides(h.comult()(y), b.build()));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "ht-membership", {ht.coordinates}, HH,
      [&](std::span<const std::size_t> t) {
        const SparseVector& z = ht.basis.column(t[0]);
        VectorBuilder b;
        for (const auto& [i, j, c] : d1) b.add_kron(h.multiply(SparseVector::unit(i), z), SparseVector::unit(j), n, c);
        return std::optional(Sides(h.comult()(z), b.build()));
      },
      opt));

  // Coideal subalgebras: products stay in Hs and Δ(Hs) ⊆ Hs⊗H, as the
  // membership criterion forces; dually Δ(Ht) ⊆ H⊗Ht.
  auto closure = [&](const char* name, const Subspace& sub, bool source_side) {
    bool ok = solve_in_subspace(h.one(), sub).has_value();
    for (std::size_t i = 0; ok && i < sub.dim(); ++i) {
      for (std::size_t j = 0; ok && j < sub.dim(); ++j)
        ok = solve_in_subspace(h.multiply(sub.basis.column(i), sub.basis.column(j)), sub).has_value();
      Subspace side = source_side ? tensor(sub, whole_space(H)) : tensor(whole_space(H), sub);
      if (ok) ok = solve_in_subspace(h.comult()(sub.basis.column(i)), side).has_value();
    }
    rep.add(boolean_check(name, ok));
  };
  closure("hs-coideal-subalgebra", hs, true);
  closure("ht-coideal-subalgebra", ht, false);

  rep.add(run_check<SparseVector>(
      "hs-ht-commute", {hs.coordinates, ht.coordinates}, H,
      [&](std::span<const std::size_t> t) {
        const SparseVector& y = hs.basis.column(t[0]);
        const SparseVector& z = ht.basis.column(t[1]);
        return std::optional(Sides(h.multiply(y, z), h.multiply(z, y)));
      },
      opt));

  for (const auto& c : h.construction_report().checks) rep.add(c);
  rep.merge(check_coalgebra(h.source_coalgebra(), opt), "hs-coalgebra/");
  rep.merge(check_coalgebra(h.target_coalgebra(), opt), "ht-coalgebra/");
  // Second expressions of Δ_s, Δ_t: y₁ ⊗ ε_s(y₂) and ε_t(z₁) ⊗ z₂.
  rep.add(run_check<SparseVector>(
      "hs-coproduct-second-form", {hs.coordinates}, HH,
      [&](std::span<const std::size_t> t) {
        const SparseVector& y = hs.basis.column(t[0]);
        SparseVector first = kron(hs.basis, hs.basis)(h.source_coalgebra().comult.column(t[0]));
        SparseVector second = apply_right(h.eps_s(), h.comult()(y));
        return std::optional(Sides(first, second));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "ht-coproduct-second-form", {ht.coordinates}, HH,
      [&](std::span<const std::size_t> t) {
        const SparseVector& z = ht.basis.column(t[0]);
        SparseVector first = kron(ht.basis, ht.basis)(h.target_coalgebra().comult.column(t[0]));
        SparseVector second = apply_left(h.eps_t(), h.comult()(z), n);
        return std::optional(Sides(first, second));
      },
      opt));

  // Bialgebra criteria: Δ(1) = 1⊗1 and ε multiplicative must agree.
  bool trivial_delta_one = is_bialgebra(h);
  bool eps_mult = true;
  for (std::size_t x = 0; x < n && eps_mult; ++x)
    for (std::size_t y = 0; y < n && eps_mult; ++y)
      if (auto v = h.counit_of_product(x, y)) eps_mult = *v == h.counit_value(x) * h.counit_value(y);
  rep.add_fact("is-bialgebra", trivial_delta_one ? "true" : "false");
  rep.add_fact("counit-multiplicative", eps_mult ? "true" : "false");
  rep.add_fact("dim", std::to_string(n));
  rep.add_fact("dim-Hs", std::to_string(hs.dim()));
  rep.add_fact("dim-Ht", std::to_string(ht.dim()));
  rep.add(boolean_check("bialgebra-criteria-agree", trivial_delta_one == eps_mult));
  return rep;
}

CheckReport check_weak_hopf(const WeakHopfAlgebra& hopf, const CheckOptions& opt) {
  const WeakBialgebra& h = *hopf.wba;
  CheckReport rep = check_weak_bialgebra(h, opt);
  const std::size_t n = h.dim();
  const Space& H = h.space();
  const LinearMap& S = hopf.antipode;
  if (!(S.domain() == H) || !(S.codomain() == H)) throw DimensionMismatch("antipode must map H to H");
  auto splits = split_table(h);

  rep.add(run_check<SparseVector>(
      "antipode-i", {H}, H,
      [&](std::span<const std::size_t> t) -> std::optional<Sides> {
        VectorBuilder b;
        for (const auto& s : splits[t[0]]) {
          auto p = h.try_multiply(S.column(s.left), SparseVector::unit(s.right));
          if (!p) return std::nullopt;
          b.add(*p, s.value);
        }
        return Sides(b.build(), h.eps_s().column(t[0]));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "antipode-ii", {H}, H,
      [&](std::span<const std::size_t> t) -> std::optional<Sides> {
        VectorBuilder b;
        for (const auto& s : splits[t[0]]) {
          auto p = h.try_multiply(SparseVector::unit(s.left), S.column(s.right));
          if (!p) return std::nullopt;
          b.add(*p, s.value);
        }
        return Sides(b.build(), h.eps_t().column(t[0]));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "antipode-iii", {H}, H,
      [&](std::span<const std::size_t> t) -> std::optional<Sides> {
        SparseVector d2 = apply_left(h.comult(), h.comult().column(t[0]), n);
        VectorBuilder b;
        for (const auto& e : d2) {
          std::size_t i = e.index / (n * n), j = (e.index / n) % n, k = e.index % n;
          auto p = h.try_multiply(S.column(i), SparseVector::unit(j));
          if (!p) return std::nullopt;
          auto q = h.try_multiply(*p, S.column(k));
          if (!q) return std::nullopt;
          b.add(*q, e.value);
        }
        return Sides(b.build(), S.column(t[0]));
      },
      opt));
  if (hopf.antipode_inverse) {
    const LinearMap& Si = *hopf.antipode_inverse;
    rep.add(map_equality_check("antipode-inverse-left", S * Si, LinearMap::identity(H)));
    rep.add(map_equality_check("antipode-inverse-right", Si * S, LinearMap::identity(H)));
  }

  // Hopf criteria: S(x₁)x₂ = ε(x)1 and x₁S(x₂) = ε(x)1 for all x.
  bool left = true, right = true;
  for (std::size_t x = 0; x < n; ++x) {
    SparseVector target = h.counit_value(x) * h.one();
    VectorBuilder l, r;
    bool ok = true;
    for (const auto& s : splits[x]) {
      auto p = h.try_multiply(S.column(s.left), SparseVector::unit(s.right));
      auto q = h.try_multiply(SparseVector::unit(s.left), S.column(s.right));
      if (!p || !q) {
        ok = false;
        break;
      }
      l.add(*p, s.value);
      r.add(*q, s.value);
    }
    if (!ok) continue;
    left = left && l.build() == target;
    right = right && r.build() == target;
  }
  bool bialg = is_bialgebra(h);
  rep.add_fact("is-hopf", bialg ? "true" : "false");
  rep.add_fact("hopf-antipode-left", left ? "true" : "false");
  rep.add_fact("hopf-antipode-right", right ? "true" : "false");
  bool eps_mult = false;
  for (const auto& [k, v] : rep.facts)
    if (k == "counit-multiplicative") eps_mult = v == "true";
  rep.add(boolean_check("hopf-criteria-agree", bialg == eps_mult && bialg == left && bialg == right));
  return rep;
}

}  // namespace wbalg
