#include "wbalg/comodule.hpp"

namespace wbalg {

namespace {

Scalar eps_pair(const WeakBialgebra& h, std::size_t x, std::size_t y) {
  auto v = h.counit_of_product(x, y);
  if (!v) throw TruncationOverflow("ε(" + h.space().label(x) + "·" + h.space().label(y) + ") is out of truncation");
  return *v;
}

// ε(u·y) for a vector u and a basis element y, or ε(y·u) when !left.
Scalar eps_vec(const WeakBialgebra& h, const SparseVector& u, std::size_t y, bool left) {
  Scalar s = 0;
  for (const auto& e : u) s += e.value * (left ? eps_pair(h, e.index, y) : eps_pair(h, y, e.index));
  return s;
}

const SparseVector& product(const WeakBialgebra& h, std::size_t x, std::size_t y) {
  if (!h.algebra().product_defined(x, y))
    throw TruncationOverflow(h.space().label(x) + "·" + h.space().label(y) + " is out of truncation");
  return h.algebra().product(x, y);
}

void require_same_algebra(const Comodule& m, const Comodule& n) {
  if (m.algebra_ptr() != n.algebra_ptr())
    throw DimensionMismatch(m.name() + " and " + n.name() + " are comodules over different algebras");
}

// Δ(1) = Σ c e_i ⊗ e_j as (i, j, c).
std::vector<std::tuple<std::size_t, std::size_t, Scalar>> delta_one_terms(const WeakBialgebra& h) {
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> out;
  std::size_t n = h.dim();
  for (const auto& e : h.delta_one()) out.emplace_back(e.index / n, e.index % n, e.value);
  return out;
}

// h ↦ 1₁ ε(1₂ h), or the mirrored 1₂ ε(h 1₁) when literal.
SparseVector left_source_part(const WeakBialgebra& h, std::size_t y, bool literal) {
  VectorBuilder b;
  for (const auto& [i, j, c] : delta_one_terms(h)) {
    if (literal)
      b.add(j, c * eps_pair(h, y, i));
    else
      b.add(i, c * eps_pair(h, j, y));
  }
  return b.build();
}

SparseVector in_source(const WeakBialgebra& h, const SparseVector& v) {
  auto coords = solve_in_subspace(v, h.source());
  if (!coords) {
    CheckReport rep;
    rep.add(boolean_check("source-membership", false));
    throw InvalidStructure("element expected in H_s is not in H_s", rep);
  }
  return *coords;
}

struct StructureMaps {
  LinearMap left_action, right_action, left_coaction, right_coaction;
};

StructureMaps structure_maps(const Comodule& m) {
  const WeakBialgebra& h = m.algebra();
  const Subspace& hs = h.source();
  std::size_t n = h.dim(), dm = m.dim(), ds = hs.dim();
  Space sm = tensor(hs.coordinates, m.space());
  Space ms = tensor(m.space(), hs.coordinates);
  StructureMaps out{LinearMap(sm, m.space()), LinearMap(ms, m.space()), LinearMap(m.space(), sm),
                    LinearMap(m.space(), ms)};
  for (std::size_t s = 0; s < ds; ++s) {
    const SparseVector& x = hs.basis.column(s);
    for (std::size_t i = 0; i < dm; ++i) {
      VectorBuilder bl, br;
      for (const auto& e : m.coaction().column(i)) {
        std::size_t k = e.index / n, y = e.index % n;
        bl.add(k, e.value * eps_vec(h, x, y, true));
        br.add(k, e.value * eps_vec(h, x, y, false));
      }
      out.left_action.set_column(s * dm + i, bl.build());
      out.right_action.set_column(i * ds + s, br.build());
    }
  }
  std::vector<SparseVector> lam(n), rho(n);
  std::vector<char> have(n, 0);
  for (std::size_t i = 0; i < dm; ++i) {
    VectorBuilder bl, br;
    for (const auto& e : m.coaction().column(i)) {
      std::size_t k = e.index / n, y = e.index % n;
      if (!have[y]) {
        lam[y] = in_source(h, left_source_part(h, y, false));
        rho[y] = in_source(h, h.eps_s().column(y));
        have[y] = 1;
      }
      bl.add_kron(lam[y], SparseVector::unit(k), dm, e.value);
      br.add_kron(SparseVector::unit(k), rho[y], ds, e.value);
    }
    out.left_coaction.set_column(i, bl.build());
    out.right_coaction.set_column(i, br.build());
  }
  return out;
}

}  // namespace

Comodule::Comodule(std::string name, std::shared_ptr<const WeakBialgebra> h, Space space, LinearMap coaction)
    : name_(std::move(name)), h_(std::move(h)), space_(std::move(space)), coaction_(std::move(coaction)) {
  if (!h_) throw std::invalid_argument("comodule without an algebra");
  if (!(coaction_.domain() == space_) || !(coaction_.codomain() == tensor(space_, h_->space())))
    throw DimensionMismatch("coaction of " + name_ + " must map M → M⊗H");
}

Comodule Comodule::regular(std::shared_ptr<const WeakBialgebra> h) {
  Space s = h->space();
  LinearMap rho = h->comult();
  return Comodule(h->name(), h, std::move(s), std::move(rho));
}

Comodule Comodule::unit_object(std::shared_ptr<const WeakBialgebra> h) {
  const Subspace& hs = h->source();
  std::size_t n = h->dim();
  LinearMap rho(hs.coordinates, tensor(hs.coordinates, h->space()));
  for (std::size_t s = 0; s < hs.dim(); ++s) {
    SparseVector d = h->comult()(hs.basis.column(s));
    SparseVector c = apply_left(hs.projection, d, n);
    if (!(apply_left(hs.basis, c, n) == d)) {
      CheckReport rep;
      rep.add(boolean_check("source-right-coideal", false, hs.coordinates.label(s)));
      throw InvalidStructure("Δ(H_s) is not contained in H_s⊗H", rep);
    }
    rho.set_column(s, std::move(c));
  }
  return Comodule("H_s", h, hs.coordinates, std::move(rho));
}

CheckReport check_comodule(const Comodule& m, const CheckOptions& opt) {
  CheckReport rep;
  rep.subject = m.name();
  const WeakBialgebra& h = m.algebra();
  std::size_t n = h.dim();
  const LinearMap& rho = m.coaction();
  rep.add(run_check<SparseVector>(
      "coassoc", {m.space()}, tensor(m.space(), h.space(), h.space()),
      [&](std::span<const std::size_t> t) {
        const auto& r = rho.column(t[0]);
        return std::optional(std::pair(apply_left(rho, r, n), apply_right(h.comult(), r)));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "counit", {m.space()}, m.space(),
      [&](std::span<const std::size_t> t) {
        return std::optional(std::pair(apply_right(h.counit(), rho.column(t[0])), SparseVector::unit(t[0])));
      },
      opt));
  return rep;
}

CheckResult check_comodule_morphism(std::string name, const LinearMap& f, const Comodule& m, const Comodule& n,
                                    const CheckOptions& opt) {
  require_same_algebra(m, n);
  if (!(f.domain() == m.space()) || !(f.codomain() == n.space()))
    throw DimensionMismatch("morphism " + name + " must map " + m.name() + " → " + n.name());
  std::size_t dh = m.algebra().dim();
  return run_check<SparseVector>(
      std::move(name), {m.space()}, tensor(n.space(), m.algebra().space()),
      [&](std::span<const std::size_t> t) {
        return std::optional(
            std::pair(n.coaction()(f.column(t[0])), apply_left(f, m.coaction().column(t[0]), dh)));
      },
      opt);
}

LinearMap pair_coaction(const Comodule& m, const Comodule& n) {
  require_same_algebra(m, n);
  const WeakBialgebra& h = m.algebra();
  std::size_t dh = h.dim(), dn = n.dim();
  Space mn = tensor(m.space(), n.space());
  LinearMap out(mn, tensor(mn, h.space()));
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < dn; ++j) {
      VectorBuilder b;
      for (const auto& e : m.coaction().column(i)) {
        std::size_t k = e.index / dh, x = e.index % dh;
        for (const auto& f : n.coaction().column(j)) {
          std::size_t l = f.index / dh, y = f.index % dh;
          std::size_t base = (k * dn + l) * dh;
          for (const auto& p : product(h, x, y)) b.add(base + p.index, e.value * f.value * p.value);
        }
      }
      out.set_column(i * dn + j, b.build());
    }
  }
  return out;
}

BarProduct bar_product(const Comodule& m, const Comodule& n, const CheckOptions& opt) {
  require_same_algebra(m, n);
  const WeakBialgebra& h = m.algebra();
  std::size_t dh = h.dim(), dn = n.dim();
  Space mn = tensor(m.space(), n.space());
  LinearMap p(mn, mn);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < dn; ++j) {
      VectorBuilder b;
      for (const auto& e : m.coaction().column(i))
        for (const auto& f : n.coaction().column(j))
          b.add((e.index / dh) * dn + f.index / dh, e.value * f.value * eps_pair(h, e.index % dh, f.index % dh));
      p.set_column(i * dn + j, b.build());
    }
  }
  Subspace sub = image_basis(p, "bar");
  LinearMap iota = sub.basis;
  LinearMap eta = sub.projection * p;

  LinearMap pc = pair_coaction(m, n);
  LinearMap rho(sub.coordinates, tensor(sub.coordinates, h.space()));
  std::uint64_t outside = 0;
  for (std::size_t c = 0; c < sub.dim(); ++c) {
    SparseVector w = pc(iota.column(c));
    SparseVector coords = apply_left(sub.projection, w, dh);
    if (!(apply_left(iota, coords, dh) == w)) ++outside;
    rho.set_column(c, std::move(coords));
  }

  CheckReport rep;
  rep.subject = m.name() + "⊗̄" + n.name();
  rep.add(map_equality_check("projector-idempotent", p * p, p));
  rep.add(map_equality_check("eta-iota-identity", eta * iota, LinearMap::identity(sub.coordinates)));
  rep.add(boolean_check("coaction-lands-in-bar", outside == 0,
                        outside ? std::to_string(outside) + " basis vectors leave the image" : std::string{}));

  Comodule prod("(" + m.name() + "⊗̄" + n.name() + ")", m.algebra_ptr(), sub.coordinates, std::move(rho));
  rep.merge(check_comodule(prod, opt), "bar/");

  // Cotensor over H_s: ker(ρˢ⊗Id − Id⊗λˢ).
  StructureMaps sm = structure_maps(m), sn = structure_maps(n);
  std::size_t ds = h.source().dim();
  LinearMap diff(mn, tensor(m.space(), h.source().coordinates, n.space()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < dn; ++j) {
      SparseVector a = kron(sm.right_coaction.column(i), SparseVector::unit(j), dn);
      SparseVector b = kron(SparseVector::unit(i), sn.left_coaction.column(j), ds * dn);
      diff.set_column(i * dn + j, a - b);
    }
  rep.add(boolean_check("equals-hs-cotensor", same_span(kernel_basis(diff).basis, iota)));
  rep.add_fact("dim", std::to_string(sub.dim()));

  return BarProduct{m, n, std::move(p), std::move(sub), std::move(iota), std::move(eta), std::move(prod),
                    std::move(rep)};
}

LinearMap bar_map(const LinearMap& f, const LinearMap& g, const BarProduct& source, const BarProduct& target,
                  Construction mode) {
  if (mode == Construction::checked) {
    auto rf = check_comodule_morphism("f", f, source.left, target.left);
    if (rf.status != Status::pass) throw NotAComoduleMorphism("f is not a comodule morphism", rf);
    auto rg = check_comodule_morphism("g", g, source.right, target.right);
    if (rg.status != Status::pass) throw NotAComoduleMorphism("g is not a comodule morphism", rg);
  }
  LinearMap out = target.projection * kron(f, g) * source.inclusion;
  if (mode == Construction::checked) {
    CheckReport rep;
    rep.add(check_comodule_morphism("bar-map-morphism", out, source.product, target.product));
    if (!rep.passed()) throw InvalidStructure("f⊗̄g is not a comodule morphism", rep);
  }
  return out;
}

HsBistructure hs_bistructure(const Comodule& m, const CheckOptions& opt) {
  const WeakBialgebra& h = m.algebra();
  const Subspace& hs = h.source();
  StructureMaps sm = structure_maps(m);
  const CoalgebraData& cs = h.source_coalgebra();
  std::size_t dm = m.dim(), ds = hs.dim(), dh = h.dim();
  const Space& S = hs.coordinates;
  const Space& M = m.space();
  LinearMap mu = structure_on(h.algebra(), hs.basis, hs.projection);
  SparseVector unit = hs.projection(h.one());
  const LinearMap& al = sm.left_action;
  const LinearMap& ar = sm.right_action;
  const LinearMap& lam = sm.left_coaction;
  const LinearMap& rho = sm.right_coaction;

  CheckReport rep;
  rep.subject = m.name() + " over H_s";
  auto u = [](std::size_t i) { return SparseVector::unit(i); };
  rep.add(run_check<SparseVector>(
      "left-action-assoc", {S, S, M}, M,
      [&](std::span<const std::size_t> t) {
        SparseVector lhs = al(kron(mu.column(t[0] * ds + t[1]), u(t[2]), dm));
        SparseVector rhs = al(kron(u(t[0]), al.column(t[1] * dm + t[2]), dm));
        return std::optional(std::pair(lhs, rhs));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "left-action-unit", {M}, M,
      [&](std::span<const std::size_t> t) { return std::optional(std::pair(al(kron(unit, u(t[0]), dm)), u(t[0]))); },
      opt));
  rep.add(run_check<SparseVector>(
      "right-action-assoc", {M, S, S}, M,
      [&](std::span<const std::size_t> t) {
        SparseVector lhs = ar(kron(u(t[0]), mu.column(t[1] * ds + t[2]), ds));
        SparseVector rhs = ar(kron(ar.column(t[0] * ds + t[1]), u(t[2]), ds));
        return std::optional(std::pair(lhs, rhs));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "right-action-unit", {M}, M,
      [&](std::span<const std::size_t> t) { return std::optional(std::pair(ar(kron(u(t[0]), unit, ds)), u(t[0]))); },
      opt));
  rep.add(run_check<SparseVector>(
      "bimodule-middle", {S, M, S}, M,
      [&](std::span<const std::size_t> t) {
        SparseVector lhs = ar(kron(al.column(t[0] * dm + t[1]), u(t[2]), ds));
        SparseVector rhs = al(kron(u(t[0]), ar.column(t[1] * ds + t[2]), dm));
        return std::optional(std::pair(lhs, rhs));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "left-coaction-coassoc", {M}, tensor(S, S, M),
      [&](std::span<const std::size_t> t) {
        const auto& l = lam.column(t[0]);
        return std::optional(std::pair(apply_left(cs.comult, l, dm), apply_right(lam, l)));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "left-coaction-counit", {M}, M,
      [&](std::span<const std::size_t> t) {
        return std::optional(std::pair(apply_left(cs.counit, lam.column(t[0]), dm), u(t[0])));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "right-coaction-coassoc", {M}, tensor(M, S, S),
      [&](std::span<const std::size_t> t) {
        const auto& r = rho.column(t[0]);
        return std::optional(std::pair(apply_left(rho, r, ds), apply_right(cs.comult, r)));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "right-coaction-counit", {M}, M,
      [&](std::span<const std::size_t> t) {
        return std::optional(std::pair(apply_right(cs.counit, rho.column(t[0])), u(t[0])));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "bicomodule-compat", {M}, tensor(S, M, S),
      [&](std::span<const std::size_t> t) {
        return std::optional(std::pair(apply_left(lam, rho.column(t[0]), ds), apply_right(rho, lam.column(t[0]))));
      },
      opt));
  // ρ(x▷m) = m_[0]⊗x m_[1] and ρ(m◁x) = m_[0]⊗m_[1] x.
  auto twisted = [&](std::size_t s, std::size_t i, bool left) {
    VectorBuilder b;
    const SparseVector& x = hs.basis.column(s);
    for (const auto& e : m.coaction().column(i)) {
      SparseVector y = SparseVector::unit(e.index % dh);
      SparseVector p = left ? h.multiply(x, y) : h.multiply(y, x);
      b.add_kron(u(e.index / dh), p, dh, e.value);
    }
    return b.build();
  };
  rep.add(run_check<SparseVector>(
      "left-action-colinear", {S, M}, tensor(M, h.space()),
      [&](std::span<const std::size_t> t) {
        return std::optional(std::pair(m.coaction()(al.column(t[0] * dm + t[1])), twisted(t[0], t[1], true)));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "right-action-colinear", {M, S}, tensor(M, h.space()),
      [&](std::span<const std::size_t> t) {
        return std::optional(std::pair(m.coaction()(ar.column(t[0] * ds + t[1])), twisted(t[1], t[0], false)));
      },
      opt));

  // The mirrored formula ε(m_[1]1₁)1₂⊗m_[0] generally leaves H_s⊗M.
  for (std::size_t i = 0; i < dm; ++i) {
    VectorBuilder b;
    for (const auto& e : m.coaction().column(i))
      b.add_kron(left_source_part(h, e.index % dh, true), u(e.index / dh), dm, e.value);
    SparseVector literal = b.build();
    SparseVector corrected = apply_left(hs.basis, lam.column(i), dm);
    if (!(literal == corrected)) {
      Space hm = tensor(h.space(), M);
      rep.discrepancies.push_back(
          {"literal-left-coaction",
           "ε(m_[1]1₁)1₂⊗m_[0] differs from ε(1₂m_[1])1₁⊗m_[0] and lies outside H_s⊗M in general",
           Witness{{i}, {M.label(i)}, Tensor::from_vector(hm, literal), Tensor::from_vector(hm, corrected)}});
      break;
    }
  }

  return HsBistructure{std::move(sm.left_action), std::move(sm.right_action), std::move(sm.left_coaction),
                       std::move(sm.right_coaction), std::move(rep)};
}

HsBistructure hs_structure_maps(const Comodule& m) {
  StructureMaps sm = structure_maps(m);
  return HsBistructure{std::move(sm.left_action), std::move(sm.right_action), std::move(sm.left_coaction),
                       std::move(sm.right_coaction), {}};
}

UnitIsomorphisms unit_isomorphisms(const Comodule& m, const CheckOptions& opt) {
  Comodule hs = Comodule::unit_object(m.algebra_ptr());
  BarProduct lb = bar_product(hs, m, opt);
  BarProduct rb = bar_product(m, hs, opt);
  StructureMaps sm = structure_maps(m);
  LinearMap l = sm.left_action * lb.inclusion;
  LinearMap r = sm.right_action * rb.inclusion;
  LinearMap l_inv = lb.subspace.projection * sm.left_coaction;
  LinearMap r_inv = rb.subspace.projection * sm.right_coaction;

  CheckReport rep;
  rep.subject = m.name();
  rep.add(map_equality_check("l-inverse-in-bar", lb.inclusion * l_inv, sm.left_coaction));
  rep.add(map_equality_check("r-inverse-in-bar", rb.inclusion * r_inv, sm.right_coaction));
  rep.add(map_equality_check("l-right-inverse", l * l_inv, LinearMap::identity(m.space())));
  rep.add(map_equality_check("l-left-inverse", l_inv * l, LinearMap::identity(lb.product.space())));
  rep.add(map_equality_check("r-right-inverse", r * r_inv, LinearMap::identity(m.space())));
  rep.add(map_equality_check("r-left-inverse", r_inv * r, LinearMap::identity(rb.product.space())));
  rep.add(check_comodule_morphism("l-colinear", l, lb.product, m, opt));
  rep.add(check_comodule_morphism("r-colinear", r, rb.product, m, opt));
  rep.add(check_comodule_morphism("l-inverse-colinear", l_inv, m, lb.product, opt));
  rep.add(check_comodule_morphism("r-inverse-colinear", r_inv, m, rb.product, opt));
  return UnitIsomorphisms{std::move(lb), std::move(rb), std::move(l), std::move(l_inv), std::move(r),
                          std::move(r_inv), std::move(rep)};
}

BarTriple bar_triple(const Comodule& x, const Comodule& y, const Comodule& z, const CheckOptions& opt) {
  BarProduct xy = bar_product(x, y, opt);
  BarProduct yz = bar_product(y, z, opt);
  BarProduct xy_z = bar_product(xy.product, z, opt);
  BarProduct x_yz = bar_product(x, yz.product, opt);
  LinearMap el = kron(xy.inclusion, LinearMap::identity(z.space())) * xy_z.inclusion;
  LinearMap er = kron(LinearMap::identity(x.space()), yz.inclusion) * x_yz.inclusion;

  CheckReport rep;
  rep.subject = x.name() + "⊗̄" + y.name() + "⊗̄" + z.name();
  bool same = same_span(el, er);
  rep.add(boolean_check("parenthesizations-agree", same));
  LinearMap assoc = left_inverse(er) * el;
  LinearMap assoc_inv = left_inverse(el) * er;
  rep.add(map_equality_check("assoc-transports-embedding", er * assoc, el));
  rep.add(map_equality_check("assoc-inverse-left", assoc_inv * assoc, LinearMap::identity(xy_z.product.space())));
  rep.add(map_equality_check("assoc-inverse-right", assoc * assoc_inv, LinearMap::identity(x_yz.product.space())));
  rep.add(check_comodule_morphism("assoc-colinear", assoc, xy_z.product, x_yz.product, opt));
  return BarTriple{std::move(xy), std::move(yz), std::move(xy_z), std::move(x_yz), std::move(el), std::move(er),
                   std::move(assoc), std::move(assoc_inv), std::move(rep)};
}

ForgetfulStructure forgetful_structure(const Comodule& m, const Comodule& n, const CheckOptions& opt) {
  const WeakBialgebra& h = m.algebra();
  const Subspace& hs = h.source();
  BarProduct mn = bar_product(m, n, opt);
  LinearMap u0 = LinearMap::vector(hs.coordinates, hs.projection(h.one()));
  LinearMap c0 = h.counit() * hs.basis;

  CheckReport rep;
  rep.subject = m.name() + ", " + n.name();
  rep.add(map_equality_check("monoidal-comonoidal-separable", mn.projection * mn.inclusion,
                             LinearMap::identity(mn.product.space())));
  rep.add_fact("counit-of-unit", to_string(c0.evaluate(u0.column(0))));

  // Unit and counit compatibilities through l and r.
  for (const Comodule* c : {&m, &n}) {
    UnitIsomorphisms ui = unit_isomorphisms(*c, opt);
    LinearMap id = LinearMap::identity(c->space());
    std::string tag = c == &m ? "M" : "N";
    rep.add(map_equality_check("unit-left/" + tag, ui.l * ui.left_bar.projection * kron(u0, id), id));
    rep.add(map_equality_check("unit-right/" + tag, ui.r * ui.right_bar.projection * kron(id, u0), id));
    rep.add(map_equality_check("counit-left/" + tag, kron(c0, id) * ui.left_bar.inclusion * ui.l_inv, id));
    rep.add(map_equality_check("counit-right/" + tag, kron(id, c0) * ui.right_bar.inclusion * ui.r_inv, id));
    if (&m == &n) break;
  }

  BarTriple t = bar_triple(m, n, m, opt);
  rep.merge(t.report, "triple/");
  LinearMap id_m = LinearMap::identity(m.space());
  LinearMap frob1_lhs = kron(t.xy.projection, id_m) * kron(id_m, t.yz.inclusion);
  LinearMap frob1_rhs = t.xy_z.inclusion * t.assoc_inv * t.x_yz.projection;
  rep.add(map_equality_check("frobenius-left", frob1_lhs, frob1_rhs));
  LinearMap frob2_lhs = kron(id_m, t.yz.projection) * kron(t.xy.inclusion, id_m);
  LinearMap frob2_rhs = t.x_yz.inclusion * t.assoc * t.xy_z.projection;
  rep.add(map_equality_check("frobenius-right", frob2_lhs, frob2_rhs));
  LinearMap mono_lhs = t.xy_z.projection * kron(t.xy.projection, id_m);
  LinearMap mono_rhs = t.assoc_inv * t.x_yz.projection * kron(id_m, t.yz.projection);
  rep.add(map_equality_check("monoidal-assoc", mono_lhs, mono_rhs));

  return ForgetfulStructure{std::move(mn.projection), std::move(mn.inclusion), std::move(u0), std::move(c0),
                            std::move(rep)};
}

}  // namespace wbalg
