#pragma once

#include <memory>
#include <string>

#include "wbalg/weak_bialgebra.hpp"

namespace wbalg {

class NotAComoduleMorphism : public Error {
 public:
  NotAComoduleMorphism(const std::string& what, CheckResult failure)
      : Error("NotAComoduleMorphism", what), failure_(std::move(failure)) {}
  const CheckResult& failure() const noexcept { return failure_; }

 private:
  CheckResult failure_;
};

// A right comodule: ρ: M → M⊗H.
class Comodule {
 public:
  Comodule(std::string name, std::shared_ptr<const WeakBialgebra> h, Space space, LinearMap coaction);

  // H with ρ = Δ.
  static Comodule regular(std::shared_ptr<const WeakBialgebra> h);
  // H_s (in its coordinates) with ρ = Δ restricted; the unit object.
  static Comodule unit_object(std::shared_ptr<const WeakBialgebra> h);

  const std::string& name() const noexcept { return name_; }
  const Space& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  const LinearMap& coaction() const noexcept { return coaction_; }
  const WeakBialgebra& algebra() const noexcept { return *h_; }
  const std::shared_ptr<const WeakBialgebra>& algebra_ptr() const noexcept { return h_; }

 private:
  std::string name_;
  std::shared_ptr<const WeakBialgebra> h_;
  Space space_;
  LinearMap coaction_;
};

CheckReport check_comodule(const Comodule& m, const CheckOptions& opt = {});
// ρ_N ∘ f = (f⊗Id) ∘ ρ_M on every basis element of M.
CheckResult check_comodule_morphism(std::string name, const LinearMap& f, const Comodule& m, const Comodule& n,
                                    const CheckOptions& opt = {});

// m⊗n ↦ m_[0]⊗n_[0]⊗m_[1]n_[1], as a map M⊗N → M⊗N⊗H.
LinearMap pair_coaction(const Comodule& m, const Comodule& n);

struct BarProduct {
  Comodule left;
  Comodule right;
  LinearMap projector;   // P on M⊗N
  Subspace subspace;     // image of P
  LinearMap inclusion;   // ι: bar coordinates → M⊗N
  LinearMap projection;  // η: M⊗N → bar coordinates
  Comodule product;      // M⊗̄N on bar coordinates
  CheckReport report;
};

BarProduct bar_product(const Comodule& m, const Comodule& n, const CheckOptions& opt = {});

// η'∘(f⊗g)∘ι. Checked mode throws NotAComoduleMorphism when f or g is not a
// comodule morphism, and InvalidStructure if the result is not one.
LinearMap bar_map(const LinearMap& f, const LinearMap& g, const BarProduct& source, const BarProduct& target,
                  Construction mode = Construction::checked);

// The four structure maps of M over the unit object H_s.
struct HsBistructure {
  LinearMap left_action;     // H_s⊗M → M, x ▷ m = ε(x m_[1]) m_[0]
  LinearMap right_action;    // M⊗H_s → M, m ◁ x = ε(m_[1] x) m_[0]
  LinearMap left_coaction;   // M → H_s⊗M, m ↦ ε(1₂ m_[1]) 1₁ ⊗ m_[0]
  LinearMap right_coaction;  // M → M⊗H_s, m ↦ m_[0] ⊗ 1₁ ε(m_[1] 1₂)
  CheckReport report;
};

HsBistructure hs_bistructure(const Comodule& m, const CheckOptions& opt = {});
// The four maps only, with an empty report.
HsBistructure hs_structure_maps(const Comodule& m);

struct UnitIsomorphisms {
  BarProduct left_bar;   // H_s ⊗̄ M
  BarProduct right_bar;  // M ⊗̄ H_s
  LinearMap l, l_inv, r, r_inv;
  CheckReport report;
};

UnitIsomorphisms unit_isomorphisms(const Comodule& m, const CheckOptions& opt = {});

// Both parenthesizations of a triple bar product, with the associator between them.
struct BarTriple {
  BarProduct xy, yz, xy_z, x_yz;
  LinearMap embed_left;   // (X⊗̄Y)⊗̄Z → X⊗Y⊗Z
  LinearMap embed_right;  // X⊗̄(Y⊗̄Z) → X⊗Y⊗Z
  LinearMap assoc;        // (X⊗̄Y)⊗̄Z → X⊗̄(Y⊗̄Z)
  LinearMap assoc_inv;
  CheckReport report;
};

BarTriple bar_triple(const Comodule& x, const Comodule& y, const Comodule& z, const CheckOptions& opt = {});

struct ForgetfulStructure {
  LinearMap monoidal;    // U_{M,N} = η: M⊗N → M⊗̄N
  LinearMap comonoidal;  // U^{M,N} = ι
  LinearMap unit;        // U_0: 𝕜 → H_s
  LinearMap counit;      // U^0: H_s → 𝕜
  CheckReport report;
};

// Also checks the Frobenius monoidal compatibilities on the triple (M, N, M).
ForgetfulStructure forgetful_structure(const Comodule& m, const Comodule& n, const CheckOptions& opt = {});

}  // namespace wbalg
