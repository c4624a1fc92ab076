#pragma once

#include <memory>
#include <optional>
#include <string>

#include "wbalg/constructions.hpp"
#include "wbalg/structures.hpp"

namespace wbalg {

class ActionDataInvalid : public Error {
 public:
  ActionDataInvalid(const std::string& what, CheckReport report)
      : Error("ActionDataInvalid", what), report_(std::move(report)) {}
  const CheckReport& report() const noexcept { return report_; }

 private:
  CheckReport report_;
};

struct HopfAlgebraData {
  std::string name;
  AlgebraData algebra;
  CoalgebraData coalgebra;
  LinearMap antipode;
  LinearMap antipode_inverse;

  const Space& space() const noexcept { return algebra.space; }
  std::size_t dim() const noexcept { return algebra.space.dim(); }
};

// Computes S⁻¹ exactly; throws InvalidStructure if S is singular.
HopfAlgebraData make_hopf(std::string name, AlgebraData alg, CoalgebraData coalg, LinearMap antipode);
// kG with Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹. Throws NotAGroup.
HopfAlgebraData group_hopf(const GroupTable& g, const std::string& name = "kG");
// Δ(1) = 1⊗1, Δ and ε multiplicative, the antipode axioms and S∘S⁻¹ = Id.
CheckReport check_hopf(const HopfAlgebraData& l, const CheckOptions& opt = {});

struct SeparableAlgebraData {
  AlgebraData algebra;
  SparseVector idempotent;  // e⁽¹⁾⊗e⁽²⁾ in B⊗B
  LinearMap omega;          // B → 𝕜
  // How ω was obtained, and any conflict with a supplied one.
  CheckReport derivation;

  const Space& space() const noexcept { return algebra.space; }
  std::size_t dim() const noexcept { return algebra.space.dim(); }
};

// ω is solved from ω(e⁽¹⁾)e⁽²⁾ = e⁽¹⁾ω(e⁽²⁾) = 1. A supplied ω is kept but
// compared against the solution. Throws InvalidStructure when neither exists.
SeparableAlgebraData make_separable(AlgebraData b, SparseVector e, std::optional<LinearMap> omega = std::nullopt);
// B = kG with e = |G|⁻¹ Σ g⊗g⁻¹.
SeparableAlgebraData group_separable(const GroupTable& g, const std::string& name = "kG");
CheckReport check_separable(const SeparableAlgebraData& b, const CheckOptions& opt = {});

struct ModuleAlgebraAction {
  LinearMap right;  // B⊗L → B, b ◁ h
  LinearMap left;   // L⊗B → B, h ▷ a = a ◁ S(h)
};

ModuleAlgebraAction make_action(const HopfAlgebraData& l, LinearMap right);
// b ◁ h = S(h₁) b h₂ on B = L.
ModuleAlgebraAction adjoint_action(const HopfAlgebraData& l);
// b ◁ h = ε(h) b.
ModuleAlgebraAction trivial_action(const HopfAlgebraData& l, const SeparableAlgebraData& b);

// Includes the checks of L and B under hopf/ and separable/.
CheckReport check_action_data(const HopfAlgebraData& l, const SeparableAlgebraData& b, const ModuleAlgebraAction& act,
                              const CheckOptions& opt = {});

// H(L, B, ◁) on B^op⊗L⊗B.
struct QTG {
  WeakHopfAlgebra hopf;
  std::shared_ptr<const HopfAlgebraData> l;
  std::shared_ptr<const SeparableAlgebraData> b;
  std::shared_ptr<const ModuleAlgebraAction> action;
  CheckReport report;

  const WeakBialgebra& wba() const { return *hopf.wba; }
  std::size_t index(std::size_t a, std::size_t h, std::size_t b) const;
};

// Runs check_action_data first (ActionDataInvalid on failure), then builds the
// five structure maps and attaches check_weak_hopf, the closed forms of ε_s,
// ε_t, H_s, H_t, and S² on H_s and H_t.
QTG build_qtg(HopfAlgebraData l, SeparableAlgebraData b, ModuleAlgebraAction act, const CheckOptions& opt = {},
              std::string name = "H(L,B)");
// H(kG, kG, adj). The report also compares the structure against the
// displayed group formulas, including ω = ε and ε = 1 as discrepancies.
QTG group_qtg(const GroupTable& g, const CheckOptions& opt = {});

struct Bicomodule {
  std::string name;
  std::shared_ptr<const HopfAlgebraData> l;
  Space space;
  LinearMap left;   // X → L⊗X
  LinearMap right;  // X → X⊗L

  std::size_t dim() const noexcept { return space.dim(); }
};

// Validates shapes; throws DimensionMismatch.
Bicomodule make_bicomodule(std::string name, std::shared_ptr<const HopfAlgebraData> l, Space space, LinearMap left,
                           LinearMap right);
// 𝕜 with both coactions through u_L.
Bicomodule trivial_bicomodule(std::shared_ptr<const HopfAlgebraData> l);
// L with λ = ρ = Δ.
Bicomodule regular_bicomodule(std::shared_ptr<const HopfAlgebraData> l);
// Basis x_i spanning a graded space with grouplike degrees g_i:
// ρ(x_i) = x_i⊗g_i and λ(x_i) = S(g_i)⊗x_i.
Bicomodule graded_bicomodule(std::string name, std::shared_ptr<const HopfAlgebraData> l,
                             std::vector<std::string> labels, const std::vector<std::size_t>& degrees);
// Diagonal coactions x_[-1]x'_[-1] ⊗ x_[0]⊗x'_[0] and x_[0]⊗x'_[0] ⊗ x_[1]x'_[1].
Bicomodule tensor(const Bicomodule& x, const Bicomodule& y);

CheckReport check_bicomodule(const Bicomodule& x, const CheckOptions& opt = {});
// f commutes with both coactions.
CheckReport check_bicomodule_morphism(const LinearMap& f, const Bicomodule& x, const Bicomodule& y,
                                      const CheckOptions& opt = {});

struct BicomoduleAlgebra {
  Bicomodule object;
  LinearMap mult;  // X⊗X → X
  SparseVector unit;
};

// Associativity, unit laws, and m, u as bicomodule morphisms.
CheckReport check_bicomodule_algebra(const BicomoduleAlgebra& a, const CheckOptions& opt = {});
// L itself, with λ = ρ = Δ.
BicomoduleAlgebra regular_bicomodule_algebra(std::shared_ptr<const HopfAlgebraData> l);
BicomoduleAlgebra trivial_bicomodule_algebra(std::shared_ptr<const HopfAlgebraData> l);
// T(V)/(v^{k+1}) for a one-dimensional V of grouplike degree g.
BicomoduleAlgebra truncated_tensor_algebra(std::shared_ptr<const HopfAlgebraData> l, std::size_t g, unsigned k);

// Γ(X) = B^op⊗X⊗B; only the right coaction of X is used.
Comodule gamma(const QTG& h, const Bicomodule& x);
Comodule gamma(const QTG& h, const std::string& name, const Space& space, const LinearMap& right);
// Id⊗f⊗Id.
LinearMap gamma_map(const QTG& h, const LinearMap& f);

struct GammaHat {
  Comodule source_left;   // Γ(X)
  Comodule source_right;  // Γ(X')
  Comodule target;        // Γ(X⊗X')
  BarProduct bar;         // Γ(X) ⊗̄ Γ(X')
  LinearMap structure;    // Γ̂_{X,X'}: bar coordinates → Γ(X⊗X')
  LinearMap unit;         // Γ̂₀: H_s → Γ(𝕜)
  CheckReport report;
};

// Γ̂₀ is 1⊗1⊗b ↦ 1⊗b, extended to H_s through ε_L on the middle factor.
LinearMap gamma_hat_unit(const QTG& h);
// The structure maps alone.
LinearMap gamma_hat_structure(const QTG& h, const Bicomodule& x, const Bicomodule& y, const BarProduct& bar);
// Morphism checks, both unit constraints for X and X', and the associativity
// constraint on (X, X', X).
GammaHat gamma_hat_monoidal(const QTG& h, const Bicomodule& x, const Bicomodule& y, const CheckOptions& opt = {});
CheckResult check_gamma_hat_associativity(const QTG& h, const Bicomodule& x, const Bicomodule& y,
                                          const Bicomodule& z, const CheckOptions& opt = {});
CheckReport check_gamma_hat_units(const QTG& h, const Bicomodule& x, const CheckOptions& opt = {});

struct TransportedAlgebra {
  InternalAlgebra internal;    // (Γ(X), Γ(m)Γ̂_{X,X}, Γ(u)Γ̂₀)
  ComoduleAlgebra algebra;     // after G
  CheckReport report;
};

// Throws InvalidStructure if X is not an algebra in L-Bicomod.
TransportedAlgebra transport_algebra(const QTG& h, const BicomoduleAlgebra& x, const CheckOptions& opt = {});

// B^op⊗B with (a⊗b)(a'⊗b') = a'a ⊗ bb'.
AlgebraData opposite_tensor_algebra(const AlgebraData& b);

}  // namespace wbalg
