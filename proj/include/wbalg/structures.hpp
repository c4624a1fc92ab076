#pragma once

#include "wbalg/comodule.hpp"

namespace wbalg {

struct ComoduleAlgebra {
  Comodule comodule;
  LinearMap mult;  // A⊗A → A
  SparseVector unit;
};

struct ComoduleCoalgebra {
  Comodule comodule;
  LinearMap comult;  // C → C⊗C
  LinearMap counit;  // C → 𝕜
};

// Both halves share one comodule.
struct ComoduleFrobenius {
  ComoduleAlgebra algebra;
  ComoduleCoalgebra coalgebra;
};

struct InternalAlgebra {
  Comodule comodule;
  BarProduct bar;   // A ⊗̄ A
  LinearMap mult;   // bar coordinates → A
  LinearMap unit;   // H_s → A
};

struct InternalCoalgebra {
  Comodule comodule;
  BarProduct bar;
  LinearMap comult;  // A → bar coordinates
  LinearMap counit;  // A → H_s
};

struct InternalFrobenius {
  Comodule comodule;
  BarProduct bar;
  LinearMap mult, unit, comult, counit;
};

class FormulaicCheckFailed : public Error {
 public:
  FormulaicCheckFailed(const std::string& what, CheckReport report)
      : Error("FormulaicCheckFailed", what), report_(std::move(report)) {}
  const CheckReport& report() const noexcept { return report_; }

 private:
  CheckReport report_;
};

class InternalCheckFailed : public Error {
 public:
  InternalCheckFailed(const std::string& what, CheckReport report)
      : Error("InternalCheckFailed", what), report_(std::move(report)) {}
  const CheckReport& report() const noexcept { return report_; }

 private:
  CheckReport report_;
};

// Includes the six alternative unit conditions as unit-condition-a … -f and
// whether they agree with unit-in-Ht.
CheckReport check_comodule_algebra(const ComoduleAlgebra& a, const CheckOptions& opt = {});
CheckReport check_comodule_coalgebra(const ComoduleCoalgebra& c, const CheckOptions& opt = {});
CheckReport check_comodule_frobenius(const ComoduleFrobenius& f, const CheckOptions& opt = {});

CheckReport check_internal(const InternalAlgebra& x, const CheckOptions& opt = {});
CheckReport check_internal(const InternalCoalgebra& x, const CheckOptions& opt = {});
CheckReport check_internal(const InternalFrobenius& x, const CheckOptions& opt = {});

// Checked mode throws FormulaicCheckFailed / InternalCheckFailed when the input
// fails its own check, or the result fails the target category's check.
InternalAlgebra functor_F(const ComoduleAlgebra& a, Construction mode = Construction::checked);
InternalCoalgebra functor_F(const ComoduleCoalgebra& c, Construction mode = Construction::checked);
InternalFrobenius functor_F(const ComoduleFrobenius& f, Construction mode = Construction::checked);

ComoduleAlgebra functor_G(const InternalAlgebra& x, Construction mode = Construction::checked);
ComoduleCoalgebra functor_G(const InternalCoalgebra& x, Construction mode = Construction::checked);
ComoduleFrobenius functor_G(const InternalFrobenius& x, Construction mode = Construction::checked);

// G(F(X)) = X and F(G(F(X))) = F(X), tensor for tensor.
CheckReport roundtrip_report(const ComoduleAlgebra& a);
CheckReport roundtrip_report(const ComoduleCoalgebra& c);
CheckReport roundtrip_report(const ComoduleFrobenius& f);

// Morphisms of the formulaic categories: linear maps that are comodule maps
// and preserve the (co)algebra structure.
CheckReport check_morphism(const LinearMap& f, const ComoduleAlgebra& a, const ComoduleAlgebra& b);
CheckReport check_morphism(const LinearMap& f, const ComoduleCoalgebra& a, const ComoduleCoalgebra& b);
// Morphisms of internal algebras: f∘m̄ = m̄'∘(f⊗̄f) and f∘ū = ū'.
CheckReport check_morphism(const LinearMap& f, const InternalAlgebra& a, const InternalAlgebra& b);
CheckReport check_morphism(const LinearMap& f, const InternalCoalgebra& a, const InternalCoalgebra& b);

}  // namespace wbalg
