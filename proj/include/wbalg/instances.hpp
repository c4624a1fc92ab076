#pragma once

#include "wbalg/constructions.hpp"
#include "wbalg/structures.hpp"

namespace wbalg {

// 𝕜Q on the paths of f with ρ(p) = Σ_q q⊗x_{q,p}.
Comodule path_comodule(const FaceAlgebra& f);

// Path multiplication (paths beyond a truncation are zero) and path-splitting
// comultiplication, both on path_comodule(f).
std::pair<ComoduleAlgebra, ComoduleCoalgebra> kq_comodule_instances(const FaceAlgebra& f);

// path ≡ Σ c·q
struct Identification {
  Path path;
  std::vector<std::pair<Scalar, Path>> value;
};

struct FaceQuotient {
  std::shared_ptr<const WeakBialgebra> wba;
  LinearMap projection;  // π: 𝔥(Q) → quotient
  LinearMap section;     // representatives: quotient → 𝔥(Q)
  std::vector<SparseVector> relations;  // reduced basis of the relation ideal
  CheckReport report;
};

class QuotientNotWeakBialgebra : public Error {
 public:
  QuotientNotWeakBialgebra(const std::string& what, FaceQuotient quotient)
      : Error("QuotientNotWeakBialgebra", what), quotient_(std::move(quotient)) {}
  const FaceQuotient& quotient() const noexcept { return quotient_; }

 private:
  FaceQuotient quotient_;
};

// Quotient of f by the ideal generated by x_{p,q} − x_{φ(p),φ(q)}, where φ applies the
// identifications (and fixes other paths) and both sides are defined.
FaceQuotient face_algebra_quotient(const FaceAlgebra& f, const std::vector<Identification>& identifications,
                                   const std::string& name = "h(Q)/I");

struct MatrixFrobeniusExample {
  FaceQuotient quotient;  // two-cycle, truncated(2), pp* ≡ e_1, p*p ≡ e_2
  ComoduleFrobenius frobenius;
  CheckReport report;
};

// A = 𝕜Q/(pp* − e_1, p*p − e_2) ≅ Mat₂ on the basis e_1, p, p*, e_2.
MatrixFrobeniusExample matrix_frobenius_example();

// H_s with the multiplication of H, (Δ_s, ε) and ρ = Δ restricted.
ComoduleFrobenius unit_object_instance(std::shared_ptr<const WeakBialgebra> h);

}  // namespace wbalg
