#pragma once

#include <memory>
#include <optional>

#include "wbalg/report.hpp"

namespace wbalg {

// Degrees of basis elements; products whose total degree exceeds max_degree
// are outside the truncation and are not represented.
struct Truncation {
  std::vector<unsigned> degree;
  unsigned max_degree = 0;

  bool fits(std::span<const std::size_t> basis_elements) const;
};

struct AlgebraData {
  Space space;
  LinearMap mult;  // H⊗H → H
  SparseVector unit;
  std::shared_ptr<const Truncation> truncation;

  std::size_t dim() const noexcept { return space.dim(); }
  // Error if the pair is outside the truncation.
  const SparseVector& product(std::size_t x, std::size_t y) const;
  bool product_defined(std::size_t x, std::size_t y) const;
};

struct CoalgebraData {
  Space space;
  LinearMap comult;  // C → C⊗C
  LinearMap counit;  // C → 𝕜

  std::size_t dim() const noexcept { return space.dim(); }
};

// Validates shapes; throws DimensionMismatch.
void validate(const AlgebraData& a);
void validate(const CoalgebraData& c);

// nullopt when some basis product is outside the truncation.
std::optional<SparseVector> try_multiply(const AlgebraData& a, const SparseVector& u, const SparseVector& v);
// Throws TruncationOverflow.
SparseVector multiply(const AlgebraData& a, const SparseVector& u, const SparseVector& v);
// Componentwise product in H^{⊗k}.
std::optional<SparseVector> try_multiply_tensor(const AlgebraData& a, const SparseVector& u, const SparseVector& v,
                                                std::size_t k);
// Multiplication map restricted to a product of subspaces, for structure
// constants of subalgebras: (S⊗S → S).
LinearMap structure_on(const AlgebraData& a, const LinearMap& basis, const LinearMap& projection);

CheckReport check_algebra(const AlgebraData& a, const CheckOptions& opt = {});
CheckReport check_coalgebra(const CoalgebraData& c, const CheckOptions& opt = {});

// Single-identity checks reused by other modules.
CheckResult check_associative(std::string name, const AlgebraData& a, const CheckOptions& opt = {});

}  // namespace wbalg
