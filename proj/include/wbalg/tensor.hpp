#pragma once

#include <span>
#include <utility>
#include <vector>

#include "wbalg/sparse.hpp"

namespace wbalg {

// A sparse element of a tensor product of factor spaces.
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::vector<Space> factors, SparseVector values);

  // Factors: atomic factors of the codomain, then of the domain.
  static Tensor from_map(const LinearMap& f);
  // Factors: atomic factors of `space`.
  static Tensor from_vector(const Space& space, SparseVector values);

  const std::vector<Space>& factors() const noexcept { return factors_; }
  const SparseVector& values() const noexcept { return values_; }
  Space space() const;
  std::vector<std::size_t> dims() const;
  std::vector<std::pair<std::vector<std::size_t>, Scalar>> items() const;

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  std::vector<Space> factors_;
  SparseVector values_;
};

// Contracts factors tf[k] of t against sf[k] of s. Result factors are the
// free factors of t followed by the free factors of s, in order.
Tensor contract(const Tensor& t, std::span<const std::size_t> tf, const Tensor& s,
                std::span<const std::size_t> sf);
// Result factor k is factor order[k] of t.
Tensor permute(const Tensor& t, std::span<const std::size_t> order);

}  // namespace wbalg
