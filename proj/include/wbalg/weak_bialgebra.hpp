#pragma once

#include <memory>
#include <string>

#include "wbalg/algebra.hpp"
#include "wbalg/elimination.hpp"
#include "wbalg/errors.hpp"

namespace wbalg {

class InvalidStructure : public Error {
 public:
  InvalidStructure(const std::string& what, CheckReport report)
      : Error("InvalidStructure", what), report_(std::move(report)) {}
  const CheckReport& report() const noexcept { return report_; }

 private:
  CheckReport report_;
};

enum class Construction { checked, unchecked };

// Algebra and coalgebra on one space, with the counital data computed eagerly.
class WeakBialgebra {
 public:
  // Checked construction runs check_algebra and check_coalgebra and throws
  // InvalidStructure if either fails.
  WeakBialgebra(std::string name, AlgebraData alg, CoalgebraData coalg,
                Construction mode = Construction::checked);

  const std::string& name() const noexcept { return name_; }
  const Space& space() const noexcept { return alg_.space; }
  std::size_t dim() const noexcept { return alg_.space.dim(); }
  const AlgebraData& algebra() const noexcept { return alg_; }
  const CoalgebraData& coalgebra() const noexcept { return coalg_; }
  const LinearMap& mult() const noexcept { return alg_.mult; }
  const LinearMap& comult() const noexcept { return coalg_.comult; }
  const LinearMap& counit() const noexcept { return coalg_.counit; }
  const SparseVector& one() const noexcept { return alg_.unit; }
  bool truncated() const noexcept { return static_cast<bool>(alg_.truncation); }

  const SparseVector& delta_one() const noexcept { return delta_one_; }
  const SparseVector& delta2_one() const noexcept { return delta2_one_; }
  const LinearMap& eps_s() const noexcept { return eps_s_; }
  const LinearMap& eps_t() const noexcept { return eps_t_; }
  const Subspace& source() const noexcept { return hs_; }
  const Subspace& target() const noexcept { return ht_; }
  // Δ_s, ε|Hs on Hs coordinates and Δ_t, ε|Ht on Ht coordinates.
  const CoalgebraData& source_coalgebra() const noexcept { return hs_coalg_; }
  const CoalgebraData& target_coalgebra() const noexcept { return ht_coalg_; }
  // Findings made while computing the cached data (e.g. Δ_s escaping Hs⊗Hs).
  const CheckReport& construction_report() const noexcept { return construction_; }

  // ε(x·y) on basis elements; nullopt outside the truncation.
  std::optional<Scalar> counit_of_product(std::size_t x, std::size_t y) const;
  Scalar counit_value(std::size_t x) const { return counit_.at(x); }
  Scalar counit_of(const SparseVector& v) const;

  std::optional<SparseVector> try_multiply(const SparseVector& u, const SparseVector& v) const {
    return wbalg::try_multiply(alg_, u, v);
  }
  SparseVector multiply(const SparseVector& u, const SparseVector& v) const { return wbalg::multiply(alg_, u, v); }

 private:
  std::string name_;
  AlgebraData alg_;
  CoalgebraData coalg_;
  std::vector<Scalar> counit_;
  std::vector<Scalar> eps_product_;  // n×n, row-major
  std::vector<char> eps_known_;
  SparseVector delta_one_;
  SparseVector delta2_one_;
  LinearMap eps_s_;
  LinearMap eps_t_;
  Subspace hs_;
  Subspace ht_;
  CoalgebraData hs_coalg_;
  CoalgebraData ht_coalg_;
  CheckReport construction_;
};

struct WeakHopfAlgebra {
  std::shared_ptr<const WeakBialgebra> wba;
  LinearMap antipode;
  std::optional<LinearMap> antipode_inverse;
};

CheckReport check_weak_bialgebra(const WeakBialgebra& h, const CheckOptions& opt = {});
// Includes the weak bialgebra checks.
CheckReport check_weak_hopf(const WeakHopfAlgebra& h, const CheckOptions& opt = {});

// Δ(1) = 1⊗1.
bool is_bialgebra(const WeakBialgebra& h);

}  // namespace wbalg
