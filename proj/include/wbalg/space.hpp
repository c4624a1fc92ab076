#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wbalg {

// A list of distinct basis labels. Shared between spaces built from it.
class Basis {
 public:
  explicit Basis(std::vector<std::string> labels);
  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> find(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

// A finite-dimensional labeled vector space, possibly a tensor product of
// atomic factors. Tensor products flatten row-major, so the associator of Vec
// is the identity on indices. The space with no factors is the ground field.
class Space {
 public:
  Space() = default;
  explicit Space(std::vector<std::string> labels);

  static Space ground() { return Space(); }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t factor_count() const noexcept { return factors_.size(); }
  bool is_ground() const noexcept { return factors_.empty(); }
  Space factor(std::size_t k) const;
  std::size_t factor_dim(std::size_t k) const { return factors_.at(k)->size(); }

  // Label of a flat index; factor labels are joined with "⊗".
  std::string label(std::size_t i) const;
  std::vector<std::string> labels() const;
  // Only for atomic spaces.
  std::optional<std::size_t> find(std::string_view label) const;

  std::vector<std::size_t> unflatten(std::size_t i) const;
  std::size_t flatten(std::span<const std::size_t> index) const;

  friend Space tensor(const Space& a, const Space& b);
  friend bool operator==(const Space& a, const Space& b);

 private:
  std::vector<std::shared_ptr<const Basis>> factors_;
  std::size_t dim_ = 1;
};

Space tensor(const Space& a, const Space& b);
Space tensor(const Space& a, const Space& b, const Space& c);

}  // namespace wbalg
