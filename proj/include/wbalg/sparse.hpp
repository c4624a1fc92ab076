#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wbalg/scalar.hpp"
#include "wbalg/space.hpp"

namespace wbalg {

struct Entry {
  std::size_t index;
  Scalar value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

// Sorted by index, no stored zeros.
class SparseVector {
 public:
  SparseVector() = default;

  static SparseVector unit(std::size_t i, const Scalar& c = 1);
  // Sorts, merges duplicate indices, drops zeros.
  static SparseVector from_entries(std::vector<Entry> entries);

  std::span<const Entry> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  bool is_zero() const noexcept { return entries_.empty(); }
  std::size_t nnz() const noexcept { return entries_.size(); }
  Scalar coefficient(std::size_t i) const;

  SparseVector& operator+=(const SparseVector& other);
  SparseVector& operator-=(const SparseVector& other);
  SparseVector& operator*=(const Scalar& c);

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator-(SparseVector a) { return a *= -1; }
  friend SparseVector operator*(const Scalar& c, SparseVector a) { return a *= c; }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

// Collects index/value pairs in any order; build() normalizes.
class VectorBuilder {
 public:
  void add(std::size_t i, const Scalar& c) {
    if (sgn(c) != 0) raw_.push_back({i, c});
  }
  void add(const SparseVector& v, const Scalar& c = 1);
  // Adds c·(u ⊗ v) where v lives in a space of dimension dim_v.
  void add_kron(const SparseVector& u, const SparseVector& v, std::size_t dim_v, const Scalar& c = 1);
  SparseVector build();
  bool empty() const noexcept { return raw_.empty(); }

 private:
  std::vector<Entry> raw_;
};

SparseVector kron(const SparseVector& u, const SparseVector& v, std::size_t dim_v);

// A linear map stored by columns.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(Space domain, Space codomain);
  LinearMap(Space domain, Space codomain, std::vector<SparseVector> columns);

  static LinearMap identity(const Space& s);
  static LinearMap zero(const Space& domain, const Space& codomain) { return LinearMap(domain, codomain); }
  // A functional on `domain`, i.e. a map into the ground field.
  static LinearMap functional(const Space& domain, const SparseVector& coefficients);
  // The map from the ground field picking out `v`.
  static LinearMap vector(const Space& codomain, const SparseVector& v);

  const Space& domain() const noexcept { return domain_; }
  const Space& codomain() const noexcept { return codomain_; }
  const SparseVector& column(std::size_t j) const { return columns_.at(j); }
  const std::vector<SparseVector>& columns() const noexcept { return columns_; }
  void set_column(std::size_t j, SparseVector v);

  SparseVector operator()(const SparseVector& v) const;
  Scalar entry(std::size_t row, std::size_t col) const { return columns_.at(col).coefficient(row); }
  // Value of a functional on a vector.
  Scalar evaluate(const SparseVector& v) const { return (*this)(v).coefficient(0); }
  std::size_t nnz() const;
  // Row-major view, used by elimination.
  std::vector<SparseVector> rows() const;
  LinearMap transpose() const;
  // Same matrix on different but equally sized spaces.
  LinearMap relabel(Space domain, Space codomain) const;

  friend LinearMap operator*(const LinearMap& g, const LinearMap& f);  // g∘f
  friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator*(const Scalar& c, const LinearMap& a);
  friend bool operator==(const LinearMap& a, const LinearMap& b);

 private:
  Space domain_;
  Space codomain_;
  std::vector<SparseVector> columns_;
};

LinearMap kron(const LinearMap& f, const LinearMap& g);
// τ: a⊗b → b⊗a
LinearMap flip(const Space& a, const Space& b);

// (f⊗g)(v) without materializing f⊗g.
SparseVector apply_kron(const LinearMap& f, const LinearMap& g, const SparseVector& v);
// (f⊗Id_right)(v) and (Id_left⊗f)(v).
SparseVector apply_left(const LinearMap& f, const SparseVector& v, std::size_t dim_right);
SparseVector apply_right(const LinearMap& f, const SparseVector& v);

}  // namespace wbalg
