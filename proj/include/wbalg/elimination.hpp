#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wbalg/sparse.hpp"

namespace wbalg {

// Reduced row echelon form of a list of sparse rows.
struct Echelon {
  std::vector<SparseVector> rows;        // one per pivot, leading entry 1
  std::vector<std::size_t> pivots;       // pivot column of each row, increasing
  std::vector<std::size_t> source_rows;  // input row that supplied each pivot
};

// Pivot rule: leftmost column with a nonzero entry, then the lowest input row.
Echelon row_reduce(std::vector<SparseVector> rows);

// A subspace of `ambient` with basis (coordinates -> ambient) and a left
// inverse projection (ambient -> coordinates).
struct Subspace {
  Space ambient;
  Space coordinates;
  LinearMap basis;
  LinearMap projection;

  std::size_t dim() const noexcept { return coordinates.dim(); }
};

Subspace kernel_basis(const LinearMap& f, std::string_view tag = "ker");
// Basis vectors are the pivot columns of f, labelled by their domain labels.
Subspace image_basis(const LinearMap& f, std::string_view tag = "im");
Subspace whole_space(const Space& s);
Subspace tensor(const Subspace& a, const Subspace& b);

std::size_t rank(const LinearMap& f);
// Left inverse of a map with independent columns.
LinearMap left_inverse(const LinearMap& basis);

// nullopt signals NotInSubspace.
std::optional<SparseVector> solve_in_subspace(const SparseVector& v, const Subspace& s);
std::optional<LinearMap> inverse(const LinearMap& f);
// Some x with f(x) = b, free variables set to zero.
std::optional<SparseVector> solve(const LinearMap& f, const SparseVector& b);
// Equal column spans inside a common codomain.
bool same_span(const LinearMap& a, const LinearMap& b);

}  // namespace wbalg
