#include "wbalg/elimination.hpp"

#include <algorithm>
#include <limits>

#include "wbalg/errors.hpp"

namespace wbalg {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

std::size_t lead(const SparseVector& v) { return v.is_zero() ? npos : v.entries().front().index; }

// row -= c * pivot_row
void eliminate(SparseVector& row, const SparseVector& pivot_row, const Scalar& c) {
  row -= c * pivot_row;
}

std::string coordinate_label(std::string_view tag, const std::string& label) {
  return std::string(tag) + "(" + label + ")";
}

}  // namespace

Echelon row_reduce(std::vector<SparseVector> rows) {
  Echelon ech;
  std::vector<std::size_t> pending;
  pending.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].is_zero()) pending.push_back(i);

  while (!pending.empty()) {
    // Rows still pending have been cleared of every earlier pivot column, so
    // their leading index is the first column where they can pivot.
    std::size_t col = npos;
    std::size_t pick = npos;
    for (std::size_t k = 0; k < pending.size(); ++k) {
      std::size_t l = lead(rows[pending[k]]);
      if (l < col || (l == col && pending[k] < pending[pick])) {
        col = l;
        pick = k;
      }
    }
    std::size_t r = pending[pick];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
    SparseVector prow = std::move(rows[r]);
    Scalar inv = 1 / prow.entries().front().value;
    if (inv != 1) prow *= inv;

    std::vector<std::size_t> still;
    still.reserve(pending.size());
    for (std::size_t i : pending) {
      if (lead(rows[i]) == col) {
        Scalar c = rows[i].entries().front().value;
        eliminate(rows[i], prow, c);
      }
      if (!rows[i].is_zero()) still.push_back(i);
    }
    pending = std::move(still);
    for (auto& done : ech.rows) {
      Scalar c = done.coefficient(col);
      if (sgn(c) != 0) eliminate(done, prow, c);
    }
    ech.rows.push_back(std::move(prow));
    ech.pivots.push_back(col);
    ech.source_rows.push_back(r);
  }
  return ech;
}

std::size_t rank(const LinearMap& f) { return row_reduce(f.rows()).pivots.size(); }

Subspace kernel_basis(const LinearMap& f, std::string_view tag) {
  Echelon ech = row_reduce(f.rows());
  std::size_t n = f.domain().dim();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;

  std::vector<std::size_t> free;
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) {
      free.push_back(j);
      labels.push_back(coordinate_label(tag, f.domain().label(j)));
    }
  Space coords(std::move(labels));

  // Column of each free variable in the reduced rows.
  std::vector<std::vector<Entry>> raw(free.size());
  std::vector<std::size_t> free_pos(n, npos);
  for (std::size_t k = 0; k < free.size(); ++k) {
    free_pos[free[k]] = k;
    raw[k].push_back({free[k], 1});
  }
  for (std::size_t r = 0; r < ech.rows.size(); ++r)
    for (const auto& e : ech.rows[r])
      if (free_pos[e.index] != npos) raw[free_pos[e.index]].push_back({ech.pivots[r], -e.value});

  std::vector<SparseVector> cols;
  cols.reserve(free.size());
  for (auto& r : raw) cols.push_back(SparseVector::from_entries(std::move(r)));
  LinearMap basis(coords, f.domain(), std::move(cols));

  // Each kernel vector is 1 on its own free coordinate and 0 on the others.
  LinearMap proj(f.domain(), coords);
  for (std::size_t k = 0; k < free.size(); ++k) proj.set_column(free[k], SparseVector::unit(k));
  return {f.domain(), coords, std::move(basis), std::move(proj)};
}

LinearMap left_inverse(const LinearMap& basis) {
  // Rows of the basis matrix that are independent: pivots of its transpose.
  Echelon ech = row_reduce(basis.columns());
  std::size_t r = basis.domain().dim();
  if (ech.pivots.size() != r) throw Error("NotInjective", "basis columns are linearly dependent");
  const auto& sel = ech.pivots;
  std::vector<SparseVector> square_cols(r);
  for (std::size_t j = 0; j < r; ++j) {
    VectorBuilder b;
    for (const auto& e : basis.column(j)) {
      auto it = std::lower_bound(sel.begin(), sel.end(), e.index);
      if (it != sel.end() && *it == e.index) b.add(static_cast<std::size_t>(it - sel.begin()), e.value);
    }
    square_cols[j] = b.build();
  }
  std::vector<std::string> sel_labels;
  for (std::size_t i = 0; i < r; ++i) sel_labels.push_back(std::to_string(i));
  Space sq(std::move(sel_labels));
  auto inv = inverse(LinearMap(basis.domain(), sq, std::move(square_cols)));
  if (!inv) throw Error("NotInjective", "selected rows are singular");
  LinearMap proj(basis.codomain(), basis.domain());
  for (std::size_t k = 0; k < r; ++k) proj.set_column(sel[k], inv->column(k));
  return proj;
}

Subspace image_basis(const LinearMap& f, std::string_view tag) {
  Echelon ech = row_reduce(f.rows());
  std::vector<std::string> labels;
  std::vector<SparseVector> cols;
  for (std::size_t p : ech.pivots) {
    labels.push_back(coordinate_label(tag, f.domain().label(p)));
    cols.push_back(f.column(p));
  }
  Space coords(std::move(labels));
  LinearMap basis(coords, f.codomain(), std::move(cols));
  LinearMap proj = left_inverse(basis);
  return {f.codomain(), coords, std::move(basis), std::move(proj)};
}

Subspace whole_space(const Space& s) { return {s, s, LinearMap::identity(s), LinearMap::identity(s)}; }

Subspace tensor(const Subspace& a, const Subspace& b) {
  return {tensor(a.ambient, b.ambient), tensor(a.coordinates, b.coordinates), kron(a.basis, b.basis),
          kron(a.projection, b.projection)};
}

std::optional<SparseVector> solve_in_subspace(const SparseVector& v, const Subspace& s) {
  SparseVector c = s.projection(v);
  if (s.basis(c) != v) return std::nullopt;
  return c;
}

std::optional<LinearMap> inverse(const LinearMap& f) {
  std::size_t n = f.domain().dim();
  if (f.codomain().dim() != n) return std::nullopt;
  auto rows = f.rows();
  for (std::size_t i = 0; i < n; ++i) rows[i] += SparseVector::unit(n + i);
  Echelon ech = row_reduce(std::move(rows));
  if (ech.pivots.size() != n || (n > 0 && ech.pivots.back() != n - 1)) return std::nullopt;
  // Row i of the right block is row i of f^{-1}.
  std::vector<std::vector<Entry>> raw(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& e : ech.rows[i])
      if (e.index >= n) raw[e.index - n].push_back({i, e.value});
  std::vector<SparseVector> cols;
  cols.reserve(n);
  for (auto& r : raw) cols.push_back(SparseVector::from_entries(std::move(r)));
  return LinearMap(f.codomain(), f.domain(), std::move(cols));
}

std::optional<SparseVector> solve(const LinearMap& f, const SparseVector& b) {
  std::size_t n = f.domain().dim();
  auto rows = f.rows();
  for (const auto& e : b) rows[e.index] += SparseVector::unit(n, e.value);
  Echelon ech = row_reduce(std::move(rows));
  VectorBuilder x;
  for (std::size_t r = 0; r < ech.rows.size(); ++r) {
    if (ech.pivots[r] == n) return std::nullopt;
    x.add(ech.pivots[r], ech.rows[r].coefficient(n));
  }
  return x.build();
}

bool same_span(const LinearMap& a, const LinearMap& b) {
  if (!(a.codomain() == b.codomain())) return false;
  std::size_t ra = row_reduce(a.columns()).pivots.size();
  std::size_t rb = row_reduce(b.columns()).pivots.size();
  if (ra != rb) return false;
  std::vector<SparseVector> both = a.columns();
  both.insert(both.end(), b.columns().begin(), b.columns().end());
  return row_reduce(std::move(both)).pivots.size() == ra;
}

}  // namespace wbalg
