#include "wbalg/algebra.hpp"

#include "wbalg/errors.hpp"

namespace wbalg {

bool Truncation::fits(std::span<const std::size_t> basis_elements) const {
  unsigned total = 0;
  for (auto x : basis_elements) total += degree.at(x);
  return total <= max_degree;
}

bool AlgebraData::product_defined(std::size_t x, std::size_t y) const {
  if (!truncation) return true;
  return truncation->degree[x] + truncation->degree[y] <= truncation->max_degree;
}

const SparseVector& AlgebraData::product(std::size_t x, std::size_t y) const {
  if (!product_defined(x, y))
    throw TruncationOverflow(space.label(x) + " · " + space.label(y) + " exceeds the truncation degree");
  return mult.column(x * space.dim() + y);
}

void validate(const AlgebraData& a) {
  if (!(a.mult.domain() == tensor(a.space, a.space)) || !(a.mult.codomain() == a.space))
    throw DimensionMismatch("multiplication must map H⊗H to H");
  if (!a.unit.is_zero() && a.unit.entries().back().index >= a.dim())
    throw DimensionMismatch("unit outside the algebra");
  if (a.truncation && a.truncation->degree.size() != a.dim())
    throw DimensionMismatch("truncation degrees do not match the basis");
}

void validate(const CoalgebraData& c) {
  if (!(c.comult.domain() == c.space) || !(c.comult.codomain() == tensor(c.space, c.space)))
    throw DimensionMismatch("comultiplication must map C to C⊗C");
  if (!(c.counit.domain() == c.space) || !c.counit.codomain().is_ground())
    throw DimensionMismatch("counit must map C to the ground field");
}

std::optional<SparseVector> try_multiply(const AlgebraData& a, const SparseVector& u, const SparseVector& v) {
  VectorBuilder b;
  for (const auto& x : u)
    for (const auto& y : v) {
      if (!a.product_defined(x.index, y.index)) return std::nullopt;
      b.add(a.mult.column(x.index * a.dim() + y.index), x.value * y.value);
    }
  return b.build();
}

SparseVector multiply(const AlgebraData& a, const SparseVector& u, const SparseVector& v) {
  auto p = try_multiply(a, u, v);
  if (!p) throw TruncationOverflow("product leaves the truncation");
  return std::move(*p);
}

std::optional<SparseVector> try_multiply_tensor(const AlgebraData& a, const SparseVector& u, const SparseVector& v,
                                                std::size_t k) {
  std::size_t n = a.dim();
  auto split = [&](std::size_t flat) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = k; i-- > 0;) {
      idx[i] = flat % n;
      flat /= n;
    }
    return idx;
  };
  VectorBuilder out;
  for (const auto& x : u) {
    auto xi = split(x.index);
    for (const auto& y : v) {
      auto yi = split(y.index);
      // Expand the product of the k factor products.
      std::vector<Entry> acc{{0, x.value * y.value}};
      for (std::size_t i = 0; i < k; ++i) {
        if (!a.product_defined(xi[i], yi[i])) return std::nullopt;
        const auto& col = a.mult.column(xi[i] * n + yi[i]);
        std::vector<Entry> next;
        next.reserve(acc.size() * col.nnz());
        for (const auto& e : acc)
          for (const auto& c : col) next.push_back({e.index * n + c.index, e.value * c.value});
        acc = std::move(next);
        if (acc.empty()) break;
      }
      for (auto& e : acc) out.add(e.index, e.value);
    }
  }
  return out.build();
}

LinearMap structure_on(const AlgebraData& a, const LinearMap& basis, const LinearMap& projection) {
  const Space& s = basis.domain();
  LinearMap m(tensor(s, s), s);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      m.set_column(i * s.dim() + j, projection(multiply(a, basis.column(i), basis.column(j))));
  return m;
}

CheckResult check_associative(std::string name, const AlgebraData& a, const CheckOptions& opt) {
  std::size_t n = a.dim();
  return run_check<SparseVector>(
      std::move(name), {a.space, a.space, a.space}, a.space,
      [&](std::span<const std::size_t> t) -> std::optional<std::pair<SparseVector, SparseVector>> {
        if (a.truncation && !a.truncation->fits(t)) return std::nullopt;
        const auto& xy = a.mult.column(t[0] * n + t[1]);
        const auto& yz = a.mult.column(t[1] * n + t[2]);
        VectorBuilder l, r;
        for (const auto& e : xy) l.add(a.mult.column(e.index * n + t[2]), e.value);
        for (const auto& e : yz) r.add(a.mult.column(t[0] * n + e.index), e.value);
        return std::pair(l.build(), r.build());
      },
      opt);
}

CheckReport check_algebra(const AlgebraData& a, const CheckOptions& opt) {
  validate(a);
  CheckReport rep;
  rep.add(check_associative("assoc", a, opt));
  std::size_t n = a.dim();
  auto unit_side = [&](bool left) {
    return [&a, n, left](std::span<const std::size_t> t) -> std::optional<std::pair<SparseVector, SparseVector>> {
      VectorBuilder b;
      for (const auto& e : a.unit) {
        std::size_t col = left ? e.index * n + t[0] : t[0] * n + e.index;
        b.add(a.mult.column(col), e.value);
      }
      return std::pair(b.build(), SparseVector::unit(t[0]));
    };
  };
  rep.add(run_check<SparseVector>("unit-left", {a.space}, a.space, unit_side(true), opt));
  rep.add(run_check<SparseVector>("unit-right", {a.space}, a.space, unit_side(false), opt));
  return rep;
}

CheckReport check_coalgebra(const CoalgebraData& c, const CheckOptions& opt) {
  validate(c);
  CheckReport rep;
  std::size_t n = c.dim();
  Space cc = tensor(c.space, c.space);
  Space ccc = tensor(cc, c.space);
  rep.add(run_check<SparseVector>(
      "coassoc", {c.space}, ccc,
      [&](std::span<const std::size_t> t) {
        const auto& d = c.comult.column(t[0]);
        return std::optional(std::pair(apply_left(c.comult, d, n), apply_right(c.comult, d)));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "counit-left", {c.space}, c.space,
      [&](std::span<const std::size_t> t) {
        return std::optional(std::pair(apply_left(c.counit, c.comult.column(t[0]), n), SparseVector::unit(t[0])));
      },
      opt));
  rep.add(run_check<SparseVector>(
      "counit-right", {c.space}, c.space,
      [&](std::span<const std::size_t> t) {
        return std::optional(std::pair(apply_right(c.counit, c.comult.column(t[0])), SparseVector::unit(t[0])));
      },
      opt));
  return rep;
}

}  // namespace wbalg
