#include "wbalg/sparse.hpp"

#include <algorithm>

#include "wbalg/errors.hpp"

namespace wbalg {

namespace {

std::vector<Entry> merge(const std::vector<Entry>& a, std::span<const Entry> b, int sign) {
  std::vector<Entry> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->index < j->index)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->index < i->index) {
      out.push_back({j->index, sign > 0 ? j->value : Scalar(-j->value)});
      ++j;
    } else {
      Scalar s = sign > 0 ? Scalar(i->value + j->value) : Scalar(i->value - j->value);
      if (sgn(s) != 0) out.push_back({i->index, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

void check_same(const Space& a, const Space& b, const char* what) {
  if (!(a == b)) throw DimensionMismatch(what);
}

}  // namespace

SparseVector SparseVector::unit(std::size_t i, const Scalar& c) {
  SparseVector v;
  if (sgn(c) != 0) v.entries_.push_back({i, c});
  return v;
}

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.index < y.index; });
  SparseVector v;
  v.entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (!v.entries_.empty() && v.entries_.back().index == e.index) {
      v.entries_.back().value += e.value;
    } else {
      if (!v.entries_.empty() && sgn(v.entries_.back().value) == 0) v.entries_.pop_back();
      v.entries_.push_back(std::move(e));
    }
  }
  if (!v.entries_.empty() && sgn(v.entries_.back().value) == 0) v.entries_.pop_back();
  return v;
}

Scalar SparseVector::coefficient(std::size_t i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t k) { return e.index < k; });
  if (it != entries_.end() && it->index == i) return it->value;
  return 0;
}

SparseVector& SparseVector::operator+=(const SparseVector& other) {
  if (other.entries_.empty()) return *this;
  entries_ = merge(entries_, other.entries_, 1);
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& other) {
  if (other.entries_.empty()) return *this;
  entries_ = merge(entries_, other.entries_, -1);
  return *this;
}

SparseVector& SparseVector::operator*=(const Scalar& c) {
  if (sgn(c) == 0) {
    entries_.clear();
  } else {
    for (auto& e : entries_) e.value *= c;
  }
  return *this;
}

void VectorBuilder::add(const SparseVector& v, const Scalar& c) {
  if (sgn(c) == 0) return;
  for (const auto& e : v) raw_.push_back({e.index, e.value * c});
}

void VectorBuilder::add_kron(const SparseVector& u, const SparseVector& v, std::size_t dim_v, const Scalar& c) {
  if (sgn(c) == 0) return;
  for (const auto& a : u) {
    Scalar ac = a.value * c;
    for (const auto& b : v) raw_.push_back({a.index * dim_v + b.index, ac * b.value});
  }
}

SparseVector VectorBuilder::build() {
  auto v = SparseVector::from_entries(std::move(raw_));
  raw_.clear();
  return v;
}

SparseVector kron(const SparseVector& u, const SparseVector& v, std::size_t dim_v) {
  VectorBuilder b;
  b.add_kron(u, v, dim_v);
  return b.build();
}

LinearMap::LinearMap(Space domain, Space codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), columns_(domain_.dim()) {}

LinearMap::LinearMap(Space domain, Space codomain, std::vector<SparseVector> columns)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), columns_(std::move(columns)) {
  if (columns_.size() != domain_.dim()) throw DimensionMismatch("column count differs from domain dimension");
  for (const auto& c : columns_)
    if (!c.is_zero() && c.entries().back().index >= codomain_.dim())
      throw DimensionMismatch("column entry outside codomain");
}

LinearMap LinearMap::identity(const Space& s) {
  std::vector<SparseVector> cols;
  cols.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) cols.push_back(SparseVector::unit(i));
  return LinearMap(s, s, std::move(cols));
}

LinearMap LinearMap::functional(const Space& domain, const SparseVector& coefficients) {
  LinearMap f(domain, Space::ground());
  for (const auto& e : coefficients) f.set_column(e.index, SparseVector::unit(0, e.value));
  return f;
}

LinearMap LinearMap::vector(const Space& codomain, const SparseVector& v) {
  return LinearMap(Space::ground(), codomain, {v});
}

void LinearMap::set_column(std::size_t j, SparseVector v) {
  if (!v.is_zero() && v.entries().back().index >= codomain_.dim())
    throw DimensionMismatch("column entry outside codomain");
  columns_.at(j) = std::move(v);
}

SparseVector LinearMap::operator()(const SparseVector& v) const {
  if (v.nnz() == 1) {
    const auto& e = v.entries().front();
    SparseVector out = columns_.at(e.index);
    if (e.value != 1) out *= e.value;
    return out;
  }
  VectorBuilder b;
  for (const auto& e : v) b.add(columns_.at(e.index), e.value);
  return b.build();
}

std::size_t LinearMap::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.nnz();
  return n;
}

std::vector<SparseVector> LinearMap::rows() const {
  std::vector<std::vector<Entry>> raw(codomain_.dim());
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (const auto& e : columns_[j]) raw[e.index].push_back({j, e.value});
  std::vector<SparseVector> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.push_back(SparseVector::from_entries(std::move(r)));
  return out;
}

LinearMap LinearMap::transpose() const { return LinearMap(codomain_, domain_, rows()); }

LinearMap LinearMap::relabel(Space domain, Space codomain) const {
  if (domain.dim() != domain_.dim() || codomain.dim() != codomain_.dim())
    throw DimensionMismatch("relabel changes dimension");
  return LinearMap(std::move(domain), std::move(codomain), columns_);
}

LinearMap operator*(const LinearMap& g, const LinearMap& f) {
  check_same(g.domain_, f.codomain_, "composition of incompatible maps");
  std::vector<SparseVector> cols;
  cols.reserve(f.columns_.size());
  for (const auto& c : f.columns_) cols.push_back(g(c));
  return LinearMap(f.domain_, g.codomain_, std::move(cols));
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  check_same(a.domain_, b.domain_, "sum of maps with different domains");
  check_same(a.codomain_, b.codomain_, "sum of maps with different codomains");
  std::vector<SparseVector> cols(a.columns_.size());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = a.columns_[j] + b.columns_[j];
  return LinearMap(a.domain_, a.codomain_, std::move(cols));
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) { return a + Scalar(-1) * b; }

LinearMap operator*(const Scalar& c, const LinearMap& a) {
  std::vector<SparseVector> cols(a.columns_);
  for (auto& col : cols) col *= c;
  return LinearMap(a.domain_, a.codomain_, std::move(cols));
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.columns_ == b.columns_;
}

LinearMap kron(const LinearMap& f, const LinearMap& g) {
  Space dom = tensor(f.domain(), g.domain());
  Space cod = tensor(f.codomain(), g.codomain());
  std::vector<SparseVector> cols;
  cols.reserve(dom.dim());
  std::size_t dg = g.codomain().dim();
  for (const auto& fc : f.columns())
    for (const auto& gc : g.columns()) cols.push_back(kron(fc, gc, dg));
  return LinearMap(std::move(dom), std::move(cod), std::move(cols));
}

LinearMap flip(const Space& a, const Space& b) {
  std::vector<SparseVector> cols;
  cols.reserve(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) cols.push_back(SparseVector::unit(j * a.dim() + i));
  return LinearMap(tensor(a, b), tensor(b, a), std::move(cols));
}

SparseVector apply_kron(const LinearMap& f, const LinearMap& g, const SparseVector& v) {
  std::size_t dg = g.domain().dim();
  std::size_t cg = g.codomain().dim();
  VectorBuilder b;
  for (const auto& e : v) b.add_kron(f.column(e.index / dg), g.column(e.index % dg), cg, e.value);
  return b.build();
}

SparseVector apply_left(const LinearMap& f, const SparseVector& v, std::size_t dim_right) {
  VectorBuilder b;
  for (const auto& e : v) {
    std::size_t r = e.index % dim_right;
    for (const auto& c : f.column(e.index / dim_right)) b.add(c.index * dim_right + r, c.value * e.value);
  }
  return b.build();
}

SparseVector apply_right(const LinearMap& f, const SparseVector& v) {
  std::size_t df = f.domain().dim();
  std::size_t cf = f.codomain().dim();
  VectorBuilder b;
  for (const auto& e : v) {
    std::size_t l = e.index / df;
    for (const auto& c : f.column(e.index % df)) b.add(l * cf + c.index, c.value * e.value);
  }
  return b.build();
}

}  // namespace wbalg
