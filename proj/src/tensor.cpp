#include "wbalg/tensor.hpp"

#include <map>

#include "wbalg/errors.hpp"

namespace wbalg {

namespace {

std::vector<Space> atomic_factors(const Space& s) {
  std::vector<Space> out;
  for (std::size_t k = 0; k < s.factor_count(); ++k) out.push_back(s.factor(k));
  return out;
}

std::vector<std::size_t> decode(std::size_t flat, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> idx(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    idx[k] = flat % dims[k];
    flat /= dims[k];
  }
  return idx;
}

}  // namespace

Tensor::Tensor(std::vector<Space> factors, SparseVector values)
    : factors_(std::move(factors)), values_(std::move(values)) {
  std::size_t total = 1;
  for (const auto& f : factors_) total *= f.dim();
  if (!values_.is_zero() && values_.entries().back().index >= total)
    throw DimensionMismatch("tensor entry outside its space");
}

Tensor Tensor::from_map(const LinearMap& f) {
  auto factors = atomic_factors(f.codomain());
  auto dom = atomic_factors(f.domain());
  factors.insert(factors.end(), dom.begin(), dom.end());
  std::size_t n = f.domain().dim();
  VectorBuilder b;
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& e : f.column(j)) b.add(e.index * n + j, e.value);
  return Tensor(std::move(factors), b.build());
}

Tensor Tensor::from_vector(const Space& space, SparseVector values) {
  return Tensor(atomic_factors(space), std::move(values));
}

Space Tensor::space() const {
  Space s;
  for (const auto& f : factors_) s = tensor(s, f);
  return s;
}

std::vector<std::size_t> Tensor::dims() const {
  std::vector<std::size_t> d;
  for (const auto& f : factors_) d.push_back(f.dim());
  return d;
}

std::vector<std::pair<std::vector<std::size_t>, Scalar>> Tensor::items() const {
  auto d = dims();
  std::vector<std::pair<std::vector<std::size_t>, Scalar>> out;
  for (const auto& e : values_) out.emplace_back(decode(e.index, d), e.value);
  return out;
}

Tensor contract(const Tensor& t, std::span<const std::size_t> tf, const Tensor& s,
                std::span<const std::size_t> sf) {
  if (tf.size() != sf.size()) throw DimensionMismatch("contraction index lists differ in length");
  for (std::size_t k = 0; k < tf.size(); ++k)
    if (!(t.factors().at(tf[k]) == s.factors().at(sf[k])))
      throw DimensionMismatch("contracted factors differ");

  auto split = [](const Tensor& x, std::span<const std::size_t> matched) {
    std::vector<bool> used(x.factors().size(), false);
    for (auto k : matched) used[k] = true;
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < used.size(); ++k)
      if (!used[k]) free.push_back(k);
    return free;
  };
  auto tfree = split(t, tf);
  auto sfree = split(s, sf);
  auto td = t.dims();
  auto sd = s.dims();
  std::size_t s_free_dim = 1;
  for (auto k : sfree) s_free_dim *= sd[k];

  auto flat_of = [](const std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims,
                    const std::vector<std::size_t>& which) {
    std::size_t f = 0;
    for (auto k : which) f = f * dims[k] + idx[k];
    return f;
  };

  std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, const Scalar*>>> by_key;
  for (const auto& e : s.values()) {
    auto idx = decode(e.index, sd);
    std::vector<std::size_t> key;
    for (auto k : sf) key.push_back(idx[k]);
    by_key[key].emplace_back(flat_of(idx, sd, sfree), &e.value);
  }

  VectorBuilder b;
  for (const auto& e : t.values()) {
    auto idx = decode(e.index, td);
    std::vector<std::size_t> key;
    for (auto k : tf) key.push_back(idx[k]);
    auto it = by_key.find(key);
    if (it == by_key.end()) continue;
    std::size_t base = flat_of(idx, td, tfree) * s_free_dim;
    for (const auto& [rest, val] : it->second) b.add(base + rest, e.value * *val);
  }

  std::vector<Space> factors;
  for (auto k : tfree) factors.push_back(t.factors()[k]);
  for (auto k : sfree) factors.push_back(s.factors()[k]);
  return Tensor(std::move(factors), b.build());
}

Tensor permute(const Tensor& t, std::span<const std::size_t> order) {
  if (order.size() != t.factors().size()) throw DimensionMismatch("permutation arity");
  auto d = t.dims();
  std::vector<Space> factors;
  std::vector<std::size_t> nd;
  for (auto k : order) {
    factors.push_back(t.factors().at(k));
    nd.push_back(d[k]);
  }
  VectorBuilder b;
  for (const auto& e : t.values()) {
    auto idx = decode(e.index, d);
    std::size_t f = 0;
    for (std::size_t k = 0; k < order.size(); ++k) f = f * nd[k] + idx[order[k]];
    b.add(f, e.value);
  }
  return Tensor(std::move(factors), b.build());
}

}  // namespace wbalg
