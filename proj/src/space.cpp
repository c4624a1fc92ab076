#include "wbalg/space.hpp"

#include "wbalg/errors.hpp"

namespace wbalg {

Basis::Basis(std::vector<std::string> labels) : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (!index_.emplace(labels_[i], i).second)
      throw Error("DuplicateLabel", "basis label '" + labels_[i] + "' appears twice");
}

std::optional<std::size_t> Basis::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Space::Space(std::vector<std::string> labels) {
  factors_.push_back(std::make_shared<const Basis>(std::move(labels)));
  dim_ = factors_.front()->size();
}

Space Space::factor(std::size_t k) const {
  Space s;
  s.factors_.push_back(factors_.at(k));
  s.dim_ = s.factors_.front()->size();
  return s;
}

std::string Space::label(std::size_t i) const {
  if (factors_.empty()) return "1";
  if (factors_.size() == 1) return factors_.front()->label(i);
  auto idx = unflatten(i);
  std::string out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += "⊗";
    out += factors_[k]->label(idx[k]);
  }
  return out;
}

std::vector<std::string> Space::labels() const {
  std::vector<std::string> out;
  out.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out.push_back(label(i));
  return out;
}

std::optional<std::size_t> Space::find(std::string_view label) const {
  if (factors_.size() != 1) return std::nullopt;
  return factors_.front()->find(label);
}

std::vector<std::size_t> Space::unflatten(std::size_t i) const {
  std::vector<std::size_t> idx(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    std::size_t d = factors_[k]->size();
    idx[k] = i % d;
    i /= d;
  }
  return idx;
}

std::size_t Space::flatten(std::span<const std::size_t> index) const {
  if (index.size() != factors_.size()) throw DimensionMismatch("index arity differs from factor count");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] >= factors_[k]->size()) throw DimensionMismatch("index out of range");
    flat = flat * factors_[k]->size() + index[k];
  }
  return flat;
}

Space tensor(const Space& a, const Space& b) {
  Space s;
  s.factors_ = a.factors_;
  s.factors_.insert(s.factors_.end(), b.factors_.begin(), b.factors_.end());
  s.dim_ = a.dim_ * b.dim_;
  return s;
}

Space tensor(const Space& a, const Space& b, const Space& c) { return tensor(tensor(a, b), c); }

bool operator==(const Space& a, const Space& b) {
  if (a.dim_ != b.dim_ || a.factors_.size() != b.factors_.size()) return false;
  for (std::size_t k = 0; k < a.factors_.size(); ++k) {
    if (a.factors_[k] == b.factors_[k]) continue;
    if (a.factors_[k]->labels() != b.factors_[k]->labels()) return false;
  }
  return true;
}

}  // namespace wbalg
