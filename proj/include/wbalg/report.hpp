#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "wbalg/tensor.hpp"

namespace wbalg {

enum class Status { pass, fail, skip };

std::string_view to_string(Status s);

// An input tuple on which two sides of an identity were compared.
struct Witness {
  std::vector<std::size_t> tuple;
  std::vector<std::string> labels;
  Tensor lhs;
  Tensor rhs;
};

struct CheckResult {
  std::string name;
  Status status = Status::pass;
  std::uint64_t verified = 0;
  std::uint64_t skipped = 0;  // out of truncation
  std::uint64_t failed = 0;
  bool sampled = false;
  std::optional<Witness> witness;  // smallest failing tuple
  std::string note;
};

// A claim that was evaluated and found not to hold; informational only.
struct Discrepancy {
  std::string name;
  std::string description;
  std::optional<Witness> witness;
};

struct CheckReport {
  std::string subject;
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<Discrepancy> discrepancies;

  void add(CheckResult r) { checks.push_back(std::move(r)); }
  void add_fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
  // Appends other's entries, prefixing their names.
  void merge(const CheckReport& other, std::string_view prefix = "");
  bool passed() const;
  bool has_skips() const;
  const CheckResult* find(std::string_view name) const;
  bool passed(std::string_view name) const;
};

struct CheckOptions {
  unsigned threads = 1;
  // When set and the tuple count exceeds it, that many tuples are drawn with a fixed seed.
  std::optional<std::uint64_t> sample_budget;
  std::uint64_t seed = 20240601;
};

Status status_from_counts(std::uint64_t failed, std::uint64_t skipped);
CheckResult boolean_check(std::string name, bool ok, std::string note = {});
// Marks an identity whose evaluation leaves the truncation.
CheckResult skipped_check(std::string name, std::string note = "out of truncation");
// One comparison of two vectors in `space`.
CheckResult equality_check(std::string name, const Space& space, const SparseVector& lhs, const SparseVector& rhs,
                           std::vector<std::string> labels = {});
// Column-by-column comparison of two maps with equal domain and codomain.
CheckResult map_equality_check(std::string name, const LinearMap& lhs, const LinearMap& rhs);

namespace detail {

inline SparseVector as_vector(const SparseVector& v) { return v; }
inline SparseVector as_vector(const Scalar& s) { return SparseVector::unit(0, s); }

template <class V>
struct ChunkResult {
  std::uint64_t verified = 0, skipped = 0, failed = 0;
  std::optional<std::pair<std::vector<std::size_t>, std::pair<V, V>>> first;
  std::exception_ptr error;
};

}  // namespace detail

// Evaluates an identity on every tuple of basis indices of `args`. `eval`
// returns nullopt to skip a tuple, otherwise both sides as V (SparseVector in
// `result`, or Scalar). Work is split into contiguous blocks across threads;
// the reported witness is always the smallest failing tuple.
template <class V, class Eval>
CheckResult run_check(std::string name, const std::vector<Space>& args, const Space& result, Eval&& eval,
                      const CheckOptions& opt = {}) {
  std::vector<std::size_t> dims;
  std::uint64_t total = 1;
  for (const auto& a : args) {
    dims.push_back(a.dim());
    total *= a.dim();
  }
  CheckResult out;
  out.name = std::move(name);

  std::vector<std::uint64_t> sample;
  bool sampled = opt.sample_budget && total > *opt.sample_budget;
  if (sampled) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    sample.reserve(*opt.sample_budget);
    for (std::uint64_t i = 0; i < *opt.sample_budget; ++i) sample.push_back(pick(rng));
    std::sort(sample.begin(), sample.end());
    sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
  }
  std::uint64_t count = sampled ? sample.size() : total;
  unsigned threads = std::max(1u, opt.threads);
  if (count < 64 * threads) threads = 1;

  auto decode = [&](std::uint64_t flat, std::vector<std::size_t>& t) {
    for (std::size_t k = dims.size(); k-- > 0;) {
      t[k] = static_cast<std::size_t>(flat % dims[k]);
      flat /= dims[k];
    }
  };
  auto advance = [&](std::vector<std::size_t>& t) {
    for (std::size_t k = dims.size(); k-- > 0;) {
      if (++t[k] < dims[k]) return;
      t[k] = 0;
    }
  };

  std::vector<detail::ChunkResult<V>> parts(threads);
  auto work = [&](unsigned w) {
    auto& part = parts[w];
    try {
      std::uint64_t lo = count * w / threads;
      std::uint64_t hi = count * (w + 1) / threads;
      std::vector<std::size_t> t(dims.size());
      if (lo < hi && !sampled) decode(lo, t);
      for (std::uint64_t i = lo; i < hi; ++i) {
        if (sampled) decode(sample[i], t);
        std::optional<std::pair<V, V>> sides = eval(std::span<const std::size_t>(t));
        if (!sides) {
          ++part.skipped;
        } else if (sides->first == sides->second) {
          ++part.verified;
        } else {
          ++part.failed;
          if (!part.first) part.first.emplace(t, std::move(*sides));
        }
        if (!sampled) advance(t);
      }
    } catch (...) {
      part.error = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (auto& part : parts) {
    if (part.error) std::rethrow_exception(part.error);
    out.verified += part.verified;
    out.skipped += part.skipped;
    out.failed += part.failed;
    if (part.first && !out.witness) {
      Witness w;
      w.tuple = part.first->first;
      for (std::size_t k = 0; k < args.size(); ++k) w.labels.push_back(args[k].label(w.tuple[k]));
      w.lhs = Tensor::from_vector(result, detail::as_vector(part.first->second.first));
      w.rhs = Tensor::from_vector(result, detail::as_vector(part.first->second.second));
      out.witness = std::move(w);
    }
  }
  out.sampled = sampled;
  out.status = status_from_counts(out.failed, out.skipped);
  return out;
}

}  // namespace wbalg
