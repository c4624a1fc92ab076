#include "wbalg/report.hpp"

namespace wbalg {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skip: return "SKIP";
  }
  return "?";
}

void CheckReport::merge(const CheckReport& other, std::string_view prefix) {
  std::string p(prefix);
  for (auto c : other.checks) {
    c.name = p + c.name;
    checks.push_back(std::move(c));
  }
  for (const auto& [k, v] : other.facts) facts.emplace_back(p + k, v);
  for (auto d : other.discrepancies) {
    d.name = p + d.name;
    discrepancies.push_back(std::move(d));
  }
}

bool CheckReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::fail; });
}

bool CheckReport::has_skips() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::skip; });
}

const CheckResult* CheckReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool CheckReport::passed(std::string_view name) const {
  const auto* c = find(name);
  return c && c->status == Status::pass;
}

Status status_from_counts(std::uint64_t failed, std::uint64_t skipped) {
  if (failed) return Status::fail;
  if (skipped) return Status::skip;
  return Status::pass;
}

CheckResult boolean_check(std::string name, bool ok, std::string note) {
  CheckResult r;
  r.name = std::move(name);
  r.verified = ok ? 1 : 0;
  r.failed = ok ? 0 : 1;
  r.status = ok ? Status::pass : Status::fail;
  r.note = std::move(note);
  return r;
}

CheckResult skipped_check(std::string name, std::string note) {
  CheckResult r;
  r.name = std::move(name);
  r.status = Status::skip;
  r.skipped = 1;
  r.note = std::move(note);
  return r;
}

CheckResult equality_check(std::string name, const Space& space, const SparseVector& lhs, const SparseVector& rhs,
                           std::vector<std::string> labels) {
  CheckResult r = boolean_check(std::move(name), lhs == rhs);
  if (r.status == Status::fail) r.witness = Witness{{}, std::move(labels), Tensor::from_vector(space, lhs),
                                                    Tensor::from_vector(space, rhs)};
  return r;
}

CheckResult map_equality_check(std::string name, const LinearMap& lhs, const LinearMap& rhs) {
  if (!(lhs.domain() == rhs.domain()) || !(lhs.codomain() == rhs.codomain())) {
    return boolean_check(std::move(name), false, "maps have different domain or codomain");
  }
  return run_check<SparseVector>(
      std::move(name), {lhs.domain()}, lhs.codomain(),
      [&](std::span<const std::size_t> t) {
        return std::optional(std::pair(lhs.column(t[0]), rhs.column(t[0])));
      });
}

}  // namespace wbalg
