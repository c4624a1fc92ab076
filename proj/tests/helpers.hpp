#pragma once

#include <string>
#include <vector>

#include "doctest.h"
#include "wbalg/report.hpp"

namespace testing {

inline std::size_t idx(const wbalg::Space& s, const std::string& label) {
  auto i = s.find(label);
  REQUIRE_MESSAGE(i.has_value(), label);
  return *i;
}

inline wbalg::SparseVector sum_of(const wbalg::Space& s, const std::vector<std::string>& labels) {
  wbalg::VectorBuilder b;
  for (const auto& l : labels) b.add(idx(s, l), 1);
  return b.build();
}

inline bool all_pass(const wbalg::CheckReport& r) {
  bool ok = true;
  for (const auto& c : r.checks)
    if (c.status != wbalg::Status::pass) {
      MESSAGE("check " << c.name << " is " << wbalg::to_string(c.status) << " " << c.note);
      ok = false;
    }
  return ok;
}

inline std::string fact(const wbalg::CheckReport& r, const std::string& key) {
  for (const auto& [k, v] : r.facts)
    if (k == key) return v;
  return "";
}

inline bool has_discrepancy(const wbalg::CheckReport& r, const std::string& name) {
  for (const auto& d : r.discrepancies)
    if (d.name == name) return true;
  return false;
}

}  // namespace testing
