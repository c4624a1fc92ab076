#pragma once

#include <stdexcept>
#include <string>

namespace wbalg {

// Base for every error the library raises on bad input.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error("DimensionMismatch", what) {}
};

class TruncationOverflow : public Error {
 public:
  explicit TruncationOverflow(const std::string& what) : Error("TruncationOverflow", what) {}
};

}  // namespace wbalg
