#include "wbalg/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace wbalg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in scalar '" + std::string(text) + "'");
  Scalar q(mpz_class(std::string(num), 10), d);
  q.canonicalize();
  return negative ? Scalar(-q) : q;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

}  // namespace wbalg
