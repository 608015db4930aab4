#include "cmtilt/field.hpp"

#include <charconv>

namespace cmtilt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  FieldSpec s;
  s.kind = Kind::PrimeField;
  s.p = p;
  return s;
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    const char* first = text.data() + 3;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc() || ptr != last || first == last || p > 0xffffffffull)
      throw Error(ErrorKind::InvalidInput, "bad field modulus in '" + text + "'");
    return prime(static_cast<std::uint32_t>(p));
  }
  throw Error(ErrorKind::InvalidInput, "field must be 'q' or 'fp:<p>', got '" + text + "'");
}

std::string FieldSpec::name() const {
  return kind == Kind::Rationals ? "q" : "fp:" + std::to_string(p);
}

}  // namespace cmtilt
