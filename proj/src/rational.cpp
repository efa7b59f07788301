#include "peakalg/rational.hpp"

#include <stdexcept>

namespace peakalg {

std::string to_string(const Rational& r) {
  Rational c = r;  // mpq_class(p, q) is not reduced on construction
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] {
    return std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
  };
  if (text.empty()) throw bad();
  auto valid_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+') throw bad();
  if (num.front() == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer pow2(unsigned k) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, k);
  return out;
}

}  // namespace peakalg
