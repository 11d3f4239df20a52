#include "ptw/rational.hpp"

#include <cctype>

#include "ptw/errors.hpp"

namespace ptw {

GraphError::GraphError(std::vector<std::string> violations)
    : InputError([&] {
        std::string msg = "invalid graph:";
        for (const auto& v : violations) msg += " " + v + ";";
        return msg;
      }()),
      violations_(std::move(violations)) {}

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw InputError("malformed rational '" + text + "'");
  }
  mpz_class p(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class q(den, 10);
  if (q == 0) throw InputError("zero denominator in '" + text + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational pow(const Rational& q, long e) {
  if (e < 0) {
    if (q == 0) throw MathError("zero raised to a negative power");
    return pow(Rational(1) / q, -e);
  }
  Rational result(1);
  Rational base = q;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace ptw
