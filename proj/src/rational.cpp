#include "polya/rational.hpp"

#include "polya/error.hpp"

#include <cctype>

namespace polya {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text, std::string_view field) {
  auto fail = [&](const char* why) -> Rational {
    throw Error(ErrorKind::Parse, "field '" + std::string(field) + "': " + why + " (got \"" +
                                      std::string(text) + "\")");
  };
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) return fail("malformed rational");
  if (slash == std::string_view::npos) return Rational(parse_integer(num_text));
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text)) return fail("malformed rational");
  const Integer den = parse_integer(den_text);
  if (den == 0) return fail("zero denominator");
  return Rational(parse_integer(num_text), den);
}

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace polya
