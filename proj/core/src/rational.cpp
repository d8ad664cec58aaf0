#include "oinv/rational.hpp"

#include <cctype>
#include <string>

#include "oinv/errors.hpp"

namespace oinv {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw Error("zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return Error("malformed rational '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  const std::size_t digits_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits_begin) throw bad();
  std::string numerator(text.substr(0, pos));
  if (numerator.front() == '+') numerator.erase(0, 1);
  Integer num(numerator);
  Integer den(1);
  if (pos < text.size()) {
    if (text[pos] != '/') throw bad();
    const std::size_t den_begin = ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_begin || pos != text.size()) throw bad();
    den = Integer(std::string(text.substr(den_begin)));
    if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace oinv
