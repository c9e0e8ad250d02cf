#include "hornsys/rational.hpp"

#include "hornsys/errors.hpp"

namespace hornsys {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  for (char c : s) {
    if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9')))
      throw ParseError("bad character in rational literal: " + s);
  }
  try {
    Rational q(s);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("unparsable rational literal: " + s);
  }
}

std::string to_string(const Rational& q) {
  return q.get_str();
}

}  // namespace hornsys
