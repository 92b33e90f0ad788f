// rational.cpp
#include "cyclo/rational.hpp"

#include <cctype>
#include <string>

#include "cyclo/errors.hpp"

namespace cyclo {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty rational");
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
      throw InputError("malformed rational: " + s);
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw InputError("malformed rational: " + s);
  if (r.get_den() == 0) throw InputError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

long to_long(const Rational& r) {
  if (!is_integer(r)) throw Error("expected an integer, got " + to_string(r));
  if (!r.get_num().fits_slong_p()) throw Error("integer out of range: " + to_string(r));
  return r.get_num().get_si();
}

}  // namespace cyclo
