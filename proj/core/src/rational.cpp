#include "milnor/rational.hpp"

#include <cctype>

#include "milnor/errors.hpp"

namespace milnor {

Rational rational_from_string(const std::string& text) {
  std::string trimmed;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
  }
  if (trimmed.empty()) {
    throw InputError("bad-rational", "empty rational literal");
  }
  try {
    mpq_class value(trimmed);
    if (value.get_den() == 0) {
      throw InputError("bad-rational", "zero denominator in '" + text + "'");
    }
    value.canonicalize();
    return value;
  } catch (const std::invalid_argument&) {
    throw InputError("bad-rational", "not a rational literal: '" + text + "'");
  }
}

Rational make_rational(long long num, long long den) {
  if (den == 0) {
    throw InputError("bad-rational", "zero denominator");
  }
  mpq_class value(static_cast<long>(num), static_cast<long>(den));
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace milnor
