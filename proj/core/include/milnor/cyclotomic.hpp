#pragma once

#include <string>
#include <vector>

#include "milnor/rational.hpp"

namespace milnor {

int euler_phi(int m);

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
/// The polynomial is monic with integer coefficients; results are cached.
const std::vector<Rational>& cyclotomic_polynomial(int m);

/// Element of Q(zeta_m), stored in the power basis 1, z, ..., z^{phi(m)-1}
/// of Q[t]/Phi_m(t). Reduction modulo Phi_m is canonical, so equality is
/// coefficient-wise and there is no representative ambiguity. Values are
/// immutable after construction.
class Cyclo {
 public:
  explicit Cyclo(int conductor);  // zero
  Cyclo(int conductor, const Rational& constant);
  Cyclo(int conductor, long long constant);

  static Cyclo zeta(int conductor);
  /// Canonical representative of an arbitrary polynomial in zeta.
  static Cyclo from_poly(int conductor, const std::vector<Rational>& coeffs);

  int conductor() const { return conductor_; }
  /// Length euler_phi(conductor), constant term first.
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Cyclo operator+(const Cyclo& other) const;
  Cyclo operator-(const Cyclo& other) const;
  Cyclo operator*(const Cyclo& other) const;
  Cyclo operator/(const Cyclo& other) const;
  Cyclo operator-() const;
  Cyclo operator*(const Rational& scalar) const;
  bool operator==(const Cyclo& other) const;

  Cyclo inverse() const;
  Cyclo pow(unsigned exponent) const;

  /// True when the element lies in Q, i.e. all non-constant coefficients
  /// vanish.
  bool is_rational() const;
  /// The constant coefficient; meaningful mainly when is_rational().
  const Rational& rational_part() const { return coeffs_[0]; }

  std::string str() const;  // e.g. "-1 - z3", "1/2 + z4"

 private:
  int conductor_;
  std::vector<Rational> coeffs_;
};

/// Spec operation: canonical representative of an integer/rational
/// polynomial in zeta_m.
Cyclo cyclo_reduce(const std::vector<Rational>& poly_coeffs, int conductor);

bool is_zero(const Cyclo& value);
void check_same_field(const Cyclo& a, const Cyclo& b);

/// Total order (lexicographic on coefficients); used for canonical
/// hyperplane ordering, not for any algebraic meaning.
int compare(const Cyclo& a, const Cyclo& b);
inline bool operator<(const Cyclo& a, const Cyclo& b) {
  return compare(a, b) < 0;
}

}  // namespace milnor
