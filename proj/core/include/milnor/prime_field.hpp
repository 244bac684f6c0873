#pragma once

#include <string>

namespace milnor {

/// Deterministic trial division. Intended for desk-scale moduli.
bool is_prime(long long candidate);

/// Element of the prime field F_p. Every element carries its modulus, so a
/// matrix accidentally mixing moduli is rejected at the first operation.
class Fp {
 public:
  /// Validates primality of `modulus` and reduces `value` into [0, p).
  Fp(long long value, long long modulus);

  long long value() const { return value_; }
  long long modulus() const { return modulus_; }

  Fp operator+(const Fp& other) const;
  Fp operator-(const Fp& other) const;
  Fp operator*(const Fp& other) const;
  Fp operator/(const Fp& other) const;
  Fp operator-() const;
  bool operator==(const Fp& other) const;

  Fp inverse() const;
  std::string str() const;

 private:
  struct Unchecked {};
  Fp(Unchecked, long long value, long long modulus)
      : value_(value), modulus_(modulus) {}

  long long value_;
  long long modulus_;
};

inline bool is_zero(const Fp& a) { return a.value() == 0; }
void check_same_field(const Fp& a, const Fp& b);

}  // namespace milnor
