#include "milnor/prime_field.hpp"

#include "milnor/errors.hpp"

namespace milnor {

namespace {

long long reduce(long long value, long long p) {
  long long r = value % p;
  return r < 0 ? r + p : r;
}

// Extended Euclid; returns x with a*x = gcd(a, p) (mod p).
long long mod_inverse(long long a, long long p) {
  long long old_r = a, r = p;
  long long old_s = 1, s = 0;
  while (r != 0) {
    long long q = old_r / r;
    long long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return reduce(old_s, p);
}

}  // namespace

bool is_prime(long long candidate) {
  if (candidate < 2) return false;
  if (candidate % 2 == 0) return candidate == 2;
  for (long long f = 3; f * f <= candidate; f += 2) {
    if (candidate % f == 0) return false;
  }
  return true;
}

Fp::Fp(long long value, long long modulus) : value_(0), modulus_(modulus) {
  if (modulus > (1LL << 31)) {
    throw InputError("modulus-too-large",
                     "prime moduli above 2^31 are not supported");
  }
  if (!is_prime(modulus)) {
    throw InputError("not-prime",
                     "modulus " + std::to_string(modulus) + " is not prime");
  }
  value_ = reduce(value, modulus);
}

void check_same_field(const Fp& a, const Fp& b) {
  if (a.modulus() != b.modulus()) {
    throw InputError("field-mismatch",
                     "mixed prime fields F_" + std::to_string(a.modulus()) +
                         " and F_" + std::to_string(b.modulus()));
  }
}

Fp Fp::operator+(const Fp& other) const {
  check_same_field(*this, other);
  return Fp(Unchecked{}, reduce(value_ + other.value_, modulus_), modulus_);
}

Fp Fp::operator-(const Fp& other) const {
  check_same_field(*this, other);
  return Fp(Unchecked{}, reduce(value_ - other.value_, modulus_), modulus_);
}

Fp Fp::operator*(const Fp& other) const {
  check_same_field(*this, other);
  return Fp(Unchecked{}, reduce(value_ * other.value_, modulus_), modulus_);
}

Fp Fp::operator/(const Fp& other) const { return *this * other.inverse(); }

Fp Fp::operator-() const {
  return Fp(Unchecked{}, reduce(-value_, modulus_), modulus_);
}

bool Fp::operator==(const Fp& other) const {
  check_same_field(*this, other);
  return value_ == other.value_;
}

Fp Fp::inverse() const {
  if (value_ == 0) {
    throw PreconditionError("division-by-zero",
                            "inverse of 0 in F_" + std::to_string(modulus_));
  }
  return Fp(Unchecked{}, mod_inverse(value_, modulus_), modulus_);
}

std::string Fp::str() const {
  return std::to_string(value_) + " mod " + std::to_string(modulus_);
}

}  // namespace milnor
