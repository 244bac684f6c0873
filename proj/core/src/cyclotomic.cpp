#include "milnor/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "milnor/errors.hpp"

namespace milnor {

namespace {

using Poly = std::vector<Rational>;  // constant term first

int degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (!is_zero(p[i])) return i;
  }
  return -1;
}

void trim(Poly& p) { p.resize(static_cast<size_t>(degree(p) + 1)); }

Poly mul(const Poly& a, const Poly& b) {
  if (degree(a) < 0 || degree(b) < 0) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  trim(out);
  return out;
}

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Division with remainder; the divisor must be nonzero.
void divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
  int dd = degree(den);
  rem = num;
  trim(rem);
  quot.assign(1, Rational(0));
  int dr = degree(rem);
  if (dr >= dd) quot.assign(static_cast<size_t>(dr - dd + 1), Rational(0));
  while ((dr = degree(rem)) >= dd && dr >= 0) {
    Rational factor = rem[static_cast<size_t>(dr)] / den[static_cast<size_t>(dd)];
    quot[static_cast<size_t>(dr - dd)] = factor;
    for (int i = 0; i <= dd; ++i) {
      rem[static_cast<size_t>(dr - dd + i)] -= factor * den[static_cast<size_t>(i)];
    }
    trim(rem);
    if (rem.empty()) break;
  }
  trim(quot);
}

// Extended Euclid over Q[t]: returns (g, u) with u*a = g (mod b),
// g the (nonzero) gcd of a and b.
std::pair<Poly, Poly> half_ext_gcd(Poly a, Poly b) {
  Poly u_prev{Rational(1)};
  Poly u_cur{};
  while (degree(b) >= 0) {
    Poly q, r;
    divmod(a, b, q, r);
    Poly u_next = sub(u_prev, mul(q, u_cur));
    a = b;
    b = r;
    u_prev = u_cur;
    u_cur = u_next;
  }
  return {a, u_prev};
}

std::vector<int> divisors(int m) {
  std::vector<int> out;
  for (int d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      if (d != m / d) out.push_back(m / d);
    }
  }
  return out;
}

// Computes Phi_m into the cache (x^m - 1 divided by all proper Phi_d).
// The caller holds the cache lock.
const Poly& cyclo_poly_locked(int m, std::map<int, Poly>& cache) {
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  Poly value(static_cast<size_t>(m + 1), Rational(0));
  value[0] = Rational(-1);
  value[static_cast<size_t>(m)] = Rational(1);
  for (int d : divisors(m)) {
    if (d == m) continue;
    const Poly& phi_d = cyclo_poly_locked(d, cache);
    Poly quot, rem;
    divmod(value, phi_d, quot, rem);
    value = quot;
  }
  return cache.emplace(m, std::move(value)).first->second;
}

std::string rational_term(const Rational& coeff, int power, bool first) {
  std::ostringstream os;
  Rational mag = abs(coeff);
  bool negative = sgn(coeff) < 0;
  if (first) {
    if (negative) os << "-";
  } else {
    os << (negative ? " - " : " + ");
  }
  if (power == 0) {
    os << to_string(mag);
  } else {
    if (mag != 1) os << to_string(mag);
    os << "z";
    if (power > 1) os << "^" << power;
  }
  return os.str();
}

}  // namespace

int euler_phi(int m) {
  if (m < 1) throw PreconditionError("bad-conductor", "conductor must be >= 1");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Rational>& cyclotomic_polynomial(int m) {
  if (m < 1) throw PreconditionError("bad-conductor", "conductor must be >= 1");
  static std::map<int, Poly> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  return cyclo_poly_locked(m, cache);
}

Cyclo::Cyclo(int conductor)
    : conductor_(conductor),
      coeffs_(static_cast<size_t>(euler_phi(conductor)), Rational(0)) {}

Cyclo::Cyclo(int conductor, const Rational& constant) : Cyclo(conductor) {
  coeffs_[0] = constant;
}

Cyclo::Cyclo(int conductor, long long constant)
    : Cyclo(conductor, Rational(static_cast<long>(constant))) {}

Cyclo Cyclo::zeta(int conductor) {
  Poly z{Rational(0), Rational(1)};
  return from_poly(conductor, z);
}

Cyclo Cyclo::from_poly(int conductor, const std::vector<Rational>& coeffs) {
  const Poly& phi = cyclotomic_polynomial(conductor);
  Poly quot, rem;
  Poly input = coeffs;
  trim(input);
  if (input.empty()) return Cyclo(conductor);
  divmod(input, phi, quot, rem);
  Cyclo out(conductor);
  for (size_t i = 0; i < rem.size(); ++i) out.coeffs_[i] = rem[i];
  return out;
}

Cyclo cyclo_reduce(const std::vector<Rational>& poly_coeffs, int conductor) {
  return Cyclo::from_poly(conductor, poly_coeffs);
}

void check_same_field(const Cyclo& a, const Cyclo& b) {
  if (a.conductor() != b.conductor()) {
    throw InputError("field-mismatch",
                     "mixed cyclotomic fields Q(zeta_" +
                         std::to_string(a.conductor()) + ") and Q(zeta_" +
                         std::to_string(b.conductor()) + ")");
  }
}

Cyclo Cyclo::operator+(const Cyclo& other) const {
  check_same_field(*this, other);
  Cyclo out(conductor_);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[i] = coeffs_[i] + other.coeffs_[i];
  }
  return out;
}

Cyclo Cyclo::operator-(const Cyclo& other) const {
  check_same_field(*this, other);
  Cyclo out(conductor_);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[i] = coeffs_[i] - other.coeffs_[i];
  }
  return out;
}

Cyclo Cyclo::operator*(const Cyclo& other) const {
  check_same_field(*this, other);
  Poly product = mul(coeffs_, other.coeffs_);
  return from_poly(conductor_, product);
}

Cyclo Cyclo::operator/(const Cyclo& other) const {
  return *this * other.inverse();
}

Cyclo Cyclo::operator-() const {
  Cyclo out(conductor_);
  for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
  return out;
}

Cyclo Cyclo::operator*(const Rational& scalar) const {
  Cyclo out(conductor_);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[i] = coeffs_[i] * scalar;
  }
  return out;
}

bool Cyclo::operator==(const Cyclo& other) const {
  check_same_field(*this, other);
  return coeffs_ == other.coeffs_;
}

Cyclo Cyclo::inverse() const {
  if (is_zero(*this)) {
    throw PreconditionError("division-by-zero",
                            "inverse of 0 in Q(zeta_" +
                                std::to_string(conductor_) + ")");
  }
  // Phi_m is irreducible over Q, so gcd(self, Phi_m) is a nonzero constant.
  Poly self = coeffs_;
  trim(self);
  auto [g, u] = half_ext_gcd(self, cyclotomic_polynomial(conductor_));
  Rational constant = g[0];
  Poly scaled = u;
  for (Rational& c : scaled) c /= constant;
  return from_poly(conductor_, scaled);
}

Cyclo Cyclo::pow(unsigned exponent) const {
  Cyclo result(conductor_, Rational(1));
  Cyclo base = *this;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (!is_zero(coeffs_[i])) return false;
  }
  return true;
}

std::string Cyclo::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (is_zero(coeffs_[i])) continue;
    os << rational_term(coeffs_[i], static_cast<int>(i), first);
    first = false;
  }
  if (first) return "0";
  std::string text = os.str();
  // Tag the symbol with the conductor: z -> z3, z4, ...
  std::string out;
  for (size_t i = 0; i < text.size(); ++i) {
    out.push_back(text[i]);
    if (text[i] == 'z') out += std::to_string(conductor_);
  }
  return out;
}

bool is_zero(const Cyclo& value) {
  for (const Rational& c : value.coeffs()) {
    if (!is_zero(c)) return false;
  }
  return true;
}

int compare(const Cyclo& a, const Cyclo& b) {
  check_same_field(a, b);
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    int c = cmp(a.coeffs()[i], b.coeffs()[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace milnor
