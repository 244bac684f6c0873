#include "milnor/aomoto.hpp"

namespace milnor {

namespace {

template <class R>
bool all_zero(const std::vector<R>& values) {
  for (const R& v : values) {
    if (!is_zero(v)) return false;
  }
  return true;
}

template <class R>
AomotoReport h1_central(const FlatList& flats, const std::vector<R>& weights,
                        const std::string& ring_name,
                        const std::string& weight_name) {
  const long long d = flats.d();
  if (all_zero(weights)) {
    // Zero differential: H^1 = A^1.
    return AomotoReport{d, d, ring_name, weight_name};
  }
  Matrix<R> wedge = wedge_matrix(flats, weights);
  long long kernel = d - rank_of(wedge);
  return AomotoReport{kernel - 1, kernel, ring_name, weight_name};
}

template <class R>
AomotoReport h1_projective(const FlatList& flats, const std::vector<R>& weights,
                           const std::string& ring_name,
                           const std::string& weight_name) {
  const long long d = flats.d();
  R sum = weights[0] - weights[0];
  for (const R& w : weights) sum = sum + w;
  if (!is_zero(sum)) {
    throw PreconditionError(
        "weight-sum-nonzero",
        "deconing needs sum of weights = 0 in the coefficient ring");
  }
  if (all_zero(weights)) {
    return AomotoReport{d - 1, d - 1, ring_name, weight_name};
  }
  // Restrict the wedge matrix to ker(boundary) spanned by e_i - e_{d-1}.
  Matrix<R> wedge = wedge_matrix(flats, weights);
  R zero = weights[0] - weights[0];
  Matrix<R> restricted(wedge.rows(), static_cast<int>(d - 1), zero);
  for (int r = 0; r < wedge.rows(); ++r) {
    for (int c = 0; c + 1 < static_cast<int>(d); ++c) {
      restricted.at(r, c) = wedge.at(r, c) - wedge.at(r, static_cast<int>(d - 1));
    }
  }
  long long kernel = (d - 1) - rank_of(restricted);
  return AomotoReport{kernel - 1, kernel, ring_name, weight_name};
}

}  // namespace

CoefficientRing CoefficientRing::prime(long long p) {
  if (!is_prime(p)) {
    throw InputError("not-prime",
                     "characteristic " + std::to_string(p) + " is not prime");
  }
  return {Kind::prime, p};
}

std::string CoefficientRing::name() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(p) + ")";
}

WeightVector WeightVector::all_ones(int d, CoefficientRing ring) {
  return WeightVector(ring, std::vector<Rational>(static_cast<size_t>(d), Rational(1)),
                      "all-ones");
}

WeightVector WeightVector::zero(int d, CoefficientRing ring) {
  return WeightVector(ring, std::vector<Rational>(static_cast<size_t>(d), Rational(0)),
                      "zero");
}

WeightVector WeightVector::from_rationals(std::vector<Rational> entries,
                                          CoefficientRing ring,
                                          std::string description) {
  return WeightVector(ring, std::move(entries), std::move(description));
}

WeightVector WeightVector::from_integers(const std::vector<long long>& entries,
                                         CoefficientRing ring,
                                         std::string description) {
  std::vector<Rational> rationals;
  rationals.reserve(entries.size());
  for (long long e : entries) rationals.emplace_back(std::to_string(e));
  return WeightVector(ring, std::move(rationals), std::move(description));
}

std::vector<Rational> WeightVector::as_rationals() const { return entries_; }

std::vector<Fp> WeightVector::as_fp() const {
  if (ring_.is_rational()) {
    throw InputError("ring-mismatch", "weight vector is over Q, not F_p");
  }
  std::vector<Fp> out;
  out.reserve(entries_.size());
  for (const Rational& r : entries_) {
    unsigned long p = static_cast<unsigned long>(ring_.p);
    long long num = static_cast<long long>(
        mpz_fdiv_ui(r.get_num().get_mpz_t(), p));
    long long den = static_cast<long long>(
        mpz_fdiv_ui(r.get_den().get_mpz_t(), p));
    if (den == 0) {
      throw InputError("weight-not-p-integral",
                       "weight " + to_string(r) + " has denominator divisible by " +
                           std::to_string(ring_.p));
    }
    out.push_back(Fp(num, ring_.p) / Fp(den, ring_.p));
  }
  return out;
}

bool WeightVector::is_zero_in_ring() const {
  if (ring_.is_rational()) {
    for (const Rational& r : entries_) {
      if (!is_zero(r)) return false;
    }
    return true;
  }
  for (const Fp& v : as_fp()) {
    if (!is_zero(v)) return false;
  }
  return true;
}

OS2Basis os2_basis(const FlatList& flats) {
  OS2Basis basis;
  long long offset = 0;
  for (size_t f = 0; f < flats.flats().size(); ++f) {
    const Rank2Flat& flat = flats.flats()[f];
    OS2Block block;
    block.flat_index = static_cast<int>(f);
    block.base = flat.members[0];
    block.others.assign(flat.members.begin() + 1, flat.members.end());
    block.row_offset = offset;
    offset += static_cast<long long>(block.others.size());
    basis.blocks.push_back(std::move(block));
  }
  basis.dimension = offset;
  return basis;
}

Matrix<Rational> wedge_matrix_q(const FlatList& flats, const WeightVector& w) {
  if (!w.ring().is_rational()) {
    throw InputError("ring-mismatch", "expected a rational weight vector");
  }
  return wedge_matrix(flats, w.as_rationals());
}

Matrix<Fp> wedge_matrix_fp(const FlatList& flats, const WeightVector& w) {
  return wedge_matrix(flats, w.as_fp());
}

AomotoReport aomoto_h1(const FlatList& flats, const WeightVector& w) {
  if (w.size() != flats.d()) {
    throw InputError("weight-length",
                     "weight vector length differs from hyperplane count");
  }
  if (w.ring().is_rational()) {
    return h1_central(flats, w.as_rationals(), w.ring().name(), w.description());
  }
  return h1_central(flats, w.as_fp(), w.ring().name(), w.description());
}

AomotoReport aomoto_h1_projective(const FlatList& flats, const WeightVector& w) {
  if (w.size() != flats.d()) {
    throw InputError("weight-length",
                     "weight vector length differs from hyperplane count");
  }
  if (w.ring().is_rational()) {
    return h1_projective(flats, w.as_rationals(), w.ring().name(),
                         w.description());
  }
  return h1_projective(flats, w.as_fp(), w.ring().name(), w.description());
}

}  // namespace milnor
