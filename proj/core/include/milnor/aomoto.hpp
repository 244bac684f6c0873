#pragma once

#include <string>
#include <vector>

#include "milnor/errors.hpp"
#include "milnor/lattice.hpp"
#include "milnor/matrix.hpp"
#include "milnor/prime_field.hpp"
#include "milnor/rational.hpp"

namespace milnor {

/// Coefficient ring of the Orlik-Solomon algebra: Q or F_p.
struct CoefficientRing {
  enum class Kind { rational, prime };
  Kind kind = Kind::rational;
  long long p = 0;

  static CoefficientRing rational() { return {Kind::rational, 0}; }
  static CoefficientRing prime(long long p);
  bool is_rational() const { return kind == Kind::rational; }
  std::string name() const;
  bool operator==(const CoefficientRing&) const = default;
};

/// Degree-1 Orlik-Solomon element sum_H w_H a_H over Q or F_p. Entries are
/// stored as rationals; prime-field use reduces them mod p on demand, so the
/// same vector doubles as a vector of integer monodromy exponents.
class WeightVector {
 public:
  static WeightVector all_ones(int d, CoefficientRing ring);
  static WeightVector zero(int d, CoefficientRing ring);
  static WeightVector from_rationals(std::vector<Rational> entries,
                                     CoefficientRing ring,
                                     std::string description = "custom");
  static WeightVector from_integers(const std::vector<long long>& entries,
                                    CoefficientRing ring,
                                    std::string description = "custom");

  const CoefficientRing& ring() const { return ring_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<Rational>& entries() const { return entries_; }
  const std::string& description() const { return description_; }

  std::vector<Rational> as_rationals() const;
  /// Mod-p reduction; rejects entries whose denominator vanishes mod p.
  std::vector<Fp> as_fp() const;
  /// True when the weight is zero *in its ring* (e.g. all entries divisible
  /// by p over F_p).
  bool is_zero_in_ring() const;

 private:
  WeightVector(CoefficientRing ring, std::vector<Rational> entries,
               std::string description)
      : ring_(ring),
        entries_(std::move(entries)),
        description_(std::move(description)) {}

  CoefficientRing ring_;
  std::vector<Rational> entries_;
  std::string description_;
};

/// Basis of the degree-2 Orlik-Solomon component, one block per rank-2 flat
/// X with members i0 < i1 < ... < i_{m-1}: the block has basis
/// {a_{i0} a_{i_l} : l >= 1}, so its dimension is multiplicity - 1 and the
/// total dimension is sum_X (|A_X| - 1). Degree-2 products rewrite inside a
/// block through a_i a_j = a_{i0} a_j - a_{i0} a_i.
struct OS2Block {
  int flat_index = 0;
  int base = 0;                 // i0, the smallest member
  std::vector<int> others;      // i1, ..., i_{m-1}
  long long row_offset = 0;     // first row of this block in the wedge matrix
};

struct OS2Basis {
  std::vector<OS2Block> blocks;
  long long dimension = 0;
};

OS2Basis os2_basis(const FlatList& flats);

struct AomotoReport {
  long long h1_dim = 0;
  long long kernel_dim = 0;
  std::string ring;
  std::string weight;
};

/// Matrix of (w wedge .) : A^1 -> A^2 in the block basis above. The wedge of
/// w with b decomposes over the flats; on the block of X the coefficient of
/// a_{i0} a_{i_l} is (sum_{H in X} w_H) b_{i_l} - w_{i_l} (sum_{H in X} b_H).
/// Consequently the matrix annihilates w itself.
template <class R>
Matrix<R> wedge_matrix(const FlatList& flats, const std::vector<R>& weights) {
  if (static_cast<int>(weights.size()) != flats.d()) {
    throw InputError("weight-length",
                     "weight vector length differs from hyperplane count");
  }
  OS2Basis basis = os2_basis(flats);
  R zero = weights[0] - weights[0];
  Matrix<R> m(static_cast<int>(basis.dimension), flats.d(), zero);
  for (const OS2Block& block : basis.blocks) {
    const Rank2Flat& flat =
        flats.flats()[static_cast<size_t>(block.flat_index)];
    R weight_sum = zero;
    for (int member : flat.members) {
      weight_sum = weight_sum + weights[static_cast<size_t>(member)];
    }
    for (size_t l = 0; l < block.others.size(); ++l) {
      const int row = static_cast<int>(block.row_offset + static_cast<long long>(l));
      const R& w_l = weights[static_cast<size_t>(block.others[l])];
      for (int member : flat.members) {
        m.at(row, member) = m.at(row, member) - w_l;
      }
      m.at(row, block.others[l]) = m.at(row, block.others[l]) + weight_sum;
    }
  }
  return m;
}

Matrix<Rational> wedge_matrix_q(const FlatList& flats, const WeightVector& w);
Matrix<Fp> wedge_matrix_fp(const FlatList& flats, const WeightVector& w);

/// dim H^1 of the Aomoto complex (A*, w wedge) truncated at degree 2:
/// kernel_dim = d - rank(wedge matrix); h1 = kernel_dim - 1 for w != 0 (the
/// image of A^0 is the line R.w) and h1 = d for w = 0.
AomotoReport aomoto_h1(const FlatList& flats, const WeightVector& w);

/// Same cohomology for the projective (deconed) subcomplex ker(boundary),
/// where the boundary sends every a_H to 1. Requires sum_H w_H = 0 in the
/// ring (for all-ones weights over F_p this means p | d); otherwise the
/// deconing hypothesis fails and a PreconditionError is thrown. Under the
/// precondition the value equals aomoto_h1.
AomotoReport aomoto_h1_projective(const FlatList& flats, const WeightVector& w);

}  // namespace milnor
