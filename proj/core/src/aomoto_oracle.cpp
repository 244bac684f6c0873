#include "milnor/aomoto_oracle.hpp"

#include <array>

namespace milnor {

namespace {

template <class R>
AomotoReport oracle_impl(const FlatList& flats, const std::vector<R>& weights,
                         const R& one, const std::string& ring_name,
                         const std::string& weight_name) {
  const int d = flats.d();
  R zero = one - one;
  bool weight_is_zero = true;
  for (const R& w : weights) {
    if (!is_zero(w)) weight_is_zero = false;
  }
  if (weight_is_zero) {
    return AomotoReport{d, d, ring_name, weight_name};
  }

  // Row index of the exterior-square basis element a_i a_j, i < j.
  auto pair_row = [d](int i, int j) { return i * d - i * (i + 1) / 2 + (j - i - 1); };
  const int pair_count = d * (d - 1) / 2;

  // Relations: boundary of a_i a_j a_k for every dependent triple, i.e.
  // a_j a_k - a_i a_k + a_i a_j whenever {i, j, k} lies in one flat.
  std::vector<std::array<int, 3>> triples;
  for (const Rank2Flat& flat : flats.flats()) {
    const std::vector<int>& m = flat.members;
    for (size_t a = 0; a < m.size(); ++a) {
      for (size_t b = a + 1; b < m.size(); ++b) {
        for (size_t c = b + 1; c < m.size(); ++c) {
          triples.push_back({m[a], m[b], m[c]});
        }
      }
    }
  }
  const int rel_count = static_cast<int>(triples.size());

  // Kernel of R^d -> Lambda^2 / Rel equals the kernel of the column-block
  // matrix [wedge | relations] minus the relation columns' own span.
  Matrix<R> combined(pair_count, d + rel_count, zero);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      int row = pair_row(i, j);
      combined.at(row, j) = combined.at(row, j) + weights[static_cast<size_t>(i)];
      combined.at(row, i) = combined.at(row, i) - weights[static_cast<size_t>(j)];
    }
  }
  for (int t = 0; t < rel_count; ++t) {
    const auto& [i, j, k] = triples[static_cast<size_t>(t)];
    combined.at(pair_row(j, k), d + t) = combined.at(pair_row(j, k), d + t) + one;
    combined.at(pair_row(i, k), d + t) = combined.at(pair_row(i, k), d + t) - one;
    combined.at(pair_row(i, j), d + t) = combined.at(pair_row(i, j), d + t) + one;
  }

  long long rank_combined = rank_of(combined);
  long long rank_relations = 0;
  if (rel_count > 0) {
    Matrix<R> relations(pair_count, rel_count, zero);
    for (int t = 0; t < rel_count; ++t) {
      for (int row = 0; row < pair_count; ++row) {
        relations.at(row, t) = combined.at(row, d + t);
      }
    }
    rank_relations = rank_of(relations);
  }
  long long image_rank = rank_combined - rank_relations;
  long long kernel = d - image_rank;
  return AomotoReport{kernel - 1, kernel, ring_name, weight_name};
}

}  // namespace

AomotoReport os_oracle_h1(const FlatList& flats, const WeightVector& w) {
  if (w.size() != flats.d()) {
    throw InputError("weight-length",
                     "weight vector length differs from hyperplane count");
  }
  if (w.ring().is_rational()) {
    return oracle_impl(flats, w.as_rationals(), Rational(1), w.ring().name(),
                       w.description());
  }
  return oracle_impl(flats, w.as_fp(), Fp(1, w.ring().p), w.ring().name(),
                     w.description());
}

}  // namespace milnor
