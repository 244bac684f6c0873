#pragma once

#include <map>
#include <string>
#include <vector>

#include "milnor/arrangement.hpp"

namespace milnor {

/// Codimension-2 flat X of the arrangement: key is the canonical RREF of the
/// 2-dimensional covector span defining X, members lists every hyperplane
/// containing X (the set is closed by construction), multiplicity = |A_X|.
struct Rank2Flat {
  std::string key;
  std::vector<int> members;  // sorted hyperplane indices
  int multiplicity = 0;

  bool contains(int hyperplane) const;
};

/// All rank-2 flats of an arrangement, together with the pair index: every
/// unordered pair of hyperplanes belongs to exactly one flat, so
/// sum_X C(|A_X|, 2) = C(d, 2).
class FlatList {
 public:
  FlatList(int d, std::vector<Rank2Flat> flats);

  int d() const { return d_; }
  const std::vector<Rank2Flat>& flats() const { return flats_; }
  int flat_index_of_pair(int i, int j) const;
  const Rank2Flat& flat_of_pair(int i, int j) const;
  std::map<int, int> multiplicity_multiset() const;

 private:
  int d_;
  std::vector<Rank2Flat> flats_;
  std::vector<int> pair_to_flat_;  // d*d table, -1 on the diagonal
};

/// Groups all C(d,2) hyperplane pairs by the canonical RREF key of their
/// 2-row span. Exact arithmetic, O(d^2) span computations.
FlatList rank2_flats(const Arrangement& arrangement);

/// The flats whose member set contains the given hyperplane; every other
/// hyperplane appears in exactly one of them.
std::vector<Rank2Flat> flats_on_hyperplane(const FlatList& flats,
                                           int hyperplane);
std::vector<Rank2Flat> flats_on_hyperplane(const Arrangement& arrangement,
                                           int hyperplane);

/// Euler characteristic of the projective complement of a rank-3
/// arrangement: chi = 3 - 2d + sum_X (|A_X| - 1).
long long euler_char_projective(const Arrangement& arrangement,
                                const FlatList& flats);
long long euler_char_projective(const Arrangement& arrangement);

/// True when the covector of `hyperplane` lies in the span of the flat's
/// first two members. Used to validate flat closure.
bool flat_span_contains(const Arrangement& arrangement, const Rank2Flat& flat,
                        int hyperplane);

}  // namespace milnor
