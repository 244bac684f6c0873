#include "milnor/lattice.hpp"

#include <algorithm>
#include <unordered_map>

#include "milnor/errors.hpp"
#include "milnor/matrix.hpp"

namespace milnor {

namespace {

std::string span_key(const Arrangement& arrangement, int i, int j) {
  const int rank = arrangement.ambient_rank();
  Matrix<Cyclo> m(2, rank, Cyclo(arrangement.field().conductor));
  for (int c = 0; c < rank; ++c) {
    m.at(0, c) = arrangement.covector(i)[static_cast<size_t>(c)];
    m.at(1, c) = arrangement.covector(j)[static_cast<size_t>(c)];
  }
  RrefResult<Cyclo> reduced = rref(std::move(m));
  std::string key;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < rank; ++c) {
      key += reduced.reduced.at(r, c).str();
      key += ',';
    }
    key += ';';
  }
  return key;
}

}  // namespace

bool Rank2Flat::contains(int hyperplane) const {
  return std::binary_search(members.begin(), members.end(), hyperplane);
}

FlatList::FlatList(int d, std::vector<Rank2Flat> flats)
    : d_(d), flats_(std::move(flats)),
      pair_to_flat_(static_cast<size_t>(d) * static_cast<size_t>(d), -1) {
  for (size_t f = 0; f < flats_.size(); ++f) {
    const std::vector<int>& members = flats_[f].members;
    for (size_t a = 0; a < members.size(); ++a) {
      for (size_t b = a + 1; b < members.size(); ++b) {
        pair_to_flat_[static_cast<size_t>(members[a]) * static_cast<size_t>(d_) +
                      static_cast<size_t>(members[b])] = static_cast<int>(f);
        pair_to_flat_[static_cast<size_t>(members[b]) * static_cast<size_t>(d_) +
                      static_cast<size_t>(members[a])] = static_cast<int>(f);
      }
    }
  }
}

int FlatList::flat_index_of_pair(int i, int j) const {
  if (i < 0 || j < 0 || i >= d_ || j >= d_ || i == j) {
    throw PreconditionError("index-range", "invalid hyperplane pair");
  }
  return pair_to_flat_[static_cast<size_t>(i) * static_cast<size_t>(d_) +
                       static_cast<size_t>(j)];
}

const Rank2Flat& FlatList::flat_of_pair(int i, int j) const {
  return flats_[static_cast<size_t>(flat_index_of_pair(i, j))];
}

std::map<int, int> FlatList::multiplicity_multiset() const {
  std::map<int, int> out;
  for (const Rank2Flat& flat : flats_) out[flat.multiplicity] += 1;
  return out;
}

FlatList rank2_flats(const Arrangement& arrangement) {
  const int d = arrangement.size();
  std::unordered_map<std::string, std::vector<int>> groups;
  std::vector<std::string> order;  // first-seen key order for determinism
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      std::string key = span_key(arrangement, i, j);
      auto [it, inserted] = groups.try_emplace(key);
      if (inserted) order.push_back(key);
      it->second.push_back(i);
      it->second.push_back(j);
    }
  }
  std::vector<Rank2Flat> flats;
  flats.reserve(order.size());
  for (const std::string& key : order) {
    std::vector<int>& raw = groups[key];
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    Rank2Flat flat;
    flat.key = key;
    flat.members = std::move(raw);
    flat.multiplicity = static_cast<int>(flat.members.size());
    flats.push_back(std::move(flat));
  }
  std::sort(flats.begin(), flats.end(),
            [](const Rank2Flat& a, const Rank2Flat& b) {
              return a.members < b.members;
            });
  return FlatList(d, std::move(flats));
}

std::vector<Rank2Flat> flats_on_hyperplane(const FlatList& flats,
                                           int hyperplane) {
  if (hyperplane < 0 || hyperplane >= flats.d()) {
    throw PreconditionError("index-range",
                            "hyperplane index " + std::to_string(hyperplane) +
                                " out of range");
  }
  std::vector<Rank2Flat> out;
  for (const Rank2Flat& flat : flats.flats()) {
    if (flat.contains(hyperplane)) out.push_back(flat);
  }
  return out;
}

std::vector<Rank2Flat> flats_on_hyperplane(const Arrangement& arrangement,
                                           int hyperplane) {
  return flats_on_hyperplane(rank2_flats(arrangement), hyperplane);
}

long long euler_char_projective(const Arrangement& arrangement,
                                const FlatList& flats) {
  if (arrangement.ambient_rank() != 3) {
    throw PreconditionError("rank-3-required",
                            "Euler characteristic needs ambient rank 3");
  }
  long long chi = 3 - 2LL * arrangement.size();
  for (const Rank2Flat& flat : flats.flats()) chi += flat.multiplicity - 1;
  return chi;
}

long long euler_char_projective(const Arrangement& arrangement) {
  return euler_char_projective(arrangement, rank2_flats(arrangement));
}

bool flat_span_contains(const Arrangement& arrangement, const Rank2Flat& flat,
                        int hyperplane) {
  const int rank = arrangement.ambient_rank();
  Matrix<Cyclo> m(3, rank, Cyclo(arrangement.field().conductor));
  for (int c = 0; c < rank; ++c) {
    m.at(0, c) = arrangement.covector(flat.members[0])[static_cast<size_t>(c)];
    m.at(1, c) = arrangement.covector(flat.members[1])[static_cast<size_t>(c)];
    m.at(2, c) = arrangement.covector(hyperplane)[static_cast<size_t>(c)];
  }
  return rank_of(m) == 2;
}

}  // namespace milnor
