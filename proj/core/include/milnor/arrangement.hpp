#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "milnor/cyclotomic.hpp"
#include "milnor/simple_graph.hpp"

namespace milnor {

/// Field of definition of an arrangement: Q or a cyclotomic field Q(zeta_m).
/// Rational arrangements are carried with conductor 1, so every covector
/// entry is a Cyclo over the arrangement's conductor.
struct FieldSpec {
  enum class Kind { rational, cyclotomic };
  Kind kind = Kind::rational;
  int conductor = 1;

  static FieldSpec rational() { return FieldSpec{Kind::rational, 1}; }
  static FieldSpec cyclotomic(int m);
  bool is_rational() const { return kind == Kind::rational; }
  bool operator==(const FieldSpec&) const = default;
};

using Covector = std::vector<Cyclo>;

/// Central arrangement of d hyperplanes through the origin of C^{ambient
/// rank}, given by exact covectors. Construction normalizes every covector,
/// sorts them into the canonical (lexicographic) order and rejects zero
/// covectors and proportional duplicates, so two arrangements describing the
/// same hyperplane set compare equal. Immutable after construction.
class Arrangement {
 public:
  Arrangement(FieldSpec field, int ambient_rank,
              std::vector<Covector> covectors,
              std::vector<std::string> labels = {});

  const FieldSpec& field() const { return field_; }
  int ambient_rank() const { return ambient_rank_; }
  int size() const { return static_cast<int>(covectors_.size()); }  // d
  const Covector& covector(int i) const {
    return covectors_[static_cast<size_t>(i)];
  }
  const std::vector<Covector>& covectors() const { return covectors_; }
  const std::string& label(int i) const {
    return labels_[static_cast<size_t>(i)];
  }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Index of the hyperplane carrying `label`, or -1.
  int index_of_label(const std::string& label) const;

  /// Rank of the covector matrix (the essential rank of the arrangement).
  int essential_rank() const;

  bool operator==(const Arrangement& other) const;

 private:
  FieldSpec field_;
  int ambient_rank_;
  std::vector<Covector> covectors_;
  std::vector<std::string> labels_;
};

/// Over Q: primitive integer covector with positive first nonzero entry.
/// Over Q(zeta_m): first nonzero entry scaled to 1. Rejects the zero
/// covector.
Covector normalize_hyperplane(const FieldSpec& field, const Covector& covector);

/// Display names for the coordinates: x,y,z (rank 3); x,y,z,t (rank 4);
/// x1..xn otherwise.
std::vector<std::string> variable_names(int ambient_rank);
/// Human-readable linear form, e.g. "x - 2y + z".
std::string default_label(const Covector& covector, int ambient_rank);

/// Reads the JSON arrangement document
///   {"field": {"type": "rational"} | {"type": "cyclotomic", "conductor": m},
///    "rank": n+1, "hyperplanes": [[coeff, ...], ...], "labels": [...]?}
/// where a rational coeff is an integer or an "a/b" string and a cyclotomic
/// coeff is a list of rationals in the power basis.
Arrangement parse_arrangement(const std::string& json_text);
std::string to_document(const Arrangement& arrangement);

/// Braid arrangement: hyperplanes x_i - x_j = 0 for 1 <= i < j <= n+1 in
/// C^{n+1}; d = (n+1)n/2.
Arrangement gen_braid(int n);

/// Bundled example arrangements: ceva, ex36, ex37, ex38, ex39, remark311.
Arrangement gen_named(const std::string& name);
const std::vector<std::string>& named_arrangements();

/// One hyperplane x_i - x_j per edge (ij); ambient rank = vertex count.
Arrangement gen_graphic(const SimpleGraph& graph);

struct GenericityCertificate {
  bool sliced = false;
  int attempts = 0;
  /// Rows of the integer matrix embedding C^3 into C^{n+1}; empty when the
  /// input already had ambient rank 3.
  std::vector<std::array<long long, 3>> embedding_rows;
  /// Multiplicity -> count over all rank-2 flats; equal for input and slice.
  std::map<int, int> multiplicity_multiset;
  std::string note;
};

/// Restricts the arrangement to a verified-generic 3-dimensional subspace.
/// Genericity is checked, never assumed: the slice must keep all d
/// hyperplanes distinct and preserve the multiset of rank-2 flat
/// multiplicities. Deterministic for a fixed seed; retries with derived
/// seeds and growing coefficient boxes up to a bounded count.
std::pair<Arrangement, GenericityCertificate> generic_slice(
    const Arrangement& arrangement, unsigned long long seed);

struct ProductPartition {
  /// Partition of coordinate indices; at least two blocks, sorted by their
  /// smallest coordinate.
  std::vector<std::vector<int>> coordinate_blocks;
  /// Block index of each hyperplane's support.
  std::vector<int> factor_of_hyperplane;
  /// Number of hyperplanes supported in each block.
  std::vector<int> block_sizes;
};

/// Finest coordinate partition (in the given coordinates) such that every
/// covector is supported in exactly one block; nullopt when only the trivial
/// one-block partition exists.
std::optional<ProductPartition> detect_product(const Arrangement& arrangement);

}  // namespace milnor
