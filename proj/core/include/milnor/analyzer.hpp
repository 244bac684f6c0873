#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milnor/aomoto.hpp"
#include "milnor/arrangement.hpp"
#include "milnor/graph.hpp"
#include "milnor/lattice.hpp"
#include "milnor/simple_graph.hpp"

namespace milnor {

/// Eigenvalue lambda^k of the degree-1 monodromy, lambda a primitive d-th
/// root of unity. Roots of unity are represented purely by (k, d); the order
/// is d / gcd(d, k) and no floating point is ever involved.
struct EigenvalueIndex {
  long long k = 0;
  long long order = 1;
};

EigenvalueIndex eigen_order(long long d, long long k);

/// (p, s) with n = p^s, p prime and s >= 1; nullopt otherwise.
std::optional<std::pair<long long, long long>> prime_power(long long n);

struct CdoFlatCheck {
  int flat_index = 0;
  std::vector<int> members;
  int multiplicity = 0;
  /// order(lambda^k) | multiplicity would make the local monodromy operator
  /// around the flat trivial; a witness hyperplane must avoid that.
  bool order_divides = false;
};

/// Replayable proof that an eigenspace vanishes.
///  - kind cdo: a witness hyperplane whose multiplicity >= 3 flats all have
///    order(lambda^k) not dividing the multiplicity (so every local
///    monodromy operator along the witness differs from 1).
///  - kind modular: order(lambda^k) = p^s and the degree-1 Aomoto cohomology
///    over F_p with all-ones weights vanishes (an upper bound certificate:
///    a zero value proves vanishing, a positive value proves nothing).
struct VanishingCertificate {
  enum class Kind { cdo, modular };
  Kind kind = Kind::cdo;
  long long k = 0;
  long long order = 1;
  // cdo
  int witness = -1;
  std::vector<CdoFlatCheck> checks;
  // modular
  long long p = 0;
  long long s = 0;
  long long h1_value = -1;
};

/// Order-divisibility test along a single line of a rank-3 arrangement.
/// Returns the certificate for the smallest-index qualifying hyperplane, or
/// nullopt when every hyperplane carries a flat of multiplicity >= 3 whose
/// multiplicity is divisible by order(lambda^k). Requires k != 0.
std::optional<VanishingCertificate> cdo_test(const Arrangement& arrangement,
                                             const FlatList& flats,
                                             long long k);

/// Modular bound: when order(lambda^k) is a prime power p^s, a vanishing
/// degree-1 Aomoto cohomology over F_p (all-ones weights) certifies that the
/// eigenspace vanishes. Returns nullopt when the order is not a prime power
/// or the modular value is positive.
std::optional<VanishingCertificate> modular_test(const Arrangement& arrangement,
                                                 const FlatList& flats,
                                                 long long k);

/// Re-runs every check recorded in a certificate against a freshly computed
/// flat list; certificates are replayable.
bool replay_certificate(const Arrangement& arrangement, const FlatList& flats,
                        const VanishingCertificate& certificate);

struct Theorem1Report {
  bool graph_connected = false;        // (i)
  bool multiplicity_bounded = false;   // (ii): every |A_X| <= 9
  bool six_condition = false;          // (iii)
  bool six_via_nondivisibility = false;  // (iii) held because 6 does not divide d
  std::optional<int> six_witness;      // hyperplane avoiding multiplicity-6 flats
  bool overall = false;
};

/// Hypothesis table of the main vanishing criterion; when all three hold the
/// degree-1 monodromy is trivial: H^1(F) = H^1(F)_1.
Theorem1Report theorem1_check(const Arrangement& arrangement,
                              const FlatList& flats, const ArrGraph& graph);

struct DoubleTripleReport {
  bool applicable = false;  // false when some flat has multiplicity >= 4
  int max_multiplicity = 0;
  bool graph_connected = false;
  /// Smallest line carrying exactly one triple point, if any.
  std::optional<int> single_triple_line;
  bool clause_connected = false;
  bool clause_triple_line_even_d = false;
  bool clause_triple_line_d_gt_3 = false;
  bool verdict = false;
};

/// Criteria for line arrangements with only double and triple points:
/// connected graph, or a line with exactly one triple point combined with
/// either d even or d > 3. Reports every clause that fires.
DoubleTripleReport double_triple_check(const Arrangement& arrangement,
                                       const FlatList& flats,
                                       const ArrGraph& graph);

struct LocalSystemCertificate {
  long long p = 0;
  std::vector<long long> exponents;
  long long h1_value = -1;
};

/// Rank-one local system test: for integer monodromy exponents (k_H) with
/// gcd 1 and k_H != 0 mod p, a vanishing Aomoto H^1 over F_p with weights
/// [k_H mod p] certifies H^1(M(A), L) = 0 for the order-p^s system.
std::optional<LocalSystemCertificate> local_system_test(
    const Arrangement& arrangement, const FlatList& flats,
    const std::vector<long long>& exponents, long long p);

struct GraphicReport {
  int gamma_vertices = 0;
  bool gamma_connected = false;
  int d = 0;
  bool arr_graph_connected = false;
  long long h1_f2 = -1;
  long long h1_f3 = -1;
  long long h1_q = -1;
  /// A connected graph on >= 5 vertices forces all three values to zero.
  bool vanishing_forced = false;
};

GraphicReport graphic_check(const SimpleGraph& gamma);

struct EigenStatus {
  long long k = 0;
  long long order = 1;
  bool proved_zero = false;
  std::optional<VanishingCertificate> certificate;
  std::vector<std::string> hints;
};

/// Per-eigenvalue analysis of the degree-1 Milnor fiber monodromy. The
/// verdict is trivial-monodromy exactly when every k != 0 is proved zero;
/// the fixed eigenspace always has dimension d - 1. Unknown statuses carry
/// machine-readable hints and are never guessed.
struct MilnorReport {
  long long d = 0;
  bool trivial = false;
  long long h1_fixed_dim = 0;
  GenericityCertificate slice;
  std::optional<ProductPartition> product;
  std::vector<EigenStatus> eigen;  // k = 1..d-1
  std::vector<std::string> labels;  // labels of the analyzed arrangement

  std::string verdict() const {
    return trivial ? "trivial-monodromy" : "undetermined";
  }
};

/// Runs the per-eigenvalue engines (cdo first, then modular) after slicing
/// inputs of ambient rank > 3 down to a verified-generic rank-3 arrangement.
/// Deterministic for a fixed seed; the analysis outcome is seed-independent.
MilnorReport analyze(const Arrangement& arrangement,
                     unsigned long long seed = 0);

std::string to_json_string(const MilnorReport& report);

}  // namespace milnor
