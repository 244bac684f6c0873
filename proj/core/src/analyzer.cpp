#include "milnor/analyzer.hpp"

#include <numeric>

#include "json.hpp"
#include "milnor/aomoto.hpp"
#include "milnor/version.hpp"

namespace milnor {

namespace {

using nlohmann::ordered_json;

std::vector<CdoFlatCheck> dense_flat_checks(const FlatList& flats,
                                            int hyperplane, long long order) {
  std::vector<CdoFlatCheck> checks;
  for (size_t f = 0; f < flats.flats().size(); ++f) {
    const Rank2Flat& flat = flats.flats()[f];
    if (flat.multiplicity < 3 || !flat.contains(hyperplane)) continue;
    CdoFlatCheck check;
    check.flat_index = static_cast<int>(f);
    check.members = flat.members;
    check.multiplicity = flat.multiplicity;
    check.order_divides = (flat.multiplicity % order == 0);
    checks.push_back(std::move(check));
  }
  return checks;
}

ordered_json certificate_json(const VanishingCertificate& cert,
                              const std::vector<std::string>& labels) {
  ordered_json j;
  j["k"] = cert.k;
  j["order"] = cert.order;
  if (cert.kind == VanishingCertificate::Kind::cdo) {
    j["kind"] = "cdo";
    j["witness"] = cert.witness;
    if (cert.witness >= 0 && cert.witness < static_cast<int>(labels.size())) {
      j["witness_label"] = labels[static_cast<size_t>(cert.witness)];
    }
    ordered_json checks = ordered_json::array();
    for (const CdoFlatCheck& check : cert.checks) {
      checks.push_back(ordered_json{{"flat", check.flat_index},
                                    {"members", check.members},
                                    {"multiplicity", check.multiplicity},
                                    {"order_divides", check.order_divides}});
    }
    j["checks"] = std::move(checks);
  } else {
    j["kind"] = "modular";
    j["p"] = cert.p;
    j["s"] = cert.s;
    j["h1"] = cert.h1_value;
  }
  return j;
}

}  // namespace

EigenvalueIndex eigen_order(long long d, long long k) {
  if (k < 0 || k >= d) {
    throw PreconditionError("k-out-of-range",
                            "eigenvalue index must satisfy 0 <= k < d");
  }
  if (k == 0) return EigenvalueIndex{0, 1};
  return EigenvalueIndex{k, d / std::gcd(d, k)};
}

std::optional<std::pair<long long, long long>> prime_power(long long n) {
  if (n < 2) return std::nullopt;
  long long p = 0;
  for (long long f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      p = f;
      break;
    }
  }
  if (p == 0) return std::make_pair(n, 1LL);  // n itself is prime
  long long s = 0;
  long long rest = n;
  while (rest % p == 0) {
    rest /= p;
    ++s;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, s);
}

std::optional<VanishingCertificate> cdo_test(const Arrangement& arrangement,
                                             const FlatList& flats,
                                             long long k) {
  if (arrangement.ambient_rank() != 3) {
    throw PreconditionError("rank-3-required",
                            "the order-divisibility test needs ambient rank 3");
  }
  if (k == 0) {
    throw PreconditionError("k-nonzero",
                            "the fixed eigenspace is never tested for vanishing");
  }
  const long long d = arrangement.size();
  const long long order = eigen_order(d, k).order;
  for (int h = 0; h < arrangement.size(); ++h) {
    std::vector<CdoFlatCheck> checks = dense_flat_checks(flats, h, order);
    bool qualifies = true;
    for (const CdoFlatCheck& check : checks) {
      if (check.order_divides) qualifies = false;
    }
    if (qualifies) {
      VanishingCertificate cert;
      cert.kind = VanishingCertificate::Kind::cdo;
      cert.k = k;
      cert.order = order;
      cert.witness = h;
      cert.checks = std::move(checks);
      return cert;
    }
  }
  return std::nullopt;
}

std::optional<VanishingCertificate> modular_test(const Arrangement& arrangement,
                                                 const FlatList& flats,
                                                 long long k) {
  if (k == 0) {
    throw PreconditionError("k-nonzero",
                            "the fixed eigenspace is never tested for vanishing");
  }
  const long long d = arrangement.size();
  const long long order = eigen_order(d, k).order;
  std::optional<std::pair<long long, long long>> pp = prime_power(order);
  if (!pp) return std::nullopt;
  AomotoReport report = aomoto_h1(
      flats, WeightVector::all_ones(flats.d(), CoefficientRing::prime(pp->first)));
  if (report.h1_dim != 0) return std::nullopt;
  VanishingCertificate cert;
  cert.kind = VanishingCertificate::Kind::modular;
  cert.k = k;
  cert.order = order;
  cert.p = pp->first;
  cert.s = pp->second;
  cert.h1_value = report.h1_dim;
  return cert;
}

bool replay_certificate(const Arrangement& arrangement, const FlatList& flats,
                        const VanishingCertificate& certificate) {
  const long long d = arrangement.size();
  if (certificate.k <= 0 || certificate.k >= d) return false;
  if (eigen_order(d, certificate.k).order != certificate.order) return false;
  if (certificate.kind == VanishingCertificate::Kind::cdo) {
    if (certificate.witness < 0 || certificate.witness >= d) return false;
    std::vector<CdoFlatCheck> fresh =
        dense_flat_checks(flats, certificate.witness, certificate.order);
    if (fresh.size() != certificate.checks.size()) return false;
    for (size_t i = 0; i < fresh.size(); ++i) {
      if (fresh[i].members != certificate.checks[i].members) return false;
      if (fresh[i].multiplicity != certificate.checks[i].multiplicity) return false;
      if (fresh[i].order_divides || certificate.checks[i].order_divides) return false;
    }
    return true;
  }
  std::optional<std::pair<long long, long long>> pp = prime_power(certificate.order);
  if (!pp || pp->first != certificate.p || pp->second != certificate.s) return false;
  AomotoReport report = aomoto_h1(
      flats,
      WeightVector::all_ones(flats.d(), CoefficientRing::prime(certificate.p)));
  return report.h1_dim == 0 && certificate.h1_value == 0;
}

Theorem1Report theorem1_check(const Arrangement& arrangement,
                              const FlatList& flats, const ArrGraph& graph) {
  Theorem1Report report;
  report.graph_connected = is_connected(graph);
  report.multiplicity_bounded = true;
  for (const Rank2Flat& flat : flats.flats()) {
    if (flat.multiplicity > 9) report.multiplicity_bounded = false;
  }
  if (arrangement.size() % 6 != 0) {
    report.six_condition = true;
    report.six_via_nondivisibility = true;
  } else {
    for (int h = 0; h < arrangement.size() && !report.six_condition; ++h) {
      bool clean = true;
      for (const Rank2Flat& flat : flats.flats()) {
        if (flat.contains(h) && flat.multiplicity == 6) clean = false;
      }
      if (clean) {
        report.six_condition = true;
        report.six_witness = h;
      }
    }
  }
  report.overall = report.graph_connected && report.multiplicity_bounded &&
                   report.six_condition;
  return report;
}

DoubleTripleReport double_triple_check(const Arrangement& arrangement,
                                       const FlatList& flats,
                                       const ArrGraph& graph) {
  DoubleTripleReport report;
  report.max_multiplicity = 2;
  for (const Rank2Flat& flat : flats.flats()) {
    report.max_multiplicity = std::max(report.max_multiplicity, flat.multiplicity);
  }
  if (report.max_multiplicity > 3) {
    report.applicable = false;
    return report;
  }
  report.applicable = true;
  report.graph_connected = is_connected(graph);
  for (int h = 0; h < arrangement.size(); ++h) {
    int triple_count = 0;
    for (const Rank2Flat& flat : flats.flats()) {
      if (flat.multiplicity == 3 && flat.contains(h)) ++triple_count;
    }
    if (triple_count == 1) {
      report.single_triple_line = h;
      break;
    }
  }
  const long long d = arrangement.size();
  report.clause_connected = report.graph_connected;
  report.clause_triple_line_even_d =
      report.single_triple_line.has_value() && d % 2 == 0;
  report.clause_triple_line_d_gt_3 =
      report.single_triple_line.has_value() && d > 3;
  report.verdict = report.clause_connected || report.clause_triple_line_even_d ||
                   report.clause_triple_line_d_gt_3;
  return report;
}

std::optional<LocalSystemCertificate> local_system_test(
    const Arrangement& arrangement, const FlatList& flats,
    const std::vector<long long>& exponents, long long p) {
  if (static_cast<int>(exponents.size()) != arrangement.size()) {
    throw InputError("weight-length",
                     "one integer exponent per hyperplane is required");
  }
  if (!is_prime(p)) {
    throw InputError("not-prime",
                     "characteristic " + std::to_string(p) + " is not prime");
  }
  long long g = 0;
  for (long long e : exponents) g = std::gcd(g, e);
  if (g != 1) {
    throw PreconditionError("weights-gcd",
                            "monodromy exponents must have gcd 1");
  }
  for (size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] % p == 0) {
      throw PreconditionError(
          "weight-divisible-by-p",
          "exponent at index " + std::to_string(i) + " vanishes mod " +
              std::to_string(p));
    }
  }
  AomotoReport report = aomoto_h1(
      flats, WeightVector::from_integers(exponents, CoefficientRing::prime(p),
                                         "integer-exponents"));
  if (report.h1_dim != 0) return std::nullopt;
  return LocalSystemCertificate{p, exponents, report.h1_dim};
}

GraphicReport graphic_check(const SimpleGraph& gamma) {
  GraphicReport report;
  report.gamma_vertices = gamma.vertex_count();
  report.gamma_connected = gamma.connected();
  Arrangement arrangement = gen_graphic(gamma);
  report.d = arrangement.size();
  FlatList flats = rank2_flats(arrangement);
  report.arr_graph_connected = is_connected(build_graph(flats));
  report.h1_f2 =
      aomoto_h1(flats, WeightVector::all_ones(flats.d(),
                                              CoefficientRing::prime(2)))
          .h1_dim;
  report.h1_f3 =
      aomoto_h1(flats, WeightVector::all_ones(flats.d(),
                                              CoefficientRing::prime(3)))
          .h1_dim;
  report.h1_q =
      aomoto_h1(flats, WeightVector::all_ones(flats.d(),
                                              CoefficientRing::rational()))
          .h1_dim;
  report.vanishing_forced =
      report.gamma_connected && report.gamma_vertices >= 5;
  if (report.vanishing_forced &&
      (report.h1_f2 != 0 || report.h1_f3 != 0 || report.h1_q != 0)) {
    throw std::logic_error(
        "connected graphic arrangement on >= 5 vertices with nonzero Aomoto H^1");
  }
  return report;
}

MilnorReport analyze(const Arrangement& arrangement, unsigned long long seed) {
  MilnorReport report;
  report.d = arrangement.size();
  report.h1_fixed_dim = report.d - 1;
  report.product = detect_product(arrangement);

  Arrangement work = arrangement;
  if (arrangement.ambient_rank() > 3) {
    auto [sliced, cert] = generic_slice(arrangement, seed);
    work = std::move(sliced);
    report.slice = std::move(cert);
  } else {
    report.slice.sliced = false;
    report.slice.note = "no slice needed";
  }
  report.labels = work.labels();

  FlatList flats = rank2_flats(work);
  const bool cdo_possible = work.ambient_rank() == 3;
  bool all_proved = true;
  for (long long k = 1; k < report.d; ++k) {
    EigenStatus status;
    status.k = k;
    status.order = eigen_order(report.d, k).order;
    std::optional<VanishingCertificate> cert;
    if (cdo_possible) cert = cdo_test(work, flats, k);
    if (!cert) cert = modular_test(work, flats, k);
    if (cert) {
      status.proved_zero = true;
      status.certificate = std::move(cert);
    } else {
      all_proved = false;
      if (report.product) status.hints.push_back("product-detected");
      if (cdo_possible) {
        status.hints.push_back("every-line-meets-order-divisible-flat");
      }
      if (!prime_power(status.order)) {
        status.hints.push_back("non-prime-power-order");
      }
    }
    report.eigen.push_back(std::move(status));
  }
  report.trivial = all_proved;
  return report;
}

std::string to_json_string(const MilnorReport& report) {
  ordered_json j;
  j["d"] = report.d;
  j["verdict"] = report.verdict();
  j["h1_fixed_dim"] = report.h1_fixed_dim;
  ordered_json eigen = ordered_json::array();
  for (const EigenStatus& status : report.eigen) {
    ordered_json e;
    e["k"] = status.k;
    e["order"] = status.order;
    e["status"] = status.proved_zero ? "proved-zero" : "unknown";
    if (status.certificate) {
      e["certificate"] = certificate_json(*status.certificate, report.labels);
    } else {
      e["certificate"] = nullptr;
    }
    e["hints"] = status.hints;
    if (!status.proved_zero) {
      e["note"] =
          "eigenspace dimension requires methods outside this tool "
          "(pencils, admissible systems, product formulas)";
    }
    eigen.push_back(std::move(e));
  }
  j["eigen"] = std::move(eigen);
  ordered_json slice;
  slice["applied"] = report.slice.sliced;
  if (report.slice.sliced) {
    slice["attempts"] = report.slice.attempts;
    ordered_json rows = ordered_json::array();
    for (const auto& row : report.slice.embedding_rows) {
      rows.push_back(ordered_json::array({row[0], row[1], row[2]}));
    }
    slice["embedding_rows"] = std::move(rows);
    ordered_json multiset = ordered_json::object();
    for (const auto& [mult, count] : report.slice.multiplicity_multiset) {
      multiset[std::to_string(mult)] = count;
    }
    slice["multiplicity_multiset"] = std::move(multiset);
  }
  slice["note"] = report.slice.note;
  j["slice"] = std::move(slice);
  ordered_json product;
  product["detected"] = report.product.has_value();
  if (report.product) {
    product["coordinate_blocks"] = report.product->coordinate_blocks;
    product["block_sizes"] = report.product->block_sizes;
  }
  j["product"] = std::move(product);
  j["tool_version"] = kVersion;
  return j.dump(2) + "\n";
}

}  // namespace milnor
