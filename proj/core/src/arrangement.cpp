#include "milnor/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "milnor/errors.hpp"
#include "milnor/lattice.hpp"
#include "milnor/matrix.hpp"

namespace milnor {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

int compare_covectors(const Covector& a, const Covector& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int c = compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

Covector rational_covector(const std::vector<long long>& entries) {
  Covector out;
  out.reserve(entries.size());
  for (long long e : entries) out.emplace_back(1, e);
  return out;
}

Rational parse_rational_coeff(const json& value) {
  if (value.is_number_integer()) {
    return Rational(std::to_string(value.get<long long>()));
  }
  if (value.is_string()) {
    return rational_from_string(value.get<std::string>());
  }
  throw InputError("bad-rational",
                   "coefficient must be an integer or an \"a/b\" string");
}

ordered_json rational_to_json(const Rational& value) {
  if (value.get_den() == 1 && value.get_num().fits_slong_p()) {
    return ordered_json(static_cast<long long>(value.get_num().get_si()));
  }
  return ordered_json(to_string(value));
}

Cyclo parse_coeff(const FieldSpec& field, const json& value) {
  if (field.is_rational()) {
    return Cyclo(1, parse_rational_coeff(value));
  }
  if (value.is_array()) {
    if (static_cast<int>(value.size()) > euler_phi(field.conductor)) {
      throw InputError("conductor-mismatch",
                       "cyclotomic coefficient has more than phi(m) entries");
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(value.size());
    for (const json& c : value) coeffs.push_back(parse_rational_coeff(c));
    return Cyclo::from_poly(field.conductor, coeffs);
  }
  return Cyclo(field.conductor, parse_rational_coeff(value));
}

ordered_json coeff_to_json(const FieldSpec& field, const Cyclo& value) {
  if (field.is_rational()) {
    return rational_to_json(value.rational_part());
  }
  ordered_json list = ordered_json::array();
  for (const Rational& c : value.coeffs()) list.push_back(rational_to_json(c));
  return list;
}

unsigned long long derived_seed(unsigned long long seed, int attempt) {
  return seed ^ (0x9E3779B97F4A7C15ULL * static_cast<unsigned long long>(attempt + 1));
}

}  // namespace

FieldSpec FieldSpec::cyclotomic(int m) {
  if (m < 1) {
    throw InputError("bad-conductor", "conductor must be a positive integer");
  }
  return FieldSpec{Kind::cyclotomic, m};
}

Covector normalize_hyperplane(const FieldSpec& field, const Covector& covector) {
  int lead = -1;
  for (size_t i = 0; i < covector.size(); ++i) {
    if (covector[i].conductor() != field.conductor) {
      throw InputError("conductor-mismatch",
                       "covector entry over a different cyclotomic field");
    }
    if (lead < 0 && !is_zero(covector[i])) lead = static_cast<int>(i);
  }
  if (lead < 0) {
    throw InputError("zero-covector", "covectors must be nonzero");
  }
  if (!field.is_rational()) {
    Cyclo inv = covector[static_cast<size_t>(lead)].inverse();
    Covector out;
    out.reserve(covector.size());
    for (const Cyclo& c : covector) out.push_back(c * inv);
    return out;
  }
  // Primitive integer covector, first nonzero entry positive.
  mpz_class lcm_den(1);
  for (const Cyclo& c : covector) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
            c.rational_part().get_den().get_mpz_t());
  }
  std::vector<mpz_class> scaled;
  scaled.reserve(covector.size());
  mpz_class gcd_all(0);
  for (const Cyclo& c : covector) {
    const Rational& r = c.rational_part();
    mpz_class value = r.get_num() * (lcm_den / r.get_den());
    mpz_gcd(gcd_all.get_mpz_t(), gcd_all.get_mpz_t(), value.get_mpz_t());
    scaled.push_back(value);
  }
  if (sgn(scaled[static_cast<size_t>(lead)]) < 0) gcd_all = -gcd_all;
  Covector out;
  out.reserve(covector.size());
  for (const mpz_class& value : scaled) {
    out.emplace_back(1, Rational(value / gcd_all));
  }
  return out;
}

std::vector<std::string> variable_names(int ambient_rank) {
  if (ambient_rank == 3) return {"x", "y", "z"};
  if (ambient_rank == 4) return {"x", "y", "z", "t"};
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(ambient_rank));
  for (int i = 1; i <= ambient_rank; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string default_label(const Covector& covector, int ambient_rank) {
  std::vector<std::string> vars = variable_names(ambient_rank);
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < covector.size(); ++i) {
    const Cyclo& c = covector[i];
    if (is_zero(c)) continue;
    if (c.is_rational()) {
      const Rational& r = c.rational_part();
      Rational mag = abs(r);
      bool negative = sgn(r) < 0;
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      if (mag != 1) os << to_string(mag);
      os << vars[i];
    } else {
      if (!first) os << " + ";
      os << "(" << c.str() << ")" << vars[i];
    }
    first = false;
  }
  return os.str();
}

Arrangement::Arrangement(FieldSpec field, int ambient_rank,
                         std::vector<Covector> covectors,
                         std::vector<std::string> labels)
    : field_(field), ambient_rank_(ambient_rank) {
  if (field.is_rational() && field.conductor != 1) {
    throw InputError("bad-field", "rational field carries conductor 1");
  }
  if (ambient_rank < 2) {
    throw InputError("bad-rank", "ambient rank must be at least 2");
  }
  if (covectors.empty()) {
    throw InputError("empty-arrangement", "an arrangement needs d >= 1");
  }
  if (!labels.empty() && labels.size() != covectors.size()) {
    throw InputError("bad-labels", "label count differs from hyperplane count");
  }
  struct Entry {
    Covector covector;
    int original_index;
    std::string label;
  };
  std::vector<Entry> entries;
  entries.reserve(covectors.size());
  for (size_t i = 0; i < covectors.size(); ++i) {
    if (static_cast<int>(covectors[i].size()) != ambient_rank) {
      throw InputError("bad-covector-length",
                       "covector " + std::to_string(i) + " has length " +
                           std::to_string(covectors[i].size()) +
                           ", expected " + std::to_string(ambient_rank));
    }
    entries.push_back(Entry{normalize_hyperplane(field, covectors[i]),
                            static_cast<int>(i),
                            labels.empty() ? std::string() : labels[i]});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) {
                     return compare_covectors(a.covector, b.covector) < 0;
                   });
  for (size_t i = 1; i < entries.size(); ++i) {
    if (compare_covectors(entries[i - 1].covector, entries[i].covector) == 0) {
      int a = std::min(entries[i - 1].original_index, entries[i].original_index);
      int b = std::max(entries[i - 1].original_index, entries[i].original_index);
      throw InputError("duplicate-hyperplane",
                       "hyperplanes " + std::to_string(a) + " and " +
                           std::to_string(b) + " are proportional");
    }
  }
  covectors_.reserve(entries.size());
  labels_.reserve(entries.size());
  for (Entry& e : entries) {
    if (e.label.empty()) e.label = default_label(e.covector, ambient_rank);
    covectors_.push_back(std::move(e.covector));
    labels_.push_back(std::move(e.label));
  }
}

int Arrangement::index_of_label(const std::string& label) const {
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

int Arrangement::essential_rank() const {
  Matrix<Cyclo> m(size(), ambient_rank_, Cyclo(field_.conductor));
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < ambient_rank_; ++j) {
      m.at(i, j) = covectors_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  }
  return rank_of(m);
}

bool Arrangement::operator==(const Arrangement& other) const {
  if (!(field_ == other.field_) || ambient_rank_ != other.ambient_rank_ ||
      covectors_.size() != other.covectors_.size() || labels_ != other.labels_) {
    return false;
  }
  for (size_t i = 0; i < covectors_.size(); ++i) {
    if (compare_covectors(covectors_[i], other.covectors_[i]) != 0) return false;
  }
  return true;
}

Arrangement parse_arrangement(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError("bad-document", std::string("JSON parse error: ") + e.what());
  }
  try {
    const json& field_json = doc.at("field");
    std::string type = field_json.at("type").get<std::string>();
    FieldSpec field;
    if (type == "rational") {
      field = FieldSpec::rational();
    } else if (type == "cyclotomic") {
      field = FieldSpec::cyclotomic(field_json.at("conductor").get<int>());
    } else {
      throw InputError("bad-document", "unknown field type '" + type + "'");
    }
    int rank = doc.at("rank").get<int>();
    const json& hyperplanes = doc.at("hyperplanes");
    if (!hyperplanes.is_array() || hyperplanes.empty()) {
      throw InputError("bad-document", "'hyperplanes' must be a nonempty array");
    }
    std::vector<Covector> covectors;
    covectors.reserve(hyperplanes.size());
    for (const json& row : hyperplanes) {
      if (!row.is_array()) {
        throw InputError("bad-document", "each hyperplane must be an array");
      }
      Covector cov;
      cov.reserve(row.size());
      for (const json& coeff : row) cov.push_back(parse_coeff(field, coeff));
      covectors.push_back(std::move(cov));
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
      for (const json& l : doc.at("labels")) labels.push_back(l.get<std::string>());
    }
    return Arrangement(field, rank, std::move(covectors), std::move(labels));
  } catch (const json::exception& e) {
    throw InputError("bad-document", std::string("malformed document: ") + e.what());
  }
}

std::string to_document(const Arrangement& arrangement) {
  ordered_json doc;
  if (arrangement.field().is_rational()) {
    doc["field"] = {{"type", "rational"}};
  } else {
    doc["field"] = {{"type", "cyclotomic"},
                    {"conductor", arrangement.field().conductor}};
  }
  doc["rank"] = arrangement.ambient_rank();
  ordered_json rows = ordered_json::array();
  for (const Covector& cov : arrangement.covectors()) {
    ordered_json row = ordered_json::array();
    for (const Cyclo& c : cov) {
      row.push_back(coeff_to_json(arrangement.field(), c));
    }
    rows.push_back(std::move(row));
  }
  doc["hyperplanes"] = std::move(rows);
  doc["labels"] = arrangement.labels();
  return doc.dump(2) + "\n";
}

Arrangement gen_braid(int n) {
  if (n < 2) {
    throw PreconditionError("braid-n", "braid arrangement needs n >= 2");
  }
  int rank = n + 1;
  std::vector<Covector> covectors;
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      std::vector<long long> entries(static_cast<size_t>(rank), 0);
      entries[static_cast<size_t>(i)] = 1;
      entries[static_cast<size_t>(j)] = -1;
      covectors.push_back(rational_covector(entries));
    }
  }
  return Arrangement(FieldSpec::rational(), rank, std::move(covectors));
}

const std::vector<std::string>& named_arrangements() {
  static const std::vector<std::string> names{"ceva",  "ex36", "ex37",
                                              "ex38",  "ex39", "remark311"};
  return names;
}

Arrangement gen_named(const std::string& name) {
  if (name == "ceva") {
    // (x^3 - y^3)(y^3 - z^3)(x^3 - z^3) = 0 over Q(zeta_3).
    FieldSpec field = FieldSpec::cyclotomic(3);
    Cyclo one(3, 1);
    Cyclo zero(3);
    std::vector<Covector> covectors;
    for (unsigned a = 0; a < 3; ++a) {
      Cyclo w = -Cyclo::zeta(3).pow(a);
      covectors.push_back({one, w, zero});
      covectors.push_back({zero, one, w});
      covectors.push_back({one, zero, w});
    }
    return Arrangement(field, 3, std::move(covectors));
  }
  if (name == "ex36") {
    // xyz(x^4 - y^4)(y^4 - z^4)(x^4 - z^4) = 0 over Q(zeta_4).
    FieldSpec field = FieldSpec::cyclotomic(4);
    Cyclo one(4, 1);
    Cyclo zero(4);
    std::vector<Covector> covectors{{one, zero, zero},
                                    {zero, one, zero},
                                    {zero, zero, one}};
    for (unsigned a = 0; a < 4; ++a) {
      Cyclo w = -Cyclo::zeta(4).pow(a);
      covectors.push_back({one, w, zero});
      covectors.push_back({zero, one, w});
      covectors.push_back({one, zero, w});
    }
    return Arrangement(field, 3, std::move(covectors));
  }
  if (name == "ex37") {
    // xyz(x^2 - y^2)(y^2 - z^2)(x^2 - z^2) = 0.
    std::vector<Covector> covectors{
        rational_covector({1, 0, 0}),  rational_covector({0, 1, 0}),
        rational_covector({0, 0, 1}),  rational_covector({1, -1, 0}),
        rational_covector({1, 1, 0}),  rational_covector({0, 1, -1}),
        rational_covector({0, 1, 1}),  rational_covector({1, 0, -1}),
        rational_covector({1, 0, 1})};
    return Arrangement(FieldSpec::rational(), 3, std::move(covectors));
  }
  if (name == "ex38") {
    // xy(x+y)(x-y)(x+2y)(x-2y) * (2x+y+cz) for c in {1,2,3,-1,-2,-3}.
    std::vector<Covector> covectors{
        rational_covector({1, 0, 0}),   rational_covector({0, 1, 0}),
        rational_covector({1, 1, 0}),   rational_covector({1, -1, 0}),
        rational_covector({1, 2, 0}),   rational_covector({1, -2, 0}),
        rational_covector({2, 1, 1}),   rational_covector({2, 1, 2}),
        rational_covector({2, 1, 3}),   rational_covector({2, 1, -1}),
        rational_covector({2, 1, -2}),  rational_covector({2, 1, -3})};
    return Arrangement(FieldSpec::rational(), 3, std::move(covectors));
  }
  if (name == "ex39") {
    // xy(x-y)(x+y)(x-2y)(x+2y) * zt(z-t)(z+t)(z-2t)(z+2t) in C^4.
    std::vector<Covector> covectors{
        rational_covector({1, 0, 0, 0}),  rational_covector({0, 1, 0, 0}),
        rational_covector({1, -1, 0, 0}), rational_covector({1, 1, 0, 0}),
        rational_covector({1, -2, 0, 0}), rational_covector({1, 2, 0, 0}),
        rational_covector({0, 0, 1, 0}),  rational_covector({0, 0, 0, 1}),
        rational_covector({0, 0, 1, -1}), rational_covector({0, 0, 1, 1}),
        rational_covector({0, 0, 1, -2}), rational_covector({0, 0, 1, 2})};
    return Arrangement(FieldSpec::rational(), 4, std::move(covectors));
  }
  if (name == "remark311") {
    SimpleGraph gamma(5);
    gamma.add_edge(1, 2);
    gamma.add_edge(1, 3);
    gamma.add_edge(1, 4);
    gamma.add_edge(1, 5);
    gamma.add_edge(2, 3);
    gamma.add_edge(3, 4);
    gamma.add_edge(3, 5);
    return gen_graphic(gamma);
  }
  throw InputError("unknown-name", "unknown arrangement name '" + name + "'");
}

Arrangement gen_graphic(const SimpleGraph& graph) {
  if (graph.edges().empty()) {
    throw PreconditionError("graphic-empty",
                            "graphic arrangement needs at least one edge");
  }
  int rank = graph.vertex_count();
  std::vector<Covector> covectors;
  covectors.reserve(graph.edges().size());
  for (const auto& [a, b] : graph.edges()) {
    std::vector<long long> entries(static_cast<size_t>(rank), 0);
    entries[static_cast<size_t>(a - 1)] = 1;
    entries[static_cast<size_t>(b - 1)] = -1;
    covectors.push_back(rational_covector(entries));
  }
  return Arrangement(FieldSpec::rational(), rank, std::move(covectors));
}

std::pair<Arrangement, GenericityCertificate> generic_slice(
    const Arrangement& arrangement, unsigned long long seed) {
  if (arrangement.ambient_rank() < 3) {
    throw PreconditionError("slice-rank",
                            "generic slice needs ambient rank >= 3");
  }
  if (arrangement.ambient_rank() == 3) {
    GenericityCertificate cert;
    cert.sliced = false;
    cert.attempts = 0;
    cert.multiplicity_multiset =
        rank2_flats(arrangement).multiplicity_multiset();
    cert.note = "ambient rank already 3";
    return {arrangement, cert};
  }
  if (arrangement.essential_rank() < 3) {
    throw PreconditionError("slice-rank",
                            "covector matrix rank must be at least 3");
  }
  const std::map<int, int> base_multiset =
      rank2_flats(arrangement).multiplicity_multiset();
  const int n1 = arrangement.ambient_rank();
  const int max_attempts = 32;
  std::string last_failure = "no attempt made";
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::mt19937_64 rng(derived_seed(seed, attempt));
    const long long box = 3 + attempt;
    std::vector<std::array<long long, 3>> rows(static_cast<size_t>(n1));
    for (auto& row : rows) {
      for (long long& v : row) {
        v = static_cast<long long>(rng() % static_cast<unsigned long long>(
                                       2 * box + 1)) - box;
      }
    }
    std::vector<Covector> restricted;
    restricted.reserve(static_cast<size_t>(arrangement.size()));
    bool zero_seen = false;
    for (int h = 0; h < arrangement.size(); ++h) {
      Covector cov;
      for (int j = 0; j < 3; ++j) {
        Cyclo sum(arrangement.field().conductor);
        for (int r = 0; r < n1; ++r) {
          const Cyclo& c = arrangement.covector(h)[static_cast<size_t>(r)];
          if (is_zero(c)) continue;
          sum = sum + c * Rational(static_cast<long>(rows[static_cast<size_t>(r)][static_cast<size_t>(j)]));
        }
        cov.push_back(std::move(sum));
      }
      bool zero = true;
      for (const Cyclo& c : cov) {
        if (!is_zero(c)) zero = false;
      }
      if (zero) {
        zero_seen = true;
        break;
      }
      restricted.push_back(std::move(cov));
    }
    if (zero_seen) {
      last_failure = "a hyperplane restricted to the zero covector";
      continue;
    }
    // Proportional restrictions collapse two hyperplanes; detect via the
    // same normalization the constructor applies.
    {
      std::set<std::string> keys;
      bool collision = false;
      for (const Covector& cov : restricted) {
        Covector norm = normalize_hyperplane(arrangement.field(), cov);
        std::string key;
        for (const Cyclo& c : norm) key += c.str() + "|";
        if (!keys.insert(key).second) {
          collision = true;
          break;
        }
      }
      if (collision) {
        last_failure = "two hyperplanes restricted to proportional covectors";
        continue;
      }
    }
    Arrangement sliced(arrangement.field(), 3, restricted, arrangement.labels());
    std::map<int, int> multiset = rank2_flats(sliced).multiplicity_multiset();
    if (multiset != base_multiset) {
      last_failure = "rank-2 multiplicity multiset changed";
      continue;
    }
    GenericityCertificate cert;
    cert.sliced = true;
    cert.attempts = attempt + 1;
    cert.embedding_rows = std::move(rows);
    cert.multiplicity_multiset = std::move(multiset);
    cert.note = "verified: d preserved and rank-2 multiplicity multiset equal";
    return {std::move(sliced), cert};
  }
  throw Error("slice-failed", "genericity not achieved after " +
                                  std::to_string(max_attempts) +
                                  " attempts; last failure: " + last_failure);
}

std::optional<ProductPartition> detect_product(const Arrangement& arrangement) {
  const int rank = arrangement.ambient_rank();
  std::vector<int> parent(static_cast<size_t>(rank));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  };
  for (const Covector& cov : arrangement.covectors()) {
    int anchor = -1;
    for (int j = 0; j < rank; ++j) {
      if (is_zero(cov[static_cast<size_t>(j)])) continue;
      if (anchor < 0) {
        anchor = j;
      } else {
        parent[static_cast<size_t>(find(anchor))] = find(j);
      }
    }
  }
  std::vector<int> block_of(static_cast<size_t>(rank), -1);
  std::vector<std::vector<int>> blocks;
  for (int j = 0; j < rank; ++j) {
    int root = find(j);
    if (block_of[static_cast<size_t>(root)] < 0) {
      block_of[static_cast<size_t>(root)] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    block_of[static_cast<size_t>(j)] = block_of[static_cast<size_t>(root)];
    blocks[static_cast<size_t>(block_of[static_cast<size_t>(root)])].push_back(j);
  }
  if (blocks.size() < 2) return std::nullopt;
  ProductPartition partition;
  partition.coordinate_blocks = std::move(blocks);
  partition.block_sizes.assign(partition.coordinate_blocks.size(), 0);
  partition.factor_of_hyperplane.reserve(
      static_cast<size_t>(arrangement.size()));
  for (const Covector& cov : arrangement.covectors()) {
    int block = -1;
    for (int j = 0; j < rank; ++j) {
      if (!is_zero(cov[static_cast<size_t>(j)])) {
        block = block_of[static_cast<size_t>(j)];
        break;
      }
    }
    partition.factor_of_hyperplane.push_back(block);
    partition.block_sizes[static_cast<size_t>(block)] += 1;
  }
  return partition;
}

}  // namespace milnor
