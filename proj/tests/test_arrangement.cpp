#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "milnor/arrangement.hpp"
#include "milnor/errors.hpp"
#include "milnor/lattice.hpp"
#include "test_inputs.hpp"

using namespace milnor;
using namespace milnor::testing;

namespace {

Covector qcov(const std::vector<long long>& entries) {
  Covector out;
  for (long long e : entries) out.emplace_back(1, e);
  return out;
}

Covector rational_cov(const std::vector<Rational>& entries) {
  Covector out;
  for (const Rational& e : entries) out.emplace_back(1, e);
  return out;
}

}  // namespace

TEST_CASE("normalization over Q produces primitive signed-integer covectors") {
  FieldSpec q = FieldSpec::rational();
  Covector a = normalize_hyperplane(
      q, rational_cov({Rational(2, 3), Rational(-4, 3), Rational(0)}));
  CHECK(a == qcov({1, -2, 0}));
  CHECK(normalize_hyperplane(q, qcov({-1, 2, 0})) == qcov({1, -2, 0}));
  CHECK(normalize_hyperplane(q, qcov({6, -4, 2})) == qcov({3, -2, 1}));
  CHECK_THROWS_AS(normalize_hyperplane(q, qcov({0, 0, 0})), InputError);

  // Idempotence on random covectors.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Covector v = qcov({draw(rng, -5, 5), draw(rng, -5, 5), draw(rng, -5, 5)});
    bool zero = true;
    for (const Cyclo& c : v) {
      if (!is_zero(c)) zero = false;
    }
    if (zero) continue;
    Covector once = normalize_hyperplane(q, v);
    CHECK(normalize_hyperplane(q, once) == once);
  }
}

TEST_CASE("normalization over a cyclotomic field scales the lead to 1") {
  FieldSpec f = FieldSpec::cyclotomic(3);
  Cyclo z = Cyclo::zeta(3);
  Covector v{z, z, Cyclo(3)};
  Covector n = normalize_hyperplane(f, v);
  CHECK(n[0] == Cyclo(3, 1));
  CHECK(n[1] == Cyclo(3, 1));
  CHECK(is_zero(n[2]));
}

TEST_CASE("gen_braid contract") {
  Arrangement b3 = gen_braid(3);
  CHECK(b3.size() == 6);
  CHECK(b3.ambient_rank() == 4);
  Arrangement b4 = gen_braid(4);
  CHECK(b4.size() == 10);
  CHECK(b4.ambient_rank() == 5);
  Arrangement b2 = gen_braid(2);
  CHECK(b2.size() == 3);
  CHECK(b2.ambient_rank() == 3);
  CHECK_THROWS_AS(gen_braid(1), PreconditionError);
}

TEST_CASE("gen_named covers the bundled corpus") {
  struct Expected {
    const char* name;
    int d;
    int rank;
    bool rational;
  };
  for (const Expected& e :
       std::initializer_list<Expected>{{"ceva", 9, 3, false},
                                       {"ex36", 15, 3, false},
                                       {"ex37", 9, 3, true},
                                       {"ex38", 12, 3, true},
                                       {"ex39", 12, 4, true},
                                       {"remark311", 7, 5, true}}) {
    Arrangement a = gen_named(e.name);
    CHECK(a.size() == e.d);
    CHECK(a.ambient_rank() == e.rank);
    CHECK(a.field().is_rational() == e.rational);
  }
  CHECK(gen_named("ceva").field().conductor == 3);
  CHECK(gen_named("ex36").field().conductor == 4);
  CHECK_THROWS_AS(gen_named("nonsense"), InputError);
}

TEST_CASE("gen_graphic matches the braid arrangement on complete graphs") {
  CHECK(gen_graphic(SimpleGraph::complete(4)) == gen_braid(3));
  Arrangement path5 = gen_graphic(SimpleGraph::path(5));
  CHECK(path5.size() == 4);
  CHECK(path5.ambient_rank() == 5);
  CHECK(gen_named("remark311").size() == 7);

  SimpleGraph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
  g.add_edge(1, 2);
  CHECK_THROWS_AS(g.add_edge(2, 1), InputError);  // duplicate
  CHECK_THROWS_AS(SimpleGraph::from_edge_list(""), InputError);
}

TEST_CASE("parsing rejects the documented malformed inputs") {
  CHECK_THROWS_AS(parse_arrangement("{not json"), InputError);
  // zero covector
  CHECK_THROWS_WITH_AS(
      parse_arrangement(R"({"field":{"type":"rational"},"rank":3,
        "hyperplanes":[[1,0,0],[0,0,0]]})"),
      doctest::Contains("nonzero"), InputError);
  // proportional duplicates report both indices
  try {
    parse_arrangement(R"({"field":{"type":"rational"},"rank":3,
      "hyperplanes":[[1,-1,0],[0,0,1],[-2,2,0]]})");
    FAIL("expected duplicate-hyperplane");
  } catch (const InputError& e) {
    CHECK(e.code() == "duplicate-hyperplane");
    CHECK(std::string(e.what()).find("0") != std::string::npos);
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
  // malformed rational
  CHECK_THROWS_AS(parse_arrangement(R"({"field":{"type":"rational"},"rank":2,
      "hyperplanes":[["1/x",1]]})"),
                  InputError);
  CHECK_THROWS_AS(parse_arrangement(R"({"field":{"type":"rational"},"rank":2,
      "hyperplanes":[["1/0",1]]})"),
                  InputError);
  // conductor mismatch: 3 coefficients in the power basis of phi(3) = 2
  CHECK_THROWS_WITH_AS(
      parse_arrangement(R"({"field":{"type":"cyclotomic","conductor":3},
        "rank":2,"hyperplanes":[[[1,0,0],[1]]]})"),
      doctest::Contains("phi"), InputError);
  // label count mismatch
  CHECK_THROWS_AS(parse_arrangement(R"({"field":{"type":"rational"},"rank":2,
      "hyperplanes":[[1,0],[0,1]],"labels":["only-one"]})"),
                  InputError);
}

TEST_CASE("documents round-trip byte-for-byte through parse and print") {
  for (const std::string& name : corpus_names()) {
    Arrangement a = load_corpus(name);
    Arrangement b = parse_arrangement(to_document(a));
    CHECK(a == b);
    CHECK(to_document(a) == to_document(b));
  }
}

TEST_CASE("canonical ordering makes hyperplane order irrelevant") {
  Arrangement shuffled = parse_arrangement(
      R"({"field":{"type":"rational"},"rank":4,"hyperplanes":[
        [0,1,0,-1],[1,-1,0,0],[0,0,1,-1],[1,0,0,-1],[0,1,-1,0],[1,0,-1,0]]})");
  Arrangement braid = gen_braid(3);
  CHECK(shuffled.covectors() == braid.covectors());
  CHECK(shuffled == braid);
}

TEST_CASE("generic slice preserves d and the multiplicity multiset") {
  Arrangement b4 = gen_braid(4);
  auto [slice, cert] = generic_slice(b4, 5);
  CHECK(slice.ambient_rank() == 3);
  CHECK(slice.size() == 10);
  CHECK(cert.sliced);
  CHECK(cert.multiplicity_multiset == rank2_flats(b4).multiplicity_multiset());
  CHECK(rank2_flats(slice).multiplicity_multiset() ==
        cert.multiplicity_multiset);
  // Labels survive the slice so reports can point at original hyperplanes.
  std::set<std::string> labels(slice.labels().begin(), slice.labels().end());
  CHECK(labels.count("x1 - x2") == 1);
}

TEST_CASE("generic slice returns rank-3 inputs unchanged") {
  Arrangement e37 = gen_named("ex37");
  auto [same, cert] = generic_slice(e37, 123);
  CHECK(same == e37);
  CHECK(!cert.sliced);
  CHECK(cert.attempts == 0);
}

TEST_CASE("generic slice rejects inputs of essential rank below 3") {
  // A pencil coned to ambient rank 4 spans only a rank-2 covector space.
  Arrangement coned(FieldSpec::rational(), 4,
                    {qcov({1, 0, 0, 0}), qcov({0, 1, 0, 0}), qcov({1, 1, 0, 0})});
  CHECK_THROWS_AS(generic_slice(coned, 0), PreconditionError);
  CHECK_NOTHROW(generic_slice(pencil3(), 0));  // ambient rank 3: no slice
}

TEST_CASE("generic slice retries adversarial seeds and still certifies") {
  // Found by scanning: this seed's first candidate subspace is degenerate,
  // so the slice must retry with a derived seed before the certificate
  // validates.
  Arrangement b4 = gen_braid(4);
  bool found_retry = false;
  for (unsigned long long seed = 0; seed < 400 && !found_retry; ++seed) {
    auto [slice, cert] = generic_slice(b4, seed);
    CHECK(cert.multiplicity_multiset ==
          rank2_flats(slice).multiplicity_multiset());
    if (cert.attempts > 1) found_retry = true;
  }
  CHECK(found_retry);
}

TEST_CASE("product detection finds coordinate splits") {
  std::optional<ProductPartition> p39 = detect_product(gen_named("ex39"));
  REQUIRE(p39.has_value());
  CHECK(p39->coordinate_blocks ==
        std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  CHECK(p39->block_sizes == std::vector<int>{6, 6});

  CHECK(!detect_product(gen_braid(3)).has_value());

  Arrangement axes(FieldSpec::rational(), 2, {qcov({1, 0}), qcov({0, 1})});
  std::optional<ProductPartition> pa = detect_product(axes);
  REQUIRE(pa.has_value());
  CHECK(pa->coordinate_blocks == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(pa->block_sizes == std::vector<int>{1, 1});
}

TEST_CASE("arrangement constructor validates shape") {
  CHECK_THROWS_AS(Arrangement(FieldSpec::rational(), 1, {qcov({1})}),
                  InputError);
  CHECK_THROWS_AS(Arrangement(FieldSpec::rational(), 3, {}), InputError);
  CHECK_THROWS_AS(Arrangement(FieldSpec::rational(), 3, {qcov({1, 0})}),
                  InputError);
  // conductor mismatch between field and entries
  CHECK_THROWS_AS(
      Arrangement(FieldSpec::cyclotomic(4), 2,
                  {{Cyclo(3, 1), Cyclo(3, 0)}}),
      InputError);
}

TEST_CASE("labels default to the defining linear form") {
  Arrangement e37 = gen_named("ex37");
  CHECK(e37.index_of_label("z") >= 0);
  CHECK(e37.index_of_label("x - y") >= 0);
  CHECK(e37.index_of_label("y + z") >= 0);
  Arrangement b2 = gen_braid(2);
  CHECK(b2.index_of_label("x - y") >= 0);
  CHECK(b2.index_of_label("y - z") >= 0);
}
