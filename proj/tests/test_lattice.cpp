#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>

#include "doctest.h"
#include "milnor/errors.hpp"
#include "milnor/lattice.hpp"
#include "test_inputs.hpp"

using namespace milnor;
using namespace milnor::testing;

namespace {

long long choose2(long long n) { return n * (n - 1) / 2; }

void check_pair_identity(const Arrangement& a, const FlatList& flats) {
  long long covered = 0;
  for (const Rank2Flat& flat : flats.flats()) {
    covered += choose2(flat.multiplicity);
  }
  CHECK(covered == choose2(a.size()));
}

}  // namespace

TEST_CASE("braid(3) has four triple points and three double points") {
  Arrangement b3 = gen_braid(3);
  FlatList flats = rank2_flats(b3);
  std::map<int, int> expected{{2, 3}, {3, 4}};
  CHECK(flats.multiplicity_multiset() == expected);
  check_pair_identity(b3, flats);
}

TEST_CASE("ceva has twelve triple points and nothing else") {
  Arrangement ceva = gen_named("ceva");
  FlatList flats = rank2_flats(ceva);
  std::map<int, int> expected{{3, 12}};
  CHECK(flats.multiplicity_multiset() == expected);
  check_pair_identity(ceva, flats);
}

TEST_CASE("ex38 carries exactly two multiplicity-6 points") {
  FlatList flats = rank2_flats(gen_named("ex38"));
  CHECK(flats.multiplicity_multiset()[6] == 2);
  CHECK(flats.multiplicity_multiset()[2] == 36);
}

TEST_CASE("pair identity and closure hold on corpus and random inputs") {
  for (const std::string& name : corpus_names()) {
    Arrangement a = load_corpus(name);
    FlatList flats = rank2_flats(a);
    check_pair_identity(a, flats);
    for (const Rank2Flat& flat : flats.flats()) {
      for (int member : flat.members) {
        CHECK(flat_span_contains(a, flat, member));
      }
      for (int h = 0; h < a.size(); ++h) {
        if (!flat.contains(h)) CHECK(!flat_span_contains(a, flat, h));
      }
    }
  }
  for (unsigned long long seed = 0; seed < 10; ++seed) {
    Arrangement a = random_rank3(seed);
    check_pair_identity(a, rank2_flats(a));
  }
}

TEST_CASE("every pair resolves to exactly one flat") {
  Arrangement b3 = gen_braid(3);
  FlatList flats = rank2_flats(b3);
  for (int i = 0; i < b3.size(); ++i) {
    for (int j = 0; j < b3.size(); ++j) {
      if (i == j) continue;
      const Rank2Flat& flat = flats.flat_of_pair(i, j);
      CHECK(flat.contains(i));
      CHECK(flat.contains(j));
    }
  }
  CHECK_THROWS_AS(flats.flat_index_of_pair(0, 0), PreconditionError);
  CHECK_THROWS_AS(flats.flat_index_of_pair(0, 99), PreconditionError);
}

TEST_CASE("flats on the line z of ex37: two quadruple and two double points") {
  Arrangement e37 = gen_named("ex37");
  FlatList flats = rank2_flats(e37);
  int z = e37.index_of_label("z");
  REQUIRE(z >= 0);
  std::vector<Rank2Flat> on_z = flats_on_hyperplane(flats, z);
  std::map<int, int> multiset;
  std::map<int, int> seen;  // every other hyperplane in exactly one flat
  for (const Rank2Flat& flat : on_z) {
    multiset[flat.multiplicity] += 1;
    for (int m : flat.members) {
      if (m != z) seen[m] += 1;
    }
  }
  CHECK(multiset == std::map<int, int>{{2, 2}, {4, 2}});
  CHECK(seen.size() == 8);
  for (const auto& [h, count] : seen) CHECK(count == 1);
}

TEST_CASE("flats on a braid(3) hyperplane: one double and two triples") {
  Arrangement b3 = gen_braid(3);
  FlatList flats = rank2_flats(b3);
  int h12 = b3.index_of_label("x - y");
  REQUIRE(h12 >= 0);
  std::vector<Rank2Flat> on = flats_on_hyperplane(flats, h12);
  std::map<int, int> multiset;
  for (const Rank2Flat& flat : on) multiset[flat.multiplicity] += 1;
  CHECK(multiset == std::map<int, int>{{2, 1}, {3, 2}});
  // the double point pairs x - y with z - t
  for (const Rank2Flat& flat : on) {
    if (flat.multiplicity == 2) {
      int other = flat.members[0] == h12 ? flat.members[1] : flat.members[0];
      CHECK(b3.label(other) == "z - t");
    }
  }
}

TEST_CASE("a pencil has a single central flat") {
  FlatList flats = rank2_flats(pencil3());
  REQUIRE(flats.flats().size() == 1);
  CHECK(flats.flats()[0].multiplicity == 3);
  CHECK(flats_on_hyperplane(flats, 0).size() == 1);
  CHECK_THROWS_AS(flats_on_hyperplane(flats, 3), PreconditionError);
}

TEST_CASE("projective Euler characteristic on rank-3 arrangements") {
  // Triangle x, y, z: the complement is a torus.
  Arrangement triangle(FieldSpec::rational(), 3,
                       {{Cyclo(1, 1), Cyclo(1, 0), Cyclo(1, 0)},
                        {Cyclo(1, 0), Cyclo(1, 1), Cyclo(1, 0)},
                        {Cyclo(1, 0), Cyclo(1, 0), Cyclo(1, 1)}});
  CHECK(euler_char_projective(triangle) == 0);
  // Generic slice of braid(3): chi = 3 - 12 + (4*2 + 3*1) = 2.
  auto [slice, cert] = generic_slice(gen_braid(3), 11);
  CHECK(euler_char_projective(slice) == 2);
  // Four generic lines: chi = 3 - 8 + 6 = 1.
  CHECK(euler_char_projective(generic4()) == 1);
  // Wrong rank is rejected.
  CHECK_THROWS_AS(euler_char_projective(gen_braid(4)), PreconditionError);
}
