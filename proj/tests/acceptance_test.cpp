// Acceptance suite: one pass/fail line per criterion, all values exact
// integers checked for exact equality.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdio>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "milnor/analyzer.hpp"
#include "milnor/aomoto.hpp"
#include "milnor/aomoto_oracle.hpp"
#include "milnor/graph.hpp"
#include "test_inputs.hpp"

using namespace milnor;
using namespace milnor::testing;

namespace {

// Accumulates sub-checks of one criterion, then prints a single line and
// registers the outcome with the test framework.
class Criterion {
 public:
  Criterion(int number, std::string description)
      : number_(number), description_(std::move(description)) {}

  void expect(bool condition, const std::string& detail) {
    if (!condition) {
      ok_ = false;
      failures_.push_back(detail);
    }
  }

  ~Criterion() {
    std::printf("[%s] criterion %2d: %s\n", ok_ ? "PASS" : "FAIL", number_,
                description_.c_str());
    for (const std::string& f : failures_) {
      std::printf("       failed: %s\n", f.c_str());
    }
    std::fflush(stdout);
    CHECK_MESSAGE(ok_, "criterion ", number_, ": ", description_);
  }

 private:
  int number_;
  std::string description_;
  bool ok_ = true;
  std::vector<std::string> failures_;
};

int components_of(const Arrangement& a) {
  return build_graph(rank2_flats(a)).component_count();
}

long long h1_over(const Arrangement& a, const CoefficientRing& ring) {
  return aomoto_h1(rank2_flats(a), WeightVector::all_ones(a.size(), ring)).h1_dim;
}

std::set<long long> unknown_ks(const MilnorReport& report) {
  std::set<long long> out;
  for (const EigenStatus& e : report.eigen) {
    if (!e.proved_zero) out.insert(e.k);
  }
  return out;
}

std::set<long long> ks_of_order(long long d, long long order) {
  std::set<long long> out;
  for (long long k = 1; k < d; ++k) {
    if (eigen_order(d, k).order == order) out.insert(k);
  }
  return out;
}

const std::vector<CoefficientRing>& rings() {
  static const std::vector<CoefficientRing> r{
      CoefficientRing::rational(), CoefficientRing::prime(2),
      CoefficientRing::prime(3), CoefficientRing::prime(5),
      CoefficientRing::prime(7)};
  return r;
}

}  // namespace

TEST_CASE("criterion 1") {
  Criterion c(1, "braid graph components: 3 for n in {2,3}, 1 for n in {4,5,6}");
  for (int n : {2, 3}) {
    c.expect(components_of(gen_braid(n)) == 3,
             "braid(" + std::to_string(n) + ") components != 3");
  }
  for (int n : {4, 5, 6}) {
    c.expect(components_of(gen_braid(n)) == 1,
             "braid(" + std::to_string(n) + ") not connected");
  }
}

TEST_CASE("criterion 2") {
  Criterion c(2, "ceva graph: 0 edges, 9 components");
  ArrGraph g = build_graph(rank2_flats(load_corpus("ceva")));
  c.expect(g.edges.empty(), "edge count nonzero");
  c.expect(g.component_count() == 9, "component count != 9");
}

TEST_CASE("criterion 3") {
  Criterion c(3, "ex36 graph over Q(zeta_4): exactly 3 components");
  Arrangement e36 = load_corpus("ex36");
  c.expect(!e36.field().is_rational() && e36.field().conductor == 4,
           "field is not Q(zeta_4)");
  c.expect(components_of(e36) == 3, "component count != 3");
}

TEST_CASE("criterion 4") {
  Criterion c(4,
              "100 random connected rank-3 arrangements: all-ones and "
              "nowhere-zero weights vanish over Q, F2, F3, F5, F7");
  std::vector<Arrangement> sample = random_connected_rank3(1000, 100);
  std::mt19937_64 rng(404);
  int checked = 0;
  for (const Arrangement& a : sample) {
    FlatList flats = rank2_flats(a);
    for (const CoefficientRing& ring : rings()) {
      long long h1 =
          aomoto_h1(flats, WeightVector::all_ones(a.size(), ring)).h1_dim;
      if (h1 != 0) {
        c.expect(false, "all-ones h1 != 0 over " + ring.name());
      }
    }
    std::vector<long long> w;
    for (int i = 0; i < a.size(); ++i) w.push_back(draw(rng, 1, 2));
    long long h1 = aomoto_h1(flats, WeightVector::from_integers(
                                        w, CoefficientRing::prime(3)))
                       .h1_dim;
    if (h1 != 0) c.expect(false, "nowhere-zero F3 weight h1 != 0");
    ++checked;
  }
  c.expect(checked == 100, "fewer than 100 connected samples");
}

TEST_CASE("criterion 5") {
  Criterion c(5,
              "oracle equivalence: brute-force exterior square equals the "
              "blockwise value on the corpus and 50 random arrangements");
  for (const std::string& name : corpus_names()) {
    FlatList flats = rank2_flats(load_corpus(name));
    for (const CoefficientRing& ring : rings()) {
      WeightVector w = WeightVector::all_ones(flats.d(), ring);
      if (os_oracle_h1(flats, w).h1_dim != aomoto_h1(flats, w).h1_dim) {
        c.expect(false, name + " disagrees over " + ring.name());
      }
    }
  }
  for (unsigned long long seed = 2000; seed < 2050; ++seed) {
    Arrangement a = random_rank3(seed, 10);
    FlatList flats = rank2_flats(a);
    for (const CoefficientRing& ring : rings()) {
      WeightVector w = WeightVector::all_ones(a.size(), ring);
      if (os_oracle_h1(flats, w).h1_dim != aomoto_h1(flats, w).h1_dim) {
        c.expect(false, "random seed " + std::to_string(seed) +
                            " disagrees over " + ring.name());
      }
    }
  }
}

TEST_CASE("criterion 6") {
  Criterion c(6,
              "deconing: projective value equals the central one for every "
              "prime p | d; the precondition error fires when p does not");
  const std::vector<long long> primes{2, 3, 5, 7, 11, 13};
  for (const std::string& name : corpus_names()) {
    FlatList flats = rank2_flats(load_corpus(name));
    for (long long p : primes) {
      WeightVector w =
          WeightVector::all_ones(flats.d(), CoefficientRing::prime(p));
      if (flats.d() % p == 0) {
        long long central = aomoto_h1(flats, w).h1_dim;
        long long projective = aomoto_h1_projective(flats, w).h1_dim;
        if (central != projective) {
          c.expect(false, name + " p=" + std::to_string(p) + ": " +
                              std::to_string(projective) +
                              " != " + std::to_string(central));
        }
      } else {
        bool threw = false;
        try {
          aomoto_h1_projective(flats, w);
        } catch (const PreconditionError&) {
          threw = true;
        }
        if (!threw) {
          c.expect(false, name + " p=" + std::to_string(p) +
                              ": missing precondition error");
        }
      }
    }
  }
}

TEST_CASE("criterion 7") {
  Criterion c(7,
              "frozen modular values over F3: braid(3)=1, pencil=1, ceva=2, "
              "braid(4)=0");
  CoefficientRing f3 = CoefficientRing::prime(3);
  c.expect(h1_over(load_corpus("braid3"), f3) == 1, "braid(3) != 1");
  c.expect(h1_over(load_corpus("pencil3"), f3) == 1, "pencil != 1");
  c.expect(h1_over(load_corpus("ceva"), f3) == 2, "ceva != 2");
  c.expect(h1_over(load_corpus("braid4"), f3) == 0, "braid(4) != 0");
}

TEST_CASE("criterion 8") {
  Criterion c(8, "analyze(braid(4)), analyze(braid(5)): trivial monodromy "
                 "with fixed dimensions 9 and 14");
  MilnorReport b4 = analyze(load_corpus("braid4"));
  c.expect(b4.trivial && b4.verdict() == "trivial-monodromy",
           "braid(4) verdict");
  c.expect(b4.h1_fixed_dim == 9, "braid(4) fixed dim != 9");
  MilnorReport b5 = analyze(load_corpus("braid5"));
  c.expect(b5.trivial, "braid(5) verdict");
  c.expect(b5.h1_fixed_dim == 14, "braid(5) fixed dim != 14");
}

TEST_CASE("criterion 9") {
  Criterion c(9,
              "soundness: unknown exactly at order-3 indices for braid(3), "
              "ceva, ex36 and order-6 indices for ex38; all other k proved");
  struct Case {
    const char* name;
    long long order;
  };
  for (const Case& test : std::initializer_list<Case>{
           {"braid3", 3}, {"ceva", 3}, {"ex36", 3}, {"ex38", 6}}) {
    Arrangement a = load_corpus(test.name);
    MilnorReport report = analyze(a);
    std::set<long long> expected = ks_of_order(a.size(), test.order);
    if (unknown_ks(report) != expected) {
      c.expect(false, std::string(test.name) + ": unknown set mismatch");
    }
    c.expect(!report.trivial, std::string(test.name) + ": verdict not undetermined");
  }
}

TEST_CASE("criterion 10") {
  Criterion c(10,
              "analyze(ex37): trivial monodromy with an order-3 "
              "order-divisibility certificate witnessed by the line z");
  MilnorReport report = analyze(load_corpus("ex37"));
  c.expect(report.trivial, "verdict not trivial-monodromy");
  bool saw_order3 = false;
  for (const EigenStatus& e : report.eigen) {
    if (!e.proved_zero || !e.certificate) {
      c.expect(false, "k=" + std::to_string(e.k) + " not proved");
      continue;
    }
    if (e.order == 3) {
      saw_order3 = true;
      const VanishingCertificate& cert = *e.certificate;
      c.expect(cert.kind == VanishingCertificate::Kind::cdo,
               "order-3 certificate is not cdo");
      c.expect(cert.witness >= 0 &&
                   report.labels[static_cast<size_t>(cert.witness)] == "z",
               "order-3 witness is not the line z");
    }
  }
  c.expect(saw_order3, "no order-3 index found");
}

TEST_CASE("criterion 11") {
  Criterion c(11,
              "checkers: theorem table on braid(5)/ex39-slice/ex38/ceva; "
              "double-triple verdicts on {x,y,x-y,z} and ex37");
  auto table = [](const Arrangement& a) {
    FlatList flats = rank2_flats(a);
    return theorem1_check(a, flats, build_graph(flats));
  };
  Theorem1Report b5 = table(load_corpus("braid5"));
  c.expect(b5.graph_connected && b5.multiplicity_bounded && b5.six_condition &&
               b5.overall,
           "braid(5) table should pass all hypotheses");

  auto [slice39, cert39] = generic_slice(load_corpus("ex39"), 1);
  Theorem1Report t39 = table(slice39);
  c.expect(t39.graph_connected, "ex39 slice: graph should be connected");
  c.expect(t39.multiplicity_bounded, "ex39 slice: multiplicities exceed 9");
  c.expect(!t39.six_condition && !t39.overall,
           "ex39 slice: the divisibility hypothesis must fail");

  Theorem1Report t38 = table(load_corpus("ex38"));
  c.expect(t38.graph_connected && t38.multiplicity_bounded &&
               !t38.six_condition && !t38.overall,
           "ex38 must fail exactly the divisibility hypothesis");

  Theorem1Report tceva = table(load_corpus("ceva"));
  c.expect(!tceva.graph_connected && !tceva.overall,
           "ceva must fail the connectivity hypothesis");

  Arrangement np4 = load_corpus("nearpencil4");
  FlatList np4_flats = rank2_flats(np4);
  DoubleTripleReport dt = double_triple_check(np4, np4_flats,
                                              build_graph(np4_flats));
  c.expect(dt.applicable && dt.verdict, "nearpencil verdict");
  c.expect(dt.clause_triple_line_d_gt_3,
           "nearpencil must fire the d > 3 single-triple-line clause");

  Arrangement e37 = load_corpus("ex37");
  FlatList e37_flats = rank2_flats(e37);
  DoubleTripleReport dt37 =
      double_triple_check(e37, e37_flats, build_graph(e37_flats));
  c.expect(!dt37.applicable, "ex37 must be inapplicable");
}

TEST_CASE("criterion 12") {
  Criterion c(12,
              "graphic arrangements: 50 random connected graphs on 5..8 "
              "vertices vanish over F2, F3, Q; remark311 vanishes despite a "
              "disconnected arrangement graph; the triangle gives 1 over F3");
  for (unsigned long long seed = 3000; seed < 3050; ++seed) {
    GraphicReport report = graphic_check(random_connected_graph(seed, 5, 8));
    if (!(report.gamma_connected && report.vanishing_forced)) {
      c.expect(false, "seed " + std::to_string(seed) + ": graph not usable");
      continue;
    }
    if (report.h1_f2 != 0 || report.h1_f3 != 0 || report.h1_q != 0) {
      c.expect(false, "seed " + std::to_string(seed) + ": nonzero value");
    }
  }
  SimpleGraph gamma311(5);
  gamma311.add_edge(1, 2);
  gamma311.add_edge(1, 3);
  gamma311.add_edge(1, 4);
  gamma311.add_edge(1, 5);
  gamma311.add_edge(2, 3);
  gamma311.add_edge(3, 4);
  gamma311.add_edge(3, 5);
  GraphicReport r311 = graphic_check(gamma311);
  c.expect(!r311.arr_graph_connected,
           "remark311 arrangement graph should be disconnected");
  c.expect(r311.h1_f3 == 0 && r311.h1_f2 == 0 && r311.h1_q == 0,
           "remark311 values must vanish");
  GraphicReport triangle = graphic_check(SimpleGraph::complete(3));
  c.expect(triangle.h1_f3 == 1, "triangle over F3 != 1");
}

TEST_CASE("criterion 13") {
  Criterion c(13,
              "generic slice: braid(4) and ex39 slices preserve the rank-2 "
              "multiplicity multiset and analyze is seed-independent across "
              "10 seeds");
  for (std::string name : {"braid4", "ex39"}) {
    Arrangement a = load_corpus(name);
    std::map<int, int> original = rank2_flats(a).multiplicity_multiset();
    auto [slice, cert] = generic_slice(a, 42);
    c.expect(slice.ambient_rank() == 3, name + ": slice rank != 3");
    c.expect(cert.sliced, name + ": certificate missing");
    c.expect(cert.multiplicity_multiset == original,
             name + ": certificate multiset differs from the input's");
    c.expect(rank2_flats(slice).multiplicity_multiset() == original,
             name + ": slice multiset differs from the input's");

    MilnorReport base = analyze(a, 1);
    for (unsigned long long seed = 2; seed <= 10; ++seed) {
      MilnorReport other = analyze(a, seed);
      if (other.trivial != base.trivial ||
          unknown_ks(other) != unknown_ks(base)) {
        c.expect(false, name + ": seed " + std::to_string(seed) +
                            " changed the analysis outcome");
      }
    }
  }
}
