#include <doctest.h>

#include <cmath>
#include <map>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tango/metrics.hpp"

using namespace tango;

namespace {

std::vector<int> random_labels(std::size_t n, int classes, std::uint64_t seed) {
  detail::Rng rng(seed);
  std::vector<int> out(n);
  for (int& v : out) v = static_cast<int>(rng.uniform_index(classes));
  return out;
}

std::vector<int> from_contingency(const std::vector<std::vector<int>>& table,
                                  bool truth_side) {
  std::vector<int> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table[i].size(); ++j) {
      for (int t = 0; t < table[i][j]; ++t) {
        out.push_back(truth_side ? static_cast<int>(j)
                                 : static_cast<int>(i));
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("perfect agreement scores 1 everywhere") {
  const std::vector<int> a{0, 0, 1, 2, 2, 1};
  CHECK(ari(a, a) == 1.0);
  CHECK(nmi(a, a) == 1.0);
  CHECK(acc(a, a) == 1.0);
}

TEST_CASE("relabeling is absorbed") {
  const std::vector<int> a{0, 0, 1, 2, 2, 1};
  const std::vector<int> b{5, 5, 9, 7, 7, 9};
  CHECK(ari(a, b) == 1.0);
  CHECK(nmi(a, b) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(acc(a, b) == 1.0);
}

TEST_CASE("binary flip keeps accuracy at 1") {
  const std::vector<int> truth{0, 1, 0, 1, 1, 0};
  const std::vector<int> flipped{1, 0, 1, 0, 0, 1};
  CHECK(acc(flipped, truth) == 1.0);
}

TEST_CASE("hand contingency table cross-checked against pair counting") {
  const auto pred = from_contingency({{10, 2}, {3, 15}}, false);
  const auto truth = from_contingency({{10, 2}, {3, 15}}, true);
  const double got = ari(pred, truth);
  const double expected = oracle::pair_counting_ari(pred, truth);
  CHECK(got == doctest::Approx(expected).epsilon(1e-12));
  CHECK(got > 0.0);
  CHECK(got < 1.0);
}

TEST_CASE("independent balanced partitions have zero mutual information") {
  // pred splits by index parity, truth by index half: counts are exactly
  // uniform over the 2x2 table.
  std::vector<int> pred, truth;
  for (int i = 0; i < 100; ++i) {
    pred.push_back(i % 2);
    truth.push_back(i < 50 ? 0 : 1);
  }
  CHECK(nmi(pred, truth) <= 1e-12);
}

TEST_CASE("ari matches pair counting on random labelings") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto pred = random_labels(60, 2 + seed % 5, seed * 2 + 1);
    const auto truth = random_labels(60, 2 + seed % 4, seed * 3 + 2);
    const double got = ari(pred, truth);
    const double expected = oracle::pair_counting_ari(pred, truth);
    REQUIRE(std::abs(got - expected) <= 1e-12);
  }
}

TEST_CASE("nmi matches the definition on random labelings") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto pred = random_labels(100, 2 + seed % 6, seed * 5 + 3);
    const auto truth = random_labels(100, 2 + seed % 5, seed * 7 + 4);
    const double got = nmi(pred, truth);
    const double expected = oracle::definition_nmi(pred, truth);
    REQUIRE(std::abs(got - expected) <= 1e-12);
  }
}

TEST_CASE("acc matches the factorial enumeration oracle") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto pred = random_labels(40, 2 + seed % 5, seed * 11 + 5);
    const auto truth = random_labels(40, 2 + seed % 5, seed * 13 + 6);
    const double got = acc(pred, truth);
    const double expected = oracle::permutation_acc(pred, truth);
    REQUIRE(std::abs(got - expected) <= 1e-12);
  }
}

TEST_CASE("rectangular tables: many predicted clusters, few true ones") {
  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    const auto pred = random_labels(50, 2 + seed % 6, seed);
    const auto truth = random_labels(50, 2, seed + 1000);
    REQUIRE(std::abs(acc(pred, truth) -
                     oracle::permutation_acc(pred, truth)) <= 1e-12);
  }
}

TEST_CASE("metric invariance under relabeling both sides") {
  const auto pred = random_labels(80, 4, 17);
  const auto truth = random_labels(80, 3, 18);
  auto remap = [](const std::vector<int>& v, int mul, int add) {
    std::vector<int> out(v);
    for (int& x : out) x = x * mul + add;
    return out;
  };
  const auto pred2 = remap(pred, 7, 3);
  const auto truth2 = remap(truth, 5, 11);
  CHECK(ari(pred, truth) == ari(pred2, truth2));
  CHECK(nmi(pred, truth) == nmi(pred2, truth2));
  CHECK(acc(pred, truth) == acc(pred2, truth2));
}

TEST_CASE("single-cluster prediction accuracy equals the majority share") {
  const std::vector<int> truth{0, 0, 0, 0, 0, 0, 0, 1, 1, 2};
  const std::vector<int> pred(truth.size(), 0);
  CHECK(acc(pred, truth) == doctest::Approx(0.7));
}

TEST_CASE("length mismatch is an error") {
  const std::vector<int> a{0, 1};
  const std::vector<int> b{0, 1, 2};
  CHECK_THROWS_AS(ari(a, b), ConfigError);
  CHECK_THROWS_AS(nmi(a, b), ConfigError);
  CHECK_THROWS_AS(acc(a, b), ConfigError);
}

TEST_CASE("json report carries all six fields") {
  const std::vector<int> truth{0, 0, 1, 1};
  const std::vector<int> pred{1, 1, 0, 0};
  const MetricsReport r = evaluate(pred, truth);
  CHECK(r.ari == 1.0);
  CHECK(r.acc == 1.0);
  CHECK(r.n == 4);
  CHECK(r.clusters_pred == 2);
  CHECK(r.clusters_true == 2);
  const std::string json = to_json(r);
  for (const char* key :
       {"\"ari\"", "\"nmi\"", "\"acc\"", "\"n\"", "\"clusters_pred\"",
        "\"clusters_true\""}) {
    CHECK(json.find(key) != std::string::npos);
  }
}
