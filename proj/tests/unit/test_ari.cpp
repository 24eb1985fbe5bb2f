#include <doctest.h>

#include <vector>

#include "core/rng.hpp"
#include "eval/ari.hpp"
#include "support/reference.hpp"

using namespace tsbm;
using tsbm::testing::brute_force_ari;
using tsbm::testing::random_labels;

TEST_CASE("ari basics") {
  SUBCASE("identical partitions score 1") {
    const std::vector<std::int32_t> x{0, 0, 1, 1, 2};
    CHECK(ari(x, x) == 1.0);
  }
  SUBCASE("one cluster against singletons scores 0") {
    const std::vector<std::int32_t> x{0, 0, 0, 0};
    const std::vector<std::int32_t> y{0, 1, 2, 3};
    CHECK(ari(x, y) == 0.0);
  }
  SUBCASE("fully crossed two-by-two scores -1/2") {
    const std::vector<std::int32_t> x{1, 1, 2, 2};
    const std::vector<std::int32_t> y{1, 2, 1, 2};
    CHECK(ari(x, y) == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(brute_force_ari(x, y) == doctest::Approx(-0.5).epsilon(1e-12));
  }
  SUBCASE("degenerate pairs agree by convention") {
    const std::vector<std::int32_t> ones_a{3, 3, 3};
    const std::vector<std::int32_t> ones_b{7, 7, 7};
    CHECK(ari(ones_a, ones_b) == 1.0);  // same trivial partition
    const std::vector<std::int32_t> singletons{0, 1, 2};
    CHECK(ari(singletons, singletons) == 1.0);
  }
  SUBCASE("errors") {
    const std::vector<std::int32_t> x{0, 1};
    const std::vector<std::int32_t> y{0, 1, 2};
    CHECK_THROWS_AS(ari(x, y), std::invalid_argument);
    const std::vector<std::int32_t> one{0};
    CHECK_THROWS_AS(ari(one, one), std::invalid_argument);
  }
}

TEST_CASE("confusion tables") {
  SUBCASE("identical binary partitions give a diagonal table") {
    const std::vector<std::int32_t> x{0, 0, 1, 1};
    const auto c = confusion(x, x);
    CHECK(c.n_rows == 2);
    CHECK(c.n_cols == 2);
    CHECK(c.at(0, 0) == 2);
    CHECK(c.at(1, 1) == 2);
    CHECK(c.at(0, 1) == 0);
  }
  SUBCASE("fully crossed labels fill every cell once") {
    const std::vector<std::int32_t> x{1, 1, 2, 2};
    const std::vector<std::int32_t> y{1, 2, 1, 2};
    const auto c = confusion(x, y);
    for (int r = 0; r < 2; ++r)
      for (int k = 0; k < 2; ++k) CHECK(c.at(r, k) == 1);
  }
  SUBCASE("totals are conserved on random vectors") {
    Rng rng(2);
    for (int rep = 0; rep < 20; ++rep) {
      const auto x = random_labels(rng, 30, 5);
      const auto y = random_labels(rng, 30, 4);
      const auto c = confusion(x, y);
      std::int64_t total = 0;
      for (std::int64_t cell : c.table) total += cell;
      CHECK(total == 30);
    }
  }
}

TEST_CASE("ari properties on random labelings") {
  Rng rng(99);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 2 + static_cast<int>(rng.below(49));
    const auto x = random_labels(rng, n, 1 + static_cast<int>(rng.below(6)));
    const auto y = random_labels(rng, n, 1 + static_cast<int>(rng.below(6)));

    const double value = ari(x, y);
    CHECK(value == doctest::Approx(brute_force_ari(x, y)).epsilon(1e-12));
    CHECK(value == ari(y, x));
    CHECK(ari(x, x) == 1.0);

    // relabeling either side changes nothing
    auto relabeled = x;
    for (auto& c : relabeled) c = 1000 - 7 * c;
    CHECK(ari(relabeled, y) == doctest::Approx(value).epsilon(1e-12));
  }
}
