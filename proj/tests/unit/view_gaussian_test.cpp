#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "deviant/error.hpp"
#include "deviant/iir.hpp"
#include "deviant/view_gaussian.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace deviant;

TEST_SUITE("view_gaussian") {
  TEST_CASE("anchor construction") {
    const std::vector<double> v{-1, 1};
    const auto a = make_anchor(v, 0);
    CHECK(a.center == -1);
    CHECK(a.furthest == 1);
    CHECK(a.sigma == doctest::Approx(2.0 / 3.0));
    const std::vector<double> tie{0, -2, 2};
    CHECK(make_anchor(tie, 0).furthest == 2);
    CHECK_THROWS_AS(make_anchor(v, 2), Error);
  }

  TEST_CASE("similarity and offset") {
    const GaussianAnchor a{-1, 1, 2.0 / 3.0};
    const auto at_center = gaussian_sim_off(a, -1);
    CHECK(at_center.sim == 1.0);
    CHECK(at_center.off == 0.0);
    const auto far = gaussian_sim_off(a, 1);
    CHECK(far.sim == doctest::Approx(std::exp(-4.5)));
    CHECK(far.off == 2.0);
    try {
      gaussian_sim_off({3, 3, 0}, 3);
      FAIL("expected DegenerateSigma");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegenerateSigma);
    }
  }

  TEST_CASE("two-point closed form") {
    const auto r = gaussian_rdd(Series({-1, 1}));
    const double s = (1 + std::exp(-4.5)) / 2;
    CHECK(r.rdd[0] == doctest::Approx(-std::log(s) * 1.0));
    CHECK(r.rdd[1] == doctest::Approx(r.rdd[0]));
    CHECK(r.rdd[0] == doctest::Approx(0.682).epsilon(1e-3));
  }

  TEST_CASE("constant data") {
    for (double v : gaussian_rdd(Series({4, 4, 4})).rdd) CHECK(v == 0.0);
    CHECK_THROWS_AS(gaussian_rdd(Series({4})), Error);
  }

  TEST_CASE("Barnett") {
    const auto r = gaussian_rdd(Series(fixtures::kBarnett));
    for (std::size_t k = 0; k < r.rdd.size(); ++k)
      CHECK(r.rdd[k] == doctest::Approx(fixtures::kBarnettRdd[k]).epsilon(0.01));
    CHECK(iir_profile(r.rdd).outliers == std::vector<std::size_t>{5, 6});
  }

  TEST_CASE("matches the density-ratio oracle") {
    std::mt19937_64 rng(31);
    std::normal_distribution<double> g(0.0, 3.0);
    for (int rep = 0; rep < 30; ++rep) {
      std::vector<double> y(2 + rep);
      for (auto& v : y) v = std::round(g(rng) * 4) / 4;  // forces ties
      const auto got = gaussian_rdd(Series(y)).rdd;
      const auto want = oracle::gaussian_rdd(y);
      for (std::size_t k = 0; k < y.size(); ++k)
        CHECK(got[k] == doctest::Approx(want[k]).epsilon(1e-9).scale(1e-9));
    }
  }

  TEST_CASE("positive affine covariance, mirroring, permutation") {
    std::mt19937_64 rng(32);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int rep = 0; rep < 30; ++rep) {
      std::vector<double> y(3 + rep % 15);
      for (auto& v : y) v = g(rng);
      const auto base = gaussian_rdd(Series(y)).rdd;

      std::vector<double> t(y), m(y);
      for (auto& v : t) v = 2.5 * v - 40.0;
      for (auto& v : m) v = -v;
      const auto scaled = gaussian_rdd(Series(t)).rdd;
      const auto mirrored = gaussian_rdd(Series(m)).rdd;
      for (std::size_t k = 0; k < y.size(); ++k) {
        CHECK(scaled[k] == doctest::Approx(2.5 * base[k]).epsilon(1e-9));
        CHECK(mirrored[k] == doctest::Approx(base[k]).epsilon(1e-9));
      }

      std::vector<std::size_t> perm(y.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<double> p(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) p[i] = y[perm[i]];
      const auto permuted = gaussian_rdd(Series(p)).rdd;
      for (std::size_t i = 0; i < y.size(); ++i)
        CHECK(permuted[i] == doctest::Approx(base[perm[i]]).epsilon(1e-9));
    }
  }

  TEST_CASE("equal values receive equal scores") {
    const auto r = gaussian_rdd(Series({1, 5, 1, 2, 5, 9})).rdd;
    CHECK(r[0] == r[2]);
    CHECK(r[1] == r[4]);
  }
}
