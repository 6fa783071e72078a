#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gbn/core.hpp"

using namespace gbn;

TEST_CASE("rho for line bundles") {
  CHECK(rho_rank1(10, 1, 7) == 2);
  CHECK(rho_rank1(10, 0, 5) == 5);
  CHECK(rho_rank1(10, 1, 6) == 0);
  CHECK_THROWS_AS(rho_rank1(-1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(rho_rank1(10, -1, 5), std::invalid_argument);
}

TEST_CASE("rho_rank1 at r = 0 is the degree") {
  for (long long g = 1; g <= 40; ++g)
    for (long long d = -5; d <= 90; ++d) CHECK(rho_rank1(g, 0, d) == d);
}

TEST_CASE("general line bundle profile") {
  auto p = general_line_bundle_profile(10, 6);
  CHECK(p.h0 == 0);
  CHECK(p.h1 == 3);
  p = general_line_bundle_profile(10, -1);
  CHECK(p.h0 == 0);
  CHECK(p.h1 == 10);
  p = general_line_bundle_profile(10, 9);
  CHECK(p.h0 == 0);
  CHECK(p.h1 == 0);
  CHECK_THROWS_AS(general_line_bundle_profile(0, 3), std::invalid_argument);
}

TEST_CASE("profile satisfies Riemann-Roch") {
  for (long long g = 1; g <= 60; ++g)
    for (long long e = -20; e <= 80; ++e) {
      auto p = general_line_bundle_profile(g, e);
      CHECK(p.h0 - p.h1 == e - g + 1);
      CHECK(p.h0 >= 0);
      CHECK(p.h1 >= 0);
    }
}

TEST_CASE("k index") {
  CHECK(k_index(10, 26, 2) == 10);
  CHECK(k_index(10, 36, 2) == 20);
  CHECK_THROWS_AS(k_index(10, 26, -1), std::invalid_argument);
}

TEST_CASE("rank 2 expected dimension") {
  CHECK(rho_rank2(10, 26, 2) == 17);
  CHECK(rho_rank2(10, 31, 2) == 7);
  for (long long g = 2; g <= 50; ++g) CHECK(rho_rank2(g, 4 * g - 6, 2) == 1);
  CHECK_THROWS_AS(rho_rank2(10, 26, 0), std::invalid_argument);
}

TEST_CASE("fixed determinant expected dimension") {
  CHECK(rho_fixed_det(10, 26) == 7);
  CHECK(rho_fixed_det(10, 30) == -1);
  // fixing the determinant cuts exactly g
  for (long long g = 2; g <= 50; ++g)
    for (long long d = 2 * g - 2; d <= 4 * g - 4; ++d)
      CHECK(rho_rank2(g, d, 2) - rho_fixed_det(g, d) == g);
}

TEST_CASE("curve parameter validation") {
  CHECK_NOTHROW(CurveParams(10, 3));
  CHECK_NOTHROW(CurveParams(10, 5));
  // floor((10+3)/2) = 6 is the generic gonality, excluded
  CHECK_THROWS_AS(CurveParams(10, 6), std::invalid_argument);
  CHECK_NOTHROW(CurveParams(11, 6));
  CHECK_THROWS_AS(CurveParams(11, 7), std::invalid_argument);
  CHECK_THROWS_AS(CurveParams(10, 2), std::invalid_argument);
  CHECK_THROWS_AS(CurveParams(4, 3), std::invalid_argument);  // no valid nu at g=4
  CHECK_NOTHROW(CurveParams(5, 3));
}

TEST_CASE("input magnitude cap") {
  CHECK_THROWS_AS(rho_rank1(2000000, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(k_index(10, -2000000, 2), std::invalid_argument);
}
