#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gbn/rank1.hpp"

using namespace gbn;

TEST_CASE("stratify splits by shift") {
  CurveParams c(10, 4);
  auto comps = stratify(c, 1, 7);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].shift == 0);
  CHECK(comps[0].vector.e == std::vector<long long>{-3, -3, 0, 0});
  CHECK(comps[0].dimension == 2);
  CHECK(comps[0].generic == GenericElement::BasePointFreePencil);
  CHECK(comps[1].shift == 1);
  CHECK(comps[1].vector.e == std::vector<long long>{-3, -2, -2, 1});
  CHECK(comps[1].dimension == 3);
  CHECK(comps[1].generic == GenericElement::GonalPlusBasePoints);
  CHECK(comps[1].base_degree == 3);
}

TEST_CASE("stratify full picard") {
  CurveParams c(10, 4);
  auto comps = stratify(c, 1, 11);
  REQUIRE(comps.size() == 1);
  CHECK_FALSE(comps[0].shift.has_value());
  CHECK(comps[0].dimension == 10);
  CHECK(comps[0].generic == GenericElement::FullPicard);
  CHECK(comps[0].vector.e == std::vector<long long>{-1, -1, 0, 0});
}

TEST_CASE("stratify empty locus") {
  CurveParams c(10, 4);
  CHECK(stratify(c, 1, 3).empty());
  CHECK(stratify(c, 1, 0).empty());
  CHECK_THROWS_AS(stratify(c, -1, 5), std::invalid_argument);
  CHECK_THROWS_AS(stratify(c, 1, -1), std::invalid_argument);
}

TEST_CASE("stratify rank zero is effective divisors") {
  CurveParams c(10, 3);
  for (long long d = 0; d <= 9; ++d) {
    auto comps = stratify(c, 0, d);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].dimension == d);
    CHECK(comps[0].generic == GenericElement::GeneralSeries);
  }
}

TEST_CASE("pencil rows") {
  CurveParams c(10, 4);

  auto t3 = pencil_table(c, 3);
  CHECK(t3.row == PencilCase::Empty);
  CHECK(t3.components.empty());

  auto t5 = pencil_table(c, 5);
  CHECK(t5.row == PencilCase::GonalPlusBasePoints);
  REQUIRE(t5.components.size() == 1);
  CHECK(t5.components[0].dimension == 1);
  CHECK(t5.components[0].generic == GenericElement::GonalPlusBasePoints);
  CHECK(t5.components[0].base_degree == 1);

  auto t7 = pencil_table(c, 7);
  CHECK(t7.row == PencilCase::BothTypes);
  REQUIRE(t7.components.size() == 2);
  CHECK(t7.components[0].dimension == 2);  // 2t - g - 2
  CHECK(t7.components[1].dimension == 3);  // t - nu

  auto t10 = pencil_table(c, 10);
  CHECK(t10.row == PencilCase::BasePointFree);
  REQUIRE(t10.components.size() == 1);
  CHECK(t10.components[0].dimension == 8);
  CHECK(t10.components[0].generic == GenericElement::BasePointFreePencil);

  auto t11 = pencil_table(c, 11);
  CHECK(t11.row == PencilCase::FullPicard);
  REQUIRE(t11.components.size() == 1);
  CHECK(t11.components[0].dimension == 10);
}

TEST_CASE("pencil table agrees with stratify and the row dimensions") {
  for (long long g = 4; g <= 24; ++g)
    for (long long nu = 3; nu < (g + 3) / 2; ++nu) {
      CurveParams c(g, nu);
      for (long long t = 0; t <= g + 2; ++t) {
        auto table = pencil_table(c, t);
        auto direct = stratify(c, 1, t);
        REQUIRE(table.components.size() == direct.size());
        for (size_t i = 0; i < direct.size(); ++i) {
          CHECK(table.components[i].shift == direct[i].shift);
          CHECK(table.components[i].vector == direct[i].vector);
          CHECK(table.components[i].dimension == direct[i].dimension);
        }
        for (const auto& comp : table.components) {
          CHECK(comp.dimension ==
                std::min(g, expected_splitting_dim(g, comp.vector)));
          CHECK(comp.dimension >= 0);
          if (comp.generic == GenericElement::GonalPlusBasePoints)
            CHECK(comp.dimension == t - nu);
          if (comp.generic == GenericElement::BasePointFreePencil)
            CHECK(comp.dimension == 2 * t - g - 2);
          if (comp.generic != GenericElement::FullPicard)
            CHECK(euler_data(comp.vector).h0 == 2);
        }
        switch (table.row) {
          case PencilCase::Empty: CHECK(table.components.empty()); break;
          case PencilCase::GonalPlusBasePoints:
          case PencilCase::BasePointFree:
            CHECK(table.components.size() == 1);
            break;
          case PencilCase::BothTypes:
            CHECK(table.components.size() == 2);
            break;
          case PencilCase::FullPicard:
            REQUIRE(table.components.size() == 1);
            CHECK(table.components[0].dimension == g);
            break;
        }
      }
    }
}

TEST_CASE("gonal power dimensions") {
  CurveParams c(10, 4);
  CHECK(gonal_power_dim(c, 3) == 3);
  CHECK(gonal_power_dim(c, 4) == 6);
  CHECK(gonal_power_dim(c, 0) == 0);
  CHECK(gonal_power_dim(c, 1) == 1);
  CHECK_THROWS_AS(gonal_power_dim(c, -1), std::invalid_argument);
  // r nu - g >= r exactly at the crossover, so the two branches glue
  for (long long g = 4; g <= 20; ++g)
    for (long long nu = 3; nu < (g + 3) / 2; ++nu) {
      CurveParams cc(g, nu);
      for (long long r = 1; r <= 8; ++r) {
        long long dim = gonal_power_dim(cc, r);
        CHECK(dim >= gonal_power_dim(cc, r - 1));
        CHECK(dim >= std::max(r, r * nu - g));
        CHECK(dim <= std::max(r, r * nu - g));
      }
    }
}

TEST_CASE("names") {
  CHECK(std::string(generic_element_name(GenericElement::FullPicard)) ==
        "full_picard");
  CHECK(std::string(pencil_case_name(PencilCase::BothTypes)) == "both_types");
}
