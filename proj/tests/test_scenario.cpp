#include <doctest.h>

#include <fstream>

#include "xprod/scenario.hpp"

using namespace xprod;

namespace {

const std::string kFixtureDir = std::string(XPROD_SOURCE_DIR) + "/fixtures/";

Json read_json(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  return Json::parse(in);
}

bool same_elements(const std::vector<CrossedElement>& a,
                   const std::vector<CrossedElement>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].terms() == b[i].terms())) return false;
  }
  return true;
}

bool same_splits(const std::vector<FreenessSplit>& a, const std::vector<FreenessSplit>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].a != b[i].a || a[i].b != b[i].b) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("fixture files stay in sync with the built-in configurations") {
  const std::vector<Scenario> builders = bundled_fixtures();
  for (const Scenario& built : builders) {
    const Scenario loaded = load_scenario(kFixtureDir + built.name + ".json");
    CHECK(loaded.name == built.name);
    CHECK(*loaded.ctx == *built.ctx);
    CHECK(loaded.tolerance == built.tolerance);
    CHECK(loaded.seed == built.seed);
    REQUIRE(loaded.freeness.has_value());
    REQUIRE(built.freeness.has_value());
    CHECK(loaded.freeness->max_order == built.freeness->max_order);
    CHECK(loaded.freeness->trials == built.freeness->trials);
    CHECK(same_splits(loaded.freeness->splits, built.freeness->splits));
    if (built.moments) {
      REQUIRE(loaded.moments.has_value());
      CHECK(same_elements(loaded.moments->elements, built.moments->elements));
      CHECK(loaded.moments->partition == built.moments->partition);
    }
    if (built.cumulants) {
      REQUIRE(loaded.cumulants.has_value());
      CHECK(same_elements(loaded.cumulants->elements, built.cumulants->elements));
    }
  }
}

TEST_CASE("scenario validation") {
  Json good = read_json(kFixtureDir + "f2_diag2.json");

  SUBCASE("schema field is required") {
    Json bad = good;
    bad.erase("schema");
    CHECK_THROWS_AS(scenario_from_json(bad), std::domain_error);
    bad["schema"] = "xprod-scenario/999";
    CHECK_THROWS_AS(scenario_from_json(bad), std::domain_error);
  }
  SUBCASE("action must cover every factor") {
    Json bad = good;
    bad["action"]["generators"] = Json::array({Json::array({2, 1})});
    CHECK_THROWS_AS(scenario_from_json(bad), std::domain_error);
  }
  SUBCASE("cyclic order constraint is enforced") {
    Json bad = good;
    bad["group"] = Json{{"factors", Json::array({Json{{"cyclic", 2}}, Json{{"cyclic", 2}}})}};
    bad["action"]["generators"] = Json::array(
        {Json::array({2, 1}), Json::array({2, 1})});
    CHECK_NOTHROW(scenario_from_json(bad));
    // Dimension 3 with a 3-cycle on a Z_2 factor must be rejected.
    bad["coefficients"]["dimension"] = 3;
    bad["action"]["generators"] = Json::array(
        {Json::array({2, 3, 1}), Json::array({1, 2, 3})});
    CHECK_THROWS_AS(scenario_from_json(bad), std::domain_error);
  }
  SUBCASE("exact mode requires a permutation action") {
    Json bad = good;
    bad["action"] = Json{{"kind", "unitary"},
                         {"generators", Json::array()}};
    CHECK_THROWS_AS(scenario_from_json(bad), std::domain_error);
  }
  SUBCASE("negative tolerance is rejected") {
    Json bad = good;
    bad["tolerance"] = -1.0;
    CHECK_THROWS_AS(scenario_from_json(bad), std::domain_error);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_scenario(kFixtureDir + "nope.json"), std::domain_error);
  }
}

TEST_CASE("JSON round trips") {
  SUBCASE("partitions") {
    for (const auto& pi : enumerate_nc(5)) {
      CHECK(partition_from_json(partition_to_json(pi)) == pi);
    }
  }
  SUBCASE("group specs") {
    const GroupSpec f3 = GroupSpec::free_group(3);
    CHECK(group_spec_from_json(group_spec_to_json(f3)) == f3);
    const GroupSpec mixed({Factor{true, 2}, Factor{}, Factor{true, 5}});
    CHECK(group_spec_from_json(group_spec_to_json(mixed)) == mixed);
  }
  SUBCASE("words") {
    const GroupSpec spec({Factor{true, 2}, Factor{}});
    SplitMix64 rng(55);
    for (int i = 0; i < 100; ++i) {
      const GroupWord w = sample_word(spec, 4, rng);
      CHECK(word_from_json(spec, word_to_json(w)) == w);
    }
    CHECK(word_from_json(spec, Json::parse("[[1,2],[0,1]]")) ==
          parse_word(spec, "g1^2 g0"));
    // The machine form carries numeric exponents.
    const GroupSpec f2 = GroupSpec::free_group(2);
    CHECK(word_to_json(parse_word(f2, "g0^2 g1^-1")) == Json::parse("[[0,2],[1,-1]]"));
    // Exponents beyond 64 bits fall back to strings and still round-trip.
    const GroupWord huge =
        GroupWord::generator(f2, 0, BigInt("123456789012345678901234567890"));
    CHECK(word_to_json(huge)[0][1].is_string());
    CHECK(word_from_json(f2, word_to_json(huge)) == huge);
  }
  SUBCASE("matrices, both modes and shapes, through text") {
    SplitMix64 rng(56);
    for (MatShape shape : {MatShape::diagonal, MatShape::full}) {
      for (ScalarMode mode : {ScalarMode::exact, ScalarMode::floating}) {
        for (int i = 0; i < 20; ++i) {
          const CoeffMatrix m = sample_coeff_matrix(shape, 3, mode, rng);
          // Dump to text and re-parse: 17 significant digits round-trip
          // doubles exactly.
          const Json reread = Json::parse(dump_report(matrix_to_json(m)));
          CHECK(matrix_from_json(reread, shape, 3, mode) == m);
        }
      }
    }
  }
  SUBCASE("elements") {
    const Scenario s = fixture_f2_diag2();
    SplitMix64 rng(57);
    std::vector<int> all = {0, 1};
    for (int i = 0; i < 30; ++i) {
      const CrossedElement x = sample_element(s.ctx, all, 3, 3, rng);
      const CrossedElement back = element_from_json(s.ctx, element_to_json(x));
      CHECK(back.terms() == x.terms());
    }
  }
  SUBCASE("matrix header mismatch is rejected") {
    const CoeffMatrix m = CoeffMatrix::identity(MatShape::diagonal, 2, ScalarMode::exact);
    CHECK_THROWS_AS(matrix_from_json(matrix_to_json(m), MatShape::full, 2, ScalarMode::exact),
                    std::domain_error);
  }
}

TEST_CASE("report dumping is deterministic and uses 17 significant digits") {
  Json j;
  j["a"] = 0.1;
  j["b"] = 1.0 / 3.0;
  j["c"] = Json::array({1, "x", true, nullptr});
  const std::string once = dump_report(j);
  CHECK(once == dump_report(j));
  CHECK(once.find("0.10000000000000001") != std::string::npos);
  CHECK(once.find("0.33333333333333331") != std::string::npos);
}
