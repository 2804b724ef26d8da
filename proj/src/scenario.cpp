#include "xprod/scenario.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace xprod {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::domain_error("scenario: " + what);
}

ActionSpec action_from_json(const Json& j, const GroupSpec& group, MatShape shape,
                            int dim, ScalarMode mode, double tol) {
  const std::string kind = j.contains("kind") ? j.at("kind").get<std::string>()
                                              : std::string("permutation");
  const Json& gens = j.contains("generators") ? j.at("generators")
                                              : (fail("action needs 'generators'"), j);
  if (kind == "permutation") {
    std::vector<Permutation> perms;
    for (const auto& jg : gens) {
      perms.emplace_back(jg.get<std::vector<int>>());
    }
    return ActionSpec::permutations(group, dim, std::move(perms));
  }
  if (kind == "unitary") {
    std::vector<CoeffMatrix> us;
    for (const auto& jg : gens) {
      us.push_back(matrix_from_json(jg, shape, dim, mode));
    }
    return ActionSpec::unitary_conjugations(group, std::move(us), tol);
  }
  fail("unknown action kind '" + kind + "'");
}

std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) fail("expected an array of factor indices");
  return j.get<std::vector<int>>();
}

}  // namespace

Scenario scenario_from_json(const Json& j) {
  if (!j.is_object()) fail("scenario must be a JSON object");
  const std::string schema =
      j.contains("schema") ? j.at("schema").get<std::string>() : std::string();
  if (schema != kScenarioSchema)
    fail("unsupported schema '" + schema + "' (expected " + kScenarioSchema + ")");

  Scenario s;
  s.name = j.contains("name") ? j.at("name").get<std::string>() : std::string("scenario");

  const GroupSpec group = group_spec_from_json(
      j.contains("group") ? j.at("group") : (fail("missing 'group'"), j));

  const Json& coeff = j.contains("coefficients")
                          ? j.at("coefficients")
                          : (fail("missing 'coefficients'"), j);
  const std::string shape_s = coeff.at("shape").get<std::string>();
  const MatShape shape = shape_s == "diagonal" ? MatShape::diagonal
                         : shape_s == "full"   ? MatShape::full
                                               : (fail("unknown shape"), MatShape::full);
  const int dim = coeff.at("dimension").get<int>();
  const std::string mode_s = coeff.at("mode").get<std::string>();
  const ScalarMode mode = mode_s == "exact"   ? ScalarMode::exact
                          : mode_s == "float" ? ScalarMode::floating
                                              : (fail("unknown mode"), ScalarMode::exact);

  s.tolerance = j.contains("tolerance") ? j.at("tolerance").get<double>() : 1e-9;
  if (!(s.tolerance >= 0.0)) fail("tolerance must be nonnegative");
  s.seed = j.contains("seed") ? j.at("seed").get<std::uint64_t>() : 0;

  const Json& jaction = j.contains("action") ? j.at("action") : (fail("missing 'action'"), j);
  ActionSpec action = action_from_json(jaction, group, shape, dim, mode, s.tolerance);
  if (mode == ScalarMode::exact && action.kind() != ActionSpec::Kind::permutation)
    fail("exact scalar mode requires a permutation action");
  s.ctx = make_context(group, shape, dim, mode, std::move(action));

  if (j.contains("moments")) {
    MomentsTask task;
    for (const auto& je : j.at("moments").at("elements")) {
      task.elements.push_back(element_from_json(s.ctx, je));
    }
    if (j.at("moments").contains("partition")) {
      const Json& jp = j.at("moments").at("partition");
      task.partition = jp.is_string() ? parse_partition(jp.get<std::string>())
                                      : partition_from_json(jp);
    }
    s.moments = std::move(task);
  }

  if (j.contains("cumulants")) {
    CumulantsTask task;
    for (const auto& je : j.at("cumulants").at("elements")) {
      task.elements.push_back(element_from_json(s.ctx, je));
    }
    s.cumulants = std::move(task);
  }

  if (j.contains("freeness")) {
    const Json& jf = j.at("freeness");
    FreenessTask task;
    task.max_order = jf.contains("max_order") ? jf.at("max_order").get<int>() : 4;
    task.trials = jf.contains("trials") ? jf.at("trials").get<int>() : 100;
    if (jf.contains("splits")) {
      for (const auto& js : jf.at("splits")) {
        task.splits.push_back(FreenessSplit{int_list(js.at("a")), int_list(js.at("b"))});
      }
    } else if (jf.contains("family_a") && jf.contains("family_b")) {
      task.splits.push_back(
          FreenessSplit{int_list(jf.at("family_a")), int_list(jf.at("family_b"))});
    } else {
      fail("freeness needs 'splits' or 'family_a'/'family_b'");
    }
    s.freeness = std::move(task);
  }

  if (j.contains("verify")) {
    const Json& jv = j.at("verify");
    const auto opt = [&](const char* key, int fallback) {
      return jv.contains(key) ? jv.at(key).get<int>() : fallback;
    };
    VerifyParams& p = s.verify;
    p.word_checks = opt("word_checks", p.word_checks);
    p.monomial_checks = opt("monomial_checks", p.monomial_checks);
    p.partition_tuples = opt("partition_tuples", p.partition_tuples);
    p.cumulant_tuples = opt("cumulant_tuples", p.cumulant_tuples);
    p.roundtrip_tuples = opt("roundtrip_tuples", p.roundtrip_tuples);
    p.oracle_tuples = opt("oracle_tuples", p.oracle_tuples);
    p.example_checks = opt("example_checks", p.example_checks);
    p.freeness_instances = opt("freeness_instances", p.freeness_instances);
    p.freeness_max_order = opt("freeness_max_order", p.freeness_max_order);
    p.spot_order = opt("spot_order", p.spot_order);
    p.spot_instances = opt("spot_instances", p.spot_instances);
  }

  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::domain_error("scenario: cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw std::domain_error("scenario: JSON parse error in '" + path + "': " + e.what());
  }
  return scenario_from_json(j);
}

namespace {

Scenario base_scenario(std::string name, GroupSpec group, MatShape shape, int dim,
                       ScalarMode mode, ActionSpec action, double tol,
                       std::uint64_t seed) {
  Scenario s;
  s.name = std::move(name);
  s.ctx = make_context(std::move(group), shape, dim, mode, std::move(action));
  s.tolerance = tol;
  s.seed = seed;
  return s;
}

}  // namespace

Scenario fixture_f2_diag2() {
  GroupSpec group = GroupSpec::free_group(2);
  ActionSpec action = ActionSpec::permutations(
      group, 2, {Permutation({2, 1}), Permutation({1, 2})});
  Scenario s = base_scenario("f2_diag2", group, MatShape::diagonal, 2,
                             ScalarMode::exact, std::move(action), 0.0, 7);
  const ContextPtr& ctx = s.ctx;
  // A small standing example: four monomials whose product lands on the
  // identity fiber.
  MomentsTask moments;
  const auto diag = [&](long long a, long long b) {
    return CoeffMatrix::diagonal(
        {Scalar::integer(a, ScalarMode::exact), Scalar::integer(b, ScalarMode::exact)});
  };
  moments.elements = {
      to_element(ctx, {diag(1, 2), GroupWord::generator(group, 0)}),
      to_element(ctx, {diag(3, 4), GroupWord::generator(group, 1)}),
      to_element(ctx, {diag(1, 1), GroupWord::generator(group, 1, -1)}),
      to_element(ctx, {diag(2, 1), GroupWord::generator(group, 0, -1)}),
  };
  moments.partition = parse_partition("{(1,4),(2,3)}");
  s.moments = std::move(moments);

  CumulantsTask cumulants;
  cumulants.elements = {
      to_element(ctx, {diag(1, 2), GroupWord::generator(group, 0)}),
      to_element(ctx, {diag(3, 4), GroupWord::generator(group, 0, -1)}),
  };
  s.cumulants = std::move(cumulants);

  FreenessTask freeness;
  freeness.max_order = 4;
  freeness.trials = 120;
  freeness.splits = {FreenessSplit{{0}, {1}}};
  s.freeness = std::move(freeness);
  return s;
}

Scenario fixture_z2z3_diag6() {
  GroupSpec group({Factor{true, 2}, Factor{true, 3}});
  // Orders 2 and 3 respectively: three disjoint transpositions and two
  // disjoint 3-cycles on six coordinates.
  ActionSpec action = ActionSpec::permutations(
      group, 6, {Permutation({2, 1, 4, 3, 6, 5}), Permutation({2, 3, 1, 5, 6, 4})});
  Scenario s = base_scenario("z2z3_diag6", group, MatShape::diagonal, 6,
                             ScalarMode::exact, std::move(action), 0.0, 11);
  FreenessTask freeness;
  freeness.max_order = 4;
  freeness.trials = 120;
  freeness.splits = {FreenessSplit{{0}, {1}}};
  s.freeness = std::move(freeness);
  return s;
}

Scenario fixture_f2_full2_float() {
  GroupSpec group = GroupSpec::free_group(2);
  // Two unitaries with no special relation: a real rotation and a
  // diagonal phase.
  const double c = std::cos(0.7), sn = std::sin(0.7);
  CoeffMatrix u0 = CoeffMatrix::full(
      2, {Scalar::floating({c, 0}), Scalar::floating({-sn, 0}),
          Scalar::floating({sn, 0}), Scalar::floating({c, 0})});
  CoeffMatrix u1 = CoeffMatrix::full(
      2, {Scalar::floating({1, 0}), Scalar::floating({0, 0}),
          Scalar::floating({0, 0}), Scalar::floating({std::cos(0.9), std::sin(0.9)})});
  ActionSpec action = ActionSpec::unitary_conjugations(group, {u0, u1}, 1e-9);
  Scenario s = base_scenario("f2_full2_float", group, MatShape::full, 2,
                             ScalarMode::floating, std::move(action), 1e-9, 13);
  FreenessTask freeness;
  freeness.max_order = 4;
  freeness.trials = 120;
  freeness.splits = {FreenessSplit{{0}, {1}}};
  s.freeness = std::move(freeness);
  return s;
}

Scenario fixture_fn_split() {
  GroupSpec group = GroupSpec::free_group(4);
  ActionSpec action = ActionSpec::permutations(
      group, 2,
      {Permutation({2, 1}), Permutation({1, 2}), Permutation({2, 1}), Permutation({2, 1})});
  Scenario s = base_scenario("fn_split", group, MatShape::diagonal, 2,
                             ScalarMode::exact, std::move(action), 0.0, 17);
  FreenessTask freeness;
  freeness.max_order = 4;
  freeness.trials = 100;
  // The two whole-group splittings plus every pair of rank-one factors.
  freeness.splits = {FreenessSplit{{0}, {1, 2, 3}}, FreenessSplit{{0, 1}, {2, 3}}};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      freeness.splits.push_back(FreenessSplit{{i}, {j}});
    }
  }
  s.freeness = std::move(freeness);
  return s;
}

std::vector<Scenario> bundled_fixtures() {
  std::vector<Scenario> out;
  out.push_back(fixture_f2_diag2());
  out.push_back(fixture_z2z3_diag6());
  out.push_back(fixture_f2_full2_float());
  out.push_back(fixture_fn_split());
  return out;
}

}  // namespace xprod
