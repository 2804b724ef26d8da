#include "xprod/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace xprod {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::domain_error("json: " + what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json partition_to_json(const NCPartition& pi) {
  Json out = Json::array();
  for (const auto& block : pi.blocks()) out.push_back(block);
  return out;
}

NCPartition partition_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail("partition must be a nonempty array of blocks");
  std::vector<std::vector<int>> blocks;
  int max_elem = 0;
  for (const auto& jb : j) {
    if (!jb.is_array() || jb.empty()) fail("partition block must be a nonempty array");
    std::vector<int> block;
    for (const auto& je : jb) {
      if (!je.is_number_integer()) fail("partition elements must be integers");
      const int e = je.get<int>();
      block.push_back(e);
      max_elem = std::max(max_elem, e);
    }
    blocks.push_back(std::move(block));
  }
  return NCPartition(max_elem, std::move(blocks));
}

Json group_spec_to_json(const GroupSpec& spec) {
  if (spec.all_infinite()) {
    return Json{{"free_group", spec.factor_count()}};
  }
  Json factors = Json::array();
  for (const auto& f : spec.factors()) {
    if (f.is_finite) {
      factors.push_back(Json{{"cyclic", f.order}});
    } else {
      factors.push_back(Json{{"infinite", true}});
    }
  }
  return Json{{"factors", std::move(factors)}};
}

GroupSpec group_spec_from_json(const Json& j) {
  if (!j.is_object()) fail("group must be an object");
  if (j.contains("free_group")) {
    return GroupSpec::free_group(j.at("free_group").get<int>());
  }
  if (!j.contains("factors")) fail("group needs 'free_group' or 'factors'");
  std::vector<Factor> factors;
  for (const auto& jf : j.at("factors")) {
    if (jf.contains("cyclic")) {
      factors.push_back(Factor{true, jf.at("cyclic").get<int>()});
    } else if (jf.contains("infinite")) {
      factors.push_back(Factor{});
    } else {
      fail("group factor needs 'cyclic' or 'infinite'");
    }
  }
  return GroupSpec(std::move(factors));
}

Json word_to_json(const GroupWord& w) {
  static const BigInt kMin = BigInt(std::numeric_limits<long long>::min());
  static const BigInt kMax = BigInt(std::numeric_limits<long long>::max());
  Json out = Json::array();
  for (const auto& l : w.letters()) {
    // Exponents are JSON numbers in the common case; exponents beyond the
    // 64-bit range fall back to decimal strings (the parser takes both).
    if (l.exp >= kMin && l.exp <= kMax) {
      out.push_back(Json::array({l.factor, l.exp.convert_to<long long>()}));
    } else {
      out.push_back(Json::array({l.factor, l.exp.str()}));
    }
  }
  return out;
}

GroupWord word_from_json(const GroupSpec& spec, const Json& j) {
  if (j.is_string()) return parse_word(spec, j.get<std::string>());
  if (!j.is_array()) fail("word must be an array of [factor, exponent] pairs or a string");
  std::vector<Letter> letters;
  for (const auto& jl : j) {
    if (!jl.is_array() || jl.size() != 2) fail("word letter must be [factor, exponent]");
    const int factor = jl.at(0).get<int>();
    BigInt exp;
    if (jl.at(1).is_string()) {
      exp = BigInt(jl.at(1).get<std::string>());
    } else {
      exp = BigInt(jl.at(1).get<long long>());
    }
    letters.push_back(Letter{factor, std::move(exp)});
  }
  return reduce(spec, std::move(letters));
}

Json scalar_to_json(const Scalar& s) {
  if (s.mode() == ScalarMode::exact) return s.to_string();
  const auto v = s.value_f();
  return Json::array({v.real(), v.imag()});
}

Scalar scalar_from_json(const Json& j, ScalarMode mode) {
  if (mode == ScalarMode::exact) {
    if (j.is_string()) return Scalar::parse_exact(j.get<std::string>());
    if (j.is_number_integer()) return Scalar::integer(j.get<long long>(), mode);
    fail("exact scalar must be a string like \"1/2\" (or an integer)");
  }
  if (j.is_array() && j.size() == 2) {
    return Scalar::floating({j.at(0).get<double>(), j.at(1).get<double>()});
  }
  if (j.is_number()) return Scalar::floating({j.get<double>(), 0.0});
  fail("floating scalar must be [re, im] or a number");
}

Json matrix_to_json(const CoeffMatrix& m, bool with_header) {
  Json entries;
  if (m.shape() == MatShape::diagonal) {
    entries = Json::array();
    for (const auto& e : m.stored()) entries.push_back(scalar_to_json(e));
  } else {
    entries = Json::array();
    for (int r = 0; r < m.dim(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < m.dim(); ++c) row.push_back(scalar_to_json(m.entry(r, c)));
      entries.push_back(std::move(row));
    }
  }
  if (!with_header) return entries;
  Json out;
  out["shape"] = m.shape() == MatShape::diagonal ? "diagonal" : "full";
  out["mode"] = m.mode() == ScalarMode::exact ? "exact" : "float";
  out["dim"] = m.dim();
  out["entries"] = std::move(entries);
  return out;
}

namespace {

CoeffMatrix matrix_from_entries(const Json& entries, MatShape shape, int dim,
                                ScalarMode mode) {
  if (!entries.is_array()) fail("matrix entries must be an array");
  if (shape == MatShape::diagonal) {
    if (static_cast<int>(entries.size()) != dim) fail("diagonal entry count != dim");
    std::vector<Scalar> es;
    es.reserve(entries.size());
    for (const auto& je : entries) es.push_back(scalar_from_json(je, mode));
    return CoeffMatrix::diagonal(std::move(es));
  }
  if (static_cast<int>(entries.size()) != dim) fail("full matrix row count != dim");
  std::vector<Scalar> es;
  es.reserve(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
  for (const auto& row : entries) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      fail("full matrix row length != dim");
    for (const auto& je : row) es.push_back(scalar_from_json(je, mode));
  }
  return CoeffMatrix::full(dim, std::move(es));
}

}  // namespace

CoeffMatrix matrix_from_json(const Json& j, MatShape expected_shape, int expected_dim,
                             ScalarMode expected_mode) {
  if (j.is_array()) {
    return matrix_from_entries(j, expected_shape, expected_dim, expected_mode);
  }
  const std::string shape_s = field(j, "shape").get<std::string>();
  const std::string mode_s = field(j, "mode").get<std::string>();
  const int dim = field(j, "dim").get<int>();
  const MatShape shape = shape_s == "diagonal" ? MatShape::diagonal
                         : shape_s == "full"   ? MatShape::full
                                               : (fail("unknown shape '" + shape_s + "'"),
                                                  MatShape::full);
  const ScalarMode mode = mode_s == "exact"   ? ScalarMode::exact
                          : mode_s == "float" ? ScalarMode::floating
                                              : (fail("unknown mode '" + mode_s + "'"),
                                                 ScalarMode::exact);
  if (shape != expected_shape || dim != expected_dim || mode != expected_mode)
    fail("matrix header does not match the surrounding context");
  return matrix_from_entries(field(j, "entries"), shape, dim, mode);
}

Json element_to_json(const CrossedElement& x) {
  const CrossedContext& ctx = *x.context();
  Json out;
  out["group"] = group_spec_to_json(ctx.group);
  out["shape"] = ctx.shape == MatShape::diagonal ? "diagonal" : "full";
  out["mode"] = ctx.mode == ScalarMode::exact ? "exact" : "float";
  out["dim"] = ctx.dim;
  Json terms = Json::array();
  for (const auto& [w, m] : x.terms()) {
    Json t;
    t["word"] = to_text(w);
    t["matrix"] = matrix_to_json(m, /*with_header=*/false);
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

CrossedElement element_from_json(const ContextPtr& ctx, const Json& j) {
  const Json* terms = nullptr;
  if (j.is_array()) {
    terms = &j;
  } else {
    if (j.contains("group") && !(group_spec_from_json(j.at("group")) == ctx->group))
      fail("element group header does not match the context");
    terms = &field(j, "terms");
  }
  std::vector<std::pair<GroupWord, CoeffMatrix>> list;
  for (const auto& jt : *terms) {
    GroupWord w = word_from_json(ctx->group, field(jt, "word"));
    CoeffMatrix m = matrix_from_json(field(jt, "matrix"), ctx->shape, ctx->dim, ctx->mode);
    list.emplace_back(std::move(w), std::move(m));
  }
  return CrossedElement::from_terms(ctx, list);
}

Json freeness_report_to_json(const FreenessReport& r) {
  Json out;
  out["max_order"] = r.max_order;
  out["trials"] = r.instances_per_order;
  out["seed"] = r.seed;
  out["instances"] = r.instances;
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json jv;
    jv["order"] = v.order;
    jv["pattern"] = v.pattern;
    jv["args"] = v.args;
    jv["value"] = matrix_to_json(v.value);
    violations.push_back(std::move(jv));
  }
  out["violations"] = std::move(violations);
  out["verdict"] = r.verdict;
  return out;
}

namespace {

void dump_value(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += nlohmann::json(it.key()).dump();
        out += ':';
        dump_value(it.value(), out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ',';
        first = false;
        dump_value(e, out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        break;
      }
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out += buf;
      break;
    }
    default:
      out += j.dump();
      break;
  }
}

}  // namespace

std::string dump_report(const Json& j) {
  std::string out;
  dump_value(j, out);
  return out;
}

}  // namespace xprod
