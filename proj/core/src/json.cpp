#include "fqk/json.hpp"

#include "fqk/error.hpp"
#include "fqk/text.hpp"

namespace fqk {

using nlohmann::json;

json to_json(const Integer& v) {
  if (v.is_small()) return v.small_value();
  return v.to_string();
}

json to_json(const AbelianGroup& g) {
  json torsion = json::array();
  for (const auto& t : g.torsion) torsion.push_back(to_json(t));
  return {{"rank", g.rank}, {"torsion", torsion}, {"generators", g.generators}};
}

json to_json(const KGroupReport& r) {
  json out = {{"K0", to_json(r.k0)}, {"K1", to_json(r.k1)}, {"route", r.route}};
  out["stabilized_at"] = r.stabilized_at ? json(*r.stabilized_at) : json(nullptr);
  return out;
}

json to_json(const IntMatrix& m) {
  json entries = json::array();
  for (const auto& t : m.triplets()) {
    entries.push_back({t.row, t.col, to_json(t.value)});
  }
  return {{"rows", m.row_basis().labels()},
          {"cols", m.col_basis().labels()},
          {"entries", entries}};
}

json to_json(const BassSerreGraph& g) {
  json vertices = json::array();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    vertices.push_back({{"index", v},
                        {"quotient", g.vertices[v].quotient},
                        {"representative",
                         render(g.ring, g.vertices[v].coset.representative)}});
  }
  json edges = json::array();
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    edges.push_back({{"index", e},
                     {"word", render(g.ring, g.edges[e])},
                     {"src", g.src[e]},
                     {"tgt", g.tgt[e]}});
  }
  return {{"depth", g.depth}, {"vertices", vertices}, {"edges", edges}};
}

json to_json(const FusionRing& ring, const Coset& c) {
  json members = json::array();
  for (const auto& m : c.members) members.push_back(render(ring, m));
  return {{"side", c.side == Side::Left ? "left" : "right"},
          {"representative", render(ring, c.representative)},
          {"depth_certificate", c.depth_certificate},
          {"members", members}};
}

json to_json(const FusionRing& ring, const FormalSum& s) {
  json terms = json::array();
  for (const auto& [r, c] : s) {
    terms.push_back({{"irrep", render(ring, r)}, {"coefficient", to_json(c)}});
  }
  return terms;
}

namespace {

[[noreturn]] void shape_error(const std::string& what) {
  throw DomainError("module shape error: " + what);
}

Integer integer_from(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Integer::from_string(v.get<std::string>());
    } catch (const std::exception&) {
      shape_error(where + " is not an integer");
    }
  }
  shape_error(where + " is not an integer");
}

std::size_t rank_from(const json& j, const char* key) {
  if (!j.contains(key)) return 0;
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    shape_error(std::string(key) + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

DenseMatrix matrix_from(const json& v, const std::string& where) {
  if (!v.is_array()) shape_error(where + " must be an array of rows");
  DenseMatrix m;
  for (const auto& row : v) {
    if (!row.is_array()) shape_error(where + " must be an array of rows");
    std::vector<Integer> r;
    for (const auto& x : row) r.push_back(integer_from(x, where));
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

CoefficientModule module_from_json(const json& j) {
  if (!j.is_object()) shape_error("module must be a JSON object");
  CoefficientModule m;
  m.k0_rank = rank_from(j, "k0_rank");
  m.k1_rank = rank_from(j, "k1_rank");
  if (j.contains("actions")) {
    const json& acts = j.at("actions");
    if (!acts.is_object()) shape_error("actions must be an object");
    for (const auto& [gen, act] : acts.items()) {
      if (!act.is_object()) shape_error("action of " + gen + " must be an object");
      CoefficientModule::Action a;
      if (act.contains("k0")) a.k0 = matrix_from(act.at("k0"), gen + ".k0");
      if (act.contains("k1")) a.k1 = matrix_from(act.at("k1"), gen + ".k1");
      m.actions.emplace(gen, std::move(a));
    }
  }
  if (j.contains("dims")) {
    const json& dims = j.at("dims");
    if (!dims.is_object()) shape_error("dims must be an object");
    for (const auto& [gen, d] : dims.items()) {
      m.dims.emplace(gen, integer_from(d, "dims." + gen));
    }
  }
  return m;
}

}  // namespace fqk
