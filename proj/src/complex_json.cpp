#include "hflkit/complex_json.hpp"

#include <stdexcept>

namespace hflkit {

using nlohmann::json;

json to_json(HalfInt h) { return json{{"value", h.to_string()}, {"twice", h.twice()}}; }

json to_json(const GradedComplex& complex) {
  json gens = json::array();
  for (const Generator& g : complex.generators()) {
    gens.push_back({{"label", g.label}, {"spinc", to_json(g.spinc)}, {"maslov", to_json(g.maslov)}});
  }
  json arrows = json::array();
  const IntMatrix& d = complex.differential();
  for (Eigen::Index col = 0; col < d.cols(); ++col) {
    for (Eigen::Index row = 0; row < d.rows(); ++row) {
      if (d(row, col) == 0) continue;
      arrows.push_back({{"from", col}, {"to", row}, {"coefficient", d(row, col).get_str()}});
    }
  }
  return json{{"generators", gens}, {"differential", arrows}};
}

json to_json(const HomologyTable& table) {
  json out = json::array();
  for (const auto& [key, group] : table.entries()) {
    json torsion = json::array();
    for (const BigInt& t : group.torsion) torsion.push_back(t.get_str());
    out.push_back({{"spinc", to_json(key.spinc)},
                   {"maslov", to_json(key.maslov)},
                   {"free_rank", group.free_rank},
                   {"torsion", torsion}});
  }
  return out;
}

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponent", to_json(e)}, {"coefficient", c.get_str()}});
  return json{{"text", p.to_string()}, {"terms", terms}};
}

HalfInt half_int_from_json(const json& j) {
  if (j.is_number_integer()) return HalfInt::from_int(j.get<std::int64_t>());
  if (j.is_string()) return HalfInt::parse(j.get<std::string>());
  if (j.is_object() && j.contains("twice") && j["twice"].is_number_integer()) {
    const HalfInt h = HalfInt::from_twice(j["twice"].get<std::int64_t>());
    if (j.contains("value") && HalfInt::parse(j["value"].get<std::string>()) != h) {
      throw std::invalid_argument("half-integer 'value' and 'twice' disagree");
    }
    return h;
  }
  throw std::invalid_argument("expected a half-integer, got " + j.dump());
}

namespace {

BigInt coefficient_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt value;
    if (value.set_str(j.get<std::string>(), 10) != 0) {
      throw std::invalid_argument("bad coefficient '" + j.get<std::string>() + "'");
    }
    return value;
  }
  throw std::invalid_argument("coefficient must be an integer or decimal string");
}

}  // namespace

GradedComplex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array()) {
    throw std::invalid_argument("complex needs a 'generators' array");
  }
  std::vector<Generator> gens;
  for (const json& g : j["generators"]) {
    if (!g.is_object() || !g.contains("spinc") || !g.contains("maslov")) {
      throw std::invalid_argument("generator needs 'spinc' and 'maslov'");
    }
    std::string label = g.contains("label") ? g["label"].get<std::string>() : "g" + std::to_string(gens.size());
    gens.push_back({std::move(label), half_int_from_json(g["spinc"]), half_int_from_json(g["maslov"])});
  }

  const auto n = static_cast<Eigen::Index>(gens.size());
  IntMatrix d = IntMatrix::Zero(n, n);
  if (j.contains("differential")) {
    if (!j["differential"].is_array()) throw std::invalid_argument("'differential' must be an array");
    for (const json& t : j["differential"]) {
      if (!t.is_object() || !t.contains("from") || !t.contains("to") || !t.contains("coefficient")) {
        throw std::invalid_argument("differential entries need 'from', 'to', 'coefficient'");
      }
      const auto from = t["from"].get<std::int64_t>();
      const auto to = t["to"].get<std::int64_t>();
      if (from < 0 || from >= n || to < 0 || to >= n) {
        throw std::invalid_argument("differential index out of range");
      }
      d(to, from) += coefficient_from_json(t["coefficient"]);
    }
  }
  return GradedComplex(std::move(gens), std::move(d));
}

}  // namespace hflkit
