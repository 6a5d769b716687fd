#include "dfixed/serialize.hpp"

#include "dfixed/text_format.hpp"

namespace dfx {

using nlohmann::json;

void to_json(json& j, const DSequence& d) { j = to_string(d); }

void from_json(const json& j, DSequence& d) { d = parse_dsequence(j.get<std::string>()); }

void to_json(json& j, const MonomialIdeal& ideal) {
  j = json{{"n", ideal.n()}, {"generators", format_generators(ideal)}};
}

void from_json(const json& j, MonomialIdeal& ideal) {
  auto n = j.at("n").get<std::size_t>();
  std::vector<Monomial> gens;
  for (const auto& g : j.at("generators")) gens.push_back(parse_monomial(g.get<std::string>(), n));
  ideal = MonomialIdeal::minimalize(n, std::move(gens));
}

void to_json(json& j, const IndexPair& pair) { j = json{{"lambda", pair.lambda}, {"t", pair.t}}; }

void from_json(const json& j, IndexPair& pair) {
  j.at("lambda").get_to(pair.lambda);
  j.at("t").get_to(pair.t);
}

void to_json(json& j, const SocleComponent& component) {
  j = json{{"pair", component.key},
           {"ideal", component.ideal},
           {"degree", component.predicted_degree},
           {"redundant", component.redundant}};
}

void from_json(const json& j, SocleComponent& component) {
  j.at("pair").get_to(component.key);
  j.at("ideal").get_to(component.ideal);
  j.at("degree").get_to(component.predicted_degree);
  j.at("redundant").get_to(component.redundant);
}

void to_json(json& j, const SocleDimension& dim) { j = json::array({dim.degree, dim.dimension}); }

void from_json(const json& j, SocleDimension& dim) {
  dim.degree = j.at(0).get<std::int64_t>();
  dim.dimension = j.at(1).get<std::int64_t>();
}

void to_json(json& j, const SocleReport& report) {
  j = json{{"components", report.components}, {"degrees", report.degrees}, {"max_degree", report.max_degree}};
}

void from_json(const json& j, SocleReport& report) {
  j.at("components").get_to(report.components);
  j.at("degrees").get_to(report.degrees);
  j.at("max_degree").get_to(report.max_degree);
}

void to_json(json& j, const Corner& corner) {
  j = json{{"position", corner.position},
           {"row", corner.row},
           {"betti", corner.betti},
           {"predicted_row", corner.predicted_row},
           {"survives", corner.survives}};
}

void from_json(const json& j, Corner& corner) {
  j.at("position").get_to(corner.position);
  j.at("row").get_to(corner.row);
  j.at("betti").get_to(corner.betti);
  j.at("predicted_row").get_to(corner.predicted_row);
  j.at("survives").get_to(corner.survives);
}

void to_json(json& j, const RegularityReport& report) {
  j = json{{"method", to_string(report.method)},
           {"value", report.value},
           {"block_regularities", report.block_regularities},
           {"x1_shift", report.x1_shift},
           {"corners", report.corners},
           {"upper_bound_only", report.upper_bound_only}};
}

void from_json(const json& j, RegularityReport& report) {
  report.method = parse_regularity_method(j.at("method").get<std::string>());
  j.at("value").get_to(report.value);
  j.at("block_regularities").get_to(report.block_regularities);
  j.at("x1_shift").get_to(report.x1_shift);
  j.at("corners").get_to(report.corners);
  j.at("upper_bound_only").get_to(report.upper_bound_only);
}

void to_json(json& j, const BettiTable& table) {
  json entries = json::array();
  for (const auto& [key, value] : table.entries) entries.push_back(json::array({key.first, key.second, value}));
  j = json{{"n", table.n},
           {"characteristic", table.characteristic},
           {"max_degree", table.max_degree},
           {"complete", table.complete},
           {"regularity_bound", table.regularity_bound ? json(*table.regularity_bound) : json(nullptr)},
           {"entries", entries}};
}

void from_json(const json& j, BettiTable& table) {
  j.at("n").get_to(table.n);
  j.at("characteristic").get_to(table.characteristic);
  j.at("max_degree").get_to(table.max_degree);
  j.at("complete").get_to(table.complete);
  const json& bound = j.at("regularity_bound");
  table.regularity_bound = bound.is_null() ? std::nullopt : std::optional<std::int64_t>(bound.get<std::int64_t>());
  table.entries.clear();
  for (const auto& e : j.at("entries"))
    table.entries[{e.at(0).get<std::size_t>(), e.at(1).get<std::int64_t>()}] = e.at(2).get<std::int64_t>();
}

void to_json(json& j, const ExtremalEntry& entry) { j = json::array({entry.i, entry.row, entry.betti}); }

}  // namespace dfx
