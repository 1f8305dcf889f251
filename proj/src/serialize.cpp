#include "bilin/serialize.hpp"

#include <string>

namespace bilin {

Json to_json(VertexSubset s) {
  Json out = Json::array();
  for (int v : s.members()) out.push_back(v);
  return out;
}

Json to_json(const GapReport& r) {
  Json point = Json::array();
  for (int i = 1; i <= r.point.dim(); ++i) point.push_back(r.point.at(i));
  Json out;
  out["point"] = std::move(point);
  out["mcu"] = r.mcu;
  out["mcl"] = r.mcl;
  out["cav"] = r.cav;
  out["vex"] = r.vex;
  out["mcgap"] = r.mcgap;
  out["chgap"] = r.chgap;
  out["ratio"] = r.ratio_infinite ? Json(nullptr) : Json(r.ratio);
  out["ratio_infinite"] = r.ratio_infinite;
  out["degenerate"] = r.degenerate;
  out["method"] = std::string(to_string(r.method));
  return out;
}

Json to_json(const CutSearchResult& r) {
  Json out;
  out["side"] = to_json(r.cut.side);
  out["weight"] = r.cut.weight;
  out["bound"] = r.bound;
  out["meets_guarantee"] = r.meets_guarantee;
  out["trials_used"] = r.trials_used;
  out["case"] = std::string(to_string(r.case_taken));
  out["sampling_succeeded"] = r.sampling_succeeded;
  return out;
}

namespace {

Json coloring_json(const std::optional<Coloring>& c) {
  if (!c) return nullptr;
  Json out = Json::object();
  for (std::size_t v = 0; v < c->size(); ++v) out[std::to_string(v + 1)] = (*c)[v];
  return out;
}

}  // namespace

Json to_json(const HullExactness& h) {
  Json out;
  out["exact"] = h.exact;
  out["positive_coloring"] = coloring_json(h.positive_coloring);
  out["negative_coloring"] = coloring_json(h.negative_coloring);
  if (h.violating_cycle) {
    out["violating_cycle"] = h.violating_cycle->vertices;
    out["cycle_positive_edges"] = h.violating_cycle->positive_edges;
    out["cycle_negative_edges"] = h.violating_cycle->negative_edges;
  } else {
    out["violating_cycle"] = nullptr;
  }
  return out;
}

Json to_json(const CutExtremes& ext) {
  Json out;
  out["ground_set"] = to_json(ext.max.witness.ground_set);
  out["mu_plus"] = ext.max.value;
  out["max_witness"] = to_json(ext.max.witness.side);
  out["mu_minus"] = ext.min.value;
  out["min_witness"] = to_json(ext.min.witness.side);
  return out;
}

Json to_json(const DualCertificate& cert) {
  Json z = Json::object();
  for (const auto& [v, zi] : cert.z) z[std::to_string(v)] = zi;
  Json out;
  out["side"] = std::string(to_string(cert.side));
  out["y"] = cert.y;
  out["z"] = std::move(z);
  out["objective"] = cert.objective();
  return out;
}

Json to_json(const InstanceSpec& spec) {
  Json out;
  out["family"] = std::string(to_string(spec.family));
  out["n"] = spec.n;
  if (spec.seed) out["seed"] = *spec.seed;
  if (!spec.signs.empty()) out["signs"] = spec.signs;
  if (!spec.path.empty()) out["path"] = spec.path;
  return out;
}

InstanceSpec instance_spec_from_json(const nlohmann::json& j) {
  try {
    InstanceSpec spec;
    spec.family = parse_family(j.at("family").get<std::string>());
    spec.n = j.value("n", 0);
    if (j.contains("seed") && !j.at("seed").is_null()) spec.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("signs")) spec.signs = j.at("signs").get<std::vector<int>>();
    if (j.contains("path")) spec.path = j.at("path").get<std::string>();
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad instance spec: ") + e.what());
  }
}

}  // namespace bilin
