#include "opmeans/jsonio.hpp"

namespace opmeans {

using nlohmann::ordered_json;

ordered_json matrix_json(const HermitianMatrix& m) {
  const int n = m.dim();
  std::vector<double> re, im;
  re.reserve(static_cast<size_t>(n) * n);
  im.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      re.push_back(m(i, j).real());
      im.push_back(m(i, j).imag());
    }
  return ordered_json{{"dim", n}, {"re", re}, {"im", im}};
}

HermitianMatrix matrix_from_json(const nlohmann::json& j) {
  int n = j.at("dim").get<int>();
  auto re = j.at("re").get<std::vector<double>>();
  auto im = j.at("im").get<std::vector<double>>();
  if (re.size() != static_cast<size_t>(n) * n || im.size() != re.size())
    throw ConfigError("matrix_from_json: entry arrays do not match dim");
  std::vector<cplx> entries(re.size());
  for (size_t i = 0; i < re.size(); ++i) entries[i] = cplx(re[i], im[i]);
  return HermitianMatrix::from_entries(n, std::move(entries));
}

ordered_json map_json(const maps::MapDescriptor& d) {
  ordered_json j;
  j["variant"] = d.label();
  j["in_dim"] = d.in_dim();
  j["out_dim"] = d.out_dim();
  j["unital"] = d.unital();
  switch (d.kind()) {
    case maps::MapKind::UnitaryConjugation:
    case maps::MapKind::Compression:
      j["seed"] = {{"value", d.seed().value}, {"stream", d.seed().stream}};
      break;
    case maps::MapKind::Pinching:
      j["blocks"] = d.blocks();
      break;
    case maps::MapKind::ConvexCombination: {
      j["weights"] = d.weights();
      ordered_json parts = ordered_json::array();
      for (const auto& p : d.parts()) parts.push_back(map_json(p));
      j["parts"] = std::move(parts);
      break;
    }
    default:
      break;
  }
  return j;
}

ordered_json mean_json(const means::MeanDescriptor& d) {
  switch (d.kind) {
    case means::MeanKind::Arithmetic:
      return ordered_json{{"kind", "arithmetic"}, {"v", d.weight}};
    case means::MeanKind::Geometric:
      return ordered_json{{"kind", "geometric"}, {"v", d.weight}};
    case means::MeanKind::Harmonic:
      return ordered_json{{"kind", "harmonic"}, {"v", d.weight}};
    case means::MeanKind::Representing:
      return ordered_json{
          {"kind", "representing"}, {"v", d.weight}, {"label", d.label}};
  }
  throw Error("mean_json: unreachable");
}

ordered_json params_json(const checks::CheckParams& p) {
  ordered_json j;
  j["v"] = p.v;
  j["p"] = p.p;
  j["s"] = p.s;
  j["t"] = p.t;
  j["m"] = p.band_lo;
  j["M"] = p.band_hi;
  j["m2"] = p.m2;
  j["m1"] = p.m1;
  j["M1"] = p.M1;
  j["M2"] = p.M2;
  j["x"] = p.aux_x;
  if (!p.extra_means.empty()) j["extra_means"] = p.extra_means;
  return j;
}

ordered_json witness_json(const checks::CheckResult& r) {
  ordered_json j;
  j["check_id"] = r.check_id;
  j["dim"] = r.dim;
  j["seed"] = {{"value", r.seed.value}, {"stream", r.seed.stream}};
  j["params"] = params_json(r.params);
  j["margin"] = r.margin;
  j["worst_part"] = r.worst_part;
  if (r.witness.has_value()) {
    j["A"] = matrix_json(r.witness->a);
    j["B"] = matrix_json(r.witness->b);
    if (r.witness->has_map) j["map"] = map_json(r.witness->map);
    j["fn_index"] = r.witness->fn_index;
    std::string fn = checks::instance_function_label(r.check_id, r.witness->fn_index);
    if (!fn.empty()) j["function"] = fn;
  }
  return j;
}

}  // namespace opmeans
