#include "flopkit/detgeo/instance.hpp"

namespace flopkit {

namespace {

Json matrices(const EndoSubspace& s) {
  Json j = Json::array();
  for (const auto& m : s.basis()) j.push_back(to_json(m));
  return j;
}

EndoSubspace subspace_from_json(const Json& j) {
  std::vector<RatMatrix> basis;
  for (const auto& m : j) basis.push_back(matrix_from_json(m, 3, 3));
  return EndoSubspace(std::move(basis));
}

Json vectors(const std::vector<RatVector>& vs) {
  Json j = Json::array();
  for (const auto& v : vs) j.push_back(to_json(v));
  return j;
}

std::vector<RatVector> vectors_from_json(const Json& j) {
  std::vector<RatVector> out;
  for (const auto& v : j) out.push_back(vector_from_json(v));
  return out;
}

}  // namespace

Json to_json(const DeterminantalInstance& inst) {
  Json j;
  j["seed"] = inst.seed;
  j["attempts"] = inst.attempts;
  j["lambda"] = matrices(inst.lambda);
  j["lambda_perp"] = matrices(inst.lambda_perp);
  j["cubicY"] = to_json(inst.cubicY);
  j["cubicS"] = to_json(inst.cubicS);
  j["nodes"] = vectors(inst.nodes);
  Json nm = Json::array();
  for (const auto& m : inst.node_matrices) nm.push_back(to_json(m));
  j["node_matrices"] = nm;
  j["q_points"] = vectors(inst.q_points);
  j["q_dual_points"] = vectors(inst.q_dual_points);
  j["smoothness_certificate"] = to_string(inst.smoothness_certificate);
  return j;
}

DeterminantalInstance instance_from_json(const Json& j) {
  try {
    DeterminantalInstance inst;
    inst.seed = j.at("seed").get<std::uint64_t>();
    inst.attempts = j.at("attempts").get<int>();
    inst.lambda = subspace_from_json(j.at("lambda"));
    inst.lambda_perp = subspace_from_json(j.at("lambda_perp"));
    inst.cubicY = mpoly_from_json(j.at("cubicY"));
    inst.cubicS = mpoly_from_json(j.at("cubicS"));
    inst.nodes = vectors_from_json(j.at("nodes"));
    for (const auto& m : j.at("node_matrices")) inst.node_matrices.push_back(matrix_from_json(m, 3, 3));
    inst.q_points = vectors_from_json(j.at("q_points"));
    inst.q_dual_points = vectors_from_json(j.at("q_dual_points"));
    inst.smoothness_certificate = parse_rational(j.at("smoothness_certificate").get<std::string>());
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("instance JSON: ") + e.what());
  }
}

}  // namespace flopkit
