#include "diagcong/exportfmt.hpp"

#include <json.hpp>

namespace diagcong {

namespace {

std::string node_name(CongruenceLattice const& lat, size_t i) {
  if (i < lat.labels.size() && !lat.labels[i].empty()) {
    std::string s;
    for (auto const& l : lat.labels[i]) {
      if (!s.empty()) {
        s += "=";
      }
      s += l;
    }
    return s;
  }
  return "c" + std::to_string(i);
}

}  // namespace

std::string export_dot(CongruenceLattice const& lat) {
  std::string out = "digraph congruence_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (size_t i = 0; i < lat.congruences.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + node_name(lat, i) + " ("
           + std::to_string(lat.congruences[i].num_classes()) + " classes)\"];\n";
  }
  for (auto const& [i, j] : lat.hasse) {
    out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string export_json(Family f, int degree, CongruenceLattice const& lat) {
  nlohmann::json j;
  j["family"] = to_string(f);
  j["degree"] = degree;
  j["nodes"]  = nlohmann::json::array();
  for (size_t i = 0; i < lat.congruences.size(); ++i) {
    nlohmann::json node;
    node["label"]       = node_name(lat, i);
    node["num_classes"] = lat.congruences[i].num_classes();
    node["class_sizes"] = lat.congruences[i].class_sizes();
    j["nodes"].push_back(std::move(node));
  }
  j["hasse"] = nlohmann::json::array();
  for (auto const& [a, b] : lat.hasse) {
    j["hasse"].push_back({a, b});
  }
  return j.dump(2) + "\n";
}

}  // namespace diagcong
