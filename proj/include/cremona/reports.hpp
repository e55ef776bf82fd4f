#pragma once

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cremona/cremona_richmond.hpp"
#include "cremona/incidence.hpp"
#include "cremona/realization.hpp"

namespace cremona {

/// {"points": [[...], ...], "blocks": [[...], ...]} with point labels as
/// sorted element lists.
inline nlohmann::json incidence_json(const IncidenceStructure& s) {
  nlohmann::json points = nlohmann::json::array();
  for (Subset a : s.labels()) points.push_back(a.elements());
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& blk : s.blocks()) blocks.push_back(blk);
  return nlohmann::json{{"points", points}, {"blocks", blocks}};
}

/// Levi graph in DOT, with ellipses for points and boxes for blocks.
inline std::string levi_dot(const IncidenceStructure& s) {
  std::ostringstream out;
  out << "graph levi {\n";
  out << "  node [fontsize=10];\n";
  for (int p = 0; p < s.point_count(); ++p)
    out << "  p" << p << " [shape=ellipse, label=\"" << s.label(p).to_string() << "\"];\n";
  for (int j = 0; j < s.block_count(); ++j)
    out << "  b" << j << " [shape=box, label=\"b" << j << "\"];\n";
  for (auto [p, b] : levi_graph(s).edges)
    out << "  p" << p << " -- b" << (b - s.point_count()) << ";\n";
  out << "}\n";
  return out.str();
}

inline nlohmann::json field_json(const FieldSpec& fs) {
  if (fs.kind == FieldKind::Rationals) return nlohmann::json{{"kind", "rationals"}};
  return nlohmann::json{{"kind", "prime"}, {"p", fs.p}};
}

inline nlohmann::json realization_json(const RealizationReport& rep) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const BlockRealization& br : rep.blocks)
    blocks.push_back(nlohmann::json{{"points", br.points},
                                    {"vector_rank", br.vector_rank},
                                    {"projective_dim", br.projective_dim},
                                    {"basis", br.basis}});
  nlohmann::json violations = nlohmann::json::array();
  for (auto [p, b] : rep.incidence_violations) violations.push_back({p, b});
  nlohmann::json collisions = nlohmann::json::array();
  for (auto [a, b] : rep.image_collisions) collisions.push_back({a, b});
  return nlohmann::json{
      {"field", field_json(rep.field)},
      {"params", {{"n", rep.n}, {"k", rep.k}, {"s", rep.s}, {"m", rep.m}}},
      {"characteristic",
       {{"char", rep.field_characteristic}, {"s", rep.s}, {"divides", rep.char_divides_s_minus_1}}},
      {"expected_projective_dim", rep.expected_projective_dim},
      {"blocks", blocks},
      {"all_blocks_expected_dim", rep.all_blocks_expected_dim},
      {"incidence_violations", violations},
      {"image_collisions", collisions},
      {"distinct_subspaces", rep.distinct_subspaces},
      {"verdict", rep.verdict()}};
}

/// One CSV table of predicted parameters, "n,k,s,m,nu,r,b" per row.
inline std::string params_csv(const std::vector<std::array<int, 3>>& cases) {
  std::ostringstream out;
  out << "n,k,s,m,nu,r,b\n";
  for (auto [n, k, s] : cases) {
    const ConfigurationParams p = predicted_params(n, k, s);
    out << n << "," << k << "," << s << "," << (n - k * s) << "," << p.points.str() << ","
        << p.point_rank.str() << "," << p.blocks.str() << "\n";
  }
  return out.str();
}

/// The collinear-triple structure of a dependency scan in DOT.
inline std::string dependency_dot(const DependencyScan& scan) { return levi_dot(scan.collinear); }

}  // namespace cremona
