// Regenerates the JSON fixtures committed under fixtures/.
//
//   nodalq_fixtures <output-dir>

#include "nodalq/io.hpp"

#include <iostream>

using namespace nodalq;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: nodalq_fixtures <output-dir>\n";
    return 1;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);

  const auto kummer = kummer_from_sextic(SexticCurve::from_roots({0, 1, 2, 3, 4, 5}));
  io::write_json_file(dir / "kummer_012345.surface.json", io::to_json(kummer.quartic));
  io::write_json_file(dir / "kummer_012345.nodes.json", io::points_to_json(kummer.node_candidates));

  const auto [one_node, node] = one_node_example();
  io::write_json_file(dir / "one_node.surface.json", io::to_json(one_node));
  io::write_json_file(dir / "one_node.nodes.json", io::points_to_json({node}));

  io::write_json_file(dir / "fermat.surface.json", io::to_json(fermat_quartic()));

  // Seventeen distinct points: exceeds the node bound for quartics.
  std::vector<ProjPointQ> seventeen;
  for (int i = 0; i < 17; ++i) seventeen.push_back(ProjPointQ({i + 1, i * i + 2, 3 * i + 5, i * i * i + 7}));
  io::write_json_file(dir / "seventeen.nodes.json", io::points_to_json(seventeen));

  // N1 = N2 = the 2x2 nilpotent Jordan block.
  MatrixXq jordan = MatrixXq::Zero(2, 2);
  jordan(0, 1) = 1;
  io::write_json_file(dir / "jordan_pair.family.json", io::to_json(OperatorFamily{2, {jordan, jordan}, "jordan-pair"}));

  io::write_json_file(dir / "nodal16.config.json", io::to_json(nodal_model(16)));
  return 0;
}
