#include "brach/mesh.hpp"

#include <cmath>

#include "brach/errors.hpp"

namespace brach {

Mesh make_mesh(int n, double b, double q) {
  if (n < 8) throw ArgumentError("make_mesh: n must be >= 8");
  if (!(b > 0.0)) throw ArgumentError("make_mesh: b must be > 0");
  if (!(q >= 1.0)) throw ArgumentError("make_mesh: grading exponent must be >= 1");
  Mesh m;
  m.n = n;
  m.b = b;
  m.q = q;
  m.nodes.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    m.nodes[static_cast<std::size_t>(i)] = b * std::pow(static_cast<double>(i) / n, q);
  return m;
}

Mesh Mesh::from_nodes(std::vector<double> nodes) {
  if (nodes.size() < 9) throw ArgumentError("Mesh::from_nodes: need at least 9 nodes");
  if (nodes.front() != 0.0) throw ArgumentError("Mesh::from_nodes: first node must be 0");
  for (std::size_t i = 1; i < nodes.size(); ++i)
    if (!(nodes[i] > nodes[i - 1]))
      throw ArgumentError("Mesh::from_nodes: nodes must be strictly increasing");
  Mesh m;
  m.n = static_cast<int>(nodes.size()) - 1;
  m.b = nodes.back();
  m.q = 0.0;
  m.nodes = std::move(nodes);
  return m;
}

}  // namespace brach
