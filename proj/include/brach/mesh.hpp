#ifndef BRACH_MESH_HPP
#define BRACH_MESH_HPP

#include <vector>

namespace brach {

/// Node distribution on [0,b]. Graded meshes cluster nodes at the singular
/// left endpoint via t_i = b*(i/n)^q; q = 1 is uniform. A mesh may also be
/// built from an explicit node list (grading reported as 0).
struct Mesh {
  int n = 0;          // number of panels; n+1 nodes
  double b = 0.0;     // right endpoint
  double q = 1.0;     // grading exponent; 0 for explicit node lists
  std::vector<double> nodes;

  static Mesh from_nodes(std::vector<double> nodes);
};

/// Graded mesh t_i = b*(i/n)^q. Requires n >= 8, b > 0, q >= 1.
Mesh make_mesh(int n, double b, double q);

}  // namespace brach

#endif
