#ifndef DGSEM_MESH_HPP
#define DGSEM_MESH_HPP

#include <Eigen/Dense>
#include <array>
#include <string>
#include <utility>
#include <vector>

namespace dgsem {

/// Piecewise-constant physical parameters of one material region.
/// For the scalar model, wave_speed() = c carries the advection speed.
struct Material {
  double rho = 1.0;  // density, > 0
  double c = 1.0;    // sound speed (scalar model: advection speed a), > 0

  double wave_speed() const { return c; }
};

/// Affine element geometry. For affine maps J and the contravariant vectors
/// are spatially constant, so the discrete metric identity holds exactly.
struct ElementGeometry {
  int dim = 1;
  Eigen::Vector2d lo = Eigen::Vector2d::Zero();  // lower-left corner
  Eigen::Vector2d hi = Eigen::Vector2d::Zero();  // upper-right corner
  double jacobian = 0.0;                         // J > 0
  Eigen::Vector2d contravariant_x = Eigen::Vector2d::Zero();  // J a^1
  Eigen::Vector2d contravariant_y = Eigen::Vector2d::Zero();  // J a^2
  int material_id = 0;

  double width(int direction) const { return hi(direction) - lo(direction); }
};

struct Face {
  int left = -1;        // element index on the side the normal points away from
  int right = -1;       // element index the normal points into; -1 at the boundary
  int boundary_tag = 0; // nonzero on physical boundary faces
  int normal_axis = 0;  // 0: normal along x, 1: along y
  Eigen::Vector2d normal = Eigen::Vector2d::Zero();  // unit, outward from left
  double coordinate = 0.0;   // face position along the normal axis
  double surface_jacobian = 1.0;  // dS scale for the face quadrature (1 in 1D)
  bool is_material_interface = false;
};

struct Mesh {
  int dim = 1;
  std::vector<ElementGeometry> elements;
  std::vector<Face> faces;
  std::vector<Material> materials;
  std::vector<int> interface_faces;  // indices into faces

  const Material& material_of(const ElementGeometry& e) const {
    return materials[static_cast<std::size_t>(e.material_id)];
  }
  double domain_measure() const;
};

/// 1D interval mesh. Element boundaries include every interface position
/// exactly; if the requested uniform subdivision misses one, the interface is
/// inserted and each region re-uniformized (element count grows).
Mesh build_interval_mesh(double x_min, double x_max, int n_elements,
                         const std::vector<double>& interface_positions,
                         const std::vector<Material>& material_of_region);

/// 2D Cartesian mesh of nx-by-ny square elements with a vertical material
/// interface at interface_x, which must coincide with a grid line.
Mesh build_cartesian_mesh(const std::array<double, 2>& x_range,
                          const std::array<double, 2>& y_range, int nx, int ny,
                          double interface_x,
                          const std::pair<Material, Material>& materials);

/// Element count, interface face count, material table as text.
std::string mesh_summary(const Mesh& mesh);

}  // namespace dgsem

#endif
