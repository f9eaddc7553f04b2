#include "dgsem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dgsem {

namespace {

void validate_material(const Material& m) {
  if (!(m.rho > 0.0) || !(m.c > 0.0)) {
    throw std::invalid_argument("Material: rho and c must be positive");
  }
}

}  // namespace

double Mesh::domain_measure() const {
  double total = 0.0;
  const double ref = (dim == 1) ? 2.0 : 4.0;
  for (const auto& e : elements) total += e.jacobian * ref;
  return total;
}

Mesh build_interval_mesh(double x_min, double x_max, int n_elements,
                         const std::vector<double>& interface_positions,
                         const std::vector<Material>& material_of_region) {
  if (!(x_max > x_min)) throw std::invalid_argument("build_interval_mesh: empty interval");
  if (n_elements < 2) throw std::invalid_argument("build_interval_mesh: need at least 2 elements");

  std::vector<double> interfaces = interface_positions;
  std::sort(interfaces.begin(), interfaces.end());
  for (std::size_t i = 0; i < interfaces.size(); ++i) {
    if (!(interfaces[i] > x_min) || !(interfaces[i] < x_max)) {
      throw std::invalid_argument("build_interval_mesh: interface position on or outside the domain boundary");
    }
    if (i > 0 && !(interfaces[i] > interfaces[i - 1])) {
      throw std::invalid_argument("build_interval_mesh: overlapping material regions");
    }
  }
  const std::size_t n_regions = interfaces.size() + 1;
  if (material_of_region.size() != n_regions) {
    throw std::invalid_argument("build_interval_mesh: one material required per region");
  }
  for (const auto& m : material_of_region) validate_material(m);

  // Region boundaries, then a uniform subdivision per region sized so the
  // total element count is at least the request.
  std::vector<double> region_bounds;
  region_bounds.push_back(x_min);
  region_bounds.insert(region_bounds.end(), interfaces.begin(), interfaces.end());
  region_bounds.push_back(x_max);
  const double total_len = x_max - x_min;

  std::vector<double> boundaries;
  std::vector<int> element_region;
  boundaries.push_back(x_min);
  for (std::size_t r = 0; r + 1 < region_bounds.size(); ++r) {
    const double len = region_bounds[r + 1] - region_bounds[r];
    const int n_r = std::max(1, static_cast<int>(std::ceil(n_elements * len / total_len - 1e-12)));
    for (int k = 1; k <= n_r; ++k) {
      const double x = (k == n_r)
                           ? region_bounds[r + 1]
                           : region_bounds[r] + len * k / n_r;
      boundaries.push_back(x);
      element_region.push_back(static_cast<int>(r));
    }
  }

  Mesh mesh;
  mesh.dim = 1;
  mesh.materials = material_of_region;
  const std::size_t n_elem = boundaries.size() - 1;
  mesh.elements.reserve(n_elem);
  for (std::size_t e = 0; e < n_elem; ++e) {
    ElementGeometry g;
    g.dim = 1;
    g.lo = Eigen::Vector2d(boundaries[e], 0.0);
    g.hi = Eigen::Vector2d(boundaries[e + 1], 0.0);
    g.jacobian = 0.5 * (boundaries[e + 1] - boundaries[e]);
    g.contravariant_x = Eigen::Vector2d(1.0, 0.0);
    g.material_id = element_region[e];
    mesh.elements.push_back(g);
  }

  for (std::size_t f = 0; f <= n_elem; ++f) {
    Face face;
    face.normal_axis = 0;
    face.normal = Eigen::Vector2d(1.0, 0.0);
    face.coordinate = boundaries[f];
    face.surface_jacobian = 1.0;
    if (f == 0) {
      face.left = 0;
      face.right = -1;
      face.boundary_tag = 1;
      face.normal = Eigen::Vector2d(-1.0, 0.0);  // outward at x_min
    } else if (f == n_elem) {
      face.left = static_cast<int>(n_elem) - 1;
      face.right = -1;
      face.boundary_tag = 2;
    } else {
      face.left = static_cast<int>(f) - 1;
      face.right = static_cast<int>(f);
      face.is_material_interface =
          mesh.elements[f - 1].material_id != mesh.elements[f].material_id;
    }
    if (face.is_material_interface) mesh.interface_faces.push_back(static_cast<int>(mesh.faces.size()));
    mesh.faces.push_back(face);
  }
  return mesh;
}

Mesh build_cartesian_mesh(const std::array<double, 2>& x_range,
                          const std::array<double, 2>& y_range, int nx, int ny,
                          double interface_x,
                          const std::pair<Material, Material>& materials) {
  if (!(x_range[1] > x_range[0]) || !(y_range[1] > y_range[0])) {
    throw std::invalid_argument("build_cartesian_mesh: empty range");
  }
  if (nx < 1 || ny < 1) throw std::invalid_argument("build_cartesian_mesh: nx, ny must be >= 1");
  validate_material(materials.first);
  validate_material(materials.second);

  const double dx = (x_range[1] - x_range[0]) / nx;
  const double dy = (y_range[1] - y_range[0]) / ny;

  const double k_real = (interface_x - x_range[0]) / dx;
  const int k = static_cast<int>(std::lround(k_real));
  if (std::abs(k_real - k) > 1e-10 || k < 0 || k > nx) {
    std::ostringstream msg;
    msg << "build_cartesian_mesh: interface_x = " << interface_x
        << " does not lie on a grid line of the " << nx << "-cell subdivision of ["
        << x_range[0] << ", " << x_range[1] << "]";
    throw std::invalid_argument(msg.str());
  }

  Mesh mesh;
  mesh.dim = 2;
  mesh.materials = {materials.first, materials.second};

  auto element_index = [nx](int i, int j) { return j * nx + i; };

  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      ElementGeometry g;
      g.dim = 2;
      g.lo = Eigen::Vector2d(x_range[0] + i * dx, y_range[0] + j * dy);
      g.hi = Eigen::Vector2d(x_range[0] + (i + 1) * dx, y_range[0] + (j + 1) * dy);
      g.jacobian = 0.25 * dx * dy;
      g.contravariant_x = Eigen::Vector2d(0.5 * dy, 0.0);
      g.contravariant_y = Eigen::Vector2d(0.0, 0.5 * dx);
      g.material_id = (i < k) ? 0 : 1;
      mesh.elements.push_back(g);
    }
  }

  // Vertical faces (normal along x), including boundaries.
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i <= nx; ++i) {
      Face face;
      face.normal_axis = 0;
      face.normal = Eigen::Vector2d(1.0, 0.0);
      face.coordinate = x_range[0] + i * dx;
      face.surface_jacobian = 0.5 * dy;
      if (i == 0) {
        face.left = element_index(0, j);
        face.right = -1;
        face.boundary_tag = 1;
        face.normal = Eigen::Vector2d(-1.0, 0.0);
      } else if (i == nx) {
        face.left = element_index(nx - 1, j);
        face.right = -1;
        face.boundary_tag = 2;
      } else {
        face.left = element_index(i - 1, j);
        face.right = element_index(i, j);
        face.is_material_interface =
            mesh.elements[face.left].material_id != mesh.elements[face.right].material_id;
      }
      if (face.is_material_interface) mesh.interface_faces.push_back(static_cast<int>(mesh.faces.size()));
      mesh.faces.push_back(face);
    }
  }
  // Horizontal faces (normal along y).
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j <= ny; ++j) {
      Face face;
      face.normal_axis = 1;
      face.normal = Eigen::Vector2d(0.0, 1.0);
      face.coordinate = y_range[0] + j * dy;
      face.surface_jacobian = 0.5 * dx;
      if (j == 0) {
        face.left = element_index(i, 0);
        face.right = -1;
        face.boundary_tag = 3;
        face.normal = Eigen::Vector2d(0.0, -1.0);
      } else if (j == ny) {
        face.left = element_index(i, ny - 1);
        face.right = -1;
        face.boundary_tag = 4;
      } else {
        face.left = element_index(i, j - 1);
        face.right = element_index(i, j);
      }
      mesh.faces.push_back(face);
    }
  }
  return mesh;
}

std::string mesh_summary(const Mesh& mesh) {
  std::ostringstream os;
  os << mesh.dim << "D mesh: " << mesh.elements.size() << " elements, "
     << mesh.faces.size() << " faces, " << mesh.interface_faces.size()
     << " material-interface faces\n";
  os << "materials:\n";
  for (std::size_t i = 0; i < mesh.materials.size(); ++i) {
    os << "  [" << i << "] rho = " << mesh.materials[i].rho
       << ", c = " << mesh.materials[i].c << "\n";
  }
  return os.str();
}

}  // namespace dgsem
