#pragma once

#include "fraccable/linalg.hpp"

#include <functional>
#include <span>
#include <utility>

namespace fraccable {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

using SpatialFn = std::function<double(Point)>;
using SpatialGradFn = std::function<Point(Point)>;
using SpaceTimeFn = std::function<double(Point, double)>;

/// Uniform mesh of (0, L) or (0, L)^2 with n_cells cells per axis.
struct Mesh {
    int dim = 1;
    double length = 1.0;
    int n_cells = 1;

    void validate() const;
    double cell_size() const { return length / n_cells; }
    /// Mesh size as reported for 2D tables (cell diagonal); equals the
    /// cell size in 1D.
    double diagonal_size() const;
};

/// Piecewise-linear (1D) / bilinear (2D quad) space with homogeneous
/// Dirichlet boundary handled by interior-only numbering. Mass and
/// stiffness are assembled exactly on construction.
class FemSpace {
public:
    explicit FemSpace(Mesh mesh);

    const Mesh& mesh() const { return mesh_; }
    int degree() const { return 1; }
    int dof_count() const { return dofs_; }
    const BandedSymMatrix& mass() const { return mass_; }
    const BandedSymMatrix& stiffness() const { return stiffness_; }

    Point dof_point(int dof) const;

private:
    Mesh mesh_;
    int dofs_;
    BandedSymMatrix mass_;
    BandedSymMatrix stiffness_;
};

/// Exact mass/stiffness assembly over interior basis functions.
std::pair<BandedSymMatrix, BandedSymMatrix> assemble(const Mesh& mesh);

/// b_i = Int g phi_i by per-element Gauss quadrature of the given order.
std::vector<double> load_vector(const FemSpace& space, const SpatialFn& g, int quad_order = 5);

/// Elliptic projection: solve A c = (grad u, grad phi_i).
std::vector<double> ritz_project(const FemSpace& space, const SpatialFn& u,
                                 const SpatialGradFn& grad_u);

/// || u_h - u_exact ||_{L2} by per-element Gauss quadrature.
double l2_norm_error(const FemSpace& space, std::span<const double> coeffs,
                     const SpatialFn& u_exact, int quad_order = 5);

/// || g ||_{L2(domain)} by quadrature.
double l2_norm(const FemSpace& space, const SpatialFn& g, int quad_order = 5);

}  // namespace fraccable
