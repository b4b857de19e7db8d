#include "fraccable/fem.hpp"

#include "fraccable/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace fraccable {

void Mesh::validate() const
{
    if (dim != 1 && dim != 2) throw std::invalid_argument("Mesh: dim must be 1 or 2");
    if (!(length > 0.0)) throw std::invalid_argument("Mesh: length must be positive");
    if (n_cells < 2) throw std::invalid_argument("Mesh: need at least 2 cells per axis");
}

double Mesh::diagonal_size() const
{
    return dim == 2 ? std::sqrt(2.0) * cell_size() : cell_size();
}

namespace {

int interior_per_axis(const Mesh& m) { return m.n_cells - 1; }

int dof_total(const Mesh& m)
{
    const int ni = interior_per_axis(m);
    return m.dim == 1 ? ni : ni * ni;
}

// Interior node (i, j), i/j in 1..n-1, lexicographic in j then i.
int dof_index(const Mesh& m, int i, int j)
{
    const int ni = interior_per_axis(m);
    return m.dim == 1 ? i - 1 : (j - 1) * ni + (i - 1);
}

bool is_interior(const Mesh& m, int i, int j)
{
    if (i < 1 || i > m.n_cells - 1) return false;
    if (m.dim == 2 && (j < 1 || j > m.n_cells - 1)) return false;
    return true;
}

int dof_bandwidth(const Mesh& m)
{
    const int dofs = dof_total(m);
    const int bw = m.dim == 1 ? 1 : interior_per_axis(m) + 1;
    return std::min(bw, dofs - 1);
}

}  // namespace

std::pair<BandedSymMatrix, BandedSymMatrix> assemble(const Mesh& mesh)
{
    mesh.validate();
    const int dofs = dof_total(mesh);
    const int bw = dof_bandwidth(mesh);
    BandedSymMatrix mass(dofs, bw);
    BandedSymMatrix stiffness(dofs, bw);
    const double h = mesh.cell_size();

    if (mesh.dim == 1) {
        const double m_d = h / 3.0, m_o = h / 6.0;
        const double a_d = 1.0 / h, a_o = -1.0 / h;
        for (int c = 0; c < mesh.n_cells; ++c) {
            const std::array<int, 2> nodes{c, c + 1};
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b <= a; ++b) {
                    if (!is_interior(mesh, nodes[a], 0) || !is_interior(mesh, nodes[b], 0))
                        continue;
                    const int ia = dof_index(mesh, nodes[a], 0);
                    const int ib = dof_index(mesh, nodes[b], 0);
                    mass.add(ia, ib, a == b ? m_d : m_o);
                    stiffness.add(ia, ib, a == b ? a_d : a_o);
                }
        }
    } else {
        // Bilinear quad element matrices on a square cell, nodes CCW from
        // the lower-left corner; exact tensor products of the 1D ones.
        const double mc = h * h / 36.0;
        static constexpr std::array<std::array<double, 4>, 4> Me{{
            {4, 2, 1, 2}, {2, 4, 2, 1}, {1, 2, 4, 2}, {2, 1, 2, 4}}};
        static constexpr std::array<std::array<double, 4>, 4> Ke{{
            {4, -1, -2, -1}, {-1, 4, -1, -2}, {-2, -1, 4, -1}, {-1, -2, -1, 4}}};
        for (int cy = 0; cy < mesh.n_cells; ++cy)
            for (int cx = 0; cx < mesh.n_cells; ++cx) {
                const std::array<std::array<int, 2>, 4> nodes{{
                    {cx, cy}, {cx + 1, cy}, {cx + 1, cy + 1}, {cx, cy + 1}}};
                for (int a = 0; a < 4; ++a)
                    for (int b = 0; b < 4; ++b) {
                        if (!is_interior(mesh, nodes[a][0], nodes[a][1]) ||
                            !is_interior(mesh, nodes[b][0], nodes[b][1]))
                            continue;
                        const int ia = dof_index(mesh, nodes[a][0], nodes[a][1]);
                        const int ib = dof_index(mesh, nodes[b][0], nodes[b][1]);
                        if (ib > ia) continue;
                        mass.add(ia, ib, mc * Me[a][b]);
                        stiffness.add(ia, ib, Ke[a][b] / 6.0);
                    }
            }
    }
    return {std::move(mass), std::move(stiffness)};
}

FemSpace::FemSpace(Mesh mesh)
    : mesh_(mesh), dofs_(0), mass_(1, 0), stiffness_(1, 0)
{
    mesh_.validate();
    dofs_ = dof_total(mesh_);
    auto [m, a] = assemble(mesh_);
    mass_ = std::move(m);
    stiffness_ = std::move(a);
}

Point FemSpace::dof_point(int dof) const
{
    const double h = mesh_.cell_size();
    if (mesh_.dim == 1) return {(dof + 1) * h, 0.0};
    const int ni = interior_per_axis(mesh_);
    const int i = dof % ni + 1;
    const int j = dof / ni + 1;
    return {i * h, j * h};
}

namespace {

// Local hat values on the reference cell, xi/eta in [0, 1].
inline std::array<double, 2> shape1(double xi) { return {1.0 - xi, xi}; }

inline std::array<double, 4> shape2(double xi, double eta)
{
    return {(1.0 - xi) * (1.0 - eta), xi * (1.0 - eta), xi * eta, (1.0 - xi) * eta};
}

template <typename Visitor>
void for_each_quad_point_1d(const Mesh& mesh, int quad_order, Visitor&& visit)
{
    const GaussRule& rule = gauss_rule(quad_order);
    const double h = mesh.cell_size();
    for (int c = 0; c < mesh.n_cells; ++c) {
        const double x0 = c * h;
        for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
            const double xi = 0.5 * (rule.nodes[q] + 1.0);
            const double w = rule.weights[q] * 0.5 * h;
            visit(c, Point{x0 + xi * h, 0.0}, xi, 0.0, w);
        }
    }
}

template <typename Visitor>
void for_each_quad_point_2d(const Mesh& mesh, int quad_order, Visitor&& visit)
{
    const GaussRule& rule = gauss_rule(quad_order);
    const double h = mesh.cell_size();
    for (int cy = 0; cy < mesh.n_cells; ++cy)
        for (int cx = 0; cx < mesh.n_cells; ++cx) {
            const double x0 = cx * h, y0 = cy * h;
            for (std::size_t qx = 0; qx < rule.nodes.size(); ++qx)
                for (std::size_t qy = 0; qy < rule.nodes.size(); ++qy) {
                    const double xi = 0.5 * (rule.nodes[qx] + 1.0);
                    const double eta = 0.5 * (rule.nodes[qy] + 1.0);
                    const double w = rule.weights[qx] * rule.weights[qy] * 0.25 * h * h;
                    visit(cx, cy, Point{x0 + xi * h, y0 + eta * h}, xi, eta, w);
                }
        }
}

}  // namespace

std::vector<double> load_vector(const FemSpace& space, const SpatialFn& g, int quad_order)
{
    const Mesh& mesh = space.mesh();
    std::vector<double> b(space.dof_count(), 0.0);

    if (mesh.dim == 1) {
        for_each_quad_point_1d(mesh, quad_order,
            [&](int c, Point p, double xi, double, double w) {
                const auto sh = shape1(xi);
                const double gv = g(p);
                for (int a = 0; a < 2; ++a) {
                    const int node = c + a;
                    if (is_interior(mesh, node, 0))
                        b[dof_index(mesh, node, 0)] += w * gv * sh[a];
                }
            });
    } else {
        for_each_quad_point_2d(mesh, quad_order,
            [&](int cx, int cy, Point p, double xi, double eta, double w) {
                const auto sh = shape2(xi, eta);
                const double gv = g(p);
                const std::array<std::array<int, 2>, 4> nodes{{
                    {cx, cy}, {cx + 1, cy}, {cx + 1, cy + 1}, {cx, cy + 1}}};
                for (int a = 0; a < 4; ++a)
                    if (is_interior(mesh, nodes[a][0], nodes[a][1]))
                        b[dof_index(mesh, nodes[a][0], nodes[a][1])] += w * gv * sh[a];
            });
    }
    return b;
}

std::vector<double> ritz_project(const FemSpace& space, const SpatialFn&,
                                 const SpatialGradFn& grad_u)
{
    const Mesh& mesh = space.mesh();
    const double h = mesh.cell_size();
    std::vector<double> rhs(space.dof_count(), 0.0);

    if (mesh.dim == 1) {
        for_each_quad_point_1d(mesh, 5,
            [&](int c, Point p, double, double, double w) {
                const double du = grad_u(p).x;
                const std::array<double, 2> dsh{-1.0 / h, 1.0 / h};
                for (int a = 0; a < 2; ++a) {
                    const int node = c + a;
                    if (is_interior(mesh, node, 0))
                        rhs[dof_index(mesh, node, 0)] += w * du * dsh[a];
                }
            });
    } else {
        for_each_quad_point_2d(mesh, 4,
            [&](int cx, int cy, Point p, double xi, double eta, double w) {
                const Point du = grad_u(p);
                const std::array<double, 4> dx{-(1.0 - eta) / h, (1.0 - eta) / h,
                                               eta / h, -eta / h};
                const std::array<double, 4> dy{-(1.0 - xi) / h, -xi / h,
                                               xi / h, (1.0 - xi) / h};
                const std::array<std::array<int, 2>, 4> nodes{{
                    {cx, cy}, {cx + 1, cy}, {cx + 1, cy + 1}, {cx, cy + 1}}};
                for (int a = 0; a < 4; ++a)
                    if (is_interior(mesh, nodes[a][0], nodes[a][1]))
                        rhs[dof_index(mesh, nodes[a][0], nodes[a][1])] +=
                            w * (du.x * dx[a] + du.y * dy[a]);
            });
    }

    BandedCholesky chol(space.stiffness());
    chol.solve_inplace(rhs);
    return rhs;
}

double l2_norm_error(const FemSpace& space, std::span<const double> coeffs,
                     const SpatialFn& u_exact, int quad_order)
{
    const Mesh& mesh = space.mesh();
    if (static_cast<int>(coeffs.size()) != space.dof_count())
        throw std::invalid_argument("l2_norm_error: coefficient size mismatch");

    auto nodal = [&](int i, int j) {
        return is_interior(mesh, i, j) ? coeffs[dof_index(mesh, i, j)] : 0.0;
    };

    double sum = 0.0;
    if (mesh.dim == 1) {
        for_each_quad_point_1d(mesh, quad_order,
            [&](int c, Point p, double xi, double, double w) {
                const auto sh = shape1(xi);
                const double uh = sh[0] * nodal(c, 0) + sh[1] * nodal(c + 1, 0);
                const double d = uh - u_exact(p);
                sum += w * d * d;
            });
    } else {
        for_each_quad_point_2d(mesh, quad_order,
            [&](int cx, int cy, Point p, double xi, double eta, double w) {
                const auto sh = shape2(xi, eta);
                const double uh = sh[0] * nodal(cx, cy) + sh[1] * nodal(cx + 1, cy) +
                                  sh[2] * nodal(cx + 1, cy + 1) + sh[3] * nodal(cx, cy + 1);
                const double d = uh - u_exact(p);
                sum += w * d * d;
            });
    }
    return std::sqrt(sum);
}

double l2_norm(const FemSpace& space, const SpatialFn& g, int quad_order)
{
    std::vector<double> zero(space.dof_count(), 0.0);
    return l2_norm_error(space, zero, g, quad_order);
}

}  // namespace fraccable
