#ifndef HYPERPOT_POTENTIAL_HPP
#define HYPERPOT_POTENTIAL_HPP

#include <optional>
#include <variant>
#include <vector>

#include "hyperpot/geometry.hpp"
#include "hyperpot/multipoly.hpp"

namespace hyperpot {

/// Area of the unit (n-1)-sphere in R^n: 2 pi^{n/2} / Gamma(n/2).
double sphere_area(int n);

/// Elementary Newton-Coulomb potential: ln(r)/(2 pi) for n=2,
/// -r^{2-n}/((n-2) C_n) for n >= 3.
double kernel_G(int n, double r);

/// Density of the standard charge dV/dF against Euclidean surface measure:
/// 1/|grad F(z)|. z must lie on M_F within tolerance and away from critical
/// points.
double charge_weight(const MultiPoly& F, const std::vector<double>& z,
                     double surface_tolerance = 1e-6);

/// Semiaxes of the confocal ellipsoid: sqrt(a_i^2 + lambda).
std::vector<double> confocal_ellipsoid(const std::vector<double>& semiaxes, double lambda);

struct QuadConfig {
    double tol = 1e-8;
    long max_nodes = 6'000'000;
    double standoff_rel = 1e-3; // refuse x closer than this times the component diameter
    int gauss_order = 12;
    int threads = 1;
};

struct QuadratureResult {
    double value = 0;
    double error_estimate = 0;
    long nodes_used = 0;
    bool converged = true;
};

struct VectorQuadratureResult {
    std::vector<double> value;
    double error_estimate = 0;
    long nodes_used = 0;
    bool converged = true;
};

/// Axis-aligned ellipsoid component (n = 3).
struct EllipsoidPatch {
    std::vector<double> center;
    std::vector<double> semiaxes;
};

/// Star-shaped plane-curve component (n = 2), traced by continuation from
/// its centroid; rho holds radii over a uniform angle table.
struct CurvePatch {
    std::vector<double> center;
    std::vector<double> rho;
};

struct ChargePatch {
    int component = 0; // 1-based component index (ordering from the boundary)
    std::variant<EllipsoidPatch, CurvePatch> shape;
};

/// Standard charge P * omega_F on the components of M_F with Arnold signs
/// (+ for odd components, - for even ones, counted from the hyperbolicity
/// boundary).
struct SurfaceChargeSpec {
    MultiPoly F;
    MultiPoly density;
    std::vector<MultiPoly> grad;
    std::vector<ChargePatch> patches;
    std::vector<int> signs;

    /// Auto-build from the polynomial: components located in the box,
    /// ellipsoid fits in R^3, star-shaped tracing in R^2. Patch points are
    /// verified to lie on M_F; non-quadric 3D components are rejected.
    static SurfaceChargeSpec build(const MultiPoly& F, const MultiPoly& density, const Box& box,
                                   int grid, std::optional<std::vector<int>> sign_override = {});

    /// Explicit ellipsoid layout (skips component discovery).
    static SurfaceChargeSpec from_ellipsoids(const MultiPoly& F, const MultiPoly& density,
                                             std::vector<EllipsoidPatch> ellipsoids,
                                             std::vector<int> signs);
};

/// Integral of G(x-z) P(z) omega_F(z) over the Arnold-signed components.
/// For n=2 the potential itself is not exposed (only its derivatives are
/// single-valued); use attraction_force.
QuadratureResult potential(const SurfaceChargeSpec& spec, const std::vector<double>& x,
                           const QuadConfig& config);

/// Minus the gradient of the potential; for n=2 integrates the explicit
/// first-derivative forms directly.
VectorQuadratureResult attraction_force(const SurfaceChargeSpec& spec,
                                        const std::vector<double>& x, const QuadConfig& config);

/// Max residual of a least-squares degree-`degree` polynomial fit to the
/// potential sampled along the segment [a, b]; degree -1 fits by zero.
double polynomial_fit_check(const SurfaceChargeSpec& spec, const std::vector<double>& a,
                            const std::vector<double>& b, int degree, int samples,
                            const QuadConfig& config);

} // namespace hyperpot

#endif
