#include "hyperpot/potential.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <queue>

#include "hyperpot/error.hpp"
#include "hyperpot/unipoly.hpp"

namespace hyperpot {

double sphere_area(int n) {
    if (n < 2) raise("bad-parameters", "sphere area needs n >= 2");
    return 2.0 * std::pow(M_PI, n / 2.0) / std::tgamma(n / 2.0);
}

double kernel_G(int n, double r) {
    if (r <= 0) raise("bad-parameters", "kernel radius must be positive");
    if (n < 2) raise("bad-parameters", "kernel dimension must be >= 2");
    if (n == 2) return std::log(r) / (2.0 * M_PI);
    return -std::pow(r, 2.0 - n) / ((n - 2) * sphere_area(n));
}

namespace {

// sum |c_t| prod |z_i|^{e_i}; cancellation-free magnitude of F at z
double poly_scale_at(const MultiPoly& F, const std::vector<double>& z) {
    double acc = 0;
    for (const auto& [e, c] : F.terms()) {
        double t = std::fabs(c.get_d());
        for (std::size_t i = 0; i < z.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= std::fabs(z[i]);
        acc += t;
    }
    return acc;
}

double grad_norm(const std::vector<MultiPoly>& grad, const std::vector<double>& z) {
    double acc = 0;
    for (const MultiPoly& g : grad) {
        double v = g.evaluate(z);
        acc += v * v;
    }
    return std::sqrt(acc);
}

} // namespace

double charge_weight(const MultiPoly& F, const std::vector<double>& z, double surface_tolerance) {
    double fz = F.evaluate(z);
    double scale = poly_scale_at(F, z) + 1.0;
    if (std::fabs(fz) > surface_tolerance * scale)
        raise("point-off-surface", "charge weight requested away from M_F");
    double gn = grad_norm(F.gradient(), z);
    if (gn < 1e-12 * scale) raise("critical-point", "gradient vanishes on the surface");
    return 1.0 / gn;
}

std::vector<double> confocal_ellipsoid(const std::vector<double>& semiaxes, double lambda) {
    double min_sq = std::numeric_limits<double>::infinity();
    for (double a : semiaxes) {
        if (a <= 0) raise("bad-parameters", "semiaxes must be positive");
        min_sq = std::min(min_sq, a * a);
    }
    if (lambda <= -min_sq) raise("bad-parameters", "lambda must exceed -min(a_i^2)");
    std::vector<double> out;
    out.reserve(semiaxes.size());
    for (double a : semiaxes) out.push_back(std::sqrt(a * a + lambda));
    return out;
}

namespace {

// Gauss-Legendre nodes/weights on [-1,1], cached per order.
const std::vector<std::pair<double, double>>& gauss_legendre(int order) {
    static std::map<int, std::vector<std::pair<double, double>>> cache;
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    std::vector<std::pair<double, double>> nw;
    for (int i = 0; i < order; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1, p1 = 0;
            for (int j = 0; j < order; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) * x * p1 - j * p2) / (j + 1);
            }
            pp = order * (x * p0 - p1) / (x * x - 1);
            double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        nw.emplace_back(x, 2.0 / ((1 - x * x) * pp * pp));
    }
    std::sort(nw.begin(), nw.end());
    return cache.emplace(order, std::move(nw)).first->second;
}

constexpr int kMaxComponents = 4; // scalar potential or an n-vector of forces

struct PanelValue {
    double v[kMaxComponents] = {0, 0, 0, 0};
};

// Adaptive panel integrator over 1D or 2D rectangles with local
// extrapolation error estimates (coarse vs summed children). Deterministic:
// refinement priority ties break on creation order, and the final sum runs
// in creation order.
template <typename Eval>
class AdaptivePanels {
public:
    AdaptivePanels(int dim, int ncomp, int order, Eval eval)
        : dim_(dim), ncomp_(ncomp), order_(order), eval_(std::move(eval)) {}

    // integrate with the given initial subdivision
    void run(const std::vector<std::array<double, 4>>& initial, double tol, long max_nodes) {
        for (const auto& b : initial) add_panel(b);
        while (total_error() > tol && nodes_used < max_nodes) {
            // refine the worst leaf
            std::size_t worst = 0;
            bool found = false;
            double worst_err = -1;
            for (std::size_t i = 0; i < panels_.size(); ++i) {
                if (!panels_[i].leaf) continue;
                if (panels_[i].err > worst_err) {
                    worst_err = panels_[i].err;
                    worst = i;
                    found = true;
                }
            }
            if (!found) break;
            panels_[worst].leaf = false;
            for (const auto& child : children_of(panels_[worst].bounds)) add_panel(child);
        }
        converged = total_error() <= tol;
    }

    double total_error() const {
        double acc = 0;
        for (const auto& p : panels_)
            if (p.leaf) acc += p.err;
        return acc;
    }

    PanelValue total_value() const {
        PanelValue acc;
        for (const auto& p : panels_)
            if (p.leaf)
                for (int c = 0; c < ncomp_; ++c) acc.v[c] += p.fine.v[c];
        return acc;
    }

    long nodes_used = 0;
    bool converged = false;

private:
    struct Panel {
        std::array<double, 4> bounds; // lo0, hi0, lo1, hi1 (last two unused in 1D)
        PanelValue coarse, fine;
        double err = 0;
        bool leaf = true;
    };

    std::vector<std::array<double, 4>> children_of(const std::array<double, 4>& b) const {
        std::vector<std::array<double, 4>> out;
        double m0 = 0.5 * (b[0] + b[1]);
        if (dim_ == 1) {
            out.push_back({b[0], m0, 0, 0});
            out.push_back({m0, b[1], 0, 0});
        } else {
            double m1 = 0.5 * (b[2] + b[3]);
            out.push_back({b[0], m0, b[2], m1});
            out.push_back({b[0], m0, m1, b[3]});
            out.push_back({m0, b[1], b[2], m1});
            out.push_back({m0, b[1], m1, b[3]});
        }
        return out;
    }

    PanelValue integrate_panel(const std::array<double, 4>& b) {
        const auto& nw = gauss_legendre(order_);
        PanelValue acc;
        double out[kMaxComponents];
        if (dim_ == 1) {
            double half = 0.5 * (b[1] - b[0]);
            double mid = 0.5 * (b[0] + b[1]);
            for (const auto& [x, w] : nw) {
                double t[2] = {mid + half * x, 0};
                eval_(t, out);
                ++nodes_used;
                for (int c = 0; c < ncomp_; ++c) acc.v[c] += w * half * out[c];
            }
        } else {
            double half0 = 0.5 * (b[1] - b[0]), mid0 = 0.5 * (b[0] + b[1]);
            double half1 = 0.5 * (b[3] - b[2]), mid1 = 0.5 * (b[2] + b[3]);
            for (const auto& [x0, w0] : nw)
                for (const auto& [x1, w1] : nw) {
                    double t[2] = {mid0 + half0 * x0, mid1 + half1 * x1};
                    eval_(t, out);
                    ++nodes_used;
                    for (int c = 0; c < ncomp_; ++c) acc.v[c] += w0 * w1 * half0 * half1 * out[c];
                }
        }
        return acc;
    }

    void add_panel(const std::array<double, 4>& bounds) {
        Panel p;
        p.bounds = bounds;
        p.coarse = integrate_panel(bounds);
        for (const auto& child : children_of(bounds)) {
            PanelValue cv = integrate_panel(child);
            for (int c = 0; c < ncomp_; ++c) p.fine.v[c] += cv.v[c];
        }
        p.err = 0;
        for (int c = 0; c < ncomp_; ++c) p.err += std::fabs(p.fine.v[c] - p.coarse.v[c]);
        panels_.push_back(std::move(p));
    }

    int dim_, ncomp_, order_;
    Eval eval_;
    std::vector<Panel> panels_;
};

struct SurfacePoint {
    std::vector<double> z;
    double element; // surface measure density against the parameter(s)
};

SurfacePoint ellipsoid_point(const EllipsoidPatch& e, double theta, double phi) {
    double st = std::sin(theta), ct = std::cos(theta);
    double sp = std::sin(phi), cp = std::cos(phi);
    const double a = e.semiaxes[0], b = e.semiaxes[1], c = e.semiaxes[2];
    SurfacePoint p;
    p.z = {e.center[0] + a * st * cp, e.center[1] + b * st * sp, e.center[2] + c * ct};
    double dt[3] = {a * ct * cp, b * ct * sp, -c * st};
    double dp[3] = {-a * st * sp, b * st * cp, 0};
    double cx = dt[1] * dp[2] - dt[2] * dp[1];
    double cy = dt[2] * dp[0] - dt[0] * dp[2];
    double cz = dt[0] * dp[1] - dt[1] * dp[0];
    p.element = std::sqrt(cx * cx + cy * cy + cz * cz);
    return p;
}

// Newton solve for the star-shaped radius at angle theta, warm-started from
// the traced table.
double curve_radius(const MultiPoly& F, const std::vector<MultiPoly>& grad, const CurvePatch& cp,
                    double theta, double warm) {
    double u0 = std::cos(theta), u1 = std::sin(theta);
    double rho = warm;
    for (int iter = 0; iter < 60; ++iter) {
        std::vector<double> z{cp.center[0] + rho * u0, cp.center[1] + rho * u1};
        double f = F.evaluate(z);
        double df = grad[0].evaluate(z) * u0 + grad[1].evaluate(z) * u1;
        if (df == 0) raise("unsupported-surface", "radial tangency while tracing a curve component");
        double step = f / df;
        rho -= step;
        if (std::fabs(step) < 1e-15 * (1.0 + std::fabs(rho))) break;
    }
    return rho;
}

double curve_warm_start(const CurvePatch& cp, double theta) {
    std::size_t k = cp.rho.size();
    double t = theta / (2.0 * M_PI);
    t -= std::floor(t);
    double pos = t * static_cast<double>(k);
    std::size_t i0 = static_cast<std::size_t>(pos) % k;
    std::size_t i1 = (i0 + 1) % k;
    double frac = pos - std::floor(pos);
    return cp.rho[i0] * (1 - frac) + cp.rho[i1] * frac;
}

SurfacePoint curve_point(const MultiPoly& F, const std::vector<MultiPoly>& grad,
                         const CurvePatch& cp, double theta) {
    double rho = curve_radius(F, grad, cp, theta, curve_warm_start(cp, theta));
    double u0 = std::cos(theta), u1 = std::sin(theta);
    SurfacePoint p;
    p.z = {cp.center[0] + rho * u0, cp.center[1] + rho * u1};
    double g0 = grad[0].evaluate(p.z), g1 = grad[1].evaluate(p.z);
    double gu = g0 * u0 + g1 * u1;          // grad . u
    double gup = -g0 * u1 + g1 * u0;        // grad . u'
    double drho = -rho * gup / gu;          // implicit differentiation of F(c + rho u) = 0
    p.element = std::sqrt(rho * rho + drho * drho);
    return p;
}

double patch_diameter(const ChargePatch& patch) {
    if (const auto* e = std::get_if<EllipsoidPatch>(&patch.shape))
        return 2.0 * *std::max_element(e->semiaxes.begin(), e->semiaxes.end());
    const auto& c = std::get<CurvePatch>(patch.shape);
    return 2.0 * *std::max_element(c.rho.begin(), c.rho.end());
}

double patch_min_distance(const ChargePatch& patch, const std::vector<double>& x) {
    double best = std::numeric_limits<double>::infinity();
    auto consider = [&](const std::vector<double>& z) {
        double d2 = 0;
        for (std::size_t i = 0; i < x.size(); ++i) d2 += (x[i] - z[i]) * (x[i] - z[i]);
        best = std::min(best, std::sqrt(d2));
    };
    if (const auto* e = std::get_if<EllipsoidPatch>(&patch.shape)) {
        for (int i = 0; i <= 24; ++i)
            for (int j = 0; j < 48; ++j)
                consider(ellipsoid_point(*e, M_PI * i / 24.0, 2 * M_PI * j / 48.0).z);
    } else {
        const auto& c = std::get<CurvePatch>(patch.shape);
        for (std::size_t j = 0; j < c.rho.size(); ++j) {
            double theta = 2 * M_PI * static_cast<double>(j) / static_cast<double>(c.rho.size());
            consider({c.center[0] + c.rho[j] * std::cos(theta),
                      c.center[1] + c.rho[j] * std::sin(theta)});
        }
    }
    return best;
}

enum class IntegrandKind { potential, force };

// One patch integral of the charge form against the kernel (or its minus
// gradient). Output components: 1 for the potential, nvars for the force.
struct PatchIntegral {
    PanelValue value;
    double error = 0;
    long nodes = 0;
    bool converged = true;
};

PatchIntegral integrate_patch(const SurfaceChargeSpec& spec, const ChargePatch& patch,
                              const std::vector<double>& x, IntegrandKind kind,
                              const QuadConfig& config, double tol, long max_nodes) {
    const int n = spec.F.nvars();
    const int ncomp = kind == IntegrandKind::potential ? 1 : n;
    const double cn = sphere_area(n);

    auto charge_at = [&](const SurfacePoint& p, double* out) {
        double r2 = 0;
        for (int i = 0; i < n; ++i) r2 += (x[static_cast<std::size_t>(i)] - p.z[static_cast<std::size_t>(i)]) *
                                          (x[static_cast<std::size_t>(i)] - p.z[static_cast<std::size_t>(i)]);
        double r = std::sqrt(r2);
        double weight = 1.0 / grad_norm(spec.grad, p.z);
        double density = spec.density.evaluate(p.z) * weight * p.element;
        if (kind == IntegrandKind::potential) {
            out[0] = kernel_G(n, r) * density;
        } else if (n == 2) {
            for (int i = 0; i < 2; ++i)
                out[i] = -(x[static_cast<std::size_t>(i)] - p.z[static_cast<std::size_t>(i)]) /
                         (2.0 * M_PI * r2) * density;
        } else {
            double factor = -std::pow(r, -n) / cn;
            for (int i = 0; i < n; ++i)
                out[i] = factor * (x[static_cast<std::size_t>(i)] - p.z[static_cast<std::size_t>(i)]) * density;
        }
    };

    PatchIntegral result;
    if (const auto* e = std::get_if<EllipsoidPatch>(&patch.shape)) {
        auto eval = [&](const double* t, double* out) { charge_at(ellipsoid_point(*e, t[0], t[1]), out); };
        AdaptivePanels<decltype(eval)> panels(2, ncomp, config.gauss_order, eval);
        std::vector<std::array<double, 4>> initial;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 8; ++j)
                initial.push_back({M_PI * i / 4.0, M_PI * (i + 1) / 4.0, 2 * M_PI * j / 8.0,
                                   2 * M_PI * (j + 1) / 8.0});
        panels.run(initial, tol, max_nodes);
        result.value = panels.total_value();
        result.error = panels.total_error();
        result.nodes = panels.nodes_used;
        result.converged = panels.converged;
    } else {
        const auto& c = std::get<CurvePatch>(patch.shape);
        auto eval = [&](const double* t, double* out) {
            charge_at(curve_point(spec.F, spec.grad, c, t[0]), out);
        };
        AdaptivePanels<decltype(eval)> panels(1, ncomp, config.gauss_order, eval);
        std::vector<std::array<double, 4>> initial;
        for (int i = 0; i < 16; ++i)
            initial.push_back({2 * M_PI * i / 16.0, 2 * M_PI * (i + 1) / 16.0, 0, 0});
        panels.run(initial, tol, max_nodes);
        result.value = panels.total_value();
        result.error = panels.total_error();
        result.nodes = panels.nodes_used;
        result.converged = panels.converged;
    }
    return result;
}

std::vector<PatchIntegral> integrate_all(const SurfaceChargeSpec& spec,
                                         const std::vector<double>& x, IntegrandKind kind,
                                         const QuadConfig& config) {
    if (static_cast<int>(x.size()) != spec.F.nvars())
        raise("dimension-mismatch", "evaluation point dimension mismatch");
    if (spec.patches.empty()) raise("bad-parameters", "charge spec has no patches");

    for (const ChargePatch& patch : spec.patches) {
        double dist = patch_min_distance(patch, x);
        if (dist < config.standoff_rel * patch_diameter(patch))
            raise("standoff", "evaluation point is too close to the surface for quadrature");
    }

    double tol_per = config.tol / static_cast<double>(spec.patches.size());
    long nodes_per = config.max_nodes / static_cast<long>(spec.patches.size());

    std::vector<PatchIntegral> parts(spec.patches.size());
    int threads = std::max(1, config.threads);
    if (threads > 1 && spec.patches.size() > 1) {
        std::vector<std::future<PatchIntegral>> futures;
        for (std::size_t i = 0; i < spec.patches.size(); ++i)
            futures.push_back(std::async(std::launch::async, [&, i] {
                return integrate_patch(spec, spec.patches[i], x, kind, config, tol_per, nodes_per);
            }));
        for (std::size_t i = 0; i < futures.size(); ++i) parts[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < spec.patches.size(); ++i)
            parts[i] = integrate_patch(spec, spec.patches[i], x, kind, config, tol_per, nodes_per);
    }
    return parts;
}

} // namespace

QuadratureResult potential(const SurfaceChargeSpec& spec, const std::vector<double>& x,
                           const QuadConfig& config) {
    if (spec.F.nvars() == 2)
        raise("potential-two-dim",
              "the n=2 potential is logarithmic and exposed only through attraction_force");
    auto parts = integrate_all(spec, x, IntegrandKind::potential, config);
    QuadratureResult out;
    for (std::size_t i = 0; i < parts.size(); ++i) { // fixed accumulation order
        int sign = spec.signs[static_cast<std::size_t>(spec.patches[i].component - 1)];
        out.value += sign * parts[i].value.v[0];
        out.error_estimate += parts[i].error;
        out.nodes_used += parts[i].nodes;
        out.converged = out.converged && parts[i].converged;
    }
    return out;
}

VectorQuadratureResult attraction_force(const SurfaceChargeSpec& spec,
                                        const std::vector<double>& x, const QuadConfig& config) {
    auto parts = integrate_all(spec, x, IntegrandKind::force, config);
    VectorQuadratureResult out;
    out.value.assign(x.size(), 0.0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int sign = spec.signs[static_cast<std::size_t>(spec.patches[i].component - 1)];
        for (std::size_t c = 0; c < x.size(); ++c) out.value[c] += sign * parts[i].value.v[c];
        out.error_estimate += parts[i].error;
        out.nodes_used += parts[i].nodes;
        out.converged = out.converged && parts[i].converged;
    }
    return out;
}

namespace {

EllipsoidPatch fit_axis_ellipsoid(const MultiPoly& F, const std::vector<std::vector<double>>& cloud) {
    int n = F.nvars();
    std::vector<double> lo(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
    std::vector<double> hi(static_cast<std::size_t>(n), -std::numeric_limits<double>::infinity());
    for (const auto& p : cloud)
        for (int i = 0; i < n; ++i) {
            lo[static_cast<std::size_t>(i)] = std::min(lo[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i)]);
            hi[static_cast<std::size_t>(i)] = std::max(hi[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i)]);
        }
    EllipsoidPatch e;
    e.center.resize(static_cast<std::size_t>(n));
    e.semiaxes.resize(static_cast<std::size_t>(n));
    std::vector<Rat> center_rat(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        e.center[static_cast<std::size_t>(i)] =
            0.5 * (lo[static_cast<std::size_t>(i)] + hi[static_cast<std::size_t>(i)]);
        center_rat[static_cast<std::size_t>(i)] = rat_from_double(e.center[static_cast<std::size_t>(i)]);
    }
    // refine with exact ray roots along each axis
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> dir(static_cast<std::size_t>(n), Rat(0));
        dir[static_cast<std::size_t>(i)] = 1;
        double est = 0.5 * (hi[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(i)]);
        auto roots = real_roots(F.restrict_to_line(center_rat, dir));
        if (roots.size() < 2)
            raise("unsupported-surface", "component does not look like an axis-aligned ellipsoid");
        double best_plus = 0, best_minus = 0, dp = 1e300, dm = 1e300;
        for (double t : roots) {
            if (std::fabs(t - est) < dp) {
                dp = std::fabs(t - est);
                best_plus = t;
            }
            if (std::fabs(t + est) < dm) {
                dm = std::fabs(t + est);
                best_minus = t;
            }
        }
        e.center[static_cast<std::size_t>(i)] += 0.5 * (best_plus + best_minus);
        e.semiaxes[static_cast<std::size_t>(i)] = 0.5 * (best_plus - best_minus);
        if (e.semiaxes[static_cast<std::size_t>(i)] <= 0)
            raise("unsupported-surface", "degenerate ellipsoid fit");
        center_rat[static_cast<std::size_t>(i)] = rat_from_double(e.center[static_cast<std::size_t>(i)]);
    }
    // verify the fit on a parameter grid
    for (int i = 1; i < 12; ++i)
        for (int j = 0; j < 24; ++j) {
            SurfacePoint p = ellipsoid_point(e, M_PI * i / 12.0, 2 * M_PI * j / 24.0);
            double scale = poly_scale_at(F, p.z) + 1.0;
            if (std::fabs(F.evaluate(p.z)) > 1e-6 * scale)
                raise("unsupported-surface",
                      "component is not an axis-aligned ellipsoid; only quadric components are "
                      "meshed in three dimensions");
        }
    return e;
}

CurvePatch trace_curve(const MultiPoly& F, const std::vector<MultiPoly>& grad,
                       const std::vector<std::vector<double>>& cloud,
                       const std::vector<double>& seed) {
    CurvePatch cp;
    cp.center.assign(2, 0.0);
    for (const auto& p : cloud) {
        cp.center[0] += p[0];
        cp.center[1] += p[1];
    }
    cp.center[0] /= static_cast<double>(cloud.size());
    cp.center[1] /= static_cast<double>(cloud.size());

    const std::size_t k = 512;
    cp.rho.assign(k, 0.0);
    double theta0 = std::atan2(seed[1] - cp.center[1], seed[0] - cp.center[0]);
    double rho0 = std::hypot(seed[0] - cp.center[0], seed[1] - cp.center[1]);
    if (rho0 <= 0) raise("unsupported-surface", "curve seed coincides with the centroid");

    std::size_t j0 = static_cast<std::size_t>(std::fmod(theta0 / (2 * M_PI) * k + k, k));
    double warm = rho0;
    std::vector<bool> filled(k, false);
    for (std::size_t step = 0; step <= k; ++step) {
        std::size_t j = (j0 + step) % k;
        double theta = 2 * M_PI * static_cast<double>(j) / static_cast<double>(k);
        double rho = warm;
        // direct Newton with explicit warm start (table may be incomplete)
        double u0 = std::cos(theta), u1 = std::sin(theta);
        for (int iter = 0; iter < 80; ++iter) {
            std::vector<double> z{cp.center[0] + rho * u0, cp.center[1] + rho * u1};
            double f = F.evaluate(z);
            double df = grad[0].evaluate(z) * u0 + grad[1].evaluate(z) * u1;
            if (df == 0)
                raise("unsupported-surface", "component is not star-shaped around its centroid");
            double delta = f / df;
            rho -= delta;
            if (std::fabs(delta) < 1e-15 * (1 + std::fabs(rho))) break;
        }
        if (rho <= 0 || std::fabs(rho - warm) > 0.5 * (rho0 + warm))
            raise("unsupported-surface", "curve tracing jumped between branches");
        if (step == k) {
            if (std::fabs(rho - cp.rho[j]) > 1e-9 * (1 + rho0))
                raise("unsupported-surface", "curve tracing did not close up");
            break;
        }
        cp.rho[j] = rho;
        filled[j] = true;
        warm = rho;
    }
    for (bool f : filled)
        if (!f) raise("unsupported-surface", "curve tracing left gaps");
    return cp;
}

} // namespace

SurfaceChargeSpec SurfaceChargeSpec::build(const MultiPoly& F, const MultiPoly& density,
                                           const Box& box, int grid,
                                           std::optional<std::vector<int>> sign_override) {
    int n = F.nvars();
    if (n != 2 && n != 3)
        raise("unsupported-dimension", "charge building handles plane curves and surfaces in R^3");
    if (density.nvars() != n) raise("dimension-mismatch", "density arity differs from F");

    SurfaceChargeSpec spec{F, density, F.gradient(), {}, {}};
    SurfaceComponents components = surface_components(F, box, grid);

    for (std::size_t c = 0; c < components.points.size(); ++c) {
        ChargePatch patch;
        patch.component = static_cast<int>(c) + 1;
        if (n == 3)
            patch.shape = fit_axis_ellipsoid(F, components.points[c]);
        else
            patch.shape = trace_curve(F, spec.grad, components.points[c], components.seeds[c]);
        spec.patches.push_back(std::move(patch));
    }

    if (sign_override) {
        if (sign_override->size() != components.points.size())
            raise("bad-parameters", "sign override length does not match component count");
        for (int s : *sign_override)
            if (s != 1 && s != -1) raise("bad-parameters", "signs must be +-1");
        spec.signs = *sign_override;
    } else {
        for (std::size_t c = 0; c < components.points.size(); ++c)
            spec.signs.push_back((c % 2 == 0) ? 1 : -1); // odd components positive
    }
    return spec;
}

SurfaceChargeSpec SurfaceChargeSpec::from_ellipsoids(const MultiPoly& F, const MultiPoly& density,
                                                     std::vector<EllipsoidPatch> ellipsoids,
                                                     std::vector<int> signs) {
    if (F.nvars() != 3) raise("unsupported-dimension", "ellipsoid patches live in R^3");
    if (ellipsoids.empty()) raise("bad-parameters", "need at least one ellipsoid");
    if (signs.size() != ellipsoids.size())
        raise("bad-parameters", "sign count must match ellipsoid count");
    SurfaceChargeSpec spec{F, density, F.gradient(), {}, std::move(signs)};
    for (std::size_t i = 0; i < ellipsoids.size(); ++i) {
        ChargePatch patch;
        patch.component = static_cast<int>(i) + 1;
        patch.shape = std::move(ellipsoids[i]);
        spec.patches.push_back(std::move(patch));
    }
    return spec;
}

double polynomial_fit_check(const SurfaceChargeSpec& spec, const std::vector<double>& a,
                            const std::vector<double>& b, int degree, int samples,
                            const QuadConfig& config) {
    if (samples < std::max(degree + 1, 2))
        raise("bad-parameters", "need more samples than fit coefficients");
    std::vector<double> ts, us;
    for (int i = 0; i < samples; ++i) {
        double t = samples == 1 ? 0.5 : static_cast<double>(i) / (samples - 1);
        std::vector<double> x(a.size());
        for (std::size_t c = 0; c < a.size(); ++c) x[c] = a[c] + t * (b[c] - a[c]);
        us.push_back(potential(spec, x, config).value);
        ts.push_back(2 * t - 1); // shifted to [-1,1] for conditioning
    }
    if (degree < 0) {
        double worst = 0;
        for (double u : us) worst = std::max(worst, std::fabs(u));
        return worst;
    }
    int m = degree + 1;
    std::vector<std::vector<long double>> ata(static_cast<std::size_t>(m),
                                              std::vector<long double>(static_cast<std::size_t>(m) + 1, 0.0L));
    for (int s = 0; s < samples; ++s) {
        std::vector<long double> row(static_cast<std::size_t>(m));
        long double p = 1.0L;
        for (int j = 0; j < m; ++j) {
            row[static_cast<std::size_t>(j)] = p;
            p *= ts[static_cast<std::size_t>(s)];
        }
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j)
                ata[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    row[static_cast<std::size_t>(i)] * row[static_cast<std::size_t>(j)];
            ata[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] +=
                row[static_cast<std::size_t>(i)] * us[static_cast<std::size_t>(s)];
        }
    }
    // gaussian elimination with partial pivoting
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::fabs(static_cast<double>(ata[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)])) >
                std::fabs(static_cast<double>(ata[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)])))
                piv = r;
        std::swap(ata[static_cast<std::size_t>(piv)], ata[static_cast<std::size_t>(col)]);
        for (int r = 0; r < m; ++r) {
            if (r == col) continue;
            long double f = ata[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                            ata[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            for (int c = col; c <= m; ++c)
                ata[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * ata[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
        }
    }
    std::vector<long double> coeff(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        coeff[static_cast<std::size_t>(i)] = ata[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] /
                                             ata[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    double worst = 0;
    for (int s = 0; s < samples; ++s) {
        long double fit = 0, p = 1;
        for (int j = 0; j < m; ++j) {
            fit += coeff[static_cast<std::size_t>(j)] * p;
            p *= ts[static_cast<std::size_t>(s)];
        }
        worst = std::max(worst, std::fabs(static_cast<double>(fit - us[static_cast<std::size_t>(s)])));
    }
    return worst;
}

} // namespace hyperpot
