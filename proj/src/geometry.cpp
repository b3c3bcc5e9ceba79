#include "hyperpot/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "hyperpot/error.hpp"
#include "hyperpot/unipoly.hpp"

namespace hyperpot {

namespace {

std::vector<double> unit_direction(const std::vector<Rat>& v) {
    std::vector<double> d = doubles_from_rat_vector(v);
    double norm = 0;
    for (double c : d) norm += c * c;
    norm = std::sqrt(norm);
    for (double& c : d) c /= norm;
    return d;
}

// axes, then hypercube diagonals (first nonzero positive), then seeded
// random small-integer directions
std::vector<std::vector<Rat>> direction_sample(int nvars, int ndirs, std::uint64_t seed) {
    std::vector<std::vector<Rat>> dirs;
    for (int i = 0; i < nvars; ++i) {
        std::vector<Rat> v(static_cast<std::size_t>(nvars), Rat(0));
        v[static_cast<std::size_t>(i)] = 1;
        dirs.push_back(std::move(v));
    }
    int diag_count = 1 << (nvars - 1);
    for (int mask = 0; mask < diag_count; ++mask) {
        std::vector<Rat> v(static_cast<std::size_t>(nvars), Rat(1));
        for (int i = 1; i < nvars; ++i)
            if ((mask >> (i - 1)) & 1) v[static_cast<std::size_t>(i)] = -1;
        dirs.push_back(std::move(v));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-9, 9);
    while (static_cast<int>(dirs.size()) < ndirs) {
        std::vector<Rat> v(static_cast<std::size_t>(nvars));
        bool nonzero = false;
        for (auto& c : v) {
            long x = coeff(rng);
            c = Rat(x);
            nonzero |= (x != 0);
        }
        if (!nonzero) continue;
        // canonical sign so v and -v are not sampled as distinct lines
        for (auto& c : v) {
            if (c == 0) continue;
            if (c < 0)
                for (auto& w : v) w = -w;
            break;
        }
        dirs.push_back(std::move(v));
    }
    return dirs;
}

// d distinct real projective intersection points of the line x + t v with
// M_F: all affine roots simple and real, plus at most a simple root at
// infinity absorbing the degree drop.
bool line_meets_in_d_points(const MultiPoly& F, int degree, const std::vector<Rat>& x,
                            const std::vector<Rat>& v) {
    UniPoly u = F.restrict_to_line(x, v);
    if (u.is_zero()) return false;
    int drop = degree - u.degree();
    if (drop > 1) return false;
    if (u.degree() == 0) return drop == 1 && degree == 1;
    int distinct = real_root_count(u, RootBound::minus_infinity(), RootBound::plus_infinity(), true);
    return distinct == u.degree();
}

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

} // namespace

HyperbolicityReport is_strictly_hyperbolic(const MultiPoly& F, const std::vector<Rat>& x,
                                           int ndirs, std::uint64_t seed) {
    if (F.is_zero()) raise("zero-polynomial", "hyperbolicity of the zero polynomial");
    if (static_cast<int>(x.size()) != F.nvars())
        raise("dimension-mismatch", "point dimension does not match polynomial");
    if (F.evaluate(x) == 0) raise("point-on-surface", "hyperbolicity reference point lies on M_F");

    int d = F.degree();
    HyperbolicityReport report;
    auto dirs = direction_sample(F.nvars(), ndirs, seed);
    for (const auto& v : dirs) {
        ++report.tested_directions;
        if (!line_meets_in_d_points(F, d, x, v)) {
            report.is_hyperbolic = false;
            report.witness_direction = unit_direction(v);
            return report;
        }
    }
    report.is_hyperbolic = true;
    return report;
}

ZoneLabel zone_index(const MultiPoly& F, const std::vector<Rat>& x,
                     const std::vector<std::vector<Rat>>& refs) {
    if (refs.empty()) raise("bad-parameters", "zone_index needs at least one reference point");
    if (F.evaluate(x) == 0) raise("point-on-surface", "zone_index point lies on M_F");

    ZoneLabel best;
    best.k = -1;
    for (const auto& ref : refs) {
        if (static_cast<int>(ref.size()) != F.nvars())
            raise("dimension-mismatch", "reference point dimension mismatch");
        if (ref == x) {
            best = ZoneLabel{0, 0, doubles_from_rat_vector(ref)};
            return best;
        }

        Rat scale(0);
        for (std::size_t i = 0; i < x.size(); ++i) scale = std::max(scale, rat_abs(x[i] - ref[i]));

        std::optional<int> crossings;
        for (int attempt = 0; attempt <= 8; ++attempt) {
            std::vector<Rat> r = ref;
            if (attempt > 0) {
                // documented deterministic jitter: 2^-20 * scale * attempt
                // along coordinate (attempt-1 mod n)
                std::size_t axis = static_cast<std::size_t>((attempt - 1) % F.nvars());
                r[axis] += scale * rat_of(attempt, 1 << 20);
            }
            if (F.evaluate(r) == 0) continue;
            std::vector<Rat> dir(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) dir[i] = x[i] - r[i];
            UniPoly u = F.restrict_to_line(r, dir);
            if (u.is_zero()) continue;
            RootBound lo = RootBound::at(Rat(0));
            RootBound hi = RootBound::at(Rat(1));
            if (has_multiple_root_in(u, lo, hi)) continue; // tangential, retry
            crossings = real_root_count(u, lo, hi, true);
            break;
        }
        if (!crossings)
            raise("tangential-segments",
                  "all segments to a reference point stay tangential after max retries");
        if (best.k < 0 || *crossings < best.k) {
            best.k = *crossings;
            best.crossings_found = *crossings;
            best.reference_point = doubles_from_rat_vector(ref);
        }
    }
    return best;
}

Box box_from_string(const std::string& text, int nvars) {
    std::vector<Rat> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(rat_from_string(item));
    if (static_cast<int>(values.size()) != 2 * nvars)
        raise("bad-parameters", "box needs lo,hi per coordinate");
    Box box;
    for (int i = 0; i < nvars; ++i) {
        box.lo.push_back(values[static_cast<std::size_t>(2 * i)]);
        box.hi.push_back(values[static_cast<std::size_t>(2 * i + 1)]);
        if (!(box.lo.back() < box.hi.back())) raise("bad-parameters", "degenerate box");
    }
    return box;
}

namespace {

std::vector<std::vector<Rat>> grid_points(const Box& box, int grid) {
    int nvars = static_cast<int>(box.lo.size());
    std::vector<std::vector<Rat>> axes(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i)
        for (int k = 0; k < grid; ++k)
            axes[static_cast<std::size_t>(i)].push_back(
                box.lo[static_cast<std::size_t>(i)] +
                (box.hi[static_cast<std::size_t>(i)] - box.lo[static_cast<std::size_t>(i)]) *
                    rat_of(k, grid - 1));

    std::vector<std::vector<Rat>> points;
    std::vector<int> idx(static_cast<std::size_t>(nvars), 0);
    while (true) {
        std::vector<Rat> p(static_cast<std::size_t>(nvars));
        for (int i = 0; i < nvars; ++i)
            p[static_cast<std::size_t>(i)] = axes[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        points.push_back(std::move(p));
        int pos = nvars - 1;
        while (pos >= 0) {
            if (++idx[static_cast<std::size_t>(pos)] < grid) break;
            idx[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return points;
}

struct GridUnionFind {
    std::vector<std::size_t> parent;
    explicit GridUnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// One reference per grid-connected region of the surface complement. A
// single test per region suffices: the sampled verdict is constant on
// connected complement components, and a region is never larger than one.
std::vector<std::vector<Rat>> discover_refs(const MultiPoly& F,
                                            const std::vector<std::vector<Rat>>& points, int grid,
                                            int ndirs, std::uint64_t seed,
                                            std::size_t max_refs = 8) {
    int nvars = F.nvars();
    std::vector<int> signs(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        Rat v = F.evaluate(points[i]);
        signs[i] = v == 0 ? 0 : (v > 0 ? 1 : -1);
    }

    std::vector<std::size_t> stride(static_cast<std::size_t>(nvars), 1);
    for (int i = nvars - 2; i >= 0; --i)
        stride[static_cast<std::size_t>(i)] =
            stride[static_cast<std::size_t>(i) + 1] * static_cast<std::size_t>(grid);

    GridUnionFind uf(points.size());
    std::vector<int> coord(static_cast<std::size_t>(nvars), 0);
    for (std::size_t flat = 0; flat < points.size(); ++flat) {
        for (int axis = 0; axis < nvars; ++axis) {
            if (coord[static_cast<std::size_t>(axis)] + 1 >= grid) continue;
            std::size_t neighbor = flat + stride[static_cast<std::size_t>(axis)];
            if (signs[flat] != 0 && signs[flat] == signs[neighbor]) uf.unite(flat, neighbor);
        }
        int pos = nvars - 1;
        while (pos >= 0) {
            if (++coord[static_cast<std::size_t>(pos)] < grid) break;
            coord[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
    }

    std::vector<std::vector<Rat>> refs;
    std::vector<std::size_t> decided_regions;
    for (std::size_t i = 0; i < points.size() && refs.size() < max_refs; ++i) {
        if (signs[i] == 0) continue;
        std::size_t region = uf.find(i);
        if (std::find(decided_regions.begin(), decided_regions.end(), region) !=
            decided_regions.end())
            continue;
        decided_regions.push_back(region);
        if (is_strictly_hyperbolic(F, points[i], ndirs, seed).is_hyperbolic)
            refs.push_back(points[i]);
    }
    return refs;
}

} // namespace

std::vector<ZoneSample> sample_hyperbolicity_domain(const MultiPoly& F, const Box& box, int grid,
                                                    int ndirs, std::uint64_t seed) {
    if (grid < 2) raise("bad-parameters", "grid must have at least two points per axis");
    if (static_cast<int>(box.lo.size()) != F.nvars())
        raise("dimension-mismatch", "box dimension does not match polynomial");

    auto points = grid_points(box, grid);
    auto refs = discover_refs(F, points, grid, ndirs, seed);
    if (refs.empty()) raise("no-hyperbolic-point", "no hyperbolic point found in box");

    std::vector<ZoneSample> samples;
    for (const auto& p : points) {
        if (F.evaluate(p) == 0) continue; // on-surface grid points are not classified
        HyperbolicityReport rep = is_strictly_hyperbolic(F, p, ndirs, seed);
        ZoneSample sample;
        sample.point = p;
        if (rep.is_hyperbolic) {
            sample.label.k = 0;
            sample.label.crossings_found = 0;
            sample.label.reference_point = doubles_from_rat_vector(p);
        } else {
            sample.label = zone_index(F, p, refs);
        }
        samples.push_back(std::move(sample));
    }
    return samples;
}

namespace {

// bisect a sign change of F along the segment [a, b] down to ~1e-13
std::vector<double> bisect_crossing(const MultiPoly& F, std::vector<double> a,
                                    std::vector<double> b) {
    double fa = F.evaluate(a);
    for (int iter = 0; iter < 60; ++iter) {
        std::vector<double> mid(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) mid[i] = 0.5 * (a[i] + b[i]);
        double fm = F.evaluate(mid);
        if (fm == 0.0) return mid;
        if ((fa < 0) == (fm < 0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    std::vector<double> mid(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) mid[i] = 0.5 * (a[i] + b[i]);
    return mid;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

SurfaceComponents surface_components(const MultiPoly& F, const Box& box, int grid, int ndirs,
                                     std::uint64_t seed) {
    if (grid < 3) raise("bad-parameters", "component search needs grid >= 3");
    int nvars = F.nvars();
    if (static_cast<int>(box.lo.size()) != nvars)
        raise("dimension-mismatch", "box dimension does not match polynomial");

    auto points = grid_points(box, grid);
    std::vector<int> signs(points.size());
    std::vector<std::vector<double>> dpoints(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        Rat value = F.evaluate(points[i]);
        signs[i] = value == 0 ? 0 : (value > 0 ? 1 : -1);
        dpoints[i] = doubles_from_rat_vector(points[i]);
    }

    // strides for the row-major grid enumeration produced by grid_points
    std::vector<std::size_t> stride(static_cast<std::size_t>(nvars), 1);
    for (int i = nvars - 2; i >= 0; --i)
        stride[static_cast<std::size_t>(i)] =
            stride[static_cast<std::size_t>(i) + 1] * static_cast<std::size_t>(grid);

    std::vector<std::vector<double>> crossings;
    std::vector<int> coord(static_cast<std::size_t>(nvars), 0);
    for (std::size_t flat = 0; flat < points.size(); ++flat) {
        if (signs[flat] == 0) crossings.push_back(dpoints[flat]);
        for (int axis = 0; axis < nvars; ++axis) {
            if (coord[static_cast<std::size_t>(axis)] + 1 >= grid) continue;
            std::size_t neighbor = flat + stride[static_cast<std::size_t>(axis)];
            if (signs[flat] != 0 && signs[neighbor] != 0 && signs[flat] != signs[neighbor])
                crossings.push_back(bisect_crossing(F, dpoints[flat], dpoints[neighbor]));
        }
        int pos = nvars - 1;
        while (pos >= 0) {
            if (++coord[static_cast<std::size_t>(pos)] < grid) break;
            coord[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
    }
    if (crossings.empty()) raise("no-surface-point", "no surface crossing found in box");

    // flood-fill by proximity: neighbors within 1.5 * the largest grid step
    double h = 0;
    for (int i = 0; i < nvars; ++i)
        h = std::max(h, (rat_to_double(box.hi[static_cast<std::size_t>(i)]) -
                         rat_to_double(box.lo[static_cast<std::size_t>(i)])) /
                            (grid - 1));
    double threshold2 = 1.5 * 1.5 * static_cast<double>(nvars) * h * h;

    UnionFind uf(crossings.size());
    for (std::size_t i = 0; i < crossings.size(); ++i)
        for (std::size_t j = i + 1; j < crossings.size(); ++j) {
            double d2 = 0;
            for (int c = 0; c < nvars; ++c) {
                double diff = crossings[i][static_cast<std::size_t>(c)] -
                              crossings[j][static_cast<std::size_t>(c)];
                d2 += diff * diff;
            }
            if (d2 <= threshold2) uf.unite(i, j);
        }

    std::vector<std::size_t> roots;
    std::vector<std::vector<std::vector<double>>> clouds;
    for (std::size_t i = 0; i < crossings.size(); ++i) {
        std::size_t r = uf.find(i);
        auto it = std::find(roots.begin(), roots.end(), r);
        std::size_t idx;
        if (it == roots.end()) {
            roots.push_back(r);
            clouds.emplace_back();
            idx = roots.size() - 1;
        } else {
            idx = static_cast<std::size_t>(it - roots.begin());
        }
        clouds[idx].push_back(crossings[i]);
    }

    // zone label on both sides of each component decides the ordering
    auto refs = discover_refs(F, points, grid, ndirs, seed);
    if (refs.empty()) raise("no-hyperbolic-point", "no hyperbolic point found in box");

    auto grad = F.gradient();
    std::vector<int> side_zone(clouds.size(), -1);
    std::vector<std::vector<double>> seeds(clouds.size());
    for (std::size_t c = 0; c < clouds.size(); ++c) {
        // deterministic seed: the cloud point with the largest first coordinate
        std::size_t best = 0;
        for (std::size_t i = 1; i < clouds[c].size(); ++i)
            if (clouds[c][i][0] > clouds[c][best][0]) best = i;
        seeds[c] = clouds[c][best];

        std::vector<double> normal(static_cast<std::size_t>(nvars));
        double norm = 0;
        for (int i = 0; i < nvars; ++i) {
            normal[static_cast<std::size_t>(i)] = grad[static_cast<std::size_t>(i)].evaluate(seeds[c]);
            norm += normal[static_cast<std::size_t>(i)] * normal[static_cast<std::size_t>(i)];
        }
        norm = std::sqrt(norm);
        if (norm == 0) raise("critical-point", "surface seed is a critical point of F");

        int k_min = -1;
        for (int dir : {+1, -1}) {
            std::vector<Rat> offset(static_cast<std::size_t>(nvars));
            for (int i = 0; i < nvars; ++i)
                offset[static_cast<std::size_t>(i)] = rat_from_double(
                    seeds[c][static_cast<std::size_t>(i)] +
                    dir * (h / 8.0) * normal[static_cast<std::size_t>(i)] / norm);
            if (F.evaluate(offset) == 0) continue;
            ZoneLabel label = zone_index(F, offset, refs);
            if (k_min < 0 || label.k < k_min) k_min = label.k;
        }
        if (k_min < 0) raise("component-layering", "cannot classify the sides of a component");
        side_zone[c] = k_min;
    }

    // expect side zones to be exactly 0..m-1
    std::vector<std::size_t> order(clouds.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return side_zone[a] < side_zone[b]; });
    for (std::size_t i = 0; i < order.size(); ++i)
        if (side_zone[order[i]] != static_cast<int>(i))
            raise("component-layering",
                  "component count does not match the expected zone layering");

    SurfaceComponents out;
    for (std::size_t i : order) {
        out.points.push_back(std::move(clouds[i]));
        out.seeds.push_back(std::move(seeds[i]));
    }
    return out;
}

std::vector<std::vector<double>> component_seeds(const MultiPoly& F, const Box& box, int grid,
                                                 int ndirs, std::uint64_t seed) {
    return surface_components(F, box, grid, ndirs, seed).seeds;
}

} // namespace hyperpot
