#ifndef HYPERPOT_GEOMETRY_HPP
#define HYPERPOT_GEOMETRY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperpot/multipoly.hpp"

namespace hyperpot {

struct HyperbolicityReport {
    bool is_hyperbolic = false;
    std::optional<std::vector<double>> witness_direction; // unit vector, set on failure
    int tested_directions = 0;
    std::string mode = "exact-on-rational-lines";
};

/// Sampled strict-hyperbolicity test: every tested line through x must meet
/// the projective surface in deg(F) distinct real points. Line restrictions
/// are exact; degree drops are scored projectively (a simple root at
/// infinity counts as one point). Directions are the coordinate axes, the
/// hypercube diagonals, and seeded random rational directions, ndirs total.
HyperbolicityReport is_strictly_hyperbolic(const MultiPoly& F, const std::vector<Rat>& x,
                                           int ndirs, std::uint64_t seed = 0);

struct ZoneLabel {
    int k = 0;               // 0 = hyperbolicity domain
    int crossings_found = 0; // transversal crossings on the best segment
    std::vector<double> reference_point;
};

/// Minimal number of transversal crossings of M_F over segments from the
/// reference points to x. Tangential segments are retried with a small
/// deterministic jitter of the reference (2^-20 of the segment scale per
/// attempt, cycling coordinate directions, at most 8 attempts).
ZoneLabel zone_index(const MultiPoly& F, const std::vector<Rat>& x,
                     const std::vector<std::vector<Rat>>& refs);

struct Box {
    std::vector<Rat> lo;
    std::vector<Rat> hi;
};

Box box_from_string(const std::string& text, int nvars); // "lo1,hi1,lo2,hi2,..."

struct ZoneSample {
    std::vector<Rat> point;
    ZoneLabel label;
};

/// Grid classification of every off-surface grid point. References are the
/// first grid points that pass the sampled hyperbolicity test; a point gets
/// k=0 exactly when it passes the test itself.
std::vector<ZoneSample> sample_hyperbolicity_domain(const MultiPoly& F, const Box& box, int grid,
                                                    int ndirs = 48, std::uint64_t seed = 0);

struct SurfaceComponents {
    // crossing-point clouds per connected component, ordered from the
    // hyperbolicity boundary outward (component j separates zone j from j+1)
    std::vector<std::vector<std::vector<double>>> points;
    std::vector<std::vector<double>> seeds; // one representative per component
};

/// Locate the components of M_F inside the box: sign changes along grid
/// edges, bisection onto the surface, proximity flood fill, then ordering by
/// the zone labels found on both sides of each component.
SurfaceComponents surface_components(const MultiPoly& F, const Box& box, int grid,
                                     int ndirs = 48, std::uint64_t seed = 0);

std::vector<std::vector<double>> component_seeds(const MultiPoly& F, const Box& box, int grid,
                                                 int ndirs = 48, std::uint64_t seed = 0);

} // namespace hyperpot

#endif
