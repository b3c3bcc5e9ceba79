#ifndef HYPERPOT_MILNOR_HPP
#define HYPERPOT_MILNOR_HPP

#include "hyperpot/rational.hpp"

namespace hyperpot {

/// Milnor number of a homogeneous function of degree d with an isolated
/// singularity in n variables: (d-1)^n.
Int mu_hypersurface(long d, long n);

/// Milnor number of the homogeneous codimension-2 complete intersection with
/// component degrees a, b. The a != b branch must divide exactly; a failure
/// signals formula misuse and raises.
Int mu_codim2(long a, long b, long n);

struct RankReport {
    Int mu_tilde; // hypersurface Milnor number
    Int mu;       // codimension-2 Milnor number
    Int nu;       // mu + mu_tilde
    Int rank_H;   // vanishing homology rank of the degree-d surface setup
};

RankReport rank_H(long d, long n);

} // namespace hyperpot

#endif
