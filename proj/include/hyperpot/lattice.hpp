#ifndef HYPERPOT_LATTICE_HPP
#define HYPERPOT_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hyperpot/rational.hpp"

namespace hyperpot {

/// Exact integer vector in a monodromy lattice (a vanishing cycle, a reduced
/// Arnold class, or a generic element). Arbitrary precision: hyperbolic
/// orbits grow coordinates exponentially.
using CycleVector = std::vector<Int>;

enum class Symmetry { symmetric, skew };

/// Integer bilinear form on Z^rank. In symmetric mode the lattice must be
/// even (diagonal entries in 2Z), matching self-pairing +-2 of vanishing
/// cycles.
class Lattice {
public:
    Lattice(std::vector<std::vector<Int>> gram, Symmetry symmetry);

    int rank() const { return rank_; }
    Symmetry symmetry() const { return symmetry_; }
    const std::vector<std::vector<Int>>& gram() const { return gram_; }

    Int inner(const CycleVector& u, const CycleVector& v) const;

private:
    int rank_;
    Symmetry symmetry_;
    std::vector<std::vector<Int>> gram_;
};

/// Rational linear functional on the lattice.
struct LinearForm {
    std::vector<Rat> coeffs;

    Rat value(const CycleVector& v) const;
    bool is_zero() const;
};

/// Reflection in kappa with respect to the form: v - (2<v,k>/<k,k>) k.
/// Requires <kappa,kappa> in {2,-2}; involutive and form-preserving.
CycleVector pl_reflect(const Lattice& L, const CycleVector& v, const CycleVector& kappa);

/// Skew transvection v + sign * <v,kappa> * kappa.
CycleVector pl_transvect(const Lattice& L, const CycleVector& v, const CycleVector& kappa,
                         int sign);

enum class GeneratorKind { first, second };

/// Generators of a monodromy (sub)group: vanishing cycles with self-pairing
/// +-2 in symmetric mode. Kind tags model first-kind vs second-kind cycles;
/// the second-kind subset spans the corank >= 1 sublattice M(x).
struct GeneratorSet {
    Lattice lattice;
    std::vector<CycleVector> generators;
    std::vector<GeneratorKind> kinds;

    GeneratorSet(Lattice lat, std::vector<CycleVector> gens, std::vector<GeneratorKind> kindtags = {});

    std::vector<CycleVector> generators_of_kind(GeneratorKind kind) const;
};

enum class OrbitStatus { closed, truncated };

struct OrbitReport {
    std::vector<CycleVector> vectors;        // BFS discovery order
    OrbitStatus status = OrbitStatus::closed;
    std::vector<std::size_t> depth_profile;  // cumulative size after each BFS depth
    std::optional<std::set<Rat>> spectrum;
};

/// Deterministic BFS closure of start under all generator actions
/// (reflections in symmetric mode; transvections and their inverses in skew
/// mode). Exact dedup on coordinates.
OrbitReport orbit(const GeneratorSet& gens, const CycleVector& start, std::size_t max_size,
                  std::size_t max_depth);

/// Exact distinct values of the form over the orbit. Truncated orbits are
/// rejected unless allow_truncated is set.
std::set<Rat> value_spectrum(const LinearForm& form, const OrbitReport& report,
                             bool allow_truncated = false);

/// Saturated integer basis of { v : gram * v = 0 }.
std::vector<CycleVector> form_kernel(const Lattice& L);

/// Exact determinant of the gram matrix (Bareiss).
Int gram_determinant(const Lattice& L);

/// Nondegenerate quotient by the kernel, with the integer projection map.
class QuotientLattice {
public:
    const Lattice& lattice() const { return lattice_; }
    CycleVector project(const CycleVector& v) const;
    /// Induced form on the quotient; requires form to vanish on the kernel.
    LinearForm project_form(const LinearForm& form) const;

private:
    friend QuotientLattice quotient_lattice(const Lattice&, const std::vector<CycleVector>&);
    QuotientLattice(Lattice lat, std::vector<std::vector<Int>> proj,
                    std::vector<CycleVector> kernel, int source_rank)
        : lattice_(std::move(lat)), proj_rows_(std::move(proj)), kernel_(std::move(kernel)),
          source_rank_(source_rank) {}

    Lattice lattice_;
    std::vector<std::vector<Int>> proj_rows_; // quotient coords = proj_rows * v
    std::vector<CycleVector> kernel_;
    int source_rank_;
};

QuotientLattice quotient_lattice(const Lattice& L, const std::vector<CycleVector>& kernel);

/// Saturated basis of the simultaneous orthogonal complement of all
/// generators: exactly the vectors fixed by every generator reflection.
std::vector<CycleVector> fixed_vectors(const GeneratorSet& gens);

/// Extended root system D~m on m+1 simple affine roots (diagonal 2), with an
/// optional zero-form summand appended. Generators are the simple roots.
GeneratorSet build_D_tilde(int m, int zero_summand_rank = 0);

/// Orthogonal model from the concentric-spheres picture: rank `total`, form
/// parity_sign * 2 * Id, reduced class = sum of the first k basis cycles.
struct ModelHyperbolic {
    GeneratorSet generators;
    CycleVector arnold_class;
};

ModelHyperbolic build_model_hyperbolic(int k, int total, int parity_sign);

/// Plane-curve monodromy model: pairs of k-subsets of {1..d-eta} acted on by
/// two independent symmetric groups. States are bitmask pairs.
struct PlaneCurveModel {
    int d = 0;
    int eta = 0;
    int k = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> states; // BFS order
    std::size_t orbit_size() const { return states.size(); }
};

PlaneCurveModel build_plane_curve_model(int d, int eta, int k);

/// Distinct values of sum_{i in A} wa[i] + sum_{j in B} wb[j] over the orbit.
std::set<Rat> plane_curve_spectrum(const PlaneCurveModel& model, const std::vector<Rat>& wa,
                                   const std::vector<Rat>& wb);

/// Injective default weights (binary encoding), so generic orbits separate.
void plane_curve_standard_weights(int circle_count, std::vector<Rat>& wa, std::vector<Rat>& wb);

struct GrowthReport {
    enum class Verdict { finite, growth_consistent_with_infinite, inconclusive };
    std::vector<std::size_t> depths;
    std::vector<std::size_t> orbit_sizes;
    std::vector<std::size_t> value_counts;
    Verdict verdict = Verdict::inconclusive;
    std::string verdict_string() const;
};

/// Experimental probe for completely infinite triples: distinct form-value
/// counts on truncated orbits across a depth schedule.
GrowthReport probe_completely_infinite(const GeneratorSet& gens, const CycleVector& v,
                                       const LinearForm& form,
                                       const std::vector<std::size_t>& depth_schedule);

/// Rank bookkeeping for the d=2 lattice model (D~_{n+1} plus a zero summand
/// for odd n) against the Milnor-side rank; the two published counts differ
/// by one for odd n, so both are reported, never asserted equal.
struct QuadricRankComparison {
    int lattice_rank = 0;
    int kernel_rank = 0;
    int quotient_rank = 0;
    long milnor_rank = 0;
};

QuadricRankComparison d2_rank_comparison(long n);

} // namespace hyperpot

#endif
