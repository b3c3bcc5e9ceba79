#ifndef HYPERPOT_UNIPOLY_HPP
#define HYPERPOT_UNIPOLY_HPP

#include <vector>

#include "hyperpot/rational.hpp"

namespace hyperpot {

/// Univariate polynomial with exact rational coefficients, lowest degree first.
class UniPoly {
public:
    UniPoly() = default; // zero polynomial
    explicit UniPoly(std::vector<Rat> coeffs);
    static UniPoly constant(const Rat& c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& leading() const;

    Rat evaluate(const Rat& t) const;
    double evaluate(double t) const;

    UniPoly derivative() const;

    UniPoly operator+(const UniPoly& other) const;
    UniPoly operator-(const UniPoly& other) const;
    UniPoly operator*(const UniPoly& other) const;
    UniPoly operator-() const;
    bool operator==(const UniPoly& other) const { return coeffs_ == other.coeffs_; }

private:
    std::vector<Rat> coeffs_;
    void trim();
};

/// One end of a root-counting interval; lets callers say (-inf, +inf].
struct RootBound {
    enum class Kind { neg_inf, finite, pos_inf };
    Kind kind = Kind::finite;
    Rat value;

    static RootBound minus_infinity() { return {Kind::neg_inf, Rat(0)}; }
    static RootBound plus_infinity() { return {Kind::pos_inf, Rat(0)}; }
    static RootBound at(const Rat& v) { return {Kind::finite, v}; }
};

/// Exact number of real roots of u in (lo, hi], by Sturm's theorem over the
/// integers (pseudo-remainders, content stripped). With distinct=false roots
/// are counted with multiplicity.
int real_root_count(const UniPoly& u, const RootBound& lo, const RootBound& hi,
                    bool distinct = true);

/// Monic-free gcd over Q (primitive, positive leading coefficient).
UniPoly unipoly_gcd(const UniPoly& a, const UniPoly& b);

/// u / gcd(u, u'): same roots, all simple.
UniPoly squarefree_part(const UniPoly& u);

/// Whether u has a root of multiplicity >= 2 in (lo, hi].
bool has_multiple_root_in(const UniPoly& u, const RootBound& lo, const RootBound& hi);

/// All distinct real roots, ascending, isolated by Sturm bisection and
/// refined to double precision.
std::vector<double> real_roots(const UniPoly& u);

} // namespace hyperpot

#endif
