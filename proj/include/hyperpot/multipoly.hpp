#ifndef HYPERPOT_MULTIPOLY_HPP
#define HYPERPOT_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <vector>

#include "hyperpot/rational.hpp"
#include "hyperpot/unipoly.hpp"

namespace hyperpot {

/// Exact multivariate polynomial over Q. Terms are kept in a map with
/// lexicographic exponent order, so iteration (and every derived output)
/// is deterministic. No zero coefficients are stored.
class MultiPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rat>;

    explicit MultiPoly(int nvars);
    static MultiPoly constant(int nvars, const Rat& c);
    static MultiPoly variable(int nvars, int index);
    static MultiPoly monomial(int nvars, Exponents exps, const Rat& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // max total degree; -1 for the zero polynomial
    const TermMap& terms() const { return terms_; }

    MultiPoly& add_term(Exponents exps, const Rat& c);

    MultiPoly operator+(const MultiPoly& other) const;
    MultiPoly operator-(const MultiPoly& other) const;
    MultiPoly operator*(const MultiPoly& other) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const Rat& scalar) const;
    bool operator==(const MultiPoly& other) const;

    Rat evaluate(const std::vector<Rat>& x) const;
    double evaluate(const std::vector<double>& x) const;

    MultiPoly partial(int var) const;
    std::vector<MultiPoly> gradient() const;

    /// Sum of the terms of maximal total degree.
    MultiPoly principal_part() const;

    /// t -> p(a + t v), exact. v must be nonzero.
    UniPoly restrict_to_line(const std::vector<Rat>& a, const std::vector<Rat>& v) const;

    /// Quotient when q divides *this exactly, nullopt otherwise.
    std::optional<MultiPoly> divided_exactly_by(const MultiPoly& q) const;

private:
    int nvars_;
    TermMap terms_;
};

MultiPoly pow(const MultiPoly& base, int exponent);

/// Largest m with (x1^2+x2^2)^m dividing the principal part; nvars must be 2.
int eta_factor_count(const MultiPoly& p);

} // namespace hyperpot

#endif
