#ifndef HYPERPOT_RATIONAL_HPP
#define HYPERPOT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hyperpot {

using Int = mpz_class;
using Rat = mpq_class;

// Accepts "p/q", integers, and decimal notation ("-1.25", "3e-2").
Rat rat_from_string(const std::string& text);

// Canonical form: "p" when the denominator is 1, "p/q" otherwise.
std::string rat_to_string(const Rat& value);

double rat_to_double(const Rat& value);

// Doubles are dyadic rationals; the conversion is exact.
Rat rat_from_double(double value);

// mpq_class(num, den) does not canonicalize; this does.
inline Rat rat_of(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::vector<Rat> rat_vector_from_doubles(const std::vector<double>& xs);
std::vector<double> doubles_from_rat_vector(const std::vector<Rat>& xs);

int sign_of(const Int& value);

} // namespace hyperpot

#endif
