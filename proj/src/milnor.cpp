#include "hyperpot/milnor.hpp"

#include "hyperpot/error.hpp"

namespace hyperpot {

namespace {

Int ipow(long base, long exp) {
    Int out;
    Int b(base);
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
    return out;
}

} // namespace

Int mu_hypersurface(long d, long n) {
    if (d < 1 || n < 1) raise("bad-parameters", "mu_hypersurface needs d, n >= 1");
    return ipow(d - 1, n);
}

Int mu_codim2(long a, long b, long n) {
    if (a < 1 || b < 1) raise("bad-parameters", "mu_codim2 needs degrees >= 1");
    if (n < 2) raise("bad-parameters", "mu_codim2 needs n >= 2");
    if (a == b) return ipow(a - 1, n) * Int(a * n - a + 1);
    Int numerator = ipow(a - 1, n) * Int(b) - ipow(b - 1, n) * Int(a);
    Int divisor(a - b);
    Int quotient, remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
                divisor.get_mpz_t());
    if (remainder != 0)
        raise("non-integral", "mu_codim2 quotient is not an integer; formula misuse");
    return quotient;
}

RankReport rank_H(long d, long n) {
    if (d < 2) raise("bad-parameters", "rank_H needs d >= 2");
    if (n < 2) raise("bad-parameters", "rank_H needs n >= 2");
    RankReport report;
    report.mu_tilde = mu_hypersurface(d, n);
    report.mu = mu_codim2(d, 2, n);
    report.nu = report.mu + report.mu_tilde;
    if (d == 2) {
        report.rank_H = Int(2 * n);
    } else {
        Int numerator = 2 * ipow(d - 1, n) - Int(d);
        Int divisor(d - 2);
        Int quotient, remainder;
        mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
                    divisor.get_mpz_t());
        if (remainder != 0)
            raise("non-integral", "rank_H correction term is not an integer");
        report.rank_H = ipow(d - 1, n) + quotient;
    }
    return report;
}

} // namespace hyperpot
