#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperpot/error.hpp"
#include "hyperpot/milnor.hpp"

using namespace hyperpot;

TEST_CASE("mu_hypersurface closed form") {
    CHECK(mu_hypersurface(2, 1) == 1);
    CHECK(mu_hypersurface(2, 7) == 1);
    CHECK(mu_hypersurface(3, 3) == 8);
    CHECK(mu_hypersurface(1, 5) == 0);
}

TEST_CASE("mu_codim2 both branches") {
    CHECK(mu_codim2(2, 2, 3) == 5);   // (a-1)^n (an-a+1) = 1*5
    CHECK(mu_codim2(3, 2, 3) == 13);  // (8*2 - 1*3)/1
    CHECK(mu_codim2(1, 1, 4) == 0);
    CHECK(mu_codim2(2, 3, 3) == 13);  // symmetric
    CHECK_THROWS_AS(mu_codim2(0, 1, 3), Error);
}

TEST_CASE("rank_H examples") {
    CHECK(rank_H(2, 3).rank_H == 6);
    CHECK(rank_H(3, 3).rank_H == 21);
    CHECK(rank_H(4, 2).rank_H == 16);
    CHECK_THROWS_AS(rank_H(1, 3), Error);
}

TEST_CASE("cross identity on the full desk grid") {
    for (long d = 2; d <= 12; ++d)
        for (long n = 2; n <= 12; ++n) {
            RankReport r = rank_H(d, n);
            CHECK(r.nu == r.mu + r.mu_tilde);
            CHECK(r.rank_H == r.nu);
            if (d == 2) CHECK(r.rank_H == 2 * n);
            CHECK(r.rank_H >= 0);
        }
}

TEST_CASE("symmetry and monotonicity") {
    for (long a = 1; a <= 9; ++a)
        for (long b = 1; b <= 9; ++b)
            for (long n = 2; n <= 6; ++n) CHECK(mu_codim2(a, b, n) == mu_codim2(b, a, n));

    for (long d = 2; d <= 11; ++d)
        for (long n = 2; n <= 11; ++n) {
            CHECK(rank_H(d + 1, n).rank_H >= rank_H(d, n).rank_H);
            CHECK(rank_H(d, n + 1).rank_H >= rank_H(d, n).rank_H);
        }
}
