#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperpot/error.hpp"
#include "hyperpot/lattice.hpp"

using namespace hyperpot;

namespace {

Lattice make_lattice(std::vector<std::vector<long>> g, Symmetry s = Symmetry::symmetric) {
    std::vector<std::vector<Int>> gram;
    for (auto& row : g) {
        std::vector<Int> r;
        for (long x : row) r.emplace_back(x);
        gram.push_back(std::move(r));
    }
    return Lattice(std::move(gram), s);
}

CycleVector cv(std::initializer_list<long> xs) {
    CycleVector out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

CycleVector unit(int rank, int i) {
    CycleVector out(static_cast<std::size_t>(rank), Int(0));
    out[static_cast<std::size_t>(i)] = 1;
    return out;
}

// D4 gram in the simple-root basis (star diagram, node 1 is the center).
Lattice d4_lattice() {
    return make_lattice({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
}

GeneratorSet d4_generators() {
    Lattice L = d4_lattice();
    std::vector<CycleVector> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(unit(4, i));
    return GeneratorSet(std::move(L), std::move(gens));
}

// Brute-force oracle: all vectors with <v,v> = target inside a coordinate box.
std::vector<CycleVector> enumerate_norm_vectors(const Lattice& L, long target, long bound) {
    std::vector<CycleVector> found;
    int n = L.rank();
    CycleVector v(static_cast<std::size_t>(n), Int(0));
    std::vector<long> coords(static_cast<std::size_t>(n), -bound);
    while (true) {
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = coords[static_cast<std::size_t>(i)];
        if (L.inner(v, v) == target) found.push_back(v);
        int pos = 0;
        while (pos < n) {
            if (++coords[static_cast<std::size_t>(pos)] <= bound) break;
            coords[static_cast<std::size_t>(pos)] = -bound;
            ++pos;
        }
        if (pos == n) break;
    }
    return found;
}

// Random unimodular conjugation keeps self-pairings and orbit structure exact
// while varying the coordinates; used to generate property-test cases.
struct ConjugatedModel {
    Lattice lattice;
    std::vector<CycleVector> generators;
};

ConjugatedModel conjugate(const Lattice& base, const std::vector<CycleVector>& gens,
                          std::mt19937_64& rng) {
    int n = base.rank();
    std::vector<std::vector<Int>> u(static_cast<std::size_t>(n),
                                    std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
    for (int i = 0; i < n; ++i) u[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<long> coeff(-2, 2);
    // random elementary row operations on U (det stays +-1)
    for (int step = 0; step < 3 * n; ++step) {
        int a = pick(rng), b = pick(rng);
        if (a == b) continue;
        long c = coeff(rng);
        for (int j = 0; j < n; ++j)
            u[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] +=
                Int(c) * u[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
    }
    // gram' = U^T G U; generator' = U^-1 g  <=>  g = U generator'
    // easier: change basis by V = U: vectors transform v -> V^-1 v. To avoid
    // inverting, transform the other way: new gram = V^T G V, new generator
    // coordinates w satisfy old = V w; so pick w = adj... Instead conjugate
    // with V^-1 directly by solving V w = g over Q (entries stay integral
    // because V is unimodular).
    int rank = n;
    std::vector<std::vector<Int>> gram(static_cast<std::size_t>(rank),
                                       std::vector<Int>(static_cast<std::size_t>(rank), Int(0)));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            Int acc(0);
            for (int p = 0; p < rank; ++p)
                for (int q = 0; q < rank; ++q)
                    acc += u[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)] *
                           base.gram()[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] *
                           u[static_cast<std::size_t>(q)][static_cast<std::size_t>(j)];
            gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
        }
    // solve U w = g for each generator by rational elimination
    std::vector<CycleVector> new_gens;
    for (const CycleVector& g : gens) {
        std::vector<std::vector<Rat>> a(static_cast<std::size_t>(n),
                                        std::vector<Rat>(static_cast<std::size_t>(n) + 1, Rat(0)));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    Rat(u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] =
                Rat(g[static_cast<std::size_t>(i)]);
        }
        for (int col = 0; col < n; ++col) {
            int p = col;
            while (a[static_cast<std::size_t>(p)][static_cast<std::size_t>(col)] == 0) ++p;
            std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(col)]);
            Rat pv = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            for (int c = 0; c <= n; ++c) a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] /= pv;
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                Rat f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
                if (f == 0) continue;
                for (int c = 0; c <= n; ++c)
                    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                        f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
            }
        }
        CycleVector w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            REQUIRE(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)].get_den() == 1);
            w[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)].get_num();
        }
        new_gens.push_back(std::move(w));
    }
    return {Lattice(std::move(gram), Symmetry::symmetric), std::move(new_gens)};
}

CycleVector random_vector(int n, std::mt19937_64& rng, long lo = -4, long hi = 4) {
    std::uniform_int_distribution<long> d(lo, hi);
    CycleVector v(static_cast<std::size_t>(n));
    for (auto& c : v) c = d(rng);
    return v;
}

bool in_rational_span(const CycleVector& v, const std::vector<CycleVector>& basis) {
    if (basis.empty()) {
        for (const Int& c : v)
            if (c != 0) return false;
        return true;
    }
    std::size_t n = v.size();
    std::size_t m = basis.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(m + 1, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) a[i][j] = Rat(basis[j][i]);
        a[i][m] = Rat(v[i]);
    }
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < n; ++col) {
        std::size_t p = row;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(a[p], a[row]);
        Rat pv = a[row][col];
        for (std::size_t c = 0; c <= m; ++c) a[row][c] /= pv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row) continue;
            Rat f = a[r][col];
            if (f == 0) continue;
            for (std::size_t c = 0; c <= m; ++c) a[r][c] -= f * a[row][c];
        }
        ++row;
    }
    for (std::size_t r = row; r < n; ++r)
        if (a[r][m] != 0) return false;
    // consistent iff every leftover row with zero coefficients has zero rhs
    for (std::size_t r = 0; r < n; ++r) {
        bool all_zero = true;
        for (std::size_t c = 0; c < m; ++c)
            if (a[r][c] != 0) all_zero = false;
        if (all_zero && a[r][m] != 0) return false;
    }
    return true;
}

} // namespace

TEST_CASE("inner products") {
    CHECK(make_lattice({{2}}).inner(cv({1}), cv({1})) == 2);
    Lattice skew = make_lattice({{0, 1}, {-1, 0}}, Symmetry::skew);
    CHECK(skew.inner(cv({1, 0}), cv({0, 1})) == 1);
    Lattice d4 = d4_lattice();
    CHECK(d4.inner(unit(4, 0), unit(4, 1)) == -1);
    CHECK_THROWS_AS(d4.inner(cv({1, 0}), unit(4, 0)), Error);
}

TEST_CASE("lattice invariants validated") {
    CHECK_THROWS_AS(make_lattice({{1}}), Error);               // odd diagonal
    CHECK_THROWS_AS(make_lattice({{2, 1}, {0, 2}}), Error);    // not symmetric
    CHECK_THROWS_AS(make_lattice({{0, 1}, {1, 0}}, Symmetry::skew), Error);
}

TEST_CASE("pl_reflect basics") {
    Lattice one = make_lattice({{2}});
    CHECK(pl_reflect(one, cv({1}), cv({1})) == cv({-1}));

    Lattice two = make_lattice({{2, 0}, {0, 2}});
    CHECK(pl_reflect(two, cv({0, 3}), cv({1, 0})) == cv({0, 3})); // orthogonal fixed

    Lattice a2 = make_lattice({{2, -1}, {-1, 2}});
    CHECK(pl_reflect(a2, cv({0, 1}), cv({1, 0})) == cv({1, 1}));

    CHECK_THROWS_AS(pl_reflect(two, cv({1, 0}), cv({1, 1})), Error); // <k,k> = 4
}

TEST_CASE("pl_transvect basics") {
    Lattice skew = make_lattice({{0, 1}, {-1, 0}}, Symmetry::skew);
    CHECK(pl_transvect(skew, cv({0, 1}), cv({0, 1}), 1) == cv({0, 1})); // <k,k>=0
    CycleVector moved = pl_transvect(skew, cv({1, 0}), cv({0, 1}), 1);
    CHECK(moved == cv({1, 1}));
    CHECK(pl_transvect(skew, moved, cv({0, 1}), 1) == cv({1, 2})); // infinite order
    Lattice sym = make_lattice({{2}});
    CHECK_THROWS_AS(pl_transvect(sym, cv({1}), cv({1}), 1), Error);
}

TEST_CASE("orbit: single reflection and D4 root orbit") {
    Lattice one = make_lattice({{2}});
    GeneratorSet g(one, {cv({1})});
    OrbitReport r = orbit(g, cv({1}), 100, 100);
    CHECK(r.status == OrbitStatus::closed);
    CHECK(r.vectors.size() == 2);

    GeneratorSet d4 = d4_generators();
    OrbitReport roots = orbit(d4, unit(4, 0), 1000, 100);
    CHECK(roots.status == OrbitStatus::closed);
    CHECK(roots.vectors.size() == 24);

    // brute-force Weyl orbit oracle: the D4 roots are exactly the norm-2
    // vectors, and the orbit must coincide with that set
    auto all_roots = enumerate_norm_vectors(d4.lattice, 2, 3);
    CHECK(all_roots.size() == 24);
    for (const CycleVector& v : roots.vectors)
        CHECK(std::find(all_roots.begin(), all_roots.end(), v) != all_roots.end());
}

TEST_CASE("orbit: skew transvection grows linearly and truncates") {
    Lattice skew = make_lattice({{0, 1}, {-1, 0}}, Symmetry::skew);
    GeneratorSet g(skew, {cv({0, 1})});
    OrbitReport r = orbit(g, cv({1, 0}), 1000, 10);
    CHECK(r.status == OrbitStatus::truncated);
    // depth d adds the two new vectors e1 +- d e2
    CHECK(r.depth_profile.size() == 10);
    for (std::size_t i = 0; i + 1 < r.depth_profile.size(); ++i)
        CHECK(r.depth_profile[i + 1] - r.depth_profile[i] == 2);
    CHECK_THROWS_AS(orbit(g, cv({1, 0}), 0, 10), Error);
}

TEST_CASE("value_spectrum") {
    Lattice one = make_lattice({{2}});
    GeneratorSet g(one, {cv({1})});
    OrbitReport r = orbit(g, cv({1}), 10, 10);
    LinearForm zero{{Rat(0)}};
    CHECK(value_spectrum(zero, r) == std::set<Rat>{Rat(0)});
    LinearForm e1{{Rat(1)}};
    CHECK(value_spectrum(e1, r) == std::set<Rat>{Rat(-1), Rat(1)});

    Lattice skew = make_lattice({{0, 1}, {-1, 0}}, Symmetry::skew);
    GeneratorSet sg(skew, {cv({0, 1})});
    OrbitReport tr = orbit(sg, cv({1, 0}), 1000, 5);
    CHECK_THROWS_AS(value_spectrum(e1, tr), Error);
    CHECK(value_spectrum(LinearForm{{Rat(0), Rat(1)}}, tr, true).size() == 11);
}

TEST_CASE("form_kernel") {
    CHECK(form_kernel(make_lattice({{2, -1}, {-1, 2}})).empty());

    auto k = form_kernel(make_lattice({{2, 0}, {0, 0}}));
    REQUIRE(k.size() == 1);
    CHECK((k[0] == cv({0, 1}) || k[0] == cv({0, -1})));

    // D~4: kernel spanned by the imaginary root (1,1,2,1,1)
    GeneratorSet dt = build_D_tilde(4);
    auto kernel = form_kernel(dt.lattice);
    REQUIRE(kernel.size() == 1);
    CycleVector delta = cv({1, 1, 2, 1, 1});
    CHECK((kernel[0] == delta || kernel[0] == cv({-1, -1, -2, -1, -1})));
}

TEST_CASE("quotient_lattice") {
    Lattice nd = make_lattice({{2, -1}, {-1, 2}});
    QuotientLattice q0 = quotient_lattice(nd, {});
    CHECK(q0.lattice().gram() == nd.gram());
    CHECK(q0.project(cv({3, -2})) == cv({3, -2}));

    // D~4 / delta: determinant 4 and 24 roots, i.e. D4 up to base change
    GeneratorSet dt = build_D_tilde(4);
    auto kernel = form_kernel(dt.lattice);
    QuotientLattice q = quotient_lattice(dt.lattice, kernel);
    CHECK(q.lattice().rank() == 4);
    CHECK(gram_determinant(q.lattice()) == 4);
    CHECK(enumerate_norm_vectors(q.lattice(), 2, 4).size() == 24);

    // zero form -> rank 0 quotient
    Lattice zero = make_lattice({{0, 0}, {0, 0}});
    QuotientLattice qz = quotient_lattice(zero, form_kernel(zero));
    CHECK(qz.lattice().rank() == 0);

    CHECK_THROWS_AS(quotient_lattice(nd, {cv({1, 0})}), Error); // not kernel
}

TEST_CASE("fixed_vectors") {
    Lattice two = make_lattice({{2, 0}, {0, 2}});
    GeneratorSet both(two, {cv({1, 0}), cv({0, 1})});
    CHECK(fixed_vectors(both).empty());

    GeneratorSet onegen(two, {cv({1, 0})});
    auto fv = fixed_vectors(onegen);
    REQUIRE(fv.size() == 1);
    CHECK((fv[0] == cv({0, 1}) || fv[0] == cv({0, -1})));

    // model hyperbolic lattice: fixing by second-kind generators keeps the
    // reduced class direction
    ModelHyperbolic model = build_model_hyperbolic(2, 5, 1);
    auto second = model.generators.generators_of_kind(GeneratorKind::second);
    GeneratorSet second_only(model.generators.lattice, second);
    auto fixed = fixed_vectors(second_only);
    CHECK(fixed.size() == 2);
    CHECK(in_rational_span(model.arnold_class, fixed));
}

TEST_CASE("build_D_tilde") {
    GeneratorSet dt4 = build_D_tilde(4);
    CHECK(dt4.lattice.rank() == 5);
    CHECK(form_kernel(dt4.lattice).size() == 1);
    CHECK(gram_determinant(dt4.lattice) == 0);

    GeneratorSet padded = build_D_tilde(4, 2);
    CHECK(padded.lattice.rank() == 7);
    CHECK(form_kernel(padded.lattice).size() == 3);

    GeneratorSet dt3 = build_D_tilde(3); // the A~3 square
    CHECK(dt3.lattice.rank() == 4);
    CHECK(form_kernel(dt3.lattice).size() == 1);

    CHECK_THROWS_AS(build_D_tilde(2), Error);
}

TEST_CASE("build_model_hyperbolic") {
    for (int sign : {1, -1}) {
        ModelHyperbolic m = build_model_hyperbolic(3, 5, sign);
        CHECK(m.generators.lattice.inner(m.arnold_class, m.arnold_class) == Int(6 * sign));
    }
    ModelHyperbolic one = build_model_hyperbolic(1, 1, -1);
    CHECK(one.generators.lattice.inner(one.arnold_class, one.arnold_class) == -2);
    CHECK_THROWS_AS(build_model_hyperbolic(0, 3, 1), Error);
    CHECK_THROWS_AS(build_model_hyperbolic(4, 3, 1), Error);
}

TEST_CASE("plane curve model orbit sizes and spectra") {
    auto binom = [](int n, int k) {
        long acc = 1;
        for (int i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
        return static_cast<std::size_t>(acc);
    };

    PlaneCurveModel ex = build_plane_curve_model(2, 0, 1);
    CHECK(ex.orbit_size() == 4);
    std::vector<Rat> wa, wb;
    plane_curve_standard_weights(2, wa, wb);
    CHECK(plane_curve_spectrum(ex, wa, wb).size() == 4);

    PlaneCurveModel newton = build_plane_curve_model(4, 2, 2);
    CHECK(newton.orbit_size() == 1);

    CHECK(build_plane_curve_model(3, 0, 1).orbit_size() == 9);

    for (int d = 2; d <= 6; ++d)
        for (int eta = 0; 2 * eta <= d; ++eta)
            for (int k = 1; k <= d - eta; ++k) {
                std::size_t expect = binom(d - eta, k);
                CHECK(build_plane_curve_model(d, eta, k).orbit_size() == expect * expect);
            }

    CHECK_THROWS_AS(build_plane_curve_model(4, 3, 1), Error);
    CHECK_THROWS_AS(build_plane_curve_model(4, 0, 5), Error);
}

TEST_CASE("probe_completely_infinite") {
    // elliptic case: quotient of D~4 closes, any form is finite-valued
    GeneratorSet dt = build_D_tilde(4);
    auto kernel = form_kernel(dt.lattice);
    QuotientLattice q = quotient_lattice(dt.lattice, kernel);
    std::vector<CycleVector> qgens;
    for (const CycleVector& g : dt.generators) qgens.push_back(q.project(g));
    GeneratorSet quotient_gens(q.lattice(), qgens);
    LinearForm form{{Rat(1), Rat(0), Rat(0), Rat(0)}};
    GrowthReport fin = probe_completely_infinite(quotient_gens, q.project(unit(5, 1)), form,
                                                 {4, 8, 16, 32});
    CHECK(fin.verdict == GrowthReport::Verdict::finite);

    // hyperbolic-signature counterexample: strictly increasing value counts
    Lattice hyp = make_lattice({{2, -3}, {-3, 2}});
    GeneratorSet hgens(hyp, {cv({1, 0}), cv({0, 1})});
    GrowthReport grow = probe_completely_infinite(hgens, cv({1, 0}), LinearForm{{Rat(1), Rat(0)}},
                                                  {4, 8, 16, 32});
    CHECK(grow.verdict == GrowthReport::Verdict::growth_consistent_with_infinite);
    for (std::size_t i = 1; i < grow.value_counts.size(); ++i)
        CHECK(grow.value_counts[i] > grow.value_counts[i - 1]);

    // orthogonal start violates the probe hypothesis
    Lattice two = make_lattice({{2, 0}, {0, 2}});
    GeneratorSet og(two, {cv({1, 0})});
    CHECK_THROWS_AS(probe_completely_infinite(og, cv({0, 1}), LinearForm{{Rat(1), Rat(0)}}, {2, 4}),
                    Error);
}

TEST_CASE("d=2 rank bookkeeping reports both published counts") {
    for (long n : {3L, 5L, 7L}) {
        QuadricRankComparison cmp = d2_rank_comparison(n);
        CHECK(cmp.lattice_rank == (n + 2) + (n - 1));
        CHECK(cmp.kernel_rank == 1 + (n - 1));
        CHECK(cmp.quotient_rank == n + 1);
        CHECK(cmp.milnor_rank == 2 * n);
        CHECK(cmp.lattice_rank == cmp.milnor_rank + 1); // the documented off-by-one
    }
    QuadricRankComparison even = d2_rank_comparison(4);
    CHECK(even.lattice_rank == 6);
    CHECK(even.kernel_rank == 1);
}

TEST_CASE("property: reflection involutivity (random conjugated models)") {
    std::mt19937_64 rng(101);
    GeneratorSet d4 = d4_generators();
    for (int iter = 0; iter < 400; ++iter) {
        ConjugatedModel m = conjugate(d4.lattice, d4.generators, rng);
        CycleVector v = random_vector(4, rng);
        for (const CycleVector& k : m.generators) {
            CycleVector twice = pl_reflect(m.lattice, pl_reflect(m.lattice, v, k), k);
            CHECK(twice == v);
        }
    }
}

TEST_CASE("property: reflections and transvections preserve the form") {
    std::mt19937_64 rng(103);
    GeneratorSet d4 = d4_generators();
    for (int iter = 0; iter < 300; ++iter) {
        ConjugatedModel m = conjugate(d4.lattice, d4.generators, rng);
        CycleVector u = random_vector(4, rng);
        CycleVector v = random_vector(4, rng);
        for (const CycleVector& k : m.generators) {
            CHECK(m.lattice.inner(pl_reflect(m.lattice, u, k), pl_reflect(m.lattice, v, k)) ==
                  m.lattice.inner(u, v));
        }
    }
    Lattice skew = make_lattice({{0, 2}, {-2, 0}}, Symmetry::skew);
    for (int iter = 0; iter < 300; ++iter) {
        CycleVector u = random_vector(2, rng);
        CycleVector v = random_vector(2, rng);
        CycleVector k = random_vector(2, rng);
        CHECK(skew.inner(pl_transvect(skew, u, k, 1), pl_transvect(skew, v, k, 1)) ==
              skew.inner(u, v));
    }
}

TEST_CASE("property: evenness of self-pairing on orbits") {
    std::mt19937_64 rng(107);
    GeneratorSet d4 = d4_generators();
    for (int iter = 0; iter < 50; ++iter) {
        ConjugatedModel m = conjugate(d4.lattice, d4.generators, rng);
        GeneratorSet gens(m.lattice, m.generators);
        OrbitReport r = orbit(gens, random_vector(4, rng, -2, 2), 200, 6);
        for (const CycleVector& v : r.vectors) CHECK(m.lattice.inner(v, v) % 2 == 0);
    }
}

TEST_CASE("property: orbits stay in an affine hyperplane parallel to the span") {
    std::mt19937_64 rng(109);
    GeneratorSet d4 = d4_generators();
    for (int iter = 0; iter < 50; ++iter) {
        ConjugatedModel m = conjugate(d4.lattice, d4.generators, rng);
        // drop one generator so the span is proper
        std::vector<CycleVector> sub(m.generators.begin(), m.generators.end() - 1);
        GeneratorSet gens(m.lattice, sub);
        CycleVector start = random_vector(4, rng, -2, 2);
        OrbitReport r = orbit(gens, start, 300, 6);
        for (const CycleVector& v : r.vectors) {
            CycleVector diff(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) diff[i] = v[i] - start[i];
            CHECK(in_rational_span(diff, sub));
        }
    }
}

TEST_CASE("property: kernel vectors are fixed and spectra drop to the quotient") {
    std::mt19937_64 rng(113);
    std::uniform_int_distribution<long> cd(-3, 3);
    GeneratorSet dt = build_D_tilde(4);
    auto kernel = form_kernel(dt.lattice);
    QuotientLattice q = quotient_lattice(dt.lattice, kernel);

    for (int iter = 0; iter < 50; ++iter) {
        // reflections fix the kernel pointwise
        for (const CycleVector& k : kernel)
            for (const CycleVector& g : dt.generators)
                CHECK(pl_reflect(dt.lattice, k, g) == k);

        // a form <w, .> automatically vanishes on the kernel
        CycleVector w = random_vector(5, rng, -3, 3);
        LinearForm form;
        for (int i = 0; i < 5; ++i) form.coeffs.push_back(Rat(dt.lattice.inner(w, unit(5, i))));
        if (form.is_zero()) continue;

        CycleVector start = random_vector(5, rng, -2, 2);
        OrbitReport r = orbit(dt, start, 4000, 5);
        auto spec = value_spectrum(form, r, true);

        LinearForm qform = q.project_form(form);
        std::set<Rat> qspec;
        for (const CycleVector& v : r.vectors) qspec.insert(qform.value(q.project(v)));
        CHECK(spec == qspec);
    }
}
