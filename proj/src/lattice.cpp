#include "hyperpot/lattice.hpp"

#include <algorithm>
#include <map>

#include "hyperpot/error.hpp"
#include "hyperpot/milnor.hpp"

namespace hyperpot {

namespace {

void check_arity(const Lattice& L, const CycleVector& v, const char* what) {
    if (static_cast<int>(v.size()) != L.rank())
        raise("dimension-mismatch", std::string(what) + ": vector length does not match lattice rank");
}

// Bring the columns of `m` (rows x cols) to echelon form by unimodular column
// operations; returns the transform U (cols x cols) with m*U = echelon, plus
// the echelon matrix itself. Columns of U over zero echelon columns form a
// saturated basis of the integer kernel.
struct ColumnEchelon {
    std::vector<std::vector<Int>> echelon; // rows x cols
    std::vector<std::vector<Int>> U;       // cols x cols
    std::vector<int> zero_columns;
};

ColumnEchelon column_echelon(std::vector<std::vector<Int>> m, int rows, int cols) {
    std::vector<std::vector<Int>> U(static_cast<std::size_t>(cols),
                                    std::vector<Int>(static_cast<std::size_t>(cols), Int(0)));
    for (int i = 0; i < cols; ++i) U[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;

    auto col_addmul = [&](int dst, int src, const Int& factor) {
        for (int r = 0; r < rows; ++r)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(dst)] +=
                factor * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(src)];
        for (int r = 0; r < cols; ++r)
            U[static_cast<std::size_t>(r)][static_cast<std::size_t>(dst)] +=
                factor * U[static_cast<std::size_t>(r)][static_cast<std::size_t>(src)];
    };
    auto col_swap = [&](int a, int b) {
        for (int r = 0; r < rows; ++r)
            std::swap(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)],
                      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(b)]);
        for (int r = 0; r < cols; ++r)
            std::swap(U[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)],
                      U[static_cast<std::size_t>(r)][static_cast<std::size_t>(b)]);
    };

    int lead = 0;
    for (int row = 0; row < rows && lead < cols; ++row) {
        // euclidean elimination across columns lead..cols-1 in this row
        while (true) {
            int pivot = -1;
            for (int c = lead; c < cols; ++c)
                if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] != 0) {
                    if (pivot < 0 ||
                        abs(m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)]) <
                            abs(m[static_cast<std::size_t>(row)][static_cast<std::size_t>(pivot)]))
                        pivot = c;
                }
            if (pivot < 0) break; // row is zero from lead on
            if (pivot != lead) col_swap(pivot, lead);
            const Int& p = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(lead)];
            bool reduced_all = true;
            for (int c = lead + 1; c < cols; ++c) {
                const Int& a = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
                if (a == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
                col_addmul(c, lead, -q);
                if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] != 0)
                    reduced_all = false;
            }
            if (reduced_all) {
                ++lead;
                break;
            }
        }
    }

    ColumnEchelon out;
    out.U = std::move(U);
    for (int c = 0; c < cols; ++c) {
        bool zero = true;
        for (int r = 0; r < rows; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) zero = false;
        if (zero) out.zero_columns.push_back(c);
    }
    out.echelon = std::move(m);
    return out;
}

std::vector<CycleVector> integer_kernel(const std::vector<std::vector<Int>>& m, int rows,
                                        int cols) {
    ColumnEchelon ce = column_echelon(m, rows, cols);
    std::vector<CycleVector> basis;
    for (int c : ce.zero_columns) {
        CycleVector v(static_cast<std::size_t>(cols));
        for (int r = 0; r < cols; ++r)
            v[static_cast<std::size_t>(r)] = ce.U[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

Lattice::Lattice(std::vector<std::vector<Int>> gram, Symmetry symmetry)
    : rank_(static_cast<int>(gram.size())), symmetry_(symmetry), gram_(std::move(gram)) {
    // rank 0 is allowed so that quotients by the full lattice stay representable
    for (const auto& row : gram_)
        if (static_cast<int>(row.size()) != rank_)
            raise("bad-parameters", "gram matrix must be square");
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) {
            const Int& a = gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const Int& b = gram_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (symmetry_ == Symmetry::symmetric && a != b)
                raise("bad-parameters", "gram matrix is not symmetric");
            if (symmetry_ == Symmetry::skew && a != -b)
                raise("bad-parameters", "gram matrix is not skew-symmetric");
        }
    if (symmetry_ == Symmetry::symmetric)
        for (int i = 0; i < rank_; ++i)
            if (gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] % 2 != 0)
                raise("bad-parameters", "symmetric lattice must be even (diagonal in 2Z)");
}

Int Lattice::inner(const CycleVector& u, const CycleVector& v) const {
    check_arity(*this, u, "inner");
    check_arity(*this, v, "inner");
    Int acc(0);
    for (int i = 0; i < rank_; ++i) {
        if (u[static_cast<std::size_t>(i)] == 0) continue;
        Int row(0);
        for (int j = 0; j < rank_; ++j)
            row += gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                   v[static_cast<std::size_t>(j)];
        acc += u[static_cast<std::size_t>(i)] * row;
    }
    return acc;
}

Rat LinearForm::value(const CycleVector& v) const {
    if (coeffs.size() != v.size())
        raise("dimension-mismatch", "linear form arity does not match vector");
    Rat acc(0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * Rat(v[i]);
    return acc;
}

bool LinearForm::is_zero() const {
    for (const Rat& c : coeffs)
        if (c != 0) return false;
    return true;
}

CycleVector pl_reflect(const Lattice& L, const CycleVector& v, const CycleVector& kappa) {
    if (L.symmetry() != Symmetry::symmetric)
        raise("symmetric-required", "reflection requires symmetric lattice");
    check_arity(L, v, "pl_reflect");
    check_arity(L, kappa, "pl_reflect");
    Int kk = L.inner(kappa, kappa);
    if (kk != 2 && kk != -2)
        raise("self-pairing", "reflection cycle must have self-pairing +-2");
    Int vk = L.inner(v, kappa);
    // 2<v,k>/<k,k> = <v,k> * sign(<k,k>)
    Int coeff = (kk == 2) ? vk : -vk;
    CycleVector out = v;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= coeff * kappa[i];
    return out;
}

CycleVector pl_transvect(const Lattice& L, const CycleVector& v, const CycleVector& kappa,
                         int sign) {
    if (L.symmetry() != Symmetry::skew)
        raise("skew-required", "transvection requires skew lattice");
    if (sign != 1 && sign != -1) raise("bad-parameters", "transvection sign must be +-1");
    check_arity(L, v, "pl_transvect");
    check_arity(L, kappa, "pl_transvect");
    Int vk = L.inner(v, kappa);
    CycleVector out = v;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += Int(sign) * vk * kappa[i];
    return out;
}

GeneratorSet::GeneratorSet(Lattice lat, std::vector<CycleVector> gens,
                           std::vector<GeneratorKind> kindtags)
    : lattice(std::move(lat)), generators(std::move(gens)), kinds(std::move(kindtags)) {
    if (generators.empty()) raise("bad-parameters", "generator set must be nonempty");
    if (kinds.empty()) kinds.assign(generators.size(), GeneratorKind::second);
    if (kinds.size() != generators.size())
        raise("bad-parameters", "kind tags must match generator count");
    for (const CycleVector& g : generators) {
        check_arity(lattice, g, "generator");
        if (lattice.symmetry() == Symmetry::symmetric) {
            Int gg = lattice.inner(g, g);
            if (gg != 2 && gg != -2)
                raise("self-pairing", "generators must have self-pairing +-2");
        }
    }
}

std::vector<CycleVector> GeneratorSet::generators_of_kind(GeneratorKind kind) const {
    std::vector<CycleVector> out;
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (kinds[i] == kind) out.push_back(generators[i]);
    return out;
}

namespace {

// Shared BFS driver. Visits new vectors in deterministic order: depth by
// depth, frontier order, then generator index (skew generators contribute
// both transvection signs). on_new is called for every vector including the
// start; returning false stops expansion of further depths.
template <typename OnNew, typename OnDepth>
OrbitStatus orbit_bfs(const GeneratorSet& gens, const CycleVector& start, std::size_t max_size,
                      std::size_t max_depth, OnNew&& on_new, OnDepth&& on_depth) {
    const Lattice& L = gens.lattice;
    std::map<CycleVector, std::size_t> seen;
    std::vector<CycleVector> order;
    seen.emplace(start, 0);
    order.push_back(start);
    on_new(start);

    std::vector<std::size_t> frontier{0};
    for (std::size_t depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
        std::vector<std::size_t> next;
        for (std::size_t idx : frontier) {
            CycleVector current = order[idx];
            for (std::size_t g = 0; g < gens.generators.size(); ++g) {
                const CycleVector& kappa = gens.generators[g];
                for (int pass = 0; pass < (L.symmetry() == Symmetry::skew ? 2 : 1); ++pass) {
                    CycleVector image =
                        L.symmetry() == Symmetry::symmetric
                            ? pl_reflect(L, current, kappa)
                            : pl_transvect(L, current, kappa, pass == 0 ? 1 : -1);
                    auto [it, inserted] = seen.emplace(image, order.size());
                    if (inserted) {
                        if (order.size() >= max_size) return OrbitStatus::truncated;
                        order.push_back(std::move(image));
                        next.push_back(order.size() - 1);
                        on_new(order.back());
                    }
                }
            }
        }
        if (!on_depth(depth, order.size(), next.empty())) return OrbitStatus::truncated;
        if (next.empty()) return OrbitStatus::closed;
        frontier = std::move(next);
    }
    return frontier.empty() ? OrbitStatus::closed : OrbitStatus::truncated;
}

} // namespace

OrbitReport orbit(const GeneratorSet& gens, const CycleVector& start, std::size_t max_size,
                  std::size_t max_depth) {
    if (max_size == 0 || max_depth == 0) raise("bad-parameters", "orbit limits must be positive");
    check_arity(gens.lattice, start, "orbit start");
    OrbitReport report;
    report.status = orbit_bfs(
        gens, start, max_size, max_depth,
        [&](const CycleVector& v) { report.vectors.push_back(v); },
        [&](std::size_t, std::size_t size, bool) {
            report.depth_profile.push_back(size);
            return true;
        });
    return report;
}

std::set<Rat> value_spectrum(const LinearForm& form, const OrbitReport& report,
                             bool allow_truncated) {
    if (report.status == OrbitStatus::truncated && !allow_truncated)
        raise("orbit-truncated", "value spectrum of a truncated orbit needs an explicit override");
    std::set<Rat> values;
    for (const CycleVector& v : report.vectors) values.insert(form.value(v));
    return values;
}

std::vector<CycleVector> form_kernel(const Lattice& L) {
    return integer_kernel(L.gram(), L.rank(), L.rank());
}

Int gram_determinant(const Lattice& L) {
    int n = L.rank();
    if (n == 0) return Int(1);
    std::vector<std::vector<Int>> a = L.gram();
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return Int(0);
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                              a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                              a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                Int q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = q;
            }
        prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    Int det = a[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(n) - 1];
    return sign > 0 ? det : -det;
}

QuotientLattice quotient_lattice(const Lattice& L, const std::vector<CycleVector>& kernel) {
    for (const CycleVector& k : kernel) {
        check_arity(L, k, "kernel vector");
        for (int r = 0; r < L.rank(); ++r) {
            Int acc(0);
            for (int c = 0; c < L.rank(); ++c)
                acc += L.gram()[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
                       k[static_cast<std::size_t>(c)];
            if (acc != 0) raise("bad-kernel", "vector passed as kernel is not annihilated by the form");
        }
    }

    if (kernel.empty()) {
        std::vector<std::vector<Int>> identity(static_cast<std::size_t>(L.rank()),
                                               std::vector<Int>(static_cast<std::size_t>(L.rank()), Int(0)));
        for (int i = 0; i < L.rank(); ++i)
            identity[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        return QuotientLattice(L, std::move(identity), {}, L.rank());
    }

    ColumnEchelon ce = column_echelon(L.gram(), L.rank(), L.rank());
    if (kernel.size() != ce.zero_columns.size())
        raise("bad-kernel", "kernel basis size does not match the form corank");

    std::vector<int> complement;
    for (int c = 0; c < L.rank(); ++c)
        if (std::find(ce.zero_columns.begin(), ce.zero_columns.end(), c) == ce.zero_columns.end())
            complement.push_back(c);

    // complement basis vectors (columns of U)
    std::vector<CycleVector> basis;
    for (int c : complement) {
        CycleVector v(static_cast<std::size_t>(L.rank()));
        for (int r = 0; r < L.rank(); ++r)
            v[static_cast<std::size_t>(r)] =
                ce.U[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        basis.push_back(std::move(v));
    }

    int qrank = static_cast<int>(basis.size());
    std::vector<std::vector<Int>> qgram(static_cast<std::size_t>(qrank),
                                        std::vector<Int>(static_cast<std::size_t>(qrank)));
    for (int i = 0; i < qrank; ++i)
        for (int j = 0; j < qrank; ++j)
            qgram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                L.inner(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);

    // projection: invert U exactly (det +-1), keep complement rows of U^-1
    int n = L.rank();
    std::vector<std::vector<Rat>> aug(static_cast<std::size_t>(n),
                                      std::vector<Rat>(static_cast<std::size_t>(2 * n), Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                Rat(ce.U[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) raise("internal", "unimodular transform is singular");
        std::swap(aug[static_cast<std::size_t>(pivot)], aug[static_cast<std::size_t>(col)]);
        Rat p = aug[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int c = 0; c < 2 * n; ++c) aug[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Rat f = aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int c = 0; c < 2 * n; ++c)
                aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * aug[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
        }
    }
    std::vector<std::vector<Int>> proj;
    for (int c : complement) {
        std::vector<Int> row(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            Rat entry = aug[static_cast<std::size_t>(c)][static_cast<std::size_t>(n + j)];
            if (entry.get_den() != 1) raise("internal", "unimodular inverse is not integral");
            row[static_cast<std::size_t>(j)] = entry.get_num();
        }
        proj.push_back(std::move(row));
    }

    return QuotientLattice(Lattice(std::move(qgram), Symmetry::symmetric), std::move(proj),
                           kernel, L.rank());
}

CycleVector QuotientLattice::project(const CycleVector& v) const {
    if (static_cast<int>(v.size()) != source_rank_)
        raise("dimension-mismatch", "projection input has wrong rank");
    CycleVector out(proj_rows_.size());
    for (std::size_t r = 0; r < proj_rows_.size(); ++r) {
        Int acc(0);
        for (std::size_t c = 0; c < v.size(); ++c) acc += proj_rows_[r][c] * v[c];
        out[r] = acc;
    }
    return out;
}

LinearForm QuotientLattice::project_form(const LinearForm& form) const {
    for (const CycleVector& k : kernel_)
        if (form.value(k) != 0)
            raise("form-not-reducible", "form does not vanish on the kernel");
    // Induced coefficient i = form evaluated on any preimage of the i-th
    // quotient basis vector; vanishing on the kernel makes the choice
    // irrelevant. Preimages come from row reduction of [proj | I].
    std::size_t q = proj_rows_.size();
    std::size_t n = static_cast<std::size_t>(source_rank_);
    LinearForm induced;
    induced.coeffs.assign(q, Rat(0));
    std::vector<std::vector<Rat>> a(q, std::vector<Rat>(n + q, Rat(0)));
    for (std::size_t r = 0; r < q; ++r) {
        for (std::size_t c = 0; c < n; ++c) a[r][c] = Rat(proj_rows_[r][c]);
        a[r][n + r] = 1;
    }
    std::vector<int> pivot_col(q, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < q; ++col) {
        std::size_t p = row;
        while (p < q && a[p][col] == 0) ++p;
        if (p == q) continue;
        std::swap(a[p], a[row]);
        Rat pv = a[row][col];
        for (std::size_t c = 0; c < n + q; ++c) a[row][c] /= pv;
        for (std::size_t r = 0; r < q; ++r) {
            if (r == row) continue;
            Rat f = a[r][col];
            if (f == 0) continue;
            for (std::size_t c = 0; c < n + q; ++c) a[r][c] -= f * a[row][c];
        }
        pivot_col[row] = static_cast<int>(col);
        ++row;
    }
    if (row != q) raise("internal", "projection matrix is not surjective");
    for (std::size_t i = 0; i < q; ++i) {
        std::vector<Rat> preimage(n, Rat(0));
        for (std::size_t r = 0; r < q; ++r)
            preimage[static_cast<std::size_t>(pivot_col[r])] = a[r][n + i];
        Rat acc(0);
        for (std::size_t c = 0; c < n; ++c) acc += form.coeffs[c] * preimage[c];
        induced.coeffs[i] = acc;
    }
    return induced;
}

std::vector<CycleVector> fixed_vectors(const GeneratorSet& gens) {
    const Lattice& L = gens.lattice;
    if (L.symmetry() != Symmetry::symmetric)
        raise("symmetric-required", "fixed vectors are defined for symmetric lattices");
    int n = L.rank();
    int m = static_cast<int>(gens.generators.size());
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(m),
                                       std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
    for (int g = 0; g < m; ++g)
        for (int c = 0; c < n; ++c) {
            Int acc(0);
            for (int j = 0; j < n; ++j)
                acc += L.gram()[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)] *
                       gens.generators[static_cast<std::size_t>(g)][static_cast<std::size_t>(j)];
            rows[static_cast<std::size_t>(g)][static_cast<std::size_t>(c)] = acc;
        }
    return integer_kernel(rows, m, n);
}

GeneratorSet build_D_tilde(int m, int zero_summand_rank) {
    if (m < 3) raise("bad-parameters", "extended root system D~m needs m >= 3");
    if (zero_summand_rank < 0) raise("bad-parameters", "zero summand rank must be nonnegative");
    // simple roots of D_m in R^m plus alpha_0 = -theta, theta = e_1 + e_2
    std::vector<std::vector<long>> roots;
    std::vector<long> alpha0(static_cast<std::size_t>(m), 0);
    alpha0[0] = -1;
    alpha0[1] = -1;
    roots.push_back(alpha0);
    for (int i = 0; i + 1 < m; ++i) {
        std::vector<long> r(static_cast<std::size_t>(m), 0);
        r[static_cast<std::size_t>(i)] = 1;
        r[static_cast<std::size_t>(i) + 1] = -1;
        roots.push_back(r);
    }
    std::vector<long> last(static_cast<std::size_t>(m), 0);
    last[static_cast<std::size_t>(m) - 2] = 1;
    last[static_cast<std::size_t>(m) - 1] = 1;
    roots.push_back(last);

    int total = m + 1 + zero_summand_rank;
    std::vector<std::vector<Int>> gram(static_cast<std::size_t>(total),
                                       std::vector<Int>(static_cast<std::size_t>(total), Int(0)));
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j) {
            long dot = 0;
            for (int c = 0; c < m; ++c)
                dot += roots[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] *
                       roots[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
            gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = dot;
        }

    std::vector<CycleVector> gens;
    for (int i = 0; i <= m; ++i) {
        CycleVector v(static_cast<std::size_t>(total), Int(0));
        v[static_cast<std::size_t>(i)] = 1;
        gens.push_back(std::move(v));
    }
    return GeneratorSet(Lattice(std::move(gram), Symmetry::symmetric), std::move(gens));
}

ModelHyperbolic build_model_hyperbolic(int k, int total, int parity_sign) {
    if (k < 1 || k > total)
        raise("bad-parameters", "model hyperbolic lattice needs 1 <= k <= total");
    if (parity_sign != 1 && parity_sign != -1)
        raise("bad-parameters", "parity sign must be +-1");
    std::vector<std::vector<Int>> gram(static_cast<std::size_t>(total),
                                       std::vector<Int>(static_cast<std::size_t>(total), Int(0)));
    for (int i = 0; i < total; ++i)
        gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2 * parity_sign;
    std::vector<CycleVector> gens;
    std::vector<GeneratorKind> kinds;
    for (int i = 0; i < total; ++i) {
        CycleVector v(static_cast<std::size_t>(total), Int(0));
        v[static_cast<std::size_t>(i)] = 1;
        gens.push_back(std::move(v));
        kinds.push_back(i < k ? GeneratorKind::first : GeneratorKind::second);
    }
    CycleVector arnold(static_cast<std::size_t>(total), Int(0));
    for (int i = 0; i < k; ++i) arnold[static_cast<std::size_t>(i)] = 1;
    ModelHyperbolic model{GeneratorSet(Lattice(std::move(gram), Symmetry::symmetric),
                                       std::move(gens), std::move(kinds)),
                          std::move(arnold)};
    return model;
}

PlaneCurveModel build_plane_curve_model(int d, int eta, int k) {
    if (eta < 0 || 2 * eta > d)
        raise("bad-parameters", "eta must satisfy 0 <= 2*eta <= d");
    int m = d - eta;
    if (k < 1 || k > m) raise("bad-parameters", "k must satisfy 1 <= k <= d - eta");
    if (m > 30) raise("bad-parameters", "plane curve model limited to d - eta <= 30");

    PlaneCurveModel model;
    model.d = d;
    model.eta = eta;
    model.k = k;

    std::uint32_t initial = (k == 32) ? ~0u : ((1u << k) - 1u);
    std::pair<std::uint32_t, std::uint32_t> start{initial, initial};
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> seen;
    seen.emplace(start, 0);
    model.states.push_back(start);

    auto apply_swap = [m](std::uint32_t mask, int i) {
        // transpose circles i, i+1 (0-based)
        (void)m;
        std::uint32_t bi = (mask >> i) & 1u;
        std::uint32_t bj = (mask >> (i + 1)) & 1u;
        if (bi == bj) return mask;
        return mask ^ ((1u << i) | (1u << (i + 1)));
    };

    std::size_t head = 0;
    while (head < model.states.size()) {
        auto [a, b] = model.states[head++];
        for (int i = 0; i + 1 < m; ++i) {
            std::pair<std::uint32_t, std::uint32_t> na{apply_swap(a, i), b};
            if (seen.emplace(na, model.states.size()).second) model.states.push_back(na);
            std::pair<std::uint32_t, std::uint32_t> nb{a, apply_swap(b, i)};
            if (seen.emplace(nb, model.states.size()).second) model.states.push_back(nb);
        }
    }
    return model;
}

std::set<Rat> plane_curve_spectrum(const PlaneCurveModel& model, const std::vector<Rat>& wa,
                                   const std::vector<Rat>& wb) {
    int m = model.d - model.eta;
    if (static_cast<int>(wa.size()) != m || static_cast<int>(wb.size()) != m)
        raise("dimension-mismatch", "weight vectors must have length d - eta");
    std::set<Rat> values;
    for (const auto& [a, b] : model.states) {
        Rat acc(0);
        for (int i = 0; i < m; ++i) {
            if ((a >> i) & 1u) acc += wa[static_cast<std::size_t>(i)];
            if ((b >> i) & 1u) acc += wb[static_cast<std::size_t>(i)];
        }
        values.insert(acc);
    }
    return values;
}

void plane_curve_standard_weights(int circle_count, std::vector<Rat>& wa, std::vector<Rat>& wb) {
    wa.clear();
    wb.clear();
    Int p(1);
    for (int i = 0; i < circle_count; ++i) {
        wa.emplace_back(p);
        p *= 2;
    }
    for (int i = 0; i < circle_count; ++i) {
        wb.emplace_back(p);
        p *= 2;
    }
}

std::string GrowthReport::verdict_string() const {
    switch (verdict) {
        case Verdict::finite:
            return "finite";
        case Verdict::growth_consistent_with_infinite:
            return "growth-consistent-with-infinite";
        case Verdict::inconclusive:
            return "inconclusive";
    }
    return "inconclusive";
}

GrowthReport probe_completely_infinite(const GeneratorSet& gens, const CycleVector& v,
                                       const LinearForm& form,
                                       const std::vector<std::size_t>& depth_schedule) {
    if (depth_schedule.empty()) raise("bad-parameters", "depth schedule must be nonempty");
    for (std::size_t i = 1; i < depth_schedule.size(); ++i)
        if (depth_schedule[i] <= depth_schedule[i - 1])
            raise("bad-parameters", "depth schedule must be strictly increasing");
    if (form.is_zero()) raise("bad-parameters", "probe needs a nonzero linear form");
    bool pairs_nonzero = false;
    for (const CycleVector& g : gens.generators)
        if (gens.lattice.inner(v, g) != 0) pairs_nonzero = true;
    if (!pairs_nonzero)
        raise("probe-precondition",
              "start vector is orthogonal to every generator; the probe hypothesis excludes it");

    GrowthReport report;
    std::set<Rat> values;
    std::size_t schedule_pos = 0;
    std::size_t max_depth = depth_schedule.back();
    bool closed_early = false;

    OrbitStatus status = orbit_bfs(
        gens, v, static_cast<std::size_t>(-1), max_depth,
        [&](const CycleVector& w) { values.insert(form.value(w)); },
        [&](std::size_t depth, std::size_t size, bool frontier_empty) {
            while (schedule_pos < depth_schedule.size() &&
                   (depth_schedule[schedule_pos] == depth ||
                    (frontier_empty && depth_schedule[schedule_pos] >= depth))) {
                report.depths.push_back(depth_schedule[schedule_pos]);
                report.orbit_sizes.push_back(size);
                report.value_counts.push_back(values.size());
                ++schedule_pos;
            }
            if (frontier_empty) closed_early = true;
            return true;
        });

    if (status == OrbitStatus::closed || closed_early) {
        // orbit closed: record remaining checkpoints at the final state
        report.verdict = GrowthReport::Verdict::finite;
        while (report.depths.size() < depth_schedule.size()) {
            report.depths.push_back(depth_schedule[report.depths.size()]);
            report.orbit_sizes.push_back(report.orbit_sizes.empty() ? 1 : report.orbit_sizes.back());
            report.value_counts.push_back(values.size());
        }
        return report;
    }

    bool strictly_increasing = report.value_counts.size() >= 2;
    for (std::size_t i = 1; i < report.value_counts.size(); ++i)
        if (report.value_counts[i] <= report.value_counts[i - 1]) strictly_increasing = false;
    report.verdict = strictly_increasing
                         ? GrowthReport::Verdict::growth_consistent_with_infinite
                         : GrowthReport::Verdict::inconclusive;
    return report;
}

QuadricRankComparison d2_rank_comparison(long n) {
    if (n < 3) raise("bad-parameters", "quadric rank comparison needs n >= 3");
    int zero_rank = (n % 2 == 1) ? static_cast<int>(n) - 1 : 0;
    GeneratorSet gens = build_D_tilde(static_cast<int>(n) + 1, zero_rank);
    auto kernel = form_kernel(gens.lattice);
    QuadricRankComparison cmp;
    cmp.lattice_rank = gens.lattice.rank();
    cmp.kernel_rank = static_cast<int>(kernel.size());
    cmp.quotient_rank = cmp.lattice_rank - cmp.kernel_rank;
    cmp.milnor_rank = 2 * n;
    return cmp;
}

} // namespace hyperpot
