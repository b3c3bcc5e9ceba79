#include "hyperpot/unipoly.hpp"

#include <algorithm>
#include <cmath>

#include "hyperpot/error.hpp"

namespace hyperpot {

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rat& c) {
    if (c == 0) return UniPoly();
    return UniPoly(std::vector<Rat>{c});
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& UniPoly::leading() const {
    if (is_zero()) raise("zero-polynomial", "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rat UniPoly::evaluate(const Rat& t) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double UniPoly::evaluate(double t) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rat> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
    std::vector<Rat> c(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] += other.coeffs_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& other) const { return *this + (-other); }

UniPoly UniPoly::operator-() const {
    std::vector<Rat> c(coeffs_);
    for (auto& x : c) x = -x;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
    if (is_zero() || other.is_zero()) return UniPoly();
    std::vector<Rat> c(coeffs_.size() + other.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
    return UniPoly(std::move(c));
}

namespace {

// Integer polynomial, lowest degree first, used for Sturm chains.
using IntPoly = std::vector<Int>;

void ztrim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Int content(const IntPoly& p) {
    Int g(0);
    for (const Int& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// Strip content, keep signs.
void make_primitive(IntPoly& p) {
    Int g = content(p);
    if (g == 0 || g == 1) return;
    for (Int& c : p) c /= g;
}

IntPoly to_int_primitive(const UniPoly& u) {
    Int den(1);
    for (const Rat& c : u.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    IntPoly p;
    p.reserve(u.coeffs().size());
    for (const Rat& c : u.coeffs()) {
        Rat scaled = c * Rat(den);
        p.push_back(Int(scaled.get_num()));
    }
    ztrim(p);
    make_primitive(p);
    return p;
}

IntPoly int_derivative(const IntPoly& p) {
    if (p.size() <= 1) return {};
    IntPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
    return d;
}

// Pseudo-remainder of a by b normalized so that the implied multiplier of a
// is positive; required for the Sturm sign property.
IntPoly prem_positive(IntPoly a, const IntPoly& b) {
    const int db = static_cast<int>(b.size()) - 1;
    int da = static_cast<int>(a.size()) - 1;
    const Int lb = b.back();
    long steps = da - db + 1;
    long done = 0;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int d = static_cast<int>(a.size()) - 1;
        Int la = a.back();
        // a = lb*a - la * x^(d-db) * b
        for (Int& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(d - db + i)] -= la * b[static_cast<std::size_t>(i)];
        ztrim(a);
        ++done;
    }
    // implied multiplier lb^steps; top up to keep it exact, then fix the sign
    Int mult(1);
    for (long i = done; i < steps; ++i) mult *= lb;
    for (Int& c : a) c *= mult;
    bool negative_multiplier = (sgn(lb) < 0) && (steps % 2 != 0);
    if (negative_multiplier)
        for (Int& c : a) c = -c;
    return a;
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    std::vector<IntPoly> chain;
    chain.push_back(p);
    IntPoly d = int_derivative(p);
    ztrim(d);
    if (d.empty()) return chain;
    make_primitive(d);
    chain.push_back(d);
    while (true) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain[chain.size() - 1];
        if (static_cast<int>(b.size()) - 1 <= 0) break;
        IntPoly r = prem_positive(a, b);
        if (r.empty()) break;
        make_primitive(r);
        for (Int& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

// sign of p(a/b) from the integer form sum c_i a^i b^(n-i); b > 0 canonical.
int sign_at_rat(const IntPoly& p, const Rat& x) {
    if (p.empty()) return 0;
    const Int& a = x.get_num();
    const Int& b = x.get_den();
    Int acc = p.back();
    Int bpow(1);
    for (int i = static_cast<int>(p.size()) - 2; i >= 0; --i) {
        bpow *= b;
        acc = acc * a + p[static_cast<std::size_t>(i)] * bpow;
    }
    return sgn(acc);
}

int sign_at(const IntPoly& p, const RootBound& where) {
    if (p.empty()) return 0;
    switch (where.kind) {
        case RootBound::Kind::finite:
            return sign_at_rat(p, where.value);
        case RootBound::Kind::pos_inf:
            return sgn(p.back());
        case RootBound::Kind::neg_inf: {
            int s = sgn(p.back());
            return (p.size() - 1) % 2 == 0 ? s : -s;
        }
    }
    return 0;
}

int sign_variations(const std::vector<IntPoly>& chain, const RootBound& where) {
    int variations = 0;
    int prev = 0;
    for (const IntPoly& p : chain) {
        int s = sign_at(p, where);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

bool bound_less(const RootBound& a, const RootBound& b) {
    if (a.kind == RootBound::Kind::neg_inf) return b.kind != RootBound::Kind::neg_inf;
    if (a.kind == RootBound::Kind::pos_inf) return false;
    if (b.kind == RootBound::Kind::pos_inf) return true;
    if (b.kind == RootBound::Kind::neg_inf) return false;
    return a.value < b.value;
}

int count_distinct_int(const IntPoly& squarefree, const RootBound& lo, const RootBound& hi) {
    auto chain = sturm_chain(squarefree);
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

IntPoly int_gcd_primitive(IntPoly a, IntPoly b) {
    ztrim(a);
    ztrim(b);
    make_primitive(a);
    make_primitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        IntPoly r = prem_positive(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && sgn(a.back()) < 0)
        for (Int& c : a) c = -c;
    return a;
}

IntPoly int_divide_exact(const IntPoly& num, const IntPoly& den) {
    // exact division of primitive polynomials over Q, result scaled primitive
    // num = den * q; coefficients of q may be rational, so go through Rat.
    std::vector<Rat> n(num.size());
    for (std::size_t i = 0; i < num.size(); ++i) n[i] = Rat(num[i]);
    std::vector<Rat> d(den.size());
    for (std::size_t i = 0; i < den.size(); ++i) d[i] = Rat(den[i]);
    std::vector<Rat> q(num.size() - den.size() + 1, Rat(0));
    std::vector<Rat> rem = n;
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        Rat c = rem[static_cast<std::size_t>(i) + den.size() - 1] / d.back();
        q[static_cast<std::size_t>(i)] = c;
        if (c != 0)
            for (std::size_t j = 0; j < den.size(); ++j)
                rem[static_cast<std::size_t>(i) + j] -= c * d[j];
    }
    // scale to integers
    Int lcm(1);
    for (const Rat& c : q) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    IntPoly out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = Int(Rat(q[i] * Rat(lcm)).get_num());
    ztrim(out);
    make_primitive(out);
    return out;
}

UniPoly from_int(const IntPoly& p) {
    std::vector<Rat> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = Rat(p[i]);
    return UniPoly(std::move(c));
}

} // namespace

int real_root_count(const UniPoly& u, const RootBound& lo, const RootBound& hi, bool distinct) {
    if (u.is_zero()) raise("zero-polynomial", "real_root_count of the zero polynomial");
    if (!bound_less(lo, hi)) raise("bad-interval", "real_root_count needs lo < hi");
    IntPoly p = to_int_primitive(u);
    if (p.size() <= 1) return 0;
    IntPoly sf = int_divide_exact(p, int_gcd_primitive(p, int_derivative(p)));
    int count = count_distinct_int(sf, lo, hi);
    if (distinct) return count;
    // with multiplicity: a root of multiplicity m contributes m-1 to gcd(u,u')
    IntPoly g = int_gcd_primitive(p, int_derivative(p));
    if (static_cast<int>(g.size()) - 1 >= 1) count += real_root_count(from_int(g), lo, hi, false);
    return count;
}

UniPoly unipoly_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) return UniPoly();
    IntPoly g = int_gcd_primitive(to_int_primitive(a), to_int_primitive(b));
    return from_int(g);
}

UniPoly squarefree_part(const UniPoly& u) {
    if (u.is_zero()) raise("zero-polynomial", "squarefree_part of the zero polynomial");
    IntPoly p = to_int_primitive(u);
    if (p.size() <= 1) return from_int(p);
    IntPoly sf = int_divide_exact(p, int_gcd_primitive(p, int_derivative(p)));
    return from_int(sf);
}

bool has_multiple_root_in(const UniPoly& u, const RootBound& lo, const RootBound& hi) {
    if (u.is_zero()) raise("zero-polynomial", "multiplicity test of the zero polynomial");
    UniPoly g = unipoly_gcd(u, u.derivative());
    if (g.degree() < 1) return false;
    return real_root_count(g, lo, hi, true) > 0;
}

std::vector<double> real_roots(const UniPoly& u) {
    if (u.is_zero()) raise("zero-polynomial", "real_roots of the zero polynomial");
    IntPoly p = to_int_primitive(u);
    if (p.size() <= 1) return {};
    IntPoly sf = int_divide_exact(p, int_gcd_primitive(p, int_derivative(p)));
    auto chain = sturm_chain(sf);
    auto count_in = [&chain](const Rat& a, const Rat& b) {
        return sign_variations(chain, RootBound::at(a)) - sign_variations(chain, RootBound::at(b));
    };

    // Cauchy bound
    Int maxc(0);
    for (const Int& c : sf) {
        Int a = abs(c);
        if (a > maxc) maxc = a;
    }
    Int lead = abs(sf.back());
    Int bq = maxc / lead + 2;
    Rat bound(bq);

    std::vector<std::pair<Rat, Rat>> isolated;
    std::vector<std::pair<Rat, Rat>> stack{{-bound, bound}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        int c = count_in(a, b);
        if (c == 0) continue;
        if (c == 1) {
            isolated.emplace_back(a, b);
            continue;
        }
        Rat m = (a + b) / 2;
        stack.emplace_back(a, m);
        stack.emplace_back(m, b);
    }
    std::sort(isolated.begin(), isolated.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    std::vector<double> roots;
    roots.reserve(isolated.size());
    for (auto& [a, b] : isolated) {
        Rat lo = a, hi = b;
        for (int iter = 0; iter < 80; ++iter) {
            if (rat_to_double(hi - lo) < 1e-16 * (1.0 + std::fabs(rat_to_double(lo)))) break;
            Rat m = (lo + hi) / 2;
            if (count_in(lo, m) == 1)
                hi = m;
            else
                lo = m;
        }
        roots.push_back(rat_to_double((lo + hi) / 2));
    }
    return roots;
}

} // namespace hyperpot
