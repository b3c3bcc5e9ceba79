#include "hyperpot/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "hyperpot/error.hpp"

namespace hyperpot {

namespace {

int total_degree(const MultiPoly::Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

template <typename Scalar>
Scalar scalar_pow(const Scalar& base, int e) {
    Scalar acc(1);
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

// Horner over the lex-sorted term range: all terms in [begin,end) agree on
// exponents of variables < var.
double rat_as(const Rat& r, double) { return r.get_d(); }
Rat rat_as(const Rat& r, const Rat&) { return r; }

template <typename Scalar>
Scalar eval_range(MultiPoly::TermMap::const_iterator begin,
                  MultiPoly::TermMap::const_iterator end, int var, int nvars,
                  const std::vector<Scalar>& x) {
    if (var == nvars) return rat_as(begin->second, Scalar(0));
    using It = MultiPoly::TermMap::const_iterator;
    std::vector<std::pair<int, std::pair<It, It>>> groups; // ascending exponent of var
    auto it = begin;
    while (it != end) {
        int e = it->first[static_cast<std::size_t>(var)];
        auto group_end = it;
        while (group_end != end && group_end->first[static_cast<std::size_t>(var)] == e) ++group_end;
        groups.push_back({e, {it, group_end}});
        it = group_end;
    }
    Scalar acc(0);
    int prev_exp = -1;
    for (auto g = groups.rbegin(); g != groups.rend(); ++g) { // Horner, highest first
        Scalar inner = eval_range(g->second.first, g->second.second, var + 1, nvars, x);
        if (prev_exp < 0)
            acc = inner;
        else
            acc = acc * scalar_pow(x[static_cast<std::size_t>(var)], prev_exp - g->first) + inner;
        prev_exp = g->first;
    }
    if (prev_exp > 0) acc = acc * scalar_pow(x[static_cast<std::size_t>(var)], prev_exp);
    return acc;
}

} // namespace

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1) raise("bad-arity", "polynomial needs at least one variable");
}

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_[Exponents(static_cast<std::size_t>(nvars), 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) raise("bad-arity", "variable index out of range");
    MultiPoly p(nvars);
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.terms_[std::move(e)] = Rat(1);
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, Exponents exps, const Rat& c) {
    MultiPoly p(nvars);
    p.add_term(std::move(exps), c);
    return p;
}

MultiPoly& MultiPoly::add_term(Exponents exps, const Rat& c) {
    if (static_cast<int>(exps.size()) != nvars_)
        raise("dimension-mismatch", "exponent vector length does not match nvars");
    for (int e : exps)
        if (e < 0) raise("bad-arity", "negative exponent");
    if (c == 0) return *this;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(std::move(exps), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
    if (nvars_ != other.nvars_) raise("dimension-mismatch", "adding polynomials of different arity");
    MultiPoly out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const { return *this + (-other); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

MultiPoly MultiPoly::operator*(const Rat& scalar) const {
    MultiPoly out(nvars_);
    if (scalar == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_[e] = c * scalar;
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    if (nvars_ != other.nvars_) raise("dimension-mismatch", "multiplying polynomials of different arity");
    MultiPoly out(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) {
            Exponents e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            out.add_term(std::move(e), c1 * c2);
        }
    return out;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
}

Rat MultiPoly::evaluate(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != nvars_)
        raise("dimension-mismatch", "evaluation point has wrong dimension");
    if (terms_.empty()) return Rat(0);
    return eval_range<Rat>(terms_.begin(), terms_.end(), 0, nvars_, x);
}

double MultiPoly::evaluate(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != nvars_)
        raise("dimension-mismatch", "evaluation point has wrong dimension");
    if (terms_.empty()) return 0.0;
    return eval_range<double>(terms_.begin(), terms_.end(), 0, nvars_, x);
}

MultiPoly MultiPoly::partial(int var) const {
    if (var < 0 || var >= nvars_) raise("bad-arity", "partial derivative index out of range");
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<std::size_t>(var)];
        if (k == 0) continue;
        Exponents d = e;
        d[static_cast<std::size_t>(var)] = k - 1;
        out.add_term(std::move(d), c * Rat(k));
    }
    return out;
}

std::vector<MultiPoly> MultiPoly::gradient() const {
    std::vector<MultiPoly> g;
    g.reserve(static_cast<std::size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) g.push_back(partial(i));
    return g;
}

MultiPoly MultiPoly::principal_part() const {
    if (is_zero()) raise("zero-polynomial", "principal part of the zero polynomial");
    int d = degree();
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d) out.terms_[e] = c;
    return out;
}

UniPoly MultiPoly::restrict_to_line(const std::vector<Rat>& a, const std::vector<Rat>& v) const {
    if (static_cast<int>(a.size()) != nvars_ || static_cast<int>(v.size()) != nvars_)
        raise("dimension-mismatch", "line restriction point/direction dimension mismatch");
    bool nonzero = false;
    for (const Rat& c : v)
        if (c != 0) nonzero = true;
    if (!nonzero) raise("zero-direction", "line restriction needs a nonzero direction");

    // cache (a_i + t v_i)^k factors per variable
    std::vector<std::vector<UniPoly>> powers(static_cast<std::size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i)
        powers[static_cast<std::size_t>(i)].push_back(UniPoly::constant(Rat(1)));

    auto factor_power = [&](int var, int k) -> const UniPoly& {
        auto& cache = powers[static_cast<std::size_t>(var)];
        while (static_cast<int>(cache.size()) <= k) {
            UniPoly lin(std::vector<Rat>{a[static_cast<std::size_t>(var)], v[static_cast<std::size_t>(var)]});
            cache.push_back(cache.back() * lin);
        }
        return cache[static_cast<std::size_t>(k)];
    };

    UniPoly acc;
    for (const auto& [e, c] : terms_) {
        UniPoly term = UniPoly::constant(c);
        for (int i = 0; i < nvars_; ++i)
            if (e[static_cast<std::size_t>(i)] > 0) term = term * factor_power(i, e[static_cast<std::size_t>(i)]);
        acc = acc + term;
    }
    return acc;
}

std::optional<MultiPoly> MultiPoly::divided_exactly_by(const MultiPoly& q) const {
    if (nvars_ != q.nvars_) raise("dimension-mismatch", "dividing polynomials of different arity");
    if (q.is_zero()) raise("zero-polynomial", "division by the zero polynomial");
    MultiPoly quotient(nvars_);
    MultiPoly rem = *this;
    const auto& qlead = *q.terms_.rbegin(); // lex-largest term
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        Exponents diff(rlead.first.size());
        bool divisible = true;
        for (std::size_t i = 0; i < diff.size(); ++i) {
            diff[i] = rlead.first[i] - qlead.first[i];
            if (diff[i] < 0) divisible = false;
        }
        if (!divisible) return std::nullopt;
        Rat coeff = rlead.second / qlead.second;
        MultiPoly mono = MultiPoly::monomial(nvars_, diff, coeff);
        quotient = quotient + mono;
        rem = rem - mono * q;
    }
    return quotient;
}

MultiPoly pow(const MultiPoly& base, int exponent) {
    if (exponent < 0) raise("bad-arity", "negative polynomial power");
    MultiPoly acc = MultiPoly::constant(base.nvars(), Rat(1));
    for (int i = 0; i < exponent; ++i) acc = acc * base;
    return acc;
}

int eta_factor_count(const MultiPoly& p) {
    if (p.nvars() != 2) raise("bad-arity", "eta factor count is defined for plane curves only");
    if (p.is_zero()) raise("zero-polynomial", "eta factor count of the zero polynomial");
    MultiPoly r2 = MultiPoly::monomial(2, {2, 0}, Rat(1));
    r2.add_term({0, 2}, Rat(1));
    MultiPoly h = p.principal_part();
    int m = 0;
    while (true) {
        auto q = h.divided_exactly_by(r2);
        if (!q) break;
        h = *q;
        ++m;
        if (h.is_zero()) break;
    }
    return m;
}

} // namespace hyperpot
