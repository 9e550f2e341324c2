#ifndef EQUIMULT_ORACLE_HPP
#define EQUIMULT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "groebner.hpp"
#include "linalg.hpp"

namespace equimult {

// ---------------------------------------------------------------------------
// The brute-force oracle. Everything here works by point enumeration and
// truncated linear algebra only — no Groebner machinery — so it can sit on
// the other side of every cross-check.
// ---------------------------------------------------------------------------

struct oracle_limits {
    std::uint64_t max_points = 10'000'000;  // enumeration box cap
    unsigned max_hs_degree = 10;            // l_x(n) window cap
};

template <class K>
struct point_table {
    field_ctx<K> ctx;
    std::vector<std::vector<K>> points;   // on-scheme rational points
    std::vector<std::uint64_t> mults;     // parallel to points, 0 = unset
};

// All GF(q)-rational zeros of the generators, in odometer order.
inline point_table<fp> enumerate_points(const ideal<fp>& I, const oracle_limits& lim = {}) {
    unsigned n = I.nvars();
    std::uint32_t q = I.ctx().p;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) {
        total *= q;
        if (total > lim.max_points)
            throw resource_error("point enumeration budget exceeded (q^arity > " +
                                 std::to_string(lim.max_points) + ")");
    }
    point_table<fp> t;
    t.ctx = I.ctx();
    std::vector<fp> pt(n, I.ctx().zero());
    std::vector<std::uint32_t> idx(n, 0);
    for (std::uint64_t c = 0; c < total; ++c) {
        bool on = true;
        for (const auto& g : I.gens())
            if (!g.evaluate(pt).is_zero()) {
                on = false;
                break;
            }
        if (on) {
            t.points.push_back(pt);
            t.mults.push_back(0);
        }
        // advance odometer
        for (unsigned i = 0; i < n; ++i) {
            if (++idx[i] < q) {
                pt[i] = fp(q, idx[i]);
                break;
            }
            idx[i] = 0;
            pt[i] = I.ctx().zero();
        }
    }
    return t;
}

// l_x(k) = dim_k k[x]/(I + m^(k+1)) at p for every k = 0..n, in one
// elimination. Columns are the monomials of degree <= n sorted by degree;
// restricting a row of degree-<=n truncations to the degree-<=k columns *is*
// the degree-<=k truncation, so the pivot count among those columns is the
// rank of the l(k) system.
template <class K>
std::vector<std::uint64_t> hs_oracle_prefix(const ideal<K>& I, const std::vector<K>& p, unsigned n) {
    unsigned nv = I.nvars();
    std::vector<monomial> cols = monomials_up_to_degree(nv, n);  // degree-sorted
    std::map<monomial, std::size_t, canonical_less> col_of;
    for (std::size_t i = 0; i < cols.size(); ++i) col_of.emplace(cols[i], i);
    std::vector<std::uint64_t> monos_up_to(n + 1, 0);
    for (const auto& c : cols) ++monos_up_to[c.degree()];
    for (unsigned k = 1; k <= n; ++k) monos_up_to[k] += monos_up_to[k - 1];

    matrix<K> m(0, cols.size(), I.ctx());
    for (const auto& g0 : I.gens()) {
        poly<K> g = g0.translated(p);
        if (g.is_zero()) continue;
        unsigned ord = g.min_degree();
        if (ord > n) continue;
        std::vector<monomial> mults_list = monomials_up_to_degree(nv, n - ord);
        for (const auto& a : mults_list) {
            std::vector<K> row(cols.size(), I.ctx().zero());
            bool nonzero = false;
            for (const auto& [mono, c] : g.terms()) {
                monomial prod = mono * a;
                if (prod.degree() > n) continue;
                row[col_of.at(prod)] += c;
                nonzero = true;
            }
            if (nonzero) m.append_row(row);
        }
    }
    auto pivots = m.rref();
    std::vector<std::uint64_t> out(n + 1, 0);
    for (unsigned k = 0; k <= n; ++k) {
        std::uint64_t rank_k = 0;
        for (auto pc : pivots)
            if (pc < monos_up_to[k]) ++rank_k;
        out[k] = monos_up_to[k] - rank_k;
    }
    return out;
}

template <class K>
std::uint64_t hs_oracle(const ideal<K>& I, const std::vector<K>& p, unsigned n) {
    return hs_oracle_prefix(I, p, n).back();
}

namespace detail {

// Stabilized finite-difference fit: the smallest d whose d-th difference has
// its last three values equal and positive (two consecutive agreeing window
// fits). Returns (e, d) or nothing.
inline std::optional<std::pair<std::uint64_t, unsigned>> fit_hilbert(
    const std::vector<std::uint64_t>& l) {
    if (l.size() < 3) return std::nullopt;
    std::vector<std::int64_t> diff(l.begin(), l.end());
    for (unsigned d = 0; diff.size() >= 3; ++d) {
        std::size_t sz = diff.size();
        if (diff[sz - 1] == diff[sz - 2] && diff[sz - 2] == diff[sz - 3] && diff[sz - 1] > 0)
            return std::make_pair(static_cast<std::uint64_t>(diff[sz - 1]), d);
        for (std::size_t i = sz; i-- > 1;) diff[i] -= diff[i - 1];
        diff.erase(diff.begin());
    }
    return std::nullopt;
}

}  // namespace detail

struct mult_fit {
    std::uint64_t multiplicity;
    unsigned dim;                      // degree of the fitted Hilbert polynomial
    std::vector<std::uint64_t> lengths;  // l_x(0.. ) actually computed
};

// Fits the Hilbert polynomial degree and normalized leading coefficient to
// the l_x(n) window; two consecutive window fits must agree.
template <class K>
mult_fit mult_oracle(const ideal<K>& I, const std::vector<K>& p, const oracle_limits& lim = {}) {
    for (const auto& g : I.gens())
        if (!g.evaluate(p).is_zero())
            throw contract_error("mult_oracle: point is not on the scheme");

    std::vector<std::uint64_t> l;
    for (unsigned n = 5;; n += 2) {
        unsigned hi = std::min(n, lim.max_hs_degree);
        l = hs_oracle_prefix(I, p, hi);
        auto fit = detail::fit_hilbert(l);
        if (fit) return {fit->first, fit->second, l};
        if (hi == lim.max_hs_degree) break;
    }
    throw inconclusive_error("mult_oracle: Hilbert fit window never stabilized (n <= " +
                             std::to_string(lim.max_hs_degree) + ")");
}

// Oracle multiplicity at every enumerated rational point.
inline point_table<fp> stratify_points(const ideal<fp>& I, const oracle_limits& lim = {}) {
    point_table<fp> t = enumerate_points(I, lim);
    for (std::size_t i = 0; i < t.points.size(); ++i)
        t.mults[i] = mult_oracle(I, t.points[i], lim).multiplicity;
    return t;
}

// ---------------------------------------------------------------------------
// Q -> GF(p) reduction for sampling rational-coefficient inputs at primes.
// ---------------------------------------------------------------------------
inline poly<fp> reduce_mod_p(const poly<qq>& f, std::uint32_t p) {
    field_ctx<fp> ctx(p);
    std::vector<typename poly<fp>::term> ts;
    for (const auto& [m, c] : f.terms()) {
        bigint num = c.numerator(), den = c.denominator();
        if (den % p == 0)
            throw contract_error("reduce_mod_p: denominator divisible by " + std::to_string(p));
        fp fnum = ctx.from_integer(num), fden = ctx.from_integer(den);
        fp v = fnum / fden;
        if (!v.is_zero()) ts.push_back({m, v});
    }
    return poly<fp>::from_terms(f.nvars(), ctx, std::move(ts));
}

inline ideal<fp> reduce_mod_p(const ideal<qq>& I, std::uint32_t p) {
    std::vector<poly<fp>> gens;
    for (const auto& g : I.gens()) gens.push_back(reduce_mod_p(g, p));
    return ideal<fp>(I.nvars(), field_ctx<fp>(p), std::move(gens));
}

}  // namespace equimult

#endif
