#ifndef EQUIMULT_HILBERT_HPP
#define EQUIMULT_HILBERT_HPP

#include <vector>

#include "ideal_ops.hpp"

namespace equimult {

// Integer polynomials in t, coefficient vector indexed by degree.
using zpoly = std::vector<bigint>;

inline void zpoly_trim(zpoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline zpoly zpoly_mul_one_minus_tpow(const zpoly& p, unsigned d) {
    zpoly r(p.size() + d, bigint(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        r[i] += p[i];
        r[i + d] -= p[i];
    }
    zpoly_trim(r);
    return r;
}

inline bigint zpoly_eval_one(const zpoly& p) {
    bigint s = 0;
    for (const auto& c : p) s += c;
    return s;
}

// Exact division by (1 - t); caller guarantees p(1) == 0.
inline zpoly zpoly_div_one_minus_t(const zpoly& p) {
    if (p.empty()) return {};
    // p = (1 - t) q  =>  q_i = p_0 + p_1 + ... + p_i
    zpoly q(p.size() - 1, bigint(0));
    bigint acc = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        acc += p[i];
        q[i] = acc;
    }
    zpoly_trim(q);
    return q;
}

namespace detail {

// First Hilbert numerator of k[x]/<monomial gens>; series = N0 / (1-t)^n.
// Pivot recursion: N0(I) = N0(I + <x_j>) + t * N0(I : x_j).
inline zpoly hilbert_first_numerator_rec(std::vector<monomial> gens, unsigned nvars) {
    gens = minimal_monomial_generators(std::move(gens));
    for (const auto& g : gens)
        if (g.is_one()) return {};  // unit ideal: zero series

    if (gens.empty()) return {bigint(1)};

    // All pure variable powers (distinct variables, by minimality): product formula.
    bool all_pure = true;
    unsigned pivot_var = 0;
    bool have_pivot = false;
    for (const auto& g : gens) {
        unsigned support = 0, var = 0;
        for (unsigned i = 0; i < nvars; ++i)
            if (g[i]) {
                ++support;
                var = i;
            }
        if (support > 1) {
            all_pure = false;
            if (!have_pivot) {
                pivot_var = var;  // any variable of a mixed generator
                have_pivot = true;
            }
        }
    }
    if (all_pure) {
        zpoly r{bigint(1)};
        for (const auto& g : gens) r = zpoly_mul_one_minus_tpow(r, g.degree());
        return r;
    }

    budget_tick();
    // Branch on the pivot variable.
    std::vector<monomial> plus = gens;
    plus.push_back(monomial::var(nvars, pivot_var));
    std::vector<monomial> colon;
    for (const auto& g : gens) {
        monomial m = g;
        if (m[pivot_var] > 0) m[pivot_var] -= 1;
        colon.push_back(m);
    }
    zpoly a = hilbert_first_numerator_rec(std::move(plus), nvars);
    zpoly b = hilbert_first_numerator_rec(std::move(colon), nvars);
    zpoly r(std::max(a.size(), b.size() + 1), bigint(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i + 1] += b[i];
    zpoly_trim(r);
    return r;
}

}  // namespace detail

struct hilbert_data {
    zpoly first_numerator;  // over (1-t)^nvars
    zpoly numerator;        // over (1-t)^dim, N(1) != 0
    int dim = 0;            // Krull dimension d
    bigint multiplicity;    // N(1)
};

// Hilbert series of k[x]/<monomial ideal>.
inline hilbert_data hilbert_of_monomial_ideal(const std::vector<monomial>& gens, unsigned nvars) {
    hilbert_data h;
    h.first_numerator = detail::hilbert_first_numerator_rec(gens, nvars);
    h.numerator = h.first_numerator;
    if (h.numerator.empty()) {  // unit ideal
        h.dim = -1;
        h.multiplicity = 0;
        return h;
    }
    int k = 0;
    while (zpoly_eval_one(h.numerator) == 0) {
        h.numerator = zpoly_div_one_minus_t(h.numerator);
        ++k;
    }
    h.dim = static_cast<int>(nvars) - k;
    h.multiplicity = zpoly_eval_one(h.numerator);
    return h;
}

// Hilbert series N(t)/(1-t)^d of k[x]/I for homogeneous I, via the leading
// ideal in a graded order.
template <class K>
hilbert_data hilbert_series(const ideal<K>& I) {
    for (const auto& g : I.gens())
        if (!g.is_homogeneous())
            throw contract_error("hilbert_series: non-homogeneous generator");
    if (I.is_zero_ideal()) {
        hilbert_data h;
        h.first_numerator = {bigint(1)};
        h.numerator = {bigint(1)};
        h.dim = static_cast<int>(I.nvars());
        h.multiplicity = 1;
        return h;
    }
    auto lms = minimal_monomial_generators(I.leading_monomials(monomial_order::grevlex(I.nvars())));
    return hilbert_of_monomial_ideal(lms, I.nvars());
}

// Values of the Hilbert function of k[x]/<lead ideal> for degrees 0..upto,
// from the series expansion of N0(t) / (1-t)^n.
inline std::vector<bigint> hilbert_function_values(const zpoly& first_numerator, unsigned nvars,
                                                   unsigned upto) {
    // 1/(1-t)^n has coefficients C(n-1+j, n-1).
    std::vector<bigint> binom(upto + 1);
    for (unsigned j = 0; j <= upto; ++j) {
        bigint b = 1;
        for (unsigned i = 1; i < nvars; ++i) {
            b *= (j + i);
            b /= i;
        }
        binom[j] = (nvars == 0) ? bigint(j == 0 ? 1 : 0) : b;
    }
    std::vector<bigint> out(upto + 1, bigint(0));
    for (unsigned s = 0; s <= upto; ++s) {
        bigint acc = 0;
        for (std::size_t i = 0; i < first_numerator.size() && i <= s; ++i)
            acc += first_numerator[i] * binom[s - i];
        out[s] = acc;
    }
    return out;
}

}  // namespace equimult

#endif
