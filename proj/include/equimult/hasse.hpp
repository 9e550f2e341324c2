#ifndef EQUIMULT_HASSE_HPP
#define EQUIMULT_HASSE_HPP

#include <vector>

#include "groebner.hpp"

namespace equimult {

inline bigint binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    bigint b = 1;
    for (unsigned i = 1; i <= k; ++i) {
        b *= (n - k + i);
        b /= i;
    }
    return b;
}

// Divided-power (Hasse) derivative: D^a(x^b) = C(b,a) x^(b-a), the binomial
// reduced into the coefficient field. Correct in every characteristic.
template <class K>
poly<K> hasse_derivative(const poly<K>& f, const std::vector<unsigned>& alpha) {
    std::vector<typename poly<K>::term> out;
    for (const auto& [m, c] : f.terms()) {
        bigint coeff = 1;
        bool ok = true;
        for (unsigned i = 0; i < f.nvars() && ok; ++i) {
            if (alpha[i] > m[i]) {
                ok = false;
                break;
            }
            if (alpha[i]) coeff *= binomial(m[i], alpha[i]);
        }
        if (!ok) continue;
        K kc = c * f.ctx().from_integer(coeff);
        if (kc.is_zero()) continue;
        std::vector<unsigned> e = m.exps();
        for (unsigned i = 0; i < f.nvars(); ++i) e[i] -= alpha[i];
        out.push_back({monomial(std::move(e)), kc});
    }
    return poly<K>::from_terms(f.nvars(), f.ctx(), std::move(out));
}

// All Hasse derivatives D^a f with 1 <= |a| <= max_order (plus f itself when
// include_f), dropping zero results. Deterministic enumeration.
template <class K>
std::vector<poly<K>> hasse_derivatives_up_to(const poly<K>& f, unsigned max_order, bool include_f) {
    std::vector<poly<K>> out;
    if (include_f && !f.is_zero()) out.push_back(f);
    for (unsigned d = 1; d <= max_order; ++d) {
        std::vector<monomial> alphas;
        monomials_of_degree(f.nvars(), d, alphas);
        for (const auto& a : alphas) {
            poly<K> g = hasse_derivative(f, a.exps());
            if (!g.is_zero()) out.push_back(std::move(g));
        }
    }
    return out;
}

// Ideal generated by {D^a f : |a| <= e-1}; its zero set is exactly the set
// of points where f has order >= e (Hasse derivatives see every
// characteristic).
template <class K>
ideal<K> hypersurface_stratum_ideal(const poly<K>& f, unsigned e) {
    if (e < 1) throw contract_error("hypersurface_stratum_ideal: e >= 1 required");
    return ideal<K>(f.nvars(), f.ctx(), hasse_derivatives_up_to(f, e - 1, true));
}

}  // namespace equimult

#endif
