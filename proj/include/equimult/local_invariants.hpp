#ifndef EQUIMULT_LOCAL_INVARIANTS_HPP
#define EQUIMULT_LOCAL_INVARIANTS_HPP

#include <vector>

#include "strata.hpp"

namespace equimult {

// A pointed affine scheme: the unit of all local computations.
template <class K>
struct pointed_scheme {
    ideal<K> I;
    std::vector<K> point;
};

template <class K>
pointed_scheme<K> make_pointed_scheme(ideal<K> I, std::vector<K> point) {
    if (point.size() != I.nvars())
        throw contract_error("pointed scheme: point arity mismatch");
    for (const auto& g : I.gens())
        if (!g.evaluate(point).is_zero())
            throw contract_error("pointed scheme: a generator does not vanish at the point");
    return {std::move(I), std::move(point)};
}

template <class K>
ideal<K> translated_to_origin(const pointed_scheme<K>& X) {
    std::vector<poly<K>> gens;
    for (const auto& g : X.I.gens()) gens.push_back(g.translated(X.point));
    return ideal<K>(X.I.nvars(), X.I.ctx(), std::move(gens));
}

// Ideal of initial forms in_x(I): lowest-degree forms at the point, through
// the weight-(1,..,1) Rees deformation.
template <class K>
ideal<K> tangent_cone_ideal(const pointed_scheme<K>& X) {
    std::vector<std::int64_t> w(X.I.nvars(), 1);
    return weighted_initial_ideal(translated_to_origin(X), w);
}

template <class K>
struct hilbert_samuel_data {
    ideal<K> tangent_cone;
    int dim = 0;
    zpoly numerator;                   // N(t) with N(1) != 0
    std::uint64_t multiplicity = 1;    // e = N(1)
    std::vector<std::uint64_t> hs_prefix;  // l_x(0..n_max)
};

// l_x(n) for n = 0..n_max, read off the tangent cone: gr and the local ring
// share these lengths, so they are partial sums of the cone's Hilbert
// function.
template <class K>
std::vector<std::uint64_t> hilbert_samuel_function(const pointed_scheme<K>& X, unsigned n_max) {
    ideal<K> tc = tangent_cone_ideal(X);
    std::vector<monomial> lms;
    if (!tc.is_zero_ideal())
        lms = minimal_monomial_generators(tc.leading_monomials(monomial_order::grevlex(tc.nvars())));
    auto h = hilbert_of_monomial_ideal(lms, tc.nvars());
    auto hf = hilbert_function_values(h.first_numerator, tc.nvars(), n_max);
    std::vector<std::uint64_t> out(n_max + 1, 0);
    std::uint64_t acc = 0;
    for (unsigned n = 0; n <= n_max; ++n) {
        acc += static_cast<std::uint64_t>(hf[n]);
        out[n] = acc;
    }
    return out;
}

// e = N(1) where the tangent-cone Hilbert series is N(t)/(1-t)^d.
// Pure-dimensionality at the point is the caller's assertion.
template <class K>
hilbert_samuel_data<K> local_hilbert_samuel(const pointed_scheme<K>& X, unsigned n_max = 8) {
    hilbert_samuel_data<K> out;
    out.tangent_cone = tangent_cone_ideal(X);
    auto h = hilbert_series(out.tangent_cone);
    out.dim = h.dim;
    out.numerator = h.numerator;
    out.multiplicity = static_cast<std::uint64_t>(h.multiplicity);
    out.hs_prefix = hilbert_samuel_function(X, n_max);
    return out;
}

template <class K>
std::uint64_t multiplicity_at_point(const pointed_scheme<K>& X) {
    auto h = hilbert_series(tangent_cone_ideal(X));
    if (h.dim < 0) throw contract_error("multiplicity_at_point: empty scheme");
    return static_cast<std::uint64_t>(h.multiplicity);
}

// Kernel of the Jacobian: cutting forms are the linear parts of the
// translated generators.
template <class K>
subspace<K> zariski_tangent_space(const pointed_scheme<K>& X) {
    unsigned n = X.I.nvars();
    std::vector<std::vector<K>> forms;
    for (const auto& g : X.I.gens()) {
        poly<K> t = g.translated(X.point);
        std::vector<K> row(n, X.I.ctx().zero());
        bool any = false;
        for (const auto& [m, c] : t.terms()) {
            if (m.degree() != 1) continue;
            for (unsigned i = 0; i < n; ++i)
                if (m[i]) {
                    row[i] = c;
                    any = true;
                }
        }
        if (any) forms.push_back(std::move(row));
    }
    return subspace<K>::from_cutting_forms(n, X.I.ctx(), forms);
}

// Codimension of the multiplicity stratum of the tangent cone: the least
// number of variables needed to write the initial forms.
template <class K>
unsigned tau_invariant(const pointed_scheme<K>& X, std::mt19937_64& rng) {
    return cone_stratum(tangent_cone_ideal(X), rng).tau;
}

}  // namespace equimult

#endif
