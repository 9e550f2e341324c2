#ifndef EQUIMULT_TRANSFORM_HPP
#define EQUIMULT_TRANSFORM_HPP

#include <vector>

#include "groebner.hpp"
#include "linalg.hpp"

namespace equimult {

// Substitution images x_i -> sum_j A[i][j] x_j from a square matrix.
template <class K>
std::vector<poly<K>> linear_images(const matrix<K>& A) {
    unsigned n = static_cast<unsigned>(A.rows());
    std::vector<poly<K>> images;
    images.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
        std::vector<typename poly<K>::term> ts;
        for (unsigned j = 0; j < n; ++j)
            if (!A.at(i, j).is_zero()) ts.push_back({monomial::var(n, j), A.at(i, j)});
        images.push_back(poly<K>::from_terms(n, A.ctx(), std::move(ts)));
    }
    return images;
}

template <class K>
ideal<K> transform_ideal(const ideal<K>& I, const std::vector<poly<K>>& images) {
    std::vector<poly<K>> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(g.substitute(images));
    return ideal<K>(I.nvars(), I.ctx(), std::move(gens));
}

template <class K>
ideal<K> transform_ideal(const ideal<K>& I, const matrix<K>& A) {
    return transform_ideal(I, linear_images(A));
}

// Minimal total degree of f translated so p sits at the origin.
template <class K>
unsigned order_at_point(const poly<K>& f, const std::vector<K>& p) {
    if (f.is_zero()) throw contract_error("order_at_point: order of zero is undefined");
    return f.translated(p).min_degree();
}

// Exact division f / g (zero remainder required); nullopt when not exact.
template <class K>
std::optional<poly<K>> exact_divide(const poly<K>& f, const poly<K>& g) {
    if (g.is_zero()) return std::nullopt;
    monomial_order ord = monomial_order::grevlex(f.nvars());
    const auto& lg = g.leading_term(ord);
    poly<K> cur = f;
    poly<K> q(f.nvars(), f.ctx());
    while (!cur.is_zero()) {
        budget_tick();
        const auto& lt = cur.leading_term(ord);
        if (!lg.first.divides(lt.first)) return std::nullopt;
        monomial m = lg.first.quotient_of(lt.first);
        K c = lt.second / lg.second;
        q += poly<K>::from_term(f.nvars(), f.ctx(), m, c);
        cur -= g.mul_term(m, c);
    }
    return q;
}

}  // namespace equimult

#endif
