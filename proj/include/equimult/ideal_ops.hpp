#ifndef EQUIMULT_IDEAL_OPS_HPP
#define EQUIMULT_IDEAL_OPS_HPP

#include <algorithm>
#include <vector>

#include "groebner.hpp"

namespace equimult {

// Generators of I ∩ k[keep], via a block order eliminating the complement.
// The result lives in the same ambient ring; its generators only use `keep`.
template <class K>
ideal<K> elimination_ideal(const ideal<K>& I, std::vector<unsigned> keep) {
    std::sort(keep.begin(), keep.end());
    std::vector<unsigned> elim;
    for (unsigned i = 0; i < I.nvars(); ++i)
        if (!std::binary_search(keep.begin(), keep.end(), i)) elim.push_back(i);
    if (elim.empty()) {
        return ideal<K>(I.nvars(), I.ctx(), I.gens());
    }
    monomial_order ord = monomial_order::block_elim(elim, I.nvars());
    std::vector<poly<K>> out;
    for (const auto& g : groebner_basis(I.gens(), ord)) {
        // With the product order, an element whose lead is free of the
        // eliminated block is free of it entirely.
        if (g.leading_term(ord).first.supported_on(keep)) out.push_back(g);
    }
    return ideal<K>(I.nvars(), I.ctx(), std::move(out));
}

// I : f^infinity via the Rabinowitsch variable: <I, 1 - w f> ∩ k[x].
template <class K>
ideal<K> saturation(const ideal<K>& I, const poly<K>& f) {
    if (f.is_zero()) throw contract_error("saturation by zero");
    unsigned n = I.nvars();
    std::vector<poly<K>> gens;
    for (const auto& g : I.gens()) gens.push_back(g.extended(n + 1));
    poly<K> one = poly<K>::constant(n + 1, I.ctx(), I.ctx().one());
    poly<K> w = poly<K>::variable(n + 1, I.ctx(), n);
    gens.push_back(one - w * f.extended(n + 1));
    ideal<K> J(n + 1, I.ctx(), std::move(gens));
    std::vector<unsigned> keep(n);
    std::iota(keep.begin(), keep.end(), 0u);
    ideal<K> E = elimination_ideal(J, keep);
    std::vector<poly<K>> out;
    for (const auto& g : E.gens()) out.push_back(g.restricted(n));
    return ideal<K>(n, I.ctx(), std::move(out));
}

// f ∈ sqrt(I), via 1 ∈ <I, 1 - w f>.
template <class K>
bool radical_membership(const poly<K>& f, const ideal<K>& I) {
    if (f.is_zero()) return true;
    unsigned n = I.nvars();
    std::vector<poly<K>> gens;
    for (const auto& g : I.gens()) gens.push_back(g.extended(n + 1));
    poly<K> one = poly<K>::constant(n + 1, I.ctx(), I.ctx().one());
    poly<K> w = poly<K>::variable(n + 1, I.ctx(), n);
    gens.push_back(one - w * f.extended(n + 1));
    ideal<K> J(n + 1, I.ctx(), std::move(gens));
    return J.is_unit(monomial_order::grevlex(n + 1));
}

// Minimal generating set of the monomial ideal spanned by `lms`.
inline std::vector<monomial> minimal_monomial_generators(std::vector<monomial> lms) {
    std::vector<monomial> out;
    std::sort(lms.begin(), lms.end(), canonical_less{});
    for (const auto& m : lms) {
        bool divisible = false;
        for (const auto& g : out)
            if (g.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) out.push_back(m);
    }
    return out;
}

// Krull dimension of R/LT via maximal independent variable sets: the largest
// S with no generator supported inside S. Equals dim R/I for any order.
inline int monomial_ideal_dimension(const std::vector<monomial>& gens, unsigned nvars) {
    for (const auto& g : gens)
        if (g.is_one()) return -1;
    if (nvars >= 31) throw contract_error("ring arity too large for dimension search");
    int best = -1;
    for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        std::vector<unsigned> s;
        for (unsigned i = 0; i < nvars; ++i)
            if (mask & (1u << i)) s.push_back(i);
        bool independent = true;
        for (const auto& g : gens)
            if (g.supported_on(s)) {
                independent = false;
                break;
            }
        if (independent) best = size;
    }
    return best;
}

// Krull dimension of k[x]/I (global; schemes here are pure dimensional).
template <class K>
int ideal_dimension(const ideal<K>& I) {
    if (I.is_zero_ideal()) return static_cast<int>(I.nvars());
    auto lms = minimal_monomial_generators(I.leading_monomials(monomial_order::grevlex(I.nvars())));
    return monomial_ideal_dimension(lms, I.nvars());
}

// k-dimension of k[x]/I for zero-dimensional I (number of standard
// monomials); contract error if not finite.
template <class K>
std::uint64_t quotient_vector_space_dim(const ideal<K>& I) {
    unsigned n = I.nvars();
    auto lms = minimal_monomial_generators(I.leading_monomials(monomial_order::grevlex(n)));
    for (const auto& m : lms)
        if (m.is_one()) return 0;
    // Finite iff each variable has a pure power among the leads.
    std::vector<unsigned> cap(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        bool found = false;
        for (const auto& m : lms) {
            bool pure = m[i] > 0;
            for (unsigned j = 0; pure && j < n; ++j)
                if (j != i && m[j]) pure = false;
            if (pure) {
                cap[i] = m[i];
                found = true;
                break;
            }
        }
        if (!found) throw contract_error("quotient is not zero-dimensional");
    }
    // Enumerate standard monomials inside the box given by the pure powers.
    std::uint64_t count = 0;
    std::vector<unsigned> e(n, 0);
    auto divisible = [&](const std::vector<unsigned>& exp) {
        for (const auto& m : lms) {
            bool div = true;
            for (unsigned i = 0; i < n; ++i)
                if (m[i] > exp[i]) {
                    div = false;
                    break;
                }
            if (div) return true;
        }
        return false;
    };
    auto rec = [&](auto&& self, unsigned i) -> void {
        if (i == n) {
            if (!divisible(e)) ++count;
            return;
        }
        for (unsigned k = 0; k < cap[i]; ++k) {
            e[i] = k;
            self(self, i + 1);
        }
        e[i] = 0;
    };
    rec(rec, 0);
    return count;
}

// Ideal of w-lowest initial forms, via the Rees deformation: each generator
// g is spread with an auxiliary variable t (term x^b picks t^(w.b - m), m the
// minimal w-degree in g), the result is saturated by t and then specialized
// at t = 0. Weights must be nonnegative.
template <class K>
ideal<K> weighted_initial_ideal(const ideal<K>& I, const std::vector<std::int64_t>& w) {
    unsigned n = I.nvars();
    if (w.size() != n) throw contract_error("weight vector arity mismatch");
    for (auto wi : w)
        if (wi < 0) throw contract_error("weights must be nonnegative");
    if (I.is_zero_ideal()) return ideal<K>(n, I.ctx());

    unsigned t = n;  // auxiliary variable index
    std::vector<poly<K>> deformed;
    for (const auto& g : I.gens()) {
        std::int64_t m = g.min_weighted_degree(w);
        std::vector<typename poly<K>::term> ts;
        for (const auto& [mono, c] : g.terms()) {
            std::vector<unsigned> e = mono.exps();
            e.resize(n + 1, 0u);
            e[t] = static_cast<unsigned>(mono.weighted_degree(w) - m);
            ts.push_back({monomial(std::move(e)), c});
        }
        deformed.push_back(poly<K>::from_terms(n + 1, I.ctx(), std::move(ts)));
    }
    ideal<K> J(n + 1, I.ctx(), std::move(deformed));
    ideal<K> Jsat = saturation(J, poly<K>::variable(n + 1, I.ctx(), t));

    // Specialize t = 0 by eliminating t from Jsat + <t>.
    std::vector<poly<K>> gens = Jsat.gens();
    gens.push_back(poly<K>::variable(n + 1, I.ctx(), t));
    ideal<K> Jt(n + 1, I.ctx(), std::move(gens));
    std::vector<unsigned> keep(n);
    std::iota(keep.begin(), keep.end(), 0u);
    ideal<K> E = elimination_ideal(Jt, keep);
    std::vector<poly<K>> out;
    for (const auto& g : E.gens()) out.push_back(g.restricted(n));
    return ideal<K>(n, I.ctx(), std::move(out));
}

}  // namespace equimult

#endif
