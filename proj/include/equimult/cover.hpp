#ifndef EQUIMULT_COVER_HPP
#define EQUIMULT_COVER_HPP

#include <random>
#include <string>
#include <vector>

#include "hasse.hpp"
#include "hilbert.hpp"
#include "ideal_ops.hpp"
#include "oracle.hpp"
#include "transform.hpp"

namespace equimult {

// ---------------------------------------------------------------------------
// Finite covers S ⊂ B: Noether normalization, minimal polynomials of fiber
// generators, generic rank, and the complete-intersection approximation B'.
// ---------------------------------------------------------------------------

template <class K>
K random_field_elem(field_ctx<K> ctx, std::mt19937_64& rng, bool nonzero_bias = false) {
    if (ctx.order_hint() > 0) {
        std::uniform_int_distribution<long> d(nonzero_bias ? 1 : 0,
                                              static_cast<long>(ctx.order_hint()) - 1);
        return ctx.from_long(d(rng));
    }
    std::uniform_int_distribution<long> d(nonzero_bias ? 1 : -3, 3);
    long v = d(rng);
    if (nonzero_bias && v == 0) v = 1;
    return ctx.from_long(v);
}

template <class K>
struct min_poly_rec {
    poly<K> f;        // monic generator f(V) in k[base][V]
    unsigned degree;  // d = deg_V f
    unsigned var;     // index of V in the ambient ring
};

template <class K>
struct cover_presentation {
    unsigned nvars = 0;
    field_ctx<K> ctx{};
    matrix<K> change;                    // recorded linear substitution x_i -> sum A[i][j] x_j
    ideal<K> relation;                   // relation ideal of B in the new coordinates
    std::vector<unsigned> base_vars;     // y_1..y_d (sorted indices)
    std::vector<unsigned> fiber_vars;    // V_1..V_m (sorted indices)
    std::vector<min_poly_rec<K>> min_polys;
    std::uint64_t D = 1;                 // prod of the d_i
    std::uint64_t rank = 0;              // generic rank n of B over S
    int dim = 0;
};

template <class K>
struct ci_scheme {
    unsigned nvars = 0;
    field_ctx<K> ctx{};
    ideal<K> ci_ideal;  // <f_1(V_1), ..., f_m(V_m)> in the cover's coordinates
    std::vector<min_poly_rec<K>> hypersurfaces;
    std::uint64_t D = 1;
};

// Leading-monomial finiteness test: with the fiber-dominant block order, the
// quotient is finite over the base iff every fiber variable contributes a
// pure power to the leading ideal.
template <class K>
bool finite_over_base(const ideal<K>& I, const std::vector<unsigned>& fiber) {
    if (fiber.empty()) return true;
    if (I.is_zero_ideal()) return false;
    auto ord = monomial_order::block_elim(fiber, I.nvars());
    auto lms = I.leading_monomials(ord);
    for (unsigned v : fiber) {
        bool found = false;
        for (const auto& m : lms) {
            if (m[v] == 0) continue;
            bool pure = true;
            for (unsigned j = 0; j < I.nvars() && pure; ++j)
                if (j != v && m[j]) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

template <class K>
struct nn_skeleton {
    matrix<K> change;
    ideal<K> transformed;
    std::vector<unsigned> base_vars, fiber_vars;
    int dim = 0;
};

// Noether normalization by linear change: first try coordinate subsets read
// off the staircase, then random unitriangular changes (cap per the small-
// field genericity policy).
template <class K>
nn_skeleton<K> noether_normalization(const ideal<K>& J, bool graded, std::mt19937_64& rng,
                                     unsigned retry_cap = 20) {
    if (graded && !J.is_homogeneous_gens())
        throw contract_error("noether_normalization: graded flag requires homogeneous generators");
    unsigned n = J.nvars();
    int d = ideal_dimension(J);
    if (d < 0) throw contract_error("noether_normalization: proper ideal required");

    auto try_candidate = [&](const ideal<K>& I, std::vector<unsigned> base,
                             const matrix<K>& A) -> std::optional<nn_skeleton<K>> {
        std::vector<unsigned> fiber;
        for (unsigned i = 0; i < n; ++i)
            if (!std::binary_search(base.begin(), base.end(), i)) fiber.push_back(i);
        if (!finite_over_base(I, fiber)) return std::nullopt;
        return nn_skeleton<K>{A, I, std::move(base), std::move(fiber), d};
    };

    matrix<K> id(n, n, J.ctx());
    for (unsigned i = 0; i < n; ++i) id.at(i, i) = J.ctx().one();

    // Independent coordinate subsets of the right size, cheapest first.
    if (d > 0) {
        auto lms = minimal_monomial_generators(J.leading_monomials(monomial_order::grevlex(n)));
        unsigned tried = 0;
        for (std::uint32_t mask = 0; mask < (1u << n) && tried < 8; ++mask) {
            if (__builtin_popcount(mask) != d) continue;
            std::vector<unsigned> s;
            for (unsigned i = 0; i < n; ++i)
                if (mask & (1u << i)) s.push_back(i);
            bool independent = true;
            for (const auto& g : lms)
                if (g.supported_on(s)) {
                    independent = false;
                    break;
                }
            if (!independent) continue;
            ++tried;
            if (auto r = try_candidate(J, s, id)) return *r;
        }
    } else {
        if (auto r = try_candidate(J, {}, id)) return *r;
    }

    // Random linear changes; base fixed to the last d variables. A product
    // of unit-triangular factors is always invertible and mixes in both
    // directions.
    std::vector<unsigned> base;
    for (unsigned i = n - static_cast<unsigned>(d); i < n; ++i) base.push_back(i);
    for (unsigned t = 0; t < retry_cap; ++t) {
        matrix<K> L(n, n, J.ctx()), U(n, n, J.ctx());
        for (unsigned i = 0; i < n; ++i) {
            L.at(i, i) = J.ctx().one();
            U.at(i, i) = J.ctx().one();
        }
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < i; ++j) L.at(i, j) = random_field_elem(J.ctx(), rng);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j) U.at(i, j) = random_field_elem(J.ctx(), rng);
        matrix<K> A(n, n, J.ctx());
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                K acc = J.ctx().zero();
                for (unsigned k = 0; k < n; ++k) acc += L.at(i, k) * U.at(k, j);
                A.at(i, j) = acc;
            }
        ideal<K> moved = transform_ideal(J, A);
        if (auto r = try_candidate(moved, base, A)) return *r;
    }
    throw genericity_error(
        "noether_normalization: no finite projection found after " + std::to_string(retry_cap) +
        " linear draws; the ground field may be too small (try a larger p)");
}

// Coefficient of v^j, with the v-exponent removed.
template <class K>
poly<K> coefficient_of_power(const poly<K>& f, unsigned v, unsigned j) {
    std::vector<typename poly<K>::term> ts;
    for (const auto& [m, c] : f.terms()) {
        if (m[v] != j) continue;
        std::vector<unsigned> e = m.exps();
        e[v] = 0;
        ts.push_back({monomial(std::move(e)), c});
    }
    return poly<K>::from_terms(f.nvars(), f.ctx(), std::move(ts));
}

// Monic minimal polynomial of the fiber variable v over k[base], from the
// elimination ideal keeping base ∪ {v}. A non-monic minimal polynomial means
// B is not inside B ⊗ K (embedded components); that is reported, not fixed.
template <class K>
min_poly_rec<K> minimal_polynomial_of_var(const ideal<K>& relation,
                                          const std::vector<unsigned>& base, unsigned v) {
    std::vector<unsigned> keep = base;
    keep.push_back(v);
    std::sort(keep.begin(), keep.end());
    ideal<K> E = elimination_ideal(relation, keep);
    std::vector<poly<K>> nonzero;
    for (const auto& g : E.gens())
        if (g.degree_in(v) > 0) nonzero.push_back(g);
    if (nonzero.empty())
        throw contract_error("minimal_polynomial: fiber element is transcendental over the base "
                             "(projection not finite)");
    // The v-dominant block order exposes the minimal v-degree of the ideal.
    auto ord = monomial_order::block_elim({v}, relation.nvars());
    auto gb = groebner_basis(E.gens(), ord);
    unsigned best = 0;
    bool have = false;
    for (const auto& g : gb) {
        unsigned dv = g.degree_in(v);
        if (dv == 0) continue;
        if (!have || dv < best) {
            best = dv;
            have = true;
        }
    }
    if (!have)
        throw contract_error("minimal_polynomial: fiber element is transcendental over the base");
    for (const auto& g : gb) {
        if (g.degree_in(v) != best) continue;
        poly<K> lead = coefficient_of_power(g, v, best);
        if (lead.is_constant()) {
            return {g.scaled(lead.constant_value().inv()), best, v};
        }
        if (auto q = exact_divide(g, lead)) {
            poly<K> lc = coefficient_of_power(*q, v, best);
            if (lc.is_constant() && lc.constant_value().is_one()) return {*q, best, v};
        }
    }
    throw contract_error(
        "minimal_polynomial: non-monic minimal polynomial; the scheme appears to have an embedded "
        "component over the base (B is not contained in B x K)");
}

// Minimal polynomial of a general fiber element theta, returned as the list
// of coefficients a_0..a_m of Z^0..Z^m (a_m = 1), each supported on the base.
template <class K>
std::vector<poly<K>> minimal_polynomial_of_element(const ideal<K>& relation,
                                                   const std::vector<unsigned>& base,
                                                   const poly<K>& theta) {
    unsigned n = relation.nvars();
    std::vector<poly<K>> gens;
    for (const auto& g : relation.gens()) gens.push_back(g.extended(n + 1));
    gens.push_back(poly<K>::variable(n + 1, relation.ctx(), n) - theta.extended(n + 1));
    ideal<K> big(n + 1, relation.ctx(), std::move(gens));
    min_poly_rec<K> mp = minimal_polynomial_of_var(big, base, n);
    std::vector<poly<K>> coeffs;
    for (unsigned j = 0; j <= mp.degree; ++j)
        coeffs.push_back(coefficient_of_power(mp.f, n, j).restricted(n));
    return coeffs;
}

// dim_K of B ⊗ K over the fraction field of the base, computed fraction-free
// from the fiber parts of the block-order leading ideal, then cross-checked
// by random specializations of the base.
template <class K>
std::uint64_t generic_rank(const ideal<K>& relation, const std::vector<unsigned>& base_vars,
                           const std::vector<unsigned>& fiber_vars, std::mt19937_64& rng,
                           unsigned agreements_needed = 3, unsigned attempt_cap = 20) {
    unsigned n = relation.nvars();
    if (fiber_vars.empty()) return 1;
    auto ord = monomial_order::block_elim(fiber_vars, n);
    std::vector<monomial> fiber_leads;
    for (const auto& m : relation.leading_monomials(ord)) {
        std::vector<unsigned> e(n, 0u);
        bool any = false;
        for (unsigned v : fiber_vars)
            if (m[v]) {
                e[v] = m[v];
                any = true;
            }
        if (any) fiber_leads.push_back(monomial(std::move(e)));
    }
    fiber_leads = minimal_monomial_generators(fiber_leads);

    // Standard fiber monomials inside the pure-power box.
    std::vector<unsigned> cap;
    for (unsigned v : fiber_vars) {
        unsigned c = 0;
        for (const auto& m : fiber_leads) {
            bool pure = m[v] > 0;
            for (unsigned j = 0; pure && j < n; ++j)
                if (j != v && m[j]) pure = false;
            if (pure) {
                c = m[v];
                break;
            }
        }
        if (c == 0)
            throw contract_error("generic_rank: projection to the base is not finite");
        cap.push_back(c);
    }
    std::uint64_t count = 0;
    std::vector<unsigned> e(fiber_vars.size(), 0);
    auto divisible = [&]() {
        for (const auto& m : fiber_leads) {
            bool div = true;
            for (std::size_t i = 0; i < fiber_vars.size() && div; ++i)
                if (m[fiber_vars[i]] > e[i]) div = false;
            if (div) return true;
        }
        return false;
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == fiber_vars.size()) {
            if (!divisible()) ++count;
            return;
        }
        for (unsigned k = 0; k < cap[i]; ++k) {
            e[i] = k;
            self(self, i + 1);
        }
        e[i] = 0;
    };
    rec(rec, 0);

    // Specialization cross-checks.
    unsigned agree = 0;
    for (unsigned t = 0; t < attempt_cap && agree < agreements_needed; ++t) {
        std::vector<poly<K>> images;
        for (unsigned i = 0; i < n; ++i) images.push_back(poly<K>::variable(n, relation.ctx(), i));
        for (unsigned b : base_vars)
            images[b] = poly<K>::constant(n, relation.ctx(), random_field_elem(relation.ctx(), rng));
        std::vector<poly<K>> spec_gens;
        for (const auto& g : relation.gens()) spec_gens.push_back(g.substitute(images));
        // Pin the base coordinates so the quotient is the scheme fiber.
        for (unsigned b : base_vars)
            spec_gens.push_back(poly<K>::variable(n, relation.ctx(), b) - images[b]);
        ideal<K> specialized(n, relation.ctx(), std::move(spec_gens));
        try {
            if (quotient_vector_space_dim(specialized) == count) ++agree;
        } catch (const contract_error&) {
            // degenerate draw; retry
        }
    }
    if (agree < agreements_needed)
        throw genericity_error("generic_rank: specializations kept disagreeing with the "
                               "fraction-free count after " + std::to_string(attempt_cap) +
                               " draws");
    return count;
}

// Full cover construction: normalization skeleton + minimal polynomials of
// every fiber variable + generic rank.
template <class K>
cover_presentation<K> build_cover(const ideal<K>& J, bool graded, std::mt19937_64& rng) {
    nn_skeleton<K> sk = noether_normalization(J, graded, rng);
    cover_presentation<K> cov;
    cov.nvars = J.nvars();
    cov.ctx = J.ctx();
    cov.change = sk.change;
    cov.relation = sk.transformed;
    cov.base_vars = sk.base_vars;
    cov.fiber_vars = sk.fiber_vars;
    cov.dim = sk.dim;
    cov.D = 1;
    for (unsigned v : cov.fiber_vars) {
        auto mp = minimal_polynomial_of_var(cov.relation, cov.base_vars, v);
        cov.D *= mp.degree;
        cov.min_polys.push_back(std::move(mp));
    }
    cov.rank = generic_rank(cov.relation, cov.base_vars, cov.fiber_vars, rng);
    return cov;
}

// Prescribed base/fiber split (the problem file's cover block).
template <class K>
cover_presentation<K> build_cover_with_base(const ideal<K>& J, std::vector<unsigned> base,
                                            std::mt19937_64& rng) {
    std::sort(base.begin(), base.end());
    cover_presentation<K> cov;
    cov.nvars = J.nvars();
    cov.ctx = J.ctx();
    matrix<K> id(J.nvars(), J.nvars(), J.ctx());
    for (unsigned i = 0; i < J.nvars(); ++i) id.at(i, i) = J.ctx().one();
    cov.change = id;
    cov.relation = J;
    cov.base_vars = base;
    for (unsigned i = 0; i < J.nvars(); ++i)
        if (!std::binary_search(base.begin(), base.end(), i)) cov.fiber_vars.push_back(i);
    if (!finite_over_base(J, cov.fiber_vars))
        throw contract_error("cover: the declared base does not give a finite projection");
    cov.dim = ideal_dimension(J);
    cov.D = 1;
    for (unsigned v : cov.fiber_vars) {
        auto mp = minimal_polynomial_of_var(cov.relation, cov.base_vars, v);
        cov.D *= mp.degree;
        cov.min_polys.push_back(std::move(mp));
    }
    cov.rank = generic_rank(cov.relation, cov.base_vars, cov.fiber_vars, rng);
    return cov;
}

// B' = S[V_1..V_m]/<f_1(V_1), ..., f_m(V_m)>, finite and free of rank D.
// Fiber variables with linear minimal polynomial stay as degree-1
// hypersurfaces (equivalent to substituting them away, but keeps the common
// ambient ring).
template <class K>
ci_scheme<K> ci_approximation(const cover_presentation<K>& cov) {
    ci_scheme<K> ci;
    ci.nvars = cov.nvars;
    ci.ctx = cov.ctx;
    ci.D = 1;
    std::vector<poly<K>> gens;
    auto ord = monomial_order::grevlex(cov.nvars);
    for (const auto& mp : cov.min_polys) {
        if (!cov.relation.contains(mp.f, ord))
            throw internal_error("ci_approximation: minimal polynomial escaped the relation ideal");
        gens.push_back(mp.f);
        ci.hypersurfaces.push_back(mp);
        ci.D *= mp.degree;
    }
    ci.ci_ideal = ideal<K>(cov.nvars, cov.ctx, std::move(gens));
    return ci;
}

// The multiplicity-D locus of the CI scheme: sum of the hypersurface strata
// of the minimal polynomials at their full degrees.
template <class K>
ideal<K> theorem16_locus(const ci_scheme<K>& ci) {
    std::vector<poly<K>> gens;
    for (const auto& h : ci.hypersurfaces) {
        auto S = hypersurface_stratum_ideal(h.f, h.degree);
        for (const auto& g : S.gens()) gens.push_back(g);
    }
    return ideal<K>(ci.nvars, ci.ctx, std::move(gens));
}

// ---------------------------------------------------------------------------
// Pointwise verification over GF(q).
// ---------------------------------------------------------------------------

struct point_set_report {
    std::vector<std::vector<fp>> top_B;      // F_n(B)
    std::vector<std::vector<fp>> top_CI;     // F_D(B')
    std::vector<std::vector<fp>> locus;      // zero set of theorem16_locus
    bool equal_B_CI = false;
    bool equal_CI_locus = false;
    std::vector<std::string> witnesses;
    bool pass = false;
};

inline std::string format_point(const std::vector<fp>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i].value());
    }
    return s + ")";
}

// F_n(B) = F_D(B') = zero set of the theorem-16 locus, as point sets.
inline point_set_report verify_locus_equality(const cover_presentation<fp>& cov,
                                              const ci_scheme<fp>& ci,
                                              const oracle_limits& lim = {}) {
    point_set_report r;
    auto tb = enumerate_points(cov.relation, lim);
    for (const auto& p : tb.points)
        if (mult_oracle(cov.relation, p, lim).multiplicity == cov.rank) r.top_B.push_back(p);
    auto tc = enumerate_points(ci.ci_ideal, lim);
    for (const auto& p : tc.points)
        if (mult_oracle(ci.ci_ideal, p, lim).multiplicity == ci.D) r.top_CI.push_back(p);
    ideal<fp> locus = theorem16_locus(ci);
    auto tl = enumerate_points(locus, lim);
    r.locus = tl.points;
    r.equal_B_CI = (r.top_B == r.top_CI);
    r.equal_CI_locus = (r.top_CI == r.locus);
    r.pass = r.equal_B_CI && r.equal_CI_locus;
    if (!r.equal_B_CI) {
        for (const auto& p : r.top_B)
            if (std::find(r.top_CI.begin(), r.top_CI.end(), p) == r.top_CI.end())
                r.witnesses.push_back("F_n(B) point not in F_D(B'): " + format_point(p));
        for (const auto& p : r.top_CI)
            if (std::find(r.top_B.begin(), r.top_B.end(), p) == r.top_B.end())
                r.witnesses.push_back("F_D(B') point not in F_n(B): " + format_point(p));
    }
    if (!r.equal_CI_locus) {
        for (const auto& p : r.top_CI)
            if (std::find(r.locus.begin(), r.locus.end(), p) == r.locus.end())
                r.witnesses.push_back("F_D(B') point off the stratum locus: " + format_point(p));
        for (const auto& p : r.locus)
            if (std::find(r.top_CI.begin(), r.top_CI.end(), p) == r.top_CI.end())
                r.witnesses.push_back("stratum locus point not in F_D(B'): " + format_point(p));
    }
    return r;
}

struct dimension_drop_report {
    bool hypothesis_a_holds = false;
    std::vector<std::string> hypothesis_witnesses;
    unsigned b = 0;                     // multiplicity bound of H_b
    std::uint64_t s = 0;                // max multiplicity on Bbar'
    bool sets_equal = false;            // F_n(B) == F_s(Bbar')
    std::vector<std::string> witnesses;
    std::string sequences_checked = "stage 0 only (no blow-up sequence supplied)";
    bool pass = false;
};

// Lemma-5.7 style check: hypothesis (a) pointwise, then F_n(B) = F_s(Bbar')
// for Bbar' = B'/<g_b>.
inline dimension_drop_report dimension_drop_check(const cover_presentation<fp>& cov,
                                                  const ci_scheme<fp>& ci, const poly<fp>& g_b,
                                                  const oracle_limits& lim = {}) {
    dimension_drop_report r;
    // g_b must live on the base and be monic of degree >= 2 in a base variable.
    unsigned dist_var = cov.nvars;
    unsigned b = 0;
    for (auto it = cov.base_vars.rbegin(); it != cov.base_vars.rend(); ++it) {
        unsigned v = *it;
        unsigned dv = g_b.degree_in(v);
        if (dv < 2) continue;
        poly<fp> lead = coefficient_of_power(g_b, v, dv);
        if (lead.is_constant() && lead.constant_value().is_one()) {
            dist_var = v;
            b = dv;
            break;
        }
    }
    for (unsigned v : cov.fiber_vars)
        if (g_b.uses_variable(v))
            throw contract_error("dimension_drop_check: g_b must have coefficients in the base ring");
    if (dist_var == cov.nvars)
        throw contract_error(
            "dimension_drop_check: g_b must be monic of degree >= 2 in a base variable");
    r.b = b;

    // F_n(B), and hypothesis (a): its base projections have multiplicity b on H_b.
    auto tb = enumerate_points(cov.relation, lim);
    std::vector<std::vector<fp>> top_B;
    for (const auto& p : tb.points)
        if (mult_oracle(cov.relation, p, lim).multiplicity == cov.rank) top_B.push_back(p);
    r.hypothesis_a_holds = true;
    for (const auto& p : top_B) {
        if (order_at_point(g_b, p) < b) {
            r.hypothesis_a_holds = false;
            r.hypothesis_witnesses.push_back("delta(F_n(B)) point off F_b(H_b): " + format_point(p));
        }
    }
    if (!r.hypothesis_a_holds) return r;  // hypothesis violation report, not an error

    // Bbar' = B'/<g_b>.
    std::vector<poly<fp>> gens = ci.ci_ideal.gens();
    gens.push_back(g_b);
    ideal<fp> bbar(cov.nvars, cov.ctx, std::move(gens));
    auto tbb = enumerate_points(bbar, lim);
    std::vector<std::pair<std::vector<fp>, std::uint64_t>> pts;
    std::uint64_t s = 0;
    for (const auto& p : tbb.points) {
        auto m = mult_oracle(bbar, p, lim).multiplicity;
        s = std::max(s, m);
        pts.push_back({p, m});
    }
    r.s = s;
    std::vector<std::vector<fp>> top_s;
    for (const auto& [p, m] : pts)
        if (m == s) top_s.push_back(p);
    r.sets_equal = (top_B == top_s);
    if (!r.sets_equal) {
        for (const auto& p : top_B)
            if (std::find(top_s.begin(), top_s.end(), p) == top_s.end())
                r.witnesses.push_back("F_n(B) point not in F_s(Bbar'): " + format_point(p));
        for (const auto& p : top_s)
            if (std::find(top_B.begin(), top_B.end(), p) == top_B.end())
                r.witnesses.push_back("F_s(Bbar') point not in F_n(B): " + format_point(p));
    }
    r.pass = r.hypothesis_a_holds && r.sets_equal;
    return r;
}

}  // namespace equimult

#endif
