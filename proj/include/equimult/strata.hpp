#ifndef EQUIMULT_STRATA_HPP
#define EQUIMULT_STRATA_HPP

#include <optional>
#include <string>
#include <vector>

#include "cover.hpp"
#include "subspace.hpp"

namespace equimult {

// ---------------------------------------------------------------------------
// Multiplicity strata: hypersurface strata via Hasse derivatives (see
// hasse.hpp for the stratum ideal builder), cone strata as linear subspaces,
// translation invariance, and the factorization check.
// ---------------------------------------------------------------------------

// Largest e whose order->=e stratum is nonempty (radical != <1>), with the
// stratum ideal. e is bounded by the total degree.
template <class K>
std::pair<unsigned, ideal<K>> max_multiplicity_locus_hypersurface(const poly<K>& f) {
    if (f.is_zero() || f.is_constant())
        throw contract_error("max_multiplicity_locus: constant hypersurface has no locus");
    for (unsigned e = f.total_degree();; --e) {
        ideal<K> S = hypersurface_stratum_ideal(f, e);
        if (!S.is_unit(monomial_order::grevlex(f.nvars()))) return {e, S};
        if (e == 1) break;
    }
    throw internal_error("max_multiplicity_locus: no proper stratum found for a non-constant f");
}

// ---------------------------------------------------------------------------
// Linear part of the radical.
//
// For an ideal G whose radical is generated by linear forms, the cutting
// forms are recovered by two sound enrichment moves, iterated to a fixed
// point:
//   - Frobenius kernels (char p): {l linear : l^q ∈ G} is a k-subspace,
//     detected as the kernel of c -> sum_i c_i NF(x_i^q, G); q runs over
//     p-powers and stabilizes once it reaches the maximal generator degree.
//   - root lifting (any char): a reduced-basis element that is an exact k-th
//     power h^k contributes its root h, and a monomial contributes its
//     support product.
// Both moves only add elements of sqrt(G), so the candidate never
// overshoots; the caller verifies the containment G ⊆ <forms> afterwards.
// ---------------------------------------------------------------------------

// Exact k-th root of a polynomial by leading-term peeling; nullopt if g is
// not a perfect k-th power.
template <class K>
std::optional<poly<K>> poly_power_root(const poly<K>& g, unsigned k) {
    if (g.is_zero() || k < 2) return std::nullopt;
    auto ord = monomial_order::grevlex(g.nvars());
    const auto& lt = g.leading_term(ord);
    std::vector<unsigned> e = lt.first.exps();
    for (auto& x : e) {
        if (x % k) return std::nullopt;
        x /= k;
    }
    // leading-coefficient root among small integers (corpus coefficients)
    K root_c = g.ctx().one();
    bool root_found = false;
    for (long cand = -8; cand <= 8 && !root_found; ++cand) {
        if (cand == 0) continue;
        K c = g.ctx().from_long(cand);
        K pw = c;
        for (unsigned i = 1; i < k; ++i) pw *= c;
        if (pw == lt.second) {
            root_c = c;
            root_found = true;
        }
    }
    if (!root_found && g.ctx().characteristic() > 0) {
        // brute force over the prime field
        for (long cand = 1; cand < static_cast<long>(g.ctx().characteristic()) && !root_found;
             ++cand) {
            K c = g.ctx().from_long(cand);
            K pw = c;
            for (unsigned i = 1; i < k; ++i) pw *= c;
            if (pw == lt.second) {
                root_c = c;
                root_found = true;
            }
        }
    }
    if (!root_found) return std::nullopt;
    monomial lead_root(e);
    poly<K> h = poly<K>::from_term(g.nvars(), g.ctx(), lead_root, root_c);
    K denom_c = g.ctx().from_long(static_cast<long>(k));
    if (denom_c.is_zero()) {
        // char | k: peeling needs the Frobenius route instead
        poly<K> cand = h;
        return (cand.pow(k) == g) ? std::optional<poly<K>>(cand) : std::nullopt;
    }
    for (int guard = 0; guard < 200; ++guard) {
        poly<K> diff = g - h.pow(k);
        if (diff.is_zero()) return h;
        const auto& dt = diff.leading_term(ord);
        // next term t obeys k * lead(h)^(k-1) * t = dt
        monomial dm = lead_root;
        for (unsigned i = 1; i + 1 < k; ++i) dm = dm * lead_root;
        K dc = root_c;
        for (unsigned i = 1; i + 1 < k; ++i) dc *= root_c;
        dc *= denom_c;
        if (!dm.divides(dt.first)) return std::nullopt;
        h += poly<K>::from_term(g.nvars(), g.ctx(), dm.quotient_of(dt.first), dt.second / dc);
    }
    return std::nullopt;
}

// One sound shrink step toward the radical: support product for monomials,
// else the largest exact root.
template <class K>
std::optional<poly<K>> radical_shrink(const poly<K>& g) {
    if (g.is_zero() || g.is_constant()) return std::nullopt;
    if (g.size() == 1) {
        const auto& [m, c] = g.terms()[0];
        std::vector<unsigned> e(g.nvars(), 0u);
        bool change = false;
        for (unsigned i = 0; i < g.nvars(); ++i) {
            e[i] = m[i] ? 1 : 0;
            if (m[i] > 1) change = true;
        }
        if (!change) return std::nullopt;
        return poly<K>::from_term(g.nvars(), g.ctx(), monomial(e), g.ctx().one());
    }
    for (unsigned k = g.total_degree(); k >= 2; --k) {
        if (g.total_degree() % k) continue;
        if (auto h = poly_power_root(g, k)) return h;
    }
    return std::nullopt;
}

template <class K>
subspace<K> linear_radical_candidate(const ideal<K>& G) {
    unsigned n = G.nvars();
    auto ord = monomial_order::grevlex(n);
    field_ctx<K> ctx = G.ctx();
    std::uint32_t p = ctx.characteristic();

    std::vector<poly<K>> gens = G.gens();
    std::vector<std::vector<K>> forms;
    for (int round = 0; round < 16; ++round) {
        auto gb = groebner_basis(gens, ord);
        if (gb.empty()) return subspace<K>::from_cutting_forms(n, ctx, {});
        if (gb.size() == 1 && gb[0].is_constant())
            throw contract_error("linear_radical_candidate: unit ideal");

        unsigned maxdeg = 1;
        for (const auto& g : gb) maxdeg = std::max(maxdeg, g.total_degree());

        auto kernel_for_q = [&](std::uint64_t q) {
            std::vector<poly<K>> nf;
            std::map<monomial, std::size_t, canonical_less> row_of;
            for (unsigned i = 0; i < n; ++i) {
                poly<K> xq = poly<K>::from_term(
                    n, ctx, monomial::var(n, i, static_cast<unsigned>(q)), ctx.one());
                nf.push_back(normal_form(xq, gb, ord));
                for (const auto& [m, c] : nf.back().terms()) row_of.emplace(m, row_of.size());
            }
            matrix<K> M(row_of.size(), n, ctx);
            for (unsigned i = 0; i < n; ++i)
                for (const auto& [m, c] : nf[i].terms()) M.at(row_of.at(m), i) = c;
            return M.kernel_basis();
        };

        if (p == 0) {
            forms = kernel_for_q(1);
        } else {
            std::uint64_t q = 1;
            std::vector<std::vector<K>> prev;
            for (;;) {
                forms = kernel_for_q(q);
                bool big_enough = q >= maxdeg;
                bool stable = !prev.empty() && forms.size() == prev.size();
                if (big_enough && stable) break;
                if (q > (1ull << 24)) break;  // defensive cap; verification decides
                prev = forms;
                q *= p;
            }
        }

        // Enrich with exact roots of basis elements; stop at a fixed point.
        bool added = false;
        for (const auto& g : gb) {
            if (auto h = radical_shrink(g)) {
                if (!normal_form(*h, gb, ord).is_zero()) {
                    gens.push_back(*h);
                    added = true;
                }
            }
        }
        // The kernel vectors are linear forms in sqrt(G); feeding them back
        // sharpens the next round when they are not yet members.
        for (const auto& f : forms) {
            std::vector<typename poly<K>::term> ts;
            for (unsigned i = 0; i < n; ++i)
                if (!f[i].is_zero()) ts.push_back({monomial::var(n, i), f[i]});
            poly<K> lf = poly<K>::from_terms(n, ctx, std::move(ts));
            if (!lf.is_zero() && !normal_form(lf, gb, ord).is_zero()) {
                gens.push_back(lf);
                added = true;
            }
        }
        if (!added) break;
    }
    return subspace<K>::from_cutting_forms(n, ctx, forms);
}

// Every generator of G must vanish on the candidate subspace (membership in
// the linear ideal, which is radical), or the radical was not linear.
template <class K>
bool vanishes_on_subspace(const ideal<K>& G, const subspace<K>& S) {
    auto forms = S.cutting_polys();
    if (forms.empty()) {
        for (const auto& g : G.gens())
            if (!g.is_zero()) return false;
        return true;
    }
    auto ord = monomial_order::grevlex(G.nvars());
    auto gb = groebner_basis(forms, ord);
    for (const auto& g : G.gens())
        if (!normal_form(g, gb, ord).is_zero()) return false;
    return true;
}

template <class K>
struct cone_stratum_data {
    subspace<K> stratum;        // the subspace S
    unsigned tau = 0;           // codimension of S in the ambient space
    std::uint64_t max_mult = 1; // multiplicity of the cone at the origin
};

// Highest-multiplicity stratum of a cone V(J), via the presented-algebra
// route: Noether-normalize the graded algebra, take the minimal polynomials
// F_i of the degree-one fiber generators, and intersect the full-degree
// hypersurface strata of the F_i. Over a perfect field the result is a
// linear subspace; anything else is an implementation bug, not math.
template <class K>
cone_stratum_data<K> cone_stratum(const ideal<K>& J,
                                  const std::optional<cover_presentation<K>>& given_cover,
                                  std::mt19937_64& rng) {
    if (!J.is_homogeneous_gens())
        throw contract_error("cone_stratum: homogeneous ideal required");
    unsigned n = J.nvars();

    cone_stratum_data<K> out;
    auto h = hilbert_series(J);
    if (h.dim < 0) throw contract_error("cone_stratum: unit ideal has no cone");
    out.max_mult = static_cast<std::uint64_t>(h.multiplicity);

    cover_presentation<K> cov = given_cover ? *given_cover : build_cover(J, true, rng);

    std::vector<poly<K>> stratum_gens;
    for (const auto& mp : cov.min_polys) {
        if (!mp.f.is_homogeneous())
            throw internal_error("cone_stratum: minimal polynomial of a graded cover came out "
                                 "non-homogeneous");
        auto S = hypersurface_stratum_ideal(mp.f, mp.degree);
        for (const auto& g : S.gens()) stratum_gens.push_back(g);
    }
    ideal<K> G(n, J.ctx(), std::move(stratum_gens));

    subspace<K> S_new = linear_radical_candidate(G);
    if (!vanishes_on_subspace(G, S_new))
        throw internal_error(
            "cone_stratum: extracted stratum is not a linear subspace (perfect-field theory "
            "violation; this signals a bug in the stratum extraction)");

    // Map back through the recorded linear change: points transform by the
    // substitution matrix itself.
    std::vector<std::vector<K>> basis_orig;
    for (const auto& v : S_new.basis()) {
        std::vector<K> w(n, J.ctx().zero());
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) w[i] += cov.change.at(i, j) * v[j];
        basis_orig.push_back(std::move(w));
    }
    out.stratum = subspace<K>::from_spanning_points(n, J.ctx(), basis_orig);
    out.tau = out.stratum.codim();

    // The stratum sits inside the cone.
    if (!vanishes_on_subspace(J, out.stratum))
        throw internal_error("cone_stratum: stratum escaped the cone");
    return out;
}

template <class K>
cone_stratum_data<K> cone_stratum(const ideal<K>& J, std::mt19937_64& rng) {
    return cone_stratum<K>(J, std::nullopt, rng);
}

// ---------------------------------------------------------------------------
// Translation invariance: the biggest subspace W with g(x + v) ∈ sqrt(J)
// for all v ∈ W, computed from the coefficient conditions of g(x + s) and
// verified symbolically over the span.
// ---------------------------------------------------------------------------

// Best-effort squarefree-ish replacement of a generator: monomials lose
// their exponents, perfect powers h^k are replaced by h. Exact radicals are
// out of scope; this covers the corpus shapes.
template <class K>
poly<K> reduce_generator_approx(const poly<K>& g) {
    poly<K> cur = g;
    for (int i = 0; i < 8; ++i) {
        auto h = radical_shrink(cur);
        if (!h) break;
        cur = *h;
    }
    return cur;
}

// Coefficient polynomials in s of NF(g(x+s), J k[x,s]) grouped by x-monomial.
template <class K>
std::vector<poly<K>> translation_conditions(const ideal<K>& J) {
    unsigned n = J.nvars();
    field_ctx<K> ctx = J.ctx();
    unsigned N = 2 * n;  // x_0..x_{n-1}, s_0..s_{n-1}
    std::vector<unsigned> xblock(n);
    std::iota(xblock.begin(), xblock.end(), 0u);
    auto ord = monomial_order::block_elim(xblock, N);

    std::vector<poly<K>> ext;
    for (const auto& g : J.gens()) ext.push_back(g.extended(N));
    auto gb = groebner_basis(ext, ord);

    std::vector<poly<K>> images;
    for (unsigned i = 0; i < n; ++i)
        images.push_back(poly<K>::variable(N, ctx, i) + poly<K>::variable(N, ctx, n + i));

    std::vector<poly<K>> conds;
    for (const auto& g : J.gens()) {
        poly<K> moved = g.extended(N).substitute(images);
        poly<K> nf = gb.empty() ? moved : normal_form(moved, gb, ord);
        // split by x-part; each s-coefficient must vanish on the subspace
        std::map<monomial, std::vector<typename poly<K>::term>, canonical_less> groups;
        for (const auto& [m, c] : nf.terms()) {
            std::vector<unsigned> ex(n, 0u), es(n, 0u);
            for (unsigned i = 0; i < n; ++i) {
                ex[i] = m[i];
                es[i] = m[n + i];
            }
            groups[monomial(ex)].push_back({monomial(es), c});
        }
        for (auto& [xm, ts] : groups)
            conds.push_back(poly<K>::from_terms(n, ctx, std::move(ts)));
    }
    return conds;
}

// Symbolic verification that every point of the span of `basis` is a
// sqrt(J)-invariant translation: parametrize the span with fresh u's and run
// radical membership once per generator.
template <class K>
bool verify_invariance_span(const ideal<K>& J, const std::vector<std::vector<K>>& basis) {
    if (basis.empty()) return true;
    unsigned n = J.nvars();
    unsigned r = static_cast<unsigned>(basis.size());
    unsigned N = n + r;
    std::vector<poly<K>> ext;
    for (const auto& g : J.gens()) ext.push_back(g.extended(N));
    ideal<K> Jext(N, J.ctx(), ext);
    std::vector<poly<K>> images;
    for (unsigned i = 0; i < n; ++i) {
        poly<K> img = poly<K>::variable(N, J.ctx(), i);
        for (unsigned j = 0; j < r; ++j)
            if (!basis[j][i].is_zero())
                img += poly<K>::variable(N, J.ctx(), n + j).scaled(basis[j][i]);
        images.push_back(std::move(img));
    }
    for (const auto& g : J.gens()) {
        poly<K> moved = g.extended(N).substitute(images);
        if (!radical_membership(moved, Jext)) return false;
    }
    return true;
}

template <class K>
subspace<K> translation_invariance_subspace(const ideal<K>& J, bool reduce_first) {
    ideal<K> Jw = J;
    if (reduce_first) {
        std::vector<poly<K>> gens;
        for (const auto& g : J.gens()) gens.push_back(reduce_generator_approx(g));
        Jw = ideal<K>(J.nvars(), J.ctx(), std::move(gens));
    }
    auto conds = translation_conditions(Jw);
    ideal<K> T(J.nvars(), J.ctx(), std::move(conds));
    subspace<K> W = linear_radical_candidate(T);
    if (!vanishes_on_subspace(T, W)) {
        // Conditions do not cut a linear set: shrink to what the linear
        // forms of T itself give, then re-verify below.
        std::vector<std::vector<K>> lin_forms;
        for (const auto& g : T.gens())
            if (!g.is_zero() && g.total_degree() == 1) {
                std::vector<K> row(J.nvars(), J.ctx().zero());
                for (const auto& [m, c] : g.terms())
                    for (unsigned i = 0; i < J.nvars(); ++i)
                        if (m[i]) row[i] = c;
                lin_forms.push_back(std::move(row));
            }
        W = subspace<K>::from_cutting_forms(J.nvars(), J.ctx(), lin_forms);
    }
    if (!verify_invariance_span(Jw, W.basis())) {
        std::string witness = "first basis direction of the extracted candidate";
        throw internal_error(
            "translation_invariance_subspace: solution set not linear after radical filtering "
            "(witness: " + witness + ")");
    }
    return W;
}

// ---------------------------------------------------------------------------
// Factorization check: after moving S to the span of the last dim(S)
// coordinates, sqrt(J) must be the extension of its contraction to the first
// tau variables.
// ---------------------------------------------------------------------------
template <class K>
bool factorization_check(const ideal<K>& J, const subspace<K>& S) {
    unsigned n = J.nvars();
    unsigned tau = S.codim();
    if (tau == 0) {
        // S is everything: factorization demands J have no equations at all
        for (const auto& g : J.gens())
            if (!g.is_zero()) return false;
        return true;
    }
    // Rows: cutting forms first (new u_1..u_tau), then a completion.
    matrix<K> M(0, n, J.ctx());
    for (const auto& f : S.cutting_forms()) M.append_row(f);
    for (unsigned i = 0; i < n && M.rows() < n; ++i) {
        matrix<K> probe = M;
        std::vector<K> e(n, J.ctx().zero());
        e[i] = J.ctx().one();
        probe.append_row(e);
        if (probe.rank() == probe.rows()) M.append_row(e);
    }
    // u = M x  =>  x = M^{-1} u.
    matrix<K> Minv = inverse(M);
    ideal<K> Ju = transform_ideal(J, Minv);
    std::vector<unsigned> keep(tau);
    std::iota(keep.begin(), keep.end(), 0u);
    ideal<K> E = elimination_ideal(Ju, keep);
    for (const auto& g : Ju.gens())
        if (!radical_membership(g, E)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Pointwise stratification comparison over GF(q).
// ---------------------------------------------------------------------------
struct stratum_compare_report {
    bool same_support = false;       // identical point sets
    bool partitions_equal = false;   // same grouping of common points by multiplicity
    bool max1_subset_max2 = false;   // max-mult stratum of scheme 1 inside that of scheme 2
    bool max2_subset_max1 = false;
    std::vector<std::string> witnesses;
};

inline stratum_compare_report pointwise_stratum_compare(const ideal<fp>& I1, const ideal<fp>& I2,
                                                        const oracle_limits& lim = {}) {
    if (I1.nvars() != I2.nvars())
        throw contract_error("pointwise_stratum_compare: ideals live in different rings");
    stratum_compare_report r;
    auto t1 = stratify_points(I1, lim);
    auto t2 = stratify_points(I2, lim);
    r.same_support = (t1.points == t2.points);
    if (!r.same_support) {
        for (const auto& p : t1.points)
            if (std::find(t2.points.begin(), t2.points.end(), p) == t2.points.end())
                r.witnesses.push_back("only on scheme 1: " + format_point(p));
        for (const auto& p : t2.points)
            if (std::find(t1.points.begin(), t1.points.end(), p) == t1.points.end())
                r.witnesses.push_back("only on scheme 2: " + format_point(p));
    }
    // Partition comparison on common points: equal iff equal multiplicity
    // classes (values may differ; the grouping must agree).
    std::vector<std::vector<fp>> common;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> mpairs;
    for (std::size_t i = 0; i < t1.points.size(); ++i) {
        auto it = std::find(t2.points.begin(), t2.points.end(), t1.points[i]);
        if (it == t2.points.end()) continue;
        common.push_back(t1.points[i]);
        mpairs.push_back({t1.mults[i], t2.mults[std::distance(t2.points.begin(), it)]});
    }
    r.partitions_equal = true;
    for (std::size_t i = 0; i < common.size() && r.partitions_equal; ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j) {
            bool same1 = mpairs[i].first == mpairs[j].first;
            bool same2 = mpairs[i].second == mpairs[j].second;
            if (same1 != same2) {
                r.partitions_equal = false;
                r.witnesses.push_back("partition split differs at " + format_point(common[i]) +
                                      " vs " + format_point(common[j]));
                break;
            }
        }
    // Max-stratum containments.
    std::uint64_t m1 = 0, m2 = 0;
    for (auto m : t1.mults) m1 = std::max(m1, m);
    for (auto m : t2.mults) m2 = std::max(m2, m);
    auto top1 = [&] {
        std::vector<std::vector<fp>> v;
        for (std::size_t i = 0; i < t1.points.size(); ++i)
            if (t1.mults[i] == m1) v.push_back(t1.points[i]);
        return v;
    }();
    auto top2 = [&] {
        std::vector<std::vector<fp>> v;
        for (std::size_t i = 0; i < t2.points.size(); ++i)
            if (t2.mults[i] == m2) v.push_back(t2.points[i]);
        return v;
    }();
    r.max1_subset_max2 = std::all_of(top1.begin(), top1.end(), [&](const auto& p) {
        return std::find(top2.begin(), top2.end(), p) != top2.end();
    });
    r.max2_subset_max1 = std::all_of(top2.begin(), top2.end(), [&](const auto& p) {
        return std::find(top1.begin(), top1.end(), p) != top1.end();
    });
    return r;
}

}  // namespace equimult

#endif
