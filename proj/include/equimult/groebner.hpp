#ifndef EQUIMULT_GROEBNER_HPP
#define EQUIMULT_GROEBNER_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "budget.hpp"
#include "poly.hpp"

namespace equimult {

// Full normal form: no term of the remainder is divisible by a leading
// monomial of the basis. Deterministic divisor choice (first match in basis
// order).
template <class K>
poly<K> normal_form(const poly<K>& f, const std::vector<poly<K>>& basis, const monomial_order& ord) {
    if (basis.empty()) return f;
    struct lead {
        monomial m;
        K c;
    };
    std::vector<lead> leads;
    leads.reserve(basis.size());
    for (const auto& g : basis) {
        const auto& lt = g.leading_term(ord);
        leads.push_back({lt.first, lt.second});
    }
    poly<K> rem(f.nvars(), f.ctx());
    poly<K> cur = f;
    while (!cur.is_zero()) {
        budget_tick();
        const auto& lt = cur.leading_term(ord);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!leads[i].m.divides(lt.first)) continue;
            monomial q = leads[i].m.quotient_of(lt.first);
            K c = lt.second / leads[i].c;
            cur -= basis[i].mul_term(q, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem += poly<K>::from_term(f.nvars(), f.ctx(), lt.first, lt.second);
            cur -= poly<K>::from_term(f.nvars(), f.ctx(), lt.first, lt.second);
        }
    }
    return rem;
}

template <class K>
poly<K> s_polynomial(const poly<K>& f, const poly<K>& g, const monomial_order& ord) {
    const auto& lf = f.leading_term(ord);
    const auto& lg = g.leading_term(ord);
    monomial l = lcm(lf.first, lg.first);
    return f.mul_term(lf.first.quotient_of(l), lf.second.inv()) -
           g.mul_term(lg.first.quotient_of(l), lg.second.inv());
}

// Buchberger with normal selection (pairs by lcm under the order) and the
// coprimality + chain criteria. Returns the unique reduced basis: minimal,
// monic, fully interreduced — byte-identical for identical input and order.
template <class K>
std::vector<poly<K>> groebner_basis(std::vector<poly<K>> gens, const monomial_order& ord) {
    std::vector<poly<K>> g;
    for (auto& p : gens)
        if (!p.is_zero()) g.push_back(std::move(p));
    if (g.empty()) return g;

    struct pair_rec {
        monomial l;
        std::size_t i, j;
    };
    auto pair_less = [&ord](const pair_rec& a, const pair_rec& b) {
        int c = ord.cmp(a.l, b.l);
        if (c != 0) return c < 0;  // smaller lcm first: normal strategy
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    };

    std::vector<pair_rec> queue;
    std::set<std::pair<std::size_t, std::size_t>> done;
    auto push_pairs_for = [&](std::size_t j) {
        const auto& ltj = g[j].leading_term(ord).first;
        for (std::size_t i = 0; i < j; ++i) {
            const auto& lti = g[i].leading_term(ord).first;
            queue.push_back({lcm(lti, ltj), i, j});
        }
    };
    for (std::size_t j = 0; j < g.size(); ++j) push_pairs_for(j);

    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        pair_rec pr = *it;
        queue.erase(it);
        done.insert({pr.i, pr.j});
        budget_tick();

        const auto& li = g[pr.i].leading_term(ord).first;
        const auto& lj = g[pr.j].leading_term(ord).first;
        // Buchberger's first criterion.
        if (li.coprime(lj)) continue;
        // Chain criterion: some k with LT(g_k) | lcm and both side pairs done.
        bool skip = false;
        for (std::size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!g[k].leading_term(ord).first.divides(pr.l)) continue;
            auto key1 = std::minmax(pr.i, k);
            auto key2 = std::minmax(pr.j, k);
            if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second})) skip = true;
        }
        if (skip) continue;

        poly<K> s = s_polynomial(g[pr.i], g[pr.j], ord);
        poly<K> r = normal_form(s, g, ord);
        if (!r.is_zero()) {
            g.push_back(std::move(r));
            push_pairs_for(g.size() - 1);
        }
    }

    // Minimalize: drop elements whose lead is divisible by another lead.
    std::vector<bool> keep(g.size(), true);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& li = g[i].leading_term(ord).first;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j || !keep[j]) continue;
            const auto& lj = g[j].leading_term(ord).first;
            if (lj.divides(li) && (li != lj || j < i)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<poly<K>> min;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (keep[i]) min.push_back(g[i]);

    // Tail-reduce each element against the others and normalize monic.
    std::vector<poly<K>> red;
    for (std::size_t i = 0; i < min.size(); ++i) {
        std::vector<poly<K>> others;
        for (std::size_t j = 0; j < min.size(); ++j)
            if (j != i) others.push_back(min[j]);
        poly<K> r = others.empty() ? min[i] : normal_form(min[i], others, ord);
        if (r.is_zero()) continue;
        const auto& lt = r.leading_term(ord);
        red.push_back(r.scaled(lt.second.inv()));
    }
    // Canonical output order: by leading monomial, descending.
    std::sort(red.begin(), red.end(), [&ord](const poly<K>& a, const poly<K>& b) {
        return ord.greater(a.leading_term(ord).first, b.leading_term(ord).first);
    });
    return red;
}

// Ideal with cached reduced Groebner bases keyed by order. Generators are
// immutable after construction; copies share the cache.
template <class K>
class ideal {
  public:
    ideal() = default;
    ideal(unsigned nvars, field_ctx<K> ctx) : nvars_(nvars), ctx_(ctx), cache_(std::make_shared<cache_t>()) {}
    ideal(unsigned nvars, field_ctx<K> ctx, std::vector<poly<K>> gens)
        : nvars_(nvars), ctx_(ctx), cache_(std::make_shared<cache_t>()) {
        for (auto& g : gens)
            if (!g.is_zero()) gens_.push_back(std::move(g));
    }

    unsigned nvars() const { return nvars_; }
    field_ctx<K> ctx() const { return ctx_; }
    const std::vector<poly<K>>& gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    const std::vector<poly<K>>& groebner(const monomial_order& ord) const {
        std::string k = ord.key();
        {
            std::lock_guard<std::mutex> lk(cache_->mu);
            auto it = cache_->bases.find(k);
            if (it != cache_->bases.end()) return it->second;
        }
        auto gb = groebner_basis(gens_, ord);
        std::lock_guard<std::mutex> lk(cache_->mu);
        return cache_->bases.emplace(std::move(k), std::move(gb)).first->second;
    }

    bool contains(const poly<K>& f, const monomial_order& ord) const {
        if (f.is_zero()) return true;
        return normal_form(f, groebner(ord), ord).is_zero();
    }

    bool is_unit(const monomial_order& ord) const {
        const auto& gb = groebner(ord);
        return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
    }

    std::vector<monomial> leading_monomials(const monomial_order& ord) const {
        std::vector<monomial> lm;
        for (const auto& g : groebner(ord)) lm.push_back(g.leading_term(ord).first);
        return lm;
    }

    bool is_homogeneous_gens() const {
        return std::all_of(gens_.begin(), gens_.end(), [](const poly<K>& g) { return g.is_homogeneous(); });
    }

  private:
    struct cache_t {
        std::mutex mu;
        std::map<std::string, std::vector<poly<K>>> bases;
    };

    unsigned nvars_ = 0;
    field_ctx<K> ctx_{};
    std::vector<poly<K>> gens_;
    std::shared_ptr<cache_t> cache_;
};

}  // namespace equimult

#endif
