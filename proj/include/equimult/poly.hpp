#ifndef EQUIMULT_POLY_HPP
#define EQUIMULT_POLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"
#include "order.hpp"

namespace equimult {

// Sparse multivariate polynomial with exact coefficients. Terms are kept
// sorted descending under the canonical structural order, with no zero
// coefficients, so iteration is deterministic everywhere.
template <class K>
class poly {
  public:
    using field_type = K;
    using ctx_type = field_ctx<K>;
    using term = std::pair<monomial, K>;

    poly() = default;
    poly(unsigned nvars, ctx_type ctx) : nvars_(nvars), ctx_(ctx) {}

    static poly zero(unsigned nvars, ctx_type ctx) { return poly(nvars, ctx); }

    static poly constant(unsigned nvars, ctx_type ctx, const K& c) {
        poly p(nvars, ctx);
        if (!c.is_zero()) p.terms_.push_back({monomial(nvars), c});
        return p;
    }

    static poly variable(unsigned nvars, ctx_type ctx, unsigned i) {
        poly p(nvars, ctx);
        p.terms_.push_back({monomial::var(nvars, i), ctx.one()});
        return p;
    }

    static poly from_term(unsigned nvars, ctx_type ctx, const monomial& m, const K& c) {
        poly p(nvars, ctx);
        if (!c.is_zero()) p.terms_.push_back({m, c});
        return p;
    }

    // Build from an unsorted term list (merging duplicates, dropping zeros).
    static poly from_terms(unsigned nvars, ctx_type ctx, std::vector<term> ts) {
        std::map<monomial, K, canonical_less> acc;
        for (auto& [m, c] : ts) {
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(m, c);
            else
                it->second += c;
        }
        poly p(nvars, ctx);
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (!it->second.is_zero()) p.terms_.push_back({it->first, it->second});
        return p;
    }

    unsigned nvars() const { return nvars_; }
    ctx_type ctx() const { return ctx_; }
    const std::vector<term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

    K constant_value() const {
        for (const auto& [m, c] : terms_)
            if (m.is_one()) return c;
        return ctx_.zero();
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    // Minimal total degree over terms (the order at the origin).
    unsigned min_degree() const {
        unsigned d = terms_.empty() ? 0 : terms_[0].first.degree();
        for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        unsigned d = terms_[0].first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    // Homogeneous component of the given degree.
    poly homogeneous_part(unsigned d) const {
        poly r(nvars_, ctx_);
        for (const auto& [m, c] : terms_)
            if (m.degree() == d) r.terms_.push_back({m, c});
        return r;
    }

    std::int64_t min_weighted_degree(const std::vector<std::int64_t>& w) const {
        std::int64_t d = 0;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            auto wd = m.weighted_degree(w);
            if (first || wd < d) d = wd;
            first = false;
        }
        return d;
    }

    poly operator-() const {
        poly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend poly operator+(const poly& a, const poly& b) { return merge(a, b, false); }
    friend poly operator-(const poly& a, const poly& b) { return merge(a, b, true); }

    poly& operator+=(const poly& o) { *this = *this + o; return *this; }
    poly& operator-=(const poly& o) { *this = *this - o; return *this; }

    friend poly operator*(const poly& a, const poly& b) {
        std::map<monomial, K, canonical_less> acc;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                monomial m = ma * mb;
                K c = ca * cb;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), std::move(c));
                else
                    it->second += c;
            }
        poly r(a.nvars_, a.ctx_);
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (!it->second.is_zero()) r.terms_.push_back({it->first, it->second});
        return r;
    }

    poly& operator*=(const poly& o) { *this = *this * o; return *this; }

    poly scaled(const K& c) const {
        if (c.is_zero()) return poly(nvars_, ctx_);
        poly r(*this);
        for (auto& [m, cc] : r.terms_) cc = cc * c;
        return r;
    }

    poly mul_term(const monomial& m, const K& c) const {
        if (c.is_zero()) return poly(nvars_, ctx_);
        poly r(nvars_, ctx_);
        r.terms_.reserve(terms_.size());
        for (const auto& [mm, cc] : terms_) r.terms_.push_back({mm * m, cc * c});
        // Multiplying by a fixed monomial preserves the canonical sort.
        return r;
    }

    poly pow(unsigned e) const {
        poly r = constant(nvars_, ctx_, ctx_.one());
        poly base(*this);
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    K evaluate(const std::vector<K>& pt) const {
        K acc = ctx_.zero();
        for (const auto& [m, c] : terms_) {
            K t = c;
            for (unsigned i = 0; i < nvars_; ++i)
                for (unsigned k = 0; k < m[i]; ++k) t *= pt[i];
            acc += t;
        }
        return acc;
    }

    // Substitute each variable by the given polynomial (all in the same
    // target ring). Uses cached variable powers.
    poly substitute(const std::vector<poly>& images) const {
        unsigned tn = images.empty() ? nvars_ : images[0].nvars();
        ctx_type tc = images.empty() ? ctx_ : images[0].ctx();
        std::vector<std::vector<poly>> pows(nvars_);  // pows[i][k] = images[i]^k
        poly acc(tn, tc);
        for (const auto& [m, c] : terms_) {
            poly t = constant(tn, tc, c);
            for (unsigned i = 0; i < nvars_; ++i) {
                unsigned e = m[i];
                if (!e) continue;
                auto& pw = pows[i];
                if (pw.empty()) pw.push_back(constant(tn, tc, tc.one()));
                while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
                t = t * pw[e];
            }
            acc += t;
        }
        return acc;
    }

    // f(x + p): translation moving the point p to the origin.
    poly translated(const std::vector<K>& pt) const {
        std::vector<poly> images;
        images.reserve(nvars_);
        for (unsigned i = 0; i < nvars_; ++i) {
            poly xi = variable(nvars_, ctx_, i);
            if (!pt[i].is_zero()) xi += constant(nvars_, ctx_, pt[i]);
            images.push_back(std::move(xi));
        }
        return substitute(images);
    }

    // Embed into a ring with more variables (same leading indices).
    poly extended(unsigned new_nvars) const {
        poly r(new_nvars, ctx_);
        r.terms_.reserve(terms_.size());
        for (const auto& [m, c] : terms_) {
            std::vector<unsigned> e = m.exps();
            e.resize(new_nvars, 0u);
            r.terms_.push_back({monomial(std::move(e)), c});
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const term& a, const term& b) { return canonical_cmp(a.first, b.first) > 0; });
        return r;
    }

    // Drop trailing variables; they must not occur.
    poly restricted(unsigned new_nvars) const {
        poly r(new_nvars, ctx_);
        for (const auto& [m, c] : terms_) {
            for (unsigned i = new_nvars; i < nvars_; ++i)
                if (m[i]) throw contract_error("restricted(): dropped variable occurs in polynomial");
            std::vector<unsigned> e(m.exps().begin(), m.exps().begin() + new_nvars);
            r.terms_.push_back({monomial(std::move(e)), c});
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const term& a, const term& b) { return canonical_cmp(a.first, b.first) > 0; });
        return r;
    }

    bool uses_variable(unsigned i) const {
        for (const auto& [m, c] : terms_)
            if (m[i]) return true;
        return false;
    }

    unsigned degree_in(unsigned i) const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
        return d;
    }

    // Leading term under a Groebner order (scans all terms; polynomials here
    // are small).
    const term& leading_term(const monomial_order& ord) const {
        if (terms_.empty()) throw contract_error("leading term of zero polynomial");
        const term* best = &terms_[0];
        for (const auto& t : terms_)
            if (ord.greater(t.first, best->first)) best = &t;
        return *best;
    }

    friend bool operator==(const poly& a, const poly& b) {
        if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second) return false;
        return true;
    }
    friend bool operator!=(const poly& a, const poly& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (s.empty()) {
                if (neg) s += "-";
            } else {
                s += neg ? " - " : " + ";
            }
            if (neg) cs = cs.substr(1);
            if (m.is_one()) {
                s += cs;
            } else if (cs == "1") {
                s += m.str(names);
            } else {
                s += cs + "*" + m.str(names);
            }
        }
        return s;
    }

  private:
    static poly merge(const poly& a, const poly& b, bool subtract) {
        poly r(a.nvars_, a.ctx_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = canonical_cmp(a.terms_[i].first, b.terms_[j].first);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                auto t = b.terms_[j++];
                if (subtract) t.second = -t.second;
                r.terms_.push_back(std::move(t));
            } else {
                K v = subtract ? K(a.terms_[i].second - b.terms_[j].second)
                               : K(a.terms_[i].second + b.terms_[j].second);
                if (!v.is_zero()) r.terms_.push_back({a.terms_[i].first, std::move(v)});
                ++i;
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) {
            auto t = b.terms_[j];
            if (subtract) t.second = -t.second;
            r.terms_.push_back(std::move(t));
        }
        return r;
    }

    unsigned nvars_ = 0;
    ctx_type ctx_{};
    std::vector<term> terms_;
};

using qpoly = poly<qq>;
using fpoly = poly<fp>;

}  // namespace equimult

#endif
