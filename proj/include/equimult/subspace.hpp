#ifndef EQUIMULT_SUBSPACE_HPP
#define EQUIMULT_SUBSPACE_HPP

#include <vector>

#include "linalg.hpp"
#include "poly.hpp"

namespace equimult {

// A linear subspace of k^n through the origin, stored by independent cutting
// forms (RREF rows of the coefficient matrix), so the representation is
// canonical and comparisons are exact.
template <class K>
class subspace {
  public:
    subspace() = default;
    subspace(unsigned n, field_ctx<K> ctx) : n_(n), ctx_(ctx) {}

    static subspace full(unsigned n, field_ctx<K> ctx) { return subspace(n, ctx); }

    static subspace from_cutting_forms(unsigned n, field_ctx<K> ctx,
                                       const std::vector<std::vector<K>>& forms) {
        subspace s(n, ctx);
        s.forms_ = row_space_basis(forms, n, ctx);
        return s;
    }

    // Span of the given points (the subspace they generate); cutting forms =
    // kernel of the span matrix.
    static subspace from_spanning_points(unsigned n, field_ctx<K> ctx,
                                         const std::vector<std::vector<K>>& pts) {
        matrix<K> m(0, n, ctx);
        for (const auto& p : pts) m.append_row(p);
        subspace s(n, ctx);
        s.forms_ = row_space_basis(m.kernel_basis(), n, ctx);
        return s;
    }

    unsigned ambient() const { return n_; }
    field_ctx<K> ctx() const { return ctx_; }
    const std::vector<std::vector<K>>& cutting_forms() const { return forms_; }
    unsigned codim() const { return static_cast<unsigned>(forms_.size()); }
    unsigned dim() const { return n_ - codim(); }

    bool contains_point(const std::vector<K>& p) const {
        for (const auto& f : forms_) {
            K acc = ctx_.zero();
            for (unsigned i = 0; i < n_; ++i) acc += f[i] * p[i];
            if (!acc.is_zero()) return false;
        }
        return true;
    }

    // Basis of the subspace itself (kernel of the cutting forms).
    std::vector<std::vector<K>> basis() const {
        matrix<K> m(0, n_, ctx_);
        for (const auto& f : forms_) m.append_row(f);
        if (forms_.empty()) {
            std::vector<std::vector<K>> b;
            for (unsigned i = 0; i < n_; ++i) {
                std::vector<K> v(n_, ctx_.zero());
                v[i] = ctx_.one();
                b.push_back(std::move(v));
            }
            return b;
        }
        return m.kernel_basis();
    }

    bool contains_subspace(const subspace& o) const {
        for (const auto& v : o.basis())
            if (!contains_point(v)) return false;
        return true;
    }

    friend bool operator==(const subspace& a, const subspace& b) {
        return a.n_ == b.n_ && a.forms_ == b.forms_;
    }
    friend bool operator!=(const subspace& a, const subspace& b) { return !(a == b); }

    // Sum of subspaces: span of the union of bases.
    friend subspace operator+(const subspace& a, const subspace& b) {
        auto pts = a.basis();
        auto pb = b.basis();
        pts.insert(pts.end(), pb.begin(), pb.end());
        return from_spanning_points(a.n_, a.ctx_, pts);
    }

    // Cutting forms as linear polynomials.
    std::vector<poly<K>> cutting_polys() const {
        std::vector<poly<K>> out;
        for (const auto& f : forms_) {
            std::vector<typename poly<K>::term> ts;
            for (unsigned i = 0; i < n_; ++i)
                if (!f[i].is_zero()) ts.push_back({monomial::var(n_, i), f[i]});
            out.push_back(poly<K>::from_terms(n_, ctx_, std::move(ts)));
        }
        return out;
    }

    std::string str(const std::vector<std::string>& names) const {
        std::string s = "V(";
        for (std::size_t i = 0; i < forms_.size(); ++i) {
            if (i) s += ", ";
            s += cutting_polys()[i].str(names);
        }
        s += ")";
        if (forms_.empty()) s = "full space";
        return s;
    }

  private:
    unsigned n_ = 0;
    field_ctx<K> ctx_{};
    std::vector<std::vector<K>> forms_;
};

}  // namespace equimult

#endif
