#ifndef EQUIMULT_MONOMIAL_HPP
#define EQUIMULT_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace equimult {

// Dense exponent vector, one entry per ring variable. Target rings have
// arity <= 12 (plus a couple of auxiliary variables), so dense wins on
// simplicity.
class monomial {
  public:
    monomial() = default;
    explicit monomial(unsigned nvars) : e_(nvars, 0u) {}
    explicit monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {}

    static monomial var(unsigned nvars, unsigned i, unsigned k = 1) {
        monomial m(nvars);
        m.e_[i] = k;
        return m;
    }

    unsigned nvars() const { return static_cast<unsigned>(e_.size()); }
    unsigned operator[](unsigned i) const { return e_[i]; }
    unsigned& operator[](unsigned i) { return e_[i]; }
    const std::vector<unsigned>& exps() const { return e_; }

    unsigned degree() const { return std::accumulate(e_.begin(), e_.end(), 0u); }

    std::int64_t weighted_degree(const std::vector<std::int64_t>& w) const {
        std::int64_t s = 0;
        for (unsigned i = 0; i < e_.size(); ++i) s += w[i] * e_[i];
        return s;
    }

    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](unsigned x) { return x == 0; });
    }

    monomial operator*(const monomial& o) const {
        monomial r(*this);
        for (unsigned i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    bool divides(const monomial& o) const {
        for (unsigned i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // Quotient o / this; caller guarantees divisibility.
    monomial quotient_of(const monomial& o) const {
        monomial r(o);
        for (unsigned i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
        return r;
    }

    friend monomial lcm(const monomial& a, const monomial& b) {
        monomial r(a);
        for (unsigned i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
        return r;
    }

    friend monomial gcd(const monomial& a, const monomial& b) {
        monomial r(a);
        for (unsigned i = 0; i < r.e_.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
        return r;
    }

    bool coprime(const monomial& o) const {
        for (unsigned i = 0; i < e_.size(); ++i)
            if (e_[i] && o.e_[i]) return false;
        return true;
    }

    // Support contained in a sorted index list?
    bool supported_on(const std::vector<unsigned>& idx) const {
        for (unsigned i = 0; i < e_.size(); ++i)
            if (e_[i] && !std::binary_search(idx.begin(), idx.end(), i)) return false;
        return true;
    }

    friend bool operator==(const monomial& a, const monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const monomial& a, const monomial& b) { return a.e_ != b.e_; }

    std::string str(const std::vector<std::string>& names) const {
        std::string s;
        for (unsigned i = 0; i < e_.size(); ++i) {
            if (!e_[i]) continue;
            if (!s.empty()) s += "*";
            s += names[i];
            if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
        }
        return s.empty() ? "1" : s;
    }

  private:
    std::vector<unsigned> e_;
};

// Canonical structural comparison (degree, then lex on exponents): fixes a
// deterministic term iteration independent of any Groebner order.
inline int canonical_cmp(const monomial& a, const monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (unsigned i = 0; i < a.nvars(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

struct canonical_less {
    bool operator()(const monomial& a, const monomial& b) const { return canonical_cmp(a, b) < 0; }
};

// All monomials of the given total degree, deterministic (lexicographic on
// exponent vectors).
inline void monomials_of_degree(unsigned nvars, unsigned deg, std::vector<monomial>& out) {
    monomial cur(nvars);
    auto go = [&](auto&& self, unsigned i, unsigned rem) -> void {
        if (i + 1 == nvars) {
            cur[i] = rem;
            out.push_back(cur);
            return;
        }
        for (unsigned k = 0; k <= rem; ++k) {
            cur[i] = k;
            self(self, i + 1, rem - k);
        }
        cur[i] = 0;
    };
    if (nvars == 0) {
        if (deg == 0) out.push_back(monomial(0u));
        return;
    }
    go(go, 0, deg);
}

inline std::vector<monomial> monomials_up_to_degree(unsigned nvars, unsigned deg) {
    std::vector<monomial> out;
    for (unsigned d = 0; d <= deg; ++d) monomials_of_degree(nvars, d, out);
    return out;
}

}  // namespace equimult

#endif
