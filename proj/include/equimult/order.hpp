#ifndef EQUIMULT_ORDER_HPP
#define EQUIMULT_ORDER_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "monomial.hpp"

namespace equimult {

// Monomial orders are composed of comparison atoms applied in sequence until
// one breaks the tie. The factories below realize the four kinds the library
// exposes: lex, grevlex, block elimination, and weighted orders.
class monomial_order {
  public:
    enum class atom_kind { total_deg, weighted_deg, lex, revlex };

    struct atom {
        atom_kind kind;
        std::vector<unsigned> idx;        // variables this atom looks at (sorted)
        std::vector<std::int64_t> w;      // weights, for weighted_deg (full arity)
    };

    static monomial_order lex(unsigned n) {
        monomial_order o;
        o.atoms_.push_back({atom_kind::lex, all(n), {}});
        return o;
    }

    static monomial_order grevlex(unsigned n) {
        monomial_order o;
        o.atoms_.push_back({atom_kind::total_deg, all(n), {}});
        o.atoms_.push_back({atom_kind::revlex, all(n), {}});
        return o;
    }

    static monomial_order grlex(unsigned n) {
        monomial_order o;
        o.atoms_.push_back({atom_kind::total_deg, all(n), {}});
        o.atoms_.push_back({atom_kind::lex, all(n), {}});
        return o;
    }

    // Product order: grevlex on `first`, then grevlex on the rest. Eliminates
    // the `first` block.
    static monomial_order block_elim(std::vector<unsigned> first, unsigned n) {
        std::sort(first.begin(), first.end());
        std::vector<unsigned> rest;
        for (unsigned i = 0; i < n; ++i)
            if (!std::binary_search(first.begin(), first.end(), i)) rest.push_back(i);
        monomial_order o;
        if (!first.empty()) {
            o.atoms_.push_back({atom_kind::total_deg, first, {}});
            o.atoms_.push_back({atom_kind::revlex, first, {}});
        }
        if (!rest.empty()) {
            o.atoms_.push_back({atom_kind::total_deg, rest, {}});
            o.atoms_.push_back({atom_kind::revlex, rest, {}});
        }
        return o;
    }

    // Weighted degree first (nonnegative weights), ties broken by `tie`.
    static monomial_order weighted(std::vector<std::int64_t> w, const monomial_order& tie) {
        monomial_order o;
        std::vector<unsigned> idx(w.size());
        std::iota(idx.begin(), idx.end(), 0u);
        o.atoms_.push_back({atom_kind::weighted_deg, idx, std::move(w)});
        for (const auto& a : tie.atoms_) o.atoms_.push_back(a);
        return o;
    }

    // +1 if a > b, -1 if a < b, 0 if equal.
    int cmp(const monomial& a, const monomial& b) const {
        for (const auto& at : atoms_) {
            switch (at.kind) {
                case atom_kind::total_deg: {
                    long da = 0, db = 0;
                    for (unsigned i : at.idx) { da += a[i]; db += b[i]; }
                    if (da != db) return da > db ? 1 : -1;
                    break;
                }
                case atom_kind::weighted_deg: {
                    std::int64_t da = a.weighted_degree(at.w), db = b.weighted_degree(at.w);
                    if (da != db) return da > db ? 1 : -1;
                    break;
                }
                case atom_kind::lex: {
                    for (unsigned i : at.idx)
                        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
                    break;
                }
                case atom_kind::revlex: {
                    for (auto it = at.idx.rbegin(); it != at.idx.rend(); ++it)
                        if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
                    break;
                }
            }
        }
        return 0;
    }

    bool less(const monomial& a, const monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const monomial& a, const monomial& b) const { return cmp(a, b) > 0; }

    // Degree-compatible on the full variable set (Hilbert computations need it).
    bool is_graded(unsigned n) const {
        if (atoms_.empty()) return false;
        const atom& a0 = atoms_.front();
        if (a0.kind == atom_kind::total_deg) return a0.idx.size() == n;
        if (a0.kind == atom_kind::weighted_deg)
            return std::all_of(a0.w.begin(), a0.w.end(), [](std::int64_t w) { return w == 1; });
        return false;
    }

    // Key for Groebner caches.
    std::string key() const {
        std::string s;
        for (const auto& at : atoms_) {
            switch (at.kind) {
                case atom_kind::total_deg: s += "d"; break;
                case atom_kind::weighted_deg: s += "w"; break;
                case atom_kind::lex: s += "l"; break;
                case atom_kind::revlex: s += "r"; break;
            }
            s += "[";
            for (unsigned i : at.idx) s += std::to_string(i) + ",";
            if (at.kind == atom_kind::weighted_deg) {
                s += ";";
                for (auto w : at.w) s += std::to_string(w) + ",";
            }
            s += "]";
        }
        return s;
    }

  private:
    static std::vector<unsigned> all(unsigned n) {
        std::vector<unsigned> v(n);
        std::iota(v.begin(), v.end(), 0u);
        return v;
    }

    std::vector<atom> atoms_;
};

}  // namespace equimult

#endif
